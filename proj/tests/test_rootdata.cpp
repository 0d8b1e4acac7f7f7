#include "doctest.h"

#include "uqf4/rootdata.hpp"

#include <algorithm>
#include <functional>

using namespace uqf4;

namespace {

LatticeVec v(int a, int b, int c, int d) { return {a, b, c, d}; }

// Independent count of exponent vectors with sum n_i beta_i = d.
long brute_force_partitions(const LatticeVec& d) {
    std::function<long(int, LatticeVec)> go = [&](int i, LatticeVec rest) -> long {
        if (rest == LatticeVec{}) return 1;
        if (i > kNumRoots) return 0;
        long total = 0;
        LatticeVec cur = rest;
        for (;;) {
            total += go(i + 1, cur);
            cur = cur - beta(i);
            bool ok = true;
            for (int x : cur)
                if (x < 0) ok = false;
            if (!ok) break;
        }
        return total;
    };
    return go(1, d);
}

}  // namespace

TEST_CASE("root table shape") {
    int simple = 0;
    for (int i = 1; i <= kNumRoots; ++i) {
        const RootEntry& e = root_entry(i);
        CHECK(e.index == i);
        CHECK(height(e.root) == (int)e.word.size());
        CHECK(e.height() == root_height(i));
        if (e.simple()) {
            ++simple;
            CHECK(simple_label(i) != 0);
            CHECK(simple_index(simple_label(i)) == i);
        }
    }
    CHECK(simple == 4);
    CHECK(simple_index(1) == 1);
    CHECK(simple_index(2) == 16);
    CHECK(simple_index(3) == 22);
    CHECK(simple_index(4) == 24);
    CHECK(root_entry(8).word == "12343123432");
    CHECK(beta(8) == v(2, 3, 4, 2));
    CHECK(beta(15) == v(1, 3, 4, 2));
    CHECK(root_entry(2).minimal_pair() == std::pair{1, 16});
    CHECK(root_entry(20).minimal_pair() == std::pair{19, 22});
    CHECK(root_entry(8).minimal_pair() == std::pair{7, 9});
    CHECK(root_index(v(0, 1, 1, 1)) == 19);
    CHECK(root_index(v(1, 0, 1, 0)) == 0);
}

TEST_CASE("decompositions are sums and respect the convex order") {
    for (int i = 1; i <= kNumRoots; ++i)
        for (const auto& d : root_entry(i).decompositions) {
            CHECK(beta(d.a) + beta(d.b) == beta(i));
            CHECK(d.a < i);
            CHECK(i < d.b);
        }
    // Every way of writing a root as a sum of two roots straddles it.
    int sums = 0;
    for (int a = 1; a <= kNumRoots; ++a)
        for (int b = a + 1; b <= kNumRoots; ++b) {
            int k = root_index(beta(a) + beta(b));
            if (!k) continue;
            ++sums;
            CHECK(a < k);
            CHECK(k < b);
        }
    CHECK(sums > 0);
}

TEST_CASE("rho and the sum of positive roots") {
    LatticeVec total{};
    for (int i = 1; i <= kNumRoots; ++i) total = total + beta(i);
    CHECK(total == v(16, 30, 42, 22));
    CHECK(two_rho() == v(16, 30, 42, 22));
    CHECK(rho() == v(8, 15, 21, 11));
}

TEST_CASE("structural constants") {
    CHECK(structural_constant(1, 2) == RatFunc2::s().pow(2));
    CHECK(structural_constant(2, 1) == RatFunc2::r().pow(-2));
    CHECK(structural_constant(4, 3) == RatFunc2::r().inverse());
    CHECK(ri_si(1) == std::pair{RatFunc2::r().pow(2), RatFunc2::s().pow(2)});
    CHECK(ri_si(3) == std::pair{RatFunc2::r(), RatFunc2::s()});
    CHECK(ri_si(4) == std::pair{RatFunc2::r(), RatFunc2::s()});
    for (int i = 1; i <= kRank; ++i) {
        auto [ri, si] = ri_si(i);
        CHECK(structural_constant(i, i) == ri / si);
        for (int j = 1; j <= kRank; ++j)
            CHECK(structural_constant(i, j) * structural_constant(j, i) == (ri / si).pow(cartan(i, j)));
    }
}

TEST_CASE("lattice pairing") {
    CHECK(pairing_omega(simple_root(2), simple_root(1)) == RatFunc2::s().pow(2));
    CHECK(pairing_omega(LatticeVec{}, beta(7)).is_one());
    CHECK(pairing_omega(simple_root(3), beta(19)) == RatFunc2::s());
    for (int a = 1; a <= kNumRoots; a += 5)
        for (int b = 1; b <= kNumRoots; b += 3)
            for (int c = 2; c <= kNumRoots; c += 7)
                CHECK(pairing_omega(beta(a) + beta(b), beta(c)) ==
                      pairing_omega(beta(a), beta(c)) * pairing_omega(beta(b), beta(c)));
}

TEST_CASE("kostant monomials") {
    auto one = kostant_monomials(simple_root(1));
    REQUIRE(one.size() == 1);
    CHECK(one[0][0] == 1);

    auto three = kostant_monomials(v(1, 1, 1, 0));
    CHECK(three.size() == 4);
    auto has = [&](std::initializer_list<int> roots) {
        Exponents x{};
        for (int i : roots) ++x[i - 1];
        return std::find(three.begin(), three.end(), x) != three.end();
    };
    CHECK(has({3}));
    CHECK(has({2, 22}));
    CHECK(has({1, 17}));
    CHECK(has({1, 16, 22}));
    CHECK(kostant_monomials(v(1, 0, 1, 0)).size() == 1);

    for (const LatticeVec& d : degrees_up_to(5)) {
        auto list = kostant_monomials(d);
        CHECK((long)list.size() == brute_force_partitions(d));
        for (std::size_t k = 1; k < list.size(); ++k) CHECK(list[k - 1] < list[k]);
        for (const auto& x : list) {
            LatticeVec sum{};
            for (int i = 1; i <= kNumRoots; ++i) sum = sum + x[i - 1] * beta(i);
            CHECK(sum == d);
        }
    }
    CHECK((long)kostant_monomials(v(1, 2, 3, 2)).size() == brute_force_partitions(v(1, 2, 3, 2)));
}
