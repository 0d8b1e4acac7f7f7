#include "uqf4/rootdata.hpp"

#include <functional>
#include <stdexcept>

namespace uqf4 {

LatticeVec operator+(const LatticeVec& a, const LatticeVec& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

LatticeVec operator-(const LatticeVec& a, const LatticeVec& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

LatticeVec operator*(int k, const LatticeVec& a) { return {k * a[0], k * a[1], k * a[2], k * a[3]}; }

int height(const LatticeVec& v) { return v[0] + v[1] + v[2] + v[3]; }

LatticeVec simple_root(int i) {
    if (i < 1 || i > kRank) throw std::out_of_range("simple root label out of range");
    LatticeVec v{};
    v[i - 1] = 1;
    return v;
}

namespace {

struct RawRow {
    const char* word;
    std::vector<Decomposition> dec;
};

std::vector<RootEntry> make_table() {
    const RawRow rows[kNumRoots] = {
        {"1", {}},
        {"12", {{1, 16, false}}},
        {"123", {{2, 22, false}, {1, 17, true}}},
        {"1233", {{3, 22, false}, {1, 18, true}}},
        {"12332", {{4, 16, false}, {3, 17, false}, {2, 18, false}}},
        {"1234", {{3, 24, false}, {2, 23, true}, {1, 19, true}}},
        {"12343", {{6, 22, false}, {4, 24, false}, {3, 23, false}, {1, 20, true}}},
        {"12343123432", {{7, 9, false}, {6, 10, false}, {5, 11, false}, {4, 12, false}, {3, 13, false}, {2, 14, false}, {1, 15, false}}},
        {"123432", {{7, 16, false}, {6, 17, false}, {5, 24, false}, {3, 19, false}, {2, 20, false}}},
        {"1234323", {{9, 22, false}, {7, 17, true}, {6, 18, false}, {5, 23, false}, {4, 19, false}, {3, 20, false}}},
        {"123434", {{7, 24, false}, {6, 23, true}, {1, 21, true}}},
        {"1234342", {{11, 16, false}, {9, 24, true}, {6, 19, false}}},
        {"12343423", {{12, 22, false}, {11, 17, true}, {10, 24, false}, {9, 23, false}, {7, 19, false}, {6, 20, false}}},
        {"123434233", {{13, 22, false}, {11, 18, true}, {10, 23, false}, {7, 20, false}, {4, 21, false}}},
        {"1234342332", {{14, 16, false}, {13, 17, false}, {12, 18, false}, {10, 19, false}, {9, 20, false}, {5, 21, false}}},
        {"2", {}},
        {"23", {{16, 22, false}}},
        {"233", {{17, 22, false}}},
        {"234", {{17, 24, false}, {16, 23, true}}},
        {"2343", {{19, 22, false}, {18, 24, false}, {17, 23, false}}},
        {"23434", {{20, 24, false}, {19, 23, true}}},
        {"3", {}},
        {"34", {{22, 24, false}}},
        {"4", {}},
    };
    std::vector<RootEntry> t(kNumRoots + 1);
    for (int i = 1; i <= kNumRoots; ++i) {
        RootEntry& e = t[i];
        e.index = i;
        e.word = rows[i - 1].word;
        e.decompositions = rows[i - 1].dec;
        for (char c : e.word) e.root[c - '1'] += 1;
    }
    return t;
}

const std::vector<RootEntry>& table() {
    static const std::vector<RootEntry> t = make_table();
    return t;
}

constexpr int kCartan[4][4] = {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};

// Exponents (er, es) of a_ij.
constexpr int kStructural[4][4][2] = {
    {{2, -2}, {0, 2}, {0, 0}, {0, 0}},
    {{-2, 0}, {2, -2}, {0, 2}, {0, 0}},
    {{0, 0}, {-2, 0}, {1, -1}, {0, 1}},
    {{0, 0}, {0, 0}, {-1, 0}, {1, -1}},
};

void check_label(int i) {
    if (i < 1 || i > kRank) throw std::out_of_range("simple root label out of range");
}

}  // namespace

const RootEntry& root_entry(int i) {
    if (i < 1 || i > kNumRoots) throw std::out_of_range("root index out of range");
    return table()[i];
}

const LatticeVec& beta(int i) { return root_entry(i).root; }

int root_height(int i) { return root_entry(i).height(); }

int simple_index(int k) {
    static constexpr int idx[4] = {1, 16, 22, 24};
    check_label(k);
    return idx[k - 1];
}

int simple_label(int i) {
    switch (i) {
        case 1: return 1;
        case 16: return 2;
        case 22: return 3;
        case 24: return 4;
        default: return 0;
    }
}

int root_index(const LatticeVec& v) {
    for (int i = 1; i <= kNumRoots; ++i)
        if (beta(i) == v) return i;
    return 0;
}

int cartan(int i, int j) {
    check_label(i);
    check_label(j);
    return kCartan[i - 1][j - 1];
}

std::pair<int, int> structural_exponents(int i, int j) {
    check_label(i);
    check_label(j);
    return {kStructural[i - 1][j - 1][0], kStructural[i - 1][j - 1][1]};
}

RatFunc2 structural_constant(int i, int j) {
    auto [er, es] = structural_exponents(i, j);
    return RatFunc2::monomial(er, es);
}

std::pair<int, int> ri_exponents(int i) {
    check_label(i);
    return i <= 2 ? std::pair{2, 2} : std::pair{1, 1};
}

std::pair<RatFunc2, RatFunc2> ri_si(int i) {
    auto [a, b] = ri_exponents(i);
    return {RatFunc2::monomial(a, 0), RatFunc2::monomial(0, b)};
}

std::pair<int, int> pairing_exponents(const LatticeVec& mu, const LatticeVec& nu) {
    int er = 0, es = 0;
    for (int i = 0; i < kRank; ++i) {
        if (mu[i] == 0) continue;
        for (int j = 0; j < kRank; ++j) {
            if (nu[j] == 0) continue;
            int k = mu[i] * nu[j];
            er += k * kStructural[j][i][0];
            es += k * kStructural[j][i][1];
        }
    }
    return {er, es};
}

RatFunc2 pairing_omega(const LatticeVec& mu, const LatticeVec& nu) {
    auto [er, es] = pairing_exponents(mu, nu);
    return RatFunc2::monomial(er, es);
}

LatticeVec rho() { return {8, 15, 21, 11}; }
LatticeVec two_rho() { return {16, 30, 42, 22}; }

std::vector<Exponents> kostant_monomials(const LatticeVec& d) {
    std::vector<Exponents> out;
    Exponents cur{};
    std::function<void(int, LatticeVec)> rec = [&](int i, LatticeVec rest) {
        if (i > kNumRoots) {
            if (rest == LatticeVec{}) out.push_back(cur);
            return;
        }
        const LatticeVec& b = beta(i);
        for (int n = 0;; ++n) {
            bool ok = true;
            for (int k = 0; k < kRank; ++k)
                if (rest[k] < 0) ok = false;
            if (!ok) break;
            cur[i - 1] = n;
            rec(i + 1, rest);
            rest = rest - b;
        }
        cur[i - 1] = 0;
    };
    rec(1, d);
    return out;
}

std::vector<LatticeVec> degrees_up_to(int h) {
    std::vector<LatticeVec> out;
    for (int a = 0; a <= h; ++a)
        for (int b = 0; a + b <= h; ++b)
            for (int c = 0; a + b + c <= h; ++c)
                for (int d = 0; a + b + c + d <= h; ++d)
                    if (a + b + c + d > 0) out.push_back({a, b, c, d});
    return out;
}

}  // namespace uqf4
