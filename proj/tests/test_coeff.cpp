#include "doctest.h"
#include "uqf4/coeff.hpp"

#include <random>

using namespace uqf4;

namespace {

const RatFunc2 R = RatFunc2::r();
const RatFunc2 S = RatFunc2::s();

RatFunc2 random_ratfunc(std::mt19937& g) {
    std::uniform_int_distribution<int> e(-2, 2), c(-3, 3), n(1, 3);
    auto poly = [&] {
        LaurentPoly2 p;
        int k = n(g);
        for (int i = 0; i < k; ++i) p += LaurentPoly2::monomial(e(g), e(g), c(g));
        return p;
    };
    LaurentPoly2 den = poly();
    while (den.is_zero()) den = poly();
    return RatFunc2(poly(), den);
}

}  // namespace

TEST_CASE("rational function arithmetic") {
    CHECK(((R - S) + (S - R)).is_zero());
    CHECK((R * R - S * S) / (R - S) == R + S);
    CHECK((RatFunc2(1) / (R - S)) * (R - S) == RatFunc2(1));
    CHECK_THROWS_AS(R / RatFunc2(0), CoeffError);
    // equal values built differently compare structurally
    CHECK((R * S + S * S) / (R * R - S * S) == S / (R - S));
    CHECK(RatFunc2(1) / (S - R) == -(RatFunc2(1) / (R - S)));
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 g(7);
    for (int t = 0; t < 60; ++t) {
        RatFunc2 a = random_ratfunc(g), b = random_ratfunc(g), c = random_ratfunc(g);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("coefficient text round trip") {
    std::mt19937 g(11);
    for (int t = 0; t < 60; ++t) {
        RatFunc2 a = random_ratfunc(g);
        CHECK(RatFunc2::parse(a.str()) == a);
        CHECK(RatFunc2::parse(a.str()).str() == a.str());
    }
    CHECK(RatFunc2::parse("3*r^2*s^-1 - 2") == RatFunc2(LaurentPoly2::monomial(2, -1, 3) - LaurentPoly2(2)));
    CHECK((R * R * S.inverse() * RatFunc2(3) - RatFunc2(2)).str() == "3*r^2*s^-1 - 2");
    CHECK_THROWS_AS(RatFunc2::parse("3*r^"), CoeffError);
}

TEST_CASE("q-numbers and q-binomials") {
    RatFunc2 t = R;
    CHECK(qnumber(0, t).is_zero());
    CHECK(qnumber(3, t) == RatFunc2(1) + t + t * t);
    CHECK(qbinomial(2, 1, t) == RatFunc2(1) + t);
    CHECK_THROWS_AS(qbinomial(2, 3, t), CoeffError);
    for (int m = 0; m < 12; ++m)
        for (int i = 0; i <= m + 1; ++i) {
            RatFunc2 lhs = qbinomial(m + 1, i, t);
            RatFunc2 rhs(0);
            if (i <= m) rhs += qbinomial(m, i, t);
            if (i >= 1) rhs += t.pow(m - i + 1) * qbinomial(m, i - 1, t);
            CHECK(lhs == rhs);
            if (i <= m + 1) CHECK(qbinomial(m + 1, i, t).is_laurent());
        }
    for (int m = 1; m < 7; ++m)
        for (int n = 0; n <= m; ++n)
            CHECK(qbinomial(m, n, t) == qfactorial(m, t) / (qfactorial(n, t) * qfactorial(m - n, t)));
}

TEST_CASE("q-binomials at a primitive root") {
    const CycloContext* ctx = cyclo_context(5);
    CycloNum theta = CycloNum::theta_pow(ctx, 1);
    CHECK(qbinomial_at_root(5, 0, theta).is_one());
    CHECK(qbinomial_at_root(5, 5, theta).is_one());
    for (int k = 1; k < 5; ++k) CHECK(qbinomial_at_root(5, k, theta).is_zero());
    CHECK(qbinomial_at_root(5, 2, theta).is_zero());
    CHECK(!qbinomial_at_root(4, 2, theta).is_zero());
}

TEST_CASE("cyclotomic arithmetic") {
    CHECK(cyclotomic_polynomial(5) == std::vector<long>{1, 1, 1, 1, 1});
    CHECK(cyclotomic_polynomial(10) == std::vector<long>{1, -1, 1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
    for (int n : {5, 7, 9, 10}) {
        const CycloContext* ctx = cyclo_context(n);
        CycloNum th = CycloNum::theta_pow(ctx, 1);
        CHECK(th.pow(n).is_one());
        for (int k = 1; k < n; ++k) CHECK(!th.pow(k).is_one());
    }
    const CycloContext* ctx = cyclo_context(5);
    std::mt19937 g(3);
    std::uniform_int_distribution<int> c(-4, 4);
    for (int t = 0; t < 40; ++t) {
        CycloNum a(ctx), b(ctx);
        for (int k = 0; k < 5; ++k) {
            a += CycloNum::theta_pow(ctx, k) * CycloNum(ctx, c(g));
            b += CycloNum::theta_pow(ctx, k) * CycloNum(ctx, c(g));
        }
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == CycloNum(ctx, 1));
    }
}

TEST_CASE("specialization at a root of unity") {
    SpecParams p{5, 1, 2};
    const CycloContext* ctx = cyclo_context(5);
    CHECK(specialize(R / S, p) == CycloNum::theta_pow(ctx, 4));
    // 1/(theta - theta^2) = -(1 + 2 theta + 3 theta^2 + 4 theta^3) / 5
    CycloNum expect(ctx);
    for (int k = 0; k < 4; ++k) expect += CycloNum::theta_pow(ctx, k) * CycloNum(ctx, mpq_class(-(k + 1), 5));
    CHECK(specialize(RatFunc2(1) / (R - S), p) == expect);
    CHECK_NOTHROW(specialize(RatFunc2(1) / (R * R + R * S + S * S), p));
    CHECK(!specialize(R * R + R * S + S * S, p).is_zero());
    CHECK_THROWS_AS(specialize(RatFunc2(1) / (R - S), SpecParams{5, 1, 1}), CoeffError);
    // r^5 - s^5 vanishes at the point, so 1/(r^5 - s^5) cannot be specialized
    CHECK_THROWS_AS(specialize(RatFunc2(1) / (R.pow(5) - S.pow(5)), EvalPoint{5, 1, 2}), CoeffError);

    std::mt19937 g(5);
    for (int t = 0; t < 40; ++t) {
        RatFunc2 a = random_ratfunc(g), b = random_ratfunc(g);
        try {
            CycloNum sa = specialize(a, p), sb = specialize(b, p);
            CHECK(specialize(a * b, p) == sa * sb);
            CHECK(specialize(a + b, p) == sa + sb);
        } catch (const CoeffError&) {
        }
    }
}

TEST_CASE("parameter validation") {
    CHECK(validate({5, 1, 2}).empty());
    CHECK(validate({5, 1, 4}).empty());
    CHECK(!validate({9, 1, 4}).empty());
    CHECK(!validate({4, 1, 2}).empty());
    CHECK(!validate({5, 2, 2}).empty());
    CHECK_THROWS_AS(require_valid({9, 1, 4}), CoeffError);
    for (int ell : {5, 7, 11, 13})
        for (int y = 0; y < ell; ++y)
            for (int z = 0; z < ell; ++z) {
                SpecParams p{ell, y, z};
                if (!validate(p).empty()) continue;
                EvalPoint at = EvalPoint::from(p);
                for (auto f : {R + S, R - S, R * R + R * S + S * S, R * R - S * S, R.pow(3) - S.pow(3)})
                    CHECK(!specialize(f.num(), at).is_zero());
            }
}
