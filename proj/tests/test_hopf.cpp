#include "doctest.h"

#include "uqf4/hopf.hpp"
#include "uqf4/straightening.hpp"

using namespace uqf4;

namespace {

using GElem = UElem<RatFunc2>;
using GTensor = TensorElem<RatFunc2>;

const RatFunc2 r = RatFunc2::r();
const RatFunc2 s = RatFunc2::s();

std::shared_ptr<GenericTable> shared_table() {
    static std::shared_ptr<GenericTable> t = build_straightening_table();
    return t;
}

UAlgebra<RatFunc2>& generic() {
    static auto alg = make_generic_algebra(shared_table());
    return *alg;
}

HopfStructure<RatFunc2>& generic_hopf() {
    static HopfStructure<RatFunc2> h(generic());
    return h;
}

const SpecParams kDesk{5, 1, 2};

UAlgebra<CycloNum>& restricted() {
    static auto alg = make_specialized_algebra(*shared_table(), EvalPoint::from(kDesk), UMode::restricted, 5);
    return *alg;
}

UAlgebra<CycloNum>& exact() {
    static auto alg = make_specialized_algebra(*shared_table(), EvalPoint::from(kDesk), UMode::exact, 5);
    return *alg;
}

HopfStructure<CycloNum>& restricted_hopf() {
    static HopfStructure<CycloNum> h(restricted());
    return h;
}

HopfStructure<CycloNum>& exact_hopf() {
    static HopfStructure<CycloNum> h(exact());
    return h;
}

std::string failed_labels(const std::vector<DeskCheck>& checks) {
    std::string out;
    for (const auto& c : checks)
        if (!c.holds) out += c.label + "; ";
    return out;
}

UElem<CycloNum> restricted_monomial(const std::array<int, kNumRoots>& e) {
    auto& A = restricted();
    PbwMono x;
    for (int i = 0; i < kNumRoots; ++i) x.e[i] = static_cast<std::uint8_t>(e[i]);
    return A.mono(UMono{x, {}, {}}, A.one());
}

}  // namespace

TEST_CASE("coproduct and antipode of simple generators") {
    auto& A = generic();
    auto& H = generic_hopf();
    CHECK(H.coproduct(A.Es(1)) == H.tensor({A.Es(1), A.unit()}) + H.tensor({A.omega(1), A.Es(1)}));
    CHECK(H.coproduct(A.Fs(1)) == H.tensor({A.Fs(1), A.omega_prime(1)}) + H.tensor({A.unit(), A.Fs(1)}));
    CHECK(H.coproduct(A.omega(3)) == H.tensor({A.omega(3), A.omega(3)}));
    CHECK(H.antipode(A.Es(1)) == A.multiply(A.omega(1, -1), A.Es(1)) * RatFunc2(-1));
    CHECK(H.antipode(A.Fs(2)) == A.multiply(A.Fs(2), A.omega_prime(2, -1)) * RatFunc2(-1));
    CHECK(H.antipode(A.omega_prime(4)) == A.omega_prime(4, -1));
    CHECK(H.counit(A.Es(3)).is_zero());
    CHECK(H.counit(A.omega(2)) == RatFunc2(1));
}

TEST_CASE("coproduct of the first non-simple root vector") {
    auto& A = generic();
    auto& H = generic_hopf();
    const int b = root_index(simple_root(1) + simple_root(2));
    GTensor want = H.tensor({A.E(b), A.unit()}) +
                   H.tensor({A.multiply(A.omega(1), A.omega(2)), A.E(b)}) +
                   H.tensor({A.multiply(A.Es(1), A.omega(2)), A.Es(2)}) * (RatFunc2(1) - r.pow(-2) * s.pow(2));
    CHECK(H.coproduct(A.E(b)) == want);
}

TEST_CASE("Hopf axioms on generators and root vectors of height at most four") {
    auto checks = hopf_axiom_checks(generic_hopf(), 4);
    CHECK(checks.size() > 100);
    CHECK(failed_labels(checks).empty());
}

TEST_CASE("coproduct is multiplicative and antipode anti-multiplicative") {
    auto checks = multiplicativity_checks(generic_hopf(), 40, 11);
    CHECK(failed_labels(checks).empty());
}

TEST_CASE("adjoint actions") {
    auto& A = generic();
    auto& H = generic_hopf();
    CHECK(H.adjoint(AdSide::left, A.omega(1), A.Es(2)) == A.Es(2) * structural_constant(1, 2));
    CHECK(H.adjoint(AdSide::left, A.omega_prime(3), A.Fs(4)) ==
          A.Fs(4) * structural_constant(4, 3));
    // ad_l(E_i)(E_j) = E_i E_j - omega_i E_j omega_i^-1 E_i
    GElem c = H.adjoint(AdSide::left, A.Es(1), A.Es(2));
    CHECK(c == A.multiply(A.Es(1), A.Es(2)) - A.multiply(A.Es(2), A.Es(1)) * structural_constant(1, 2));
    CHECK(!c.is_zero());
    auto iterate = [&](AdSide side, const GElem& x, const GElem& y, int n) {
        GElem out = y;
        for (int i = 0; i < n; ++i) out = H.adjoint(side, x, out);
        return out;
    };
    CHECK(iterate(AdSide::left, A.Es(1), A.Es(2), 2).is_zero());
    CHECK(iterate(AdSide::left, A.Es(2), A.Es(1), 2).is_zero());
    CHECK(!iterate(AdSide::left, A.Es(3), A.Es(2), 2).is_zero());
    CHECK(iterate(AdSide::left, A.Es(3), A.Es(2), 3).is_zero());
    CHECK(iterate(AdSide::left, A.Es(2), A.Es(3), 2).is_zero());
    CHECK(iterate(AdSide::left, A.Es(1), A.Es(3), 1).is_zero());
    CHECK(!iterate(AdSide::right, A.Fs(3), A.Fs(2), 2).is_zero());
    CHECK(iterate(AdSide::right, A.Fs(3), A.Fs(2), 3).is_zero());
    CHECK(iterate(AdSide::right, A.Fs(4), A.Fs(3), 2).is_zero());
}

TEST_CASE("character actions") {
    auto& A = generic();
    auto& H = generic_hopf();
    auto eps = Character<RatFunc2>::trivial(A.field());
    for (int k = 1; k <= kRank; ++k) {
        CHECK(H.character_act(AdSide::left, eps, A.Es(k)) == A.Es(k));
        CHECK(H.character_act(AdSide::right, eps, A.Fs(k)) == A.Fs(k));
    }
    auto delta = half_character(A);
    for (int k = 1; k <= kRank; ++k) {
        CHECK(H.character_act(AdSide::left, delta, A.Es(k)) == A.Es(k));
        CHECK(H.character_act(AdSide::right, delta, A.Es(k)) == A.Es(k) * delta.values[k - 1]);
        CHECK(H.character_act(AdSide::left, delta, A.omega(k)) == A.omega(k) * delta.values[k - 1]);
        CHECK(delta.values[k - 1] == A.pairing(rho(), simple_root(k)));
    }
    auto gamma = distinguished_character(A);
    CHECK(delta * delta == gamma);
    CHECK(gamma * gamma.inverse() == eps);
}

TEST_CASE("skew pairing on generators") {
    SkewPairing P(PairingConvention{true, false});
    for (int i = 1; i <= kRank; ++i)
        for (int j = 1; j <= kRank; ++j) {
            RatFunc2 v = P(BorelElem::letter(BorelSide::lower, i), BorelElem::letter(BorelSide::upper, j));
            if (i != j) {
                CHECK(v.is_zero());
            } else {
                auto [ri, si] = ri_si(i);
                CHECK(v == (si - ri).inverse());
            }
            RatFunc2 g = P(BorelElem::group(BorelSide::lower, simple_root(i)),
                           BorelElem::group(BorelSide::upper, simple_root(j)));
            CHECK(g == structural_constant(j, i));
        }
    CHECK(P(BorelElem::letter(BorelSide::lower, 3), BorelElem::letter(BorelSide::upper, 3)) ==
          (r - s).inverse() * RatFunc2(-1));
}

TEST_CASE("skew pairing: only the opposite-lower convention is consistent") {
    PairingSurvey good = pairing_survey(PairingConvention{true, false}, 150, 7);
    CHECK(good.serre_pairs == 76);
    CHECK(good.holds());
    CHECK(good.nonzero_samples > 0);
    for (auto conv : {PairingConvention{false, false}, PairingConvention{false, true}, PairingConvention{true, true}}) {
        PairingSurvey bad = pairing_survey(conv, 60, 7);
        CHECK_FALSE(bad.holds());
    }
    PairingSurvey literal = pairing_survey(PairingConvention{false, false}, 60, 7);
    CHECK(literal.serre_failures == 38);
    SkewPairing L(PairingConvention{false, false});
    BorelElem f12 = borel_multiply(BorelElem::letter(BorelSide::lower, 1), BorelElem::letter(BorelSide::lower, 2));
    BorelElem e21 = borel_multiply(BorelElem::letter(BorelSide::upper, 2), BorelElem::letter(BorelSide::upper, 1));
    CHECK_FALSE(L(f12, e21, PairingRoute::split_upper) == L(f12, e21, PairingRoute::split_lower));
}

TEST_CASE("skew pairing on normal-form elements") {
    auto& A = generic();
    SkewPairing P(PairingConvention{true, false});
    CHECK(P(A.Fs(2), A.Es(2)) == (s * s - r * r).inverse());
    const int b = root_index(simple_root(1) + simple_root(2));
    CHECK(!P(A.F(b), A.E(b)).is_zero());
    CHECK(P(A.F(b), A.multiply(A.Es(1), A.Es(1))).is_zero());
}

TEST_CASE("integrals of the restricted quotient") {
    auto& A = restricted();
    auto& H = restricted_hopf();
    UElem<CycloNum> y = integral_left(A), yp = integral_right(A);
    CHECK(y.size() == 625);
    CHECK(yp.size() == 625);
    CHECK(H.counit(y).is_zero());
    CHECK(H.counit(yp).is_zero());
    auto gamma = distinguished_character(A);
    for (int k = 1; k <= kRank; ++k) {
        CHECK(A.multiply(A.Es(k), y).is_zero());
        CHECK(A.multiply(yp, A.Es(k)).is_zero());
        CHECK(A.multiply(A.omega(k), y) == y);
        CHECK(A.multiply(yp, A.omega(k)) == yp);
        CHECK(A.multiply(y, A.omega(k)) == y * gamma.values[k - 1]);
        CHECK(A.multiply(y, A.Es(k)).is_zero());
    }
    std::array<int, kNumRoots> lowered;
    lowered.fill(4);
    lowered[simple_index(2) - 1] = 3;
    UElem<CycloNum> control = restricted_monomial(lowered);
    CHECK(!A.multiply(A.Es(2), control).is_zero());
}

TEST_CASE("distinguished group-like and ribbon data") {
    auto& A = restricted();
    UElem<CycloNum> g = distinguished_grouplike(A);
    GroupExp want;
    want.k = {4, 0, 3, 3, 0, 0, 0, 0};
    CHECK(g == A.group(want));
    RibbonReport rep = ribbon_check(restricted_hopf());
    CHECK(rep.h_sq_eq_g);
    CHECK(rep.delta_sq_eq_gamma);
    CHECK(rep.s_square_conjugation);
    CHECK(rep.failures.empty());
}

TEST_CASE("double solvability of the character equations") {
    DoubleSolvability d = double_solvability(kDesk);
    CHECK(d.det == 52);
    CHECK(d.invertible_mod_ell);
    CHECK(d.det_formula_matches);
    CHECK(d.matrix_matches_constants);
    CHECK(d.symbolic_det == "4*r^4 - 4*r^2*s^2 + 4*s^4");
    DoubleSolvability d7 = double_solvability(SpecParams{7, 1, 3});
    CHECK(d7.det_formula_matches);
}

TEST_CASE("power coproducts at a root of unity") {
    auto checks = power_coproduct_checks(exact_hopf());
    CHECK(checks.size() == 18);
    CHECK(failed_labels(checks).empty());
    CHECK_THROWS_AS(power_coproduct_checks(restricted_hopf()), std::invalid_argument);
}

TEST_CASE("commutation power expansions") {
    auto checks = commutation_power_checks(generic_hopf(), 6);
    CHECK(failed_labels(checks).empty());
    auto single = commutation_power_checks(generic_hopf(), 5, true);
    CHECK(failed_labels(single) == "(X + Y)^m expansion m=4; (X + Y)^m expansion m=5; ");
}

TEST_CASE("isomorphisms between parameter choices") {
    const std::array<long, 4> a{1, 2, 3, -1};
    auto run = [&](IsoCase c, int zeta, IsoForm f) { return iso_check(*shared_table(), c, zeta, a, kDesk, f); };

    IsoReport same = run(IsoCase::same, 1, IsoForm::stated);
    CHECK(same.holds());
    CHECK(same.relations_checked == 128);

    IsoReport swapped = run(IsoCase::swapped, 1, IsoForm::inverse_group);
    CHECK(swapped.holds());
    CHECK_FALSE(run(IsoCase::swapped, 1, IsoForm::stated).holds());

    IsoReport same_neg = run(IsoCase::same, -1, IsoForm::stated);
    CHECK_FALSE(same_neg.relations_hold);
    CHECK(same_neg.coproduct_intertwines);
    CHECK_FALSE(run(IsoCase::swapped, -1, IsoForm::stated).holds());
    CHECK_FALSE(run(IsoCase::swapped, -1, IsoForm::inverse_group).holds());
}

TEST_CASE("algebra map transports coproducts") {
    const std::array<long, 4> a{2, 1, 1, 3};
    IsoReport rep = iso_check(*shared_table(), IsoCase::same, 1, a, SpecParams{7, 1, 3});
    CHECK(rep.holds());
}
