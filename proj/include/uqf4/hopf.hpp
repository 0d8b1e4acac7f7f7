// Hopf structure of U and u: coproduct, counit, antipode, adjoint actions, characters,
// integrals, ribbon conditions, Hopf maps between parameter points, and the Borel pairing.
#pragma once

#include "uqf4/commutators.hpp"
#include "uqf4/fullu.hpp"

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace uqf4 {

// Finite sums of k-fold tensors of normal-form monomials.
template <class C>
class TensorElem {
public:
    using Key = std::vector<UMono>;
    using Map = std::map<Key, C>;

    TensorElem() = default;
    TensorElem(const Key& k, const C& c) { add(k, c); }

    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    const Map& terms() const { return t_; }
    const C* find(const Key& k) const;

    void add(const Key& k, const C& c);
    void add_scaled(const TensorElem& o, const C& c);
    TensorElem& operator+=(const TensorElem& o);
    TensorElem& operator-=(const TensorElem& o);
    TensorElem& operator*=(const C& c);
    friend TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
    friend TensorElem operator-(TensorElem a, const TensorElem& b) { return a -= b; }
    friend TensorElem operator*(TensorElem a, const C& c) { return a *= c; }
    friend bool operator==(const TensorElem& a, const TensorElem& b) { return a.t_ == b.t_; }

private:
    Map t_;
};

template <class C>
std::string to_string(const TensorElem<C>& x, const Field<C>& f);

// An algebra character: zero on every E and F, multiplicative on the group.
// values[0..3] on omega_1..omega_4, values[4..7] on omega'_1..omega'_4.
template <class C>
struct Character {
    std::array<C, 8> values;

    static Character trivial(const Field<C>& f);
    C on_group(const GroupExp& g) const;
    C operator()(const UMono& m) const;
    C operator()(const UElem<C>& a) const;
    Character inverse() const;
    friend Character operator*(const Character& a, const Character& b) {
        Character c = a;
        for (int k = 0; k < 8; ++k) c.values[k] *= b.values[k];
        return c;
    }
    friend bool operator==(const Character& a, const Character& b) { return a.values == b.values; }
};

template <class C>
class HopfStructure {
public:
    explicit HopfStructure(UAlgebra<C>& alg) : alg_(alg) {}

    UAlgebra<C>& algebra() { return alg_; }

    TensorElem<C> coproduct(const UElem<C>& a);
    C counit(const UElem<C>& a) const;
    UElem<C> antipode(const UElem<C>& a);

    TensorElem<C> tensor(const std::vector<UElem<C>>& factors) const;
    TensorElem<C> tensor_multiply(const TensorElem<C>& a, const TensorElem<C>& b);
    TensorElem<C> tensor_power(const TensorElem<C>& a, int n);
    // Delta applied in tensor slot `slot` of a k-fold tensor.
    TensorElem<C> coproduct_at(const TensorElem<C>& x, std::size_t slot);
    // Multiplies the two factors of a 2-fold tensor, after the antipode in slot 0 or 1 when asked.
    UElem<C> multiply_out(const TensorElem<C>& x, int antipode_slot = -1);

    // left: sum a1 b S(a2); right: sum S(a1) b a2
    UElem<C> adjoint(AdSide side, const UElem<C>& a, const UElem<C>& b);
    // left: xi -> a = sum a1 xi(a2); right: a <- xi = sum xi(a1) a2
    UElem<C> character_act(AdSide side, const Character<C>& xi, const UElem<C>& a);

    void clear_cache();

private:
    TensorElem<C> coproduct_mono(const UMono& m);
    UElem<C> antipode_mono(const UMono& m);
    const TensorElem<C>& delta_e(int i);
    const TensorElem<C>& delta_f(int i);
    const UElem<C>& s_e(int i);
    const UElem<C>& s_f(int i);

    UAlgebra<C>& alg_;
    std::map<int, TensorElem<C>> de_, df_;
    std::map<int, UElem<C>> se_, sf_;
    std::map<UMono, TensorElem<C>> dmemo_;
    std::map<UMono, UElem<C>> smemo_;
};

// ---------------- integrals and ribbon data in u ----------------

// t = prod_k (1 + omega_k + ... + omega_k^{ell-1}) and x = E_{beta_24}^{ell-1} ... E_{beta_1}^{ell-1}.
UElem<CycloNum> group_sum(UAlgebra<CycloNum>& restricted);
UElem<CycloNum> top_monomial(UAlgebra<CycloNum>& restricted);
// y = t x and y' = x t; both need the restricted algebra.
UElem<CycloNum> integral_left(UAlgebra<CycloNum>& restricted);
UElem<CycloNum> integral_right(UAlgebra<CycloNum>& restricted);

// gamma(omega_k) = <omega'_{2 rho}, omega_k>, with the same value on omega'_k.
template <class C>
Character<C> distinguished_character(const UAlgebra<C>& alg);
// delta(omega_k) = <omega'_rho, omega_k>, with the same value on omega'_k.
template <class C>
Character<C> half_character(const UAlgebra<C>& alg);
// g = omega_{2 rho}^{-1} and h = omega_rho^{-1}.
template <class C>
UElem<C> distinguished_grouplike(const UAlgebra<C>& alg);
template <class C>
UElem<C> half_grouplike(const UAlgebra<C>& alg);

struct RibbonReport {
    bool h_sq_eq_g = false;
    bool delta_sq_eq_gamma = false;
    bool s_square_conjugation = false;
    std::vector<std::string> failures;  // generators where S^2 differs from the conjugation
};

// S^2(a) = h (delta -> a <- delta^-1) h^-1 on E_k, F_k, omega_k, omega'_k.
RibbonReport ribbon_check(HopfStructure<CycloNum>& restricted);

// ---------------- power and commutation desk checks ----------------

struct DeskCheck {
    std::string label;
    bool holds = false;
    std::string witness;
};

// In the untruncated algebra at a root of unity of order ell:
//   Delta(E_i^ell) = E_i^ell (x) 1 + omega_i^ell (x) E_i^ell for the simple roots, and for
//   beta = alpha_j + alpha_{j+1}: Delta(E_beta) = E_beta (x) 1 + X + cY with X = omega_beta (x) E_beta,
//   Y = E_j omega_{j+1} (x) E_{j+1}, c = 1 - a_{j,j+1} a_{j+1,j}, the commutation data of X, Y and
//   Z = XY - alpha YX, and the collapse Delta(E_beta^ell) = E_beta^ell (x) 1 + X^ell + c^ell Y^ell.
std::vector<DeskCheck> power_coproduct_checks(HopfStructure<CycloNum>& exact);

// The expansions of X Y^m, X^m Y and (X + Y)^m for XY = alpha YX + Z under the respective
// commutation hypotheses, on concrete triples over Q(r,s), for 1 <= m <= max_m.
// The coefficient of Y^m1 Z^m2 X^m3 in (X + Y)^m is [m]! / ([m1]! [m3]! [2][4]...[2 m2]);
// with single_factorial set it is taken as [m]! / ([m1]! [m3]! [2 m2]!), which is wrong once m2 >= 2.
std::vector<DeskCheck> commutation_power_checks(HopfStructure<RatFunc2>& generic, int max_m,
                                                bool single_factorial = false);

// mu(S x id) Delta = eps = mu(id x S) Delta and coassociativity on E_k, F_k, omega_k^{+-1},
// omega'_k^{+-1} and on the root vectors E_beta, F_beta of height at most max_height.
template <class C>
std::vector<DeskCheck> hopf_axiom_checks(HopfStructure<C>& hopf, int max_height);

// Delta(ab) = Delta(a) Delta(b) and S(ab) = S(b) S(a) on random pairs of short generator products.
template <class C>
std::vector<DeskCheck> multiplicativity_checks(HopfStructure<C>& hopf, int samples, unsigned seed);

// ---------------- Drinfeld double solvability ----------------

struct DoubleSolvability {
    mpz_class det;
    bool invertible_mod_ell = false;
    bool det_formula_matches = false;
    bool matrix_matches_constants = false;  // A_ij is the theta-exponent of a_ij
    std::string symbolic_det;               // in y (as r) and z (as s)
};

// The 4x4 exponent matrix of the characters gamma_j on omega_i, as polynomials in y and z.
std::array<std::array<LaurentPoly2, 4>, 4> character_exponent_matrix();
LaurentPoly2 cofactor_determinant(const std::array<std::array<LaurentPoly2, 4>, 4>& m);
DoubleSolvability double_solvability(const SpecParams& spec);

// ---------------- Hopf maps between parameter points ----------------

// Extends generator images to an algebra map src -> dst.  Root vectors are mapped through their
// bracket trees with the source structure constants.
template <class C>
class AlgebraMap {
public:
    AlgebraMap(UAlgebra<C>& src, UAlgebra<C>& dst, GeneratorImages<C> images)
        : src_(src), dst_(dst), img_(std::move(images)) {}

    const GeneratorImages<C>& images() const { return img_; }
    UElem<C> operator()(const UElem<C>& a);
    TensorElem<C> apply(const TensorElem<C>& x);

private:
    UElem<C> map_mono(const UMono& m);
    const UElem<C>& map_e(int i);
    const UElem<C>& map_f(int i);
    UElem<C> map_group(const GroupExp& g);

    UAlgebra<C>& src_;
    UAlgebra<C>& dst_;
    GeneratorImages<C> img_;
    std::map<int, UElem<C>> e_, f_;
};

enum class IsoCase { same, swapped };
// stated:        omega_i -> omega~'_i,     E_i -> a_i F~_i omega~'_i,     F_i -> z a_i^-1 omega~_i^-1 E~_i
// inverse_group: omega_i -> omega~'_i^-1,  E_i -> a_i F~_i omega~'_i^-1,  F_i -> b_i omega~_i^-1 E~_i
// with b_i solved from [E_i, F_i].  The two forms coincide for IsoCase::same.
enum class IsoForm { stated, inverse_group };

struct IsoReport {
    IsoCase which = IsoCase::same;
    int zeta = 1;
    IsoForm form = IsoForm::stated;
    EvalPoint source, target;
    int relations_checked = 0;
    bool relations_hold = false;
    bool coproduct_intertwines = false;
    std::vector<std::string> failures;
    bool holds() const { return relations_hold && coproduct_intertwines; }
};

// Builds phi: U_{r,s} -> U_{r',s'} with (r',s') = zeta (r,s) or zeta (s,r), both points inside the
// 2 ell-th cyclotomic field, and checks the defining relations on the images and
// Delta' phi = (phi x phi) Delta on the generators.
IsoReport iso_check(const GenericTable& table, IsoCase which, int zeta, const std::array<long, 4>& a,
                    const SpecParams& spec, IsoForm form = IsoForm::stated);

// ---------------- the Borel pairing at word level ----------------

// F_{w_1} ... F_{w_n} omega'_mu (lower Borel) or E_{w_1} ... E_{w_n} omega_mu (upper Borel).
struct BorelTerm {
    std::string word;  // letters '1'..'4'
    LatticeVec group{};
    friend auto operator<=>(const BorelTerm&, const BorelTerm&) = default;
};

enum class BorelSide { upper, lower };

class BorelElem {
public:
    BorelElem() = default;
    BorelElem(BorelSide side) : side_(side) {}
    BorelElem(BorelSide side, const BorelTerm& t, const RatFunc2& c) : side_(side) { add(t, c); }

    static BorelElem letter(BorelSide side, int k);
    static BorelElem group(BorelSide side, const LatticeVec& mu);
    static BorelElem words(BorelSide side, const std::map<std::string, RatFunc2>& w);

    BorelSide side() const { return side_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<BorelTerm, RatFunc2>& terms() const { return t_; }
    void add(const BorelTerm& t, const RatFunc2& c);
    BorelElem& operator+=(const BorelElem& o);
    BorelElem& operator*=(const RatFunc2& c);
    friend BorelElem operator+(BorelElem a, const BorelElem& b) { return a += b; }
    friend BorelElem operator*(BorelElem a, const RatFunc2& c) { return a *= c; }
    friend bool operator==(const BorelElem& a, const BorelElem& b) { return a.side_ == b.side_ && a.t_ == b.t_; }
    std::string str() const;

private:
    BorelSide side_ = BorelSide::upper;
    std::map<BorelTerm, RatFunc2> t_;
};

BorelElem borel_multiply(const BorelElem& a, const BorelElem& b);
BorelElem borel_antipode(const BorelElem& a);
// Word form of a normal-form element of the Borel subalgebra; throws std::invalid_argument otherwise.
BorelElem borel_from_normal(BorelSide side, const UElem<RatFunc2>& x);

enum class PairingRoute {
    split_upper,  // <a, y v> = sum <a1, y> <a2, v>
    split_lower,  // <x u, b> = sum <x, b1> <u, b2>
};

// Which coproducts enter the extension laws in opposite order.
//   op_lower = false: <a, bc> = sum <a1, b> <a2, c>;  true: sum <a2, b> <a1, c>
//   op_upper = false: <ab, c> = sum <a, c1> <b, c2>;  true: sum <a, c2> <b, c1>
struct PairingConvention {
    bool op_lower = false;
    bool op_upper = false;
    std::string str() const;
    friend bool operator==(const PairingConvention&, const PairingConvention&) = default;
};

// The skew pairing between the lower and upper Borel parts over Q(r,s), fixed by
// <F_i, E_j> = delta_ij / (s_i - r_i), <omega'_i, omega_j> = a_ji and the extension laws.
class SkewPairing {
public:
    explicit SkewPairing(PairingConvention conv = {}) : conv_(conv) {}
    const PairingConvention& convention() const { return conv_; }

    RatFunc2 operator()(const BorelElem& lower, const BorelElem& upper, PairingRoute route = PairingRoute::split_upper);
    RatFunc2 operator()(const UElem<RatFunc2>& lower, const UElem<RatFunc2>& upper);

private:
    struct Key {
        std::string lw;
        LatticeVec mu;
        std::string uw;
        LatticeVec nu;
        bool upper_route;
        friend auto operator<=>(const Key&, const Key&) = default;
    };
    RatFunc2 pair_terms(const BorelTerm& lower, const BorelTerm& upper, bool upper_route);

    PairingConvention conv_;
    std::map<Key, RatFunc2> memo_;
};

struct PairingSurvey {
    PairingConvention convention;
    int serre_pairs = 0;  // words paired against a Serre element, on both routes
    int serre_failures = 0;
    int samples = 0;
    int route_mismatches = 0;
    int symmetry_failures = 0;  // <S a, S b> != <a, b>
    int nonzero_samples = 0;
    bool holds() const { return serre_failures == 0 && route_mismatches == 0 && symmetry_failures == 0; }
};

// Pairs every word of matching degree against the positive and negative Serre elements, and
// compares routes and antipode symmetry on random Borel elements.
PairingSurvey pairing_survey(const PairingConvention& conv, int samples, unsigned seed);

extern template class TensorElem<RatFunc2>;
extern template class TensorElem<CycloNum>;
extern template struct Character<RatFunc2>;
extern template struct Character<CycloNum>;
extern template class HopfStructure<RatFunc2>;
extern template class HopfStructure<CycloNum>;
extern template class AlgebraMap<RatFunc2>;
extern template class AlgebraMap<CycloNum>;

}  // namespace uqf4
