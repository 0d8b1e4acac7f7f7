// The full algebra U_{r,s}(F4) and its restricted quotient in triangular normal form E | group | F.
#pragma once

#include "uqf4/pbw.hpp"

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace uqf4 {

// Exponents of omega_1..omega_4 (k[0..3]) and omega'_1..omega'_4 (k[4..7]).
struct GroupExp {
    std::array<int, 8> k{};

    static GroupExp omega(int i, int n = 1);
    static GroupExp omega_prime(int i, int n = 1);
    // omega_mu = prod omega_i^{mu_i}, and likewise for omega'.
    static GroupExp omega_of(const LatticeVec& mu, int sign = 1);
    static GroupExp omega_prime_of(const LatticeVec& mu, int sign = 1);

    bool is_zero() const;
    GroupExp swapped() const;  // omega <-> omega'
    friend GroupExp operator+(const GroupExp& a, const GroupExp& b);
    friend GroupExp operator-(const GroupExp& a);
    friend GroupExp operator*(int n, const GroupExp& a);
    friend bool operator==(const GroupExp& a, const GroupExp& b) = default;
    friend auto operator<=>(const GroupExp& a, const GroupExp& b) = default;
};

// E-part (descending PBW order) * group * F-part.  The F-part stores exponents d_i of
// F_{beta_1}^{d_1} ... F_{beta_24}^{d_24}, ascending left to right.
struct UMono {
    PbwMono e;
    GroupExp g;
    PbwMono f;

    bool is_one() const { return e.is_one() && g.is_zero() && f.is_one(); }
    // Weight: deg(E-part) - deg(F-part).
    LatticeVec weight() const;
    std::string str() const;  // "E[exps] w[8 ints] F[exps]"

    friend bool operator==(const UMono& a, const UMono& b) { return a.e == b.e && a.g == b.g && a.f == b.f; }
    friend bool operator<(const UMono& a, const UMono& b);
};

struct UMonoHash {
    std::size_t operator()(const UMono& m) const noexcept;
};

template <class C>
class UElem {
public:
    using Map = std::unordered_map<UMono, C, UMonoHash>;

    UElem() = default;
    UElem(const UMono& m, const C& c) { add(m, c); }

    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    const Map& terms() const { return t_; }
    std::vector<std::pair<UMono, C>> sorted() const;
    const C* find(const UMono& m) const;

    void add(const UMono& m, const C& c);
    void add_scaled(const UElem& o, const C& c);
    UElem& operator+=(const UElem& o);
    UElem& operator-=(const UElem& o);
    UElem& operator*=(const C& c);
    friend UElem operator+(UElem a, const UElem& b) { return a += b; }
    friend UElem operator-(UElem a, const UElem& b) { return a -= b; }
    friend UElem operator*(UElem a, const C& c) { return a *= c; }
    friend bool operator==(const UElem& a, const UElem& b) { return a.t_ == b.t_; }

    template <class D, class F>
    UElem<D> map(F&& f) const {
        UElem<D> out;
        for (const auto& [m, c] : t_) out.add(m, f(c));
        return out;
    }

private:
    Map t_;
};

template <class C>
std::string to_string(const UElem<C>& x, const Field<C>& f);

enum class UMode {
    generic,     // over Q(r,s)
    restricted,  // u_{r,s}: exponents of E_beta, F_beta reaching ell vanish, group exponents mod ell
    exact,       // U at a root of unity: no truncation, group exponents unreduced
};

// Multiplication in U or u over a frozen straightening table.  Caches products; not thread-safe.
template <class C>
class UAlgebra {
public:
    UAlgebra(Field<C> field, std::shared_ptr<const StraighteningTable<C>> etable, Field<C> ffield,
             std::shared_ptr<const StraighteningTable<C>> ftable, UMode mode, int ell);

    UMode mode() const { return mode_; }
    int ell() const { return ell_; }
    const Field<C>& field() const { return field_; }
    PbwEngine<C>& e_engine() { return e_; }
    PbwEngine<C>& f_engine() { return f_; }

    C one() const { return field_.integer(1); }
    C zero() const { return field_.integer(0); }
    C from(const RatFunc2& x) const { return field_.from(x); }
    C monomial(int er, int es) const { return field_.monomial(er, es); }
    // <omega'_mu, omega_nu>
    C pairing(const LatticeVec& mu, const LatticeVec& nu) const;

    UElem<C> unit() const { return scalar(one()); }
    UElem<C> scalar(const C& c) const;
    UElem<C> mono(const UMono& m, const C& c) const;
    UElem<C> E(int i) const;  // root vector E_{beta_i}
    UElem<C> F(int i) const;  // root vector F_{beta_i} = tau(E_{beta_i})
    UElem<C> Es(int k) const { return E(simple_index(k)); }
    UElem<C> Fs(int k) const { return F(simple_index(k)); }
    UElem<C> omega(int k, int n = 1) const { return group(GroupExp::omega(k, n)); }
    UElem<C> omega_prime(int k, int n = 1) const { return group(GroupExp::omega_prime(k, n)); }
    UElem<C> group(const GroupExp& g) const;
    UElem<C> from_e(const PbwElem<C>& x) const;
    UElem<C> from_f(const PbwElem<C>& x) const;

    UElem<C> multiply(const UElem<C>& a, const UElem<C>& b);
    UElem<C> multiply(std::initializer_list<UElem<C>> factors);
    UElem<C> power(const UElem<C>& a, int n);
    // ab - ba
    UElem<C> commutator(const UElem<C>& a, const UElem<C>& b);

    // E_{beta_i} F_{beta_j} - F_{beta_j} E_{beta_i} in normal form.
    UElem<C> cross_commutator(int i, int j);

    // g E_mu g^-1 = chi(mu, g) E_mu, and g F_mu g^-1 = chi(mu, g)^-1 F_mu.
    C conjugation_scalar(const LatticeVec& mu, const GroupExp& g) const;

    std::string str(const UElem<C>& x) const { return to_string(x, field_); }
    void clear_cache();

private:
    struct PairKey {
        PbwMono a, b;
        friend bool operator==(const PairKey& x, const PairKey& y) { return x.a == y.a && x.b == y.b; }
    };
    struct PairHash {
        std::size_t operator()(const PairKey& k) const noexcept {
            return PbwMonoHash{}(k.a) * 1000003u ^ PbwMonoHash{}(k.b);
        }
    };

    GroupExp reduce(GroupExp g) const;
    bool truncated(const PbwMono& m) const;
    UElem<C> mul_mono(const UMono& a, const UMono& b);
    // F-monomial times E-monomial.
    UElem<C> mul_fe(const PbwMono& f, const PbwMono& e);
    UElem<C> e_mono(const PbwMono& m) const { return mono(UMono{m, {}, {}}, one()); }
    UElem<C> f_mono(const PbwMono& m) const { return mono(UMono{{}, {}, m}, one()); }

    Field<C> field_;
    PbwEngine<C> e_, f_;
    UMode mode_;
    int ell_;
    std::unordered_map<PairKey, UElem<C>, PairHash> fe_memo_;
    std::map<std::pair<int, int>, UElem<C>> cross_memo_;
};

// Algebras over Q(r,s), or at the root-of-unity point at (r = eta^rexp, s = eta^sexp, eta of order at.n).
std::unique_ptr<UAlgebra<RatFunc2>> make_generic_algebra(std::shared_ptr<const GenericTable> table);
std::unique_ptr<UAlgebra<CycloNum>> make_specialized_algebra(const GenericTable& table, const EvalPoint& at,
                                                              UMode mode, int ell);

// The anti-automorphism with E_i <-> F_i, omega_i <-> omega'_i, r <-> s.
UElem<RatFunc2> tau(const UElem<RatFunc2>& x);

// Images of the generators E_i, F_i, omega_i^{+-1}, omega'_i^{+-1} (index k-1 for generator k).
template <class C>
struct GeneratorImages {
    std::array<UElem<C>, kRank> E, F, w, w_inv, wp, wp_inv;
};

template <class C>
GeneratorImages<C> standard_generators(const UAlgebra<C>& alg);

// The six negative Serre elements, as words in F_1..F_4.
const std::vector<std::map<std::string, RatFunc2>>& negative_serre_words();

struct RelationResidual {
    std::string family;  // "F1" .. "F6"
    std::string label;
    bool holds = false;
    std::string witness;  // printed residual when it does not vanish
};

// Evaluates every defining relation on the given images.  Relation coefficients are the generic
// structure constants sent into the target by coeff (the source parameters).
template <class C>
std::vector<RelationResidual> check_defining_relations(UAlgebra<C>& alg, const GeneratorImages<C>& img,
                                                       const std::function<C(const RatFunc2&)>& coeff);

// Evaluates a word-indexed element in the images: letter k picks gens[k-1].
template <class C>
UElem<C> evaluate_words(UAlgebra<C>& alg, const std::map<std::string, RatFunc2>& words,
                        const std::array<UElem<C>, kRank>& gens, const std::function<C(const RatFunc2&)>& coeff);

struct CentralityResult {
    int root = 0;
    bool e_central = false;
    bool f_central = false;
    std::vector<std::string> failures;  // generator names that fail to commute
};

// E_{beta_i}^ell and F_{beta_i}^ell against E_k, F_k, omega_k, omega'_k in the exact algebra.
CentralityResult power_central_check(UAlgebra<CycloNum>& exact, int i);

extern template class UElem<RatFunc2>;
extern template class UElem<CycloNum>;
extern template class UAlgebra<RatFunc2>;
extern template class UAlgebra<CycloNum>;

}  // namespace uqf4
