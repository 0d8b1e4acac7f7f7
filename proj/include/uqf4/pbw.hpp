// PBW monomials and normal-form arithmetic in the positive part.
#pragma once

#include "uqf4/coeff.hpp"
#include "uqf4/rootdata.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace uqf4 {

struct TableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A product needed a rule that has not been constructed yet.
struct MissingRule : TableError {
    using TableError::TableError;
};

// E_{b24}^{n24} ... E_{b1}^{n1}; e[i-1] holds n_i.
struct PbwMono {
    std::array<std::uint8_t, kNumRoots> e{};

    static PbwMono single(int i, int n = 1);
    static PbwMono from(const Exponents& x);
    // Placeholder for the unknown product E_i E_j while rule (i,j) is being solved for.
    static PbwMono sentinel(int i = 0, int j = 0);

    bool is_one() const;
    bool is_sentinel() const { return e[0] == 0xff; }
    int exp(int i) const { return e[i - 1]; }
    int factors() const;
    int min_index() const;  // 0 for the empty monomial
    int max_index() const;
    LatticeVec degree() const;
    Exponents exponents() const;
    std::string str() const;

    friend bool operator==(const PbwMono& a, const PbwMono& b) { return a.e == b.e; }
    friend bool operator<(const PbwMono& a, const PbwMono& b) { return a.e < b.e; }
};

struct PbwMonoHash {
    std::size_t operator()(const PbwMono& m) const noexcept;
};

// Coefficient field operations for the two arithmetic modes.
template <class C>
struct Field;

template <>
struct Field<RatFunc2> {
    bool swap = false;  // apply r <-> s to every incoming generic value
    RatFunc2 from(const RatFunc2& x) const { return swap ? x.swapped() : x; }
    RatFunc2 integer(long v) const { return RatFunc2(v); }
    RatFunc2 monomial(int er, int es) const { return swap ? RatFunc2::monomial(es, er) : RatFunc2::monomial(er, es); }
    std::string str(const RatFunc2& x) const { return x.str(); }
};

template <>
struct Field<CycloNum> {
    EvalPoint at;
    CycloNum from(const RatFunc2& x) const { return specialize(x, at); }
    CycloNum integer(long v) const { return CycloNum(cyclo_context(at.n), v); }
    CycloNum monomial(int er, int es) const {
        return CycloNum::theta_pow(cyclo_context(at.n), (long)er * at.rexp + (long)es * at.sexp);
    }
    std::string str(const CycloNum& x) const { return x.str(); }
};

inline bool coeff_is_zero(const RatFunc2& x) { return x.is_zero(); }
inline bool coeff_is_zero(const CycloNum& x) { return x.is_zero(); }

template <class C>
class PbwElem {
public:
    using Map = std::unordered_map<PbwMono, C, PbwMonoHash>;

    PbwElem() = default;
    PbwElem(const PbwMono& m, const C& c) { add(m, c); }

    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    const Map& terms() const { return t_; }
    std::vector<std::pair<PbwMono, C>> sorted() const;

    // Coefficient of m, or nullptr when absent.
    const C* find(const PbwMono& m) const;

    void add(const PbwMono& m, const C& c);
    void add_scaled(const PbwElem& o, const C& c);
    PbwElem& operator+=(const PbwElem& o);
    PbwElem& operator-=(const PbwElem& o);
    PbwElem& operator*=(const C& c);
    friend PbwElem operator+(PbwElem a, const PbwElem& b) { return a += b; }
    friend PbwElem operator-(PbwElem a, const PbwElem& b) { return a -= b; }
    friend PbwElem operator*(PbwElem a, const C& c) { return a *= c; }
    friend bool operator==(const PbwElem& a, const PbwElem& b) { return a.t_ == b.t_; }

    // Degree of the first term in monomial order; throws when empty.
    LatticeVec degree() const;
    bool homogeneous() const;
    bool contains_sentinel() const;
    // True when every monomial only uses indices strictly between lo and hi.
    bool supported_in(int lo, int hi) const;

    template <class D, class F>
    PbwElem<D> map(F&& f) const {
        PbwElem<D> out;
        for (const auto& [m, c] : t_) out.add(m, f(c));
        return out;
    }

private:
    Map t_;
};

template <class C>
std::string to_string(const PbwElem<C>& x, const Field<C>& f);

template <class C>
struct StraighteningRule {
    int i = 0;
    int j = 0;
    C p{};
    PbwElem<C> correction;
};

enum class RuleState : std::uint8_t { absent, building, ready };

template <class C>
class StraighteningTable {
public:
    StraighteningTable();

    RuleState state(int i, int j) const { return state_[i][j]; }
    const StraighteningRule<C>& rule(int i, int j) const;
    void set(StraighteningRule<C> r);
    void mark_building(int i, int j) { state_[i][j] = RuleState::building; }
    void clear(int i, int j);
    bool complete() const;
    std::size_t rule_count() const;

    template <class D, class F>
    StraighteningTable<D> map(F&& f) const {
        StraighteningTable<D> out;
        for (int i = 1; i <= kNumRoots; ++i)
            for (int j = i + 1; j <= kNumRoots; ++j) {
                if (state_[i][j] != RuleState::ready) continue;
                const auto& r = rules_[i][j];
                StraighteningRule<D> d;
                d.i = i;
                d.j = j;
                d.p = f(r.p);
                d.correction = r.correction.template map<D>(f);
                out.set(std::move(d));
            }
        return out;
    }

    friend bool operator==(const StraighteningTable& a, const StraighteningTable& b) {
        for (int i = 1; i <= kNumRoots; ++i)
            for (int j = i + 1; j <= kNumRoots; ++j) {
                if (a.state_[i][j] != b.state_[i][j]) return false;
                if (a.state_[i][j] != RuleState::ready) continue;
                if (!(a.rules_[i][j].p == b.rules_[i][j].p)) return false;
                if (!(a.rules_[i][j].correction == b.rules_[i][j].correction)) return false;
            }
        return true;
    }

private:
    std::vector<std::vector<StraighteningRule<C>>> rules_;
    std::vector<std::vector<RuleState>> state_;
};

using GenericTable = StraighteningTable<RatFunc2>;

// Normal-form multiplication over a fixed table.  Instances cache products and
// are not thread-safe; use one per thread.
template <class C>
class PbwEngine {
public:
    PbwEngine(std::shared_ptr<const StraighteningTable<C>> table, Field<C> field, int truncate = 0);

    const Field<C>& field() const { return field_; }
    const StraighteningTable<C>& table() const { return *table_; }
    int truncation() const { return truncate_; }

    C one() const { return field_.integer(1); }
    C zero() const { return field_.integer(0); }

    PbwElem<C> unit() const;
    PbwElem<C> root_vector(int i) const;
    PbwElem<C> mono(const PbwMono& m) const;

    PbwElem<C> right_mul(const PbwMono& m, int k);
    PbwElem<C> left_mul(int k, const PbwMono& m);
    PbwElem<C> mul_mono(const PbwMono& a, const PbwMono& b);
    PbwElem<C> multiply(const PbwElem<C>& a, const PbwElem<C>& b);
    PbwElem<C> power(const PbwElem<C>& a, int n);

    // xy - p yx
    PbwElem<C> qbracket(const PbwElem<C>& x, const PbwElem<C>& y, const C& p);
    // xy - <omega'_{deg y}, omega_{deg x}> yx for homogeneous x, y
    PbwElem<C> bracket(const PbwElem<C>& x, const PbwElem<C>& y);
    C pairing(const LatticeVec& mu, const LatticeVec& nu) const;

    // Drop cached products that mention the sentinel monomial.
    void purge_sentinel();
    void clear_cache();
    std::size_t cache_size() const { return rmemo_.size() + lmemo_.size(); }

private:
    struct Key {
        PbwMono m;
        int k;
        friend bool operator==(const Key& a, const Key& b) { return a.k == b.k && a.m == b.m; }
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept { return PbwMonoHash{}(k.m) * 31u + (std::size_t)k.k; }
    };

    const StraighteningRule<C>* lookup(int i, int j, bool context_empty) const;
    bool truncated(const PbwMono& m) const;

    std::shared_ptr<const StraighteningTable<C>> table_;
    Field<C> field_;
    int truncate_;
    std::unordered_map<Key, PbwElem<C>, KeyHash> rmemo_, lmemo_;
};

extern template class PbwElem<RatFunc2>;
extern template class PbwElem<CycloNum>;
extern template class StraighteningTable<RatFunc2>;
extern template class StraighteningTable<CycloNum>;
extern template class PbwEngine<RatFunc2>;
extern template class PbwEngine<CycloNum>;

}  // namespace uqf4
