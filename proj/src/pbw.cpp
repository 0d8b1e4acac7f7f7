#include "uqf4/pbw.hpp"

#include <algorithm>
#include <sstream>

namespace uqf4 {

// ---------------- PbwMono ----------------

PbwMono PbwMono::single(int i, int n) {
    PbwMono m;
    m.e[i - 1] = (std::uint8_t)n;
    return m;
}

PbwMono PbwMono::from(const Exponents& x) {
    PbwMono m;
    for (int i = 0; i < kNumRoots; ++i) {
        if (x[i] < 0 || x[i] > 0xfe) throw std::out_of_range("PBW exponent out of range");
        m.e[i] = (std::uint8_t)x[i];
    }
    return m;
}

PbwMono PbwMono::sentinel(int i, int j) {
    PbwMono m;
    m.e.fill(0xff);
    m.e[1] = (std::uint8_t)i;
    m.e[2] = (std::uint8_t)j;
    return m;
}

bool PbwMono::is_one() const {
    for (auto x : e)
        if (x) return false;
    return true;
}

int PbwMono::factors() const {
    int n = 0;
    for (auto x : e) n += x;
    return n;
}

int PbwMono::min_index() const {
    for (int i = 0; i < kNumRoots; ++i)
        if (e[i]) return i + 1;
    return 0;
}

int PbwMono::max_index() const {
    for (int i = kNumRoots - 1; i >= 0; --i)
        if (e[i]) return i + 1;
    return 0;
}

LatticeVec PbwMono::degree() const {
    LatticeVec d{};
    for (int i = 1; i <= kNumRoots; ++i)
        if (e[i - 1]) d = d + e[i - 1] * beta(i);
    return d;
}

Exponents PbwMono::exponents() const {
    Exponents x{};
    for (int i = 0; i < kNumRoots; ++i) x[i] = e[i];
    return x;
}

std::string PbwMono::str() const {
    if (is_sentinel()) return "<pending " + std::to_string(e[1]) + "," + std::to_string(e[2]) + ">";
    if (is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (int i = kNumRoots; i >= 1; --i) {
        if (!e[i - 1]) continue;
        if (!first) os << "*";
        first = false;
        os << "E" << i;
        if (e[i - 1] > 1) os << "^" << (int)e[i - 1];
    }
    return os.str();
}

std::size_t PbwMonoHash::operator()(const PbwMono& m) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : m.e) {
        h ^= x;
        h *= 1099511628211ull;
    }
    return (std::size_t)h;
}

// ---------------- PbwElem ----------------

template <class C>
std::vector<std::pair<PbwMono, C>> PbwElem<C>::sorted() const {
    std::vector<std::pair<PbwMono, C>> v(t_.begin(), t_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

template <class C>
const C* PbwElem<C>::find(const PbwMono& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? nullptr : &it->second;
}

template <class C>
void PbwElem<C>::add(const PbwMono& m, const C& c) {
    if (coeff_is_zero(c)) return;
    auto [it, inserted] = t_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (coeff_is_zero(it->second)) t_.erase(it);
}

template <class C>
void PbwElem<C>::add_scaled(const PbwElem& o, const C& c) {
    if (coeff_is_zero(c)) return;
    for (const auto& [m, x] : o.t_) add(m, x * c);
}

template <class C>
PbwElem<C>& PbwElem<C>::operator+=(const PbwElem& o) {
    for (const auto& [m, x] : o.t_) add(m, x);
    return *this;
}

template <class C>
PbwElem<C>& PbwElem<C>::operator-=(const PbwElem& o) {
    for (const auto& [m, x] : o.t_) add(m, -x);
    return *this;
}

template <class C>
PbwElem<C>& PbwElem<C>::operator*=(const C& c) {
    if (coeff_is_zero(c)) {
        t_.clear();
        return *this;
    }
    for (auto& [m, x] : t_) x *= c;
    return *this;
}

template <class C>
LatticeVec PbwElem<C>::degree() const {
    if (t_.empty()) throw std::logic_error("degree of the zero element");
    const PbwMono* best = nullptr;
    for (const auto& kv : t_)
        if (!best || kv.first < *best) best = &kv.first;
    return best->degree();
}

template <class C>
bool PbwElem<C>::homogeneous() const {
    if (t_.empty()) return true;
    LatticeVec d = t_.begin()->first.degree();
    for (const auto& kv : t_)
        if (kv.first.degree() != d) return false;
    return true;
}

template <class C>
bool PbwElem<C>::contains_sentinel() const {
    for (const auto& kv : t_)
        if (kv.first.is_sentinel()) return true;
    return false;
}

template <class C>
bool PbwElem<C>::supported_in(int lo, int hi) const {
    for (const auto& kv : t_) {
        if (kv.first.is_sentinel()) return false;
        for (int i = 1; i <= kNumRoots; ++i)
            if (kv.first.e[i - 1] && (i <= lo || i >= hi)) return false;
    }
    return true;
}

template <class C>
std::string to_string(const PbwElem<C>& x, const Field<C>& f) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : x.sorted()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << f.str(c) << ")*" << m.str();
    }
    return os.str();
}

// ---------------- StraighteningTable ----------------

template <class C>
StraighteningTable<C>::StraighteningTable()
    : rules_(kNumRoots + 1, std::vector<StraighteningRule<C>>(kNumRoots + 1)),
      state_(kNumRoots + 1, std::vector<RuleState>(kNumRoots + 1, RuleState::absent)) {}

template <class C>
const StraighteningRule<C>& StraighteningTable<C>::rule(int i, int j) const {
    if (i < 1 || j > kNumRoots || i >= j) throw std::out_of_range("rule indices must satisfy 1 <= i < j <= 24");
    if (state_[i][j] != RuleState::ready)
        throw TableError("rule (" + std::to_string(i) + "," + std::to_string(j) + ") is not available");
    return rules_[i][j];
}

template <class C>
void StraighteningTable<C>::set(StraighteningRule<C> r) {
    int i = r.i, j = r.j;
    if (i < 1 || j > kNumRoots || i >= j) throw std::out_of_range("rule indices must satisfy 1 <= i < j <= 24");
    rules_[i][j] = std::move(r);
    state_[i][j] = RuleState::ready;
}

template <class C>
void StraighteningTable<C>::clear(int i, int j) {
    rules_[i][j] = StraighteningRule<C>{};
    state_[i][j] = RuleState::absent;
}

template <class C>
bool StraighteningTable<C>::complete() const {
    return rule_count() == (std::size_t)kNumRoots * (kNumRoots - 1) / 2;
}

template <class C>
std::size_t StraighteningTable<C>::rule_count() const {
    std::size_t n = 0;
    for (int i = 1; i <= kNumRoots; ++i)
        for (int j = i + 1; j <= kNumRoots; ++j)
            if (state_[i][j] == RuleState::ready) ++n;
    return n;
}

// ---------------- PbwEngine ----------------

template <class C>
PbwEngine<C>::PbwEngine(std::shared_ptr<const StraighteningTable<C>> table, Field<C> field, int truncate)
    : table_(std::move(table)), field_(std::move(field)), truncate_(truncate) {}

template <class C>
PbwElem<C> PbwEngine<C>::unit() const {
    return PbwElem<C>(PbwMono{}, one());
}

template <class C>
PbwElem<C> PbwEngine<C>::root_vector(int i) const {
    return PbwElem<C>(PbwMono::single(i), one());
}

template <class C>
PbwElem<C> PbwEngine<C>::mono(const PbwMono& m) const {
    if (truncated(m)) return {};
    return PbwElem<C>(m, one());
}

template <class C>
bool PbwEngine<C>::truncated(const PbwMono& m) const {
    if (truncate_ <= 0 || m.is_sentinel()) return false;
    for (auto x : m.e)
        if (x >= truncate_) return true;
    return false;
}

template <class C>
const StraighteningRule<C>* PbwEngine<C>::lookup(int i, int j, bool context_empty) const {
    switch (table_->state(i, j)) {
        case RuleState::ready:
            return &table_->rule(i, j);
        case RuleState::building:
            if (context_empty) return nullptr;
            throw TableError("rule (" + std::to_string(i) + "," + std::to_string(j) +
                             ") requested inside a larger product while it is being built");
        default:
            throw MissingRule("rule (" + std::to_string(i) + "," + std::to_string(j) +
                              ") needed before it is available");
    }
}

template <class C>
PbwElem<C> PbwEngine<C>::right_mul(const PbwMono& mono, int k) {
    if (mono.is_sentinel()) throw TableError("cannot multiply the pending product");
    int m = mono.min_index();
    if (m == 0 || k <= m) {
        PbwMono n = mono;
        if (n.e[k - 1] == 0xfe) throw std::overflow_error("PBW exponent overflow");
        n.e[k - 1]++;
        if (truncated(n)) return {};
        return PbwElem<C>(n, one());
    }
    Key key{mono, k};
    if (auto it = rmemo_.find(key); it != rmemo_.end()) return it->second;

    PbwMono rest = mono;
    rest.e[m - 1]--;
    const StraighteningRule<C>* r = lookup(m, k, rest.is_one());
    if (!r) return PbwElem<C>(PbwMono::sentinel(m, k), one());

    PbwElem<C> out;
    if (!coeff_is_zero(r->p)) {
        PbwElem<C> x = right_mul(rest, k);
        for (const auto& [n, c] : x.terms()) out.add_scaled(right_mul(n, m), c * r->p);
    }
    for (const auto& [cm, c] : r->correction.terms()) {
        PbwElem<C> cur(rest, one());
        for (int idx = kNumRoots; idx >= 1 && !cur.is_zero(); --idx)
            for (int t = 0; t < cm.e[idx - 1]; ++t) {
                PbwElem<C> nxt;
                for (const auto& [n, x] : cur.terms()) nxt.add_scaled(right_mul(n, idx), x);
                cur = std::move(nxt);
            }
        out.add_scaled(cur, c);
    }
    rmemo_.emplace(key, out);
    return out;
}

template <class C>
PbwElem<C> PbwEngine<C>::left_mul(int k, const PbwMono& mono) {
    if (mono.is_sentinel()) throw TableError("cannot multiply the pending product");
    int m = mono.max_index();
    if (m == 0 || k >= m) {
        PbwMono n = mono;
        if (n.e[k - 1] == 0xfe) throw std::overflow_error("PBW exponent overflow");
        n.e[k - 1]++;
        if (truncated(n)) return {};
        return PbwElem<C>(n, one());
    }
    Key key{mono, k};
    if (auto it = lmemo_.find(key); it != lmemo_.end()) return it->second;

    PbwMono rest = mono;
    rest.e[m - 1]--;
    const StraighteningRule<C>* r = lookup(k, m, rest.is_one());
    if (!r) return PbwElem<C>(PbwMono::sentinel(k, m), one());

    PbwElem<C> out;
    if (!coeff_is_zero(r->p)) {
        PbwElem<C> x = left_mul(k, rest);
        for (const auto& [n, c] : x.terms()) out.add_scaled(left_mul(m, n), c * r->p);
    }
    for (const auto& [cm, c] : r->correction.terms()) {
        PbwElem<C> cur(rest, one());
        for (int idx = 1; idx <= kNumRoots && !cur.is_zero(); ++idx)
            for (int t = 0; t < cm.e[idx - 1]; ++t) {
                PbwElem<C> nxt;
                for (const auto& [n, x] : cur.terms()) nxt.add_scaled(left_mul(idx, n), x);
                cur = std::move(nxt);
            }
        out.add_scaled(cur, c);
    }
    lmemo_.emplace(key, out);
    return out;
}

template <class C>
PbwElem<C> PbwEngine<C>::mul_mono(const PbwMono& a, const PbwMono& b) {
    if (b.factors() <= a.factors()) {
        PbwElem<C> cur = mono(a);
        for (int idx = kNumRoots; idx >= 1 && !cur.is_zero(); --idx)
            for (int t = 0; t < b.e[idx - 1]; ++t) {
                PbwElem<C> nxt;
                for (const auto& [n, x] : cur.terms()) nxt.add_scaled(right_mul(n, idx), x);
                cur = std::move(nxt);
            }
        return cur;
    }
    PbwElem<C> cur = mono(b);
    for (int idx = 1; idx <= kNumRoots && !cur.is_zero(); ++idx)
        for (int t = 0; t < a.e[idx - 1]; ++t) {
            PbwElem<C> nxt;
            for (const auto& [n, x] : cur.terms()) nxt.add_scaled(left_mul(idx, n), x);
            cur = std::move(nxt);
        }
    return cur;
}

template <class C>
PbwElem<C> PbwEngine<C>::multiply(const PbwElem<C>& a, const PbwElem<C>& b) {
    PbwElem<C> out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) out.add_scaled(mul_mono(ma, mb), ca * cb);
    return out;
}

template <class C>
PbwElem<C> PbwEngine<C>::power(const PbwElem<C>& a, int n) {
    if (n < 0) throw std::invalid_argument("negative power in the positive part");
    PbwElem<C> out = unit();
    for (int k = 0; k < n; ++k) out = multiply(out, a);
    return out;
}

template <class C>
C PbwEngine<C>::pairing(const LatticeVec& mu, const LatticeVec& nu) const {
    auto [er, es] = pairing_exponents(mu, nu);
    return field_.monomial(er, es);
}

template <class C>
PbwElem<C> PbwEngine<C>::qbracket(const PbwElem<C>& x, const PbwElem<C>& y, const C& p) {
    PbwElem<C> out = multiply(x, y);
    out.add_scaled(multiply(y, x), -p);
    return out;
}

template <class C>
PbwElem<C> PbwEngine<C>::bracket(const PbwElem<C>& x, const PbwElem<C>& y) {
    if (x.is_zero() || y.is_zero()) return {};
    return qbracket(x, y, pairing(y.degree(), x.degree()));
}

template <class C>
void PbwEngine<C>::purge_sentinel() {
    for (auto* memo : {&rmemo_, &lmemo_})
        for (auto it = memo->begin(); it != memo->end();) {
            if (it->second.contains_sentinel())
                it = memo->erase(it);
            else
                ++it;
        }
}

template <class C>
void PbwEngine<C>::clear_cache() {
    rmemo_.clear();
    lmemo_.clear();
}

template class PbwElem<RatFunc2>;
template class PbwElem<CycloNum>;
template std::string to_string(const PbwElem<RatFunc2>&, const Field<RatFunc2>&);
template std::string to_string(const PbwElem<CycloNum>&, const Field<CycloNum>&);
template class StraighteningTable<RatFunc2>;
template class StraighteningTable<CycloNum>;
template class PbwEngine<RatFunc2>;
template class PbwEngine<CycloNum>;

}  // namespace uqf4
