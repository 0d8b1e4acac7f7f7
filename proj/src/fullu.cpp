#include "uqf4/fullu.hpp"

#include "uqf4/oracle.hpp"
#include "uqf4/straightening.hpp"

#include <algorithm>
#include <sstream>

namespace uqf4 {

// ---------------- GroupExp / UMono ----------------

GroupExp GroupExp::omega(int i, int n) {
    GroupExp g;
    g.k[i - 1] = n;
    return g;
}

GroupExp GroupExp::omega_prime(int i, int n) {
    GroupExp g;
    g.k[kRank + i - 1] = n;
    return g;
}

GroupExp GroupExp::omega_of(const LatticeVec& mu, int sign) {
    GroupExp g;
    for (int i = 0; i < kRank; ++i) g.k[i] = sign * mu[i];
    return g;
}

GroupExp GroupExp::omega_prime_of(const LatticeVec& mu, int sign) {
    GroupExp g;
    for (int i = 0; i < kRank; ++i) g.k[kRank + i] = sign * mu[i];
    return g;
}

bool GroupExp::is_zero() const {
    return std::all_of(k.begin(), k.end(), [](int x) { return x == 0; });
}

GroupExp GroupExp::swapped() const {
    GroupExp g;
    for (int i = 0; i < kRank; ++i) {
        g.k[i] = k[kRank + i];
        g.k[kRank + i] = k[i];
    }
    return g;
}

GroupExp operator+(const GroupExp& a, const GroupExp& b) {
    GroupExp g;
    for (int i = 0; i < 8; ++i) g.k[i] = a.k[i] + b.k[i];
    return g;
}

GroupExp operator-(const GroupExp& a) { return -1 * a; }

GroupExp operator*(int n, const GroupExp& a) {
    GroupExp g;
    for (int i = 0; i < 8; ++i) g.k[i] = n * a.k[i];
    return g;
}

LatticeVec UMono::weight() const { return e.degree() - f.degree(); }

std::string UMono::str() const {
    std::ostringstream os;
    os << "E[";
    for (int i = 0; i < kNumRoots; ++i) os << (i ? " " : "") << (int)e.e[i];
    os << "] w[";
    for (int i = 0; i < 8; ++i) os << (i ? " " : "") << g.k[i];
    os << "] F[";
    for (int i = 0; i < kNumRoots; ++i) os << (i ? " " : "") << (int)f.e[i];
    os << "]";
    return os.str();
}

bool operator<(const UMono& a, const UMono& b) {
    if (!(a.e == b.e)) return a.e < b.e;
    if (!(a.g == b.g)) return a.g < b.g;
    return a.f < b.f;
}

std::size_t UMonoHash::operator()(const UMono& m) const noexcept {
    std::size_t h = PbwMonoHash{}(m.e) * 1000003u ^ PbwMonoHash{}(m.f);
    for (int x : m.g.k) h = h * 31u + (std::size_t)(x + 1024);
    return h;
}

// ---------------- UElem ----------------

template <class C>
std::vector<std::pair<UMono, C>> UElem<C>::sorted() const {
    std::vector<std::pair<UMono, C>> v(t_.begin(), t_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

template <class C>
const C* UElem<C>::find(const UMono& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? nullptr : &it->second;
}

template <class C>
void UElem<C>::add(const UMono& m, const C& c) {
    if (coeff_is_zero(c)) return;
    auto [it, inserted] = t_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (coeff_is_zero(it->second)) t_.erase(it);
}

template <class C>
void UElem<C>::add_scaled(const UElem& o, const C& c) {
    if (coeff_is_zero(c)) return;
    for (const auto& [m, x] : o.t_) add(m, x * c);
}

template <class C>
UElem<C>& UElem<C>::operator+=(const UElem& o) {
    for (const auto& [m, x] : o.t_) add(m, x);
    return *this;
}

template <class C>
UElem<C>& UElem<C>::operator-=(const UElem& o) {
    for (const auto& [m, x] : o.t_) add(m, -x);
    return *this;
}

template <class C>
UElem<C>& UElem<C>::operator*=(const C& c) {
    if (coeff_is_zero(c)) {
        t_.clear();
        return *this;
    }
    for (auto& [m, x] : t_) x *= c;
    return *this;
}

template <class C>
std::string to_string(const UElem<C>& x, const Field<C>& f) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : x.sorted()) {
        if (!first) os << " + ";
        first = false;
        os << m.str() << " * " << f.str(c);
    }
    return os.str();
}

// ---------------- UAlgebra ----------------

template <class C>
UAlgebra<C>::UAlgebra(Field<C> field, std::shared_ptr<const StraighteningTable<C>> etable, Field<C> ffield,
                      std::shared_ptr<const StraighteningTable<C>> ftable, UMode mode, int ell)
    : field_(field),
      e_(std::move(etable), field, mode == UMode::restricted ? ell : 0),
      f_(std::move(ftable), ffield, mode == UMode::restricted ? ell : 0),
      mode_(mode),
      ell_(ell) {
    if (mode != UMode::generic && ell < 2) throw std::invalid_argument("root-of-unity algebra needs ell >= 2");
}

template <class C>
C UAlgebra<C>::pairing(const LatticeVec& mu, const LatticeVec& nu) const {
    auto [er, es] = pairing_exponents(mu, nu);
    return field_.monomial(er, es);
}

template <class C>
GroupExp UAlgebra<C>::reduce(GroupExp g) const {
    if (mode_ == UMode::restricted)
        for (int& x : g.k) x = ((x % ell_) + ell_) % ell_;
    return g;
}

template <class C>
bool UAlgebra<C>::truncated(const PbwMono& m) const {
    if (mode_ != UMode::restricted) return false;
    return std::any_of(m.e.begin(), m.e.end(), [&](std::uint8_t x) { return x >= ell_; });
}

template <class C>
UElem<C> UAlgebra<C>::scalar(const C& c) const {
    return UElem<C>(UMono{}, c);
}

template <class C>
UElem<C> UAlgebra<C>::mono(const UMono& m, const C& c) const {
    if (truncated(m.e) || truncated(m.f)) return {};
    return UElem<C>(UMono{m.e, reduce(m.g), m.f}, c);
}

template <class C>
UElem<C> UAlgebra<C>::E(int i) const {
    return e_mono(PbwMono::single(i));
}

template <class C>
UElem<C> UAlgebra<C>::F(int i) const {
    return f_mono(PbwMono::single(i));
}

template <class C>
UElem<C> UAlgebra<C>::group(const GroupExp& g) const {
    return mono(UMono{{}, g, {}}, one());
}

template <class C>
UElem<C> UAlgebra<C>::from_e(const PbwElem<C>& x) const {
    UElem<C> out;
    for (const auto& [m, c] : x.terms()) out += mono(UMono{m, {}, {}}, c);
    return out;
}

template <class C>
UElem<C> UAlgebra<C>::from_f(const PbwElem<C>& x) const {
    UElem<C> out;
    for (const auto& [m, c] : x.terms()) out += mono(UMono{{}, {}, m}, c);
    return out;
}

template <class C>
C UAlgebra<C>::conjugation_scalar(const LatticeVec& mu, const GroupExp& g) const {
    long er = 0, es = 0;
    for (int k = 1; k <= kRank; ++k) {
        int a = g.k[k - 1], b = g.k[kRank + k - 1];
        if (a) {
            auto [x, y] = pairing_exponents(mu, simple_root(k));
            er += (long)a * x;
            es += (long)a * y;
        }
        if (b) {
            auto [x, y] = pairing_exponents(simple_root(k), mu);
            er -= (long)b * x;
            es -= (long)b * y;
        }
    }
    return field_.monomial((int)er, (int)es);
}

template <class C>
UElem<C> UAlgebra<C>::mul_mono(const UMono& a, const UMono& b) {
    UElem<C> out;
    UElem<C> mid = mul_fe(a.f, b.e);
    for (const auto& [m, c] : mid.terms()) {
        C scale = c * conjugation_scalar(m.e.degree(), a.g) * conjugation_scalar(m.f.degree(), b.g);
        PbwElem<C> ep = e_.mul_mono(a.e, m.e);
        if (ep.is_zero()) continue;
        PbwElem<C> fp = f_.mul_mono(b.f, m.f);
        if (fp.is_zero()) continue;
        GroupExp g = reduce(a.g + m.g + b.g);
        for (const auto& [em, ec] : ep.terms())
            for (const auto& [fm, fc] : fp.terms()) out.add(UMono{em, g, fm}, scale * ec * fc);
    }
    return out;
}

template <class C>
UElem<C> UAlgebra<C>::mul_fe(const PbwMono& f, const PbwMono& e) {
    if (f.is_one() || e.is_one()) return mono(UMono{e, {}, f}, one());
    PairKey key{f, e};
    if (auto it = fe_memo_.find(key); it != fe_memo_.end()) return it->second;

    UElem<C> out;
    if (f.factors() > 1) {
        // f = f' F_top
        int top = f.max_index();
        PbwMono rest = f;
        rest.e[top - 1]--;
        out = multiply(f_mono(rest), mul_fe(PbwMono::single(top), e));
    } else {
        // F_j E_k e' = E_k (F_j e') - [E_k, F_j] e'
        int j = f.max_index();
        int k = e.max_index();
        PbwMono rest = e;
        rest.e[k - 1]--;
        out = multiply(e_mono(PbwMono::single(k)), mul_fe(f, rest));
        out -= multiply(cross_commutator(k, j), e_mono(rest));
    }
    fe_memo_.emplace(key, out);
    return out;
}

template <class C>
UElem<C> UAlgebra<C>::multiply(const UElem<C>& a, const UElem<C>& b) {
    UElem<C> out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) out.add_scaled(mul_mono(ma, mb), ca * cb);
    return out;
}

template <class C>
UElem<C> UAlgebra<C>::multiply(std::initializer_list<UElem<C>> factors) {
    UElem<C> out = unit();
    for (const auto& x : factors) out = multiply(out, x);
    return out;
}

template <class C>
UElem<C> UAlgebra<C>::power(const UElem<C>& a, int n) {
    if (n < 0) throw std::invalid_argument("negative power of an algebra element");
    UElem<C> out = unit();
    for (int k = 0; k < n; ++k) out = multiply(out, a);
    return out;
}

template <class C>
UElem<C> UAlgebra<C>::commutator(const UElem<C>& a, const UElem<C>& b) {
    return multiply(a, b) - multiply(b, a);
}

template <class C>
UElem<C> UAlgebra<C>::cross_commutator(int i, int j) {
    if (auto it = cross_memo_.find({i, j}); it != cross_memo_.end()) return it->second;
    const RootEntry& ei = root_entry(i);
    const RootEntry& fj = root_entry(j);
    UElem<C> out;
    if (ei.simple() && fj.simple()) {
        if (i == j) {
            int k = simple_label(i);
            auto [rk, sk] = ri_si(k);
            C scale = field_.from((rk - sk).inverse());
            out = (group(GroupExp::omega(k)) - group(GroupExp::omega_prime(k))) * scale;
        }
    } else if (!ei.simple()) {
        // [E_a E_b - p E_b E_a, F] via [xy, F] = x[y, F] + [x, F]y
        auto [a, b] = ei.minimal_pair();
        C p = pairing(beta(b), beta(a));
        UElem<C> xa = cross_commutator(a, j), xb = cross_commutator(b, j);
        UElem<C> Ea = E(a), Eb = E(b);
        out = multiply(Ea, xb) + multiply(xa, Eb);
        out -= (multiply(Eb, xa) + multiply(xb, Ea)) * p;
    } else {
        // F_{beta_j} = F_b F_a - pbar F_a F_b, and [E, xy] = [E, x]y + x[E, y]
        auto [a, b] = fj.minimal_pair();
        auto [er, es] = pairing_exponents(beta(b), beta(a));
        C pbar = field_.monomial(es, er);
        UElem<C> xa = cross_commutator(i, a), xb = cross_commutator(i, b);
        UElem<C> Fa = F(a), Fb = F(b);
        out = multiply(xb, Fa) + multiply(Fb, xa);
        out -= (multiply(xa, Fb) + multiply(Fa, xb)) * pbar;
    }
    cross_memo_.emplace(std::pair{i, j}, out);
    return out;
}

template <class C>
void UAlgebra<C>::clear_cache() {
    fe_memo_.clear();
    cross_memo_.clear();
    e_.clear_cache();
    f_.clear_cache();
}

std::unique_ptr<UAlgebra<RatFunc2>> make_generic_algebra(std::shared_ptr<const GenericTable> table) {
    auto swapped = swap_table(*table);
    return std::make_unique<UAlgebra<RatFunc2>>(Field<RatFunc2>{false}, std::move(table), Field<RatFunc2>{true},
                                                std::move(swapped), UMode::generic, 0);
}

std::unique_ptr<UAlgebra<CycloNum>> make_specialized_algebra(const GenericTable& table, const EvalPoint& at,
                                                              UMode mode, int ell) {
    if (mode == UMode::generic) throw std::invalid_argument("specialized algebra needs a root-of-unity mode");
    auto et = specialize_table(table, at);
    auto ft = specialize_table(table, at.swapped());
    return std::make_unique<UAlgebra<CycloNum>>(Field<CycloNum>{at}, std::move(et), Field<CycloNum>{at.swapped()},
                                                std::move(ft), mode, ell);
}

UElem<RatFunc2> tau(const UElem<RatFunc2>& x) {
    UElem<RatFunc2> out;
    for (const auto& [m, c] : x.terms()) out.add(UMono{m.f, m.g.swapped(), m.e}, c.swapped());
    return out;
}

// ---------------- relations ----------------

template <class C>
GeneratorImages<C> standard_generators(const UAlgebra<C>& alg) {
    GeneratorImages<C> g;
    for (int k = 1; k <= kRank; ++k) {
        g.E[k - 1] = alg.Es(k);
        g.F[k - 1] = alg.Fs(k);
        g.w[k - 1] = alg.omega(k);
        g.w_inv[k - 1] = alg.omega(k, -1);
        g.wp[k - 1] = alg.omega_prime(k);
        g.wp_inv[k - 1] = alg.omega_prime(k, -1);
    }
    return g;
}

const std::vector<std::map<std::string, RatFunc2>>& negative_serre_words() {
    static const std::vector<std::map<std::string, RatFunc2>> v = [] {
        RatFunc2 r = RatFunc2::r(), s = RatFunc2::s();
        RatFunc2 ri = r.inverse(), si = s.inverse();
        RatFunc2 t = ri * ri + ri * si + si * si;
        return std::vector<std::map<std::string, RatFunc2>>{
            {{"211", 1}, {"121", -(r * r + s * s)}, {"112", r * r * s * s}},
            {{"122", 1}, {"212", -(ri * ri + si * si)}, {"221", ri * ri * si * si}},
            {{"322", 1}, {"232", -(r * r + s * s)}, {"223", r * r * s * s}},
            {{"2333", 1}, {"3233", -t}, {"3323", ri * si * t}, {"3332", -(ri * si).pow(3)}},
            {{"433", 1}, {"343", -(r + s)}, {"334", r * s}},
            {{"344", 1}, {"434", -(ri + si)}, {"443", ri * si}},
        };
    }();
    return v;
}

template <class C>
UElem<C> evaluate_words(UAlgebra<C>& alg, const std::map<std::string, RatFunc2>& words,
                        const std::array<UElem<C>, kRank>& gens, const std::function<C(const RatFunc2&)>& coeff) {
    UElem<C> out;
    for (const auto& [w, c] : words) {
        UElem<C> term = alg.unit();
        for (char ch : w) term = alg.multiply(term, gens.at(ch - '1'));
        out.add_scaled(term, coeff(c));
    }
    return out;
}

template <class C>
std::vector<RelationResidual> check_defining_relations(UAlgebra<C>& alg, const GeneratorImages<C>& img,
                                                       const std::function<C(const RatFunc2&)>& coeff) {
    std::vector<RelationResidual> out;
    auto record = [&](const std::string& family, const std::string& label, const UElem<C>& residual) {
        RelationResidual r{family, label, residual.is_zero(), ""};
        if (!r.holds) r.witness = alg.str(residual);
        out.push_back(std::move(r));
    };
    auto name = [](const char* g, int i) { return std::string(g) + std::to_string(i); };

    std::vector<std::pair<std::string, const UElem<C>*>> group;
    for (int i = 0; i < kRank; ++i) {
        group.push_back({name("w", i + 1), &img.w[i]});
        group.push_back({name("w'", i + 1), &img.wp[i]});
    }
    for (std::size_t a = 0; a < group.size(); ++a)
        for (std::size_t b = a + 1; b < group.size(); ++b)
            record("F1", "[" + group[a].first + "," + group[b].first + "]",
                   alg.commutator(*group[a].second, *group[b].second));
    for (int i = 0; i < kRank; ++i) {
        record("F1", name("w", i + 1) + " inverse", alg.multiply(img.w[i], img.w_inv[i]) - alg.unit());
        record("F1", name("w'", i + 1) + " inverse", alg.multiply(img.wp[i], img.wp_inv[i]) - alg.unit());
    }

    for (int i = 1; i <= kRank; ++i)
        for (int j = 1; j <= kRank; ++j) {
            C a_ij = coeff(structural_constant(i, j));
            C a_ji = coeff(structural_constant(j, i));
            const UElem<C>& w = img.w[i - 1];
            const UElem<C>& wi = img.w_inv[i - 1];
            const UElem<C>& wp = img.wp[i - 1];
            const UElem<C>& wpi = img.wp_inv[i - 1];
            const UElem<C>& Ej = img.E[j - 1];
            const UElem<C>& Fj = img.F[j - 1];
            std::string ij = std::to_string(i) + std::to_string(j);
            record("F2", "w E " + ij, alg.multiply({w, Ej, wi}) - Ej * a_ij);
            record("F2", "w F " + ij, alg.multiply({w, Fj, wi}) - Fj * a_ij.inverse());
            record("F3", "w' E " + ij, alg.multiply({wp, Ej, wpi}) - Ej * a_ji.inverse());
            record("F3", "w' F " + ij, alg.multiply({wp, Fj, wpi}) - Fj * a_ji);
            UElem<C> f4 = alg.commutator(img.E[i - 1], Fj);
            if (i == j) {
                auto [ri, si] = ri_si(i);
                f4 -= (img.w[i - 1] - img.wp[i - 1]) * coeff((ri - si).inverse());
            }
            record("F4", "[E,F] " + ij, f4);
        }

    const auto& pos = serre_elements();
    for (std::size_t k = 0; k < pos.size(); ++k)
        record("F5", "serre " + std::to_string(k + 1), evaluate_words(alg, pos[k].terms(), img.E, coeff));
    const auto& neg = negative_serre_words();
    for (std::size_t k = 0; k < neg.size(); ++k)
        record("F6", "serre " + std::to_string(k + 1), evaluate_words(alg, neg[k], img.F, coeff));
    return out;
}

// ---------------- centrality ----------------

CentralityResult power_central_check(UAlgebra<CycloNum>& exact, int i) {
    if (exact.mode() != UMode::exact) throw std::invalid_argument("centrality needs the untruncated algebra");
    CentralityResult res;
    res.root = i;
    const int ell = exact.ell();
    UElem<CycloNum> ep = exact.from_e(exact.e_engine().power(exact.e_engine().root_vector(i), ell));
    // F_{beta_i}^ell: the F-engine multiplies in reverse, which is immaterial for a power.
    UElem<CycloNum> fp = exact.from_f(exact.f_engine().power(exact.f_engine().root_vector(i), ell));
    std::vector<std::pair<std::string, UElem<CycloNum>>> gens;
    for (int k = 1; k <= kRank; ++k) {
        gens.push_back({"E" + std::to_string(k), exact.Es(k)});
        gens.push_back({"F" + std::to_string(k), exact.Fs(k)});
        gens.push_back({"w" + std::to_string(k), exact.omega(k)});
        gens.push_back({"w'" + std::to_string(k), exact.omega_prime(k)});
    }
    res.e_central = res.f_central = true;
    for (const auto& [name, g] : gens) {
        if (!exact.commutator(ep, g).is_zero()) {
            res.e_central = false;
            res.failures.push_back("E^ell vs " + name);
        }
        if (!exact.commutator(fp, g).is_zero()) {
            res.f_central = false;
            res.failures.push_back("F^ell vs " + name);
        }
    }
    return res;
}

template class UElem<RatFunc2>;
template class UElem<CycloNum>;
template class UAlgebra<RatFunc2>;
template class UAlgebra<CycloNum>;
template std::string to_string(const UElem<RatFunc2>&, const Field<RatFunc2>&);
template std::string to_string(const UElem<CycloNum>&, const Field<CycloNum>&);
template GeneratorImages<RatFunc2> standard_generators(const UAlgebra<RatFunc2>&);
template GeneratorImages<CycloNum> standard_generators(const UAlgebra<CycloNum>&);
template std::vector<RelationResidual> check_defining_relations(UAlgebra<RatFunc2>&, const GeneratorImages<RatFunc2>&,
                                                                const std::function<RatFunc2(const RatFunc2&)>&);
template std::vector<RelationResidual> check_defining_relations(UAlgebra<CycloNum>&, const GeneratorImages<CycloNum>&,
                                                                const std::function<CycloNum(const RatFunc2&)>&);
template UElem<RatFunc2> evaluate_words(UAlgebra<RatFunc2>&, const std::map<std::string, RatFunc2>&,
                                        const std::array<UElem<RatFunc2>, kRank>&,
                                        const std::function<RatFunc2(const RatFunc2&)>&);
template UElem<CycloNum> evaluate_words(UAlgebra<CycloNum>&, const std::map<std::string, RatFunc2>&,
                                        const std::array<UElem<CycloNum>, kRank>&,
                                        const std::function<CycloNum(const RatFunc2&)>&);

}  // namespace uqf4
