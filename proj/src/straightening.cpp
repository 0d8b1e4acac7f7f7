#include "uqf4/straightening.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace uqf4 {

using json = nlohmann::json;

const std::vector<std::pair<int, int>>& serre_pairs() {
    static const std::vector<std::pair<int, int>> v = {{1, 2}, {2, 16}, {16, 17}, {18, 22}, {22, 23}, {23, 24}};
    return v;
}

namespace {

bool is_minimal_pair(int i, int j) {
    int k = root_index(beta(i) + beta(j));
    return k && !root_entry(k).simple() && root_entry(k).minimal_pair() == std::pair{i, j};
}

bool is_serre_pair(int i, int j) {
    const auto& v = serre_pairs();
    return std::find(v.begin(), v.end(), std::pair{i, j}) != v.end();
}

}  // namespace

bool window_is_empty(int i, int j) {
    for (const auto& x : kostant_monomials(beta(i) + beta(j))) {
        bool inside = true;
        for (int k = 1; k <= kNumRoots && inside; ++k)
            if (x[k - 1] && (k <= i || k >= j)) inside = false;
        if (inside) return false;
    }
    return true;
}

namespace {

bool is_base_pair(int i, int j) {
    return is_minimal_pair(i, j) || is_serre_pair(i, j) || (simple_label(i) && simple_label(j)) ||
           window_is_empty(i, j);
}

}  // namespace

std::vector<std::pair<int, int>> construction_order() {
    std::vector<std::pair<int, int>> v;
    for (int i = 1; i <= kNumRoots; ++i)
        for (int j = i + 1; j <= kNumRoots; ++j) v.emplace_back(i, j);
    auto key = [](std::pair<int, int> x) {
        return std::tuple(!is_base_pair(x.first, x.second), root_height(x.first) + root_height(x.second),
                          x.second - x.first, x.first);
    };
    std::stable_sort(v.begin(), v.end(), [&](auto x, auto y) { return key(x) < key(y); });
    return v;
}

namespace {

using Engine = PbwEngine<RatFunc2>;
using Elem = PbwElem<RatFunc2>;

std::string pair_str(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

// E_i E_j expanded through E_a E_b - p E_b E_a, where (a,b) is the minimal pair of the split factor.
Elem expand_split(Engine& eng, int i, int j, bool split_right) {
    int k = split_right ? j : i;
    auto [a, b] = root_entry(k).minimal_pair();
    RatFunc2 pab = eng.pairing(beta(b), beta(a));
    Elem ea = eng.root_vector(a), eb = eng.root_vector(b);
    if (split_right) {
        Elem ei = eng.root_vector(i);
        Elem x = eng.multiply(eng.multiply(ei, ea), eb);
        x.add_scaled(eng.multiply(eng.multiply(ei, eb), ea), -pab);
        return x;
    }
    Elem ej = eng.root_vector(j);
    Elem x = eng.multiply(ea, eng.multiply(eb, ej));
    x.add_scaled(eng.multiply(eb, eng.multiply(ea, ej)), -pab);
    return x;
}

}  // namespace

namespace {

// Base rules need no products: minimal pairs, simple pairs, Serre pairs and empty windows.
bool build_base_rule(int i, int j, StraighteningRule<RatFunc2>& rule, RuleRecord& rec) {
    rule.i = i;
    rule.j = j;
    rule.p = pairing_omega(beta(j), beta(i));
    rec = RuleRecord{i, j};
    if (is_minimal_pair(i, j)) {
        rule.correction.add(PbwMono::single(root_index(beta(i) + beta(j))), RatFunc2(1));
        rec.source = RuleSource::minimal_pair;
        return true;
    }
    if (simple_label(i) && simple_label(j)) {
        if (cartan(simple_label(i), simple_label(j)) != 0)
            throw TableError("connected simple pair " + pair_str(i, j) + " is not a minimal pair");
        rec.source = RuleSource::disconnected;
        return true;
    }
    if (is_serre_pair(i, j)) {
        rec.source = RuleSource::serre;
        return true;
    }
    if (window_is_empty(i, j)) {
        rec.source = RuleSource::empty_window;
        return true;
    }
    return false;
}

// sum_u coeffs[u] * (E_i E_j)_u = rhs
struct Equation {
    std::vector<RatFunc2> coeffs;
    Elem rhs;
};

std::size_t weight(const RatFunc2& x) { return x.num().size() + x.den().size(); }

struct Elimination {
    std::vector<int> pivot_row;  // per unknown, -1 when undetermined
    int inconsistent = -1;       // a row reduced to 0 = nonzero
};

// Gauss-Jordan elimination in place, preferring light pivots.
Elimination eliminate(std::vector<Equation>& eqs, int n) {
    Elimination out;
    out.pivot_row.assign(n, -1);
    std::vector<bool> used(eqs.size(), false);
    for (int col = 0; col < n; ++col) {
        int best = -1;
        for (int r = 0; r < (int)eqs.size(); ++r) {
            if (used[r] || eqs[r].coeffs[col].is_zero()) continue;
            if (best < 0 || weight(eqs[r].coeffs[col]) < weight(eqs[best].coeffs[col])) best = r;
        }
        if (best < 0) continue;
        used[best] = true;
        out.pivot_row[col] = best;
        RatFunc2 inv = eqs[best].coeffs[col].inverse();
        for (auto& c : eqs[best].coeffs) c *= inv;
        eqs[best].rhs *= inv;
        for (int r = 0; r < (int)eqs.size(); ++r) {
            if (r == best || eqs[r].coeffs[col].is_zero()) continue;
            RatFunc2 f = eqs[r].coeffs[col];
            for (int c2 = 0; c2 < n; ++c2)
                if (!eqs[best].coeffs[c2].is_zero()) eqs[r].coeffs[c2] -= f * eqs[best].coeffs[c2];
            eqs[r].rhs.add_scaled(eqs[best].rhs, -f);
        }
    }
    for (int r = 0; r < (int)eqs.size(); ++r)
        if (!used[r] && !eqs[r].rhs.is_zero()) {
            out.inconsistent = r;
            break;
        }
    return out;
}

class DegreeSolver {
public:
    DegreeSolver(Engine& eng, GenericTable& table, const std::vector<std::pair<int, int>>& pairs)
        : eng_(eng), table_(table), pairs_(pairs) {}

    // Products E_i E_j for every pair, in the given order.
    std::vector<Elem> solve(bool& used_associativity) {
        used_associativity = false;
        for (int u = 0; u < n(); ++u) {
            auto [i, j] = pairs_[u];
            for (bool split_right : {true, false}) {
                if (root_entry(split_right ? j : i).simple()) continue;
                guarded([&] {
                    Elem x = expand_split(eng_, i, j, split_right);
                    x.add(PbwMono::sentinel(i, j), RatFunc2(-1));
                    add_equation(x);
                });
            }
        }
        std::vector<Equation> work = eqs_;
        Elimination el = eliminate(work, n());
        if (std::find(el.pivot_row.begin(), el.pivot_row.end(), -1) != el.pivot_row.end()) {
            used_associativity = true;
            add_associativity();
            work = eqs_;
            el = eliminate(work, n());
        }
        if (el.inconsistent >= 0) throw TableError("inconsistent expansions in degree of " + describe());
        std::vector<Elem> out(n());
        for (int col = 0; col < n(); ++col) {
            if (el.pivot_row[col] < 0)
                throw TableError("no determining expansion for " + pair_str(pairs_[col].first, pairs_[col].second) +
                                 " among" + describe());
            out[col] = work[el.pivot_row[col]].rhs;
        }
        return out;
    }

    std::size_t equation_count() const { return eqs_.size(); }

private:
    int n() const { return (int)pairs_.size(); }

    std::string describe() const {
        std::string all;
        for (auto [a, b] : pairs_) all += " " + pair_str(a, b);
        return all;
    }

    int unknown(int a, int b) const {
        for (int u = 0; u < n(); ++u)
            if (pairs_[u] == std::pair{a, b}) return u;
        throw TableError("product " + pair_str(a, b) + " is unknown while solving" + describe());
    }

    template <class F>
    void guarded(F&& f) {
        for (auto [i, j] : pairs_) table_.mark_building(i, j);
        try {
            f();
        } catch (...) {
            release();
            throw;
        }
        release();
    }

    void release() {
        for (auto [i, j] : pairs_) table_.clear(i, j);
        eng_.purge_sentinel();
    }

    // x = 0 with the pending products as unknowns.
    void add_equation(const Elem& x) {
        Equation e{std::vector<RatFunc2>(n(), RatFunc2(0)), {}};
        bool any = false;
        for (const auto& [m, c] : x.terms()) {
            if (m.is_sentinel()) {
                e.coeffs[unknown(m.e[1], m.e[2])] += c;
                any = true;
            } else {
                e.rhs.add(m, -c);
            }
        }
        if (!any && !e.rhs.is_zero()) throw TableError("associativity fails without unknowns in" + describe());
        if (any) eqs_.push_back(std::move(e));
    }

    void add_associativity() {
        LatticeVec d = beta(pairs_[0].first) + beta(pairs_[0].second);
        for (int a = 1; a <= kNumRoots; ++a)
            for (int b = 1; b <= kNumRoots; ++b) {
                LatticeVec ab = beta(a) + beta(b);
                int c = root_index(d - ab);
                if (!c || (a > b && b > c)) continue;
                guarded([&] {
                    Elem ea = eng_.root_vector(a), eb = eng_.root_vector(b), ec = eng_.root_vector(c);
                    Elem x = eng_.multiply(eng_.multiply(ea, eb), ec);
                    x -= eng_.multiply(ea, eng_.multiply(eb, ec));
                    add_equation(x);
                });
            }
    }

    Engine& eng_;
    GenericTable& table_;
    const std::vector<std::pair<int, int>>& pairs_;
    std::vector<Equation> eqs_;
};

}  // namespace

std::shared_ptr<GenericTable> build_straightening_table(BuildReport* report) {
    auto start = std::chrono::steady_clock::now();
    auto table = std::make_shared<GenericTable>();
    Engine eng(table, Field<RatFunc2>{});

    auto finish = [&](StraighteningRule<RatFunc2> rule, const RuleRecord& rec) {
        int i = rule.i, j = rule.j;
        if (!rule.correction.supported_in(i, j))
            throw TableError("correction of " + pair_str(i, j) + " leaves the window: " +
                             to_string(rule.correction, Field<RatFunc2>{}));
        if (!rule.correction.is_zero() && rule.correction.degree() != beta(i) + beta(j))
            throw TableError("correction of " + pair_str(i, j) + " has the wrong degree");
        table->set(std::move(rule));
        if (report) report->records.push_back(rec);
    };

    // Remaining pairs grouped by degree; groups are handled in order of first appearance.
    std::vector<LatticeVec> degrees;
    std::vector<std::vector<std::pair<int, int>>> groups;
    for (auto [i, j] : construction_order()) {
        StraighteningRule<RatFunc2> rule;
        RuleRecord rec;
        if (build_base_rule(i, j, rule, rec)) {
            finish(std::move(rule), rec);
            continue;
        }
        LatticeVec d = beta(i) + beta(j);
        auto it = std::find(degrees.begin(), degrees.end(), d);
        if (it == degrees.end()) {
            degrees.push_back(d);
            groups.push_back({{i, j}});
        } else {
            groups[it - degrees.begin()].emplace_back(i, j);
        }
    }

    for (const auto& pairs : groups) {
        DegreeSolver solver(eng, *table, pairs);
        bool assoc = false;
        std::vector<Elem> products = solver.solve(assoc);
        for (std::size_t u = 0; u < pairs.size(); ++u) {
            auto [i, j] = pairs[u];
            StraighteningRule<RatFunc2> rule;
            rule.i = i;
            rule.j = j;
            rule.p = pairing_omega(beta(j), beta(i));
            rule.correction = std::move(products[u]);
            PbwMono ji = PbwMono::single(j);
            ji.e[i - 1] = 1;
            rule.correction.add(ji, -rule.p);
            RuleRecord rec{i, j, RuleSource::solved, (int)pairs.size(), (int)solver.equation_count(), assoc};
            finish(std::move(rule), rec);
        }
    }
    if (report)
        report->seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return table;
}

// ---------------- cache ----------------

std::string serialize_table(const GenericTable& t) {
    json rules = json::array();
    for (int i = 1; i <= kNumRoots; ++i)
        for (int j = i + 1; j <= kNumRoots; ++j) {
            if (t.state(i, j) != RuleState::ready) continue;
            const auto& r = t.rule(i, j);
            json corr = json::array();
            for (const auto& [m, c] : r.correction.sorted()) {
                json exps = json::array();
                for (int k = 0; k < kNumRoots; ++k) exps.push_back((int)m.e[k]);
                corr.push_back({{"exps", exps}, {"coeff", c.str()}});
            }
            rules.push_back({{"i", i}, {"j", j}, {"p", r.p.str()}, {"correction", corr}});
        }
    json doc = {{"format_version", kTableFormatVersion}, {"mode", "generic"}, {"rules", rules}};
    return doc.dump(1) + "\n";
}

GenericTable parse_table(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw TableError(std::string("table cache is not valid JSON: ") + e.what());
    }
    try {
        if (doc.at("format_version").get<int>() != kTableFormatVersion)
            throw TableError("table cache version mismatch: found " + doc.at("format_version").dump() +
                             ", expected " + std::to_string(kTableFormatVersion));
        if (doc.at("mode").get<std::string>() != "generic") throw TableError("table cache mode must be generic");
        GenericTable t;
        for (const auto& r : doc.at("rules")) {
            StraighteningRule<RatFunc2> rule;
            rule.i = r.at("i").get<int>();
            rule.j = r.at("j").get<int>();
            if (rule.i < 1 || rule.j > kNumRoots || rule.i >= rule.j) throw TableError("table cache rule out of range");
            rule.p = RatFunc2::parse(r.at("p").get<std::string>());
            for (const auto& term : r.at("correction")) {
                const auto& ex = term.at("exps");
                if (ex.size() != (std::size_t)kNumRoots) throw TableError("table cache monomial has wrong length");
                Exponents x{};
                for (int k = 0; k < kNumRoots; ++k) x[k] = ex[k].get<int>();
                rule.correction.add(PbwMono::from(x), RatFunc2::parse(term.at("coeff").get<std::string>()));
            }
            t.set(std::move(rule));
        }
        return t;
    } catch (const json::exception& e) {
        throw TableError(std::string("table cache is malformed: ") + e.what());
    } catch (const CoeffError& e) {
        throw TableError(std::string("table cache has a bad coefficient: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw TableError(std::string("table cache is malformed: ") + e.what());
    }
}

void store_table(const GenericTable& t, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw TableError("cannot write table cache " + path);
    out << serialize_table(t);
    if (!out) throw TableError("failed writing table cache " + path);
}

GenericTable load_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw TableError("cannot read table cache " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_table(ss.str());
}

std::string table_fingerprint(const GenericTable& t) {
    std::string s = serialize_table(t);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

std::shared_ptr<GenericTable> obtain_table(const std::string& cache_path, std::string* note) {
    if (!cache_path.empty()) {
        std::ifstream probe(cache_path);
        if (probe) {
            try {
                auto t = std::make_shared<GenericTable>(load_table(cache_path));
                if (t->complete()) return t;
                if (note) *note = "table cache " + cache_path + " is incomplete; rebuilding";
            } catch (const TableError& e) {
                if (note) *note = std::string(e.what()) + "; rebuilding";
            }
        }
    }
    auto t = build_straightening_table();
    if (!cache_path.empty()) store_table(*t, cache_path);
    return t;
}

std::shared_ptr<StraighteningTable<CycloNum>> specialize_table(const GenericTable& t, const EvalPoint& at) {
    return std::make_shared<StraighteningTable<CycloNum>>(
        t.map<CycloNum>([&](const RatFunc2& x) { return specialize(x, at); }));
}

std::shared_ptr<GenericTable> swap_table(const GenericTable& t) {
    return std::make_shared<GenericTable>(t.map<RatFunc2>([](const RatFunc2& x) { return x.swapped(); }));
}

}  // namespace uqf4
