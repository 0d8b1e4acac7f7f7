#include "uqf4/oracle.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace uqf4 {

void FreeElem::add(const Word& w, const RatFunc2& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(w, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

FreeElem& FreeElem::operator+=(const FreeElem& o) {
    for (const auto& [w, c] : o.t_) add(w, c);
    return *this;
}

FreeElem& FreeElem::operator-=(const FreeElem& o) {
    for (const auto& [w, c] : o.t_) add(w, -c);
    return *this;
}

FreeElem& FreeElem::operator*=(const RatFunc2& c) {
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& kv : t_) kv.second *= c;
    return *this;
}

std::string FreeElem::str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : t_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")*" + (w.empty() ? std::string("1") : w);
    }
    return out;
}

FreeElem free_multiply(const FreeElem& a, const FreeElem& b) {
    FreeElem out;
    for (const auto& [u, c] : a.terms())
        for (const auto& [v, d] : b.terms()) out.add(u + v, c * d);
    return out;
}

LatticeVec word_degree(const Word& w) {
    LatticeVec d{};
    for (char ch : w) {
        if (ch < '1' || ch > '4') throw std::invalid_argument("word letter out of range: " + w);
        d[ch - '1']++;
    }
    return d;
}

LatticeVec BracketTree::degree() const {
    if (is_leaf()) return simple_root(leaf);
    return left->degree() + right->degree();
}

namespace {

std::shared_ptr<const BracketTree> make_tree(int i) {
    auto t = std::make_shared<BracketTree>();
    const RootEntry& e = root_entry(i);
    if (e.simple()) {
        t->leaf = simple_label(i);
        return t;
    }
    auto [a, b] = e.minimal_pair();
    t->left = make_tree(a);
    t->right = make_tree(b);
    t->p = pairing_omega(beta(b), beta(a));
    return t;
}

}  // namespace

const BracketTree& root_vector_tree(int i) {
    static const std::vector<std::shared_ptr<const BracketTree>> trees = [] {
        std::vector<std::shared_ptr<const BracketTree>> v(kNumRoots + 1);
        for (int k = 1; k <= kNumRoots; ++k) v[k] = make_tree(k);
        return v;
    }();
    if (i < 1 || i > kNumRoots) throw std::out_of_range("root index out of range");
    return *trees[i];
}

FreeElem expand_tree(const BracketTree& t) {
    if (t.is_leaf()) return FreeElem(Word(1, char('0' + t.leaf)), RatFunc2(1));
    FreeElem x = expand_tree(*t.left), y = expand_tree(*t.right);
    FreeElem out = free_multiply(x, y);
    out -= free_multiply(y, x) * t.p;
    return out;
}

FreeElem expand_to_free(int i) {
    static const std::vector<FreeElem> cache = [] {
        std::vector<FreeElem> v(kNumRoots + 1);
        for (int k = 1; k <= kNumRoots; ++k) v[k] = expand_tree(root_vector_tree(k));
        return v;
    }();
    if (i < 1 || i > kNumRoots) throw std::out_of_range("root index out of range");
    return cache[i];
}

FreeElem pbw_to_free(const PbwElem<RatFunc2>& x) {
    FreeElem out;
    for (const auto& [m, c] : x.terms()) {
        FreeElem cur(Word{}, RatFunc2(1));
        for (int k = kNumRoots; k >= 1; --k)
            for (int t = 0; t < m.exp(k); ++t) cur = free_multiply(cur, expand_to_free(k));
        out += cur * c;
    }
    return out;
}

Word leading_word(const FreeElem& x) {
    if (x.is_zero()) throw std::invalid_argument("leading word of zero");
    return x.terms().begin()->first;
}

const std::vector<FreeElem>& serre_elements() {
    static const std::vector<FreeElem> v = [] {
        auto make = [](std::initializer_list<std::pair<const char*, const char*>> terms) {
            FreeElem e;
            for (const auto& [w, c] : terms) e.add(w, RatFunc2::parse(c));
            return e;
        };
        return std::vector<FreeElem>{
            make({{"112", "1"}, {"121", "-r^2 - s^2"}, {"211", "r^2*s^2"}}),
            make({{"221", "1"}, {"212", "-r^-2 - s^-2"}, {"122", "r^-2*s^-2"}}),
            make({{"223", "1"}, {"232", "-r^2 - s^2"}, {"322", "r^2*s^2"}}),
            make({{"3332", "1"},
                  {"3323", "-r^-2 - r^-1*s^-1 - s^-2"},
                  {"3233", "r^-3*s^-1 + r^-2*s^-2 + r^-1*s^-3"},
                  {"2333", "-r^-3*s^-3"}}),
            make({{"334", "1"}, {"343", "-r - s"}, {"433", "r*s"}}),
            make({{"443", "1"}, {"434", "-r^-1 - s^-1"}, {"344", "r^-1*s^-1"}}),
        };
    }();
    return v;
}

const std::vector<FreeElem>& defining_relations() {
    static const std::vector<FreeElem> v = [] {
        std::vector<FreeElem> out = serre_elements();
        for (int i = 1; i <= kRank; ++i)
            for (int j = i + 1; j <= kRank; ++j) {
                if (cartan(i, j) != 0) continue;
                FreeElem e;
                e.add(Word{char('0' + i), char('0' + j)}, RatFunc2(1));
                e.add(Word{char('0' + j), char('0' + i)}, -structural_constant(i, j));
                out.push_back(std::move(e));
            }
        return out;
    }();
    return v;
}

namespace {

std::vector<Word> words_of_degree(const LatticeVec& d) {
    Word w;
    for (int k = 0; k < kRank; ++k) w.append(d[k], char('1' + k));
    std::vector<Word> out;
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

bool fits(const LatticeVec& small, const LatticeVec& big) {
    for (int k = 0; k < kRank; ++k)
        if (small[k] > big[k]) return false;
    return true;
}

}  // namespace

OracleComponent::OracleComponent(const LatticeVec& d) : d_(d) {
    words_ = words_of_degree(d).size();
    for (const FreeElem& s : defining_relations()) {
        LatticeVec ds = word_degree(s.terms().begin()->first);
        if (!fits(ds, d)) continue;
        for (const Word& w : words_of_degree(d - ds))
            for (std::size_t cut = 0; cut <= w.size(); ++cut) {
                FreeElem row;
                Word u = w.substr(0, cut), v = w.substr(cut);
                for (const auto& [x, c] : s.terms()) row.add(u + x + v, c);
                row = reduce(row);
                if (row.is_zero()) continue;
                auto last = std::prev(row.terms().end());
                Word key = last->first;
                row *= last->second.inverse();
                pivots_.emplace(key, std::move(row));
            }
    }
}

FreeElem OracleComponent::reduce(const FreeElem& x) const {
    FreeElem work = x, out;
    while (!work.is_zero()) {
        auto last = std::prev(work.terms().end());
        Word w = last->first;
        RatFunc2 c = last->second;
        auto it = pivots_.find(w);
        if (it == pivots_.end()) {
            out.add(w, c);
            work.add(w, -c);
        } else {
            work -= it->second * c;
        }
    }
    return out;
}

const OracleComponent& oracle_component(const LatticeVec& d, int bound) {
    if (height(d) > bound)
        throw std::invalid_argument("oracle degree of height " + std::to_string(height(d)) + " exceeds bound " +
                                    std::to_string(bound));
    for (int x : d)
        if (x < 0) throw std::invalid_argument("oracle degree must be nonnegative");
    static std::mutex mu;
    static std::map<LatticeVec, std::unique_ptr<OracleComponent>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[d];
    if (!slot) slot = std::make_unique<OracleComponent>(d);
    return *slot;
}

bool oracle_check_identity(const PbwElem<RatFunc2>& lhs, const PbwElem<RatFunc2>& rhs, int bound) {
    for (const auto* side : {&lhs, &rhs}) {
        if (side->is_zero()) continue;
        if (!side->homogeneous()) throw std::invalid_argument("oracle identity must be homogeneous");
        if (height(side->degree()) > bound) throw std::invalid_argument("oracle degree exceeds the height bound");
    }
    PbwElem<RatFunc2> diff = lhs - rhs;
    if (diff.is_zero()) return true;
    if (!diff.homogeneous()) throw std::invalid_argument("oracle identity must be homogeneous");
    const OracleComponent& comp = oracle_component(diff.degree(), bound);
    return comp.in_ideal(pbw_to_free(diff));
}

}  // namespace uqf4
