// Free algebra on E_1..E_4, bracket trees of root vectors, and the Serre-quotient oracle.
#pragma once

#include "uqf4/pbw.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace uqf4 {

// Words over the letters '1'..'4'.
using Word = std::string;

class FreeElem {
public:
    FreeElem() = default;
    FreeElem(const Word& w, const RatFunc2& c) { add(w, c); }

    bool is_zero() const { return t_.empty(); }
    const std::map<Word, RatFunc2>& terms() const { return t_; }
    void add(const Word& w, const RatFunc2& c);
    FreeElem& operator+=(const FreeElem& o);
    FreeElem& operator-=(const FreeElem& o);
    FreeElem& operator*=(const RatFunc2& c);
    friend FreeElem operator+(FreeElem a, const FreeElem& b) { return a += b; }
    friend FreeElem operator-(FreeElem a, const FreeElem& b) { return a -= b; }
    friend FreeElem operator*(FreeElem a, const RatFunc2& c) { return a *= c; }
    friend bool operator==(const FreeElem& a, const FreeElem& b) { return a.t_ == b.t_; }

    std::string str() const;

private:
    std::map<Word, RatFunc2> t_;
};

FreeElem free_multiply(const FreeElem& a, const FreeElem& b);
LatticeVec word_degree(const Word& w);

struct BracketTree {
    int leaf = 0;  // simple label 1..4 for a leaf, 0 for a node
    std::shared_ptr<const BracketTree> left, right;
    RatFunc2 p;  // x y - p y x at a node

    bool is_leaf() const { return leaf != 0; }
    LatticeVec degree() const;
};

const BracketTree& root_vector_tree(int i);
FreeElem expand_tree(const BracketTree& t);
FreeElem expand_to_free(int i);
// Each PBW monomial E_24^n24 ... E_1^n1 expanded as a product of root vector expansions.
FreeElem pbw_to_free(const PbwElem<RatFunc2>& x);
// Lexicographically smallest word with a nonzero coefficient.
Word leading_word(const FreeElem& x);

// The six quantum Serre elements, in the order of the defining relations.
const std::vector<FreeElem>& serre_elements();
// The Serre elements followed by E_i E_j - a_ij E_j E_i for the disconnected pairs i < j.
const std::vector<FreeElem>& defining_relations();

constexpr int kOracleHeightBound = 6;

// Degree-d slice of the free algebra modulo the two-sided ideal of the defining relations.
class OracleComponent {
public:
    explicit OracleComponent(const LatticeVec& d);

    const LatticeVec& degree() const { return d_; }
    std::size_t word_count() const { return words_; }
    std::size_t dimension() const { return words_ - pivots_.size(); }
    // Normal form modulo the ideal: only non-pivot words remain.
    FreeElem reduce(const FreeElem& x) const;
    bool in_ideal(const FreeElem& x) const { return reduce(x).is_zero(); }

private:
    LatticeVec d_;
    std::size_t words_ = 0;
    std::map<Word, FreeElem> pivots_;  // row whose greatest word is the key, normalized there to 1
};

// Throws std::invalid_argument when the height exceeds bound.
const OracleComponent& oracle_component(const LatticeVec& d, int bound = kOracleHeightBound);
bool oracle_check_identity(const PbwElem<RatFunc2>& lhs, const PbwElem<RatFunc2>& rhs,
                           int bound = kOracleHeightBound);

}  // namespace uqf4
