// Static F4 root data in the fixed convex order.
#pragma once

#include "uqf4/coeff.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace uqf4 {

constexpr int kRank = 4;
constexpr int kNumRoots = 24;

using LatticeVec = std::array<int, kRank>;

LatticeVec operator+(const LatticeVec& a, const LatticeVec& b);
LatticeVec operator-(const LatticeVec& a, const LatticeVec& b);
LatticeVec operator*(int k, const LatticeVec& a);
int height(const LatticeVec& v);
LatticeVec simple_root(int i);  // i in 1..4

struct Decomposition {
    int a = 0;
    int b = 0;
    bool lyndon = false;  // an alternative Lyndon factorization of the word
};

struct RootEntry {
    int index = 0;
    LatticeVec root{};
    std::string word;
    // First entry is the minimal pair; empty for simple roots.
    std::vector<Decomposition> decompositions;

    bool simple() const { return decompositions.empty(); }
    int height() const { return uqf4::height(root); }
    std::pair<int, int> minimal_pair() const { return {decompositions.at(0).a, decompositions.at(0).b}; }
};

// 1-based: root_entry(1) .. root_entry(24).
const RootEntry& root_entry(int i);
const LatticeVec& beta(int i);
int root_height(int i);

// Convex index of alpha_k (1,16,22,24) and the inverse map (0 when not simple).
int simple_index(int k);
int simple_label(int i);

// Convex index of a lattice vector, or 0 if it is not a positive root.
int root_index(const LatticeVec& v);

int cartan(int i, int j);

// a_ij as the exponent pair (er, es) of the monomial r^er s^es.
std::pair<int, int> structural_exponents(int i, int j);
RatFunc2 structural_constant(int i, int j);
std::pair<RatFunc2, RatFunc2> ri_si(int i);
std::pair<int, int> ri_exponents(int i);  // r_i = r^k, s_i = s^k: returns (k, k)

// prod a_ji^{mu_i nu_j}: the value <omega'_mu, omega_nu>.
std::pair<int, int> pairing_exponents(const LatticeVec& mu, const LatticeVec& nu);
RatFunc2 pairing_omega(const LatticeVec& mu, const LatticeVec& nu);

LatticeVec rho();
LatticeVec two_rho();

using Exponents = std::array<int, kNumRoots>;  // entry i-1 is the power of E_{beta_i}

// All exponent vectors n with sum n_i beta_i = d, in lexicographic order of (n_1, ..., n_24).
std::vector<Exponents> kostant_monomials(const LatticeVec& d);

// All nonzero d in Q+ with height(d) <= h.
std::vector<LatticeVec> degrees_up_to(int h);

}  // namespace uqf4
