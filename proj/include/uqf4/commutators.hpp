// Commutators of root vectors and iterated q-adjoint actions in the positive part.
#pragma once

#include "uqf4/pbw.hpp"

#include <stdexcept>
#include <string>

namespace uqf4 {

struct NilpotencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class AdSide { left, right };

// [E_i, E_j] for i < j, read off the table.
template <class C>
PbwElem<C> commutator(const StraighteningTable<C>& table, int i, int j) {
    if (!(1 <= i && i < j && j <= kNumRoots)) throw std::invalid_argument("commutator needs 1 <= i < j <= 24");
    return table.rule(i, j).correction;
}

// left:  (ad_q x)_L^(m) y, each step A -> x A - p^(n-1) q A x
// right: (ad_q y)_R^(m) x, each step B -> B y - p^(n-1) q y B
// with p the self-pairing of the acting element's degree.
template <class C>
PbwElem<C> ad_q_power(PbwEngine<C>& eng, AdSide side, const PbwElem<C>& x, const PbwElem<C>& y, const C& q, int m) {
    if (m < 0) throw std::invalid_argument("ad_q_power needs m >= 0");
    const PbwElem<C>& acting = side == AdSide::left ? x : y;
    PbwElem<C> cur = side == AdSide::left ? y : x;
    if (m == 0 || cur.is_zero()) return cur;
    if (acting.is_zero()) return {};
    LatticeVec d = acting.degree();
    C p = eng.pairing(d, d);
    C scale = q;
    for (int n = 1; n <= m && !cur.is_zero(); ++n) {
        if (side == AdSide::left)
            cur = eng.multiply(acting, cur) - eng.multiply(cur, acting) * scale;
        else
            cur = eng.multiply(cur, acting) - eng.multiply(acting, cur) * scale;
        scale *= p;
    }
    return cur;
}

// Smallest m <= cap with (ad_q E_i)_L^(m) E_j = 0, or (ad_q E_j)_R^(m) E_i = 0 on the right,
// where q = <omega'_{beta_j}, omega_{beta_i}> in both cases.
template <class C>
int ad_nilpotency_degree(PbwEngine<C>& eng, int i, int j, int cap, AdSide side = AdSide::left) {
    if (!(1 <= i && i < j && j <= kNumRoots)) throw std::invalid_argument("nilpotency needs 1 <= i < j <= 24");
    if (cap < 1) throw std::invalid_argument("nilpotency cap must be positive");
    PbwElem<C> ei = eng.root_vector(i), ej = eng.root_vector(j);
    const bool left = side == AdSide::left;
    C q = eng.pairing(beta(j), beta(i));
    const PbwElem<C>& acting = left ? ei : ej;
    C p = left ? eng.pairing(beta(i), beta(i)) : eng.pairing(beta(j), beta(j));
    PbwElem<C> cur = left ? ej : ei;
    C scale = q;
    for (int m = 1; m <= cap; ++m) {
        if (left)
            cur = eng.multiply(acting, cur) - eng.multiply(cur, acting) * scale;
        else
            cur = eng.multiply(cur, acting) - eng.multiply(acting, cur) * scale;
        if (cur.is_zero()) return m;
        scale *= p;
    }
    throw NilpotencyError("ad action of root " + std::to_string(left ? i : j) + " on root " +
                          std::to_string(left ? j : i) + " is not nilpotent within " + std::to_string(cap) + " steps");
}

}  // namespace uqf4
