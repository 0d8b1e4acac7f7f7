#include "uqf4/coeff.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace uqf4 {

namespace {

// ---- dense univariate polynomials over Q (low to high) ----
using UPoly = std::vector<mpq_class>;

void utrim(UPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

UPoly usub(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    utrim(r);
    return r;
}

UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    utrim(r);
    return r;
}

void udivmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& rem) {
    rem = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    const mpq_class& lb = b.back();
    while (!rem.empty() && rem.size() >= b.size()) {
        std::size_t shift = rem.size() - b.size();
        mpq_class f = rem.back() / lb;
        q[shift] = f;
        for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] -= f * b[j];
        rem.pop_back();
        utrim(rem);
    }
    utrim(q);
}

UPoly uexact(const UPoly& a, const UPoly& b) {
    UPoly q, r;
    udivmod(a, b, q, r);
    if (!r.empty()) throw CoeffError("inexact univariate division");
    return q;
}

// ---- integer polynomials ----
using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

mpz_class zcontent(const ZPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void zdivexact(ZPoly& p, const mpz_class& c) {
    if (c == 1) return;
    for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

ZPoly zprimitive(ZPoly p) {
    ztrim(p);
    if (p.empty()) return p;
    mpz_class c = zcontent(p);
    if (p.back() < 0) c = -c;
    zdivexact(p, c);
    return p;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    ztrim(r);
    return r;
}

ZPoly zprem(ZPoly a, const ZPoly& b) {
    const mpz_class lb = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        mpz_class la = a.back();
        for (auto& c : a) c *= lb;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
        ztrim(a);
    }
    return a;
}

ZPoly zgcd(ZPoly a, ZPoly b) {
    ztrim(a);
    ztrim(b);
    if (a.empty()) return zprimitive(b);
    if (b.empty()) return zprimitive(a);
    mpz_class c = 0;
    mpz_gcd(c.get_mpz_t(), zcontent(a).get_mpz_t(), zcontent(b).get_mpz_t());
    a = zprimitive(a);
    b = zprimitive(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (b.size() > 1) {
        ZPoly r = zprem(a, b);
        a = std::move(b);
        b = zprimitive(std::move(r));
    }
    ZPoly g = b.empty() ? a : ZPoly{1};
    for (auto& x : g) x *= c;
    return g;
}

ZPoly zexact(ZPoly a, const ZPoly& b) {
    ZPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    const mpz_class& lb = b.back();
    while (!a.empty()) {
        if (a.size() < b.size() || !mpz_divisible_p(a.back().get_mpz_t(), lb.get_mpz_t()))
            throw CoeffError("inexact polynomial division");
        std::size_t shift = a.size() - b.size();
        mpz_class f;
        mpz_divexact(f.get_mpz_t(), a.back().get_mpz_t(), lb.get_mpz_t());
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
        q[shift] = f;
        if (sgn(a.back()) != 0) throw CoeffError("inexact polynomial division");
        ztrim(a);
    }
    ztrim(q);
    return q;
}

// ---- bivariate integer polynomials: entry i is the coefficient of r^i, a polynomial in s ----
using BPoly = std::vector<ZPoly>;

void btrim(BPoly& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}

ZPoly bcontent(const BPoly& p) {
    ZPoly g;
    for (const auto& c : p) {
        if (c.empty()) continue;
        g = g.empty() ? zprimitive(c) : zgcd(g, c);
        if (g.size() == 1) break;
    }
    return g;
}

BPoly bprimitive(BPoly p) {
    btrim(p);
    if (p.empty()) return p;
    ZPoly c = bcontent(p);
    if (p.back().back() < 0) for (auto& x : c) x = -x;
    if (c.size() == 1) {
        if (c[0] != 1)
            for (auto& u : p) zdivexact(u, c[0]);
    } else {
        for (auto& u : p)
            if (!u.empty()) u = zexact(u, c);
    }
    // integer content of the whole polynomial
    mpz_class g = 0;
    for (const auto& u : p) {
        mpz_class cu = zcontent(u);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cu.get_mpz_t());
    }
    if (g > 1)
        for (auto& u : p) zdivexact(u, g);
    return p;
}

BPoly bprem(BPoly a, const BPoly& b) {
    const ZPoly& lb = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        ZPoly la = a.back();
        for (auto& c : a) c = zmul(c, lb);
        for (std::size_t j = 0; j < b.size(); ++j) {
            ZPoly t = zmul(la, b[j]);
            ZPoly& x = a[shift + j];
            if (x.size() < t.size()) x.resize(t.size());
            for (std::size_t k = 0; k < t.size(); ++k) x[k] -= t[k];
            ztrim(x);
        }
        btrim(a);
    }
    return a;
}

BPoly bgcd(BPoly a, BPoly b) {
    btrim(a);
    btrim(b);
    if (a.empty()) return bprimitive(b);
    if (b.empty()) return bprimitive(a);
    ZPoly c = zgcd(bcontent(a), bcontent(b));
    a = bprimitive(a);
    b = bprimitive(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (b.size() > 1) {
        BPoly rem = bprem(a, b);
        a = std::move(b);
        b = bprimitive(std::move(rem));
    }
    // a zero remainder leaves the gcd in a; a nonzero one of r-degree 0 means coprime
    BPoly g = b.empty() ? a : BPoly{ZPoly{1}};
    for (auto& x : g) x = zmul(x, c);
    btrim(g);
    return g;
}

BPoly bexact(BPoly a, const BPoly& b) {
    BPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    const ZPoly& lb = b.back();
    while (!a.empty()) {
        if (a.size() < b.size()) throw CoeffError("inexact bivariate division");
        std::size_t shift = a.size() - b.size();
        ZPoly f = zexact(a.back(), lb);
        for (std::size_t j = 0; j < b.size(); ++j) {
            ZPoly t = zmul(f, b[j]);
            ZPoly& x = a[shift + j];
            if (x.size() < t.size()) x.resize(t.size());
            for (std::size_t k = 0; k < t.size(); ++k) x[k] -= t[k];
            ztrim(x);
        }
        q[shift] = std::move(f);
        if (!a.back().empty()) throw CoeffError("inexact bivariate division");
        btrim(a);
    }
    btrim(q);
    return q;
}

mpz_class denominator_lcm(const LaurentPoly2& p) {
    mpz_class l = 1;
    for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.get_den_mpz_t());
    return l;
}

// p * scale with exponents shifted by (-dr, -ds); scale must clear all denominators.
BPoly to_bpoly(const LaurentPoly2& p, int dr, int ds, const mpz_class& scale) {
    BPoly b;
    for (const auto& t : p.terms()) {
        int i = t.er - dr, j = t.es - ds;
        if (i < 0 || j < 0) throw CoeffError("negative exponent in polynomial conversion");
        if ((int)b.size() <= i) b.resize(i + 1);
        if ((int)b[i].size() <= j) b[i].resize(j + 1);
        mpq_class v = t.c * scale;
        b[i][j] = v.get_num();
    }
    return b;
}

BPoly to_bpoly(const LaurentPoly2& p) { return to_bpoly(p, p.min_er(), p.min_es(), denominator_lcm(p)); }

LaurentPoly2 from_bpoly(const BPoly& b, int dr, int ds, const mpq_class& scale) {
    std::vector<LaurentPoly2::Term> terms;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b[i].size(); ++j)
            if (sgn(b[i][j]) != 0) terms.push_back({(int)i + dr, (int)j + ds, mpq_class(b[i][j]) * scale});
    LaurentPoly2 out;
    for (auto& t : terms) out += LaurentPoly2::monomial(t.er, t.es, t.c);
    return out;
}

LaurentPoly2 exact_divide(const LaurentPoly2& a, const LaurentPoly2& g) {
    int ar = a.min_er(), as = a.min_es();
    int gr = g.min_er(), gs = g.min_es();
    mpz_class la = denominator_lcm(a);
    BPoly gi = to_bpoly(g, gr, gs, denominator_lcm(g));
    mpz_class cz = 0;
    for (const auto& u : gi) {
        mpz_class cu = zcontent(u);
        mpz_gcd(cz.get_mpz_t(), cz.get_mpz_t(), cu.get_mpz_t());
    }
    for (auto& u : gi) zdivexact(u, cz);
    // g = cg * gi for a rational cg, read off the leading coefficients
    mpq_class cg = g.leading().c / mpq_class(gi.back().back());
    BPoly q = bexact(to_bpoly(a, ar, as, la), gi);
    return from_bpoly(q, ar - gr, as - gs, 1 / (cg * la));
}

mpz_class integer_gcd_of_numerators(const LaurentPoly2& p) {
    mpz_class g = 0;
    for (const auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_num_mpz_t());
    return g;
}

}  // namespace

// ---------------- LaurentPoly2 ----------------

LaurentPoly2::LaurentPoly2(const mpq_class& c) {
    if (sgn(c) != 0) terms_.push_back({0, 0, c});
}

LaurentPoly2 LaurentPoly2::monomial(int er, int es, const mpq_class& c) {
    LaurentPoly2 p;
    if (sgn(c) != 0) p.terms_.push_back({er, es, c});
    return p;
}

bool LaurentPoly2::is_one() const {
    return terms_.size() == 1 && terms_[0].er == 0 && terms_[0].es == 0 && terms_[0].c == 1;
}

bool LaurentPoly2::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].er == 0 && terms_[0].es == 0);
}

int LaurentPoly2::min_er() const {
    int m = 0;
    bool first = true;
    for (const auto& t : terms_) {
        if (first || t.er < m) m = t.er;
        first = false;
    }
    return m;
}

int LaurentPoly2::min_es() const {
    int m = 0;
    bool first = true;
    for (const auto& t : terms_) {
        if (first || t.es < m) m = t.es;
        first = false;
    }
    return m;
}

void LaurentPoly2::from_unsorted(std::vector<Term>&& t) {
    std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) {
        return a.er != b.er ? a.er < b.er : a.es < b.es;
    });
    terms_.clear();
    for (auto& x : t) {
        if (!terms_.empty() && terms_.back().er == x.er && terms_.back().es == x.es) {
            terms_.back().c += x.c;
        } else {
            if (!terms_.empty() && sgn(terms_.back().c) == 0) terms_.pop_back();
            terms_.push_back(std::move(x));
        }
    }
    if (!terms_.empty() && sgn(terms_.back().c) == 0) terms_.pop_back();
}

LaurentPoly2 LaurentPoly2::operator-() const {
    LaurentPoly2 r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

namespace {
template <bool Sub>
void merge_into(std::vector<LaurentPoly2::Term>& out, const std::vector<LaurentPoly2::Term>& a,
                const std::vector<LaurentPoly2::Term>& b) {
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && (a[i].er < b[j].er || (a[i].er == b[j].er && a[i].es < b[j].es)))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].er < a[i].er || (b[j].er == a[i].er && b[j].es < a[i].es)) {
            out.push_back(b[j]);
            if (Sub) out.back().c = -out.back().c;
            ++j;
        } else {
            mpq_class c = Sub ? mpq_class(a[i].c - b[j].c) : mpq_class(a[i].c + b[j].c);
            if (sgn(c) != 0) out.push_back({a[i].er, a[i].es, std::move(c)});
            ++i;
            ++j;
        }
    }
}
}  // namespace

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    std::vector<Term> out;
    merge_into<false>(out, terms_, o.terms_);
    terms_ = std::move(out);
    return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
    if (o.terms_.empty()) return *this;
    std::vector<Term> out;
    merge_into<true>(out, terms_, o.terms_);
    terms_ = std::move(out);
    return *this;
}

LaurentPoly2& LaurentPoly2::operator*=(const mpq_class& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.c *= c;
    return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
    LaurentPoly2 r;
    if (a.terms_.empty() || b.terms_.empty()) return r;
    if (a.terms_.size() == 1) {
        const auto& m = a.terms_[0];
        r.terms_ = b.terms_;
        for (auto& t : r.terms_) {
            t.er += m.er;
            t.es += m.es;
            t.c *= m.c;
        }
        return r;
    }
    if (b.terms_.size() == 1) return b * a;
    std::vector<LaurentPoly2::Term> t;
    t.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) t.push_back({x.er + y.er, x.es + y.es, x.c * y.c});
    r.from_unsorted(std::move(t));
    return r;
}

bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        const auto &x = a.terms_[i], &y = b.terms_[i];
        if (x.er != y.er || x.es != y.es || x.c != y.c) return false;
    }
    return true;
}

LaurentPoly2 LaurentPoly2::shifted(int dr, int ds) const {
    LaurentPoly2 r = *this;
    for (auto& t : r.terms_) {
        t.er += dr;
        t.es += ds;
    }
    return r;
}

LaurentPoly2 LaurentPoly2::swapped() const {
    std::vector<Term> t = terms_;
    for (auto& x : t) std::swap(x.er, x.es);
    LaurentPoly2 r;
    r.from_unsorted(std::move(t));
    return r;
}

LaurentPoly2 LaurentPoly2::pow(int n) const {
    if (n < 0) throw CoeffError("negative power of a Laurent polynomial");
    LaurentPoly2 r(1), b = *this;
    while (n) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

std::size_t LaurentPoly2::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& t : terms_) {
        h ^= std::hash<long>()(((long)t.er << 20) ^ (long)t.es) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= std::hash<std::string>()(t.c.get_str());
    }
    return h;
}

namespace {
void append_term(std::ostringstream& os, const LaurentPoly2::Term& t, bool first) {
    mpz_class c = t.c.get_num();
    if (first) {
        if (c < 0) os << "-";
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    mpz_class a = abs(c);
    bool has_var = t.er != 0 || t.es != 0;
    bool need_star = false;
    if (!has_var || a != 1) {
        os << a.get_str();
        need_star = true;
    }
    auto var = [&](char v, int e) {
        if (e == 0) return;
        if (need_star) os << "*";
        os << v;
        if (e != 1) os << "^" << e;
        need_star = true;
    };
    var('r', t.er);
    var('s', t.es);
}

std::string integer_poly_str(const LaurentPoly2& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    const auto& ts = p.terms();
    for (std::size_t k = ts.size(); k-- > 0;) append_term(os, ts[k], k + 1 == ts.size());
    return os.str();
}

bool has_integer_coeffs(const LaurentPoly2& p) {
    for (const auto& t : p.terms())
        if (t.c.get_den() != 1) return false;
    return true;
}
}  // namespace

std::string LaurentPoly2::str() const {
    if (has_integer_coeffs(*this)) return integer_poly_str(*this);
    mpz_class l = denominator_lcm(*this);
    LaurentPoly2 n = *this;
    n *= mpq_class(l);
    return "(" + integer_poly_str(n) + ") / (" + l.get_str() + ")";
}

// ---------------- gcd ----------------

LaurentPoly2 poly_gcd(const LaurentPoly2& a, const LaurentPoly2& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly2(1);
    BPoly g;
    if (a.is_zero()) {
        g = bprimitive(to_bpoly(b));
    } else if (b.is_zero()) {
        g = bprimitive(to_bpoly(a));
    } else {
        g = bgcd(to_bpoly(a), to_bpoly(b));
    }
    LaurentPoly2 out = from_bpoly(g, 0, 0, 1);
    out = out.shifted(-out.min_er(), -out.min_es());
    out *= mpq_class(1 / out.leading().c);
    return out;
}

// ---------------- RatFunc2 ----------------

RatFunc2::RatFunc2(const LaurentPoly2& num, const LaurentPoly2& den) : num_(num), den_(den) { normalize(); }

void RatFunc2::normalize() {
    if (den_.is_zero()) throw CoeffError("division by zero in Q(r,s)");
    if (num_.is_zero()) {
        den_ = LaurentPoly2(1);
        return;
    }
    if (den_.is_monomial()) {
        const auto& t = den_.terms()[0];
        num_ = num_.shifted(-t.er, -t.es);
        num_ *= mpq_class(1 / t.c);
        den_ = LaurentPoly2(1);
        return;
    }
    int dr = den_.min_er(), ds = den_.min_es();
    if (dr != 0 || ds != 0) {
        den_ = den_.shifted(-dr, -ds);
        num_ = num_.shifted(-dr, -ds);
    }
    LaurentPoly2 g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = exact_divide(num_, g);
        den_ = exact_divide(den_, g);
        int er = den_.min_er(), es = den_.min_es();
        if (er != 0 || es != 0) {
            den_ = den_.shifted(-er, -es);
            num_ = num_.shifted(-er, -es);
        }
    }
    if (den_.is_monomial()) {
        const auto& t = den_.terms()[0];
        num_ = num_.shifted(-t.er, -t.es);
        num_ *= mpq_class(1 / t.c);
        den_ = LaurentPoly2(1);
        return;
    }
    mpq_class lc = den_.leading().c;
    if (lc != 1) {
        mpq_class inv = 1 / lc;
        num_ *= inv;
        den_ *= inv;
    }
}

RatFunc2 RatFunc2::operator-() const {
    RatFunc2 r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc2& RatFunc2::operator+=(const RatFunc2& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_.is_one() && o.den_.is_one()) {
        num_ += o.num_;
        return *this;
    }
    if (o.den_.is_one()) {
        num_ += o.num_ * den_;  // gcd stays 1
        if (num_.is_zero()) den_ = LaurentPoly2(1);
        return *this;
    }
    if (den_.is_one()) {
        LaurentPoly2 n = num_ * o.den_ + o.num_;
        num_ = std::move(n);
        den_ = o.den_;
        if (num_.is_zero()) den_ = LaurentPoly2(1);
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
        normalize();
        return *this;
    }
    LaurentPoly2 g = poly_gcd(den_, o.den_);
    if (g.is_constant()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    } else {
        LaurentPoly2 a = exact_divide(den_, g), b = exact_divide(o.den_, g);
        num_ = num_ * b + o.num_ * a;
        den_ = den_ * b;
    }
    normalize();
    return *this;
}

RatFunc2& RatFunc2::operator-=(const RatFunc2& o) { return *this += -o; }

RatFunc2& RatFunc2::operator*=(const RatFunc2& o) {
    if (is_zero() || o.is_zero()) {
        num_ = LaurentPoly2();
        den_ = LaurentPoly2(1);
        return *this;
    }
    if (den_.is_one() && o.den_.is_one()) {
        num_ = num_ * o.num_;
        return *this;
    }
    if (o.num_.is_monomial()) {
        const auto& t = o.num_.terms()[0];
        num_ = num_.shifted(t.er, t.es);
        num_ *= t.c;
        if (o.den_.is_one()) return *this;
        // num_ is coprime to den_; o.num_ is a unit; multiply denominators
        if (den_.is_one()) {
            den_ = o.den_;
            normalize();
            return *this;
        }
        LaurentPoly2 g = poly_gcd(num_, o.den_);
        LaurentPoly2 n = g.is_constant() ? num_ : exact_divide(num_, g);
        LaurentPoly2 d = g.is_constant() ? o.den_ : exact_divide(o.den_, g);
        num_ = std::move(n);
        den_ = den_ * d;
        normalize();
        return *this;
    }
    LaurentPoly2 g1 = den_.is_one() ? LaurentPoly2(1) : poly_gcd(o.num_, den_);
    LaurentPoly2 g2 = o.den_.is_one() ? LaurentPoly2(1) : poly_gcd(num_, o.den_);
    LaurentPoly2 a = g2.is_constant() ? num_ : exact_divide(num_, g2);
    LaurentPoly2 b = g1.is_constant() ? o.num_ : exact_divide(o.num_, g1);
    LaurentPoly2 c = g1.is_constant() ? den_ : exact_divide(den_, g1);
    LaurentPoly2 d = g2.is_constant() ? o.den_ : exact_divide(o.den_, g2);
    num_ = a * b;
    den_ = c * d;
    normalize();
    return *this;
}

RatFunc2 RatFunc2::inverse() const {
    if (is_zero()) throw CoeffError("division by zero in Q(r,s)");
    return RatFunc2(den_, num_);
}

RatFunc2& RatFunc2::operator/=(const RatFunc2& o) { return *this *= o.inverse(); }

RatFunc2 RatFunc2::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    RatFunc2 r(1), b = *this;
    while (n) {
        if (n & 1) r *= b;
        n >>= 1;
        if (n) b *= b;
    }
    return r;
}

RatFunc2 RatFunc2::swapped() const { return RatFunc2(num_.swapped(), den_.swapped()); }

std::string RatFunc2::str() const {
    if (den_.is_one()) return num_.str();
    mpz_class l = 1;
    mpz_lcm(l.get_mpz_t(), denominator_lcm(num_).get_mpz_t(),
            denominator_lcm(den_).get_mpz_t());
    LaurentPoly2 n = num_, d = den_;
    n *= mpq_class(l);
    d *= mpq_class(l);
    mpz_class g = 0;
    mpz_gcd(g.get_mpz_t(), integer_gcd_of_numerators(n).get_mpz_t(), integer_gcd_of_numerators(d).get_mpz_t());
    if (g != 1) {
        n *= mpq_class(1, g);
        d *= mpq_class(1, g);
    }
    return "(" + integer_poly_str(n) + ") / (" + integer_poly_str(d) + ")";
}

namespace {
struct Parser {
    std::string_view s;
    std::size_t i = 0;

    void ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eat(char c) {
        ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const char* what) {
        throw CoeffError(std::string("coefficient parse error (") + what + ") in \"" + std::string(s) + "\"");
    }
    long integer() {
        ws();
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
        std::size_t b = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (b == i) fail("expected integer");
        long v = std::stol(std::string(s.substr(b, i - b)));
        return neg ? -v : v;
    }
    mpz_class bigint() {
        ws();
        std::size_t b = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (b == i) fail("expected digits");
        return mpz_class(std::string(s.substr(b, i - b)));
    }
    // factor := digits | r[^int] | s[^int]
    LaurentPoly2 factor() {
        ws();
        if (i < s.size() && (s[i] == 'r' || s[i] == 's')) {
            char v = s[i++];
            int e = 1;
            if (eat('^')) e = (int)integer();
            return v == 'r' ? LaurentPoly2::monomial(e, 0) : LaurentPoly2::monomial(0, e);
        }
        if (i < s.size() && std::isdigit((unsigned char)s[i])) return LaurentPoly2(mpq_class(bigint()));
        if (eat('(')) {
            LaurentPoly2 p = poly();
            if (!eat(')')) fail("expected )");
            return p;
        }
        fail("expected factor");
    }
    LaurentPoly2 term() {
        LaurentPoly2 t = factor();
        while (eat('*')) t = t * factor();
        return t;
    }
    LaurentPoly2 poly() {
        ws();
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
        LaurentPoly2 p = term();
        if (neg) p = -p;
        for (;;) {
            ws();
            if (i < s.size() && s[i] == '+') {
                ++i;
                p += term();
            } else if (i < s.size() && s[i] == '-') {
                ++i;
                p -= term();
            } else {
                break;
            }
        }
        return p;
    }
};
}  // namespace

RatFunc2 RatFunc2::parse(std::string_view text) {
    Parser p{text};
    LaurentPoly2 n = p.poly();
    LaurentPoly2 d(1);
    if (p.eat('/')) d = p.poly();
    p.ws();
    if (p.i != text.size()) p.fail("trailing characters");
    return RatFunc2(n, d);
}

// ---------------- cyclotomic arithmetic ----------------

std::vector<long> cyclotomic_polynomial(int n) {
    if (n < 1) throw CoeffError("cyclotomic order must be positive");
    // x^n - 1 divided by Phi_d for every proper divisor d
    UPoly p(n + 1);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d) continue;
        std::vector<long> pd = cyclotomic_polynomial(d);
        UPoly q(pd.begin(), pd.end());
        p = uexact(p, q);
    }
    std::vector<long> out;
    for (auto& c : p) out.push_back(c.get_num().get_si());
    return out;
}

const CycloContext* cyclo_context(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycloContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second.get();
    auto ctx = std::make_unique<CycloContext>();
    ctx->n = n;
    auto phi = cyclotomic_polynomial(n);
    ctx->degree = (int)phi.size() - 1;
    for (long c : phi) ctx->phi.emplace_back(c);
    ctx->powers.resize(n);
    std::vector<mpq_class> cur(ctx->degree);
    if (ctx->degree > 0) cur[0] = 1;
    for (int k = 0; k < n; ++k) {
        ctx->powers[k] = cur;
        // multiply by x and reduce
        std::vector<mpq_class> nxt(ctx->degree);
        mpq_class top = ctx->degree ? cur[ctx->degree - 1] : mpq_class(0);
        for (int j = ctx->degree - 1; j > 0; --j) nxt[j] = cur[j - 1];
        if (ctx->degree) nxt[0] = 0;
        for (int j = 0; j < ctx->degree; ++j) nxt[j] -= top * ctx->phi[j];
        cur = std::move(nxt);
    }
    const CycloContext* raw = ctx.get();
    cache.emplace(n, std::move(ctx));
    return raw;
}

CycloNum::CycloNum(const CycloContext* ctx, const mpq_class& v) : ctx_(ctx), c_(ctx->degree) {
    if (ctx->degree) c_[0] = v;
}

CycloNum CycloNum::theta_pow(const CycloContext* ctx, long k) {
    long m = ((k % ctx->n) + ctx->n) % ctx->n;
    CycloNum r(ctx);
    r.c_ = ctx->powers[m];
    return r;
}

bool CycloNum::is_zero() const {
    for (const auto& x : c_)
        if (sgn(x) != 0) return false;
    return true;
}

bool CycloNum::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

CycloNum CycloNum::operator-() const {
    CycloNum r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
    if (!ctx_) return *this = o;
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
    if (!ctx_) return *this = -o;
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
    const int d = ctx_->degree;
    std::vector<mpq_class> prod(2 * d);
    for (int i = 0; i < d; ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (int j = 0; j < d; ++j)
            if (sgn(o.c_[j]) != 0) prod[i + j] += c_[i] * o.c_[j];
    }
    for (int k = 2 * d - 1; k >= d; --k) {
        if (sgn(prod[k]) == 0) continue;
        mpq_class top = prod[k];
        for (int j = 0; j < d; ++j) prod[k - d + j] -= top * ctx_->phi[j];
        prod[k] = 0;
    }
    prod.resize(d);
    c_ = std::move(prod);
    return *this;
}

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw CoeffError("division by zero in cyclotomic field");
    // extended Euclid on (a, Phi)
    UPoly a(c_.begin(), c_.end());
    utrim(a);
    UPoly m(ctx_->phi.begin(), ctx_->phi.end());
    UPoly r0 = m, r1 = a, s0 = {}, s1 = {1};
    while (!r1.empty()) {
        UPoly q, rem;
        udivmod(r0, r1, q, rem);
        UPoly s2 = usub(s0, umul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant
    mpq_class k = r0[0];
    CycloNum out(ctx_);
    UPoly q, rem;
    udivmod(s0, m, q, rem);
    for (std::size_t i = 0; i < rem.size(); ++i) out.c_[i] = rem[i] / k;
    return out;
}

CycloNum& CycloNum::operator/=(const CycloNum& o) { return *this *= o.inverse(); }

bool operator==(const CycloNum& a, const CycloNum& b) {
    if (a.c_.size() != b.c_.size()) return a.is_zero() && b.is_zero();
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

CycloNum CycloNum::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    CycloNum r(ctx_, 1), b = *this;
    while (n) {
        if (n & 1) r *= b;
        n >>= 1;
        if (n) b *= b;
    }
    return r;
}

std::string CycloNum::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (sgn(c_[k]) == 0) continue;
        mpq_class a = abs(c_[k]);
        if (first) {
            if (c_[k] < 0) os << "-";
        } else {
            os << (c_[k] < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "t";
            if (k != 1) os << "^" << k;
        }
    }
    return first ? "0" : os.str();
}

// ---------------- specialization ----------------

std::vector<std::string> validate(const SpecParams& p) {
    std::vector<std::string> errs;
    auto mod = [&](long v) { return ((v % p.ell) + p.ell) % p.ell; };
    if (p.ell < 3 || p.ell % 2 == 0) errs.push_back("ell must be an odd integer >= 3");
    if (p.ell >= 1) {
        long d = p.y - p.z;
        if (std::gcd(std::abs(d), (long)p.ell) != 1) errs.push_back("gcd(y - z, ell) must be 1 (r s^-1 primitive)");
        if (mod(2 * d) == 0) errs.push_back("2(y - z) = 0 mod ell (r^2 = s^2)");
        if (mod(3 * d) == 0) errs.push_back("3(y - z) = 0 mod ell (r^3 = s^3)");
    }
    return errs;
}

void require_valid(const SpecParams& p) {
    auto e = validate(p);
    if (e.empty()) return;
    std::string msg = "invalid parameters (ell=" + std::to_string(p.ell) + ", y=" + std::to_string(p.y) +
                      ", z=" + std::to_string(p.z) + "):";
    for (auto& x : e) msg += " " + x + ";";
    throw CoeffError(msg);
}

CycloNum specialize(const LaurentPoly2& f, const EvalPoint& at) {
    const CycloContext* ctx = cyclo_context(at.n);
    CycloNum out(ctx);
    std::vector<mpq_class> acc(ctx->degree);
    for (const auto& t : f.terms()) {
        long k = (long)t.er * at.rexp + (long)t.es * at.sexp;
        k = ((k % at.n) + at.n) % at.n;
        const auto& pw = ctx->powers[k];
        for (int j = 0; j < ctx->degree; ++j)
            if (sgn(pw[j]) != 0) acc[j] += t.c * pw[j];
    }
    for (int j = 0; j < ctx->degree; ++j) {
        if (sgn(acc[j]) == 0) continue;
        out += CycloNum::theta_pow(ctx, j) * CycloNum(ctx, acc[j]);
    }
    return out;
}

CycloNum specialize(const RatFunc2& f, const EvalPoint& at) {
    CycloNum n = specialize(f.num(), at);
    if (f.is_laurent()) return n;
    CycloNum d = specialize(f.den(), at);
    if (d.is_zero())
        throw CoeffError("specialization undefined: denominator factor " + f.den().str() + " vanishes at r = t^" +
                         std::to_string(at.rexp) + ", s = t^" + std::to_string(at.sexp) + " (order " +
                         std::to_string(at.n) + ")");
    return n / d;
}

CycloNum specialize(const RatFunc2& f, const SpecParams& p) {
    require_valid(p);
    return specialize(f, EvalPoint::from(p));
}

// ---------------- q-combinatorics ----------------

RatFunc2 qnumber(int n, const RatFunc2& t) {
    if (n < 0) throw CoeffError("qnumber of a negative integer");
    RatFunc2 sum(0), pw(1);
    for (int k = 0; k < n; ++k) {
        sum += pw;
        pw *= t;
    }
    return sum;
}

RatFunc2 qfactorial(int n, const RatFunc2& t) {
    RatFunc2 f(1);
    for (int k = 2; k <= n; ++k) f *= qnumber(k, t);
    return f;
}

RatFunc2 qbinomial(int m, int n, const RatFunc2& t) {
    if (n < 0 || n > m) throw CoeffError("qbinomial requires 0 <= n <= m");
    std::vector<RatFunc2> row{RatFunc2(1)};
    std::vector<RatFunc2> tp{RatFunc2(1)};
    for (int k = 1; k <= m; ++k) tp.push_back(tp.back() * t);
    for (int k = 1; k <= m; ++k) {
        std::vector<RatFunc2> nxt(k + 1);
        for (int i = 0; i <= k; ++i) {
            RatFunc2 v(0);
            if (i >= 1) v += row[i - 1];
            if (i < k) v += tp[i] * row[i];
            nxt[i] = std::move(v);
        }
        row = std::move(nxt);
    }
    return row[n];
}

CycloNum qbinomial_at_root(int m, int n, const CycloNum& t) {
    if (n < 0 || n > m) throw CoeffError("qbinomial requires 0 <= n <= m");
    const CycloContext* ctx = t.context();
    std::vector<CycloNum> row{CycloNum(ctx, 1)};
    std::vector<CycloNum> tp{CycloNum(ctx, 1)};
    for (int k = 1; k <= m; ++k) tp.push_back(tp.back() * t);
    for (int k = 1; k <= m; ++k) {
        std::vector<CycloNum> nxt(k + 1, CycloNum(ctx));
        for (int i = 0; i <= k; ++i) {
            if (i >= 1) nxt[i] += row[i - 1];
            if (i < k) nxt[i] += tp[i] * row[i];
        }
        row = std::move(nxt);
    }
    return row[n];
}

}  // namespace uqf4
