// Exact coefficient arithmetic over Q(r,s) and Q(theta).
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace uqf4 {

struct CoeffError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite sum of c * r^er * s^es, terms kept sorted by (er, es) ascending.
class LaurentPoly2 {
public:
    struct Term {
        int er = 0;
        int es = 0;
        mpq_class c;
    };

    LaurentPoly2() = default;
    explicit LaurentPoly2(const mpq_class& c);
    explicit LaurentPoly2(long c) : LaurentPoly2(mpq_class(c)) {}

    static LaurentPoly2 monomial(int er, int es, const mpq_class& c = 1);
    static LaurentPoly2 r() { return monomial(1, 0); }
    static LaurentPoly2 s() { return monomial(0, 1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const { return terms_.back(); }

    int min_er() const;
    int min_es() const;

    LaurentPoly2 operator-() const;
    LaurentPoly2& operator+=(const LaurentPoly2& o);
    LaurentPoly2& operator-=(const LaurentPoly2& o);
    LaurentPoly2& operator*=(const mpq_class& c);
    friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
    friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
    friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
    friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b);

    LaurentPoly2 shifted(int dr, int ds) const;
    LaurentPoly2 swapped() const;  // r <-> s
    LaurentPoly2 pow(int n) const;

    // Integer-coefficient Laurent text such as "3*r^2*s^-1 - 2".
    std::string str() const;
    std::size_t hash() const;

private:
    friend class RatFunc2;
    std::vector<Term> terms_;
    void from_unsorted(std::vector<Term>&& t);
};

// Element of Q(r,s) as num/den.  Canonical: den is a genuine polynomial not
// divisible by r or s, gcd(num, den) = 1 and den's greatest term has coefficient 1.
class RatFunc2 {
public:
    RatFunc2() = default;
    RatFunc2(long c) : num_(c), den_(1) {}
    explicit RatFunc2(const mpq_class& c) : num_(c), den_(1) {}
    RatFunc2(const LaurentPoly2& p) : num_(p), den_(1) {}
    RatFunc2(const LaurentPoly2& num, const LaurentPoly2& den);

    static RatFunc2 monomial(int er, int es) { return RatFunc2(LaurentPoly2::monomial(er, es)); }
    static RatFunc2 r() { return monomial(1, 0); }
    static RatFunc2 s() { return monomial(0, 1); }

    const LaurentPoly2& num() const { return num_; }
    const LaurentPoly2& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }

    RatFunc2 operator-() const;
    RatFunc2& operator+=(const RatFunc2& o);
    RatFunc2& operator-=(const RatFunc2& o);
    RatFunc2& operator*=(const RatFunc2& o);
    RatFunc2& operator/=(const RatFunc2& o);
    friend RatFunc2 operator+(RatFunc2 a, const RatFunc2& b) { return a += b; }
    friend RatFunc2 operator-(RatFunc2 a, const RatFunc2& b) { return a -= b; }
    friend RatFunc2 operator*(RatFunc2 a, const RatFunc2& b) { return a *= b; }
    friend RatFunc2 operator/(RatFunc2 a, const RatFunc2& b) { return a /= b; }
    friend bool operator==(const RatFunc2& a, const RatFunc2& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RatFunc2 inverse() const;
    RatFunc2 pow(int n) const;
    RatFunc2 swapped() const;

    std::string str() const;
    static RatFunc2 parse(std::string_view text);

private:
    LaurentPoly2 num_;
    LaurentPoly2 den_{1};
    void normalize();
};

// Gcd of two polynomials (Laurent shifts are ignored), normalized as a RatFunc2 denominator.
LaurentPoly2 poly_gcd(const LaurentPoly2& a, const LaurentPoly2& b);

// Arithmetic in Q[x]/Phi_n(x).
struct CycloContext {
    int n = 0;
    int degree = 0;                 // phi(n)
    std::vector<mpq_class> phi;     // monic, low to high
    std::vector<std::vector<mpq_class>> powers;  // x^k mod Phi_n for 0 <= k < n
};

const CycloContext* cyclo_context(int n);
std::vector<long> cyclotomic_polynomial(int n);

class CycloNum {
public:
    CycloNum() = default;
    explicit CycloNum(const CycloContext* ctx) : ctx_(ctx), c_(ctx->degree) {}
    CycloNum(const CycloContext* ctx, const mpq_class& v);

    static CycloNum theta_pow(const CycloContext* ctx, long k);

    const CycloContext* context() const { return ctx_; }
    const std::vector<mpq_class>& coords() const { return c_; }
    bool is_zero() const;
    bool is_one() const;

    CycloNum operator-() const;
    CycloNum& operator+=(const CycloNum& o);
    CycloNum& operator-=(const CycloNum& o);
    CycloNum& operator*=(const CycloNum& o);
    CycloNum& operator/=(const CycloNum& o);
    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
    friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }
    friend bool operator==(const CycloNum& a, const CycloNum& b);

    CycloNum inverse() const;
    CycloNum pow(long n) const;
    std::string str() const;

private:
    const CycloContext* ctx_ = nullptr;
    std::vector<mpq_class> c_;
};

// r = theta^y, s = theta^z with theta a primitive ell-th root of unity.
struct SpecParams {
    int ell = 5;
    int y = 1;
    int z = 2;
};

// Empty when valid; otherwise one message per violated condition.
std::vector<std::string> validate(const SpecParams& p);
void require_valid(const SpecParams& p);

// Evaluation point inside Q(eta), eta a primitive n-th root: r = eta^rexp, s = eta^sexp.
struct EvalPoint {
    int n = 5;
    int rexp = 1;
    int sexp = 2;
    static EvalPoint from(const SpecParams& p) { return {p.ell, p.y, p.z}; }
    EvalPoint swapped() const { return {n, sexp, rexp}; }
};

CycloNum specialize(const LaurentPoly2& f, const EvalPoint& at);
CycloNum specialize(const RatFunc2& f, const EvalPoint& at);
CycloNum specialize(const RatFunc2& f, const SpecParams& p);

RatFunc2 qnumber(int n, const RatFunc2& t);
RatFunc2 qfactorial(int n, const RatFunc2& t);
RatFunc2 qbinomial(int m, int n, const RatFunc2& t);
CycloNum qbinomial_at_root(int m, int n, const CycloNum& t);

}  // namespace uqf4
