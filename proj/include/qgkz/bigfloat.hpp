#pragma once

#include "qgkz/polynomial.hpp"
#include "qgkz/rational.hpp"

#include <mpfr.h>
#include <string>
#include <vector>

namespace qgkz {

// Arbitrary-precision real, thin RAII wrapper over mpfr_t.
// Precision travels with the value; binary ops use the max operand precision.
class BigFloat {
public:
    static mpfr_prec_t default_prec; // bits

    BigFloat() { mpfr_init2(v_, default_prec); mpfr_set_zero(v_, 1); }
    static BigFloat with_prec(mpfr_prec_t prec) {
        BigFloat r;
        mpfr_set_prec(r.v_, prec);
        mpfr_set_zero(r.v_, 1);
        return r;
    }
    BigFloat(double d) { mpfr_init2(v_, default_prec); mpfr_set_d(v_, d, MPFR_RNDN); }
    BigFloat(int i) { mpfr_init2(v_, default_prec); mpfr_set_si(v_, i, MPFR_RNDN); }
    BigFloat(const Rat& r) {
        mpfr_init2(v_, default_prec);
        mpfr_set_q(v_, r.get_mpq_t(), MPFR_RNDN);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(int digits = 30) const;

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r = BigFloat::with_prec(std::max(a.prec(), b.prec()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r = BigFloat::with_prec(std::max(a.prec(), b.prec()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r = BigFloat::with_prec(std::max(a.prec(), b.prec()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r = BigFloat::with_prec(std::max(a.prec(), b.prec()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const {
        BigFloat r = BigFloat::with_prec(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator/=(const BigFloat& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }

    friend BigFloat abs(const BigFloat& a) {
        BigFloat r = BigFloat::with_prec(a.prec());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat sqrt(const BigFloat& a) {
        BigFloat r = BigFloat::with_prec(a.prec());
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat exp(const BigFloat& a) {
        BigFloat r = BigFloat::with_prec(a.prec());
        mpfr_exp(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat log(const BigFloat& a) {
        BigFloat r = BigFloat::with_prec(a.prec());
        mpfr_log(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat sin(const BigFloat& a) {
        BigFloat r = BigFloat::with_prec(a.prec());
        mpfr_sin(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat cos(const BigFloat& a) {
        BigFloat r = BigFloat::with_prec(a.prec());
        mpfr_cos(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat atan2(const BigFloat& y, const BigFloat& x) {
        BigFloat r = BigFloat::with_prec(std::max(y.prec(), x.prec()));
        mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat hypot(const BigFloat& x, const BigFloat& y) {
        BigFloat r = BigFloat::with_prec(std::max(y.prec(), x.prec()));
        mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat pow_int(const BigFloat& a, long e) {
        BigFloat r = BigFloat::with_prec(a.prec());
        mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }
    static BigFloat pi(mpfr_prec_t prec = default_prec) {
        BigFloat r = BigFloat::with_prec(prec);
        mpfr_const_pi(r.raw(), MPFR_RNDN);
        return r;
    }

private:
    mpfr_t v_;
};

// Complex on top of BigFloat; principal branches throughout.
class BigComplex {
public:
    BigFloat re, im;

    BigComplex() = default;
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    BigComplex(double r, double i = 0.0) : re(r), im(i) {}
    explicit BigComplex(const Rat& r) : re(r), im(0) {}
    explicit BigComplex(const BigFloat& r) : re(r), im(0) {}
    BigComplex(int r) : re(r), im(0) {}

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigFloat d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    BigComplex operator-() const { return {-re, -im}; }
    BigComplex& operator+=(const BigComplex& o) { return *this = *this + o; }
    BigComplex& operator-=(const BigComplex& o) { return *this = *this - o; }
    BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }
    BigComplex& operator/=(const BigComplex& o) { return *this = *this / o; }
    friend bool operator==(const BigComplex& a, const BigComplex& b) {
        return a.re == b.re && a.im == b.im;
    }

    BigComplex conj() const { return {re, -im}; }
    friend BigFloat abs(const BigComplex& a) { return hypot(a.re, a.im); }
    friend BigFloat arg(const BigComplex& a) { return atan2(a.im, a.re); }

    friend BigComplex sqrt(const BigComplex& a);
    friend BigComplex exp(const BigComplex& a) {
        BigFloat m = exp(a.re);
        return {m * cos(a.im), m * sin(a.im)};
    }
    friend BigComplex log(const BigComplex& a) { return {log(abs(a)), arg(a)}; }
    friend BigComplex pow_int(BigComplex a, long e);
};

inline BigComplex sqrt(const BigComplex& a) {
    if (a.im.is_zero()) {
        if (a.re.sign() >= 0) return {sqrt(a.re), BigFloat(0)};
        return {BigFloat(0), sqrt(-a.re)};
    }
    BigFloat r = abs(a);
    BigFloat u = sqrt((r + abs(a.re)) / BigFloat(2));
    if (a.re.sign() >= 0) {
        BigFloat v = a.im / (u * BigFloat(2));
        return {u, v};
    }
    BigFloat v = a.im.sign() >= 0 ? u : -u;
    BigFloat w = a.im / (v * BigFloat(2));
    return {w, v};
}

inline BigComplex pow_int(BigComplex a, long e) {
    if (e == 0) return BigComplex(1);
    bool inv = e < 0;
    unsigned long n = inv ? -e : e;
    BigComplex acc(1), b = a;
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return inv ? BigComplex(1) / acc : acc;
}

// Roots of a monic-normalizable complex polynomial (Durand-Kerner).
std::vector<BigComplex> poly_roots(const std::vector<BigComplex>& coeffs,
                                   int max_iter = 200);
std::vector<BigComplex> poly_roots(const QPoly& p);

} // namespace qgkz
