#pragma once

#include "qgkz/rational.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <vector>

namespace qgkz {

// Dense univariate polynomial, coefficient index = degree.
// Zero polynomial is the empty coefficient list.
template <typename T>
class Poly {
public:
    Poly() = default;
    explicit Poly(T c) : c_{std::move(c)} { trim(); }
    explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }

    static Poly monomial(int deg, T c = T(1)) {
        std::vector<T> v(deg + 1, T(0));
        v[deg] = std::move(c);
        return Poly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const std::vector<T>& coeffs() const { return c_; }
    T coeff(int k) const { return (k >= 0 && k < (int)c_.size()) ? c_[k] : T(0); }
    T leading() const { return c_.empty() ? T(0) : c_.back(); }

    void set_coeff(int k, T v) {
        if (k >= (int)c_.size()) c_.resize(k + 1, T(0));
        c_[k] = std::move(v);
        trim();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<T> r = c_;
        for (auto& x : r) x = -x;
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const T& s) {
        std::vector<T> r = a.c_;
        for (auto& x : r) x *= s;
        return Poly(std::move(r));
    }
    friend Poly operator*(const T& s, const Poly& a) { return a * s; }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    // Euclidean division; requires T a field.
    static void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r) {
        assert(!b.is_zero());
        q = Poly();
        r = a;
        T lb = b.leading();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int d = r.degree() - b.degree();
            T f = r.leading() / lb;
            q.set_coeff(d, q.coeff(d) + f);
            std::vector<T> sub(r.c_);
            for (int i = 0; i <= b.degree(); ++i) sub[i + d] -= f * b.c_[i];
            r = Poly(std::move(sub));
        }
    }
    friend Poly operator/(const Poly& a, const Poly& b) {
        Poly q, r;
        divrem(a, b, q, r);
        return q;
    }
    friend Poly operator%(const Poly& a, const Poly& b) {
        Poly q, r;
        divrem(a, b, q, r);
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T((long)i);
        return Poly(std::move(r));
    }

    template <typename U>
    U eval(const U& x) const {
        U acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + U(c_[i]);
        return acc;
    }

    // p(z + a)
    Poly shift(const T& a) const {
        Poly res;
        Poly zpa(std::vector<T>{a, T(1)});
        Poly pw(T(1));
        for (size_t i = 0; i < c_.size(); ++i) {
            res += pw * c_[i];
            if (i + 1 < c_.size()) pw *= zpa;
        }
        return res;
    }

    // p(s * z)
    Poly scale_arg(const T& s) const {
        std::vector<T> r = c_;
        T pw(1);
        for (size_t i = 0; i < r.size(); ++i) {
            r[i] *= pw;
            pw *= s;
        }
        return Poly(std::move(r));
    }

    // Coefficients reversed: z^deg * p(1/z).
    Poly reversed() const {
        std::vector<T> r(c_.rbegin(), c_.rend());
        return Poly(std::move(r));
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * (T(1) / leading());
    }

    // Trailing-zero order: largest k with z^k | p.
    int valuation() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == T(0))) return (int)i;
        return -1;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }
    std::vector<T> c_;
};

using QPoly = Poly<Rat>;

template <typename T>
Poly<T> poly_gcd(Poly<T> a, Poly<T> b) {
    while (!b.is_zero()) {
        Poly<T> r = a % b;
        a = b;
        b = r.monic();
    }
    return a.monic();
}

// Reduced rational function num/den, den monic and coprime to num.
template <typename T>
class RatFuncT {
public:
    RatFuncT() : num_(), den_(T(1)) {}
    RatFuncT(Poly<T> n, Poly<T> d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
    explicit RatFuncT(Poly<T> n) : num_(std::move(n)), den_(T(1)) {}
    explicit RatFuncT(T c) : num_(std::move(c)), den_(T(1)) {}

    static RatFuncT var() { return RatFuncT(Poly<T>::monomial(1)); }

    const Poly<T>& num() const { return num_; }
    const Poly<T>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.degree() == 0; }

    friend RatFuncT operator+(const RatFuncT& a, const RatFuncT& b) {
        return RatFuncT(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFuncT operator-(const RatFuncT& a, const RatFuncT& b) {
        return RatFuncT(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFuncT operator-() const {
        RatFuncT r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFuncT operator*(const RatFuncT& a, const RatFuncT& b) {
        // cross-reduce first to keep intermediate degrees down
        Poly<T> g1 = poly_gcd(a.num_, b.den_);
        Poly<T> g2 = poly_gcd(b.num_, a.den_);
        Poly<T> n1 = a.num_ / g1, d2 = b.den_ / g1;
        Poly<T> n2 = b.num_ / g2, d1 = a.den_ / g2;
        RatFuncT r;
        r.num_ = n1 * n2;
        r.den_ = d1 * d2;
        r.normalize_leading();
        return r;
    }
    friend RatFuncT operator/(const RatFuncT& a, const RatFuncT& b) {
        assert(!b.is_zero());
        return a * RatFuncT(b.den_, b.num_);
    }
    RatFuncT& operator+=(const RatFuncT& o) { return *this = *this + o; }
    RatFuncT& operator-=(const RatFuncT& o) { return *this = *this - o; }
    RatFuncT& operator*=(const RatFuncT& o) { return *this = *this * o; }
    RatFuncT& operator/=(const RatFuncT& o) { return *this = *this / o; }

    friend RatFuncT operator*(const RatFuncT& a, const T& s) { return a * RatFuncT(s); }
    friend RatFuncT operator*(const T& s, const RatFuncT& a) { return a * RatFuncT(s); }

    friend bool operator==(const RatFuncT& a, const RatFuncT& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RatFuncT derivative() const {
        return RatFuncT(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    template <typename U>
    U eval(const U& x) const {
        return num_.eval(x) / den_.eval(x);
    }

    // f(g(z)) for rational g
    RatFuncT compose(const RatFuncT& g) const {
        RatFuncT n(T(0)), d(T(0));
        RatFuncT pw(T(1));
        int dn = num_.degree(), dd = den_.degree();
        int top = std::max(dn, dd);
        for (int i = 0; i <= top; ++i) {
            if (i <= dn) n += pw * num_.coeff(i);
            if (i <= dd) d += pw * den_.coeff(i);
            if (i < top) pw *= g;
        }
        return n / d;
    }

    // order of vanishing at finite rational point (negative for a pole)
    int order_at(const T& pt) const {
        Poly<T> lin(std::vector<T>{-pt, T(1)});
        int vn = 0, vd = 0;
        Poly<T> n = num_, d = den_;
        while (!n.is_zero() && (n % lin).is_zero()) { n = n / lin; ++vn; }
        while (!(d % lin).is_zero()) { d = d / lin; ++vd; }
        return vn - vd;
    }
    // order of vanishing at infinity in 1/z: deg den - deg num
    int order_at_infinity() const {
        assert(!is_zero());
        return den_.degree() - num_.degree();
    }

private:
    void reduce() {
        assert(!den_.is_zero());
        if (num_.is_zero()) {
            den_ = Poly<T>(T(1));
            return;
        }
        Poly<T> g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        normalize_leading();
    }
    void normalize_leading() {
        if (num_.is_zero()) {
            den_ = Poly<T>(T(1));
            return;
        }
        T l = den_.leading();
        if (!(l == T(1))) {
            T inv = T(1) / l;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }
    Poly<T> num_, den_;
};

using RatFunc = RatFuncT<Rat>;

inline RatFunc rf_var() { return RatFunc::var(); }
inline RatFunc rf_const(const Rat& c) { return RatFunc(c); }

} // namespace qgkz
