#pragma once

#include "qgkz/polynomial.hpp"

#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qgkz {

// Truncated Laurent series sum_{k=min_exp}^{trunc} c_k t^k. Arithmetic never
// reads beyond trunc; trunc of a product is the min of what the factors warrant.
template <typename T>
class TSeries {
public:
    TSeries() : min_exp_(0), trunc_(-1) {}
    TSeries(int min_exp, std::vector<T> c, int trunc)
        : min_exp_(min_exp), c_(std::move(c)), trunc_(trunc) {
        assert((int)c_.size() == trunc_ - min_exp_ + 1);
        normalize();
    }
    static TSeries constant(const T& v, int trunc) {
        std::vector<T> c(trunc + 1, T(0));
        if (trunc >= 0) c[0] = v;
        return TSeries(0, std::move(c), trunc);
    }
    static TSeries zero(int trunc) { return constant(T(0), trunc); }
    static TSeries var(int trunc) {
        std::vector<T> c(trunc + 1, T(0));
        if (trunc >= 1) c[1] = T(1);
        return TSeries(0, std::move(c), trunc);
    }

    int min_exp() const { return min_exp_; }
    int trunc() const { return trunc_; }
    T coeff(int k) const {
        if (k < min_exp_ || k > trunc_) return T(0);
        return c_[k - min_exp_];
    }
    // first exponent with nonzero coefficient (trunc_+1 if all zero)
    int order() const {
        for (int k = min_exp_; k <= trunc_; ++k)
            if (!(coeff(k) == T(0))) return k;
        return trunc_ + 1;
    }
    bool is_zero_through_trunc() const { return order() > trunc_; }

    friend TSeries operator+(const TSeries& a, const TSeries& b) {
        int me = std::min(a.min_exp_, b.min_exp_);
        int tr = std::min(a.trunc_, b.trunc_);
        std::vector<T> c(tr - me + 1, T(0));
        for (int k = me; k <= tr; ++k) c[k - me] = a.coeff(k) + b.coeff(k);
        return TSeries(me, std::move(c), tr);
    }
    friend TSeries operator-(const TSeries& a, const TSeries& b) {
        int me = std::min(a.min_exp_, b.min_exp_);
        int tr = std::min(a.trunc_, b.trunc_);
        std::vector<T> c(tr - me + 1, T(0));
        for (int k = me; k <= tr; ++k) c[k - me] = a.coeff(k) - b.coeff(k);
        return TSeries(me, std::move(c), tr);
    }
    TSeries operator-() const {
        TSeries r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend TSeries operator*(const TSeries& a, const TSeries& b) {
        int oa = a.order(), ob = b.order();
        int me = oa + ob;
        int tr = std::min(a.trunc_ + ob, b.trunc_ + oa);
        if (tr < me) tr = me - 1; // empty
        std::vector<T> c(std::max(0, tr - me + 1), T(0));
        for (int i = oa; i <= a.trunc_; ++i) {
            if (a.coeff(i) == T(0)) continue;
            for (int j = ob; j <= b.trunc_ && i + j <= tr; ++j)
                c[i + j - me] += a.coeff(i) * b.coeff(j);
        }
        return TSeries(me, std::move(c), tr);
    }
    friend TSeries operator*(const TSeries& a, const T& s) {
        TSeries r = a;
        for (auto& x : r.c_) x *= s;
        return r;
    }
    TSeries& operator+=(const TSeries& o) { return *this = *this + o; }
    TSeries& operator-=(const TSeries& o) { return *this = *this - o; }
    TSeries& operator*=(const TSeries& o) { return *this = *this * o; }

    // multiplicative inverse; leading coefficient must be invertible
    TSeries inverse() const {
        int o = order();
        if (o > trunc_) throw std::domain_error("TSeries::inverse of zero series");
        int n = trunc_ - o; // relative precision
        T lead = coeff(o);
        std::vector<T> u(n + 1), r(n + 1, T(0));
        for (int k = 0; k <= n; ++k) u[k] = coeff(o + k) / lead;
        r[0] = T(1);
        for (int k = 1; k <= n; ++k) {
            T acc(0);
            for (int j = 1; j <= k; ++j) acc += u[j] * r[k - j];
            r[k] = -acc;
        }
        for (auto& x : r) x = x / lead;
        return TSeries(-o, std::move(r), n - o);
    }

    TSeries derivative() const {
        std::vector<T> c;
        int me = min_exp_ - 1;
        for (int k = min_exp_; k <= trunc_; ++k) c.push_back(coeff(k) * T(k));
        return TSeries(me, std::move(c), trunc_ - 1);
    }

    // substitute t -> -t
    TSeries negate_arg() const {
        TSeries r = *this;
        for (int k = min_exp_; k <= trunc_; ++k)
            if (k & 1) r.c_[k - min_exp_] = -r.c_[k - min_exp_];
        return r;
    }

    // compose with g, g must have order >= 1
    TSeries compose(const TSeries& g) const {
        if (min_exp_ < 0) throw std::domain_error("TSeries::compose with Laurent part");
        assert(g.order() >= 1);
        TSeries acc = zero(trunc_);
        TSeries pw = constant(T(1), trunc_);
        for (int k = 0; k <= trunc_; ++k) {
            acc += pw * coeff(k);
            if (k < trunc_) pw *= g;
        }
        return acc;
    }

    void set_coeff(int k, const T& v) {
        if (k < min_exp_) {
            c_.insert(c_.begin(), min_exp_ - k, T(0));
            min_exp_ = k;
        }
        if (k > trunc_) return;
        c_[k - min_exp_] = v;
    }

    TSeries truncate(int tr) const {
        if (tr >= trunc_) return *this;
        std::vector<T> c;
        for (int k = min_exp_; k <= tr; ++k) c.push_back(coeff(k));
        return TSeries(min_exp_, std::move(c), tr);
    }

private:
    void normalize() {
        while (!c_.empty() && min_exp_ < 0 && c_.front() == T(0)) {
            c_.erase(c_.begin());
            ++min_exp_;
        }
    }
    int min_exp_;
    std::vector<T> c_;
    int trunc_;
};

using QSeriesT = TSeries<Rat>;

// Laurent expansion of a rational function around a finite point: exact.
template <typename T>
TSeries<T> laurent_at(const RatFuncT<T>& f, const T& pt, int order) {
    if (f.is_zero()) return TSeries<T>::zero(order);
    Poly<T> n = f.num().shift(pt);
    Poly<T> d = f.den().shift(pt);
    int vn = n.valuation(), vd = d.valuation();
    // strip t^v factors
    std::vector<T> nc(n.coeffs().begin() + vn, n.coeffs().end());
    std::vector<T> dc(d.coeffs().begin() + vd, d.coeffs().end());
    int me = vn - vd;
    if (order < me) {
        if (me < 0) throw std::domain_error("laurent_at: order below pole order");
        return TSeries<T>(order + 1, {}, order); // vanishes through the order
    }
    int len = order - me + 1;
    std::vector<T> q(len, T(0));
    // series division nc/dc
    std::vector<T> rem(nc);
    rem.resize(std::max((size_t)len, rem.size()), T(0));
    T d0 = dc[0];
    for (int k = 0; k < len; ++k) {
        T qk = rem[k] / d0;
        q[k] = qk;
        for (size_t j = 1; j < dc.size() && k + j < rem.size(); ++j)
            rem[k + j] -= qk * dc[j];
    }
    return TSeries<T>(me, std::move(q), order);
}

// Expansion at infinity in u = 1/z: f(1/u) expanded at u = 0.
template <typename T>
TSeries<T> laurent_at_infinity(const RatFuncT<T>& f, int order) {
    if (f.is_zero()) return TSeries<T>::zero(order);
    RatFuncT<T> g(f.num().reversed(), f.den().reversed());
    int shift = f.den().degree() - f.num().degree();
    TSeries<T> s = laurent_at(g, T(0), order - shift);
    // f(1/u) = u^shift * g(u)
    std::vector<T> c;
    for (int k = s.min_exp(); k <= s.trunc(); ++k) c.push_back(s.coeff(k));
    return TSeries<T>(s.min_exp() + shift, std::move(c), s.trunc() + shift);
}

// Coefficient of (z-pt)^{-1}; non-poles give 0.
inline Rat residue_at(const RatFunc& f, const Rat& pt) {
    if (f.is_zero()) return Rat(0);
    return laurent_at(f, pt, 0).coeff(-1);
}

// Residue at infinity: -[u^{1}] coefficient convention, i.e. minus the
// coefficient of 1/z in f — standard: Res_inf f dz = -Res_0 (1/u^2) f(1/u) du.
inline Rat residue_at_infinity(const RatFunc& f) {
    if (f.is_zero()) return Rat(0);
    TSeries<Rat> s = laurent_at_infinity(f, 2);
    return -s.coeff(1);
}

} // namespace qgkz
