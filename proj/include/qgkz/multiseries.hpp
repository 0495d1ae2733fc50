#pragma once

#include <cassert>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace qgkz {

// Sparse multivariate Taylor series truncated at a total-degree cap.
// No explicit zero terms are stored.
template <typename T>
class MSeries {
public:
    using Key = std::vector<int>;

    MSeries(int nvars, int cap) : n_(nvars), cap_(cap) {}
    static MSeries constant(int nvars, int cap, const T& v) {
        MSeries s(nvars, cap);
        if (!(v == T(0))) s.t_[Key(nvars, 0)] = v;
        return s;
    }
    static MSeries var(int nvars, int cap, int i, const T& scale = T(1)) {
        MSeries s(nvars, cap);
        Key k(nvars, 0);
        k[i] = 1;
        if (cap >= 1 && !(scale == T(0))) s.t_[k] = scale;
        return s;
    }

    int nvars() const { return n_; }
    int cap() const { return cap_; }
    const std::map<Key, T>& terms() const { return t_; }
    T coeff(const Key& k) const {
        auto it = t_.find(k);
        return it == t_.end() ? T(0) : it->second;
    }
    T constant_term() const { return coeff(Key(n_, 0)); }
    void add_term(const Key& k, const T& v) {
        int tot = 0;
        for (int e : k) tot += e;
        if (tot > cap_) return;
        T& slot = t_[k];
        slot = slot + v;
        if (slot == T(0)) t_.erase(k);
    }

    friend MSeries operator+(const MSeries& a, const MSeries& b) {
        MSeries r = a;
        r.cap_ = std::min(a.cap_, b.cap_);
        for (const auto& [k, v] : b.t_) r.add_term(k, v);
        // drop overflow terms of a if caps differ
        if (r.cap_ < a.cap_) {
            MSeries s(r.n_, r.cap_);
            for (const auto& [k, v] : r.t_) s.add_term(k, v);
            return s;
        }
        return r;
    }
    friend MSeries operator-(const MSeries& a, const MSeries& b) { return a + (b * T(-1)); }
    friend MSeries operator*(const MSeries& a, const T& s) {
        MSeries r(a.n_, a.cap_);
        if (s == T(0)) return r;
        for (const auto& [k, v] : a.t_) {
            T w = v * s;
            if (!(w == T(0))) r.t_[k] = w;
        }
        return r;
    }
    friend MSeries operator*(const MSeries& a, const MSeries& b) {
        assert(a.n_ == b.n_);
        MSeries r(a.n_, std::min(a.cap_, b.cap_));
        for (const auto& [ka, va] : a.t_) {
            int da = 0;
            for (int e : ka) da += e;
            for (const auto& [kb, vb] : b.t_) {
                int db = 0;
                for (int e : kb) db += e;
                if (da + db > r.cap_) continue;
                Key k(a.n_);
                for (int i = 0; i < a.n_; ++i) k[i] = ka[i] + kb[i];
                r.add_term(k, va * vb);
            }
        }
        return r;
    }
    MSeries& operator+=(const MSeries& o) { return *this = *this + o; }
    MSeries& operator-=(const MSeries& o) { return *this = *this - o; }
    MSeries& operator*=(const MSeries& o) { return *this = *this * o; }

    // 1/this; constant term must be invertible
    MSeries inverse() const {
        T c0 = constant_term();
        if (c0 == T(0)) throw std::domain_error("MSeries::inverse: zero constant term");
        MSeries u = (*this) * (T(1) / c0);
        Key zero(n_, 0);
        MSeries h = u;
        h.t_.erase(zero); // h = u - 1, order >= 1
        MSeries acc = constant(n_, cap_, T(1));
        MSeries pw = constant(n_, cap_, T(1));
        T sign(1);
        for (int k = 1; k <= cap_; ++k) {
            pw = pw * h;
            sign = T(-1) * sign;
            if (pw.t_.empty()) break;
            acc += pw * sign;
        }
        return acc * (T(1) / c0);
    }

    // log(this/c0): series with zero constant term
    MSeries log1() const {
        T c0 = constant_term();
        if (c0 == T(0)) throw std::domain_error("MSeries::log1: zero constant term");
        MSeries u = (*this) * (T(1) / c0);
        Key zero(n_, 0);
        MSeries h = u;
        h.t_.erase(zero);
        MSeries acc(n_, cap_);
        MSeries pw = constant(n_, cap_, T(1));
        T sign(1);
        for (int k = 1; k <= cap_; ++k) {
            pw = pw * h;
            if (pw.t_.empty()) break;
            acc += pw * (sign / T(k));
            sign = T(-1) * sign;
        }
        return acc;
    }

    // exp(this); constant term must be zero
    MSeries exp0() const {
        if (!(constant_term() == T(0)))
            throw std::domain_error("MSeries::exp0: nonzero constant term");
        MSeries acc = constant(n_, cap_, T(1));
        MSeries pw = constant(n_, cap_, T(1));
        T fact(1);
        for (int k = 1; k <= cap_; ++k) {
            pw = pw * (*this);
            if (pw.t_.empty()) break;
            fact = fact * T(k);
            acc += pw * (T(1) / fact);
        }
        return acc;
    }

    // keep only terms of total degree d
    MSeries graded_part(int d) const {
        MSeries r(n_, cap_);
        for (const auto& [k, v] : t_) {
            int tot = 0;
            for (int e : k) tot += e;
            if (tot == d) r.t_[k] = v;
        }
        return r;
    }

private:
    int n_, cap_;
    std::map<Key, T> t_;
};

} // namespace qgkz
