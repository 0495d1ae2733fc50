#pragma once

#include "qgkz/polynomial.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qgkz {

// Sparse bivariate polynomial over Q. The two exponents are generic; callers
// fix the meaning ((x,y) for curves, (x,hbar) for operator coefficients).
class MPoly2 {
public:
    using Key = std::pair<int, int>;

    MPoly2() = default;
    explicit MPoly2(const Rat& c) {
        if (!(c == 0)) t_[{0, 0}] = c;
    }
    static MPoly2 term(int i, int j, const Rat& c) {
        MPoly2 p;
        if (!(c == 0)) p.t_[{i, j}] = c;
        return p;
    }

    const std::map<Key, Rat>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    Rat coeff(int i, int j) const {
        auto it = t_.find({i, j});
        return it == t_.end() ? Rat(0) : it->second;
    }
    void add(int i, int j, const Rat& c) {
        if (c == 0) return;
        Rat& slot = t_[{i, j}];
        slot += c;
        if (slot == 0) t_.erase({i, j});
    }
    int deg_first() const {
        int d = -1;
        for (auto& [k, v] : t_) d = std::max(d, k.first);
        return d;
    }
    int deg_second() const {
        int d = -1;
        for (auto& [k, v] : t_) d = std::max(d, k.second);
        return d;
    }

    friend MPoly2 operator+(const MPoly2& a, const MPoly2& b) {
        MPoly2 r = a;
        for (auto& [k, v] : b.t_) r.add(k.first, k.second, v);
        return r;
    }
    friend MPoly2 operator-(const MPoly2& a, const MPoly2& b) {
        MPoly2 r = a;
        for (auto& [k, v] : b.t_) r.add(k.first, k.second, -v);
        return r;
    }
    MPoly2 operator-() const {
        MPoly2 r;
        for (auto& [k, v] : t_) r.t_[k] = -v;
        return r;
    }
    friend MPoly2 operator*(const MPoly2& a, const MPoly2& b) {
        MPoly2 r;
        for (auto& [ka, va] : a.t_)
            for (auto& [kb, vb] : b.t_)
                r.add(ka.first + kb.first, ka.second + kb.second, va * vb);
        return r;
    }
    friend MPoly2 operator*(const MPoly2& a, const Rat& s) {
        MPoly2 r;
        if (s == 0) return r;
        for (auto& [k, v] : a.t_) r.t_[k] = v * s;
        return r;
    }
    MPoly2& operator+=(const MPoly2& o) { return *this = *this + o; }
    MPoly2& operator-=(const MPoly2& o) { return *this = *this - o; }
    MPoly2& operator*=(const MPoly2& o) { return *this = *this * o; }
    friend bool operator==(const MPoly2& a, const MPoly2& b) { return a.t_ == b.t_; }

    // leading term under lex order (first var dominant)
    Key lead_key() const {
        if (t_.empty()) throw std::domain_error("MPoly2::lead_key of zero");
        return t_.rbegin()->first;
    }

    // exact division; throws if not divisible
    friend MPoly2 exact_div(MPoly2 a, const MPoly2& b) {
        if (b.is_zero()) throw std::domain_error("MPoly2: division by zero");
        MPoly2 q;
        Key lb = b.lead_key();
        Rat cb = b.t_.rbegin()->second;
        while (!a.is_zero()) {
            Key la = a.lead_key();
            int di = la.first - lb.first, dj = la.second - lb.second;
            if (di < 0 || dj < 0) throw std::domain_error("MPoly2: inexact division");
            Rat c = a.t_.rbegin()->second / cb;
            MPoly2 m = term(di, dj, c);
            q += m;
            a -= m * b;
        }
        return q;
    }

    // proportionality: *this == c * o for some nonzero rational c
    bool proportional(const MPoly2& o, Rat* factor = nullptr) const {
        if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
        if (t_.size() != o.t_.size()) return false;
        auto it = t_.begin(), jt = o.t_.begin();
        Rat c = it->second / jt->second;
        for (; it != t_.end(); ++it, ++jt) {
            if (it->first != jt->first) return false;
            if (!(it->second == c * jt->second)) return false;
        }
        if (factor) *factor = c;
        return true;
    }

    // substitute first variable -> f(z), second -> g(z)
    RatFunc eval_ratfunc(const RatFunc& f, const RatFunc& g) const {
        RatFunc acc;
        for (auto& [k, v] : t_) {
            RatFunc term(v);
            for (int i = 0; i < k.first; ++i) term *= f;
            for (int j = 0; j < k.second; ++j) term *= g;
            acc += term;
        }
        return acc;
    }

    template <typename U>
    U eval(const U& x, const U& y) const {
        U acc(0);
        for (auto& [k, v] : t_) {
            U term = U(v);
            for (int i = 0; i < k.first; ++i) term = term * x;
            for (int j = 0; j < k.second; ++j) term = term * y;
            acc = acc + term;
        }
        return acc;
    }

    // partial derivative in the second variable
    MPoly2 d_second() const {
        MPoly2 r;
        for (auto& [k, v] : t_)
            if (k.second > 0) r.add(k.first, k.second - 1, v * Rat(k.second));
        return r;
    }

    // view as polynomial in the second variable: coefficient of y^j is QPoly in x
    std::vector<QPoly> coeffs_in_second() const {
        std::vector<QPoly> out(deg_second() + 1);
        for (auto& [k, v] : t_) out[k.second].set_coeff(k.first, v);
        return out;
    }

private:
    std::map<Key, Rat> t_;
};

// Resultant in z of p1, p2 given as coefficient lists in z with MPoly2
// entries (index = z-degree). Fraction-free Bareiss on the Sylvester matrix.
MPoly2 resultant_z(std::vector<MPoly2> p1, std::vector<MPoly2> p2);

} // namespace qgkz
