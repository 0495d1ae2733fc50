#include "qgkz/hermite.hpp"

#include <stdexcept>

namespace qgkz {

std::vector<QPoly> squarefree_decomposition(const QPoly& p) {
    std::vector<QPoly> out;
    if (p.degree() <= 0) return out;
    QPoly a = p.monic();
    QPoly g = poly_gcd(a, a.derivative());
    QPoly b = a / g;
    QPoly c = a.derivative() / g;
    QPoly d = c - b.derivative();
    while (b.degree() > 0) {
        QPoly s = poly_gcd(b, d);
        out.push_back(s);
        b = b / s;
        c = d / s;
        d = c - b.derivative();
    }
    return out;
}

std::vector<Rat> rational_roots(const QPoly& p) {
    std::vector<Rat> roots;
    if (p.degree() <= 0) return roots;
    Int lcm(1);
    for (const Rat& c : p.coeffs()) {
        Int den = c.get_den();
        lcm = lcm * den / gcd(lcm, den);
    }
    std::vector<Int> ic;
    for (const Rat& c : p.coeffs()) ic.push_back(Int(c.get_num() * (lcm / c.get_den())));
    size_t v = 0;
    while (v < ic.size() && ic[v] == 0) ++v;
    if (v > 0) roots.push_back(Rat(0));
    if (v >= ic.size() - 1) return roots;
    Int a0 = ic[v], an = ic.back();
    auto divisors = [](Int n) {
        std::vector<Int> ds;
        n = abs(n);
        for (Int d(1); d * d <= n; ++d)
            if (n % d == 0) {
                ds.push_back(d);
                if (d * d != n) ds.push_back(n / d);
            }
        return ds;
    };
    for (const Int& pn : divisors(a0))
        for (const Int& pd : divisors(an))
            for (int s : {1, -1}) {
                Rat cand = Rat(pn * s) / Rat(pd);
                cand.canonicalize();
                if (p.eval(cand) == 0) {
                    bool seen = false;
                    for (const Rat& r : roots) seen = seen || (r == cand);
                    if (!seen) roots.push_back(cand);
                }
            }
    return roots;
}

namespace {

// extended euclid over Q[z]: returns (g, s, t) with s*a + t*b = g, g monic gcd
void ext_gcd(const QPoly& a, const QPoly& b, QPoly& g, QPoly& s, QPoly& t) {
    QPoly r0 = a, r1 = b;
    QPoly s0(Rat(1)), s1, t0, t1(Rat(1));
    while (!r1.is_zero()) {
        QPoly q, r;
        QPoly::divrem(r0, r1, q, r);
        QPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    Rat lc = r0.leading();
    Rat inv = Rat(1) / lc;
    g = r0 * inv;
    s = s0 * inv;
    t = t0 * inv;
}

// integral of A/S^m with S squarefree, gcd(A,S^m)=1-ish, deg A < deg S^m.
// Pushes d/dz(...) terms into `rational` and returns the multiplicity-1
// leftover numerator L with the meaning L/S.
QPoly reduce_power(QPoly A, const QPoly& S, int m, RatFunc& rational) {
    while (m > 1) {
        // split A/S^m = A1/S^{m-1}-ish via A = B*S' + C*S with deg B < deg S
        QPoly g, s, t;
        ext_gcd(S.derivative(), S, g, s, t);
        if (g.degree() != 0 && !(g == QPoly(Rat(1))))
            throw std::domain_error("hermite: denominator not squarefree");
        QPoly B = (s * A) % S;
        QPoly C = (A - B * S.derivative()) / S;
        // A/S^m = d/dz( -B/((m-1) S^{m-1}) ) + (C + B'/(m-1)) / S^{m-1}
        QPoly Sm1(Rat(1));
        for (int i = 0; i < m - 1; ++i) Sm1 *= S;
        rational += RatFunc(-B * (Rat(1) / Rat(m - 1)), Sm1);
        A = C + B.derivative() * (Rat(1) / Rat(m - 1));
        m -= 1;
    }
    return A;
}

} // namespace

Antiderivative hermite_antiderivative(const RatFunc& f) {
    Antiderivative out;
    if (f.is_zero()) return out;

    QPoly q, r;
    QPoly::divrem(f.num(), f.den(), q, r);
    for (int k = 0; k <= q.degree(); ++k)
        out.rational += RatFunc(QPoly::monomial(k + 1, q.coeff(k) / Rat(k + 1)));
    if (r.is_zero()) return out;

    QPoly den = f.den().monic();
    std::vector<QPoly> sq = squarefree_decomposition(den);

    // partial fractions over the pairwise-coprime blocks S_i^i
    std::vector<QPoly> blocks;
    for (size_t i = 0; i < sq.size(); ++i) {
        QPoly b(Rat(1));
        for (size_t k = 0; k <= i; ++k) b *= sq[i];
        blocks.push_back(b);
    }
    std::vector<QPoly> numerators(blocks.size());
    {
        QPoly rem_num = r;
        QPoly rem_den = den;
        for (size_t i = 0; i < blocks.size(); ++i) {
            if (blocks[i].degree() == 0) {
                numerators[i] = QPoly();
                continue;
            }
            QPoly cof = rem_den / blocks[i];
            if (cof.degree() == 0) {
                numerators[i] = rem_num * (Rat(1) / cof.coeff(0));
                rem_num = QPoly();
                rem_den = QPoly(Rat(1));
                continue;
            }
            QPoly g, s, t;
            ext_gcd(cof, blocks[i], g, s, t);
            // rem_num/(cof*blocks_i) = (rem_num*s)/blocks_i + (rem_num*t)/cof
            numerators[i] = (rem_num * s) % blocks[i];
            rem_num = (rem_num - numerators[i] * cof) / blocks[i];
            rem_den = cof;
        }
        if (!rem_num.is_zero()) {
            // residual polynomial piece (can appear from the % reductions)
            RatFunc extra(rem_num, rem_den);
            QPoly eq, er;
            QPoly::divrem(extra.num(), extra.den(), eq, er);
            if (!er.is_zero())
                throw std::domain_error("hermite: partial fraction failure");
            for (int k = 0; k <= eq.degree(); ++k)
                out.rational += RatFunc(QPoly::monomial(k + 1, eq.coeff(k) / Rat(k + 1)));
        }
    }

    // reduce each block to multiplicity one, then build the log part
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (numerators[i].is_zero() || sq[i].degree() == 0) continue;
        QPoly L = reduce_power(numerators[i], sq[i], (int)i + 1, out.rational);
        if (L.is_zero()) continue;
        // log part of L/S_i: rational roots first, then the proportional case
        QPoly S = sq[i];
        for (const Rat& root : rational_roots(S)) {
            QPoly lin(std::vector<Rat>{-root, Rat(1)});
            Rat c = L.eval(root) / S.derivative().eval(root);
            if (!(c == 0)) out.logs.emplace_back(c, lin);
            // subtract c/(z-root) from L/S
            RatFunc leftover = RatFunc(L, S) - RatFunc(QPoly(c), lin);
            S = leftover.den();
            L = leftover.num();
            if (L.is_zero()) break;
        }
        if (L.is_zero() || S.degree() == 0) continue;
        QPoly Sd = S.derivative();
        if (L.degree() == Sd.degree()) {
            Rat c = L.leading() / Sd.leading();
            if (Sd * c == L) {
                out.logs.emplace_back(c, S);
                continue;
            }
        }
        throw std::domain_error("hermite: log part has irrational coefficients");
    }

    return out;
}

} // namespace qgkz
