#pragma once

#include "qgkz/series.hpp"

#include <utility>
#include <vector>

namespace qgkz {

// Structured antiderivative: d/dz(rational) + sum c_i * p_i'/p_i.
struct Antiderivative {
    RatFunc rational;
    std::vector<std::pair<Rat, QPoly>> logs; // (c_i, p_i) meaning c_i*log p_i

    RatFunc derivative() const {
        RatFunc d = rational.derivative();
        for (const auto& [c, p] : logs)
            d += RatFunc(p.derivative() * c, p);
        return d;
    }
    bool pure_rational() const { return logs.empty(); }
};

// Hermite reduction + Rothstein-Trager log part restricted to rational
// residues. Throws std::domain_error when a log coefficient is irrational.
Antiderivative hermite_antiderivative(const RatFunc& f);

// All rational roots of p with multiplicities stripped to distinct values.
std::vector<Rat> rational_roots(const QPoly& p);

// Yun squarefree decomposition: p = prod_i out[i]^(i+1) * lc.
std::vector<QPoly> squarefree_decomposition(const QPoly& p);

} // namespace qgkz
