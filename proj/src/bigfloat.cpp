#include "qgkz/bigfloat.hpp"

#include <cstdlib>
#include <sstream>
#include <vector>

namespace qgkz {

namespace {
mpfr_prec_t initial_prec() {
    // QGKZ_PRECISION holds decimal digits; default 50 digits = 166 bits.
    if (const char* env = std::getenv("QGKZ_PRECISION")) {
        long digits = std::strtol(env, nullptr, 10);
        if (digits >= 20 && digits <= 10000)
            return (mpfr_prec_t)(digits * 3.3219280948873626 + 8);
    }
    return 166;
}
} // namespace

mpfr_prec_t BigFloat::default_prec = initial_prec();

std::string BigFloat::str(int digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::vector<BigComplex> poly_roots(const std::vector<BigComplex>& coeffs, int max_iter) {
    int n = (int)coeffs.size() - 1;
    while (n > 0 && abs(coeffs[n]).is_zero()) --n;
    std::vector<BigComplex> c(coeffs.begin(), coeffs.begin() + n + 1);
    if (n <= 0) return {};
    for (int i = 0; i < n; ++i) c[i] = c[i] / c[n];
    c[n] = BigComplex(1);

    // radius bound
    BigFloat r(1);
    for (int i = 0; i < n; ++i) {
        BigFloat m = abs(c[i]) + BigFloat(1);
        if (m > r) r = m;
    }
    std::vector<BigComplex> x(n);
    BigComplex seed(0.4, 0.9);
    BigComplex pw = seed;
    for (int i = 0; i < n; ++i) {
        x[i] = pw * BigComplex(r);
        pw *= seed;
    }
    auto eval = [&](const BigComplex& z) {
        BigComplex acc(0);
        for (int i = n; i >= 0; --i) acc = acc * z + c[i];
        return acc;
    };
    BigFloat tol = pow_int(BigFloat(2), -(long)(BigFloat::default_prec - 12));
    for (int it = 0; it < max_iter; ++it) {
        BigFloat worst(0);
        for (int i = 0; i < n; ++i) {
            BigComplex d(1);
            for (int j = 0; j < n; ++j)
                if (j != i) d *= (x[i] - x[j]);
            BigComplex step = eval(x[i]) / d;
            x[i] -= step;
            BigFloat m = abs(step);
            if (m > worst) worst = m;
        }
        if (worst < tol) break;
    }
    return x;
}

std::vector<BigComplex> poly_roots(const QPoly& p) {
    std::vector<BigComplex> c;
    for (int i = 0; i <= p.degree(); ++i) c.push_back(BigComplex(Rat(p.coeff(i))));
    return poly_roots(c);
}

} // namespace qgkz
