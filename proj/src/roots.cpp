#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "adelic/mahler.hpp"

namespace adelic {

namespace {

using CLD = std::complex<long double>;

// Aberth-Ehrlich simultaneous iteration on a squarefree polynomial given by
// long-double coefficients (ascending). Roots are simple by construction.
std::vector<CLD> aberth(const std::vector<long double>& coeffs) {
    size_t deg = coeffs.size() - 1;
    std::vector<CLD> z(deg);

    // Cauchy bound for the initial circle.
    long double lead = std::abs(coeffs[deg]);
    long double radius = 0;
    for (size_t i = 0; i < deg; ++i)
        radius = std::max(radius, std::abs(coeffs[i]) / lead);
    radius = 1 + radius;
    for (size_t i = 0; i < deg; ++i) {
        long double ang = 2.0L * M_PIl * (static_cast<long double>(i) + 0.354L) /
                          static_cast<long double>(deg);
        z[i] = std::polar(radius * 0.7L + 0.3L, ang);
    }

    auto eval = [&coeffs](CLD x, CLD& p, CLD& dp) {
        p = coeffs.back();
        dp = 0;
        for (size_t i = coeffs.size() - 1; i-- > 0;) {
            dp = dp * x + p;
            p = p * x + coeffs[i];
        }
    };

    for (int iter = 0; iter < 400; ++iter) {
        long double worst = 0;
        for (size_t i = 0; i < deg; ++i) {
            CLD p, dp;
            eval(z[i], p, dp);
            if (p == CLD(0)) continue;
            CLD newton = p / dp;
            CLD sum = 0;
            for (size_t j = 0; j < deg; ++j)
                if (j != i) sum += CLD(1) / (z[i] - z[j]);
            CLD corr = newton / (CLD(1) - newton * sum);
            z[i] -= corr;
            worst = std::max(worst, std::abs(corr) / (1 + std::abs(z[i])));
        }
        if (worst < 1e-17L) break;
    }
    // Final Newton polish.
    for (size_t i = 0; i < deg; ++i) {
        for (int k = 0; k < 3; ++k) {
            CLD p, dp;
            eval(z[i], p, dp);
            if (dp == CLD(0)) break;
            z[i] -= p / dp;
        }
    }
    return z;
}

}  // namespace

std::vector<std::complex<double>> roots_complex(const MultiPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    auto uv = f.used_vars();
    if (uv.size() != 1) throw ConstantPolynomial();
    const std::string& var = uv[0];

    // Exact squarefree split so the iteration only ever sees simple roots.
    Factorization fac = factor_univariate(f);
    std::vector<std::complex<double>> out;
    for (const auto& [g, mult] : fac.factors) {
        std::vector<Rat> cs = g.coeffs_in(var);
        if (cs.size() == 2) {
            // linear: exact root
            Rat root = -cs[0] / cs[1];
            for (unsigned m = 0; m < mult; ++m)
                out.emplace_back(root.to_double(), 0.0);
            continue;
        }
        std::vector<long double> coeffs;
        coeffs.reserve(cs.size());
        for (const Rat& c : cs)
            coeffs.push_back(static_cast<long double>(c.num().get_d()) /
                             static_cast<long double>(c.den().get_d()));
        for (const CLD& r : aberth(coeffs))
            for (unsigned m = 0; m < mult; ++m)
                out.emplace_back(static_cast<double>(r.real()),
                                 static_cast<double>(r.imag()));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return out;
}

Estimate mahler_jensen(const MultiPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    if (f.is_constant())
        return {f.constant_value().log_abs(), 0.0, Method::JensenExact};
    auto uv = f.used_vars();
    if (uv.size() != 1) throw UnsupportedMultivariateFactorization();
    const std::string& var = uv[0];

    std::vector<Rat> cs = f.coeffs_in(var);
    double value = cs.back().log_abs();
    double err = 1e-12;  // ln|lead| rounding
    for (const std::complex<double>& r : roots_complex(f)) {
        double a = std::abs(r);
        if (a > 1.0) value += std::log(a);
        err += 2e-12;
    }
    return {value, err, Method::JensenExact};
}

}  // namespace adelic
