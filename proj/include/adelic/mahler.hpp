#ifndef ADELIC_MAHLER_HPP
#define ADELIC_MAHLER_HPP

#include <complex>
#include <vector>

#include "adelic/estimate.hpp"
#include "adelic/polyring.hpp"

namespace adelic {

/// All complex roots with multiplicity, each accurate to 1e-12 absolute.
/// Exact squarefree splitting first, then Aberth-Ehrlich refinement in
/// extended precision on the squarefree parts.
std::vector<std::complex<double>> roots_complex(const MultiPoly& f);

/// ln of the Mahler measure of a univariate polynomial:
/// ln|lead| + sum over roots of ln max(1, |root|). Constants give ln|c|.
Estimate mahler_jensen(const MultiPoly& f);

/// Mean of ln|F(e(t_1),...,e(t_n))| over the unit torus, n <= 3, by
/// adaptive Gauss-Legendre quadrature with a seeded global grid offset.
Estimate torus_log_integral(const MultiPoly& F, const QuadratureConfig& cfg = {});

/// Mean of ln max_i |F_i(e(t))| over the torus; tuples of constants (and
/// monomials) are evaluated exactly without quadrature.
Estimate torus_logmax_integral(const std::vector<MultiPoly>& Fs,
                               const QuadratureConfig& cfg = {});

namespace kernel {

/// A polynomial compiled to double-precision coefficients for torus
/// evaluation. Exponent rows are indexed per used variable.
struct CompiledPoly {
    int nvars = 0;
    std::vector<double> coeff_re, coeff_im;   // imaginary parts are zero here
    std::vector<std::vector<unsigned>> exps;  // one row per term
    std::vector<unsigned> max_deg;            // per variable
};

CompiledPoly compile_for_torus(const MultiPoly& f, const std::vector<std::string>& vars);

struct QuadratureResult {
    double value = 0.0;
    double error_bound = 0.0;
    long leaf_cells = 0;
    long evaluations = 0;
};

/// Serial reference kernel. Bit-identical to the parallel kernel.
QuadratureResult torus_logmax_quadrature_serial(const std::vector<CompiledPoly>& polys,
                                                int nvars, const QuadratureConfig& cfg);

/// OpenMP kernel: cells of one refinement round are evaluated in parallel
/// and reduced in fixed index order.
QuadratureResult torus_logmax_quadrature_parallel(const std::vector<CompiledPoly>& polys,
                                                  int nvars, const QuadratureConfig& cfg);

}  // namespace kernel

}  // namespace adelic

#endif
