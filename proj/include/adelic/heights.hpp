#ifndef ADELIC_HEIGHTS_HPP
#define ADELIC_HEIGHTS_HPP

#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "adelic/estimate.hpp"
#include "adelic/mahler.hpp"
#include "adelic/polyring.hpp"
#include "adelic/qplaces.hpp"

namespace adelic {

/// A place of L = Q(T_1,...,T_n): a finite or archimedean place of Q
/// (fiberwise integrated), the order valuation at a canonical irreducible
/// polynomial, or the degree valuation at infinity.
class PlaceL {
  public:
    enum class Kind { QFinite, QArch, Ord, DegInfinity };

    static PlaceL q_finite(const Int& p) { return PlaceL(Kind::QFinite, p, {}); }
    static PlaceL q_arch() { return PlaceL(Kind::QArch, 0, {}); }
    static PlaceL ord(const MultiPoly& F);
    static PlaceL deg_infinity() { return PlaceL(Kind::DegInfinity, 0, {}); }

    Kind kind() const { return kind_; }
    const Int& prime() const { return p_; }
    const MultiPoly& poly() const { return F_; }

    std::string label() const;

  private:
    PlaceL(Kind k, Int p, MultiPoly F) : kind_(k), p_(std::move(p)), F_(std::move(F)) {}
    Kind kind_;
    Int p_;
    MultiPoly F_;
};

/// Per-place breakdown of a height; the total is the sum of the parts and
/// the error bound accumulates only the non-exact contributions.
struct HeightReport {
    Estimate total;
    std::vector<std::pair<PlaceL, Estimate>> breakdown;
};

/// h(F) = sum_p ln|F|_p(Gauss) + torus mean of ln|F|. Exact on monomials,
/// Jensen-exact on univariate input, quadrature otherwise. Nonnegative for
/// primitive integer polynomials up to the reported error.
Estimate poly_height(const MultiPoly& F, const QuadratureConfig& cfg = {});

/// Place weight of Ord(F) in the lambda-twisted structure:
/// poly_height(F) + lambda * deg(F). F must be canonical irreducible
/// (verified when univariate).
Estimate lambda_weight(const MultiPoly& F, double lambda,
                       const QuadratureConfig& cfg = {});

/// Measure of the lambda-twisted compactification. Finite and archimedean
/// places of Q weigh 1, the degree place weighs lambda, and Ord(F) weighs
/// poly_height(F) + lambda deg(F) (cached per canonical F).
class LambdaMeasure {
  public:
    explicit LambdaMeasure(double lambda, QuadratureConfig cfg = {})
        : lambda_(lambda), cfg_(cfg) {}

    double lambda() const { return lambda_; }
    Estimate weight(const PlaceL& place) const;

  private:
    double lambda_;
    QuadratureConfig cfg_;
    mutable std::unordered_map<std::string, Estimate> ord_cache_;
    mutable std::mutex mu_;
};

/// Height of a tuple of polynomials under the lambda-twisted structure,
/// summed place by place. Ord contributions require either a univariate
/// tuple (factored internally) or a caller-supplied factor list; without
/// either, a multivariate tuple is treated as coprime.
HeightReport tuple_height_lambda(const std::vector<MultiPoly>& Fs, double lambda,
                                 const std::vector<MultiPoly>& ord_factors = {},
                                 const QuadratureConfig& cfg = {});

/// Height of a rational function: tuple height of (num, den).
HeightReport rat_height_lambda(const RatFunc& f, double lambda,
                               const QuadratureConfig& cfg = {});

/// Defect sum_omega weight(omega) ln|f|_omega over all places of the
/// lambda-twisted structure, with the full factorization of num and den.
/// Vanishes up to the reported bound: the structure is proper.
Estimate product_formula_lambda_defect(const RatFunc& f, double lambda,
                                       const QuadratureConfig& cfg = {});

/// Monic polynomial in `var` over the field of fractions in the remaining
/// variables: F / a_0 with a_0 the leading coefficient in `var`.
struct MonicInVar {
    std::string var;
    std::vector<RatFunc> coeffs;  // ascending; back() == 1

    std::string str() const;
};

MonicInVar monic_normalize(const MultiPoly& F, const std::string& var);

struct NorthcottSearch {
    long max_deg = 3;
    long coeff_bound = 20;
};

/// All reduced f = F1/F2 in Q(T) with integer coefficients bounded by the
/// search box, deg <= min(max_deg, floor(C / lambda)), and
/// rat_height_lambda(f, lambda) <= C up to tolerance. Deterministically
/// ordered. Requires lambda > 0 (the untwisted structure has infinite
/// families of bounded height).
std::vector<RatFunc> northcott_enumerate(double C, double lambda,
                                         const NorthcottSearch& search = {});

/// Serial reference for the enumeration kernel; same output, no threading.
std::vector<RatFunc> northcott_enumerate_serial(double C, double lambda,
                                                const NorthcottSearch& search = {});

}  // namespace adelic

#endif
