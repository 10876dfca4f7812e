#ifndef ADELIC_ESTIMATE_HPP
#define ADELIC_ESTIMATE_HPP

#include <cstdint>

#include "adelic/errors.hpp"

namespace adelic {

enum class Method { JensenExact, Quadrature, MonteCarlo };

/// A real value together with an honest absolute error bound.
/// JensenExact results carry a bound of at most 1e-9.
struct Estimate {
    double value = 0.0;
    double abs_error_bound = 0.0;
    Method method = Method::JensenExact;

    static Estimate exact(double v) { return {v, 0.0, Method::JensenExact}; }

    Estimate operator+(const Estimate& o) const {
        return {value + o.value, abs_error_bound + o.abs_error_bound,
                method == o.method ? method : Method::Quadrature};
    }
    Estimate scaled(double c) const {
        double a = c < 0 ? -c : c;
        return {c * value, a * abs_error_bound, method};
    }
};

struct QuadratureConfig {
    int grid_points_per_axis = 16;   // >= 16
    int max_subdivision_depth = 24;  // dyadic refinement rounds
    double target_abs_error = 1e-7;  // in [1e-9, 1e-1]
    uint64_t rng_seed = 0;           // randomized global grid offset

    void validate() const {
        if (grid_points_per_axis < 16)
            throw Error("grid_points_per_axis must be at least 16");
        if (!(target_abs_error >= 1e-9 && target_abs_error <= 1e-1))
            throw Error("target_abs_error must lie in [1e-9, 1e-1]");
        if (max_subdivision_depth < 0) throw Error("negative subdivision depth");
    }
};

struct MCConfig {
    uint64_t seed = 0;
    int64_t samples = 100000;  // >= 1e4

    void validate() const {
        if (samples < 10000) throw Error("Monte Carlo needs at least 1e4 samples");
    }
};

/// Monte Carlo result with its standard error; converts to an Estimate
/// with a 3-sigma bound.
struct MCResult {
    double value = 0.0;
    double stderr_ = 0.0;
    int64_t samples = 0;
    uint64_t seed = 0;

    Estimate to_estimate() const { return {value, 3.0 * stderr_, Method::MonteCarlo}; }
};

}  // namespace adelic

#endif
