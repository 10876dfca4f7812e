#include <algorithm>
#include <cmath>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "adelic/heights.hpp"
#include "adelic/parallel.hpp"

namespace adelic {

namespace {

constexpr double kTol = 1e-6;

// All nonzero polynomials in T of degree <= dmax with integer coefficients
// in [-B, B], in a fixed enumeration order.
std::vector<MultiPoly> candidate_polys(long dmax, long B) {
    std::vector<MultiPoly> out;
    std::vector<long> c(static_cast<size_t>(dmax) + 1, -B);
    while (true) {
        bool nonzero = std::any_of(c.begin(), c.end(), [](long x) { return x != 0; });
        if (nonzero) {
            std::vector<std::pair<Exponents, Rat>> terms;
            for (size_t j = 0; j < c.size(); ++j)
                if (c[j] != 0) terms.push_back({{static_cast<unsigned>(j)}, Rat(c[j])});
            out.push_back(MultiPoly::from_terms({"T"}, std::move(terms)));
        }
        size_t pos = 0;
        while (pos < c.size() && c[pos] == B) c[pos++] = -B;
        if (pos == c.size()) break;
        ++c[pos];
    }
    return out;
}

std::vector<RatFunc> run(double C, double lambda, const NorthcottSearch& search,
                         bool parallel) {
    if (!(lambda > 0)) throw NorthcottRequiresPositiveLambda();
    std::vector<RatFunc> empty;
    if (C < 0) return empty;

    long dcap = static_cast<long>(std::floor(C / lambda + 1e-9));
    long dmax = std::min(search.max_deg, dcap);
    if (dmax < 0) return empty;

    std::vector<MultiPoly> cands = candidate_polys(dmax, search.coeff_bound);
    const long n = static_cast<long>(cands.size());

    // Per-candidate Mahler value: the archimedean part of any pair height
    // dominates each member's integral, so this gives a cheap lower bound.
    std::vector<double> jens(static_cast<size_t>(n));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(thread_budget()) if (parallel)
#endif
    for (long i = 0; i < n; ++i)
        jens[static_cast<size_t>(i)] = mahler_jensen(cands[static_cast<size_t>(i)]).value;

    std::vector<std::vector<std::pair<std::string, RatFunc>>> found(
        static_cast<size_t>(n));

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(thread_budget()) if (parallel)
#endif
    for (long i = 0; i < n; ++i) {
        auto& local = found[static_cast<size_t>(i)];
        for (long j = 0; j < n; ++j) {
            const MultiPoly& F1 = cands[static_cast<size_t>(i)];
            const MultiPoly& F2 = cands[static_cast<size_t>(j)];
            long pair_deg = std::max(F1.total_degree(), F2.total_degree());
            double lower = std::max(jens[static_cast<size_t>(i)],
                                    jens[static_cast<size_t>(j)]) +
                           lambda * static_cast<double>(pair_deg) - 1e-9;
            if (lower > C + kTol) continue;
            RatFunc f(F1, F2);
            HeightReport h = rat_height_lambda(f, lambda);
            if (h.total.value > C + h.total.abs_error_bound + kTol) continue;
            // Finiteness bounds on the reduced representation.
            if (std::max(f.num().total_degree(), f.den().total_degree()) > dcap)
                continue;
            bool bounds_ok = true;
            for (const MultiPoly* part : {&f.num(), &f.den()}) {
                Estimate hp = poly_height(*part);
                if (hp.value > C + hp.abs_error_bound + kTol) bounds_ok = false;
            }
            if (!bounds_ok) continue;
            local.push_back({f.str(), f});
        }
    }

    std::map<std::string, RatFunc> dedup;
    for (const auto& local : found)
        for (const auto& [key, f] : local) dedup.emplace(key, f);

    std::vector<RatFunc> out;
    out.reserve(dedup.size());
    for (auto& [key, f] : dedup) out.push_back(f);
    std::sort(out.begin(), out.end(), [](const RatFunc& a, const RatFunc& b) {
        long da = std::max(a.num().total_degree(), a.den().total_degree());
        long db = std::max(b.num().total_degree(), b.den().total_degree());
        if (da != db) return da < db;
        return a.str() < b.str();
    });
    return out;
}

}  // namespace

std::vector<RatFunc> northcott_enumerate(double C, double lambda,
                                         const NorthcottSearch& search) {
    return run(C, lambda, search, true);
}

std::vector<RatFunc> northcott_enumerate_serial(double C, double lambda,
                                                const NorthcottSearch& search) {
    return run(C, lambda, search, false);
}

}  // namespace adelic
