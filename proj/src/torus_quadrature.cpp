#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstring>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "adelic/mahler.hpp"
#include "adelic/parallel.hpp"

namespace adelic {
namespace kernel {

namespace {

// 16-point Gauss-Legendre rule on [0, 1].
constexpr int kGL = 16;
constexpr double kNode[kGL] = {
    0.0052995325041750333469603, 0.0277124884633836999568842,
    0.0671843988060841224019271, 0.1222977958224984867952045,
    0.1910618777986781147149031, 0.2709916111713863151599924,
    0.3591982246103705422868302, 0.4524937450811812866824368,
    0.5475062549188187133175632, 0.6408017753896294577131698,
    0.7290083888286136848400076, 0.8089381222013218852850969,
    0.8777022041775015132047955, 0.9328156011939158775980729,
    0.9722875115366163000431158, 0.9947004674958249666530397};
constexpr double kWeight[kGL] = {
    0.0135762297058770482066636, 0.0311267619693239468159351,
    0.0475792558412463928441127, 0.0623144856277669384470030,
    0.0747979944082883679845608, 0.0845782596975012679330064,
    0.0913017075224617918882686, 0.0947253052275342510846201,
    0.0947253052275342510846201, 0.0913017075224617918882686,
    0.0845782596975012679330064, 0.0747979944082883679845608,
    0.0623144856277669384470030, 0.0475792558412463928441127,
    0.0311267619693239468159351, 0.0135762297058770482066636};

constexpr double kTwoPi = 6.283185307179586476925287;
constexpr double kTinyAbs = 1e-300;

struct Cell {
    double lo[3] = {0, 0, 0};
    double width[3] = {0, 0, 0};
    int depth = 0;
    double coarse = 0;       // GL estimate on the cell
    double fine = 0;         // sum of GL estimates on the 2^n children
    double child_coarse[8];  // reused when the cell is refined
    long evals = 0;
    double bound() const { return 2.0 * std::fabs(fine - coarse); }
};

// GL16 tensor estimate of the integrand over one box.
double gl_box(const std::vector<CompiledPoly>& polys, int nvars,
              const double* offset, const double* lo, const double* width,
              const std::vector<unsigned>& axis_maxdeg) {
    // Per-axis tables of powers of e(t) at each node.
    std::array<std::array<std::vector<std::complex<double>>, kGL>, 3> pw;
    for (int a = 0; a < nvars; ++a) {
        for (int k = 0; k < kGL; ++k) {
            double t = lo[a] + width[a] * kNode[k] + offset[a];
            std::complex<double> z(std::cos(kTwoPi * t), std::sin(kTwoPi * t));
            auto& row = pw[static_cast<size_t>(a)][static_cast<size_t>(k)];
            row.resize(axis_maxdeg[static_cast<size_t>(a)] + 1);
            row[0] = 1.0;
            for (unsigned d = 1; d <= axis_maxdeg[static_cast<size_t>(a)]; ++d)
                row[d] = row[d - 1] * z;
        }
    }

    long total = 1;
    for (int a = 0; a < nvars; ++a) total *= kGL;

    double acc = 0.0;
    for (long flat = 0; flat < total; ++flat) {
        int k[3] = {0, 0, 0};
        long rest = flat;
        for (int a = 0; a < nvars; ++a) {
            k[a] = static_cast<int>(rest % kGL);
            rest /= kGL;
        }
        double best = 0.0;
        for (const CompiledPoly& p : polys) {
            std::complex<double> sum(0, 0);
            for (size_t t = 0; t < p.coeff_re.size(); ++t) {
                std::complex<double> term(p.coeff_re[t], p.coeff_im[t]);
                for (int a = 0; a < nvars; ++a)
                    term *= pw[static_cast<size_t>(a)][static_cast<size_t>(k[a])]
                              [p.exps[t][static_cast<size_t>(a)]];
                sum += term;
            }
            best = std::max(best, std::abs(sum));
        }
        double wgt = 1.0;
        for (int a = 0; a < nvars; ++a) wgt *= kWeight[k[a]];
        acc += wgt * std::log(std::max(best, kTinyAbs));
    }
    double vol = 1.0;
    for (int a = 0; a < nvars; ++a) vol *= width[a];
    return acc * vol;
}

// Fills fine/child_coarse of a cell whose coarse value is already known.
void expand_cell(const std::vector<CompiledPoly>& polys, int nvars,
                 const double* offset, const std::vector<unsigned>& axis_maxdeg,
                 Cell& c) {
    int nchild = 1 << nvars;
    double fine = 0.0;
    for (int j = 0; j < nchild; ++j) {
        double lo[3], width[3];
        for (int a = 0; a < nvars; ++a) {
            width[a] = 0.5 * c.width[a];
            lo[a] = c.lo[a] + ((j >> a) & 1 ? width[a] : 0.0);
        }
        c.child_coarse[j] = gl_box(polys, nvars, offset, lo, width, axis_maxdeg);
        fine += c.child_coarse[j];
        c.evals += 1;
    }
    c.fine = fine;
}

QuadratureResult run(const std::vector<CompiledPoly>& polys, int nvars,
                     const QuadratureConfig& cfg, bool parallel) {
    cfg.validate();
    std::vector<unsigned> axis_maxdeg(static_cast<size_t>(nvars), 0);
    for (const CompiledPoly& p : polys)
        for (int a = 0; a < nvars; ++a)
            axis_maxdeg[static_cast<size_t>(a)] =
                std::max(axis_maxdeg[static_cast<size_t>(a)], p.max_deg[static_cast<size_t>(a)]);

    double offset[3] = {0, 0, 0};
    uint64_t st = cfg.rng_seed ^ 0x6a09e667f3bcc908ull;
    splitmix64(st);
    for (int a = 0; a < nvars; ++a) offset[a] = u01(st);

    const int G = cfg.grid_points_per_axis;
    long ncells = 1;
    for (int a = 0; a < nvars; ++a) ncells *= G;

    std::vector<Cell> leaves(static_cast<size_t>(ncells));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(thread_budget()) if (parallel)
#endif
    for (long i = 0; i < ncells; ++i) {
        Cell& c = leaves[static_cast<size_t>(i)];
        long rest = i;
        for (int a = 0; a < nvars; ++a) {
            c.lo[a] = static_cast<double>(rest % G) / G;
            c.width[a] = 1.0 / G;
            rest /= G;
        }
        c.depth = 0;
        c.coarse = gl_box(polys, nvars, offset, c.lo, c.width, axis_maxdeg);
        c.evals = 1;
        expand_cell(polys, nvars, offset, axis_maxdeg, c);
    }

    const long kMaxLeaves = 500000;
    for (int round = 0; round < cfg.max_subdivision_depth; ++round) {
        double total = 0.0;
        for (const Cell& c : leaves) total += c.bound();
        if (total <= cfg.target_abs_error) break;
        if (static_cast<long>(leaves.size()) >= kMaxLeaves) break;

        double thr = cfg.target_abs_error / static_cast<double>(leaves.size());
        std::vector<size_t> selected;
        for (size_t i = 0; i < leaves.size(); ++i)
            if (leaves[i].bound() >= thr && leaves[i].depth < cfg.max_subdivision_depth)
                selected.push_back(i);
        if (selected.empty()) break;

        int nchild = 1 << nvars;
        std::vector<Cell> children(selected.size() * static_cast<size_t>(nchild));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(thread_budget()) if (parallel)
#endif
        for (long s = 0; s < static_cast<long>(selected.size()); ++s) {
            const Cell& parent = leaves[selected[static_cast<size_t>(s)]];
            for (int j = 0; j < nchild; ++j) {
                Cell& ch = children[static_cast<size_t>(s) * static_cast<size_t>(nchild) +
                                    static_cast<size_t>(j)];
                for (int a = 0; a < nvars; ++a) {
                    ch.width[a] = 0.5 * parent.width[a];
                    ch.lo[a] = parent.lo[a] + ((j >> a) & 1 ? ch.width[a] : 0.0);
                }
                ch.depth = parent.depth + 1;
                ch.coarse = parent.child_coarse[j];
                expand_cell(polys, nvars, offset, axis_maxdeg, ch);
            }
        }

        // Rebuild the leaf list in deterministic order: survivors first
        // (original order), then the new children grouped by parent.
        std::vector<Cell> next;
        next.reserve(leaves.size() - selected.size() + children.size());
        size_t si = 0;
        for (size_t i = 0; i < leaves.size(); ++i) {
            if (si < selected.size() && selected[si] == i) {
                ++si;
                continue;
            }
            next.push_back(leaves[i]);
        }
        for (Cell& c : children) next.push_back(std::move(c));
        leaves = std::move(next);
    }

    QuadratureResult out;
    for (const Cell& c : leaves) {
        out.value += c.fine;
        out.error_bound += c.bound();
        out.evaluations += c.evals;
    }
    out.leaf_cells = static_cast<long>(leaves.size());
    return out;
}

}  // namespace

CompiledPoly compile_for_torus(const MultiPoly& f, const std::vector<std::string>& vars) {
    CompiledPoly out;
    out.nvars = static_cast<int>(vars.size());
    out.max_deg.assign(vars.size(), 0);
    std::vector<long> pos(f.vars().size(), -1);
    for (size_t i = 0; i < f.vars().size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), f.vars()[i]);
        if (it != vars.end()) pos[i] = it - vars.begin();
    }
    for (const auto& [e, c] : f.terms()) {
        std::vector<unsigned> row(vars.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (pos[i] < 0) throw Error("variable not in torus chart: " + f.vars()[i]);
            row[static_cast<size_t>(pos[i])] = e[i];
        }
        for (size_t a = 0; a < vars.size(); ++a)
            out.max_deg[a] = std::max(out.max_deg[a], row[a]);
        out.coeff_re.push_back(c.to_double());
        out.coeff_im.push_back(0.0);
        out.exps.push_back(std::move(row));
    }
    return out;
}

QuadratureResult torus_logmax_quadrature_serial(const std::vector<CompiledPoly>& polys,
                                                int nvars, const QuadratureConfig& cfg) {
    return run(polys, nvars, cfg, false);
}

QuadratureResult torus_logmax_quadrature_parallel(const std::vector<CompiledPoly>& polys,
                                                  int nvars, const QuadratureConfig& cfg) {
    return run(polys, nvars, cfg, true);
}

}  // namespace kernel

// ---------------------------------------------------------------------------

namespace {

bool all_monomials(const std::vector<const MultiPoly*>& fs) {
    for (const MultiPoly* f : fs)
        if (!f->is_monomial()) return false;
    return true;
}

Estimate logmax_core(const std::vector<const MultiPoly*>& nonzero,
                     const QuadratureConfig& cfg) {
    // |c T^d| = |c| on the torus: tuples of monomials are exact.
    if (all_monomials(nonzero)) {
        Rat best(0);
        for (const MultiPoly* f : nonzero)
            best = std::max(best, f->terms().begin()->second.abs());
        return {best.log_abs(), 0.0, Method::JensenExact};
    }

    std::vector<std::string> vars;
    for (const MultiPoly* f : nonzero)
        for (const std::string& v : f->used_vars())
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    if (vars.size() > 3) throw DimensionTooLarge(std::to_string(vars.size()));

    std::vector<kernel::CompiledPoly> compiled;
    for (const MultiPoly* f : nonzero)
        compiled.push_back(kernel::compile_for_torus(*f, vars));
    auto res = kernel::torus_logmax_quadrature_parallel(compiled,
                                                        static_cast<int>(vars.size()), cfg);
    return {res.value, res.error_bound, Method::Quadrature};
}

}  // namespace

Estimate torus_log_integral(const MultiPoly& F, const QuadratureConfig& cfg) {
    if (F.is_zero()) throw ZeroPolynomial();
    return logmax_core({&F}, cfg);
}

Estimate torus_logmax_integral(const std::vector<MultiPoly>& Fs,
                               const QuadratureConfig& cfg) {
    std::vector<const MultiPoly*> nonzero;
    for (const MultiPoly& f : Fs)
        if (!f.is_zero()) nonzero.push_back(&f);
    if (nonzero.empty()) throw AllZeroTuple();
    return logmax_core(nonzero, cfg);
}

}  // namespace adelic
