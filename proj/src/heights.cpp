#include "adelic/heights.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "adelic/primes.hpp"

namespace adelic {

PlaceL PlaceL::ord(const MultiPoly& F) {
    if (!is_canonical_primitive(F))
        throw NotCanonicalIrreducible(F.str());
    return PlaceL(Kind::Ord, 0, F.trimmed());
}

std::string PlaceL::label() const {
    switch (kind_) {
        case Kind::QFinite: return "p=" + p_.get_str();
        case Kind::QArch: return "arch";
        case Kind::Ord: return "ord:" + F_.str();
        case Kind::DegInfinity: return "deg";
    }
    return {};
}

namespace {

// Finite part of a polynomial height: sum over p of the Gauss-norm log,
// which collapses to -ln(content). Exact.
Estimate finite_part(const MultiPoly& F) {
    Rat content = content_primitive(F).content;
    return Estimate::exact(-content.log_abs());
}

Estimate arch_part(const MultiPoly& F, const QuadratureConfig& cfg) {
    if (F.is_monomial())
        return Estimate::exact(F.terms().begin()->second.abs().log_abs());
    if (F.used_vars().size() == 1) return mahler_jensen(F);
    return torus_log_integral(F, cfg);
}

}  // namespace

Estimate poly_height(const MultiPoly& F, const QuadratureConfig& cfg) {
    if (F.is_zero()) throw ZeroPolynomial();
    if (F.used_vars().size() > 3)
        throw DimensionTooLarge(std::to_string(F.used_vars().size()));
    return finite_part(F) + arch_part(F, cfg);
}

Estimate lambda_weight(const MultiPoly& F, double lambda, const QuadratureConfig& cfg) {
    if (lambda < 0) throw Error("lambda must be nonnegative");
    if (!is_canonical_primitive(F)) throw NotIrreducible(F.str());
    if (F.univariate_var()) {
        Factorization fac = factor_univariate(F);
        if (fac.factors.size() != 1 || fac.factors[0].second != 1)
            throw NotIrreducible(F.str());
    }
    Estimate h = poly_height(F, cfg);
    return h + Estimate::exact(lambda * static_cast<double>(F.total_degree()));
}

Estimate LambdaMeasure::weight(const PlaceL& place) const {
    switch (place.kind()) {
        case PlaceL::Kind::QFinite:
        case PlaceL::Kind::QArch:
            return Estimate::exact(1.0);
        case PlaceL::Kind::DegInfinity:
            return Estimate::exact(lambda_);
        case PlaceL::Kind::Ord: {
            std::string key = place.poly().str();
            Estimate h;
            {
                std::lock_guard<std::mutex> lock(mu_);
                auto it = ord_cache_.find(key);
                if (it != ord_cache_.end()) h = it->second;
                else {
                    h = poly_height(place.poly(), cfg_);
                    ord_cache_.emplace(key, h);
                }
            }
            return h + Estimate::exact(lambda_ * static_cast<double>(
                                                     place.poly().total_degree()));
        }
    }
    return Estimate::exact(0.0);
}

namespace {

// Common irreducible factors of a tuple with the minimum order across the
// tuple: factors of the univariate gcd, or the caller-supplied list.
std::vector<std::pair<MultiPoly, long>> tuple_ord_support(
    const std::vector<const MultiPoly*>& fs, const std::vector<MultiPoly>& given) {
    std::vector<std::pair<MultiPoly, long>> out;
    if (!given.empty()) {
        for (const MultiPoly& F : given) {
            if (!is_canonical_primitive(F)) throw NotCanonicalIrreducible(F.str());
            long m = -1;
            for (const MultiPoly* f : fs) {
                long o = 0;
                MultiPoly cur = *f;
                while (true) {
                    auto q = exact_divide(cur, F);
                    if (!q) break;
                    cur = *q;
                    ++o;
                }
                m = (m < 0) ? o : std::min(m, o);
                if (m == 0) break;
            }
            if (m > 0) out.push_back({F, m});
        }
        return out;
    }

    // All entries univariate in a common variable: factor the gcd.
    std::set<std::string> used;
    for (const MultiPoly* f : fs)
        for (const std::string& v : f->used_vars()) used.insert(v);
    if (used.size() > 1) return out;  // multivariate without factors: coprime by contract
    if (used.empty()) return out;     // constants only

    MultiPoly g = **fs.begin();
    for (const MultiPoly* f : fs) g = gcd_univariate(g, *f);
    if (g.is_constant()) return out;
    Factorization fac = factor_univariate(g);
    for (const auto& [F, m] : fac.factors) out.push_back({F, static_cast<long>(m)});
    return out;
}

}  // namespace

HeightReport tuple_height_lambda(const std::vector<MultiPoly>& Fs, double lambda,
                                 const std::vector<MultiPoly>& ord_factors,
                                 const QuadratureConfig& cfg) {
    std::vector<const MultiPoly*> nonzero;
    for (const MultiPoly& f : Fs)
        if (!f.is_zero()) nonzero.push_back(&f);
    if (nonzero.empty()) throw AllZeroTuple();

    LambdaMeasure mu(lambda, cfg);
    HeightReport report;

    // Finite places of Q: ln max_i |F_i|_p = -(min_i v_p(content_i)) ln p.
    std::set<Int> support;
    for (const MultiPoly* f : nonzero) {
        Rat c = content_primitive(*f).content;
        for (const Int& p : prime_support(c)) support.insert(p);
    }
    for (const Int& p : support) {
        long vmin = 0;
        bool first = true;
        for (const MultiPoly* f : nonzero) {
            long v = gauss_val(*f, p);
            vmin = first ? v : std::min(vmin, v);
            first = false;
        }
        if (vmin == 0) continue;
        double val = -static_cast<double>(vmin) * log_abs_int(p);
        report.breakdown.push_back({PlaceL::q_finite(p), Estimate::exact(val)});
    }

    // Archimedean fiber integral.
    std::vector<MultiPoly> list;
    for (const MultiPoly* f : nonzero) list.push_back(*f);
    report.breakdown.push_back({PlaceL::q_arch(), torus_logmax_integral(list, cfg)});

    // Ord places: only common factors contribute, with weight times -ord.
    for (const auto& [F, m] : tuple_ord_support(nonzero, ord_factors)) {
        Estimate w = mu.weight(PlaceL::ord(F));
        report.breakdown.push_back(
            {PlaceL::ord(F), w.scaled(-static_cast<double>(m))});
    }

    // Degree place.
    long dmax = 0;
    for (const MultiPoly* f : nonzero) dmax = std::max(dmax, f->total_degree());
    report.breakdown.push_back(
        {PlaceL::deg_infinity(), Estimate::exact(lambda * static_cast<double>(dmax))});

    Estimate total = Estimate::exact(0.0);
    for (const auto& [place, e] : report.breakdown) total = total + e;
    report.total = total;
    return report;
}

HeightReport rat_height_lambda(const RatFunc& f, double lambda,
                               const QuadratureConfig& cfg) {
    if (f.is_zero()) throw ZeroFunction();
    return tuple_height_lambda({f.num(), f.den()}, lambda, {}, cfg);
}

Estimate product_formula_lambda_defect(const RatFunc& f, double lambda,
                                       const QuadratureConfig& cfg) {
    if (f.is_zero()) throw ZeroFunction();
    std::set<std::string> used;
    for (const std::string& v : f.num().used_vars()) used.insert(v);
    for (const std::string& v : f.den().used_vars()) used.insert(v);
    if (used.size() > 1)
        throw UnsupportedMultivariateFactorization();

    LambdaMeasure mu(lambda, cfg);
    Estimate defect = Estimate::exact(0.0);

    // Finite places of Q: ln|f|_p = (v_p(content(den)) - v_p(content(num))) ln p.
    std::set<Int> support;
    for (const MultiPoly* part : {&f.num(), &f.den()}) {
        Rat c = content_primitive(*part).content;
        for (const Int& p : prime_support(c)) support.insert(p);
    }
    for (const Int& p : support) {
        long v = gauss_val(f.num(), p) - gauss_val(f.den(), p);
        defect = defect + Estimate::exact(-static_cast<double>(v) * log_abs_int(p));
    }

    // Archimedean place: fiberwise Mahler integrals of num and den.
    Estimate arch_num = f.num().is_monomial()
                            ? Estimate::exact(f.num().terms().begin()->second.abs().log_abs())
                            : mahler_jensen(f.num());
    Estimate arch_den = f.den().is_monomial()
                            ? Estimate::exact(f.den().terms().begin()->second.abs().log_abs())
                            : mahler_jensen(f.den());
    defect = defect + arch_num + arch_den.scaled(-1.0);

    // Ord places over the full factorization of num and den.
    std::map<std::string, std::pair<MultiPoly, long>> orders;
    for (const MultiPoly* part : {&f.num(), &f.den()}) {
        if (part->is_constant()) continue;
        Factorization fac = factor_univariate(*part);  // UnsupportedDegree above cap
        long sign = (part == &f.num()) ? 1 : -1;
        for (const auto& [F, m] : fac.factors) {
            auto [it, fresh] = orders.try_emplace(F.str(), F, 0l);
            it->second.second += sign * static_cast<long>(m);
        }
    }
    for (const auto& [key, fm] : orders) {
        if (fm.second == 0) continue;
        Estimate w = mu.weight(PlaceL::ord(fm.first));
        defect = defect + w.scaled(-static_cast<double>(fm.second));
    }

    // Degree place: ln|f|_infinity = deg(num) - deg(den).
    defect = defect +
             Estimate::exact(lambda * static_cast<double>(deg_valuation(f)));
    return defect;
}

namespace {

MultiPoly coefficient_in(const MultiPoly& F, const std::string& var, unsigned j) {
    auto it = std::find(F.vars().begin(), F.vars().end(), var);
    size_t k = static_cast<size_t>(it - F.vars().begin());
    std::vector<std::string> rest;
    for (const std::string& v : F.vars())
        if (v != var) rest.push_back(v);
    std::vector<std::pair<Exponents, Rat>> terms;
    for (const auto& [e, c] : F.terms()) {
        if (e[k] != j) continue;
        Exponents re;
        for (size_t i = 0; i < e.size(); ++i)
            if (i != k) re.push_back(e[i]);
        terms.push_back({std::move(re), c});
    }
    if (rest.empty()) {
        Rat acc(0);
        for (const auto& [e, c] : terms) acc += c;
        return MultiPoly(acc);
    }
    return MultiPoly::from_terms(rest, std::move(terms));
}

}  // namespace

MonicInVar monic_normalize(const MultiPoly& F, const std::string& var) {
    if (F.is_zero()) throw ZeroPolynomial();
    long d = F.degree_in(var);
    if (d <= 0) throw DegreeZeroInVariable(var);
    MultiPoly lead = coefficient_in(F, var, static_cast<unsigned>(d));
    MonicInVar out;
    out.var = var;
    RatFunc lead_f(lead);
    for (long j = 0; j <= d; ++j) {
        MultiPoly aj = coefficient_in(F, var, static_cast<unsigned>(j));
        out.coeffs.push_back(RatFunc(aj) / lead_f);
    }
    return out;
}

std::string MonicInVar::str() const {
    std::string s;
    for (size_t j = coeffs.size(); j-- > 0;) {
        if (coeffs[j].is_zero()) continue;
        if (!s.empty()) s += " + ";
        std::string c = coeffs[j].str();
        if (j == 0) { s += c; continue; }
        std::string pow = var + (j > 1 ? "^" + std::to_string(j) : "");
        s += (c == "1") ? pow : "(" + c + ")*" + pow;
    }
    return s.empty() ? "0" : s;
}

}  // namespace adelic
