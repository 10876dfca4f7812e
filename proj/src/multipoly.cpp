#include "adelic/polyring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "adelic/primes.hpp"
#include "adelic/qplaces.hpp"

namespace adelic {

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    unsigned ta = std::accumulate(a.begin(), a.end(), 0u);
    unsigned tb = std::accumulate(b.begin(), b.end(), 0u);
    if (ta != tb) return ta < tb;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly::MultiPoly(const Rat& c) {
    if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

MultiPoly MultiPoly::zero(std::vector<std::string> vars) {
    MultiPoly p;
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    p.vars_ = std::move(vars);
    return p;
}

MultiPoly MultiPoly::variable(const std::string& name) {
    MultiPoly p;
    p.vars_ = {name};
    p.terms_.emplace(Exponents{1}, Rat(1));
    return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, Exponents e, const Rat& c) {
    return from_terms(std::move(vars), {{std::move(e), c}});
}

MultiPoly MultiPoly::from_terms(std::vector<std::string> vars,
                                std::vector<std::pair<Exponents, Rat>> terms) {
    // Sort the variable list and remap exponent entries accordingly.
    std::vector<size_t> idx(vars.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](size_t i, size_t j) { return vars[i] < vars[j]; });
    for (size_t i = 0; i + 1 < idx.size(); ++i)
        if (vars[idx[i]] == vars[idx[i + 1]])
            throw Error("duplicate variable name: " + vars[idx[i]]);

    MultiPoly p;
    p.vars_.reserve(vars.size());
    for (size_t i : idx) p.vars_.push_back(vars[i]);
    for (auto& [e, c] : terms) {
        if (e.size() != vars.size()) throw Error("exponent vector arity mismatch");
        Exponents re(e.size());
        for (size_t i = 0; i < idx.size(); ++i) re[i] = e[idx[i]];
        auto [it, fresh] = p.terms_.emplace(std::move(re), c);
        if (!fresh) it->second += c;
    }
    p.prune();
    return p;
}

void MultiPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exponents& e = terms_.begin()->first;
    return std::accumulate(e.begin(), e.end(), 0u) == 0;
}

Rat MultiPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    return terms_.begin()->second;
}

long MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const Exponents& e = terms_.rbegin()->first;  // graded-lex max
    return std::accumulate(e.begin(), e.end(), 0l);
}

long MultiPoly::degree_in(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return is_zero() ? -1 : 0;
    size_t k = static_cast<size_t>(it - vars_.begin());
    long d = is_zero() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e[k]));
    return d;
}

std::vector<std::string> MultiPoly::used_vars() const {
    std::vector<std::string> out;
    for (size_t k = 0; k < vars_.size(); ++k) {
        for (const auto& [e, c] : terms_) {
            if (e[k] > 0) {
                out.push_back(vars_[k]);
                break;
            }
        }
    }
    return out;
}

std::optional<std::string> MultiPoly::univariate_var() const {
    auto uv = used_vars();
    if (uv.size() == 1) return uv[0];
    return std::nullopt;
}

std::vector<Rat> MultiPoly::coeffs_in(const std::string& var) const {
    long d = degree_in(var);
    if (d < 0) d = 0;
    std::vector<Rat> out(static_cast<size_t>(d) + 1, Rat(0));
    auto it = std::find(vars_.begin(), vars_.end(), var);
    for (const auto& [e, c] : terms_) {
        unsigned k = 0;
        bool pure = true;
        for (size_t i = 0; i < e.size(); ++i) {
            if (it != vars_.end() && i == static_cast<size_t>(it - vars_.begin()))
                k = e[i];
            else if (e[i] > 0)
                pure = false;
        }
        if (!pure) throw Error("coeffs_in on a polynomial with other variables");
        out[k] += c;
    }
    return out;
}

Rat MultiPoly::lex_leading_coeff() const {
    if (terms_.empty()) return Rat(0);
    const Exponents* best = nullptr;
    for (const auto& [e, c] : terms_) {
        if (!best || std::lexicographical_compare(best->begin(), best->end(),
                                                  e.begin(), e.end()))
            best = &e;
    }
    return terms_.at(*best);
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return MultiPoly::zero(vars_);
    size_t k = static_cast<size_t>(it - vars_.begin());
    MultiPoly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[k] == 0) continue;
        Exponents f = e;
        f[k] -= 1;
        out.terms_.emplace(std::move(f), c * Rat(static_cast<long>(e[k])));
    }
    return out;
}

MultiPoly MultiPoly::trimmed() const {
    auto uv = used_vars();
    if (uv.size() == vars_.size()) return *this;
    std::vector<size_t> keep;
    for (size_t k = 0; k < vars_.size(); ++k)
        if (std::find(uv.begin(), uv.end(), vars_[k]) != uv.end()) keep.push_back(k);
    MultiPoly out;
    out.vars_ = uv;
    for (const auto& [e, c] : terms_) {
        Exponents f(keep.size());
        for (size_t i = 0; i < keep.size(); ++i) f[i] = e[keep[i]];
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

std::pair<MultiPoly, MultiPoly> aligned(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ == b.vars_) return {a, b};
    std::vector<std::string> all = a.vars_;
    all.insert(all.end(), b.vars_.begin(), b.vars_.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    auto remap = [&all](const MultiPoly& p) {
        MultiPoly out;
        out.vars_ = all;
        std::vector<size_t> pos(p.vars_.size());
        for (size_t i = 0; i < p.vars_.size(); ++i)
            pos[i] = static_cast<size_t>(
                std::find(all.begin(), all.end(), p.vars_[i]) - all.begin());
        for (const auto& [e, c] : p.terms_) {
            Exponents f(all.size(), 0);
            for (size_t i = 0; i < e.size(); ++i) f[pos[i]] = e[i];
            out.terms_.emplace(std::move(f), c);
        }
        return out;
    };
    return {remap(a), remap(b)};
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    auto [x, y] = aligned(a, b);
    for (const auto& [e, c] : y.terms_) {
        auto [it, fresh] = x.terms_.emplace(e, c);
        if (!fresh) it->second += c;
    }
    x.prune();
    return x;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    auto [x, y] = aligned(a, b);
    MultiPoly out;
    out.vars_ = x.vars_;
    for (const auto& [ea, ca] : x.terms_) {
        for (const auto& [eb, cb] : y.terms_) {
            Exponents e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            Rat c = ca * cb;
            auto [it, fresh] = out.terms_.emplace(std::move(e), c);
            if (!fresh) it->second += c;
        }
    }
    out.prune();
    return out;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
    if (c.is_zero()) return MultiPoly::zero(vars_);
    MultiPoly out = *this;
    for (auto& [e, v] : out.terms_) v *= c;
    return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly acc(Rat(1));
    MultiPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly x = a.trimmed(), y = b.trimmed();
    return x.vars_ == y.vars_ && x.terms_ == y.terms_;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending graded-lex order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool has_var = std::accumulate(e.begin(), e.end(), 0u) > 0;
        bool need_star = false;
        if (!has_var || !a.is_one()) {
            os << a.str();
            need_star = true;
        }
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

ContentSplit content_primitive(const MultiPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : f.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    }
    Rat content = Rat(num_gcd, den_lcm);  // positive since num_gcd = gcd of |..|
    MultiPoly prim = f * content.inverse();
    int sign = prim.lex_leading_coeff().sign();
    if (sign < 0) prim = -prim;
    return {content, prim, sign};
}

std::optional<MultiPoly> exact_divide(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) throw ZeroPolynomial();
    auto [r0, d] = aligned(f, g);
    MultiPoly r = r0;
    MultiPoly q = MultiPoly::zero(d.vars());
    const auto& dlead = *d.terms().rbegin();
    while (!r.is_zero()) {
        const auto& rlead = *r.terms().rbegin();
        Exponents e(rlead.first.size());
        for (size_t i = 0; i < e.size(); ++i) {
            if (rlead.first[i] < dlead.first[i]) return std::nullopt;
            e[i] = rlead.first[i] - dlead.first[i];
        }
        MultiPoly t = MultiPoly::monomial(d.vars(), e, rlead.second / dlead.second);
        q = q + t;
        r = r - t * d;
    }
    return q;
}

namespace {

// Dense integer univariate polynomials, ascending coefficients, used by the
// primitive-PRS gcd. Leading coefficient nonzero unless empty.
using ZVec = std::vector<Int>;

ZVec trim(ZVec v) {
    while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
    return v;
}

Int zcontent(const ZVec& v) {
    Int g = 0;
    for (const Int& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZVec zprim(ZVec v) {
    Int g = zcontent(v);
    if (g > 1)
        for (Int& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return v;
}

// Pseudo-remainder of a by b (deg a >= deg b >= 0).
ZVec pseudo_rem(ZVec a, const ZVec& b) {
    const Int& lb = b.back();
    long db = static_cast<long>(b.size()) - 1;
    while (static_cast<long>(a.size()) - 1 >= db && !a.empty()) {
        long da = static_cast<long>(a.size()) - 1;
        Int la = a.back();
        for (Int& c : a) c *= lb;
        for (long i = 0; i <= db; ++i) a[static_cast<size_t>(da - db + i)] -= la * b[static_cast<size_t>(i)];
        a = trim(std::move(a));
    }
    return a;
}

ZVec zgcd(ZVec a, ZVec b) {
    a = zprim(trim(std::move(a)));
    b = zprim(trim(std::move(b)));
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        ZVec r = zprim(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    if (sgn(a.back()) < 0)
        for (Int& c : a) c = -c;
    return a;
}

}  // namespace

MultiPoly gcd_univariate(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() && b.is_zero()) throw ZeroPolynomial();
    auto var_of = [](const MultiPoly& p) { return p.univariate_var(); };
    auto va = var_of(a), vb = var_of(b);
    if (va && vb && *va != *vb) throw Error("gcd of polynomials in different variables");
    if (!va && !vb) return MultiPoly(Rat(1));
    std::string v = va ? *va : *vb;
    if (a.is_zero() || b.is_zero()) {
        const MultiPoly& nz = a.is_zero() ? b : a;
        return content_primitive(nz).primitive;
    }
    if (a.is_constant() || b.is_constant()) return MultiPoly(Rat(1));

    auto to_z = [&v](const MultiPoly& p) {
        auto cs = content_primitive(p).primitive.coeffs_in(v);
        ZVec z;
        z.reserve(cs.size());
        for (const Rat& c : cs) z.push_back(c.num());
        return z;
    };
    ZVec g = zgcd(to_z(a), to_z(b));
    std::vector<std::pair<Exponents, Rat>> terms;
    for (size_t i = 0; i < g.size(); ++i)
        if (sgn(g[i]) != 0) terms.push_back({{static_cast<unsigned>(i)}, Rat(g[i])});
    if (terms.empty()) return MultiPoly(Rat(1));
    return MultiPoly::from_terms({v}, std::move(terms));
}

bool is_canonical_primitive(const MultiPoly& f) {
    if (f.is_zero() || f.is_constant()) return false;
    for (const auto& [e, c] : f.terms())
        if (!c.is_integer()) return false;
    auto cs = content_primitive(f);
    return cs.content.is_one() && cs.sign > 0;
}

RatFunc::RatFunc(const MultiPoly& num, const MultiPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw ZeroPolynomial();
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = MultiPoly(Rat(1));
        return;
    }
    // Univariate pairs are reduced eagerly.
    auto vn = num_.univariate_var();
    auto vd = den_.univariate_var();
    bool both_univ = vn && vd && *vn == *vd;
    if (both_univ && !den_.is_constant() && !num_.is_constant()) {
        MultiPoly g = gcd_univariate(num_, den_);
        if (!g.is_constant()) {
            num_ = *exact_divide(num_, g);
            den_ = *exact_divide(den_, g);
        }
    }
    // Denominator canonical: primitive, positive lex-leading coefficient.
    auto cs = content_primitive(den_);
    den_ = cs.primitive;
    num_ = num_ * (Rat(cs.sign) / cs.content);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}
RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw ZeroFunction();
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RatFunc& a, const RatFunc& b) {
    return (a.num_ * b.den_) == (b.num_ * a.den_);
}

std::string RatFunc::str() const {
    if (den_.is_constant() && den_.constant_value().is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

MultiPoly Factorization::expand() const {
    MultiPoly acc(unit);
    for (const auto& [f, m] : factors) acc = acc * f.pow(m);
    return acc;
}

long ord_F(const RatFunc& g, const MultiPoly& F) {
    if (g.is_zero()) throw ValuationOfZero();
    if (!is_canonical_primitive(F))
        throw NotIrreducible("expected a canonical primitive nonconstant polynomial");
    if (F.univariate_var()) {
        Factorization fac = factor_univariate(F);
        if (fac.factors.size() != 1 || fac.factors[0].second != 1)
            throw NotIrreducible(F.str());
    }
    auto count = [&F](MultiPoly p) {
        long n = 0;
        while (true) {
            auto q = exact_divide(p, F);
            if (!q) return n;
            p = *q;
            ++n;
        }
    };
    return count(g.num()) - count(g.den());
}

long deg_valuation(const RatFunc& g) {
    if (g.is_zero()) throw ValuationOfZero();
    return g.num().total_degree() - g.den().total_degree();
}

bool check_deg_identity(const RatFunc& g) {
    if (g.is_zero()) throw ValuationOfZero();
    long sum = 0;
    for (const MultiPoly* part : {&g.num(), &g.den()}) {
        if (part->is_constant()) continue;
        Factorization fac = factor_univariate(*part);
        long s = 0;
        for (const auto& [f, m] : fac.factors) s += f.total_degree() * static_cast<long>(m);
        sum += (part == &g.num()) ? s : -s;
    }
    return sum == deg_valuation(g);
}

long gauss_val(const MultiPoly& f, const Int& p) {
    if (f.is_zero()) throw ValuationOfZero();
    bool first = true;
    long vmin = 0;
    for (const auto& [e, c] : f.terms()) {
        long v = padic_val(c, p);
        vmin = first ? v : std::min(vmin, v);
        first = false;
    }
    return vmin;
}

double gauss_norm_log(const MultiPoly& f, const Int& p, const std::vector<double>& weights) {
    if (f.is_zero()) throw ValuationOfZero();
    bool unit_weights = weights.empty();
    if (!unit_weights) {
        if (weights.size() != f.vars().size())
            throw Error("one weight per variable expected");
        unit_weights = std::all_of(weights.begin(), weights.end(),
                                   [](double w) { return w == 1.0; });
    }
    double lp = log_abs_int(p);
    if (unit_weights) return -static_cast<double>(gauss_val(f, p)) * lp;
    double best = 0;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        double t = -static_cast<double>(padic_val(c, p)) * lp;
        for (size_t i = 0; i < e.size(); ++i) t += e[i] * std::log(weights[i]);
        best = first ? t : std::max(best, t);
        first = false;
    }
    return best;
}

}  // namespace adelic
