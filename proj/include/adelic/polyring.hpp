#ifndef ADELIC_POLYRING_HPP
#define ADELIC_POLYRING_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adelic/rational.hpp"

namespace adelic {

using Exponents = std::vector<unsigned>;

/// Graded-lexicographic order on exponent vectors of equal length.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse exact multivariate polynomial over Q.
///
/// Invariants: variable names are sorted and unique; every stored
/// coefficient is nonzero; exponent vectors have one entry per variable.
/// The zero polynomial has an empty term map.
class MultiPoly {
  public:
    using TermMap = std::map<Exponents, Rat, GradedLexLess>;

    MultiPoly() = default;
    explicit MultiPoly(const Rat& c);
    static MultiPoly zero(std::vector<std::string> vars);
    static MultiPoly constant(const Rat& c) { return MultiPoly(c); }
    static MultiPoly variable(const std::string& name);
    static MultiPoly monomial(std::vector<std::string> vars, Exponents e, const Rat& c);
    static MultiPoly from_terms(std::vector<std::string> vars,
                                std::vector<std::pair<Exponents, Rat>> terms);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() <= 1; }
    Rat constant_value() const;  // requires is_constant()

    long total_degree() const;  // -1 for the zero polynomial
    long degree_in(const std::string& var) const;
    std::vector<std::string> used_vars() const;
    /// Name of the single used variable, if the polynomial is univariate
    /// and nonconstant.
    std::optional<std::string> univariate_var() const;

    /// Dense coefficient list a_0..a_d (ascending powers of `var`);
    /// entries outside the variable's support are zero.
    std::vector<Rat> coeffs_in(const std::string& var) const;

    /// Leading coefficient for the pure lexicographic term order.
    Rat lex_leading_coeff() const;

    MultiPoly derivative(const std::string& var) const;

    /// Copy with unused variables dropped; canonical form for comparisons.
    MultiPoly trimmed() const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator*(const Rat& c) const;
    MultiPoly pow(unsigned e) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Deterministic text form (terms in descending graded-lex order).
    std::string str() const;

  private:
    std::vector<std::string> vars_;
    TermMap terms_;
    void prune();
    friend std::pair<MultiPoly, MultiPoly> aligned(const MultiPoly& a, const MultiPoly& b);
};

/// Result of splitting f = sign * content * primitive, with content > 0,
/// primitive integer-coefficient of coefficient gcd 1 and positive
/// lex-leading coefficient.
struct ContentSplit {
    Rat content;
    MultiPoly primitive;
    int sign;  // +1 or -1
};

ContentSplit content_primitive(const MultiPoly& f);

/// Quotient of f by g when g divides f exactly, std::nullopt otherwise.
std::optional<MultiPoly> exact_divide(const MultiPoly& f, const MultiPoly& g);

/// Gcd of two univariate polynomials (primitive PRS over Z); the result
/// is primitive with positive leading coefficient, or a constant 1.
MultiPoly gcd_univariate(const MultiPoly& a, const MultiPoly& b);

/// True when f is primitive integer-coefficient, nonconstant, with
/// positive lex-leading coefficient.
bool is_canonical_primitive(const MultiPoly& f);

/// Reduced fraction of two polynomials. The denominator is primitive with
/// positive lex-leading coefficient; common factors are removed eagerly in
/// the univariate case and lazily (content only) in the multivariate case.
class RatFunc {
  public:
    RatFunc() : num_(Rat(0)), den_(Rat(1)) {}
    explicit RatFunc(const MultiPoly& num) : num_(num), den_(Rat(1)) {}
    RatFunc(const MultiPoly& num, const MultiPoly& den);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b);
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string str() const;

  private:
    MultiPoly num_, den_;
    void normalize();
};

/// Complete factorization unit * prod F_i^{m_i}; the factors are canonical
/// irreducibles (primitive, integer coefficients, positive lex-leading
/// coefficient), pairwise non-associate.
struct Factorization {
    Rat unit;
    std::vector<std::pair<MultiPoly, unsigned>> factors;

    MultiPoly expand() const;
};

/// Degree cap for univariate factorization.
inline constexpr long kFactorDegreeCap = 30;

/// Factorization into Q-irreducibles: squarefree split, modular
/// factorization, Hensel lifting, subset recombination. Deterministic.
Factorization factor_univariate(const MultiPoly& f);

/// F-adic order of g at the canonical irreducible F.
long ord_F(const RatFunc& g, const MultiPoly& F);

/// total_degree(num) - total_degree(den).
long deg_valuation(const RatFunc& g);

/// Executable form of the degree identity deg(g) = sum deg(F) ord_F(g)
/// over the factorization of a univariate rational function.
bool check_deg_identity(const RatFunc& g);

/// min over terms of v_p(coefficient); the Gauss norm with unit weights
/// is exp(-gauss_val * ln p).
long gauss_val(const MultiPoly& f, const Int& p);

/// ln of the weighted Gauss norm: max over terms of |a_d|_p * prod e_i^{d_i}.
/// Exact integer-times-ln(p) when all weights are 1.
double gauss_norm_log(const MultiPoly& f, const Int& p,
                      const std::vector<double>& weights = {});

}  // namespace adelic

#endif
