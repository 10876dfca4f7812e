#ifndef ADELIC_ERRORS_HPP
#define ADELIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace adelic {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ValuationOfZero : Error {
    ValuationOfZero() : Error("valuation of zero is undefined") {}
};

struct NotPrime : Error {
    explicit NotPrime(const std::string& what) : Error("not a prime: " + what) {}
};

struct AllZeroTuple : Error {
    AllZeroTuple() : Error("tuple must contain a nonzero entry") {}
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("zero polynomial") {}
};

struct ZeroFunction : Error {
    ZeroFunction() : Error("zero rational function") {}
};

struct NotIrreducible : Error {
    explicit NotIrreducible(const std::string& what) : Error("not irreducible: " + what) {}
};

struct NotCanonicalIrreducible : Error {
    explicit NotCanonicalIrreducible(const std::string& what)
        : Error("not a canonical irreducible: " + what) {}
};

struct UnsupportedMultivariateFactorization : Error {
    UnsupportedMultivariateFactorization()
        : Error("factorization is only available for univariate polynomials") {}
};

struct UnsupportedDegree : Error {
    explicit UnsupportedDegree(const std::string& what) : Error("degree above cap: " + what) {}
};

struct ConstantPolynomial : Error {
    ConstantPolynomial() : Error("constant polynomial has no roots") {}
};

struct DimensionTooLarge : Error {
    explicit DimensionTooLarge(const std::string& what)
        : Error("too many variables: " + what) {}
};

struct DegenerateResultant : Error {
    DegenerateResultant() : Error("resultant of two constants is degenerate") {}
};

struct ImproperIntersection : Error {
    ImproperIntersection() : Error("sections share a common zero (resultant vanishes)") {}
};

struct DegreeMismatch : Error {
    explicit DegreeMismatch(const std::string& what) : Error("degree mismatch: " + what) {}
};

struct NotABasis : Error {
    NotABasis() : Error("sections are linearly dependent") {}
};

struct SectionVanishesAtPoint : Error {
    SectionVanishesAtPoint() : Error("section vanishes at a point of the cycle") {}
};

struct NorthcottRequiresPositiveLambda : Error {
    NorthcottRequiresPositiveLambda()
        : Error("finiteness enumeration requires lambda > 0") {}
};

struct NonpositiveGap : Error {
    NonpositiveGap() : Error("height gap must be positive") {}
};

struct DegreeZeroInVariable : Error {
    explicit DegreeZeroInVariable(const std::string& var)
        : Error("polynomial has degree zero in variable " + var) {}
};

struct DivisionByZeroCoefficient : Error {
    DivisionByZeroCoefficient() : Error("coefficient with zero denominator") {}
};

// Parse failures carry the byte offset of the offending input.
struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t at)
        : Error(msg + " (at byte " + std::to_string(at) + ")"), offset(at) {}
};

}  // namespace adelic

#endif
