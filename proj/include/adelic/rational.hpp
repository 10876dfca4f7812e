#ifndef ADELIC_RATIONAL_HPP
#define ADELIC_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "adelic/errors.hpp"

namespace adelic {

using Int = mpz_class;

/// Exact rational scalar. Always stored canonically: gcd(|num|, den) = 1,
/// den >= 1, and zero is 0/1.
class Rat {
  public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rat(const Int& n) : q_(n) {}
    Rat(long n, unsigned long d) : q_(n, d) { q_.canonicalize(); }
    Rat(const Int& n, const Int& d);
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "p/q" or "p" in decimal with optional leading minus.
    static Rat parse(const std::string& text);

    const Int num() const { return q_.get_num(); }
    const Int den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rat abs() const { return Rat(mpq_class(::abs(q_))); }
    Rat inverse() const;
    Rat pow(long e) const;

    double to_double() const { return q_.get_d(); }
    /// ln|q| computed from the bignum layout, accurate for huge values.
    double log_abs() const;

    std::string str() const;

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ + b.q_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ - b.q_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ * b.q_)); }
    friend Rat operator/(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q_)); }

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

  private:
    mpq_class q_;
};

/// ln|z| for a nonzero integer, exact to double rounding even for huge z.
double log_abs_int(const Int& z);

}  // namespace adelic

#endif
