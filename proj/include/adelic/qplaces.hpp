#ifndef ADELIC_QPLACES_HPP
#define ADELIC_QPLACES_HPP

#include <string>
#include <vector>

#include "adelic/primes.hpp"
#include "adelic/rational.hpp"

namespace adelic {

/// A place of Q: either a finite prime or the archimedean absolute value.
/// Every place carries measure weight 1.
class PlaceQ {
  public:
    static PlaceQ arch() { return PlaceQ(); }
    static PlaceQ finite(const Int& p);

    bool is_arch() const { return arch_; }
    const Int& prime() const { return p_; }

    std::string label() const { return arch_ ? "arch" : "p=" + p_.get_str(); }

    friend bool operator==(const PlaceQ& a, const PlaceQ& b) {
        return a.arch_ == b.arch_ && a.p_ == b.p_;
    }

  private:
    PlaceQ() : arch_(true), p_(0) {}
    explicit PlaceQ(const Int& p) : arch_(false), p_(p) {}
    bool arch_;
    Int p_;
};

/// p-adic valuation v with q = p^v * u, u a p-unit. Exact.
long padic_val(const Rat& q, const Int& p);

/// ln|q| at the given place: -v_p(q) ln p at a finite place, ln|q| at arch.
double log_abs(const Rat& q, const PlaceQ& place);

/// |q|_oo * prod_p |q|_p as an exact rational; equals 1 for every q != 0.
Rat product_formula_value(const Rat& q);

/// Multiplicative Weil height: prod over places of max_i |a_i|_omega,
/// an exact positive rational. The finite product runs over the prime
/// support of the tuple. The height itself is its logarithm.
Rat weil_height_exact(const std::vector<Rat>& tuple);

/// h(a_1,...,a_n) = sum over places of ln max_i |a_i|_omega.
double weil_height(const std::vector<Rat>& tuple);

/// h(x, y, 1) == 0 exactly; over Q this characterizes x, y in {0, 1, -1}.
bool unity_height_zero_test(const Rat& x, const Rat& y);

/// Smallest integer m with m >= exp(H / a).
long fermat_m0(double H, double a);

}  // namespace adelic

#endif
