#include "adelic/qplaces.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace adelic {

PlaceQ PlaceQ::finite(const Int& p) {
    if (!is_prime(p)) throw NotPrime(p.get_str());
    return PlaceQ(p);
}

long padic_val(const Rat& q, const Int& p) {
    if (q.is_zero()) throw ValuationOfZero();
    if (!is_prime(p)) throw NotPrime(p.get_str());
    auto val = [&p](const Int& z) -> long {
        if (z == 1) return 0;
        Int m = z;
        long v = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
            ++v;
        }
        return v;
    };
    return val(abs(q.num())) - val(q.den());
}

double log_abs(const Rat& q, const PlaceQ& place) {
    if (q.is_zero()) throw ValuationOfZero();
    if (place.is_arch()) return q.log_abs();
    long v = padic_val(q, place.prime());
    return -static_cast<double>(v) * log_abs_int(place.prime());
}

Rat product_formula_value(const Rat& q) {
    if (q.is_zero()) throw ValuationOfZero();
    // |q|_p = p^{-v_p(q)}, multiplied over the prime support only.
    Rat acc = q.abs();
    for (const Int& p : prime_support(q)) {
        long v = padic_val(q, p);
        acc = acc * Rat(p).pow(-v);
    }
    return acc;
}

Rat weil_height_exact(const std::vector<Rat>& tuple) {
    bool any_nonzero = false;
    for (const Rat& a : tuple) any_nonzero = any_nonzero || !a.is_zero();
    if (tuple.empty() || !any_nonzero) throw AllZeroTuple();

    std::set<Int> support;
    for (const Rat& a : tuple) {
        if (a.is_zero()) continue;
        for (const Int& p : prime_support(a)) support.insert(p);
    }

    Rat acc(1);
    // Archimedean factor: max_i |a_i|.
    Rat arch_max(0);
    for (const Rat& a : tuple) arch_max = std::max(arch_max, a.abs());
    acc = acc * arch_max;
    // Finite factors: p^{-min_i v_p(a_i)} with |0|_p = 0 dropped from the max.
    for (const Int& p : support) {
        long vmin = 0;
        bool first = true;
        for (const Rat& a : tuple) {
            if (a.is_zero()) continue;
            long v = padic_val(a, p);
            vmin = first ? v : std::min(vmin, v);
            first = false;
        }
        acc = acc * Rat(p).pow(-vmin);
    }
    return acc;
}

double weil_height(const std::vector<Rat>& tuple) {
    return weil_height_exact(tuple).log_abs();
}

bool unity_height_zero_test(const Rat& x, const Rat& y) {
    return weil_height_exact({x, y, Rat(1)}) == Rat(1);
}

long fermat_m0(double H, double a) {
    if (!(a > 0)) throw NonpositiveGap();
    if (H < 0) H = 0;
    double bound = std::exp(H / a);
    long m = static_cast<long>(std::ceil(bound));
    if (m < 1) m = 1;
    return m;
}

}  // namespace adelic
