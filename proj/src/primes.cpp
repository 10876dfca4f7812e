#include "adelic/primes.hpp"

#include <algorithm>
#include <set>

namespace adelic {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin_u64(uint64_t n, uint64_t a) {
    if (a % n == 0) return true;
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    // This witness set is deterministic for all n < 3.3e24, in particular all u64.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!miller_rabin_u64(n, a)) return false;
    }
    return true;
}

uint64_t pollard_rho_u64(uint64_t n, uint64_t c0) {
    // Brent's variant; n must be odd composite, not a prime power of 2.
    uint64_t c = c0;
    while (true) {
        uint64_t x = 2, y = 2, d = 1;
        uint64_t q = 1;
        int iter = 0;
        while (d == 1) {
            x = (mulmod_u64(x, x, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            uint64_t diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            q = mulmod_u64(q, diff, n);
            if (++iter % 64 == 0) {
                d = std::__gcd(q, n);
                if (d != 1 && d != n) return d;
                if (d == n) break;
            }
        }
        d = std::__gcd(q, n);
        if (d != 1 && d != n) return d;
        ++c;  // retry with a different polynomial
    }
}

void factor_rec_u64(uint64_t n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out[Int(static_cast<unsigned long>(n))]++;
        return;
    }
    uint64_t d = pollard_rho_u64(n, 1);
    factor_rec_u64(d, out);
    factor_rec_u64(n / d, out);
}

void factor_rec_mpz(const Int& n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (n.fits_ulong_p()) {
        factor_rec_u64(n.get_ui(), out);
        return;
    }
    if (is_prime(n)) {
        out[n]++;
        return;
    }
    // Pollard rho over mpz for oversized composites.
    Int c = 1;
    while (true) {
        Int x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Int diff = abs(x - y);
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 0 && d != 1 && d != n) {
            factor_rec_mpz(d, out);
            factor_rec_mpz(n / d, out);
            return;
        }
        c += 1;
    }
}

}  // namespace

bool is_prime(const Int& n) {
    if (sgn(n) <= 0) return false;
    if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::map<Int, unsigned> factorize(const Int& n) {
    if (sgn(n) == 0) throw ValuationOfZero();
    std::map<Int, unsigned> out;
    Int m = abs(n);
    if (m == 1) return out;
    for (unsigned long p = 2; p <= 1000000ul && Int(p) * p <= m; p = (p == 2 ? 3 : p + 2)) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            out[Int(p)]++;
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
    }
    if (m > 1) factor_rec_mpz(m, out);
    return out;
}

std::vector<Int> prime_support(const Rat& q) {
    if (q.is_zero()) throw ValuationOfZero();
    std::set<Int> ps;
    for (const auto& [p, e] : factorize(q.num())) ps.insert(p);
    for (const auto& [p, e] : factorize(q.den())) ps.insert(p);
    return {ps.begin(), ps.end()};
}

}  // namespace adelic
