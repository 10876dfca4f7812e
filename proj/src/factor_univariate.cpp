#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "adelic/polyring.hpp"
#include "adelic/primes.hpp"

namespace adelic {
namespace {

// ---------------------------------------------------------------------------
// Dense integer polynomials, ascending coefficients, trimmed.

using ZPoly = std::vector<Int>;

ZPoly ztrim(ZPoly v) {
    while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
    return v;
}

long zdeg(const ZPoly& v) { return static_cast<long>(v.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

ZPoly zderiv(const ZPoly& a) {
    ZPoly d;
    for (size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<long>(i));
    return ztrim(std::move(d));
}

Int zcontent(const ZPoly& a) {
    Int g = 0;
    for (const Int& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly zprimitive(ZPoly a) {
    Int g = zcontent(a);
    if (g > 1)
        for (Int& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    if (!a.empty() && sgn(a.back()) < 0)
        for (Int& c : a) c = -c;
    return a;
}

// Exact division; the caller guarantees divisibility.
ZPoly zdivexact(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a, q(a.size() - b.size() + 1, Int(0));
    long db = zdeg(b);
    while (zdeg(r) >= db) {
        long dr = zdeg(r);
        Int c;
        mpz_divexact(c.get_mpz_t(), r.back().get_mpz_t(), b.back().get_mpz_t());
        q[static_cast<size_t>(dr - db)] = c;
        for (long i = 0; i <= db; ++i)
            r[static_cast<size_t>(dr - db + i)] -= c * b[static_cast<size_t>(i)];
        r = ztrim(std::move(r));
        if (r.empty()) break;
    }
    return ztrim(std::move(q));
}

// Trial division over Z: quotient if b | a, nullopt otherwise.
std::optional<ZPoly> ztrydiv(const ZPoly& a, const ZPoly& b) {
    if (b.empty()) return std::nullopt;
    ZPoly r = a, q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Int(0));
    long db = zdeg(b);
    while (zdeg(r) >= db && !r.empty()) {
        long dr = zdeg(r);
        if (!mpz_divisible_p(r.back().get_mpz_t(), b.back().get_mpz_t()))
            return std::nullopt;
        Int c;
        mpz_divexact(c.get_mpz_t(), r.back().get_mpz_t(), b.back().get_mpz_t());
        q[static_cast<size_t>(dr - db)] = c;
        for (long i = 0; i <= db; ++i)
            r[static_cast<size_t>(dr - db + i)] -= c * b[static_cast<size_t>(i)];
        r = ztrim(std::move(r));
    }
    if (!r.empty()) return std::nullopt;
    return ztrim(std::move(q));
}

ZPoly zgcd_prim(ZPoly a, ZPoly b) {
    a = zprimitive(ztrim(std::move(a)));
    b = zprimitive(ztrim(std::move(b)));
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (zdeg(a) < zdeg(b)) std::swap(a, b);
    while (!b.empty()) {
        // primitive pseudo-remainder sequence
        ZPoly r = a;
        long db = zdeg(b);
        while (zdeg(r) >= db && !r.empty()) {
            long dr = zdeg(r);
            Int lr = r.back();
            for (Int& c : r) c *= b.back();
            for (long i = 0; i <= db; ++i)
                r[static_cast<size_t>(dr - db + i)] -= lr * b[static_cast<size_t>(i)];
            r = ztrim(std::move(r));
        }
        a = std::move(b);
        b = zprimitive(std::move(r));
    }
    return a;
}

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x] for a small odd prime p.

using u64 = uint64_t;
using FpPoly = std::vector<u64>;  // ascending, coefficients in [0, p)

struct Fp {
    u64 p;
    u64 add(u64 a, u64 b) const { return (a + b) % p; }
    u64 sub(u64 a, u64 b) const { return (a + p - b % p) % p; }
    u64 mul(u64 a, u64 b) const {
        return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
    }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1 % p;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a % p, p - 2); }
};

FpPoly fp_trim(FpPoly v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

long fp_deg(const FpPoly& v) { return static_cast<long>(v.size()) - 1; }

FpPoly fp_mul(const Fp& F, const FpPoly& a, const FpPoly& b) {
    if (a.empty() || b.empty()) return {};
    FpPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
    return fp_trim(std::move(c));
}

FpPoly fp_sub(const Fp& F, FpPoly a, const FpPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
    return fp_trim(std::move(a));
}

FpPoly fp_rem(const Fp& F, FpPoly a, const FpPoly& b) {
    long db = fp_deg(b);
    u64 linv = F.inv(b.back());
    while (fp_deg(a) >= db) {
        long da = fp_deg(a);
        u64 c = F.mul(a.back(), linv);
        for (long i = 0; i <= db; ++i)
            a[static_cast<size_t>(da - db + i)] =
                F.sub(a[static_cast<size_t>(da - db + i)], F.mul(c, b[static_cast<size_t>(i)]));
        a = fp_trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

FpPoly fp_divexact(const Fp& F, FpPoly a, const FpPoly& b) {
    long db = fp_deg(b);
    u64 linv = F.inv(b.back());
    FpPoly q(a.size() - b.size() + 1, 0);
    while (fp_deg(a) >= db && !a.empty()) {
        long da = fp_deg(a);
        u64 c = F.mul(a.back(), linv);
        q[static_cast<size_t>(da - db)] = c;
        for (long i = 0; i <= db; ++i)
            a[static_cast<size_t>(da - db + i)] =
                F.sub(a[static_cast<size_t>(da - db + i)], F.mul(c, b[static_cast<size_t>(i)]));
        a = fp_trim(std::move(a));
    }
    return fp_trim(std::move(q));
}

FpPoly fp_monic(const Fp& F, FpPoly a) {
    if (a.empty()) return a;
    u64 inv = F.inv(a.back());
    for (u64& c : a) c = F.mul(c, inv);
    return a;
}

FpPoly fp_gcd(const Fp& F, FpPoly a, FpPoly b) {
    a = fp_trim(std::move(a));
    b = fp_trim(std::move(b));
    while (!b.empty()) {
        FpPoly r = fp_rem(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(F, std::move(a));
}

FpPoly fp_deriv(const Fp& F, const FpPoly& a) {
    FpPoly d;
    for (size_t i = 1; i < a.size(); ++i) d.push_back(F.mul(a[i], i % F.p));
    return fp_trim(std::move(d));
}

// x^e mod f by repeated squaring.
FpPoly fp_xpow_mod(const Fp& F, u64 e, const FpPoly& f) {
    FpPoly r{1}, x{0, 1};
    x = fp_rem(F, x, f);
    while (e) {
        if (e & 1) r = fp_rem(F, fp_mul(F, r, x), f);
        x = fp_rem(F, fp_mul(F, x, x), f);
        e >>= 1;
    }
    return r;
}

// Extended Euclid: returns (g, s, t) monic g with s*a + t*b = g.
struct FpXgcd {
    FpPoly g, s, t;
};

FpXgcd fp_xgcd(const Fp& F, FpPoly a, FpPoly b) {
    FpPoly s0{1}, s1{}, t0{}, t1{1};
    a = fp_trim(std::move(a));
    b = fp_trim(std::move(b));
    while (!b.empty()) {
        long db = fp_deg(b);
        u64 linv = F.inv(b.back());
        FpPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, 0);
        FpPoly r = a;
        while (fp_deg(r) >= db && !r.empty()) {
            long dr = fp_deg(r);
            u64 c = F.mul(r.back(), linv);
            q[static_cast<size_t>(dr - db)] = c;
            for (long i = 0; i <= db; ++i)
                r[static_cast<size_t>(dr - db + i)] =
                    F.sub(r[static_cast<size_t>(dr - db + i)],
                          F.mul(c, b[static_cast<size_t>(i)]));
            r = fp_trim(std::move(r));
        }
        q = fp_trim(std::move(q));
        FpPoly s2 = fp_sub(F, s0, fp_mul(F, q, s1));
        FpPoly t2 = fp_sub(F, t0, fp_mul(F, q, t1));
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!a.empty()) {
        u64 inv = F.inv(a.back());
        for (u64& c : a) c = F.mul(c, inv);
        for (u64& c : s0) c = F.mul(c, inv);
        for (u64& c : t0) c = F.mul(c, inv);
    }
    return {a, s0, t0};
}

// Berlekamp factorization of a monic squarefree polynomial mod p.
std::vector<FpPoly> berlekamp(const Fp& F, const FpPoly& f) {
    long n = fp_deg(f);
    if (n <= 1) return {f};

    // Rows of the Frobenius matrix: x^{ip} mod f.
    std::vector<FpPoly> rows(static_cast<size_t>(n));
    FpPoly xp = fp_xpow_mod(F, F.p, f);
    FpPoly cur{1};
    for (long i = 0; i < n; ++i) {
        rows[static_cast<size_t>(i)] = cur;
        cur = fp_rem(F, fp_mul(F, cur, xp), f);
    }

    // B = Q - I, columns indexed by power basis.
    std::vector<std::vector<u64>> B(static_cast<size_t>(n), std::vector<u64>(static_cast<size_t>(n), 0));
    for (long i = 0; i < n; ++i) {
        const FpPoly& r = rows[static_cast<size_t>(i)];
        for (long j = 0; j < n; ++j) {
            u64 v = (static_cast<size_t>(j) < r.size()) ? r[static_cast<size_t>(j)] : 0;
            if (i == j) v = F.sub(v, 1);
            B[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;  // transpose: solve v*Q = v
        }
    }

    // Nullspace of B by Gauss-Jordan.
    std::vector<long> pivot_col(static_cast<size_t>(n), -1);
    long rank = 0;
    for (long col = 0; col < n && rank < n; ++col) {
        long piv = -1;
        for (long r = rank; r < n; ++r)
            if (B[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(B[static_cast<size_t>(piv)], B[static_cast<size_t>(rank)]);
        u64 inv = F.inv(B[static_cast<size_t>(rank)][static_cast<size_t>(col)]);
        for (long j = 0; j < n; ++j)
            B[static_cast<size_t>(rank)][static_cast<size_t>(j)] =
                F.mul(B[static_cast<size_t>(rank)][static_cast<size_t>(j)], inv);
        for (long r = 0; r < n; ++r) {
            if (r == rank) continue;
            u64 c = B[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (c == 0) continue;
            for (long j = 0; j < n; ++j)
                B[static_cast<size_t>(r)][static_cast<size_t>(j)] =
                    F.sub(B[static_cast<size_t>(r)][static_cast<size_t>(j)],
                          F.mul(c, B[static_cast<size_t>(rank)][static_cast<size_t>(j)]));
        }
        pivot_col[static_cast<size_t>(rank)] = col;
        ++rank;
    }
    std::vector<FpPoly> basis;
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (long r = 0; r < rank; ++r) is_pivot[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] = true;
    for (long col = 0; col < n; ++col) {
        if (is_pivot[static_cast<size_t>(col)]) continue;
        FpPoly v(static_cast<size_t>(n), 0);
        v[static_cast<size_t>(col)] = 1;
        for (long r = 0; r < rank; ++r) {
            long pc = pivot_col[static_cast<size_t>(r)];
            v[static_cast<size_t>(pc)] =
                F.sub(0, B[static_cast<size_t>(r)][static_cast<size_t>(col)]);
        }
        basis.push_back(fp_trim(std::move(v)));
    }

    size_t r_factors = basis.size();  // includes the constant vector
    std::vector<FpPoly> factors{f};
    if (r_factors <= 1) return factors;

    for (const FpPoly& v : basis) {
        if (fp_deg(v) < 1) continue;  // skip the all-ones kernel vector
        if (factors.size() == r_factors) break;
        std::vector<FpPoly> next;
        for (const FpPoly& w : factors) {
            if (fp_deg(w) <= 1) {
                next.push_back(w);
                continue;
            }
            FpPoly rest = w;
            for (u64 s = 0; s < F.p && fp_deg(rest) > 0; ++s) {
                FpPoly vs = v;
                if (vs.empty()) vs = {0};
                vs[0] = F.sub(vs[0], s);
                FpPoly g = fp_gcd(F, rest, fp_trim(std::move(vs)));
                if (fp_deg(g) > 0 && fp_deg(g) < fp_deg(rest)) {
                    next.push_back(g);
                    rest = fp_divexact(F, rest, g);
                }
            }
            next.push_back(rest);
        }
        factors = std::move(next);
    }
    for (FpPoly& w : factors) w = fp_monic(F, std::move(w));
    std::sort(factors.begin(), factors.end());
    return factors;
}

// ---------------------------------------------------------------------------
// Hensel lifting and recombination.

Int sym_mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

// Symmetric reduction that preserves the (monic) leading coefficient.
ZPoly zmod_sym_keep_monic(ZPoly a, const Int& m) {
    for (size_t i = 0; i + 1 < a.size(); ++i) a[i] = sym_mod(a[i], m);
    return a;
}

ZPoly zmod_sym(ZPoly a, const Int& m) {
    for (Int& c : a) c = sym_mod(c, m);
    return ztrim(std::move(a));
}

FpPoly z_to_fp(const Fp& F, const ZPoly& a) {
    FpPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        Int c = a[i] % static_cast<long>(F.p);
        if (c < 0) c += static_cast<long>(F.p);
        r[i] = c.get_ui();
    }
    return fp_trim(std::move(r));
}

ZPoly fp_to_z(const FpPoly& a, u64 p) {
    ZPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        Int c(static_cast<unsigned long>(a[i]));
        r[i] = sym_mod(c, Int(static_cast<unsigned long>(p)));
    }
    return ztrim(std::move(r));
}

// Lift F = lc * g_1 ... g_r from mod p to mod p^k (g_i monic).
std::vector<ZPoly> hensel_lift(const ZPoly& F_in, const Int& lc,
                               const std::vector<FpPoly>& gs_p, const Fp& Fp_ctx,
                               int k) {
    const u64 p = Fp_ctx.p;
    size_t r = gs_p.size();

    // Partial-fraction solvers mod p: sigma_i = (lc * prod_{j != i} g_j)^{-1} mod g_i.
    std::vector<FpPoly> sigma(r);
    for (size_t i = 0; i < r; ++i) {
        FpPoly prod{static_cast<u64>(mpz_fdiv_ui(lc.get_mpz_t(), p))};
        for (size_t j = 0; j < r; ++j)
            if (j != i) prod = fp_mul(Fp_ctx, prod, gs_p[j]);
        prod = fp_rem(Fp_ctx, std::move(prod), gs_p[i]);
        FpXgcd x = fp_xgcd(Fp_ctx, prod, gs_p[i]);
        sigma[i] = x.s;  // s * prod == 1 mod g_i
    }

    std::vector<ZPoly> gs(r);
    for (size_t i = 0; i < r; ++i) gs[i] = fp_to_z(gs_p[i], p);

    Int pj(static_cast<unsigned long>(p));
    for (int step = 1; step < k; ++step) {
        Int pj1 = pj * static_cast<long>(p);
        // error e = (F - lc * prod g_i)/p^j  (mod p)
        ZPoly prod{Int(1)};
        for (size_t i = 0; i < r; ++i) prod = zmul(prod, gs[i]);
        for (Int& c : prod) c *= lc;
        ZPoly E = F_in;
        if (E.size() < prod.size()) E.resize(prod.size(), Int(0));
        for (size_t i = 0; i < prod.size(); ++i) E[i] -= prod[i];
        E = ztrim(std::move(E));
        bool zero = true;
        for (const Int& c : E)
            if (sgn(c % pj1) != 0) { zero = false; break; }
        if (!zero) {
            ZPoly e = E;
            for (Int& c : e) {
                Int t;
                mpz_fdiv_q(t.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
                c = t;
            }
            FpPoly ep = z_to_fp(Fp_ctx, e);
            for (size_t i = 0; i < r; ++i) {
                FpPoly di = fp_rem(Fp_ctx, fp_mul(Fp_ctx, ep, sigma[i]), gs_p[i]);
                ZPoly dz = fp_to_z(di, p);
                // g_i += p^j * delta_i
                if (gs[i].size() < dz.size()) gs[i].resize(dz.size(), Int(0));
                for (size_t t = 0; t < dz.size(); ++t) gs[i][t] += pj * dz[t];
            }
        }
        pj = pj1;
        for (size_t i = 0; i < r; ++i) gs[i] = zmod_sym_keep_monic(gs[i], pj);
    }
    return gs;
}

// Zassenhaus recombination of lifted monic factors.
void recombine(ZPoly F, std::vector<ZPoly> pool, const Int& pk,
               std::vector<ZPoly>& out) {
    while (true) {
        size_t n = pool.size();
        if (n == 0) return;
        if (n == 1) {
            out.push_back(zprimitive(F));
            return;
        }
        bool found = false;
        for (size_t card = 1; card <= n / 2 && !found; ++card) {
            // iterate subsets of the given cardinality
            std::vector<size_t> idx(card);
            std::iota(idx.begin(), idx.end(), 0);
            while (true) {
                ZPoly cand{F.back()};  // lc(F)
                for (size_t i : idx) cand = zmod_sym(zmul(cand, pool[i]), pk);
                cand = zprimitive(ztrim(std::move(cand)));
                if (!cand.empty()) {
                    auto q = ztrydiv(F, cand);
                    if (q) {
                        out.push_back(cand);
                        F = zprimitive(*q);
                        std::vector<ZPoly> rest;
                        for (size_t i = 0, k = 0; i < pool.size(); ++i) {
                            if (k < idx.size() && idx[k] == i) { ++k; continue; }
                            rest.push_back(pool[i]);
                        }
                        pool = std::move(rest);
                        found = true;
                        break;
                    }
                }
                // next subset
                long pos = static_cast<long>(card) - 1;
                while (pos >= 0 && idx[static_cast<size_t>(pos)] ==
                                       n - card + static_cast<size_t>(pos))
                    --pos;
                if (pos < 0) break;
                ++idx[static_cast<size_t>(pos)];
                for (size_t i = static_cast<size_t>(pos) + 1; i < card; ++i)
                    idx[i] = idx[i - 1] + 1;
            }
        }
        if (!found) {
            // pool as a whole is the last irreducible factor
            out.push_back(zprimitive(F));
            return;
        }
    }
}

// Factor a primitive squarefree integer polynomial of degree >= 1.
std::vector<ZPoly> factor_squarefree(const ZPoly& f) {
    if (zdeg(f) == 1) return {zprimitive(f)};

    // pick a good small odd prime: p does not divide lc, f stays squarefree mod p
    static const u64 kPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                                  47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101,
                                  103, 107, 109, 113, 127, 131, 137, 139, 149, 151};
    Fp F{0};
    FpPoly fp;
    bool ok = false;
    for (u64 p : kPrimes) {
        if (mpz_fdiv_ui(f.back().get_mpz_t(), p) == 0) continue;
        F.p = p;
        fp = z_to_fp(F, f);
        if (fp_deg(fp) != zdeg(f)) continue;
        FpPoly g = fp_gcd(F, fp, fp_deriv(F, fp));
        if (fp_deg(g) == 0) {
            ok = true;
            break;
        }
    }
    if (!ok) throw Error("no suitable modular prime found");  // unreachable at cap 30

    std::vector<FpPoly> modular = berlekamp(F, fp_monic(F, fp));
    if (modular.size() == 1) return {zprimitive(f)};

    // Mignotte-style bound on factor coefficients, times |lc|.
    Int norm1 = 0;
    for (const Int& c : f) norm1 += abs(c);
    Int bound = abs(f.back()) * norm1;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(),
                 static_cast<unsigned long>(zdeg(f) + 1));
    int k = 1;
    Int pk(static_cast<unsigned long>(F.p));
    while (pk <= 2 * bound) {
        pk *= static_cast<long>(F.p);
        ++k;
    }

    std::vector<ZPoly> lifted = hensel_lift(f, f.back(), modular, F, k);
    std::vector<ZPoly> out;
    recombine(f, std::move(lifted), pk, out);
    return out;
}

MultiPoly zpoly_to_multipoly(const ZPoly& f, const std::string& var) {
    std::vector<std::pair<Exponents, Rat>> terms;
    for (size_t i = 0; i < f.size(); ++i)
        if (sgn(f[i]) != 0) terms.push_back({{static_cast<unsigned>(i)}, Rat(f[i])});
    return MultiPoly::from_terms({var}, std::move(terms));
}

}  // namespace

Factorization factor_univariate(const MultiPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    auto uv = f.used_vars();
    if (uv.size() > 1) throw UnsupportedMultivariateFactorization();
    if (f.is_constant()) return {f.constant_value(), {}};
    const std::string var = uv[0];
    long deg = f.degree_in(var);
    if (deg > kFactorDegreeCap) throw UnsupportedDegree(std::to_string(deg));

    ContentSplit cs = content_primitive(f);
    Rat unit = Rat(cs.sign) * cs.content;

    ZPoly F;
    for (const Rat& c : cs.primitive.coeffs_in(var)) F.push_back(c.num());
    F = ztrim(std::move(F));

    std::vector<std::pair<ZPoly, unsigned>> pieces;

    // Powers of the variable itself.
    size_t valuation = 0;
    while (valuation < F.size() && sgn(F[valuation]) == 0) ++valuation;
    if (valuation > 0) {
        pieces.push_back({ZPoly{Int(0), Int(1)}, static_cast<unsigned>(valuation)});
        F.erase(F.begin(), F.begin() + static_cast<long>(valuation));
    }

    // Yun's squarefree decomposition.
    if (zdeg(F) >= 1) {
        ZPoly g = zgcd_prim(F, zderiv(F));
        if (zdeg(g) == 0) {
            pieces.push_back({F, 1});
        } else {
            ZPoly c = zdivexact(F, g);
            ZPoly w = zdivexact(zderiv(F), g);
            // d = w - c'
            ZPoly d = w, cp = zderiv(c);
            if (d.size() < cp.size()) d.resize(cp.size(), Int(0));
            for (size_t i = 0; i < cp.size(); ++i) d[i] -= cp[i];
            d = ztrim(std::move(d));
            unsigned mult = 1;
            while (zdeg(c) > 0) {
                ZPoly s = zgcd_prim(c, d);
                if (zdeg(s) > 0) pieces.push_back({s, mult});
                c = zdivexact(c, s);
                ZPoly t = zdivexact(d, s);
                cp = zderiv(c);
                d = t;
                if (d.size() < cp.size()) d.resize(cp.size(), Int(0));
                for (size_t i = 0; i < cp.size(); ++i) d[i] -= cp[i];
                d = ztrim(std::move(d));
                ++mult;
            }
        }
    } else if (zdeg(F) == 0) {
        unit = unit * Rat(F[0]);  // residual constant after stripping x^v
    }

    Factorization result{unit, {}};
    for (const auto& [sq, mult] : pieces) {
        if (zdeg(sq) == 0) continue;
        for (const ZPoly& irr : factor_squarefree(zprimitive(sq)))
            result.factors.push_back({zpoly_to_multipoly(irr, var), mult});
    }

    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& a, const auto& b) {
                  if (a.first.total_degree() != b.first.total_degree())
                      return a.first.total_degree() < b.first.total_degree();
                  return a.first.str() < b.first.str();
              });
    return result;
}

}  // namespace adelic
