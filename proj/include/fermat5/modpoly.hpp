// Polynomial arithmetic over F_p for word-sized odd primes.  Coefficient
// vectors are ascending, trimmed, with an explicit prime argument; this layer
// backs the integer factorization engine.
#pragma once

#include "fermat5/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace fermat5::modp {

using Poly = std::vector<std::uint64_t>;  // ascending coefficients in [0, p)

inline void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int degree(const Poly& f) { return int(f.size()) - 1; }

inline Poly x_poly() { return Poly{0, 1}; }

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    return detail::powmod_u64(a, p - 2, p);  // p prime, a != 0
}

inline Poly add(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t s = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        r[i] = s >= p ? s - p : s;
    }
    trim(r);
    return r;
}

inline Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0;
        std::uint64_t y = i < b.size() ? b[i] : 0;
        r[i] = x >= y ? x - y : x + p - y;
    }
    trim(r);
    return r;
}

inline Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<__uint128_t> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += __uint128_t(a[i]) * b[j] % p;
    }
    Poly r(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) r[i] = std::uint64_t(acc[i] % p);
    trim(r);
    return r;
}

inline Poly scale(const Poly& a, std::uint64_t s, std::uint64_t p) {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = detail::mulmod_u64(a[i], s, p);
    trim(r);
    return r;
}

inline void divmod(const Poly& a, const Poly& b, std::uint64_t p, Poly& q, Poly& r) {
    if (b.empty()) throw std::domain_error("modp::divmod: division by zero");
    r = a;
    q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, 0);
    std::uint64_t li = inv_mod(b.back(), p);
    while (r.size() >= b.size() && !r.empty()) {
        std::size_t shift = r.size() - b.size();
        std::uint64_t f = detail::mulmod_u64(r.back(), li, p);
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::uint64_t t = detail::mulmod_u64(f, b[i], p);
            std::uint64_t& c = r[shift + i];
            c = c >= t ? c - t : c + p - t;
        }
        trim(r);
        if (r.size() > shift + b.size()) throw std::logic_error("modp::divmod: no progress");
    }
    trim(q);
}

inline Poly rem(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly q, r;
    divmod(a, b, p, q, r);
    return r;
}

inline Poly make_monic(const Poly& f, std::uint64_t p) {
    if (f.empty()) return f;
    return scale(f, inv_mod(f.back(), p), p);
}

inline Poly gcd(Poly a, Poly b, std::uint64_t p) {
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, p);
}

inline Poly deriv(const Poly& f, std::uint64_t p) {
    if (f.size() <= 1) return {};
    Poly r(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = detail::mulmod_u64(f[i], i % p, p);
    trim(r);
    return r;
}

// base^e mod (f, p) with a big-integer exponent.
inline Poly powmod(Poly base, Integer e, const Poly& f, std::uint64_t p) {
    Poly acc{1};
    base = rem(base, f, p);
    while (e > 0) {
        if ((e & 1) != 0) acc = rem(mul(acc, base, p), f, p);
        base = rem(mul(base, base, p), f, p);
        e >>= 1;
    }
    return acc;
}

// Distinct-degree factorization of a squarefree monic f: list of
// (product of all irreducible factors of degree d, d).
inline std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f_in, std::uint64_t p) {
    std::vector<std::pair<Poly, int>> out;
    Poly f = f_in;
    Poly h = x_poly();  // X^(p^i) mod f, iterated
    int d = 0;
    while (degree(f) > 0) {
        ++d;
        if (2 * d > degree(f)) {
            out.emplace_back(f, degree(f));  // what remains is irreducible
            break;
        }
        h = powmod(h, Integer(p), f, p);
        Poly g = gcd(sub(h, x_poly(), p), f, p);
        if (degree(g) > 0) {
            out.emplace_back(g, d);
            Poly q, r;
            divmod(f, g, p, q, r);
            f = make_monic(q, p);
            h = rem(h, f, p);
        }
    }
    return out;
}

// Cantor-Zassenhaus equal-degree splitting (p odd).  The generator is seeded
// deterministically so factorizations are reproducible.
inline void equal_degree(const Poly& f, int d, std::uint64_t p, std::mt19937_64& rng,
                         std::vector<Poly>& out) {
    int n = degree(f);
    if (n == d) {
        out.push_back(make_monic(f, p));
        return;
    }
    Integer exp = (int_pow(Integer(p), unsigned(d)) - 1) / 2;
    for (;;) {
        Poly a(n, 0);
        for (auto& c : a) c = rng() % p;
        trim(a);
        if (degree(a) < 1) continue;
        Poly g = gcd(a, f, p);
        if (degree(g) > 0 && degree(g) < n) {
            Poly q, r;
            divmod(f, g, p, q, r);
            equal_degree(g, d, p, rng, out);
            equal_degree(make_monic(q, p), d, p, rng, out);
            return;
        }
        Poly b = powmod(a, exp, f, p);
        b = sub(b, Poly{1}, p);
        g = gcd(b, f, p);
        if (degree(g) > 0 && degree(g) < n) {
            Poly q, r;
            divmod(f, g, p, q, r);
            equal_degree(g, d, p, rng, out);
            equal_degree(make_monic(q, p), d, p, rng, out);
            return;
        }
    }
}

// Full factorization of a squarefree monic polynomial over F_p (p odd).
inline std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t p) {
    std::mt19937_64 rng(0x463a5f1bu ^ (p * 0x9e3779b97f4a7c15ull));
    std::vector<Poly> out;
    for (auto& [g, d] : distinct_degree(f, p)) {
        if (degree(g) == d)
            out.push_back(make_monic(g, p));
        else
            equal_degree(g, d, p, rng, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace fermat5::modp
