// Exact scalar arithmetic: arbitrary-precision rationals, p-adic valuations,
// perfect-square detection and modular residue sets.  Everything here is a
// pure function over immutable values; no floating point anywhere.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fermat5 {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical rational from an arbitrary integer pair.  The result is always
// reduced with positive denominator; zero is 0/1.
inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);  // cpp_rational reduces on construction
}

inline Rational make_rational(long long num, long long den) {
    return make_rational(Integer(num), Integer(den));
}

inline Integer num_of(const Rational& q) { return numerator(q); }
inline Integer den_of(const Rational& q) { return denominator(q); }

// "p/q" with the canonical reduced representation, denominator always shown.
inline std::string rational_to_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

// Human-oriented form: integers print without the "/1".
inline std::string rational_pretty(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return rational_to_string(q);
}

inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer n(s.substr(0, slash));
    Integer d(s.substr(slash + 1));
    return make_rational(n, d);
}

// Height of a reduced fraction p/q: max(|p|, q).
inline Integer height(const Rational& q) {
    Integer n = abs(numerator(q));
    const Integer& d = denominator(q);
    return n > d ? n : d;
}

inline Integer int_pow(Integer base, unsigned exp) {
    Integer acc(1);
    while (exp) {
        if (exp & 1u) acc *= base;
        base *= base;
        exp >>= 1u;
    }
    return acc;
}

inline Rational rational_pow(const Rational& base, int exp) {
    if (exp == 0) return Rational(1);
    unsigned e = exp > 0 ? unsigned(exp) : unsigned(-exp);
    Rational acc(int_pow(numerator(base), e), 1);
    Rational den(int_pow(denominator(base), e), 1);
    acc /= den;
    if (exp < 0) {
        if (acc == 0) throw std::domain_error("rational_pow: 0 to negative power");
        acc = Rational(1) / acc;
    }
    return acc;
}

namespace detail {

// Quadratic-residue tables used as a quick rejection filter before the exact
// integer square root.  Moduli 64, 63, 65, 11 together reject ~99% of
// non-squares.
struct SquareFilter {
    std::vector<bool> m64, m63, m65, m11;
    SquareFilter() : m64(64, false), m63(63, false), m65(65, false), m11(11, false) {
        for (uint32_t i = 0; i < 64; ++i) m64[(i * i) % 64] = true;
        for (uint32_t i = 0; i < 63; ++i) m63[(i * i) % 63] = true;
        for (uint32_t i = 0; i < 65; ++i) m65[(i * i) % 65] = true;
        for (uint32_t i = 0; i < 11; ++i) m11[(i * i) % 11] = true;
    }
    bool maybe_square(const Integer& n) const {
        // 64*63*65*11 = 2882880
        uint32_t r = uint32_t(n % 2882880);
        return m64[r % 64] && m63[r % 63] && m65[r % 65] && m11[r % 11];
    }
};

inline const SquareFilter& square_filter() {
    static const SquareFilter f;
    return f;
}

}  // namespace detail

// Exact integer square root test.  Writes the non-negative root on success.
inline bool is_perfect_square(const Integer& n, Integer& root) {
    if (n < 0) return false;
    if (n == 0) {
        root = 0;
        return true;
    }
    if (!detail::square_filter().maybe_square(n)) return false;
    Integer s = sqrt(n);  // floor square root
    if (s * s == n) {
        root = s;
        return true;
    }
    return false;
}

// Exact squareness of a rational.  A reduced p/q is a square iff p and q are
// both integer squares; returns the non-negative square root.
inline std::optional<Rational> is_square(const Rational& q) {
    if (q < 0) return std::nullopt;
    Integer rn, rd;
    if (!is_perfect_square(numerator(q), rn)) return std::nullopt;
    if (!is_perfect_square(denominator(q), rd)) return std::nullopt;
    return Rational(rn, rd);
}

// Trial-division primality, adequate for the small primes this library uses.
inline bool is_small_prime(const Integer& p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (Integer i = 3; i * i <= p; i += 2)
        if (p % i == 0) return false;
    return true;
}

inline long long padic_val_int(Integer n, const Integer& p) {
    if (n == 0) throw std::domain_error("padic_val_int: valuation of zero");
    long long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

// p-adic valuation over the rationals.  Additive: v_p(qr) = v_p(q) + v_p(r).
struct PadicValuation {
    Integer prime;
    long long value = 0;
    bool infinite = false;  // valuation of 0
};

inline PadicValuation padic_valuation(const Rational& q, const Integer& p) {
    if (!is_small_prime(p)) throw std::domain_error("padic_valuation: p is not prime");
    if (q == 0) return PadicValuation{p, 0, true};
    return PadicValuation{p, padic_val_int(numerator(q), p) - padic_val_int(denominator(q), p), false};
}

// The valuation proper; zero input is an error rather than a sentinel.
inline long long padic_val(const Rational& q, const Integer& p) {
    PadicValuation v = padic_valuation(q, p);
    if (v.infinite) throw std::domain_error("padic_val: valuation of zero is +infinity");
    return v.value;
}

// Sorted, deduplicated set of residues modulo a fixed modulus.
struct ResidueSet {
    std::uint64_t modulus = 0;
    std::vector<std::uint64_t> members;  // sorted, in [0, modulus)

    bool contains(std::uint64_t r) const {
        r %= modulus;
        return std::binary_search(members.begin(), members.end(), r);
    }
    bool operator==(const ResidueSet&) const = default;
};

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return std::uint64_t((__uint128_t(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    a %= m;
    while (e) {
        if (e & 1u) acc = mulmod_u64(acc, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1u;
    }
    return acc;
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace detail

// The set { a^exponent mod modulus }, over all residues or units only.
inline ResidueSet power_residues(std::uint64_t modulus, std::uint64_t exponent, bool units_only) {
    if (modulus < 2) throw std::domain_error("power_residues: modulus must be >= 2");
    ResidueSet out;
    out.modulus = modulus;
    for (std::uint64_t a = 0; a < modulus; ++a) {
        if (units_only && detail::gcd_u64(a, modulus) != 1) continue;
        out.members.push_back(detail::powmod_u64(a, exponent, modulus));
    }
    std::sort(out.members.begin(), out.members.end());
    out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
    return out;
}

// All reduced fractions p/q with max(|p|, q) <= height_bound, in canonical
// scan order: height ascending, then numerator ascending, then denominator
// ascending.  The order is pinned so exhaustive scans are deterministic and
// resumable.
inline std::vector<Rational> rationals_up_to_height(unsigned height_bound) {
    std::vector<Rational> out;
    if (height_bound == 0) return out;
    for (unsigned h = 1; h <= height_bound; ++h) {
        std::vector<std::pair<long long, long long>> batch;  // (num, den)
        // |p| = h, q <= h
        for (long long q = 1; q <= (long long)h; ++q) {
            if (std::gcd((long long)h, q) != 1) continue;
            batch.emplace_back(-(long long)h, q);
            batch.emplace_back((long long)h, q);
        }
        // q = h, |p| < h  (p = 0 only at h = 1)
        for (long long p = -(long long)h + 1; p < (long long)h; ++p) {
            if (h == 1 && p == 0) {
                batch.emplace_back(0, 1);
                continue;
            }
            if (std::gcd(std::abs(p), (long long)h) != 1) continue;
            batch.emplace_back(p, (long long)h);
        }
        std::sort(batch.begin(), batch.end());
        for (auto& [p, q] : batch) out.push_back(make_rational(p, q));
    }
    return out;
}

}  // namespace fermat5
