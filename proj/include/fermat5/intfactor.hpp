// Factorization of monic squarefree integer polynomials: factor mod a small
// prime, Hensel-lift to a Landau-Mignotte height bound, then recombine by
// subset search.  Degrees here stay small (<= 16), so the elementary
// quadratic lift and combination scan are entirely adequate.
#pragma once

#include "fermat5/modpoly.hpp"
#include "fermat5/polynomial.hpp"

#include <algorithm>
#include <vector>

namespace fermat5 {

using IPoly = std::vector<Integer>;  // ascending coefficients

namespace intp {

inline void trim(IPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int degree(const IPoly& f) { return int(f.size()) - 1; }

inline Integer eval(const IPoly& f, const Integer& x) {
    Integer acc(0);
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
    return acc;
}

inline IPoly deriv(const IPoly& f) {
    if (f.size() <= 1) return {};
    IPoly r(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = f[i] * Integer(std::uint64_t(i));
    trim(r);
    return r;
}

inline IPoly add(const IPoly& a, const IPoly& b) {
    IPoly r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    trim(r);
    return r;
}

inline IPoly sub(const IPoly& a, const IPoly& b) {
    IPoly r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    trim(r);
    return r;
}

inline IPoly mul(const IPoly& a, const IPoly& b) {
    if (a.empty() || b.empty()) return {};
    IPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline IPoly reduce_mod(const IPoly& f, const Integer& m) {
    IPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        r[i] = f[i] % m;
        if (r[i] < 0) r[i] += m;
    }
    trim(r);
    return r;
}

// Symmetric (centered) representative with entries in (-m/2, m/2].
inline IPoly centered(const IPoly& f, const Integer& m) {
    IPoly r = reduce_mod(f, m);
    for (Integer& c : r)
        if (c * 2 > m) c -= m;
    trim(r);
    return r;
}

inline IPoly mul_mod(const IPoly& a, const IPoly& b, const Integer& m) { return reduce_mod(mul(a, b), m); }

// Division by a monic divisor over Z/m.
inline void divmod_monic_mod(const IPoly& a, const IPoly& b, const Integer& m, IPoly& q, IPoly& r) {
    if (b.empty() || b.back() != 1) throw std::domain_error("divmod_monic_mod: divisor must be monic");
    r = reduce_mod(a, m);
    q.assign(r.size() > b.size() ? r.size() - b.size() + 1 : 1, Integer(0));
    while (r.size() >= b.size() && !r.empty()) {
        std::size_t shift = r.size() - b.size();
        Integer f = r.back();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) {
            Integer t = (r[shift + i] - f * b[i]) % m;
            if (t < 0) t += m;
            r[shift + i] = t;
        }
        trim(r);
    }
    trim(q);
}

// Exact division over Z when the remainder vanishes (monic divisor).
inline bool try_exact_divide(const IPoly& a, const IPoly& b, IPoly& q) {
    if (b.empty() || b.back() != 1) throw std::domain_error("try_exact_divide: divisor must be monic");
    IPoly r = a;
    q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Integer(0));
    while (r.size() >= b.size() && !r.empty()) {
        std::size_t shift = r.size() - b.size();
        Integer f = r.back();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
        trim(r);
    }
    trim(q);
    return r.empty();
}

inline modp::Poly to_modp(const IPoly& f, std::uint64_t p) {
    modp::Poly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        Integer c = f[i] % p;
        if (c < 0) c += p;
        r[i] = std::uint64_t(c);
    }
    modp::trim(r);
    return r;
}

inline IPoly from_modp(const modp::Poly& f) {
    IPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
    return r;
}

// Height bound: any monic factor of monic F has coefficients bounded by
// 2^deg(F) * ||F||_2.
inline Integer factor_coeff_bound(const IPoly& f) {
    Integer s(0);
    for (const Integer& c : f) s += c * c;
    return int_pow(Integer(2), unsigned(degree(f))) * (sqrt(s) + 1);
}

// Quadratic Hensel step (von zur Gathen & Gerhard style): from
//   f = g h (mod m),  s g + t h = 1 (mod m)
// produce the same data mod m^2.  f, g, h monic throughout.
struct HenselPair {
    IPoly g, h, s, t;
    Integer m;
};

inline void hensel_step(const IPoly& f, HenselPair& hp) {
    const Integer m2 = hp.m * hp.m;
    IPoly e = reduce_mod(sub(f, mul(hp.g, hp.h)), m2);
    IPoly q, r;
    divmod_monic_mod(mul_mod(hp.s, e, m2), hp.h, m2, q, r);
    IPoly gstar = reduce_mod(add(hp.g, add(mul(hp.t, e), mul(q, hp.g))), m2);
    IPoly hstar = reduce_mod(add(hp.h, r), m2);
    IPoly b = reduce_mod(sub(add(mul(hp.s, gstar), mul(hp.t, hstar)), IPoly{Integer(1)}), m2);
    IPoly c, d;
    divmod_monic_mod(mul_mod(hp.s, b, m2), hstar, m2, c, d);
    IPoly sstar = reduce_mod(sub(hp.s, d), m2);
    IPoly tstar = reduce_mod(sub(hp.t, add(mul(hp.t, b), mul(c, gstar))), m2);
    hp.g = gstar;
    hp.h = hstar;
    hp.s = sstar;
    hp.t = tstar;
    hp.m = m2;
    if (degree(hp.g) != degree(gstar)) throw std::logic_error("hensel_step: degree drift");
}

// Lift f = g0 h0 (mod p) with g0, h0 monic and coprime mod p until the
// modulus reaches at least `target`.
inline HenselPair hensel_lift_pair(const IPoly& f, const modp::Poly& g0, const modp::Poly& h0,
                                   std::uint64_t p, const Integer& target) {
    // Bezout data mod p by the extended Euclidean algorithm.
    modp::Poly r0 = g0, r1 = h0;
    modp::Poly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        modp::Poly q, r2;
        modp::divmod(r0, r1, p, q, r2);
        modp::Poly s2 = modp::sub(s0, modp::mul(q, s1, p), p);
        modp::Poly t2 = modp::sub(t0, modp::mul(q, t1, p), p);
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (modp::degree(r0) != 0) throw std::logic_error("hensel_lift_pair: factors not coprime mod p");
    std::uint64_t inv = modp::inv_mod(r0[0], p);
    // s g0 + t h0 = 1 (mod p): note s pairs with g, so s must multiply g...
    // with the update formulas above we need s g + t h = 1 where divisions
    // are by h; r0 = s0 g0 + t0 h0.
    modp::Poly s = modp::scale(s0, inv, p);
    modp::Poly t = modp::scale(t0, inv, p);

    HenselPair hp{from_modp(g0), from_modp(h0), from_modp(s), from_modp(t), Integer(p)};
    while (hp.m < target) hensel_step(f, hp);
    return hp;
}

}  // namespace intp

// Irreducible factors of a monic squarefree integer polynomial, each monic
// with integer coefficients, in a deterministic canonical order.
inline std::vector<IPoly> zassenhaus_factor(const IPoly& f_in) {
    using namespace intp;
    IPoly f = f_in;
    trim(f);
    if (degree(f) < 1) throw std::domain_error("zassenhaus_factor: degree must be >= 1");
    if (f.back() != 1) throw std::domain_error("zassenhaus_factor: polynomial must be monic");
    if (degree(f) == 1) return {f};

    // Prime selection: f must stay squarefree mod p; among the first few
    // admissible primes keep the one with the fewest modular factors.
    std::uint64_t best_p = 0;
    std::vector<modp::Poly> best_factors;
    int tried = 0;
    for (std::uint64_t p = 3; tried < 4; p += 2) {
        if (!is_small_prime(Integer(p))) continue;
        modp::Poly fp = to_modp(f, p);
        if (modp::degree(fp) != degree(f)) continue;  // p divides the leading coefficient: impossible (monic), but keep the guard
        if (modp::degree(modp::gcd(fp, modp::deriv(fp, p), p)) != 0) continue;
        auto factors = modp::factor_squarefree(modp::make_monic(fp, p), p);
        ++tried;
        if (best_p == 0 || factors.size() < best_factors.size()) {
            best_p = p;
            best_factors = std::move(factors);
        }
        if (best_factors.size() == 1) break;
    }
    if (best_factors.size() == 1) return {f};  // irreducible: one factor mod p

    // Lift the modular factorization above the coefficient bound.  All nodes
    // lift to the same modulus big_m = p^(2^k) >= 2*bound + 1.
    const Integer target = 2 * factor_coeff_bound(f) + 1;
    const std::uint64_t p = best_p;
    Integer big_m(p);
    while (big_m < target) big_m *= big_m;

    // Factor-tree lifting: split the factor list in halves recursively.
    struct Lifter {
        std::uint64_t p;
        const Integer& target;
        std::vector<IPoly> out;
        void run(const IPoly& fcur, const std::vector<modp::Poly>& parts) {
            if (parts.size() == 1) {
                out.push_back(fcur);
                return;
            }
            std::size_t half = parts.size() / 2;
            modp::Poly g0{1}, h0{1};
            for (std::size_t i = 0; i < half; ++i) g0 = modp::mul(g0, parts[i], p);
            for (std::size_t i = half; i < parts.size(); ++i) h0 = modp::mul(h0, parts[i], p);
            intp::HenselPair hp = intp::hensel_lift_pair(fcur, g0, h0, p, target);
            run(hp.g, {parts.begin(), parts.begin() + half});
            run(hp.h, {parts.begin() + half, parts.end()});
        }
    };
    Lifter lifter{p, target, {}};
    lifter.run(reduce_mod(f, big_m), best_factors);
    const std::vector<IPoly> lifted = std::move(lifter.out);

    // Subset recombination with exact trial division over Z.
    std::vector<IPoly> result;
    IPoly remaining = f;
    std::vector<std::size_t> avail(lifted.size());
    for (std::size_t i = 0; i < avail.size(); ++i) avail[i] = i;

    auto product_centered = [&](const std::vector<std::size_t>& subset) {
        IPoly acc{Integer(1)};
        for (std::size_t i : subset) acc = mul_mod(acc, lifted[i], big_m);
        return centered(acc, big_m);
    };

    std::size_t s = 1;
    while (!avail.empty() && s <= avail.size()) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        for (;;) {
            std::vector<std::size_t> pick(s);
            for (std::size_t i = 0; i < s; ++i) pick[i] = avail[idx[i]];
            IPoly cand = product_centered(pick);
            IPoly q;
            bool screen = !remaining.empty() && !cand.empty() &&
                          (remaining[0] == 0 || cand[0] == 0 || remaining[0] % cand[0] == 0);
            if (screen && try_exact_divide(remaining, cand, q)) {
                result.push_back(cand);
                remaining = std::move(q);
                std::vector<std::size_t> rest;
                for (std::size_t a : avail)
                    if (std::find(pick.begin(), pick.end(), a) == pick.end()) rest.push_back(a);
                avail = std::move(rest);
                found = true;
                break;
            }
            // Advance idx to the next s-combination of {0..avail.size()-1}.
            std::size_t i = s;
            bool more = false;
            while (i-- > 0) {
                if (idx[i] < avail.size() - s + i) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
                    more = true;
                    break;
                }
            }
            if (!more) break;
        }
        if (found) {
            if (degree(remaining) == 0) break;
            continue;  // same size again over the reduced pool
        }
        ++s;
    }
    if (degree(remaining) > 0) result.push_back(remaining);

    std::sort(result.begin(), result.end(), [](const IPoly& a, const IPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return result;
}

// Degrees of the irreducible factors, ascending.
inline std::vector<int> factor_degrees(const IPoly& f) {
    std::vector<int> degs;
    for (const IPoly& g : zassenhaus_factor(f)) degs.push_back(intp::degree(g));
    std::sort(degs.begin(), degs.end());
    return degs;
}

// All integer roots of a monic integer polynomial, found by lifting the
// simple roots mod p with Newton iteration up to the Cauchy root bound.
inline std::vector<Integer> integer_roots(const IPoly& f_in) {
    using namespace intp;
    IPoly f = f_in;
    trim(f);
    if (degree(f) < 1) return {};
    if (f.back() != 1) throw std::domain_error("integer_roots: polynomial must be monic");

    // Work with the squarefree part so roots stay simple mod p.
    QPoly fq = qpoly_from_integer_coeffs(f);
    QPoly sf = (fq / gcd(fq, fq.derivative())).monic();
    std::vector<Integer> fs;
    for (const Rational& c : sf.coeffs()) {
        if (denominator(c) != 1) throw std::logic_error("integer_roots: squarefree part not integral");
        fs.push_back(numerator(c));
    }

    Integer bound(1);
    for (const Integer& c : fs) {
        Integer a = abs(c);
        if (a > bound) bound = a;
    }
    bound += 1;  // |root| <= 1 + max |coeff| for monic f

    std::uint64_t p = 0;
    for (std::uint64_t cand = 3;; cand += 2) {
        if (!is_small_prime(Integer(cand))) continue;
        modp::Poly fp = to_modp(fs, cand);
        if (modp::degree(fp) != degree(fs)) continue;
        if (modp::degree(modp::gcd(fp, modp::deriv(fp, cand), cand)) != 0) continue;
        p = cand;
        break;
    }

    std::vector<Integer> roots;
    IPoly dfs = deriv(fs);
    for (std::uint64_t r0 = 0; r0 < p; ++r0) {
        Integer fr = eval(fs, Integer(r0)) % p;
        if (fr != 0) continue;
        // Newton lifting: r <- r - f(r)/f'(r) doubling the modulus each step.
        Integer m(p), r(r0);
        while (m <= 2 * bound) {
            m *= m;
            Integer d = eval(dfs, r) % m;
            if (d < 0) d += m;
            // inverse of d mod m via the extended Euclid on integers
            Integer g, x;
            {
                Integer a = d, b = m, x0 = 1, x1 = 0;
                while (b != 0) {
                    Integer qq = a / b;
                    Integer t = a - qq * b;
                    a = b;
                    b = t;
                    t = x0 - qq * x1;
                    x0 = x1;
                    x1 = t;
                }
                g = a;
                x = x0;
            }
            if (g != 1) throw std::logic_error("integer_roots: derivative not invertible");
            x %= m;
            if (x < 0) x += m;
            Integer fv = eval(fs, r) % m;
            if (fv < 0) fv += m;
            Integer step = fv * x % m;
            r = (r - step) % m;
            if (r < 0) r += m;
        }
        Integer cand = r;
        if (cand * 2 > m) cand -= m;
        if (abs(cand) <= bound && eval(fs, cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
            roots.push_back(cand);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// Rational roots of an arbitrary nonzero rational polynomial via the modular
// engine: monicize, clear denominators by substitution, lift integer roots
// back.  Multiplicities are recovered by exact division.
inline std::vector<Rational> rational_roots_modular(const QPoly& p_in) {
    if (p_in.is_zero()) throw std::domain_error("rational_roots_modular: zero polynomial");
    QPoly p = p_in;
    std::vector<Rational> roots;
    while (p.degree() > 0 && p.coeff(0) == 0) {
        roots.emplace_back(0);
        std::vector<Rational> shifted(p.coeffs().begin() + 1, p.coeffs().end());
        p = QPoly(std::move(shifted));
    }
    if (p.degree() < 1) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    QPoly monic = p.monic();
    MonicIntegerModel model = monic_integer_model(monic);
    for (const Integer& z : integer_roots(model.coeffs)) {
        Rational r = Rational(z, model.scale);
        QPoly lin({-r, Rational(1)});
        QPoly work = p;
        while (work.degree() >= 1 && work.eval(r) == 0) {
            roots.push_back(r);
            work = work / lin;
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace fermat5
