// Dense univariate polynomials over a commutative coefficient ring.
//
// The coefficient type T needs: default construction to the additive zero,
// +, -, *, unary -, ==, and construction from int for the common rings.
// Division-flavoured operations (divmod, gcd, resultant) additionally need a
// field_inverse(T) overload; one is provided here for Rational and the
// quotient-ring header supplies one for its elements.
#pragma once

#include "fermat5/rational.hpp"

#include <cassert>
#include <initializer_list>
#include <sstream>
#include <utility>
#include <vector>

namespace fermat5 {

inline Rational field_inverse(const Rational& x) {
    if (x == 0) throw std::domain_error("field_inverse: division by zero");
    return Rational(1) / x;
}

template <typename T>
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(T v) { return UniPoly(std::vector<T>{std::move(v)}); }
    static UniPoly monomial(T coeff, std::size_t deg) {
        std::vector<T> c(deg + 1);
        c[deg] = std::move(coeff);
        return UniPoly(std::move(c));
    }

    // Degree of the zero polynomial is the distinguished marker -1.
    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const T& leading() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    // Coefficient of X^i (zero beyond the degree).
    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(); }
    const std::vector<T>& coeffs() const { return c_; }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly operator-() const {
        std::vector<T> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return UniPoly(std::move(r));
    }

    UniPoly operator+(const UniPoly& o) const {
        std::vector<T> r(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i < c_.size() && i < o.c_.size())
                r[i] = c_[i] + o.c_[i];
            else if (i < c_.size())
                r[i] = c_[i];
            else
                r[i] = o.c_[i];
        }
        return UniPoly(std::move(r));
    }

    UniPoly operator-(const UniPoly& o) const { return *this + (-o); }

    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero()) return UniPoly();
        std::vector<T> r(c_.size() + o.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        return UniPoly(std::move(r));
    }

    UniPoly scaled(const T& s) const {
        std::vector<T> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
        return UniPoly(std::move(r));
    }

    // Euclidean division; the divisor's leading coefficient must be invertible.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
        UniPoly q, r = *this;
        T lead_inv = field_inverse(d.leading());
        if (r.degree() >= d.degree()) {
            std::vector<T> qc(r.degree() - d.degree() + 1);
            while (!r.is_zero() && r.degree() >= d.degree()) {
                std::size_t shift = r.degree() - d.degree();
                T factor = r.leading() * lead_inv;
                qc[shift] = factor;
                r = r - d.scaled(factor).shifted_up(shift);
            }
            q = UniPoly(std::move(qc));
        }
        return {q, r};
    }

    UniPoly operator/(const UniPoly& d) const { return divmod(d).first; }
    UniPoly operator%(const UniPoly& d) const { return divmod(d).second; }

    // Multiply by X^k.
    UniPoly shifted_up(std::size_t k) const {
        if (is_zero()) return UniPoly();
        std::vector<T> r(c_.size() + k);
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
        return UniPoly(std::move(r));
    }

    T eval(const T& x) const {
        T acc{};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    // Horner evaluation in any ring U that T injects into via `inject`.
    template <typename U, typename Inject>
    U eval_in(const U& x, Inject inject) const {
        U acc{};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + inject(c_[i]);
        return acc;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<T> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(int(i));
        return UniPoly(std::move(r));
    }

    // p(X + a) by Horner on the linear substitution.
    UniPoly shift_var(const T& a) const {
        UniPoly lin({a, T(1)});
        UniPoly acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * lin + constant(c_[i]);
        return acc;
    }

    // Substitute X -> s*X.
    UniPoly scale_var(const T& s) const {
        std::vector<T> r = c_;
        T pw = T(1);
        for (std::size_t i = 1; i < r.size(); ++i) {
            pw = pw * s;
            r[i] = r[i] * pw;
        }
        return UniPoly(std::move(r));
    }

    UniPoly monic() const {
        if (is_zero()) throw std::domain_error("monic: zero polynomial");
        return scaled(field_inverse(leading()));
    }

    std::string to_string(const std::string& var = "X") const;

  private:
    std::vector<T> c_;  // ascending by degree, trailing zeros trimmed

    void trim() {
        while (!c_.empty() && c_.back() == T()) c_.pop_back();
    }
};

template <typename T>
UniPoly<T> gcd(const UniPoly<T>& a, const UniPoly<T>& b) {
    UniPoly<T> x = a, y = b;
    while (!y.is_zero()) {
        UniPoly<T> r = x % y;
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x.monic();
}

// Resultant over a field, by the Euclidean recurrence
//   res(A,B) = (-1)^{deg A deg B} lc(B)^{deg A - deg R} res(B, R),  R = A mod B.
template <typename T>
T resultant(const UniPoly<T>& a, const UniPoly<T>& b) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("resultant: zero polynomial");
    if (b.degree() == 0) {
        T acc = T(1);
        for (int i = 0; i < a.degree(); ++i) acc = acc * b.leading();
        return acc;
    }
    if (a.degree() == 0) {
        T acc = T(1);
        for (int i = 0; i < b.degree(); ++i) acc = acc * a.leading();
        return acc;
    }
    UniPoly<T> r = a % b;
    if (r.is_zero()) return T();
    T sub = resultant(b, r);
    T acc = sub;
    for (int i = 0; i < a.degree() - r.degree(); ++i) acc = acc * b.leading();
    if ((a.degree() % 2) && (b.degree() % 2)) acc = -acc;
    return acc;
}

// disc(p) = (-1)^{n(n-1)/2} res(p, p') / lc(p).
template <typename T>
T discriminant(const UniPoly<T>& p) {
    if (p.degree() < 2) throw std::domain_error("discriminant: degree must be >= 2");
    T res = resultant(p, p.derivative());
    T d = res * field_inverse(p.leading());
    int n = p.degree();
    if ((n * (n - 1) / 2) % 2) d = -d;
    return d;
}

template <typename T>
std::string UniPoly<T>::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == T()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[i] << ")";
        if (i >= 1) os << "*" << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Rational-coefficient helpers.

using QPoly = UniPoly<Rational>;

inline QPoly qpoly_from_ints(std::initializer_list<long long> ascending) {
    std::vector<Rational> c;
    for (long long v : ascending) c.emplace_back(v);
    return QPoly(std::move(c));
}

inline Integer denominator_lcm(const QPoly& p) {
    Integer l(1);
    for (const Rational& c : p.coeffs()) l = lcm(l, denominator(c));
    return l;
}

// Primitive integer model: scale by the denominator lcm and divide out the
// content.  Same roots, integer coefficients, positive leading coefficient.
inline std::vector<Integer> primitive_integer_model(const QPoly& p) {
    if (p.is_zero()) throw std::domain_error("primitive_integer_model: zero polynomial");
    Integer l = denominator_lcm(p);
    std::vector<Integer> c(p.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = numerator(p.coeff(i)) * (l / denominator(p.coeff(i)));
    Integer content(0);
    for (const Integer& v : c) content = gcd(content, v);
    if (c.back() < 0) content = -content;
    for (Integer& v : c) v /= content;
    return c;
}

// For a monic rational p of degree n, the substitution X = Z/m with
// m = lcm of denominators yields the monic integer polynomial
// m^n p(Z/m).  Roots correspond via z = m x; splitting fields agree.
struct MonicIntegerModel {
    std::vector<Integer> coeffs;  // ascending, monic
    Integer scale;                // m
};

inline MonicIntegerModel monic_integer_model(const QPoly& p) {
    if (p.is_zero() || !(p.leading() == Rational(1)))
        throw std::domain_error("monic_integer_model: polynomial must be monic");
    Integer m = denominator_lcm(p);
    int n = p.degree();
    MonicIntegerModel out;
    out.scale = m;
    out.coeffs.resize(n + 1);
    for (int i = 0; i <= n; ++i) {
        Rational c = p.coeff(i) * Rational(int_pow(m, n - i), 1);
        assert(denominator(c) == 1);
        out.coeffs[i] = numerator(c);
    }
    return out;
}

inline QPoly qpoly_from_integer_coeffs(const std::vector<Integer>& c) {
    std::vector<Rational> r(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) r[i] = Rational(c[i]);
    return QPoly(std::move(r));
}

namespace detail {

// All positive divisors of |n| by root-bounded scanning.
inline std::vector<Integer> positive_divisors(Integer n) {
    n = abs(n);
    if (n == 0) throw std::domain_error("positive_divisors: zero");
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace detail

// All rational roots with multiplicity, by divisor enumeration on the
// primitive integer model: a reduced root p/q needs p | constant term and
// q | leading coefficient.  Suitable for the small fixtures this library
// works with; large inputs go through the modular engine instead.
inline std::vector<Rational> rational_roots(const QPoly& p) {
    if (p.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
    std::vector<Integer> c = primitive_integer_model(p);
    QPoly work = qpoly_from_integer_coeffs(c);
    std::vector<Rational> roots;
    // Roots at zero: strip trailing X factors.
    while (work.coeff(0) == 0 && work.degree() > 0) {
        roots.emplace_back(0);
        std::vector<Rational> shifted(work.coeffs().begin() + 1, work.coeffs().end());
        work = QPoly(std::move(shifted));
    }
    if (work.degree() < 1) return roots;
    Integer a0 = numerator(work.coeff(0));
    Integer an = numerator(work.leading());
    std::vector<Rational> candidates;
    for (const Integer& pnum : detail::positive_divisors(a0))
        for (const Integer& qden : detail::positive_divisors(an)) {
            if (gcd(pnum, qden) != 1) continue;
            candidates.push_back(Rational(pnum, qden));
            candidates.push_back(Rational(-pnum, qden));
        }
    for (const Rational& r : candidates) {
        while (work.degree() >= 1 && work.eval(r) == 0) {
            roots.push_back(r);
            // Exact synthetic division by (X - r).
            QPoly lin({-r, Rational(1)});
            auto [q, rem] = work.divmod(lin);
            assert(rem.is_zero());
            work = q;
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace fermat5
