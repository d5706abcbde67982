// Quotient rings T[X]/(m) for a monic modulus m, used both for number fields
// K = Q[X]/(irreducible) and for the formal quadratic ring Q[e]/(e^2 - D),
// which is deliberately allowed to be a non-field (D square or zero).
#pragma once

#include "fermat5/polynomial.hpp"

#include <memory>
#include <optional>

namespace fermat5 {

template <typename T>
class QuotientRingElement;

// Shared description of one quotient ring.  Elements hold a pointer to this;
// two elements interoperate when they point at equal moduli.
template <typename T>
class QuotientRing : public std::enable_shared_from_this<QuotientRing<T>> {
  public:
    static std::shared_ptr<const QuotientRing> make(UniPoly<T> modulus) {
        if (modulus.degree() < 1) throw std::domain_error("QuotientRing: modulus must have degree >= 1");
        if (!(modulus.leading() == T(1))) throw std::domain_error("QuotientRing: modulus must be monic");
        return std::shared_ptr<const QuotientRing>(new QuotientRing(std::move(modulus)));
    }

    const UniPoly<T>& modulus() const { return modulus_; }

    QuotientRingElement<T> element(UniPoly<T> rep) const;
    QuotientRingElement<T> element(T scalar) const { return element(UniPoly<T>::constant(std::move(scalar))); }
    // The class of X, e.g. a root of the modulus.
    QuotientRingElement<T> generator() const { return element(UniPoly<T>::monomial(T(1), 1)); }
    QuotientRingElement<T> zero() const { return element(UniPoly<T>()); }
    QuotientRingElement<T> one() const { return element(UniPoly<T>::constant(T(1))); }

  private:
    explicit QuotientRing(UniPoly<T> m) : modulus_(std::move(m)) {}
    UniPoly<T> modulus_;
};

// Thrown when inverting a zero divisor; carries the offending gcd witness.
class NonInvertibleError : public std::domain_error {
  public:
    NonInvertibleError(std::string msg, std::string witness)
        : std::domain_error(msg + " (gcd witness: " + witness + ")"), witness_(std::move(witness)) {}
    const std::string& witness() const { return witness_; }

  private:
    std::string witness_;
};

template <typename T>
class QuotientRingElement {
  public:
    using Ring = QuotientRing<T>;

    // A ring-less element acts as an absorbing/adopting constant so that
    // generic polynomial code can use QuotientRingElement as a coefficient
    // type; it adopts the partner's ring on first contact.
    QuotientRingElement() = default;
    QuotientRingElement(int v) : residue_(v == 0 ? UniPoly<T>() : UniPoly<T>::constant(T(v))) {}

    QuotientRingElement(std::shared_ptr<const Ring> ring, UniPoly<T> residue)
        : ring_(std::move(ring)), residue_(std::move(residue)) {
        reduce();
    }

    bool has_ring() const { return ring_ != nullptr; }
    const std::shared_ptr<const Ring>& ring() const { return ring_; }
    const UniPoly<T>& residue() const { return residue_; }
    bool is_zero() const { return residue_.is_zero(); }

    QuotientRingElement operator-() const { return with_same_ring(-residue_); }

    QuotientRingElement operator+(const QuotientRingElement& o) const {
        auto r = merged_ring(o);
        return QuotientRingElement(r, residue_ + o.residue_);
    }
    QuotientRingElement operator-(const QuotientRingElement& o) const {
        auto r = merged_ring(o);
        return QuotientRingElement(r, residue_ - o.residue_);
    }
    QuotientRingElement operator*(const QuotientRingElement& o) const {
        auto r = merged_ring(o);
        return QuotientRingElement(r, residue_ * o.residue_);
    }

    bool operator==(const QuotientRingElement& o) const {
        if (ring_ && o.ring_ && !same_modulus(o)) return false;
        return residue_ == o.residue_;
    }
    bool operator!=(const QuotientRingElement& o) const { return !(*this == o); }

    // Inverse by the extended Euclidean algorithm; a zero divisor raises
    // NonInvertibleError naming the gcd witness.
    QuotientRingElement inverse() const {
        require_ring("inverse");
        const UniPoly<T>& m = ring_->modulus();
        UniPoly<T> r0 = m, r1 = residue_;
        UniPoly<T> t0, t1 = UniPoly<T>::constant(T(1));
        while (!r1.is_zero()) {
            auto [q, r2] = r0.divmod(r1);
            UniPoly<T> t2 = t0 - q * t1;
            r0 = r1;
            r1 = r2;
            t0 = t1;
            t1 = t2;
        }
        if (r0.degree() != 0)
            throw NonInvertibleError("QuotientRingElement::inverse: zero divisor", r0.to_string());
        return QuotientRingElement(ring_, t0.scaled(field_inverse(r0.leading())));
    }

    QuotientRingElement operator/(const QuotientRingElement& o) const { return *this * o.inverse(); }

    // Does this element satisfy g(x) = 0 in the quotient?
    bool is_root_of(const UniPoly<T>& g) const {
        require_ring("is_root_of");
        QuotientRingElement acc = ring_->zero();
        for (std::size_t i = g.coeffs().size(); i-- > 0;)
            acc = acc * (*this) + ring_->element(g.coeff(i));
        return acc.is_zero();
    }

    std::string to_string(const std::string& var = "x") const { return residue_.to_string(var); }

  private:
    std::shared_ptr<const Ring> ring_;
    UniPoly<T> residue_;

    void reduce() {
        if (ring_ && residue_.degree() >= ring_->modulus().degree())
            residue_ = residue_ % ring_->modulus();
    }
    bool same_modulus(const QuotientRingElement& o) const {
        return ring_ == o.ring_ || ring_->modulus() == o.ring_->modulus();
    }
    std::shared_ptr<const Ring> merged_ring(const QuotientRingElement& o) const {
        if (ring_ && o.ring_ && !same_modulus(o))
            throw std::domain_error("QuotientRingElement: mixed moduli");
        return ring_ ? ring_ : o.ring_;
    }
    QuotientRingElement with_same_ring(UniPoly<T> rep) const {
        return QuotientRingElement(ring_, std::move(rep));
    }
    void require_ring(const char* what) const {
        if (!ring_) throw std::domain_error(std::string("QuotientRingElement::") + what + ": element has no ring");
    }

    friend class QuotientRing<T>;
};

template <typename T>
QuotientRingElement<T> QuotientRing<T>::element(UniPoly<T> rep) const {
    return QuotientRingElement<T>(this->shared_from_this(), std::move(rep));
}

template <typename T>
QuotientRingElement<T> field_inverse(const QuotientRingElement<T>& x) {
    return x.inverse();
}

using QRing = QuotientRing<Rational>;
using QRingPtr = std::shared_ptr<const QRing>;
using QElem = QuotientRingElement<Rational>;

inline QRingPtr make_number_ring(const QPoly& monic_modulus) { return QRing::make(monic_modulus); }

// ---------------------------------------------------------------------------
// The quadratic ring Q[e]/(e^2 - D).

// D together with whether the ring is a field: it is one exactly when D is
// not a rational square and D != 0.
struct QuadraticRingTag {
    Rational discriminant_parameter;
    bool is_field = false;
};

inline QuadraticRingTag make_quadratic_tag(const Rational& d) {
    return QuadraticRingTag{d, d != 0 && !is_square(d).has_value()};
}

inline QRingPtr make_quadratic_ring(const Rational& d) {
    return QRing::make(QPoly({-d, Rational(0), Rational(1)}));  // e^2 - D
}

// Square root of a *rational* value inside Q[e]/(e^2 - D), if one exists.
// (x + y e)^2 = m forces 2xy = 0, so either x^2 = m or y^2 D = m.
inline std::optional<QElem> sqrt_rational_in_quadratic(const QRingPtr& ring, const Rational& m) {
    Rational d = -ring->modulus().coeff(0);
    if (m == 0) return ring->zero();
    if (auto r = is_square(m)) return ring->element(*r);
    if (d != 0) {
        if (auto r = is_square(m * d)) {
            // m = (r/D)^2 * D, i.e. sqrt = (r/D) e
            return ring->element(QPoly({Rational(0), *r / d}));
        }
    }
    return std::nullopt;
}

// The palindromic quartic X^4 + uX^3 + (u+2)X^2 + uX + 1 splits over
// Q[e]/(e^2 - (u^2-4u)) as the product of X^2 + (u-e)/2 X + 1 and
// X^2 + (u+e)/2 X + 1; this factorization is exact even in the degenerate
// cases where the quadratic ring is not a field.
struct EpsilonFactorization {
    QRingPtr ring;                            // Q[e]/(e^2 - (u^2 - 4u))
    UniPoly<QElem> first, second;             // the two quadratic factors
};

inline UniPoly<Rational> palindromic_quartic(const Rational& u) {
    return QPoly({Rational(1), u, u + 2, u, Rational(1)});
}

inline EpsilonFactorization epsilon_factorization(const Rational& u) {
    Rational d = u * u - 4 * u;
    QRingPtr ring = make_quadratic_ring(d);
    QElem e = ring->generator();
    QElem half_u = ring->element(u / 2);
    QElem half_e = e * ring->element(Rational(1, 2));
    QElem one = ring->one();
    UniPoly<QElem> first({one, half_u - half_e, one});
    UniPoly<QElem> second({one, half_u + half_e, one});
    return EpsilonFactorization{ring, first, second};
}

// Map a rational polynomial into a quotient ring's coefficient domain.
inline UniPoly<QElem> inject_poly(const QRingPtr& ring, const QPoly& p) {
    std::vector<QElem> c(p.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = ring->element(p.coeff(i));
    return UniPoly<QElem>(std::move(c));
}

}  // namespace fermat5
