// Exact Galois-group classification for irreducible rational quartics.
//
// Two independent routes are provided.  classify_galois runs the standard
// resolvent-cubic decision tree, separating C4 from D4 by an exact search
// for a quadratic factorization over Q(sqrt(disc)) represented as a quotient
// ring.  splitting_degree_oracle instead adjoins a root, reads the
// factorization type of the quartic over that field off a Trager norm, and
// recurses on the leftover quadratic; it is much slower and exists so the
// two answers can be checked against each other.
#pragma once

#include "fermat5/intfactor.hpp"
#include "fermat5/quotient.hpp"

#include <optional>

namespace fermat5 {

enum class GaloisClass { C4, V4, D4, A4, S4 };

inline int galois_order(GaloisClass c) {
    switch (c) {
        case GaloisClass::C4:
        case GaloisClass::V4: return 4;
        case GaloisClass::D4: return 8;
        case GaloisClass::A4: return 12;
        case GaloisClass::S4: return 24;
    }
    throw std::logic_error("galois_order: bad tag");
}

inline std::string galois_name(GaloisClass c) {
    switch (c) {
        case GaloisClass::C4: return "C4";
        case GaloisClass::V4: return "V4";
        case GaloisClass::D4: return "D4";
        case GaloisClass::A4: return "A4";
        case GaloisClass::S4: return "S4";
    }
    throw std::logic_error("galois_name: bad tag");
}

namespace detail {

inline void require_quartic(const QPoly& q, const char* who) {
    if (q.degree() != 4) throw std::domain_error(std::string(who) + ": polynomial must be quartic");
}

// q(X - a3/4): kills the cubic term.
inline QPoly depress_quartic(const QPoly& q_monic) {
    Rational a3 = q_monic.coeff(3);
    return q_monic.shift_var(-a3 / 4);
}

}  // namespace detail

// Resolvent cubic of the depressed form X^4 + bX^2 + cX + d: the monic cubic
// with roots x1x2+x3x4, x1x3+x2x4, x1x4+x2x3.  Its discriminant equals the
// quartic's.
inline QPoly resolvent_cubic(const QPoly& quartic) {
    detail::require_quartic(quartic, "resolvent_cubic");
    QPoly dep = detail::depress_quartic(quartic.monic());
    Rational b = dep.coeff(2), c = dep.coeff(1), d = dep.coeff(0);
    return QPoly({4 * b * d - c * c, -4 * d, -b, Rational(1)});
}

struct ResolventData {
    QPoly quartic;
    QPoly resolvent;
    Rational disc;
    std::vector<Rational> rational_resolvent_roots;  // distinct, ascending
};

inline ResolventData make_resolvent_data(const QPoly& quartic) {
    detail::require_quartic(quartic, "make_resolvent_data");
    ResolventData out;
    out.quartic = quartic.monic();
    out.resolvent = resolvent_cubic(out.quartic);
    out.disc = discriminant(out.quartic);
    std::vector<Rational> roots = rational_roots_modular(out.resolvent);
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    out.rational_resolvent_roots = std::move(roots);
    return out;
}

namespace detail {

// Try to factor the depressed quartic X^4 + bX^2 + cX + d as
// (X^2 + pX + q1)(X^2 - pX + q2) with coefficients in a ring S, given a
// rational resolvent root theta = q1 + q2.  Then q1 q2 = d and
// p^2 = theta - b, with the pairing fixed by p (q2 - q1) = c.  The sqrt hook
// decides squareness of rationals inside S; every candidate is verified by
// exact expansion, so a wrong hook can only cause a miss, never a false
// positive.
template <typename S, typename Inject, typename SqrtFn>
std::optional<std::pair<UniPoly<S>, UniPoly<S>>> split_depressed_quartic(
    const Rational& b, const Rational& c, const Rational& d, const Rational& theta,
    Inject inject, SqrtFn sqrt_in_s) {
    std::optional<S> sq1 = sqrt_in_s(theta * theta - 4 * d);
    std::optional<S> sqp = sqrt_in_s(theta - b);
    if (!sq1 || !sqp) return std::nullopt;
    const S half = inject(Rational(1, 2));
    const S theta_s = inject(theta);
    const S one = inject(Rational(1));
    UniPoly<S> dep({inject(d), inject(c), inject(b), S(), one});
    for (int s1 : {+1, -1}) {
        S root1 = *sq1;
        if (s1 < 0) root1 = -root1;
        S q1 = (theta_s - root1) * half;
        S q2 = (theta_s + root1) * half;
        for (int s2 : {+1, -1}) {
            S p = *sqp;
            if (s2 < 0) p = -p;
            UniPoly<S> f1({q1, p, one});
            UniPoly<S> f2({q2, -p, one});
            if (f1 * f2 == dep) return std::make_pair(f1, f2);
        }
    }
    return std::nullopt;
}

}  // namespace detail

namespace detail {

inline bool quartic_irreducible_core(const QPoly& q_monic, const ResolventData& rd) {
    if (gcd(q_monic, q_monic.derivative()).degree() > 0) return false;  // repeated factor
    if (!rational_roots_modular(q_monic).empty()) return false;
    QPoly dep = depress_quartic(q_monic);
    Rational b = dep.coeff(2), c = dep.coeff(1), d = dep.coeff(0);
    for (const Rational& theta : rd.rational_resolvent_roots) {
        auto split = split_depressed_quartic<Rational>(
            b, c, d, theta, [](const Rational& x) { return x; },
            [](const Rational& m) { return is_square(m); });
        if (split) return false;
    }
    return true;
}

// Decision tree on an already-irreducible monic quartic.
inline GaloisClass classify_core(const QPoly& q_monic, const ResolventData& rd) {
    bool disc_square = is_square(rd.disc).has_value();
    std::size_t nroots = rd.rational_resolvent_roots.size();
    if (nroots == 0) return disc_square ? GaloisClass::A4 : GaloisClass::S4;
    if (nroots == 3) return GaloisClass::V4;
    if (nroots != 1) throw std::logic_error("classify_galois: impossible resolvent root count");
    if (disc_square) throw std::logic_error("classify_galois: square disc with one resolvent root");
    // C4 vs D4: the quartic splits into quadratics over Q(sqrt(disc)) exactly
    // in the cyclic case.
    QPoly dep = depress_quartic(q_monic);
    Rational b = dep.coeff(2), c = dep.coeff(1), d = dep.coeff(0);
    QRingPtr ring = make_quadratic_ring(rd.disc);
    auto split = split_depressed_quartic<QElem>(
        b, c, d, rd.rational_resolvent_roots[0],
        [&](const Rational& x) { return ring->element(x); },
        [&](const Rational& m) { return sqrt_rational_in_quadratic(ring, m); });
    return split ? GaloisClass::C4 : GaloisClass::D4;
}

}  // namespace detail

// Irreducibility over Q, decided by exact search for rational linear factors
// and for quadratic factorizations through the resolvent construction.
inline bool quartic_irreducible(const QPoly& quartic) {
    detail::require_quartic(quartic, "quartic_irreducible");
    QPoly q = quartic.monic();
    return detail::quartic_irreducible_core(q, make_resolvent_data(q));
}

// Standard decision tree on the resolvent cubic.  Precondition: irreducible.
inline GaloisClass classify_galois(const QPoly& quartic) {
    detail::require_quartic(quartic, "classify_galois");
    QPoly q = quartic.monic();
    ResolventData rd = make_resolvent_data(q);
    if (!detail::quartic_irreducible_core(q, rd))
        throw std::invalid_argument("classify_galois: quartic is reducible over Q");
    return detail::classify_core(q, rd);
}

namespace detail {

// Newton interpolation through exact rational points.
inline QPoly interpolate(const std::vector<Rational>& xs, std::vector<Rational> vals) {
    std::size_t n = xs.size();
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n; i-- > j;) vals[i] = (vals[i] - vals[i - 1]) / (xs[i] - xs[i - j]);
    QPoly result;
    QPoly basis = QPoly::constant(Rational(1));
    for (std::size_t i = 0; i < n; ++i) {
        result = result + basis.scaled(vals[i]);
        basis = basis * QPoly({-xs[i], Rational(1)});
    }
    return result;
}

// Res_X(A(X), B_y(X)) as a polynomial in y, by evaluation and interpolation.
// The builder must keep the X-degree of B_y independent of y.
template <typename Builder>
QPoly parametric_resultant(const QPoly& a, Builder build_b, int y_degree_bound) {
    std::vector<Rational> xs, vals;
    int want = -2;
    for (int k = 0; int(xs.size()) < y_degree_bound + 1; ++k) {
        Rational y = Rational(k % 2 == 0 ? k / 2 : -(k / 2 + 1));
        QPoly by = build_b(y);
        if (want == -2) want = by.degree();
        if (by.degree() != want)
            throw std::logic_error("parametric_resultant: X-degree depends on y");
        xs.push_back(y);
        vals.push_back(resultant(a, by));
    }
    QPoly n = interpolate(xs, std::move(vals));
    if (n.degree() > y_degree_bound) throw std::logic_error("parametric_resultant: degree overflow");
    return n;
}

// Norm of q(Y - lambda X) over Q[X]/(q): the degree-16 resultant whose
// rational factorization mirrors how q factors over the field generated by
// one of its roots.
inline QPoly root_shift_norm(const QPoly& q, long long lambda) {
    return parametric_resultant(
        q,
        [&](const Rational& y) {
            // q(y - lambda X) via Horner in the linear polynomial
            QPoly lin({y, Rational(-lambda)});
            QPoly acc;
            for (std::size_t i = q.coeffs().size(); i-- > 0;)
                acc = acc * lin + QPoly::constant(q.coeff(i));
            return acc;
        },
        4 * q.degree());
}

inline bool squarefree_q(const QPoly& p) { return gcd(p, p.derivative()).degree() == 0; }

inline std::vector<int> rational_factor_degrees(const QPoly& monic_poly) {
    MonicIntegerModel m = monic_integer_model(monic_poly);
    return factor_degrees(m.coeffs);
}

}  // namespace detail

// Degree of the splitting field, computed without the resolvent tree:
// adjoin one root (pattern of the norm factorization), and in the remaining
// cubic case adjoin its root too and test whether the final quadratic splits
// (an odd-degree descent reduces that to a squareness check one floor down).
// Always a divisor of 24 that is a multiple of 4.
inline int splitting_degree_oracle(const QPoly& quartic) {
    detail::require_quartic(quartic, "splitting_degree_oracle");
    if (!quartic_irreducible(quartic))
        throw std::invalid_argument("splitting_degree_oracle: quartic is reducible over Q");
    QPoly qm = quartic.monic();
    MonicIntegerModel model = monic_integer_model(qm);
    QPoly q = qpoly_from_integer_coeffs(model.coeffs);  // same splitting field

    QPoly norm;
    for (long long lambda = 2;; ++lambda) {
        norm = detail::root_shift_norm(q, lambda);
        if (detail::squarefree_q(norm)) break;
        if (lambda > 60) throw std::logic_error("splitting_degree_oracle: no squarefree shift found");
    }
    std::vector<int> degs = detail::rational_factor_degrees(norm.monic());
    std::vector<int> pattern;
    for (int d : degs) {
        if (d % 4 != 0) throw std::logic_error("splitting_degree_oracle: norm factor degree not divisible by 4");
        pattern.push_back(d / 4);
    }
    std::sort(pattern.begin(), pattern.end());
    if (pattern == std::vector<int>{1, 1, 1, 1}) return 4;
    if (pattern == std::vector<int>{1, 1, 2}) return 8;
    if (pattern != std::vector<int>{1, 3})
        throw std::logic_error("splitting_degree_oracle: impossible factorization pattern");

    // Cubic case: q = (X - alpha) g over K = Q[alpha]; the splitting degree is
    // 12 when disc(g) is a square in the cubic extension of K, else 24.  The
    // extension has odd degree over K, so squareness there descends to K.
    QRingPtr K = make_number_ring(q);
    QElem alpha = K->generator();
    UniPoly<QElem> qK = inject_poly(K, q);
    UniPoly<QElem> lin({-alpha, K->one()});
    auto [g, rem] = qK.divmod(lin);
    if (!rem.is_zero()) throw std::logic_error("splitting_degree_oracle: generator is not a root");
    QElem w = discriminant(g);
    const QPoly& wrep = w.residue();

    QPoly f8;
    for (long long mu = 1;; ++mu) {
        f8 = detail::parametric_resultant(
            q,
            [&](const Rational& y) {
                QPoly lin2({y, Rational(-mu)});
                return lin2 * lin2 - wrep;
            },
            2 * q.degree());
        if (detail::squarefree_q(f8)) break;
        if (mu > 60) throw std::logic_error("splitting_degree_oracle: no squarefree quadratic shift");
    }
    std::vector<int> degs8 = detail::rational_factor_degrees(f8.monic());
    if (degs8 == std::vector<int>{4, 4}) return 12;
    if (degs8 == std::vector<int>{8}) return 24;
    throw std::logic_error("splitting_degree_oracle: impossible quadratic-descent pattern");
}

// |G| for the palindromic quartic f_u, via the quadratic subfield Q(eps)
// with eps^2 = u^2 - 4u: the order is 4 exactly when -(u-4)(3u+4) is a
// square there, and 8 otherwise.
inline int palindromic_order_bound(const Rational& u) {
    QPoly f = palindromic_quartic(u);
    if (!quartic_irreducible(f))
        throw std::invalid_argument("palindromic_order_bound: f_u is reducible over Q");
    Rational d = u * u - 4 * u;
    QRingPtr ring = make_quadratic_ring(d);
    Rational m = -(u - 4) * (3 * u + 4);
    return sqrt_rational_in_quadratic(ring, m) ? 4 : 8;
}

// All roots of an irreducible monic rational quartic inside Q[X]/(q), i.e.
// the images of the generator under the automorphisms of that field.
// Extracted from the Trager norm factors by a gcd over the field.
inline std::vector<QElem> roots_in_field(const QPoly& quartic) {
    detail::require_quartic(quartic, "roots_in_field");
    QPoly q = quartic.monic();
    if (!quartic_irreducible(q)) throw std::invalid_argument("roots_in_field: reducible quartic");
    QRingPtr K = make_number_ring(q);
    QElem alpha = K->generator();

    QPoly norm;
    long long lambda = 2;
    for (;; ++lambda) {
        norm = detail::root_shift_norm(q, lambda);
        if (detail::squarefree_q(norm)) break;
        if (lambda > 60) throw std::logic_error("roots_in_field: no squarefree shift found");
    }
    MonicIntegerModel m = monic_integer_model(norm.monic());
    std::vector<QElem> roots;
    UniPoly<QElem> qK = inject_poly(K, q);
    for (const IPoly& gi : zassenhaus_factor(m.coeffs)) {
        if (intp::degree(gi) != q.degree()) continue;
        // map back through the scale substitution, then shift by lambda*alpha
        QPoly g = qpoly_from_integer_coeffs(gi);
        g = g.scale_var(Rational(m.scale)).monic();
        UniPoly<QElem> gK = inject_poly(K, g);
        QElem shift = alpha * K->element(Rational(lambda));
        UniPoly<QElem> lin({shift, K->one()});
        // g(Y + lambda alpha) by Horner
        UniPoly<QElem> comp;
        for (std::size_t i = gK.coeffs().size(); i-- > 0;)
            comp = comp * lin + UniPoly<QElem>::constant(gK.coeff(i));
        UniPoly<QElem> d = gcd(qK, comp);
        if (d.degree() == 1) {
            QElem root = -(d.coeff(0));
            if (root.is_root_of(q)) roots.push_back(root);
        }
    }
    std::sort(roots.begin(), roots.end(), [](const QElem& a, const QElem& b) {
        const auto& ca = a.residue().coeffs();
        const auto& cb = b.residue().coeffs();
        if (ca.size() != cb.size()) return ca.size() < cb.size();
        for (std::size_t i = ca.size(); i-- > 0;)
            if (!(ca[i] == cb[i])) return ca[i] < cb[i];
        return false;
    });
    return roots;
}

}  // namespace fermat5
