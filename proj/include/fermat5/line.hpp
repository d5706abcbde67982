// Lines through the rational point (0,-1,1) of x^5+y^5+z^5 = 0, keyed by
// the slope parameter t.  Every such line cuts out the palindromic quartic
// f_t = X^4 + uX^3 + (u+2)X^2 + uX + 1 with u = (4t^5-1)/(t^5+1), and the
// machinery here computes the attached data: discriminant identities, the
// two squareness conditions, and exhaustive height-ordered scans.
#pragma once

#include "fermat5/galois.hpp"

#include <json.hpp>

#include <thread>

namespace fermat5 {

// t = -1 is excluded at the type level: that line only meets trivial and
// quadratic points.
class LineParameter {
  public:
    explicit LineParameter(Rational t) : t_(std::move(t)) {
        if (t_ == -1) throw std::domain_error("LineParameter: t = -1 is excluded");
    }
    const Rational& t() const { return t_; }

  private:
    Rational t_;
};

inline Rational t5(const LineParameter& t) { return rational_pow(t.t(), 5); }

inline Rational u_of_t(const LineParameter& t) {
    Rational p5 = t5(t);
    return (4 * p5 - 1) / (p5 + 1);
}

inline QPoly quartic_of_t(const LineParameter& t) { return palindromic_quartic(u_of_t(t)); }

// A projective point with coordinates in a common ring; equality is up to a
// nonzero scalar, with the canonical form scaling the last nonzero
// coordinate to 1.
template <typename T>
struct ProjectivePoint {
    T x, y, z;

    ProjectivePoint canonical() const {
        const T* last = nullptr;
        for (const T* c : {&z, &y, &x}) {
            if (!(*c == T())) {
                last = c;
                break;
            }
        }
        if (!last) throw std::domain_error("ProjectivePoint: all coordinates are zero");
        T inv = field_inverse(*last);
        return ProjectivePoint{x * inv, y * inv, z * inv};
    }

    bool proj_equal(const ProjectivePoint& o) const {
        ProjectivePoint a = canonical(), b = o.canonical();
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }

    std::vector<ProjectivePoint> permutations() const {
        return {{x, y, z}, {x, z, y}, {y, x, z}, {y, z, x}, {z, x, y}, {z, y, x}};
    }

    // Equal to some coordinate permutation of o, up to scaling.
    bool proj_equal_up_to_permutation(const ProjectivePoint& o) const {
        for (const ProjectivePoint& p : o.permutations())
            if (proj_equal(p)) return true;
        return false;
    }
};

// The point (t(y+1), y, 1) attached to a root y of f_t; it lies on the
// quintic, which is checked here in exact quotient-ring arithmetic.
inline ProjectivePoint<QElem> point_from_root(const LineParameter& t, const QElem& y) {
    QPoly f = quartic_of_t(t);
    if (!y.is_root_of(f)) throw std::domain_error("point_from_root: y is not a root of f_t");
    const QRingPtr& ring = y.ring();
    QElem x = ring->element(t.t()) * (y + ring->one());
    QElem z = ring->one();
    auto pow5 = [](const QElem& v) { return v * v * v * v * v; };
    if (!(pow5(x) + pow5(y) + pow5(z)).is_zero())
        throw std::logic_error("point_from_root: point not on the quintic");
    return ProjectivePoint<QElem>{x, y, z};
}

inline Rational condition1_value(const LineParameter& t) { return 5 * (16 * t5(t) + 1); }
inline Rational condition2_value(const LineParameter& t) { return (1 - 4 * t5(t)) * (16 * t5(t) + 1); }

inline bool condition1(const LineParameter& t) { return is_square(condition1_value(t)).has_value(); }
inline bool condition2(const LineParameter& t) { return is_square(condition2_value(t)).has_value(); }

// disc(f_t) by the resultant route must equal both closed forms
// -u^2 (u-4)^3 (3u+4)  and  5^3 (4t^5-1)^2 (16t^5+1) / (t^5+1)^6.
inline bool delta_identity_check(const LineParameter& t) {
    Rational u = u_of_t(t);
    Rational p5 = t5(t);
    Rational by_resultant = discriminant(quartic_of_t(t));
    Rational by_u = -(u * u) * rational_pow(u - 4, 3) * (3 * u + 4);
    Rational by_t = Rational(125) * rational_pow(4 * p5 - 1, 2) * (16 * p5 + 1) / rational_pow(p5 + 1, 6);
    return by_resultant == by_u && by_u == by_t;
}

// -u(3u+4) = (1-4t^5)(16t^5+1)/(t^5+1)^2.
inline bool minus_u_identity_check(const LineParameter& t) {
    Rational u = u_of_t(t);
    Rational p5 = t5(t);
    Rational lhs = -u * (3 * u + 4);
    Rational rhs = (1 - 4 * p5) * (16 * p5 + 1) / rational_pow(p5 + 1, 2);
    return lhs == rhs;
}

// Everything attached to one parameter value.
struct QuarticProfile {
    Rational t;
    Rational u;
    QPoly f_t;
    Rational delta;
    bool cond1 = false;
    bool cond2 = false;
    bool irreducible = false;
    std::optional<int> galois_order;
    std::optional<GaloisClass> galois_class;
};

inline QuarticProfile make_profile(const LineParameter& t) {
    QuarticProfile p;
    p.t = t.t();
    p.u = u_of_t(t);
    p.f_t = quartic_of_t(t);
    p.delta = discriminant(p.f_t);
    p.cond1 = condition1(t);
    p.cond2 = condition2(t);
    ResolventData rd = make_resolvent_data(p.f_t);
    p.irreducible = detail::quartic_irreducible_core(p.f_t, rd);
    if (p.irreducible) {
        GaloisClass c = detail::classify_core(p.f_t, rd);
        p.galois_class = c;
        p.galois_order = galois_order(c);
    }
    return p;
}

// Exhaustive profile scan over all t with height <= height_bound, t != -1,
// in canonical order (height, then numerator, then denominator).  The range
// may be partitioned across worker threads; output order is independent of
// the partitioning.
inline std::vector<QuarticProfile> scan_parameters(unsigned height_bound, unsigned threads = 0) {
    if (height_bound < 1) throw std::domain_error("scan_parameters: height bound must be >= 1");
    std::vector<Rational> ts;
    for (Rational& q : rationals_up_to_height(height_bound))
        if (q != -1) ts.push_back(std::move(q));

    std::vector<QuarticProfile> profiles(ts.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<std::size_t>(ts.size(), 1));

    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) profiles[i] = make_profile(LineParameter(ts[i]));
    };
    if (threads <= 1) {
        work(0, ts.size());
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (ts.size() + threads - 1) / threads;
        for (unsigned w = 0; w < threads; ++w) {
            std::size_t lo = w * chunk, hi = std::min(ts.size(), lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return profiles;
}

// --------------------------------------------------------------------------
// JSON serialization (schema: rationals as "p/q" strings, polynomials as
// ascending coefficient arrays).

inline nlohmann::json poly_to_json(const QPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Rational& c : p.coeffs()) arr.push_back(rational_to_string(c));
    return arr;
}

inline QPoly poly_from_json(const nlohmann::json& j) {
    std::vector<Rational> c;
    for (const auto& v : j) c.push_back(rational_from_string(v.get<std::string>()));
    return QPoly(std::move(c));
}

inline nlohmann::json profile_to_json(const QuarticProfile& p) {
    nlohmann::json j;
    j["t"] = rational_to_string(p.t);
    j["u"] = rational_to_string(p.u);
    j["f_t"] = poly_to_json(p.f_t);
    j["delta"] = rational_to_string(p.delta);
    j["cond1"] = p.cond1;
    j["cond2"] = p.cond2;
    j["irreducible"] = p.irreducible;
    j["galois_order"] = p.galois_order ? nlohmann::json(*p.galois_order) : nlohmann::json(nullptr);
    j["galois_class"] = p.galois_class ? nlohmann::json(galois_name(*p.galois_class)) : nlohmann::json(nullptr);
    return j;
}

inline nlohmann::json scan_to_json(const std::vector<QuarticProfile>& ps, unsigned height_bound) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["height_bound"] = height_bound;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : ps) arr.push_back(profile_to_json(p));
    j["profiles"] = arr;
    return j;
}

}  // namespace fermat5
