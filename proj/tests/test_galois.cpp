#include <catch2/catch_amalgamated.hpp>

#include "fermat5/galois.hpp"

#include <map>
#include <random>

using namespace fermat5;

namespace {

QPoly theorem_quartic_monic() {
    return qpoly_from_integer_coeffs({31, -36, 26, -36, 31}).monic();
}

}  // namespace

TEST_CASE("resolvent of a biquadratic has the middle coefficient as a root") {
    // X^4 + pX^2 + r -> resolvent (Y - p)(Y^2 - 4r)
    for (long long p : {-3, 0, 2, 7})
        for (long long r : {-5, 1, 4}) {
            QPoly q({Rational(r), Rational(0), Rational(p), Rational(0), Rational(1)});
            QPoly res = resolvent_cubic(q);
            CHECK(res.eval(Rational(p)) == 0);
        }
}

TEST_CASE("resolvent discriminant identity on random quartics") {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<long long> coef(-15, 15);
    int done = 0;
    while (done < 100) {
        QPoly q({Rational(coef(rng)), Rational(coef(rng)), Rational(coef(rng)), Rational(coef(rng)),
                 Rational(1)});
        if (q.degree() != 4) continue;
        QPoly res = resolvent_cubic(q);
        if (res.degree() != 3) continue;
        ++done;
        CHECK(discriminant(res) == discriminant(q));
    }
}

TEST_CASE("theorem quartic has a rational resolvent root") {
    ResolventData rd = make_resolvent_data(theorem_quartic_monic());
    REQUIRE(rd.rational_resolvent_roots.size() >= 1);
    // consistency with the divisor-enumeration route
    auto divisor_roots = rational_roots(rd.resolvent);
    divisor_roots.erase(std::unique(divisor_roots.begin(), divisor_roots.end()), divisor_roots.end());
    CHECK(rd.rational_resolvent_roots == divisor_roots);
}

TEST_CASE("quartic_irreducible examples") {
    CHECK(quartic_irreducible(theorem_quartic_monic()));
    CHECK(quartic_irreducible(qpoly_from_integer_coeffs({31, -36, 26, -36, 31})));
    CHECK_FALSE(quartic_irreducible(qpoly_from_ints({-1, 0, 0, 0, 1})));  // X^4-1
    CHECK(quartic_irreducible(qpoly_from_ints({1, -1, 1, -1, 1})));       // 10th cyclotomic
    CHECK_FALSE(quartic_irreducible(qpoly_from_ints({1, 0, 2, 0, 1})));   // (X^2+1)^2
    CHECK_FALSE(quartic_irreducible(qpoly_from_ints({4, 0, 5, 0, 1})));   // (X^2+1)(X^2+4)
    CHECK_THROWS_AS(quartic_irreducible(qpoly_from_ints({-2, 1, -2, 1})), std::domain_error);
}

TEST_CASE("quartic_irreducible agrees with the factorization engine") {
    std::mt19937_64 rng(103);
    std::uniform_int_distribution<long long> coef(-6, 6);
    int done = 0;
    while (done < 60) {
        QPoly q({Rational(coef(rng)), Rational(coef(rng)), Rational(coef(rng)), Rational(coef(rng)),
                 Rational(1)});
        if (q.degree() != 4) continue;
        ++done;
        bool oracle = false;
        if (gcd(q, q.derivative()).degree() == 0)
            oracle = zassenhaus_factor(primitive_integer_model(q)).size() == 1;
        CHECK(quartic_irreducible(q) == oracle);
    }
}

TEST_CASE("classify_galois pinned examples") {
    CHECK(classify_galois(theorem_quartic_monic()) == GaloisClass::C4);
    CHECK(classify_galois(qpoly_from_ints({1, 1, 1, 1, 1})) == GaloisClass::C4);    // 5th cyclotomic
    CHECK(classify_galois(qpoly_from_ints({-2, 0, 0, 0, 1})) == GaloisClass::D4);   // X^4-2
    CHECK(classify_galois(qpoly_from_ints({12, 8, 0, 0, 1})) == GaloisClass::A4);   // X^4+8X+12
    CHECK(classify_galois(qpoly_from_ints({-1, -1, 0, 0, 1})) == GaloisClass::S4);  // X^4-X-1
    CHECK(classify_galois(qpoly_from_ints({1, 0, 0, 0, 1})) == GaloisClass::V4);    // X^4+1
    CHECK(classify_galois(qpoly_from_ints({2, 0, -4, 0, 1})) == GaloisClass::C4);   // X^4-4X^2+2
    CHECK_THROWS_AS(classify_galois(qpoly_from_ints({-1, 0, 0, 0, 1})), std::invalid_argument);
}

TEST_CASE("splitting_degree_oracle pinned examples") {
    CHECK(splitting_degree_oracle(theorem_quartic_monic()) == 4);
    CHECK(splitting_degree_oracle(qpoly_from_ints({1, 1, 1, 1, 1})) == 4);
    CHECK(splitting_degree_oracle(qpoly_from_ints({-2, 0, 0, 0, 1})) == 8);
    CHECK(splitting_degree_oracle(qpoly_from_ints({-1, -1, 0, 0, 1})) == 24);
    CHECK(splitting_degree_oracle(qpoly_from_ints({12, 8, 0, 0, 1})) == 12);
    CHECK(splitting_degree_oracle(qpoly_from_ints({1, 0, 0, 0, 1})) == 4);
    CHECK_THROWS_AS(splitting_degree_oracle(qpoly_from_ints({-1, 0, 0, 0, 1})), std::invalid_argument);
}

TEST_CASE("palindromic_order_bound examples") {
    CHECK(palindromic_order_bound(make_rational(-36, 31)) == 4);
    CHECK(palindromic_order_bound(Rational(-1)) == 4);
    CHECK(palindromic_order_bound(Rational(1)) == 8);
    // u = 4 gives (X+1)^4: reducible, rejected
    CHECK_THROWS_AS(palindromic_order_bound(Rational(4)), std::invalid_argument);
}

TEST_CASE("palindromic_order_bound agrees with classify_galois for small u") {
    std::mt19937_64 rng(107);
    std::uniform_int_distribution<long long> num(-30, 30), den(1, 30);
    int done = 0;
    while (done < 60) {
        Rational u = make_rational(num(rng), den(rng));
        QPoly f = palindromic_quartic(u);
        if (!quartic_irreducible(f)) continue;
        ++done;
        int bound = palindromic_order_bound(u);
        CHECK((bound == 4 || bound == 8));
        CHECK(bound == galois_order(classify_galois(f)));
    }
}

TEST_CASE("roots_in_field counts automorphisms") {
    // cyclic: all four roots live in the field
    QPoly q5 = qpoly_from_ints({1, 1, 1, 1, 1});
    auto cyc = roots_in_field(q5);
    CHECK(cyc.size() == 4);
    for (auto& r : cyc) CHECK(r.is_root_of(q5));
    // D4: exactly two roots of X^4 - 2 in Q(2^(1/4))
    auto d4 = roots_in_field(qpoly_from_ints({-2, 0, 0, 0, 1}));
    CHECK(d4.size() == 2);
    // S4: only the generator itself
    auto s4 = roots_in_field(qpoly_from_ints({-1, -1, 0, 0, 1}));
    CHECK(s4.size() == 1);
}

namespace {

// Fixture corpus spanning all five classes.
std::vector<QPoly> oracle_corpus() {
    std::vector<QPoly> out;
    out.push_back(qpoly_from_ints({1, 1, 1, 1, 1}));
    out.push_back(qpoly_from_ints({1, -1, 1, -1, 1}));
    out.push_back(theorem_quartic_monic());
    out.push_back(qpoly_from_ints({2, 0, -4, 0, 1}));
    out.push_back(qpoly_from_ints({1, -3, 4, -3, 1}));
    // V4 candidates: biquadratics
    out.push_back(qpoly_from_ints({1, 0, 0, 0, 1}));
    out.push_back(qpoly_from_ints({1, 0, -1, 0, 1}));
    out.push_back(qpoly_from_ints({1, 0, 1, 0, 1}));
    out.push_back(qpoly_from_ints({4, 0, 1, 0, 1}));
    out.push_back(qpoly_from_ints({9, 0, 2, 0, 1}));
    out.push_back(qpoly_from_ints({16, 0, 1, 0, 1}));
    // D4 candidates
    for (long long p : {2, 3, 5, 6, 7, 10, 11, 12}) out.push_back(qpoly_from_ints({-p, 0, 0, 0, 1}));
    out.push_back(qpoly_from_ints({2, 0, 0, 0, 1}));
    out.push_back(qpoly_from_ints({3, 0, 0, 0, 1}));
    out.push_back(qpoly_from_ints({-3, 0, 2, 0, 1}));
    out.push_back(qpoly_from_ints({5, 0, 4, 0, 1}));
    out.push_back(qpoly_from_ints({7, 1, 0, 0, 1}));
    // A4 candidates
    out.push_back(qpoly_from_ints({12, 8, 0, 0, 1}));
    out.push_back(qpoly_from_ints({6, -4, -10, 0, 1}));
    out.push_back(qpoly_from_ints({1, -3, -7, 0, 1}));
    out.push_back(qpoly_from_ints({9, -8, 2, 0, 1}));
    out.push_back(qpoly_from_ints({4, -7, 3, 0, 1}));
    out.push_back(qpoly_from_ints({8, 8, 4, 0, 1}));
    // S4 candidates
    out.push_back(qpoly_from_ints({-1, -1, 0, 0, 1}));
    out.push_back(qpoly_from_ints({1, -1, 0, 0, 1}));
    out.push_back(qpoly_from_ints({3, 1, 0, 0, 1}));
    out.push_back(qpoly_from_ints({-2, 1, 1, 0, 1}));
    out.push_back(qpoly_from_ints({5, -2, 0, 1, 1}));
    out.push_back(qpoly_from_ints({2, 3, -1, 2, 1}));
    out.push_back(qpoly_from_ints({-7, 2, 1, -1, 1}));
    out.push_back(qpoly_from_ints({1, 4, -3, 2, 1}));
    // palindromic sweep
    for (long long n = -12; n <= 12; ++n) {
        if (n == 4) continue;
        out.push_back(palindromic_quartic(Rational(n)));
    }
    for (long long n = 1; n <= 9; n += 2) out.push_back(palindromic_quartic(make_rational(n, 2)));
    return out;
}

}  // namespace

TEST_CASE("classifier agrees with the splitting-degree oracle on a spanning corpus") {
    std::map<GaloisClass, int> seen;
    int total = 0;
    for (const QPoly& q : oracle_corpus()) {
        if (!quartic_irreducible(q)) continue;
        GaloisClass c = classify_galois(q);
        int oracle = splitting_degree_oracle(q);
        INFO("q = " << q.to_string());
        CHECK(galois_order(c) == oracle);
        ++seen[c];
        ++total;
    }
    CHECK(total >= 50);
    CHECK(seen[GaloisClass::C4] >= 2);
    CHECK(seen[GaloisClass::V4] >= 2);
    CHECK(seen[GaloisClass::D4] >= 2);
    CHECK(seen[GaloisClass::A4] >= 2);
    CHECK(seen[GaloisClass::S4] >= 2);
}
