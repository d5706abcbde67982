#include <catch2/catch_amalgamated.hpp>

#include "fermat5/rational.hpp"

#include <random>

using namespace fermat5;

TEST_CASE("make_rational canonicalizes") {
    CHECK(make_rational(-9 * 32, 8 * 31) == rational_from_string("-36/31"));
    CHECK(rational_to_string(make_rational(-9 * 32, 8 * 31)) == "-36/31");
    CHECK(rational_to_string(make_rational(0, 7)) == "0/1");
    CHECK(rational_to_string(make_rational(4, -6)) == "-2/3");
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("height and ordering") {
    CHECK(height(make_rational(-36, 31)) == 36);
    CHECK(height(make_rational(1, 2)) == 2);
    CHECK(height(Rational(0)) == 1);
}

TEST_CASE("padic_val basics") {
    CHECK(padic_val(make_rational(-1, 8), 2) == -3);
    CHECK(padic_val(Rational(50), 5) == 2);
    CHECK(padic_val(make_rational(-36, 31), 5) == 0);
    CHECK_THROWS_AS(padic_val(Rational(0), 5), std::domain_error);
    CHECK_THROWS_AS(padic_val(Rational(1), 4), std::domain_error);  // 4 is not prime
    CHECK(padic_valuation(Rational(0), 7).infinite);
}

TEST_CASE("padic_val is additive (fuzz)") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> num(-500, 500), den(1, 500);
    for (int it = 0; it < 500; ++it) {
        long long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        if (a == 0 || c == 0) continue;
        Rational q = make_rational(a, b), r = make_rational(c, d);
        for (long long p : {2ll, 5ll}) {
            CHECK(padic_val(q * r, p) == padic_val(q, p) + padic_val(r, p));
        }
    }
}

TEST_CASE("is_square examples") {
    auto s = is_square(make_rational(9, 16));
    REQUIRE(s.has_value());
    CHECK(*s == make_rational(3, 4));
    auto z = is_square(Rational(0));
    REQUIRE(z.has_value());
    CHECK(*z == 0);
    CHECK_FALSE(is_square(make_rational(5, 2)).has_value());
    CHECK_FALSE(is_square(Rational(-4)).has_value());
}

TEST_CASE("is_square agrees with brute-force scan") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> num(-1000, 1000), den(1, 1000);
    for (int it = 0; it < 400; ++it) {
        Rational q = make_rational(num(rng), den(rng));
        Integer prod = numerator(q) * denominator(q);
        bool brute = false;
        if (prod >= 0) {
            for (Integer n = 0; n * n <= prod; ++n)
                if (n * n == prod) {
                    brute = true;
                    break;
                }
        }
        auto s = is_square(q);
        CHECK(s.has_value() == brute);
        if (s) CHECK((*s) * (*s) == q);
    }
}

TEST_CASE("power_residues pins the unit fifth powers mod 25") {
    ResidueSet r = power_residues(25, 5, true);
    CHECK(r.members == std::vector<std::uint64_t>{1, 7, 18, 24});
    CHECK(r.members.size() == 4);
    // closed under negation mod 25
    for (auto m : r.members) CHECK(r.contains(25 - m));
}

TEST_CASE("power_residues squares") {
    ResidueSet sq8 = power_residues(8, 2, false);
    CHECK(sq8.members == std::vector<std::uint64_t>{0, 1, 4});
    CHECK_FALSE(sq8.contains(5));
    ResidueSet id5 = power_residues(5, 1, false);
    CHECK(id5.members == std::vector<std::uint64_t>{0, 1, 2, 3, 4});
}

TEST_CASE("rationals_up_to_height enumeration order") {
    auto v = rationals_up_to_height(2);
    std::vector<std::string> got;
    for (auto& q : v) got.push_back(rational_to_string(q));
    std::vector<std::string> want = {"-1/1", "0/1", "1/1", "-2/1", "-1/2", "1/2", "2/1"};
    CHECK(got == want);
    // all heights bounded, reduced, distinct
    auto v5 = rationals_up_to_height(5);
    for (auto& q : v5) CHECK(height(q) <= 5);
    std::set<Rational> uniq(v5.begin(), v5.end());
    CHECK(uniq.size() == v5.size());
}
