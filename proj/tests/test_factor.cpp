#include <catch2/catch_amalgamated.hpp>

#include "fermat5/intfactor.hpp"

#include <random>

using namespace fermat5;

namespace {

IPoly ipoly(std::initializer_list<long long> asc) {
    IPoly r;
    for (long long v : asc) r.emplace_back(v);
    return r;
}

}  // namespace

TEST_CASE("mod-p factorization basics") {
    // X^4 - 1 = (X-1)(X+1)(X^2+1) over F_7?  7 = 3 mod 4 so X^2+1 irreducible mod 7.
    modp::Poly f{7 - 1 % 7, 0, 0, 0, 1};
    f = modp::Poly{6, 0, 0, 0, 1};  // X^4 - 1 mod 7
    auto factors = modp::factor_squarefree(f, 7);
    CHECK(factors.size() == 3);
}

TEST_CASE("zassenhaus on small products") {
    // (X^2+1)(X^2-2)
    IPoly f = intp::mul(ipoly({1, 0, 1}), ipoly({-2, 0, 1}));
    auto factors = zassenhaus_factor(f);
    REQUIRE(factors.size() == 2);
    CHECK(((factors[0] == ipoly({1, 0, 1}) && factors[1] == ipoly({-2, 0, 1})) ||
           (factors[1] == ipoly({1, 0, 1}) && factors[0] == ipoly({-2, 0, 1}))));
}

TEST_CASE("zassenhaus detects irreducibility") {
    CHECK(zassenhaus_factor(ipoly({-2, 0, 0, 0, 1})).size() == 1);   // X^4 - 2
    CHECK(zassenhaus_factor(ipoly({-1, -1, 0, 0, 1})).size() == 1);  // X^4 - X - 1
    CHECK(zassenhaus_factor(ipoly({1, 1, 1, 1, 1})).size() == 1);    // 5th cyclotomic
}

TEST_CASE("zassenhaus random product round trip") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long long> coef(-8, 8);
    int done = 0;
    while (done < 40) {
        // product of two monic polynomials of degrees 2..4
        auto rand_monic = [&](int d) {
            IPoly p(d + 1, Integer(0));
            for (int i = 0; i < d; ++i) p[i] = coef(rng);
            p[d] = 1;
            return p;
        };
        std::uniform_int_distribution<int> degd(2, 4);
        IPoly a = rand_monic(degd(rng)), b = rand_monic(degd(rng));
        IPoly f = intp::mul(a, b);
        // engine requires squarefree input
        QPoly fq = qpoly_from_integer_coeffs(f);
        if (gcd(fq, fq.derivative()).degree() != 0) continue;
        ++done;
        auto factors = zassenhaus_factor(f);
        IPoly prod{Integer(1)};
        for (auto& g : factors) prod = intp::mul(prod, g);
        CHECK(prod == f);
        CHECK(factors.size() >= 2);
        // every reported factor actually divides
        for (auto& g : factors) {
            IPoly q;
            CHECK(intp::try_exact_divide(f, g, q));
        }
    }
}

TEST_CASE("factor degrees of a norm-like degree-16 polynomial") {
    // (X^2+1)(X^2+2)(X^4+2)(X^8 - X - 1) -- known irreducible pieces
    IPoly f = intp::mul(intp::mul(ipoly({1, 0, 1}), ipoly({2, 0, 1})),
                        intp::mul(ipoly({2, 0, 0, 0, 1}), ipoly({-1, -1, 0, 0, 0, 0, 0, 0, 1})));
    auto degs = factor_degrees(f);
    CHECK(degs == std::vector<int>{2, 2, 4, 8});
}

TEST_CASE("integer_roots by Newton lifting") {
    // (X - 3)(X + 5)(X^2 + 1)
    IPoly f = intp::mul(intp::mul(ipoly({-3, 1}), ipoly({5, 1})), ipoly({1, 0, 1}));
    auto roots = integer_roots(f);
    CHECK(roots == std::vector<Integer>{-5, 3});
    // repeated roots still found once
    IPoly g = intp::mul(ipoly({-3, 1}), ipoly({-3, 1}));
    CHECK(integer_roots(g) == std::vector<Integer>{3});
    // large coefficients exercise the lifting depth
    IPoly h = intp::mul(ipoly({-1000000007LL, 1}), ipoly({999999937LL, 1}));
    auto hr = integer_roots(h);
    CHECK(hr == std::vector<Integer>{-999999937LL, 1000000007LL});
}

TEST_CASE("rational_roots_modular agrees with divisor enumeration") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<long long> coef(-12, 12);
    std::uniform_int_distribution<int> degd(1, 5);
    int done = 0;
    while (done < 60) {
        int d = degd(rng);
        std::vector<Rational> c(d + 1);
        for (auto& v : c) v = Rational(coef(rng));
        QPoly p(c);
        if (p.degree() < 1) continue;
        ++done;
        CHECK(rational_roots_modular(p) == rational_roots(p));
    }
}
