#include <catch2/catch.hpp>

#include <random>

#include "tanrec/polynomial.hpp"
#include "test_util.hpp"

using tanrec::Int;
using tanrec::Polynomial;

TEST_CASE("polynomial canonical form") {
    CHECK(Polynomial{1, 2, 0, 0} == Polynomial{1, 2});
    CHECK(Polynomial{0, 0} == Polynomial{});
    CHECK(Polynomial{}.is_zero());
    CHECK(Polynomial{}.degree() == -1);
    CHECK(Polynomial{7}.degree() == 0);
    CHECK(Polynomial{0, 0, 5}.degree() == 2);
    CHECK(Polynomial::constant(0).is_zero());
    CHECK(Polynomial::monomial(0, 4).is_zero());
}

TEST_CASE("polynomial multiplication") {
    CHECK(Polynomial{1, 1} * Polynomial{1, -1} == Polynomial{1, 0, -1});
    CHECK(Polynomial{3, -1} * Polynomial{3, -1} == Polynomial{9, -6, 1});
    CHECK(Polynomial{5, 2, 7} * Polynomial{} == Polynomial{});
    CHECK((Polynomial{} * Polynomial{5, 2, 7}).is_zero());

    SECTION("degree adds for nonzero factors") {
        std::mt19937 rng(42);
        for (int i = 0; i < 50; ++i) {
            Polynomial a = test_util::random_poly(rng, static_cast<int>(rng() % 7), 9);
            Polynomial b = test_util::random_poly(rng, static_cast<int>(rng() % 7), 9);
            CHECK((a * b).degree() == a.degree() + b.degree());
        }
    }

    SECTION("associative and commutative") {
        std::mt19937 rng(7);
        for (int i = 0; i < 40; ++i) {
            Polynomial a = test_util::random_poly(rng, static_cast<int>(rng() % 6), 9);
            Polynomial b = test_util::random_poly(rng, static_cast<int>(rng() % 6), 9);
            Polynomial c = test_util::random_poly(rng, static_cast<int>(rng() % 6), 9);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
        }
    }
}

TEST_CASE("polynomial evaluation") {
    CHECK(Polynomial{3, -1}(3) == 0);
    CHECK(Polynomial{5, -10, 1}(0) == 5);
    CHECK(Polynomial{5, -10, 1}(3) == -16);
    CHECK(Polynomial{}(12) == 0);

    SECTION("evaluation is a ring morphism") {
        std::mt19937 rng(11);
        std::uniform_int_distribution<int> point(-20, 20);
        for (int i = 0; i < 40; ++i) {
            Polynomial f = test_util::random_poly(rng, static_cast<int>(rng() % 6), 9);
            Polynomial g = test_util::random_poly(rng, static_cast<int>(rng() % 6), 9);
            Int c = point(rng);
            CHECK((f * g)(c) == f(c) * g(c));
            CHECK((f + g)(c) == f(c) + g(c));
        }
    }
}

TEST_CASE("polynomial structure helpers") {
    const Polynomial n3{0, 3, 0, -1};  // 3t - t^3
    CHECK(n3.has_only_odd_terms());
    CHECK_FALSE(n3.has_only_even_terms());
    CHECK(n3.divided_by_x() == Polynomial{3, 0, -1});
    CHECK_THROWS_AS((Polynomial{1, 1}.divided_by_x()), tanrec::invalid_input);

    const Polynomial f5{5, 0, -10, 0, 1};
    CHECK(f5.even_part_in_u() == Polynomial{5, -10, 1});
    CHECK(Polynomial{5, -10, 1}.inflated() == f5);
    CHECK_THROWS_AS(n3.even_part_in_u(), tanrec::invalid_input);

    CHECK(Polynomial{0, 2}.pow(3) == Polynomial{0, 0, 0, 8});
    CHECK(Polynomial{1, 1}.pow(0) == Polynomial{1});

    CHECK(Polynomial{2, -4, 6}.divisible_by(2));
    CHECK_FALSE(Polynomial{2, -4, 7}.divisible_by(2));
    CHECK(Polynomial{2, -4, 6}.divided_exact(2) == Polynomial{1, -2, 3});
}

TEST_CASE("polynomial display, highest degree first") {
    CHECK(Polynomial{}.to_string("t") == "0");
    CHECK(Polynomial{1}.to_string("u") == "1");
    CHECK(Polynomial{-1}.to_string("u") == "-1");
    CHECK(Polynomial{0, 3, 0, -1}.to_string("t") == "-t^3 + 3t");
    CHECK(Polynomial{1, 0, -3}.to_string("t") == "-3t^2 + 1");
    CHECK(Polynomial{5, -10, 1}.to_string("u") == "u^2 - 10u + 5");
    CHECK(Polynomial{0, -1}.to_string("u") == "-u");
    CHECK(Polynomial{3, 0, 0, 1}.to_string("Z") == "Z^3 + 3");
}

TEST_CASE("denominator-cleared composition") {
    // f(X) = X^2 at num/den = (1+X)/(1-X), cleared to degree 3:
    // (1-X) * (1+X)^2
    const Polynomial f{0, 0, 1};
    const Polynomial num{1, 1};
    const Polynomial den{1, -1};
    CHECK(tanrec::compose_cleared(f, num, den, 3) == den * num * num);
    CHECK(tanrec::compose_cleared(Polynomial{4}, num, den, 2) == 4 * den * den);
}
