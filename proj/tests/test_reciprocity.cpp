#include <catch2/catch.hpp>

#include <numeric>
#include <vector>

#include "tanrec/format.hpp"
#include "tanrec/reciprocity.hpp"

using tanrec::compute_PQ;
using tanrec::gauss_lemma_sign;
using tanrec::Int;
using tanrec::legendre_euler;
using tanrec::legendre_tangent;
using tanrec::ReciprocityReport;
using tanrec::sweep;
using tanrec::verify_pair;

TEST_CASE("compute_PQ worked pairs") {
    const auto pq53 = compute_PQ(5, 3);
    CHECK(pq53.P == -7);
    CHECK(pq53.Q == 5);

    const auto pq35 = compute_PQ(3, 5);
    CHECK(pq35.P == -5);
    CHECK(pq35.Q == 3);

    // (3,7): frozen from the direct expansion over the single root u = 3 of
    // G_3 = 3 - u:  s_raw = 7 - 35*3 + 21*9 - 27 = 64 = 7P - 27,
    //               d_raw = 1 - 21*3 + 35*9 - 7*27 = 64 = 1 + 7Q.
    const auto pq37 = compute_PQ(3, 7);
    CHECK(pq37.P == 13);
    CHECK(pq37.Q == 9);

    CHECK_THROWS_AS(compute_PQ(5, 5), tanrec::invalid_input);
    CHECK_THROWS_AS(compute_PQ(9, 5), tanrec::not_a_prime);
    CHECK_THROWS_AS(compute_PQ(5, 9), tanrec::not_a_prime);
}

TEST_CASE("legendre symbol by the tangent formula") {
    CHECK(legendre_tangent(3, 5) == -1);
    CHECK(legendre_tangent(5, 3) == -1);
    CHECK(legendre_tangent(7, 3) == 1);
    CHECK(legendre_tangent(3, 7) == -1);
}

TEST_CASE("legendre symbol by Euler's criterion") {
    CHECK(legendre_euler(3, 5) == -1);
    CHECK(legendre_euler(7, 3) == 1);
    CHECK(legendre_euler(3, 7) == -1);
    CHECK(legendre_euler(13, 17) == 1);
    CHECK_THROWS_AS(legendre_euler(3, 9), tanrec::not_a_prime);
}

TEST_CASE("gauss lemma signed permutation") {
    SECTION("(3,5): one flip at r = 1") {
        const auto [perm, sign] = gauss_lemma_sign(3, 5);
        CHECK(sign == -1);
        CHECK(perm.image == std::vector<std::int64_t>{2, 1});
        CHECK(perm.eps == std::vector<int>{-1, 1});
    }
    SECTION("(5,3): flip at r = 1") {
        const auto [perm, sign] = gauss_lemma_sign(5, 3);
        CHECK(sign == -1);
        CHECK(perm.image == std::vector<std::int64_t>{1});
        CHECK(perm.eps == std::vector<int>{-1});
    }
    SECTION("(7,3): no flip") {
        const auto [perm, sign] = gauss_lemma_sign(7, 3);
        CHECK(sign == 1);
        CHECK(perm.eps == std::vector<int>{1});
    }
}

TEST_CASE("verify_pair worked examples") {
    const ReciprocityReport r53 = verify_pair(5, 3);
    CHECK(r53.P == -7);
    CHECK(r53.Q == 5);
    CHECK(r53.s == -16);
    CHECK(r53.d == 16);
    CHECK(r53.sym_tangent == -1);
    CHECK(r53.sym_euler == -1);
    CHECK(r53.sym_gauss == -1);
    CHECK(r53.sigma == 1);
    CHECK(r53.reciprocity_ok);

    const ReciprocityReport r37 = verify_pair(3, 7);
    CHECK(r37.sym_tangent == 1);   // (7/3)
    CHECK(legendre_tangent(3, 7) == -1);
    CHECK(r37.sigma == -1);
    CHECK(r37.reciprocity_ok);

    const ReciprocityReport r1317 = verify_pair(13, 17);
    CHECK(r1317.sym_tangent == 1);
    CHECK(r1317.sigma == 1);
    CHECK(r1317.reciprocity_ok);
}

TEST_CASE("three-way agreement and exactness for all pairs up to 31") {
    const auto primes = tanrec::odd_primes_up_to(31);
    for (std::size_t i = 0; i < primes.size(); ++i) {
        for (std::size_t j = 0; j < primes.size(); ++j) {
            if (i == j) continue;
            const std::int64_t p = primes[i];
            const std::int64_t q = primes[j];
            const ReciprocityReport rep = verify_pair(p, q);
            CHECK(rep.symbols_agree());
            CHECK(rep.reciprocity_ok);
            CHECK(rep.s == rep.sym_tangent * rep.d);
            CHECK(rep.d % p != 0);  // gcd(d, p) = 1 for prime p

            const auto [perm, sign] = gauss_lemma_sign(q, p);
            std::vector<bool> hit(perm.image.size(), false);
            for (std::int64_t rp : perm.image) hit[static_cast<std::size_t>(rp - 1)] = true;
            CHECK(std::count(hit.begin(), hit.end(), false) == 0);
        }
    }
}

TEST_CASE("euler multiplicativity spot-check through the oracle") {
    const auto small = tanrec::odd_primes_up_to(13);
    for (std::int64_t p : tanrec::odd_primes_up_to(31)) {
        for (std::int64_t q1 : small) {
            for (std::int64_t q2 : small) {
                if (q1 == p || q2 == p) continue;
                const Int residue = tanrec::mod_pow(Int(q1) * q2, Int((p - 1) / 2), Int(p));
                const int combined = (residue == 1) ? 1 : -1;
                CHECK(residue == 1 + (residue == Int(p - 1)) * (p - 2));  // residue is 1 or p-1
                CHECK(legendre_euler(q1, p) * legendre_euler(q2, p) == combined);
            }
        }
    }
}

TEST_CASE("sweep") {
    SECTION("pair enumeration and order") {
        const auto one = sweep(5);
        REQUIRE(one.size() == 1);
        CHECK(one[0].p == 3);
        CHECK(one[0].q == 5);

        const auto three = sweep(7);
        REQUIRE(three.size() == 3);
        CHECK(three[0].p == 3);
        CHECK(three[0].q == 5);
        CHECK(three[1].p == 3);
        CHECK(three[1].q == 7);
        CHECK(three[2].p == 5);
        CHECK(three[2].q == 7);
    }

    SECTION("p_max below the first pair is rejected") {
        CHECK_THROWS_AS(sweep(4), tanrec::invalid_input);
    }

    SECTION("deterministic across degrees of parallelism") {
        const auto serial = sweep(31, 1);
        const auto parallel = sweep(31, 4);
        REQUIRE(serial.size() == parallel.size());
        for (std::size_t i = 0; i < serial.size(); ++i) {
            CHECK(tanrec::to_csv_row(serial[i]) == tanrec::to_csv_row(parallel[i]));
        }
        for (const auto& rep : serial) {
            CHECK(rep.reciprocity_ok);
            CHECK(rep.symbols_agree());
        }
    }
}
