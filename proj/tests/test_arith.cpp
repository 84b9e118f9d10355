/*
   Copyright 2026 the fermatjac authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fermatjac/arith.hpp"

#include <random>

using namespace fermatjac;

TEST_CASE("modular primitives") {
    CHECK(mod_norm(-3, 7) == 4);
    CHECK(mod_norm(14, 7) == 0);
    CHECK(mod_pow(2, 10, 1000) == 24);
    CHECK(mod_pow(0, 0, 5) == 1);
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 200; ++i) {
        int64_t m = 2 + static_cast<int64_t>(rng() % 1000000);
        int64_t a = static_cast<int64_t>(rng() % m);
        int64_t e = static_cast<int64_t>(rng() % 50);
        int64_t slow = 1;
        for (int64_t k = 0; k < e; ++k) slow = slow * a % m;
        CHECK(mod_pow(a, e, m) == slow);
    }
    for (int64_t p : {5, 7, 11, 101, 9973})
        for (int64_t a = 1; a < std::min<int64_t>(p, 40); ++a)
            CHECK(mod_inv(a, p) * a % p == 1);
    CHECK(ipow(3, 4) == 81);
    CHECK(ipow(2, 0) == 1);
}

TEST_CASE("primality and multiplicative structure") {
    std::vector<int64_t> primes{2, 3, 5, 7, 11, 13, 9973, 1000003};
    std::vector<int64_t> composites{1, 4, 9, 15, 91, 561, 1000001};
    for (int64_t n : primes) CHECK(is_prime(n));
    for (int64_t n : composites) CHECK_FALSE(is_prime(n));
    CHECK(least_primitive_root(5) == 2);
    CHECK(least_primitive_root(7) == 3);
    CHECK(least_primitive_root(11) == 2);
    CHECK(least_primitive_root(23) == 5);
    for (int64_t p : {5, 7, 13, 37}) {
        int64_t g = least_primitive_root(p);
        CHECK(multiplicative_order(g, p) == p - 1);
        // every order divides p-1
        for (int64_t a = 1; a < p; ++a) CHECK((p - 1) % multiplicative_order(a, p) == 0);
    }
}

TEST_CASE("exponent triples") {
    CHECK_THROWS_AS(Triple(1, 1, 1, 5), std::invalid_argument);  // 1+1+1 != 5
    CHECK_THROWS_AS(Triple(0, 2, 3, 5), std::invalid_argument);
    Triple t(2, 2, 1, 5);
    Triple red = t.reduced();
    CHECK(red.s == 1);
    CHECK(red.r + red.s + red.t == 5);
    // scaling orbit: (2,2,1) ~ 3*(2,2,1) = (6,6,3) = (1,1,3) mod 5
    CHECK(red == Triple(1, 1, 3, 5));
    // already-reduced triples are fixed points
    for (int64_t r = 1; r <= 5; ++r) {
        Triple u(r, 1, 7 - r - 1, 7);
        CHECK(u.reduced() == u);
    }
    CHECK(Triple(1, 1, 3, 5).rst_mod_p() == 3);
}

TEST_CASE("legendre and b symbols") {
    CHECK(legendre(1, 5) == 1);
    CHECK(legendre(2, 5) == -1);
    CHECK(legendre(4, 5) == 1);
    CHECK(legendre(0, 5) == 0);
    CHECK(legendre(-1, 5) == 1);   // 5 = 1 mod 4
    CHECK(legendre(-1, 7) == -1);  // 7 = 3 mod 4
    // Euler criterion cross-check
    for (int64_t p : {5, 7, 11, 13, 17})
        for (int64_t a = 1; a < p; ++a)
            CHECK(mod_norm(legendre(a, p), p) == mod_pow(a, (p - 1) / 2, p));
    CHECK(b_symbol(0, 5) == -1);
    CHECK(b_symbol(1, 5) == 1);
    CHECK(b_symbol(2, 5) == -1);
    CHECK(b_symbol(5, 5) == -1);  // 5 = 0 mod 5
}

TEST_CASE("splitting data") {
    SplittingData d = splitting_data(2, 5);
    CHECK(d.f == 4);
    CHECK(d.g == 1);
    CHECK(d.inert_in_K);
    CHECK(d.inert_in_K_over_F);
    d = splitting_data(11, 5);  // 11 = 1 mod 5
    CHECK(d.f == 1);
    CHECK(d.g == 4);
    CHECK_FALSE(d.inert_in_K);
    CHECK_FALSE(d.inert_in_K_over_F);
    d = splitting_data(19, 5);  // 19 = 4 mod 5, order 2
    CHECK(d.f == 2);
    CHECK(d.g == 2);
    CHECK(d.inert_in_K_over_F);
    CHECK_FALSE(d.inert_in_K);
    d = splitting_data(2, 7);  // order of 2 mod 7 is 3
    CHECK(d.f == 3);
    CHECK(d.g == 2);
    CHECK_FALSE(d.inert_in_K_over_F);
}

TEST_CASE("u invariant of delta") {
    DeltaDecomposition d = u_invariant(5, 5);
    CHECK(d.a == 1);
    CHECK(d.u == 0);
    d = u_invariant(2, 5);  // (2^4-1)/5 = 3, a unit: u = 1
    CHECK(d.a == 0);
    CHECK(d.u == 1);
    d = u_invariant(7, 5);  // 7^4 = 2401 = 1 mod 25: ord_b >= 1, u = 2
    CHECK(d.u >= 2);
    d = u_invariant(1, 5);  // the degenerate corner
    CHECK(d.u == kInfiniteOrd);
    d = u_invariant(-1, 5);
    CHECK(d.u == kInfiniteOrd);
}

TEST_CASE("u(X) and d for the twisted parameter") {
    // triple (1,1,3), p=5: X = (t-p)^t delta^2 = -8 delta^2
    Triple t(1, 1, 3, 5);
    UDInvariants ud = u_and_d(t, 1);
    // X = -8: ((-8)^4 - 1)/5 = 819 = 4 mod 5, unit, so u = 1, d = 4
    CHECK(ud.u == 1);
    REQUIRE(ud.d.has_value());
    CHECK(*ud.d == 4);
    CHECK(d_value(t, 1) == 4);
    // higher precision must not change d when u <= 1
    CHECK(d_value(t, 1, 3) == 4);
    // p | delta: u(X) = 0 and d = (r+s) ord_p(delta) mod p
    ud = u_and_d(t, 5);
    CHECK(ud.u == 0);
    REQUIRE(ud.d.has_value());
    CHECK(*ud.d == 2);
    ud = u_and_d(t, 25);
    CHECK(ud.u == 0);
    CHECK(*ud.d == 4);
}

TEST_CASE("B pins") {
    CHECK(B_value(1, 2, 5) == 0);
    CHECK(B_value(1, 3, 5) == 1);
    // precision insensitivity
    CHECK(B_value(1, 3, 5, 3) == 1);
    for (int64_t r = 1; r <= 3; ++r)
        for (int64_t delta = 1; delta <= 20; ++delta) {
            if (delta % 5 == 0) continue;
            int64_t b = B_value(r, delta, 5);
            CHECK(b >= 0);
            CHECK(b < 5);
            CHECK(B_value(r, delta, 5, 3) == b);
        }
}

TEST_CASE("Bernoulli numbers, exact") {
    auto B = bernoulli_exact(12);
    CHECK(B[0] == 1);
    CHECK(B[1] == cpp_rational(-1, 2));
    CHECK(B[2] == cpp_rational(1, 6));
    CHECK(B[3] == 0);
    CHECK(B[4] == cpp_rational(-1, 30));
    CHECK(B[6] == cpp_rational(1, 42));
    CHECK(B[8] == cpp_rational(-1, 30));
    CHECK(B[10] == cpp_rational(5, 66));
    CHECK(B[12] == cpp_rational(-691, 2730));
}

TEST_CASE("Bernoulli numbers mod p vs power-sum oracle") {
    // S_k(p) = sum_{a<p} a^k satisfies S_k(p)/p = B_k mod p for even k <= p-3.
    for (int64_t p : {5, 7, 11, 13, 17, 19, 23, 37}) {
        auto bk = bernoulli_mod_p(p);
        for (int64_t k = 2; k <= p - 3; k += 2) {
            cpp_int p2 = cpp_int(p) * p;
            cpp_int s = 0;
            for (int64_t a = 1; a < p; ++a) {
                cpp_int t = 1;
                for (int64_t j = 0; j < k; ++j) t = t * a % p2;
                s = (s + t) % p2;
            }
            CHECK(s % p == 0);
            int64_t oracle = static_cast<int64_t>(s / p % p);
            REQUIRE(bk.count(k) == 1);
            CHECK(bk.at(k) == oracle);
        }
    }
}

TEST_CASE("regularity") {
    for (int64_t p : {5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        Regularity r = irregularity_index(p);
        CHECK(r.regular);
        CHECK(r.i_p == 0);
    }
    CHECK(irregularity_index(37).i_p == 1);
    CHECK_FALSE(irregularity_index(37).regular);
    CHECK(irregularity_index(59).i_p == 1);
    CHECK(irregularity_index(67).i_p == 1);
    CHECK(irregularity_index(157).i_p == 2);
}

TEST_CASE("canonical delta factorization") {
    DeltaFactorization f = reduce_delta(8, 5);
    CHECK(f.delta == 8);
    CHECK(f.k_delta == 1);
    CHECK(f.all_inert);
    CHECK_FALSE(f.has_p);
    f = reduce_delta(32, 5);  // 2^5 -> exponent 0
    CHECK(f.delta == 1);
    CHECK(f.k_delta == 0);
    f = reduce_delta(64, 5);  // 2^6 -> 2
    CHECK(f.delta == 2);
    f = reduce_delta(11, 5);  // 11 = 1 mod 5: split
    CHECK_FALSE(f.all_inert);
    f = reduce_delta(10, 5);
    CHECK(f.has_p);
    f = reduce_delta(6, 5);  // 2 and 3 both have order 4 mod 5
    CHECK(f.k_delta == 2);
    CHECK(f.all_inert);
    f = reduce_delta(19, 5);  // order 2 < 4: not inert in the full field
    CHECK_FALSE(f.all_inert);
}
