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
#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fermatjac {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;
using std::int64_t;

// Violated mathematical hypothesis (e.g. irregular p, split prime factor).
struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two independent computation paths disagree; always a bug.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// p-adic working precision exhausted.
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int64_t kInfiniteOrd = std::numeric_limits<int64_t>::max();

int64_t mod_norm(int64_t a, int64_t m);
int64_t mod_pow(int64_t base, int64_t exp, int64_t m);
int64_t mod_inv(int64_t a, int64_t m);
int64_t ipow(int64_t base, int64_t exp);
bool is_prime(int64_t n);
int64_t multiplicative_order(int64_t a, int64_t p);
int64_t least_primitive_root(int64_t p);

// Exponent triple (r,s,t), r+s+t = p.  Curve: y^p = x^r (delta - x)^s.
struct Triple {
    int64_t r, s, t, p;

    Triple(int64_t r_, int64_t s_, int64_t t_, int64_t p_);

    // Canonical representative (r',1,p-r'-1) of the scaling orbit.
    Triple reduced() const;
    int64_t rst_mod_p() const;
    bool operator==(const Triple&) const = default;
};

int legendre(int64_t a, int64_t p);

// Legendre symbol with the convention (0/p) = -1.
int b_symbol(int64_t B, int64_t p);

struct SplittingData {
    int64_t ell;
    int64_t f;  // multiplicative order of ell mod p
    int64_t g;  // number of places of K above ell, f*g = p-1
    bool inert_in_K_over_F;  // true iff f even
    bool inert_in_K;         // true iff f = p-1
};

SplittingData splitting_data(int64_t ell, int64_t p);

// u(delta) = min(ord_p(a), ord_p(b)+1) where delta = p^a' delta0,
// a = a' mod p and b = (delta0^(p-1)-1)/p.
struct DeltaDecomposition {
    int64_t delta;
    int64_t p;
    int64_t a;      // ord_p(delta) mod p
    int64_t ord_b;  // kInfiniteOrd when delta0 = +-1; meaningful only if a = 0
    int64_t u;      // kInfiniteOrd only in the delta0 = +-1, a = 0 corner
};

DeltaDecomposition u_invariant(int64_t delta, int64_t p);

// u(X) and d for X = r^r s^s (t-p)^t delta^(r+s); u clamped to 2 meaning ">=2".
struct UDInvariants {
    int64_t u;
    std::optional<int64_t> d;  // set iff u <= 1
};

UDInvariants u_and_d(const Triple& triple, int64_t delta, int prec = 2);

// d of the root-number formula; throws if u(X) >= 2.
int64_t d_value(const Triple& triple, int64_t delta, int prec = 2);

// B = p^{-1}((r^r delta^{r+1}/(r+1)^{r+1})^{p-1} - 1) * 2 r delta^2 / (r+1)^3 mod p.
int64_t B_value(int64_t r, int64_t delta, int64_t p, int prec = 2);

// Exact rational Bernoulli numbers B_0..B_n (even indices; odd > 1 are zero).
std::vector<cpp_rational> bernoulli_exact(int64_t n);

// {even k in 2..p-3 -> B_k mod p}.
std::map<int64_t, int64_t> bernoulli_mod_p(int64_t p);

struct Regularity {
    int64_t i_p;
    bool regular;
};

Regularity irregularity_index(int64_t p);

struct DeltaFactorization {
    int64_t delta;    // canonical: exponents reduced mod p, sign kept
    int64_t k_delta;  // distinct prime factors of the canonical delta
    std::vector<std::pair<int64_t, int64_t>> factors;  // (prime, exponent), exponent in 1..p-1
    bool all_inert;   // every prime factor != p has order p-1 mod p
    bool has_p;       // p divides the canonical delta
};

DeltaFactorization reduce_delta(int64_t delta, int64_t p);

}  // namespace fermatjac
