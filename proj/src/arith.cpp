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
#include "fermatjac/arith.hpp"

#include <cassert>
#include <cmath>

namespace fermatjac {

namespace {

using int128 = __int128;

void require_odd_prime(int64_t p) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
}

cpp_int cpp_pow_mod(cpp_int base, cpp_int exp, const cpp_int& m) {
    cpp_int b = ((base % m) + m) % m;
    cpp_int r(boost::multiprecision::powm(b, exp, m));
    return r;
}

}  // namespace

int64_t mod_norm(int64_t a, int64_t m) {
    assert(m > 0);
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

int64_t mod_pow(int64_t base, int64_t exp, int64_t m) {
    assert(exp >= 0 && m > 0);
    int64_t b = mod_norm(base, m), acc = 1 % m;
    while (exp > 0) {
        if (exp & 1) acc = static_cast<int64_t>(int128(acc) * b % m);
        b = static_cast<int64_t>(int128(b) * b % m);
        exp >>= 1;
    }
    return acc;
}

int64_t mod_inv(int64_t a, int64_t m) {
    int64_t g = m, x = 0, x1 = 1, b = mod_norm(a, m);
    while (b != 0) {
        int64_t q = g / b;
        g -= q * b;
        std::swap(g, b);
        x -= q * x1;
        std::swap(x, x1);
    }
    if (g != 1)
        throw std::invalid_argument("not invertible: gcd(" + std::to_string(a) + "," +
                                    std::to_string(m) + ") = " + std::to_string(g));
    return mod_norm(x, m);
}

int64_t ipow(int64_t base, int64_t exp) {
    assert(exp >= 0);
    int64_t acc = 1;
    for (int64_t i = 0; i < exp; ++i) {
        assert(base == 0 || std::abs(acc) <= std::numeric_limits<int64_t>::max() / std::abs(base));
        acc *= base;
    }
    return acc;
}

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d : {2, 3, 5, 7, 11, 13}) {
        if (n == d) return true;
        if (n % d == 0) return false;
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    int64_t d = n - 1;
    int r = 0;
    while (d % 2 == 0) d /= 2, ++r;
    for (int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (a % n == 0) continue;
        int64_t x = mod_pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < r - 1; ++i) {
            x = static_cast<int64_t>(int128(x) * x % n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

int64_t multiplicative_order(int64_t a, int64_t p) {
    require_odd_prime(p);
    a = mod_norm(a, p);
    if (a == 0) throw std::invalid_argument("order of 0 undefined");
    int64_t ord = 1, x = a;
    while (x != 1) {
        x = static_cast<int64_t>(int128(x) * a % p);
        ++ord;
    }
    return ord;
}

int64_t least_primitive_root(int64_t p) {
    require_odd_prime(p);
    for (int64_t g = 2; g < p; ++g)
        if (multiplicative_order(g, p) == p - 1) return g;
    throw std::logic_error("no primitive root found");  // unreachable for prime p
}

Triple::Triple(int64_t r_, int64_t s_, int64_t t_, int64_t p_) : r(r_), s(s_), t(t_), p(p_) {
    require_odd_prime(p);
    if (r <= 0 || s <= 0 || t <= 0 || r + s + t != p)
        throw std::invalid_argument("triple must have r,s,t > 0 with r+s+t = p");
}

Triple Triple::reduced() const {
    int64_t h = mod_inv(s, p);
    int64_t r1 = mod_norm(h * r, p);
    return Triple(r1, 1, p - r1 - 1, p);
}

int64_t Triple::rst_mod_p() const { return mod_norm(mod_norm(r * s, p) * t, p); }

int legendre(int64_t a, int64_t p) {
    require_odd_prime(p);
    a = mod_norm(a, p);
    if (a == 0) return 0;
    int64_t e = mod_pow(a, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

int b_symbol(int64_t B, int64_t p) {
    int l = legendre(B, p);
    return l == 0 ? -1 : l;
}

SplittingData splitting_data(int64_t ell, int64_t p) {
    require_odd_prime(p);
    if (!is_prime(ell) || ell == p)
        throw std::invalid_argument("ell must be a prime distinct from p");
    int64_t f = multiplicative_order(ell, p);
    SplittingData sd;
    sd.ell = ell;
    sd.f = f;
    sd.g = (p - 1) / f;
    sd.inert_in_K_over_F = (f % 2 == 0);
    sd.inert_in_K = (f == p - 1);
    return sd;
}

DeltaDecomposition u_invariant(int64_t delta, int64_t p) {
    require_odd_prime(p);
    if (delta == 0) throw std::invalid_argument("delta must be nonzero");
    int64_t ord = 0, d0 = delta;
    while (d0 % p == 0) d0 /= p, ++ord;
    DeltaDecomposition dd;
    dd.delta = delta;
    dd.p = p;
    dd.a = ord % p;
    dd.ord_b = kInfiniteOrd;
    if (dd.a != 0) {
        dd.u = 0;
        return dd;
    }
    if (d0 == 1 || d0 == -1) {
        dd.u = kInfiniteOrd;  // delta0^(p-1) = 1 exactly
        return dd;
    }
    // ord_b = ord_p((d0^(p-1)-1)/p), found by raising the modulus until stable.
    for (int m = 3;; ++m) {
        cpp_int pm = boost::multiprecision::pow(cpp_int(p), m);
        cpp_int y = cpp_pow_mod(d0, p - 1, pm);
        cpp_int b = (y - 1) / p;  // divisible by Fermat's little theorem
        int64_t ob = 0;
        while (b != 0 && b % p == 0) b /= p, ++ob;
        if (b != 0 && ob < m - 2) {
            dd.ord_b = ob;
            break;
        }
        if (m > 200) throw PrecisionError("u_invariant: ord_b did not stabilize");
    }
    dd.u = dd.ord_b + 1;
    return dd;
}

UDInvariants u_and_d(const Triple& triple, int64_t delta, int prec) {
    if (delta == 0) throw std::invalid_argument("delta must be nonzero");
    if (prec < 2) throw std::invalid_argument("prec must be >= 2");
    int64_t p = triple.p;
    int64_t ord = 0, d0 = delta;
    while (d0 % p == 0) d0 /= p, ++ord;
    int64_t rs = triple.r + triple.s;
    int64_t aX = mod_norm(rs * ord, p);
    UDInvariants ud;
    if (aX != 0) {
        ud.u = 0;
        ud.d = aX;
        return ud;
    }
    // X0 = r^r s^s (t-p)^t delta0^(r+s), the prime-to-p part of X.
    cpp_int pm = boost::multiprecision::pow(cpp_int(p), prec);
    cpp_int x0 = cpp_pow_mod(triple.r, triple.r, pm) * cpp_pow_mod(triple.s, triple.s, pm) %
                 pm * cpp_pow_mod(triple.t - p, triple.t, pm) % pm * cpp_pow_mod(d0, rs, pm) % pm;
    cpp_int y = cpp_pow_mod(x0, p - 1, pm);
    cpp_int b = (y - 1) / p;
    int64_t b0 = static_cast<int64_t>(b % p);
    if (b0 != 0) {
        ud.u = 1;
        ud.d = b0;
    } else {
        ud.u = 2;  // means >= 2
    }
    return ud;
}

int64_t d_value(const Triple& triple, int64_t delta, int prec) {
    UDInvariants ud = u_and_d(triple, delta, prec);
    if (!ud.d)
        throw std::invalid_argument("d undefined: u(X) >= 2");
    return *ud.d;
}

int64_t B_value(int64_t r, int64_t delta, int64_t p, int prec) {
    require_odd_prime(p);
    if (r < 1 || r > p - 2) throw std::invalid_argument("r must be in 1..p-2");
    if (delta % p == 0) throw HypothesisError("B undefined: p | delta");
    if (prec < 2) throw std::invalid_argument("prec must be >= 2");
    cpp_int pm = boost::multiprecision::pow(cpp_int(p), prec);
    cpp_int num = cpp_pow_mod(r, r, pm) * cpp_pow_mod(delta, r + 1, pm) % pm;
    cpp_int den = cpp_pow_mod(r + 1, r + 1, pm);
    // den^(-1) mod p^prec via den^(phi(p^prec)-1)
    cpp_int phi_minus_1 = boost::multiprecision::pow(cpp_int(p), prec - 1) * (p - 1) - 1;
    cpp_int den_inv = cpp_pow_mod(den, phi_minus_1, pm);
    cpp_int base = num * den_inv % pm;
    cpp_int w = (cpp_pow_mod(base, p - 1, pm) - 1) / p;
    int64_t w0 = static_cast<int64_t>(((w % p) + p) % p);
    int64_t tail = mod_norm(2 * r % p * mod_norm(delta * delta, p) % p *
                                mod_inv(mod_pow(r + 1, 3, p), p),
                            p);
    return mod_norm(w0 * tail, p);
}

std::vector<cpp_rational> bernoulli_exact(int64_t n) {
    std::vector<cpp_rational> B(n + 1);
    std::vector<cpp_int> binom(n + 2);
    B[0] = 1;
    for (int64_t m = 1; m <= n; ++m) {
        // binomials C(m+1, k) for k = 0..m
        binom[0] = 1;
        for (int64_t k = 1; k <= m + 1; ++k) binom[k] = binom[k - 1] * (m + 2 - k) / k;
        cpp_rational acc = 0;
        for (int64_t k = 0; k < m; ++k) acc += cpp_rational(binom[k]) * B[k];
        B[m] = -acc / cpp_rational(m + 1);
    }
    return B;
}

std::map<int64_t, int64_t> bernoulli_mod_p(int64_t p) {
    require_odd_prime(p);
    if (p < 5) throw std::invalid_argument("bernoulli_mod_p requires p >= 5");
    auto B = bernoulli_exact(p - 3);
    std::map<int64_t, int64_t> out;
    for (int64_t k = 2; k <= p - 3; k += 2) {
        cpp_int num = boost::multiprecision::numerator(B[k]);
        cpp_int den = boost::multiprecision::denominator(B[k]);
        if (den % p == 0) throw std::logic_error("non p-integral Bernoulli in range");
        int64_t n_mod = static_cast<int64_t>(((num % p) + p) % p);
        int64_t d_mod = static_cast<int64_t>(den % p);
        out[k] = mod_norm(n_mod * mod_inv(d_mod, p), p);
    }
    return out;
}

Regularity irregularity_index(int64_t p) {
    auto B = bernoulli_mod_p(p);
    int64_t i_p = 0;
    for (auto& [k, v] : B)
        if (v == 0) ++i_p;
    return Regularity{i_p, i_p == 0};
}

DeltaFactorization reduce_delta(int64_t delta, int64_t p) {
    require_odd_prime(p);
    if (delta == 0) throw std::invalid_argument("delta must be nonzero");
    int sign = delta < 0 ? -1 : 1;
    int64_t n = std::abs(delta);
    DeltaFactorization out;
    out.delta = sign;
    out.k_delta = 0;
    out.all_inert = true;
    out.has_p = false;
    for (int64_t q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        int64_t e = 0;
        while (n % q == 0) n /= q, ++e;
        e %= p;
        if (e == 0) continue;
        out.factors.emplace_back(q, e);
    }
    if (n > 1) out.factors.emplace_back(n, 1);
    for (auto& [q, e] : out.factors) {
        out.delta *= ipow(q, e);
        ++out.k_delta;
        if (q == p)
            out.has_p = true;
        else if (multiplicative_order(q, p) != p - 1)
            out.all_inert = false;
    }
    return out;
}

}  // namespace fermatjac
