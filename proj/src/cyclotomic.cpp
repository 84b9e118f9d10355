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
#include "fermatjac/cyclotomic.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace fermatjac {

namespace {

// Collapse an exponent-indexed vector (omega^0..omega^(p-1)) into the basis
// 1..omega^(p-2) using omega^(p-1) = -(1 + omega + ... + omega^(p-2)).
CycInt fold(int64_t p, std::vector<cpp_int> ext) {
    CycInt r{p, std::vector<cpp_int>(p - 1)};
    for (int64_t j = 0; j < p - 1; ++j) r.c[j] = ext[j] - ext[p - 1];
    return r;
}

void check_same_p(const CycInt& a, const CycInt& b) {
    if (a.p != b.p) throw std::invalid_argument("mixed cyclotomic degrees");
}

}  // namespace

CycInt cyc_zero(int64_t p) { return CycInt{p, std::vector<cpp_int>(p - 1)}; }

CycInt cyc_const(int64_t p, const cpp_int& n) {
    CycInt r = cyc_zero(p);
    r.c[0] = n;
    return r;
}

CycInt cyc_omega_pow(int64_t p, int64_t e) {
    std::vector<cpp_int> ext(p);
    ext[mod_norm(e, p)] = 1;
    return fold(p, std::move(ext));
}

CycInt cyc_add(const CycInt& a, const CycInt& b) {
    check_same_p(a, b);
    CycInt r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
}

CycInt cyc_sub(const CycInt& a, const CycInt& b) {
    check_same_p(a, b);
    CycInt r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
}

CycInt cyc_neg(const CycInt& a) {
    CycInt r = a;
    for (auto& v : r.c) v = -v;
    return r;
}

CycInt cyc_mul(const CycInt& a, const CycInt& b) {
    check_same_p(a, b);
    int64_t p = a.p;
    std::vector<cpp_int> conv(2 * p - 3, 0);
    for (int64_t i = 0; i < p - 1; ++i) {
        if (a.c[i] == 0) continue;
        for (int64_t j = 0; j < p - 1; ++j) conv[i + j] += a.c[i] * b.c[j];
    }
    std::vector<cpp_int> ext(p, 0);
    for (int64_t k = 0; k < 2 * p - 3; ++k) ext[k % p] += conv[k];
    return fold(p, std::move(ext));
}

CycInt cyc_pow(const CycInt& a, int64_t e) {
    if (e < 0) throw std::invalid_argument("negative cyclotomic exponent");
    CycInt acc = cyc_const(a.p, 1), base = a;
    while (e > 0) {
        if (e & 1) acc = cyc_mul(acc, base);
        base = cyc_mul(base, base);
        e >>= 1;
    }
    return acc;
}

bool cyc_is_rational(const CycInt& a) {
    for (size_t i = 1; i < a.c.size(); ++i)
        if (a.c[i] != 0) return false;
    return true;
}

cpp_int cyc_rational_value(const CycInt& a) {
    if (!cyc_is_rational(a)) throw std::invalid_argument("not a rational integer");
    return a.c[0];
}

CycInt galois_apply(int64_t h, const CycInt& a) {
    int64_t p = a.p;
    if (mod_norm(h, p) == 0) throw std::invalid_argument("h must be a unit mod p");
    std::vector<cpp_int> ext(p, 0);
    for (int64_t j = 0; j < p - 1; ++j) ext[mod_norm(j * h, p)] += a.c[j];
    return fold(p, std::move(ext));
}

CycInt cyc_conj(const CycInt& a) { return galois_apply(a.p - 1, a); }

cpp_int cyc_norm(const CycInt& a) {
    CycInt acc = cyc_const(a.p, 1);
    for (int64_t h = 1; h < a.p; ++h) acc = cyc_mul(acc, galois_apply(h, a));
    return cyc_rational_value(acc);
}

int64_t cyc_eval_mod(const CycInt& a, int64_t m, int64_t ell) {
    int64_t acc = 0;
    for (int64_t j = static_cast<int64_t>(a.c.size()) - 1; j >= 0; --j) {
        int64_t cj = static_cast<int64_t>(((a.c[j] % ell) + ell) % ell);
        acc = mod_norm(acc * m + cj, ell);
    }
    return acc;
}

std::vector<int64_t> cm_type(const Triple& triple) {
    std::vector<int64_t> phi;
    int64_t p = triple.p;
    for (int64_t h = 1; h < p; ++h) {
        if (mod_norm(h * triple.r, p) + mod_norm(h * triple.s, p) + mod_norm(h * triple.t, p) == p)
            phi.push_back(h);
    }
    return phi;
}

namespace {

// chi(x)^r chi(1-x)^s summed by direct enumeration; needs a chi table.
CycInt jacobi_sum_direct(const FqField& field, const Triple& triple) {
    int64_t p = triple.p;
    auto table = field.chi_table(p);
    int64_t q = static_cast<int64_t>(field.q());
    std::vector<cpp_int> counts(p, 0);
    for (int64_t n = 0; n < q; ++n) {
        FqElt x = field.element_at(n);
        FqElt y = field.sub(field.one(), x);
        if (field.is_zero(x) || field.is_zero(y)) continue;
        int64_t e1 = table[static_cast<int64_t>(field.index_of(x))];
        int64_t e2 = table[static_cast<int64_t>(field.index_of(y))];
        counts[mod_norm(triple.r * e1 + triple.s * e2, p)] += 1;
    }
    return cyc_neg(fold(p, std::move(counts)));
}

// #{k in 1..q0 : m*k = e mod p} for e = 0..p-1, as an exponent histogram.
std::vector<cpp_int> residue_counts(int64_t m, int64_t q0, int64_t p) {
    std::vector<cpp_int> cnt(p, 0);
    int64_t minv = mod_inv(mod_norm(m, p), p);
    for (int64_t e = 0; e < p; ++e) {
        int64_t j = mod_norm(minv * e, p);  // k = j mod p
        cnt[e] = (j == 0) ? q0 / p : (q0 - j) / p + 1;
    }
    return cnt;
}

// For q = q0^2 with p | q0+1, chi is trivial on F_q0 and factors through the
// norm-one torus T = {t : t^(q0+1) = 1}.  Writing t1 = x^(q0-1), t2 = (1-x)^(q0-1),
// the map x -> (t1,t2) is a bijection from F_q minus F_q0 onto ordered pairs of
// distinct elements of T minus {1}, with inverse x = (t2-1)/(t2-t1); and
// chi(x) = zeta^k1 when t1 = t0^k1 for the torus generator t0 = g^(q0-1).
// Elements of F_q0 minus {0,1} contribute chi-exponent 0.  This turns the sum
// into pure exponent counting, validated against jacobi_sum_direct in tests.
CycInt jacobi_sum_torus(int64_t q0, const Triple& triple) {
    int64_t p = triple.p;
    auto a_r = residue_counts(triple.r, q0, p);
    auto a_s = residue_counts(triple.s, q0, p);
    auto a_rs = residue_counts(triple.r + triple.s, q0, p);
    std::vector<cpp_int> ext(p, 0);
    ext[0] += q0 - 2;
    for (int64_t i = 0; i < p; ++i)
        for (int64_t j = 0; j < p; ++j) ext[(i + j) % p] += a_r[i] * a_s[j];
    for (int64_t e = 0; e < p; ++e) ext[e] -= a_rs[e];
    return cyc_neg(fold(p, std::move(ext)));
}

}  // namespace

CycInt jacobi_sum(const FqField& field, const Triple& triple) {
    int64_t p = triple.p;
    if ((field.q() - 1) % p != 0)
        throw std::invalid_argument("jacobi_sum requires p | q-1");
    if (field.f() % 2 == 0) {
        cpp_int q0_big = boost::multiprecision::pow(cpp_int(field.ell()),
                                                    static_cast<unsigned>(field.f() / 2));
        if ((q0_big + 1) % p == 0) return jacobi_sum_torus(static_cast<int64_t>(q0_big), triple);
    }
    return jacobi_sum_direct(field, triple);
}

bool jacobi_congruence(const CycInt& j) {
    int64_t p = j.p;
    cpp_int sum = 0, wsum = 0;
    for (int64_t i = 0; i < p - 1; ++i) {
        sum += j.c[i];
        wsum += i * j.c[i];
    }
    return (sum - 1) % p == 0 && wsum % p == 0;
}

bool stickelberger_check(const Triple& triple, int64_t ell) {
    int64_t p = triple.p;
    if (!is_prime(ell) || (ell - 1) % p != 0)
        throw std::invalid_argument("stickelberger_check requires split ell = 1 mod p");
    FqField F = FqField::build(ell, 1);
    CycInt j = jacobi_sum(F, triple);
    int64_t m0 = F.zeta_p(p).c[0];
    std::set<int64_t> vanish, expected;
    for (int64_t h = 1; h < p; ++h) {
        int64_t m = mod_pow(m0, h, ell);
        if (cyc_eval_mod(j, m, ell) == 0) vanish.insert(m);
    }
    for (int64_t h : cm_type(triple)) expected.insert(mod_pow(m0, h, ell));
    return vanish == expected && static_cast<int64_t>(vanish.size()) == (p - 1) / 2;
}

int phi_ell(const Triple& triple, int64_t ell) {
    int64_t p = triple.p;
    if (ell == p) throw std::invalid_argument("phi_ell requires ell != p");
    int formula = legendre(ell, p);
    SplittingData sd = splitting_data(ell, p);
    // Place product: each place inert over the real subfield contributes -1,
    // split pairs contribute +1.
    int product = sd.inert_in_K_over_F ? (sd.g % 2 == 0 ? 1 : -1) : 1;
    if (formula != product) throw ConsistencyError("phi_ell paths disagree");
    return formula;
}

CycInt cyclotomic_unit_E(int64_t i, int64_t p, int64_t g) {
    if (i % 2 != 0 || i < 2 || i > p - 3)
        throw std::invalid_argument("E_i requires even i in 2..p-3");
    if (multiplicative_order(g, p) != p - 1)
        throw std::invalid_argument("g must be a primitive root mod p");
    int64_t e0 = mod_norm((1 - g) * mod_inv(2, p), p);
    std::vector<cpp_int> base_ext(p, 0);
    for (int64_t k = 0; k < g; ++k) base_ext[mod_norm(e0 + k, p)] += 1;
    CycInt base = fold(p, std::move(base_ext));  // omega^((1-g)/2) (1-omega^g)/(1-omega)
    CycInt acc = cyc_const(p, 1);
    for (int64_t a = 1; a < p; ++a) {
        int64_t exp = mod_pow(a, i, p);
        acc = cyc_mul(acc, cyc_pow(galois_apply(mod_inv(a, p), base), exp));
    }
    return acc;
}

}  // namespace fermatjac
