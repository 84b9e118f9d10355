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

#include "fermatjac/finite_field.hpp"

namespace fermatjac {

// Element of Z[omega], omega a primitive p-th root of unity; coefficients in
// the basis 1, omega, ..., omega^(p-2).
struct CycInt {
    int64_t p;
    std::vector<cpp_int> c;

    bool operator==(const CycInt&) const = default;
};

CycInt cyc_zero(int64_t p);
CycInt cyc_const(int64_t p, const cpp_int& n);
CycInt cyc_omega_pow(int64_t p, int64_t e);
CycInt cyc_add(const CycInt& a, const CycInt& b);
CycInt cyc_sub(const CycInt& a, const CycInt& b);
CycInt cyc_neg(const CycInt& a);
CycInt cyc_mul(const CycInt& a, const CycInt& b);
CycInt cyc_pow(const CycInt& a, int64_t e);
bool cyc_is_rational(const CycInt& a);
cpp_int cyc_rational_value(const CycInt& a);  // throws if not rational

// sigma_h: omega -> omega^h.
CycInt galois_apply(int64_t h, const CycInt& a);
CycInt cyc_conj(const CycInt& a);
// Product of all Galois conjugates; rational by construction.
cpp_int cyc_norm(const CycInt& a);
// Evaluation omega -> m in F_ell (for split-prime valuations).
int64_t cyc_eval_mod(const CycInt& a, int64_t m, int64_t ell);

// CM type: {h in (Z/p)^* : <hr/p> + <hs/p> + <ht/p> = 1}, sorted.
std::vector<int64_t> cm_type(const Triple& triple);

// j_{r,s,t}(V) = -sum_{x != 0,1} chi(x)^r chi(1-x)^s over the given field.
CycInt jacobi_sum(const FqField& field, const Triple& triple);

// j = 1 mod (1-omega)^2, expressed by the two coefficient congruences.
bool jacobi_congruence(const CycInt& j);

// At split ell = 1 mod p: the vanishing set of j under omega -> m matches
// {m0^h : h in CM type} for the deterministic base root m0.
bool stickelberger_check(const Triple& triple, int64_t ell);

// Hecke-character value phi_ell = (ell/p); computed by formula and by the
// place-by-place product, which must agree.
int phi_ell(const Triple& triple, int64_t ell);

// Cyclotomic unit E_i = prod_a (omega^((1-g)/2) (1-omega^g)/(1-omega))^(a^i sigma_a^{-1}).
CycInt cyclotomic_unit_E(int64_t i, int64_t p, int64_t g);

}  // namespace fermatjac
