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

#include "fermatjac/arith.hpp"

namespace fermatjac {

// Element of F_{ell^f}: coefficient vector of length f, little-endian in the
// class of x modulo the field's irreducible modulus.
struct FqElt {
    std::vector<int64_t> c;
    bool operator==(const FqElt&) const = default;
};

// Explicit F_{ell^f} as F_ell[x]/(modulus).  Construction is deterministic:
// lexicographically least irreducible modulus and least generator, so every
// character value is reproducible run to run.
class FqField {
  public:
    static FqField build(int64_t ell, int64_t f);
    // Field with a caller-supplied monic irreducible modulus (little-endian,
    // length f+1); used for F_ell[x]/(Phi_p) at inert ell.
    static FqField with_modulus(int64_t ell, std::vector<int64_t> modulus);

    int64_t ell() const { return ell_; }
    int64_t f() const { return f_; }
    const cpp_int& q() const { return q_; }
    const std::vector<int64_t>& modulus() const { return modulus_; }
    const FqElt& generator() const { return generator_; }

    FqElt zero() const;
    FqElt one() const;
    FqElt from_int(const cpp_int& n) const;
    // n-th element in the deterministic enumeration (base-ell digits of n).
    FqElt element_at(const cpp_int& n) const;
    cpp_int index_of(const FqElt& a) const;

    bool is_zero(const FqElt& a) const;
    FqElt add(const FqElt& a, const FqElt& b) const;
    FqElt sub(const FqElt& a, const FqElt& b) const;
    FqElt mul(const FqElt& a, const FqElt& b) const;
    FqElt pow(const FqElt& a, cpp_int e) const;
    FqElt inv(const FqElt& a) const;

    // Element of exact order p (requires p | q-1); deterministic.
    FqElt zeta_p(int64_t p) const;
    // k in Z/p with a^((q-1)/p) = zeta_p^k.
    int64_t chi_exponent(const FqElt& a, int64_t p) const;
    // Dense chi table indexed by index_of; only for q <= 2^22.
    std::vector<int8_t> chi_table(int64_t p) const;

  private:
    FqField() = default;
    void init_generator();

    int64_t ell_ = 0, f_ = 0;
    cpp_int q_;
    std::vector<int64_t> modulus_;
    FqElt generator_;
};

// Prime factors of ell^f - 1, via its cyclotomic-polynomial pieces.
std::vector<cpp_int> prime_factors_of_q_minus_1(int64_t ell, int64_t f);

// #{(x,y) in F_q^2 : y^p = x^r (delta-x)^s}; requires ell coprime to p*delta.
int64_t count_affine_points(const FqField& field, const Triple& triple, int64_t delta);

// Numerator P(T) of the zeta function of the smooth projective model over
// F_ell, as coefficient vector c_0..c_{p-1} with c_0 = 1.
std::vector<cpp_int> zeta_numerator(int64_t ell, const Triple& triple, int64_t delta);

}  // namespace fermatjac
