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

#include "fermatjac/cyclotomic.hpp"

namespace fermatjac {

// Truncated element of K = Q_p(lambda), lambda^(p-1) = -p: sum c_j lambda^j
// with c_j in Z/p^M.  The ring Z/p^M[lambda]/(lambda^(p-1)+p) is exactly
// O_K / lambda^N with N = M(p-1); all arithmetic below is exact in it.
struct LocalElt {
    std::vector<int64_t> c;
    bool operator==(const LocalElt&) const = default;
};

class LocalField {
  public:
    // branch_digit picks the lifting branch for omega_hat: the preferred
    // first lambda-digit of (omega_hat - 1)/lambda.  Exported classifications
    // are branch-invariant; 1 is the default convention.
    explicit LocalField(int64_t p, int M = 4, int64_t branch_digit = 1);

    int64_t p() const { return p_; }
    int M() const { return M_; }
    int N() const { return N_; }
    int64_t pM() const { return pM_; }

    LocalElt zero() const;
    LocalElt one() const;
    LocalElt from_int(int64_t n) const;
    LocalElt lambda_pow(int64_t n) const;  // 0 <= n < N
    bool is_zero(const LocalElt& a) const;

    LocalElt add(const LocalElt& a, const LocalElt& b) const;
    LocalElt sub(const LocalElt& a, const LocalElt& b) const;
    LocalElt neg(const LocalElt& a) const;
    LocalElt mul(const LocalElt& a, const LocalElt& b) const;
    LocalElt inv(const LocalElt& a) const;            // units only
    LocalElt pow(const LocalElt& a, int64_t e) const; // negative e for units

    // kInfiniteOrd when zero to working precision.
    int64_t ord_lambda(const LocalElt& a) const;
    std::vector<int64_t> digits(const LocalElt& a) const;  // N lambda-adic digits
    LocalElt from_digits(const std::vector<int64_t>& d) const;
    LocalElt unit_part(const LocalElt& a) const;  // a / lambda^ord

    int64_t teich(int64_t h) const;  // Teichmueller lift mod p^M
    // lambda -> mu(h) lambda, omega_hat -> omega_hat^h.
    LocalElt galois(int64_t h, const LocalElt& a) const;

    const LocalElt& omega_hat() const { return omega_; }
    // u_0 = lambda, u_1 = omega_hat, u_i = exp(lambda^i) for 2 <= i <= p.
    const LocalElt& u(int64_t i) const;

    bool is_pth_power(const LocalElt& a) const;
    // Exponents (c_0..c_p) of a with respect to u_0..u_p modulo p-th powers.
    std::vector<int64_t> unit_class(const LocalElt& a) const;

    LocalElt embed(const CycInt& x) const;  // omega -> omega_hat

  private:
    LocalElt exp_lambda_pow(int64_t i) const;
    void lift_omega(int64_t branch_digit);

    int64_t p_;
    int M_;
    int N_;
    int64_t pM_;
    std::vector<int64_t> teich_;
    LocalElt omega_;
    std::vector<LocalElt> u_;
    std::vector<LocalElt> u_inv_;
    std::vector<LocalElt> pth_root_candidates_;  // inverses of z^p, z = teich(z0)(1+z1*lambda)
};

}  // namespace fermatjac
