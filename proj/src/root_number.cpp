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
#include "fermatjac/root_number.hpp"

namespace fermatjac {

int epsilon_infinity(int64_t p) { return legendre(-1, p); }

int epsilon_at_ell(int64_t ell, int64_t p) {
    if (ell == p) throw std::invalid_argument("use epsilon_at_p for the place above p");
    return legendre(ell, p);
}

int epsilon_at_p(const Triple& triple, int64_t delta) {
    int64_t p = triple.p;
    UDInvariants ud = u_and_d(triple, delta);
    int64_t rst = triple.rst_mod_p();
    if (ud.u == 0) {
        if (*ud.d == 0) throw std::logic_error("d = 0 in the u = 0 branch");
        return -legendre(-rst * *ud.d, p);
    }
    if (ud.u == 1) return -legendre(rst * *ud.d, p);
    return legendre(-2, p);
}

int epsilon_local(std::optional<int64_t> place, const Triple& triple, int64_t delta) {
    int64_t canon = reduce_delta(delta, triple.p).delta;
    if (!place) return epsilon_infinity(triple.p);
    if (*place == triple.p) return epsilon_at_p(triple, canon);
    if (!is_prime(*place)) throw std::invalid_argument("place must be prime or infinite");
    if (canon % *place == 0) return epsilon_at_ell(*place, triple.p);
    return 1;
}

RootNumberReport epsilon_global(const Triple& triple, int64_t delta) {
    DeltaFactorization fac = reduce_delta(delta, triple.p);
    RootNumberReport rep;
    rep.p = triple.p;
    rep.r = triple.r;
    rep.s = triple.s;
    rep.t = triple.t;
    rep.delta_input = delta;
    rep.delta = fac.delta;
    rep.eps_inf = epsilon_infinity(triple.p);
    rep.eps_p = epsilon_at_p(triple, fac.delta);
    UDInvariants ud = u_and_d(triple, fac.delta);
    rep.u_X = ud.u;
    rep.d = ud.d;
    rep.global = rep.eps_inf * rep.eps_p;
    for (auto& [ell, e] : fac.factors) {
        if (ell == triple.p) continue;
        int eps = epsilon_at_ell(ell, triple.p);
        rep.eps_ell.emplace_back(ell, eps);
        rep.global *= eps;
    }
    return rep;
}

int epsilon_p3(int64_t delta) {
    if (delta == 0) throw std::invalid_argument("delta must be nonzero");
    int64_t ord3 = 0, d0 = delta;
    while (d0 % 3 == 0) d0 /= 3, ++ord3;
    int64_t m = mod_norm(delta, 9);
    if (m == 1 || m == 8 || ord3 == 1) return -1;
    return 1;
}

AlphaTau alpha_tau(const Triple& triple, int64_t delta) {
    DeltaFactorization fac = reduce_delta(delta, triple.p);
    int64_t tau = 0;
    for (auto& [ell, e] : fac.factors)
        if (ell != triple.p && legendre(ell, triple.p) == -1) ++tau;
    RootNumberReport rep = epsilon_global(triple, fac.delta);
    int alpha = static_cast<int>(mod_norm((rep.global == -1 ? 1 : 0) - tau, 2));
    return AlphaTau{alpha, tau};
}

ConductorExponents conductor_exponents(const Triple& triple, int64_t delta) {
    int64_t canon = reduce_delta(delta, triple.p).delta;
    UDInvariants ud = u_and_d(triple, canon);
    ConductorExponents ce;
    ce.c_Pi = ud.u >= 2 ? 1 : (ud.u == 1 ? 2 : triple.p + 1);
    ce.n_Pi = 1;
    ce.c_V = 1;
    return ce;
}

}  // namespace fermatjac
