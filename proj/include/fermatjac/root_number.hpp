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

struct RootNumberReport {
    int64_t p;
    int64_t r, s, t;
    int64_t delta_input;
    int64_t delta;  // canonical (exponents mod p)
    int eps_inf;
    int eps_p;
    std::vector<std::pair<int64_t, int>> eps_ell;  // primes ell | delta, ell != p
    int64_t u_X;                                   // clamped to 2 meaning >= 2
    std::optional<int64_t> d;                      // set iff u_X <= 1
    int global;
};

int epsilon_infinity(int64_t p);
// ell | delta, ell != p.
int epsilon_at_ell(int64_t ell, int64_t p);
// The place above p; delta must be canonical.
int epsilon_at_p(const Triple& triple, int64_t delta);
// Dispatcher: place = nullopt means the archimedean place.
int epsilon_local(std::optional<int64_t> place, const Triple& triple, int64_t delta);

RootNumberReport epsilon_global(const Triple& triple, int64_t delta);

// p = 3 specialization: -1 iff delta = +-1 mod 9 or ord_3(delta) = 1.
int epsilon_p3(int64_t delta);

struct AlphaTau {
    int alpha;    // in {0,1}
    int64_t tau;  // #{ell | delta, ell != p, (ell/p) = -1}
};

AlphaTau alpha_tau(const Triple& triple, int64_t delta);

struct ConductorExponents {
    int64_t c_Pi;  // 1 if u_X >= 2, 2 if u_X = 1, p+1 if u_X = 0
    int64_t n_Pi;  // always 1
    int64_t c_V;   // 1 at each V | delta off p
};

ConductorExponents conductor_exponents(const Triple& triple, int64_t delta);

}  // namespace fermatjac
