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

#include "fermatjac/local_field.hpp"

namespace fermatjac {

struct LocalImage {
    bool at_p;
    int64_t p = 0;
    int64_t ell = 0;  // when !at_p
    // At the place above p: indices of the generators u_i spanning the image.
    std::vector<int64_t> I;
    enum class OffKind { unramified, delta_span } kind = OffKind::unramified;
    int64_t delta = 0;
    int64_t dimension = 0;  // (p+1)/2 at p, 1 off p
};

LocalImage local_image_off_p(int64_t ell, int64_t delta, int64_t p);
LocalImage local_image_at_p(int64_t r, int64_t delta, int64_t p);

struct SelmerReport {
    int64_t p, r;
    int64_t delta_input, delta;  // delta canonical
    int64_t B;
    int b_sym;
    std::vector<std::string> generators;
    int64_t dimension;
    int64_t S;  // dimension - 1
    std::string method;
};

// Theorem-level closed form; requires p >= 5 regular, p coprime to delta,
// every prime factor of delta inert.
SelmerReport selmer_closed_form(int64_t r, int64_t delta, int64_t p);

int64_t selmer_rank_S(int64_t r, int64_t delta, int64_t p);

int64_t selmer_upper_bound(int64_t delta, int64_t p,
                           std::optional<int64_t> dim_cl = std::nullopt);

struct DirectDetail {
    std::vector<std::string> labels;                // S-unit generator order
    std::vector<std::vector<int64_t>> constraints;  // local-image condition rows
    std::vector<std::vector<int64_t>> kernel;       // kernel basis (exponent vectors)
};

// Independent engine: S-units {p, ell | delta, omega, E_2..E_{p-3}} localized
// at the place above p (unit classes) and at each inert ell | delta
// (ord, chi); kernel of the local-image membership conditions.
SelmerReport selmer_direct(int64_t r, int64_t delta, int64_t p, int M = 4,
                           DirectDetail* detail = nullptr);

// Runs both methods: equal dimension and the closed-form generators must lie
// in the direct kernel.  Throws ConsistencyError on mismatch.
SelmerReport selmer_both(int64_t r, int64_t delta, int64_t p, int M = 4);

// Exponent-vector kernel of A x = 0 over F_p.
std::vector<std::vector<int64_t>> kernel_mod_p(std::vector<std::vector<int64_t>> A,
                                               int64_t ncols, int64_t p);
int64_t rank_mod_p(std::vector<std::vector<int64_t>> A, int64_t ncols, int64_t p);

// Unit class at the place above p of the S-unit named by label ("p", "omega",
// "E_<i>", or a prime number); cached per (p, M); retries once at M+1 on
// precision failure.
std::vector<int64_t> pi_unit_class_of_label(int64_t p, int M, const std::string& label);

// (ord_ell mod p, chi exponent of the unit part) of the labeled S-unit in the
// completion at an inert prime ell.
std::pair<int64_t, int64_t> off_p_class_of_label(int64_t ell, int64_t p,
                                                 const std::string& label);

}  // namespace fermatjac
