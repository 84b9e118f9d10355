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

#include "fermatjac/root_number.hpp"
#include "fermatjac/selmer.hpp"

namespace fermatjac {

struct ParityResult {
    int64_t p, r, delta;
    int eps;
    int64_t S;
    bool holds;
};

// eps from the root-number formula on the reduced triple, S from the Selmer
// closed form; two disjoint pipelines sharing only the base arithmetic.
ParityResult parity_check(const Triple& triple, int64_t delta);

struct ParityScanReport {
    int64_t p;
    int64_t delta_max;
    int64_t n_enumerated = 0;  // p-th-power-free delta in range
    int64_t n_skipped = 0;     // hypothesis filter
    int64_t n_checked = 0;     // (r, delta) cases
    int64_t n_holds = 0;
    std::vector<ParityResult> failures;
    std::vector<ParityResult> records;  // kept when collect_records
};

// r values: empty = all reduced triples (r,1,p-r-1), r in 1..p-2.
ParityScanReport parity_scan(int64_t p, int64_t delta_max,
                             std::vector<int64_t> r_values = {},
                             bool collect_records = false, int threads = 0);

}  // namespace fermatjac
