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

namespace fermatjac {

// All 1 <= delta <= X with no p-th power factor, by sieving over q^p <= X.
std::vector<int64_t> enumerate_pth_power_free(int64_t X, int64_t p);

struct DensityRow {
    int64_t delta;
    int64_t ord_p;
    int64_t delta0_mod_p2;
    int64_t tau;
    int alpha;
    int eps;
};

struct DensityClass {
    int64_t ord_p;
    int64_t delta0_mod_p2;
    int alpha;
    int64_t count;
};

struct DensityReport {
    int64_t p;
    int64_t x_max;
    int64_t n_total = 0;
    int64_t n_plus = 0;
    double fraction = 0.0;
    bool alpha_constant_per_class = true;  // exact check of the class dependence
    std::vector<DensityClass> classes;
    std::vector<DensityRow> rows;  // kept when keep_rows
};

DensityReport density_experiment(int64_t p, const Triple& triple, int64_t x_max,
                                 bool keep_rows = false, int threads = 0);

}  // namespace fermatjac
