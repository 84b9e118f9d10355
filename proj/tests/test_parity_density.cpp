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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fermatjac/density.hpp"
#include "fermatjac/parity.hpp"

using namespace fermatjac;

TEST_CASE("enumeration of p-th-power-free integers") {
    auto v = enumerate_pth_power_free(40, 3);
    // cube-free up to 40: everything except 8, 16, 24, 27, 32, 40
    for (int64_t d = 1; d <= 40; ++d) {
        bool cube_free = d % 8 != 0 && d % 27 != 0;
        bool in = std::find(v.begin(), v.end(), d) != v.end();
        CHECK(in == cube_free);
    }
    auto w = enumerate_pth_power_free(100, 5);
    for (int64_t d : {32, 64, 96}) CHECK(std::find(w.begin(), w.end(), d) == w.end());
    CHECK(w.size() == 100 - 3);
}

TEST_CASE("parity pins") {
    ParityResult r = parity_check(Triple(1, 1, 3, 5), 2);
    CHECK(r.eps == 1);
    CHECK(r.S == 0);
    CHECK(r.holds);
    r = parity_check(Triple(1, 1, 3, 5), 3);
    CHECK(r.eps == -1);
    CHECK(r.S == 1);
    CHECK(r.holds);
}

TEST_CASE("parity scan") {
    ParityScanReport rep = parity_scan(5, 60, {}, true, 2);
    CHECK(rep.n_enumerated > 0);
    CHECK(rep.n_checked >= 30);
    CHECK(rep.failures.empty());
    CHECK(rep.n_holds == rep.n_checked);
    CHECK(rep.records.size() == static_cast<size_t>(rep.n_checked));
    // every record repeats the invariant
    for (auto& rec : rep.records) CHECK((rec.eps == ((rec.S % 2 == 0) ? 1 : -1)));
    // skipped + admissible * r-count = checked bookkeeping
    CHECK(rep.n_checked == (rep.n_enumerated - rep.n_skipped) * (5 - 2));
}

TEST_CASE("density experiment") {
    DensityReport rep = density_experiment(3, Triple(1, 1, 1, 3), 3000, true, 2);
    CHECK(rep.n_total == static_cast<int64_t>(rep.rows.size()));
    CHECK(rep.fraction > 0.4);
    CHECK(rep.fraction < 0.6);
    CHECK(rep.alpha_constant_per_class);
    int64_t plus = 0;
    for (auto& row : rep.rows) {
        CHECK((row.eps == 1 || row.eps == -1));
        // eps = (-1)^(alpha + tau)
        CHECK(row.eps == (((row.alpha + row.tau) % 2 == 0) ? 1 : -1));
        CHECK(row.delta0_mod_p2 % 3 != 0);
        if (row.eps == 1) ++plus;
    }
    CHECK(plus == rep.n_plus);
    // class keys are unique
    std::set<std::pair<int64_t, int64_t>> keys;
    for (auto& cls : rep.classes) keys.insert({cls.ord_p, cls.delta0_mod_p2});
    CHECK(keys.size() == rep.classes.size());
    // single-threaded run gives identical aggregates
    DensityReport rep1 = density_experiment(3, Triple(1, 1, 1, 3), 3000, false, 1);
    CHECK(rep1.n_total == rep.n_total);
    CHECK(rep1.n_plus == rep.n_plus);
}
