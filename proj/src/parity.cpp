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
#include "fermatjac/parity.hpp"

#include "fermatjac/density.hpp"

#include <algorithm>
#include <thread>

namespace fermatjac {

ParityResult parity_check(const Triple& triple, int64_t delta) {
    Triple red = triple.reduced();
    RootNumberReport rn = epsilon_global(red, delta);
    int64_t S = selmer_rank_S(red.r, delta, triple.p);
    int expected = (S % 2 == 0) ? 1 : -1;
    return ParityResult{triple.p, red.r, rn.delta, rn.global, S, rn.global == expected};
}

ParityScanReport parity_scan(int64_t p, int64_t delta_max, std::vector<int64_t> r_values,
                             bool collect_records, int threads) {
    if (r_values.empty())
        for (int64_t r = 1; r <= p - 2; ++r) r_values.push_back(r);
    ParityScanReport rep;
    rep.p = p;
    rep.delta_max = delta_max;
    std::vector<int64_t> deltas = enumerate_pth_power_free(delta_max, p);
    rep.n_enumerated = static_cast<int64_t>(deltas.size());
    std::vector<int64_t> admissible;
    for (int64_t d : deltas) {
        DeltaFactorization fac = reduce_delta(d, p);
        if (fac.has_p || !fac.all_inert) {
            ++rep.n_skipped;
            continue;
        }
        admissible.push_back(d);
    }

    struct Chunk {
        std::vector<ParityResult> results;
    };
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = std::min(threads, static_cast<int>(std::max<size_t>(admissible.size(), 1)));
    std::vector<Chunk> chunks(threads);
    auto work = [&](int w) {
        for (size_t i = w; i < admissible.size(); i += threads)
            for (int64_t r : r_values) {
                Triple triple(r, 1, p - r - 1, p);
                chunks[w].results.push_back(parity_check(triple, admissible[i]));
            }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < threads; ++w) pool.emplace_back(work, w);
    work(0);
    for (auto& th : pool) th.join();

    for (auto& ch : chunks)
        for (auto& res : ch.results) {
            ++rep.n_checked;
            if (res.holds)
                ++rep.n_holds;
            else
                rep.failures.push_back(res);
            if (collect_records) rep.records.push_back(res);
        }
    return rep;
}

}  // namespace fermatjac
