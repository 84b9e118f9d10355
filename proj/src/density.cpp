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
#include "fermatjac/density.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace fermatjac {

std::vector<int64_t> enumerate_pth_power_free(int64_t X, int64_t p) {
    if (X < 1) throw std::invalid_argument("X must be >= 1");
    std::vector<char> keep(X + 1, 1);
    for (int64_t q = 2;; ++q) {
        // q^p <= X without overflow
        int64_t qp = 1;
        bool over = false;
        for (int64_t i = 0; i < p; ++i) {
            if (qp > X / q) {
                over = true;
                break;
            }
            qp *= q;
        }
        if (over) break;
        for (int64_t m = qp; m <= X; m += qp) keep[m] = 0;
    }
    std::vector<int64_t> out;
    for (int64_t d = 1; d <= X; ++d)
        if (keep[d]) out.push_back(d);
    return out;
}

DensityReport density_experiment(int64_t p, const Triple& triple, int64_t x_max,
                                 bool keep_rows, int threads) {
    if (triple.p != p) throw std::invalid_argument("triple does not match p");
    std::vector<int64_t> deltas = enumerate_pth_power_free(x_max, p);
    int64_t p2 = p * p;

    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = std::min(threads, static_cast<int>(std::max<size_t>(deltas.size(), 1)));

    std::vector<std::vector<DensityRow>> chunk_rows(threads);
    auto work = [&](int w) {
        for (size_t i = w; i < deltas.size(); i += threads) {
            int64_t d = deltas[i];
            RootNumberReport rn = epsilon_global(triple, d);
            int64_t ord = 0, d0 = d;
            while (d0 % p == 0) d0 /= p, ++ord;
            int64_t tau = 0;
            for (auto& [ell, e] : rn.eps_ell)
                if (legendre(ell, p) == -1) ++tau;
            int alpha = static_cast<int>(mod_norm((rn.global == -1 ? 1 : 0) - tau, 2));
            chunk_rows[w].push_back(
                DensityRow{d, ord, mod_norm(d0, p2), tau, alpha, rn.global});
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < threads; ++w) pool.emplace_back(work, w);
    work(0);
    for (auto& th : pool) th.join();

    DensityReport rep;
    rep.p = p;
    rep.x_max = x_max;
    std::map<std::pair<int64_t, int64_t>, DensityClass> classes;
    for (auto& rows : chunk_rows)
        for (auto& row : rows) {
            ++rep.n_total;
            if (row.eps == 1) ++rep.n_plus;
            auto key = std::make_pair(row.ord_p, row.delta0_mod_p2);
            auto it = classes.find(key);
            if (it == classes.end()) {
                classes[key] = DensityClass{row.ord_p, row.delta0_mod_p2, row.alpha, 1};
            } else {
                it->second.count += 1;
                if (it->second.alpha != row.alpha) rep.alpha_constant_per_class = false;
            }
            if (keep_rows) rep.rows.push_back(row);
        }
    for (auto& [key, cls] : classes) rep.classes.push_back(cls);
    rep.fraction = rep.n_total ? static_cast<double>(rep.n_plus) / rep.n_total : 0.0;
    if (keep_rows)
        std::sort(rep.rows.begin(), rep.rows.end(),
                  [](const DensityRow& a, const DensityRow& b) { return a.delta < b.delta; });
    return rep;
}

}  // namespace fermatjac
