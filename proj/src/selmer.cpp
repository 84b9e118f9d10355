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
#include "fermatjac/selmer.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <tuple>

namespace fermatjac {

namespace {

std::mutex g_cache_mutex;

const LocalField& cached_local_field(int64_t p, int M) {
    static std::map<std::pair<int64_t, int>, std::unique_ptr<LocalField>> cache;
    auto key = std::make_pair(p, M);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_unique<LocalField>(p, M)).first;
    return *it->second;
}

const FqField& cached_inert_completion(int64_t ell, int64_t p) {
    static std::map<std::pair<int64_t, int64_t>, std::unique_ptr<FqField>> cache;
    auto key = std::make_pair(ell, p);
    auto it = cache.find(key);
    if (it == cache.end()) {
        // Residue field of the inert completion: F_ell[x]/(Phi_p).
        std::vector<int64_t> phi_p(p, 1);
        it = cache.emplace(key, std::make_unique<FqField>(FqField::with_modulus(ell, phi_p)))
                 .first;
    }
    return *it->second;
}

CycInt s_unit_of_label(int64_t p, const std::string& label) {
    if (label == "p") return cyc_const(p, p);
    if (label == "omega") return cyc_omega_pow(p, 1);
    if (label.rfind("E_", 0) == 0)
        return cyclotomic_unit_E(std::stoll(label.substr(2)), p, least_primitive_root(p));
    return cyc_const(p, std::stoll(label));
}

void check_hypotheses(int64_t r, const DeltaFactorization& fac, int64_t p) {
    if (p < 5 || !is_prime(p)) throw HypothesisError("requires an odd prime p >= 5");
    if (r < 1 || r > p - 2) throw std::invalid_argument("r must be in 1..p-2");
    if (fac.has_p) throw HypothesisError("p | delta is outside the supported closed form");
    if (!fac.all_inert)
        throw HypothesisError("delta has a prime factor that is not inert in Q(omega)");
    if (!irregularity_index(p).regular)
        throw HypothesisError("p = " + std::to_string(p) + " is irregular");
}

}  // namespace

LocalImage local_image_off_p(int64_t ell, int64_t delta, int64_t p) {
    if (!is_prime(ell) || ell == p)
        throw std::invalid_argument("ell must be a prime distinct from p");
    int64_t canon = reduce_delta(delta, p).delta;
    LocalImage im;
    im.at_p = false;
    im.p = p;
    im.ell = ell;
    im.delta = canon;
    im.kind = (canon % ell == 0) ? LocalImage::OffKind::delta_span
                                 : LocalImage::OffKind::unramified;
    im.dimension = 1;
    return im;
}

LocalImage local_image_at_p(int64_t r, int64_t delta, int64_t p) {
    if (p < 5 || !is_prime(p)) throw std::invalid_argument("requires an odd prime p >= 5");
    if (r < 1 || r > p - 2) throw std::invalid_argument("r must be in 1..p-2");
    int64_t canon = reduce_delta(delta, p).delta;
    if (canon % p == 0) throw HypothesisError("local image at p requires p coprime to delta");
    LocalImage im;
    im.at_p = true;
    im.p = p;
    im.delta = canon;
    for (int64_t i = (p + 3) / 2; i <= p; ++i) im.I.push_back(i);
    int64_t B = B_value(r, canon, p);
    im.I.push_back(b_symbol(B, p) == 1 ? (p - 1) / 2 : (p + 1) / 2);
    std::sort(im.I.begin(), im.I.end());
    im.dimension = static_cast<int64_t>(im.I.size());
    return im;
}

SelmerReport selmer_closed_form(int64_t r, int64_t delta, int64_t p) {
    DeltaFactorization fac = reduce_delta(delta, p);
    check_hypotheses(r, fac, p);
    SelmerReport rep;
    rep.p = p;
    rep.r = r;
    rep.delta_input = delta;
    rep.delta = fac.delta;
    rep.B = B_value(r, fac.delta, p);
    rep.b_sym = b_symbol(rep.B, p);
    int64_t k = fac.k_delta;
    rep.dimension = (p % 4 == 1) ? k + (p - 3 + 2 * rep.b_sym) / 4
                                 : k + (p - 5 - 2 * rep.b_sym) / 4;
    for (auto& [ell, e] : fac.factors) rep.generators.push_back(std::to_string(ell));
    std::vector<int64_t> e_indices;
    for (int64_t i = (p + 3) / 2; i <= p - 3; ++i)
        if (i % 2 == 0) e_indices.push_back(i);
    if (p % 4 == 1 && rep.b_sym == 1) e_indices.push_back((p - 1) / 2);
    if (p % 4 == 3 && rep.b_sym == -1) e_indices.push_back((p + 1) / 2);
    std::sort(e_indices.begin(), e_indices.end());
    for (int64_t i : e_indices) rep.generators.push_back("E_" + std::to_string(i));
    if (static_cast<int64_t>(rep.generators.size()) != rep.dimension)
        throw ConsistencyError("closed-form generator count does not match the dimension");
    rep.S = rep.dimension - 1;
    rep.method = "closed_form";
    return rep;
}

int64_t selmer_rank_S(int64_t r, int64_t delta, int64_t p) {
    return selmer_closed_form(r, delta, p).S;
}

int64_t selmer_upper_bound(int64_t delta, int64_t p, std::optional<int64_t> dim_cl) {
    if (p < 5 || !is_prime(p)) throw std::invalid_argument("requires an odd prime p >= 5");
    DeltaFactorization fac = reduce_delta(delta, p);
    if (fac.has_p) throw HypothesisError("requires p coprime to delta");
    Regularity reg = irregularity_index(p);
    if (!reg.regular && !dim_cl)
        throw HypothesisError("irregular p: dim Cl(K)[p] must be supplied");
    // ceil((p-3)/4): (p-1)/4 when p = 1 mod 4, (p-3)/4 when p = 3 mod 4; the
    // closed-form dimension attains this term, so flooring would undercount.
    return fac.k_delta + (p - 3 + 3) / 4 + reg.i_p + dim_cl.value_or(0);
}

int64_t rank_mod_p(std::vector<std::vector<int64_t>> A, int64_t ncols, int64_t p) {
    int64_t rank = 0;
    for (int64_t col = 0; col < ncols && rank < static_cast<int64_t>(A.size()); ++col) {
        int64_t piv = -1;
        for (int64_t i = rank; i < static_cast<int64_t>(A.size()); ++i)
            if (A[i][col] % p != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(A[rank], A[piv]);
        int64_t inv = mod_inv(mod_norm(A[rank][col], p), p);
        for (int64_t j = 0; j < ncols; ++j) A[rank][j] = mod_norm(A[rank][j] * inv, p);
        for (int64_t i = 0; i < static_cast<int64_t>(A.size()); ++i) {
            if (i == rank || A[i][col] % p == 0) continue;
            int64_t f = mod_norm(A[i][col], p);
            for (int64_t j = 0; j < ncols; ++j)
                A[i][j] = mod_norm(A[i][j] - f * A[rank][j], p);
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<int64_t>> kernel_mod_p(std::vector<std::vector<int64_t>> A,
                                               int64_t ncols, int64_t p) {
    for (auto& row : A)
        for (auto& v : row) v = mod_norm(v, p);
    std::vector<int64_t> pivot_col;
    int64_t rank = 0;
    for (int64_t col = 0; col < ncols && rank < static_cast<int64_t>(A.size()); ++col) {
        int64_t piv = -1;
        for (int64_t i = rank; i < static_cast<int64_t>(A.size()); ++i)
            if (A[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(A[rank], A[piv]);
        int64_t inv = mod_inv(A[rank][col], p);
        for (int64_t j = 0; j < ncols; ++j) A[rank][j] = mod_norm(A[rank][j] * inv, p);
        for (int64_t i = 0; i < static_cast<int64_t>(A.size()); ++i) {
            if (i == rank || A[i][col] == 0) continue;
            int64_t f = A[i][col];
            for (int64_t j = 0; j < ncols; ++j)
                A[i][j] = mod_norm(A[i][j] - f * A[rank][j], p);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<std::vector<int64_t>> basis;
    for (int64_t col = 0; col < ncols; ++col) {
        if (std::find(pivot_col.begin(), pivot_col.end(), col) != pivot_col.end()) continue;
        std::vector<int64_t> v(ncols, 0);
        v[col] = 1;
        for (int64_t i = 0; i < rank; ++i)
            v[pivot_col[i]] = mod_norm(-A[i][col], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<int64_t> pi_unit_class_of_label(int64_t p, int M, const std::string& label) {
    static std::map<std::tuple<int64_t, int, std::string>, std::vector<int64_t>> cache;
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto key = std::make_tuple(p, M, label);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    CycInt x = s_unit_of_label(p, label);
    std::vector<int64_t> cls;
    try {
        const LocalField& L = cached_local_field(p, M);
        cls = L.unit_class(L.embed(x));
    } catch (const PrecisionError&) {
        const LocalField& L = cached_local_field(p, M + 1);
        cls = L.unit_class(L.embed(x));
    }
    cache[key] = cls;
    return cls;
}

std::pair<int64_t, int64_t> off_p_class_of_label(int64_t ell, int64_t p,
                                                 const std::string& label) {
    static std::map<std::tuple<int64_t, int64_t, std::string>, std::pair<int64_t, int64_t>>
        cache;
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto key = std::make_tuple(ell, p, label);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const FqField& F = cached_inert_completion(ell, p);
    CycInt x = s_unit_of_label(p, label);
    int64_t ord = 0;
    auto divisible = [&](const CycInt& y) {
        return std::all_of(y.c.begin(), y.c.end(), [&](const cpp_int& v) { return v % ell == 0; });
    };
    while (divisible(x)) {
        for (auto& v : x.c) v /= ell;
        ++ord;
    }
    FqElt residue = F.zero();
    FqElt xbar = F.element_at(ell);  // class of the variable = image of omega
    FqElt acc = F.one();
    for (int64_t j = 0; j < p - 1; ++j) {
        int64_t cj = static_cast<int64_t>(((x.c[j] % ell) + ell) % ell);
        FqElt term = F.mul(F.from_int(cj), acc);
        residue = F.add(residue, term);
        acc = F.mul(acc, xbar);
    }
    if (F.is_zero(residue))
        throw std::logic_error("S-unit residue vanished after removing ell powers");
    auto result = std::make_pair(mod_norm(ord, p), F.chi_exponent(residue, p));
    cache[key] = result;
    return result;
}

SelmerReport selmer_direct(int64_t r, int64_t delta, int64_t p, int M,
                           DirectDetail* detail) {
    DeltaFactorization fac = reduce_delta(delta, p);
    check_hypotheses(r, fac, p);
    std::vector<std::string> labels = {"p", "omega"};
    for (auto& [ell, e] : fac.factors) labels.push_back(std::to_string(ell));
    for (int64_t i = 2; i <= p - 3; i += 2) labels.push_back("E_" + std::to_string(i));
    int64_t n = static_cast<int64_t>(labels.size());

    std::vector<std::vector<int64_t>> pi_cls(n);
    for (int64_t g = 0; g < n; ++g) pi_cls[g] = pi_unit_class_of_label(p, M, labels[g]);

    LocalImage im_p = local_image_at_p(r, fac.delta, p);

    // Localization matrix: one row per generator, coordinates at the place
    // above p plus (ord, chi) at each inert ell | delta.  Its rank must be
    // full or the S-unit basis assumption failed.
    std::vector<std::vector<int64_t>> loc(n);
    std::vector<std::vector<std::pair<int64_t, int64_t>>> off_cls(n);
    for (int64_t g = 0; g < n; ++g) {
        loc[g] = pi_cls[g];
        for (auto& [ell, e] : fac.factors) {
            auto oc = off_p_class_of_label(ell, p, labels[g]);
            off_cls[g].push_back(oc);
            loc[g].push_back(oc.first);
            loc[g].push_back(oc.second);
        }
    }
    int64_t ncoords = static_cast<int64_t>(loc[0].size());
    if (rank_mod_p(loc, ncoords, p) != n)
        throw HypothesisError("local classes of the S-unit basis are linearly dependent");

    // Membership conditions.  At p: components outside I vanish.  At ell | delta:
    // the class must be proportional to the class of delta.
    std::vector<std::vector<int64_t>> constraints;
    for (int64_t j = 0; j <= p; ++j) {
        if (std::find(im_p.I.begin(), im_p.I.end(), j) != im_p.I.end()) continue;
        std::vector<int64_t> row(n);
        for (int64_t g = 0; g < n; ++g) row[g] = pi_cls[g][j];
        constraints.push_back(std::move(row));
    }
    for (size_t fi = 0; fi < fac.factors.size(); ++fi) {
        auto [ell, e] = fac.factors[fi];
        int64_t delta0 = fac.delta / ipow(ell, e);
        const FqField& F = cached_inert_completion(ell, p);
        int64_t w_ord = mod_norm(e, p);
        int64_t w_chi = F.chi_exponent(F.from_int(delta0), p);
        std::vector<int64_t> row(n);
        for (int64_t g = 0; g < n; ++g) {
            auto [o, chi] = off_cls[g][fi];
            row[g] = mod_norm(o * w_chi - chi * w_ord, p);
        }
        constraints.push_back(std::move(row));
    }

    auto kernel = kernel_mod_p(constraints, n, p);

    SelmerReport rep;
    rep.p = p;
    rep.r = r;
    rep.delta_input = delta;
    rep.delta = fac.delta;
    rep.B = B_value(r, fac.delta, p);
    rep.b_sym = b_symbol(rep.B, p);
    rep.dimension = static_cast<int64_t>(kernel.size());
    rep.S = rep.dimension - 1;
    rep.method = "direct";
    for (const auto& v : kernel) {
        std::string desc;
        for (int64_t g = 0; g < n; ++g) {
            if (v[g] == 0) continue;
            if (!desc.empty()) desc += " * ";
            desc += labels[g];
            if (v[g] != 1) desc += "^" + std::to_string(v[g]);
        }
        rep.generators.push_back(desc.empty() ? "1" : desc);
    }
    if (detail) {
        detail->labels = labels;
        detail->constraints = constraints;
        detail->kernel = kernel;
    }
    return rep;
}

SelmerReport selmer_both(int64_t r, int64_t delta, int64_t p, int M) {
    SelmerReport closed = selmer_closed_form(r, delta, p);
    DirectDetail detail;
    SelmerReport direct = selmer_direct(r, delta, p, M, &detail);
    if (closed.dimension != direct.dimension)
        throw ConsistencyError("selmer dimension mismatch: closed " +
                               std::to_string(closed.dimension) + " vs direct " +
                               std::to_string(direct.dimension));
    // The closed-form generators are single S-units; each must satisfy every
    // local condition of the direct engine.  Equal dimension plus membership
    // of the closed basis gives equality of the spans.
    for (const auto& gen : closed.generators) {
        auto it = std::find(detail.labels.begin(), detail.labels.end(), gen);
        if (it == detail.labels.end())
            throw ConsistencyError("closed-form generator " + gen + " not an S-unit label");
        int64_t g = it - detail.labels.begin();
        for (const auto& row : detail.constraints)
            if (mod_norm(row[g], p) != 0)
                throw ConsistencyError("closed-form generator " + gen +
                                       " violates a direct local condition");
    }
    SelmerReport rep = closed;
    rep.method = "both";
    return rep;
}

}  // namespace fermatjac
