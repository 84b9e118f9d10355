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
#include "fermatjac/parity.hpp"
#include "fermatjac/selmer.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using namespace fermatjac;
using nlohmann::json;

namespace {

// exit codes: 0 ok, 1 hypothesis violation, 2 usage error, 3 consistency failure
constexpr int kOk = 0, kHypothesis = 1, kUsage = 2, kConsistency = 3;

json root_number_json(const RootNumberReport& r) {
    json j{{"p", r.p},           {"r", r.r},
           {"s", r.s},           {"t", r.t},
           {"delta_input", r.delta_input}, {"delta", r.delta},
           {"eps_inf", r.eps_inf}, {"eps_p", r.eps_p},
           {"u_X", r.u_X},       {"global", r.global}};
    j["eps_ell"] = json::array();
    for (auto& [ell, e] : r.eps_ell) j["eps_ell"].push_back({{"ell", ell}, {"eps", e}});
    if (r.d) j["d"] = *r.d;
    return j;
}

json selmer_json(const SelmerReport& r) {
    return json{{"p", r.p},
                {"r", r.r},
                {"delta_input", r.delta_input},
                {"delta", r.delta},
                {"B", r.B},
                {"b_symbol", r.b_sym},
                {"generators", r.generators},
                {"dimension", r.dimension},
                {"S", r.S},
                {"method", r.method}};
}

void emit(const json& j, const std::string& format) {
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        for (auto& [key, value] : j.items()) std::cout << key << ": " << value.dump() << "\n";
}

std::string density_csv(const DensityReport& rep) {
    std::string out = "delta,ord_p,delta0_mod_p2,tau,alpha,eps\n";
    for (auto& row : rep.rows)
        out += std::to_string(row.delta) + "," + std::to_string(row.ord_p) + "," +
               std::to_string(row.delta0_mod_p2) + "," + std::to_string(row.tau) + "," +
               std::to_string(row.alpha) + "," + std::to_string(row.eps) + "\n";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"root numbers, Kummer images and Selmer groups of Jacobians of "
                 "y^p = x^r (delta - x)^s"};
    app.require_subcommand(1);

    std::string format = "text";
    int padic_prec = 4;
    uint64_t seed = 0;
    int threads = 0;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--padic-prec", padic_prec, "p-adic working precision M")->check(CLI::Range(4, 16));
    app.add_option("--seed", seed, "seed for randomized property checks");
    app.add_option("--threads", threads, "worker threads (0 = hardware)");

    // root-number
    auto* rn = app.add_subcommand("root-number", "global and local root numbers");
    int64_t p = 0, r = 1, s = 1, t = 0, delta = 1, ell = 0, f = 0, x_max = 1000, delta_max = 100;
    bool json_flag = false;
    rn->add_option("--p", p, "odd prime exponent")->required();
    rn->add_option("--r", r)->required();
    rn->add_option("--s", s)->required();
    rn->add_option("--t", t)->required();
    rn->add_option("--delta", delta)->required();
    rn->add_flag("--json", json_flag, "shorthand for --format json");

    // selmer
    auto* se = app.add_subcommand("selmer", "Selmer group dimension and generators");
    std::string method = "closed";
    se->add_option("--p", p)->required();
    se->add_option("--r", r)->required();
    se->add_option("--delta", delta)->required();
    se->add_option("--method", method)->check(CLI::IsMember({"closed", "direct", "both"}));

    // parity-scan
    auto* ps = app.add_subcommand("parity-scan", "verify eps = (-1)^S over a range");
    int64_t min_cases = 0;
    ps->add_option("--p", p)->required();
    ps->add_option("--delta-max", delta_max)->required();
    ps->add_option("--min-cases", min_cases, "fail unless at least this many cases ran");

    // density
    auto* de = app.add_subcommand("density", "distribution of the global sign");
    std::string out_file;
    bool per_delta = false;
    de->add_option("--p", p)->required();
    de->add_option("--r", r)->required();
    de->add_option("--s", s)->required();
    de->add_option("--t", t)->required();
    de->add_option("--x-max", x_max)->required();
    de->add_option("--out", out_file, "write CSV rows to this file");
    de->add_flag("--per-delta", per_delta, "include one row per delta");

    // jacobi
    auto* ja = app.add_subcommand("jacobi", "Jacobi sum over the residue field at ell");
    ja->add_option("--p", p)->required();
    ja->add_option("--ell", ell)->required();
    ja->add_option("--r", r);
    ja->add_option("--s", s);

    // count-points
    auto* cp = app.add_subcommand("count-points", "affine points over F_{ell^f}");
    cp->add_option("--p", p)->required();
    cp->add_option("--ell", ell)->required();
    cp->add_option("--f", f)->required();
    cp->add_option("--r", r)->required();
    cp->add_option("--s", s)->required();
    cp->add_option("--delta", delta)->required();

    // regular
    auto* re = app.add_subcommand("regular", "regularity and irregularity index");
    re->add_option("--p", p)->required();

    // local-image
    auto* li = app.add_subcommand("local-image", "Kummer images at the ramified place and off p");
    li->add_option("--p", p)->required();
    li->add_option("--r", r)->required();
    li->add_option("--delta", delta)->required();

    // allow the global flags to appear after the subcommand name
    for (auto* sc : app.get_subcommands(nullptr)) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (rn->parsed()) {
            RootNumberReport rep = epsilon_global(Triple(r, s, t, p), delta);
            emit(root_number_json(rep), json_flag ? "json" : format);
        } else if (se->parsed()) {
            SelmerReport rep = method == "closed"   ? selmer_closed_form(r, delta, p)
                               : method == "direct" ? selmer_direct(r, delta, p, padic_prec)
                                                    : selmer_both(r, delta, p, padic_prec);
            emit(selmer_json(rep), format);
        } else if (ps->parsed()) {
            ParityScanReport rep = parity_scan(p, delta_max, {}, false, threads);
            json j{{"p", rep.p},
                   {"delta_max", rep.delta_max},
                   {"n_enumerated", rep.n_enumerated},
                   {"n_skipped", rep.n_skipped},
                   {"n_checked", rep.n_checked},
                   {"n_holds", rep.n_holds}};
            j["failures"] = json::array();
            for (auto& fl : rep.failures)
                j["failures"].push_back(
                    {{"r", fl.r}, {"delta", fl.delta}, {"eps", fl.eps}, {"S", fl.S}});
            emit(j, format);
            if (!rep.failures.empty()) return kConsistency;
            if (rep.n_checked < min_cases) {
                std::cerr << "only " << rep.n_checked << " cases ran (need " << min_cases
                          << ")\n";
                return kHypothesis;
            }
        } else if (de->parsed()) {
            bool want_rows = per_delta || format == "csv" || !out_file.empty();
            DensityReport rep =
                density_experiment(p, Triple(r, s, t, p), x_max, want_rows, threads);
            if (!out_file.empty()) {
                std::ofstream os(out_file);
                if (!os) throw std::invalid_argument("cannot open " + out_file);
                os << density_csv(rep);
            }
            if (format == "csv") {
                std::cout << density_csv(rep);
            } else {
                json j{{"p", rep.p},
                       {"x_max", rep.x_max},
                       {"n_total", rep.n_total},
                       {"n_plus", rep.n_plus},
                       {"fraction", rep.fraction},
                       {"alpha_constant_per_class", rep.alpha_constant_per_class}};
                j["classes"] = json::array();
                for (auto& c : rep.classes)
                    j["classes"].push_back({{"ord_p", c.ord_p},
                                            {"delta0_mod_p2", c.delta0_mod_p2},
                                            {"alpha", c.alpha},
                                            {"count", c.count}});
                if (per_delta) {
                    j["rows"] = json::array();
                    for (auto& row : rep.rows)
                        j["rows"].push_back({{"delta", row.delta},
                                             {"ord_p", row.ord_p},
                                             {"delta0_mod_p2", row.delta0_mod_p2},
                                             {"tau", row.tau},
                                             {"alpha", row.alpha},
                                             {"eps", row.eps}});
                }
                emit(j, format);
            }
            if (!rep.alpha_constant_per_class) return kConsistency;
        } else if (ja->parsed()) {
            Triple triple(r, s, p - r - s, p);
            SplittingData sd = splitting_data(ell, p);
            FqField F = FqField::build(ell, sd.f);
            CycInt jsum = jacobi_sum(F, triple);
            json j{{"p", p}, {"ell", ell}, {"f", sd.f}, {"g", sd.g}, {"q", F.q().str()}};
            j["coefficients"] = json::array();
            for (auto& c : jsum.c) j["coefficients"].push_back(c.str());
            j["congruence"] = jacobi_congruence(jsum);
            if (cyc_is_rational(jsum)) j["rational_value"] = cyc_rational_value(jsum).str();
            emit(j, format);
        } else if (cp->parsed()) {
            Triple triple(r, s, p - r - s, p);
            FqField F = FqField::build(ell, f);
            int64_t affine = count_affine_points(F, triple, delta);
            json j{{"p", p},     {"ell", ell},        {"f", f},
                   {"q", F.q().str()}, {"affine", affine}, {"projective", affine + 1}};
            emit(j, format);
        } else if (re->parsed()) {
            Regularity reg = irregularity_index(p);
            emit(json{{"p", p}, {"regular", reg.regular}, {"irregularity_index", reg.i_p}},
                 format);
        } else if (li->parsed()) {
            LocalImage at_p = local_image_at_p(r, delta, p);
            json j{{"p", p},
                   {"r", r},
                   {"delta", delta},
                   {"at_p", {{"generator_indices", at_p.I}, {"dimension", at_p.dimension}}}};
            j["off_p"] = json::array();
            for (auto& [q, e] : reduce_delta(delta, p).factors) {
                if (q == p) continue;
                LocalImage off = local_image_off_p(q, delta, p);
                j["off_p"].push_back(
                    {{"ell", q},
                     {"dimension", off.dimension},
                     {"kind",
                      off.kind == LocalImage::OffKind::delta_span ? "delta_span"
                                                                  : "unramified"}});
            }
            emit(j, format);
        }
    } catch (const ConsistencyError& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return kConsistency;
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return kHypothesis;
    } catch (const PrecisionError& e) {
        std::cerr << "precision exhausted: " << e.what() << " (raise --padic-prec)\n";
        return kHypothesis;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kHypothesis;
    }
    return kOk;
}
