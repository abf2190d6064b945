/*
   Copyright 2026 the taftnet authors

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

#include "taftnet/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "taftnet/classifier.hpp"
#include "taftnet/reps.hpp"
#include "taftnet/stringnet.hpp"
#include "taftnet/vectg.hpp"

namespace taftnet::cli {

using nlohmann::json;

namespace {

json pairs_to_json(const std::vector<std::pair<long, long>>& pairs) {
    json arr = json::array();
    for (const auto& [c, d] : pairs) arr.push_back(json::array({c, d}));
    return arr;
}

json envelope(const std::string& command, json parameters, json result,
              const std::string& oracle_status) {
    json env;
    env["command"] = command;
    env["oracle"] = oracle_status;
    env["parameters"] = std::move(parameters);
    env["result"] = std::move(result);
    env["version"] = kVersion;
    return env;
}

struct AlgebraArgs {
    long n = 0;
    bool taft = false;
    std::vector<long> params;

    HopfParams build() const {
        if (taft) return make_taft(n);
        if (params.size() != 4)
            throw CLI::ValidationError("--params", "expected a1,a2,b1,b2");
        return make_gen_taft(n, params[0], params[1], params[2], params[3]);
    }
    json to_json() const {
        json p;
        p["N"] = n;
        if (taft) {
            p["kind"] = "taft";
        } else {
            p["kind"] = "gen_taft";
            p["params"] = params;
        }
        return p;
    }
};

void add_algebra_options(CLI::App* cmd, AlgebraArgs* a, bool taft_allowed = true) {
    cmd->add_option("--n", a->n, "level N")->required();
    auto* params =
        cmd->add_option("--params", a->params, "a1,a2,b1,b2 (comma separated)")->delimiter(',');
    if (taft_allowed) {
        auto* taft = cmd->add_flag("--taft", a->taft, "Taft algebra at level N");
        params->excludes(taft);
        taft->excludes(params);
    }
}

int cmd_classify(const AlgebraArgs& a, bool oracle, std::ostream& out) {
    const HopfParams H = a.build();
    const DistinguishedData dd = distinguished_data(H);
    const StructureSummary s = structure_summary(H);

    std::vector<std::pair<long, long>> quasi = quasi_pivotal_pairs(H);
    std::vector<std::pair<long, long>> twisted, pivotal, sphere;
    for (const auto& [c, d] : quasi) {
        const PivotalDatum p = classify_pair(H, c, d);
        if (p.twisted_pivotal) twisted.emplace_back(c, d);
        if (p.plain_pivotal) pivotal.emplace_back(c, d);
        if (p.sphere_nonzero) sphere.emplace_back(c, d);
    }

    json result;
    result["algebra"] = H.name();
    result["dim"] = H.dim;
    result["n"] = H.n;
    result["m"] = H.m;
    result["D_index"] = dd.D_index;
    result["grouplike_index"] = dd.grouplike_index;
    result["unimodular"] = dd.unimodular;
    result["has_quasi"] = s.has_quasi;
    result["has_pivotal"] = s.has_pivotal;
    result["has_twisted_pivotal"] = s.has_twisted_pivotal;
    result["has_spherical"] = s.has_spherical;
    result["has_twisted_spherical"] = s.has_twisted_spherical;
    result["quasi_pivotal_pairs"] = pairs_to_json(quasi);
    result["twisted_pivotal_pairs"] = pairs_to_json(twisted);
    result["pivotal_pairs"] = pairs_to_json(pivotal);
    result["sphere_nonzero_pairs"] = pairs_to_json(sphere);

    std::string status = "skipped";
    if (oracle) {
        // Cross-check the closed-form distinguished data against the two
        // independent integral computations.
        const long gl = distinguished_grouplike_oracle(H);
        const long e = left_integral_character_oracle(H);
        const bool ok =
            gl == dd.grouplike_index && (e + dd.D_index) % H.N == 0;
        result["oracle_grouplike_index"] = gl;
        result["oracle_integral_character"] = e;
        status = ok ? "checked-ok" : "checked-mismatch";
    }
    out << envelope("classify", a.to_json(), result, status).dump(2) << "\n";
    return status == "checked-mismatch" ? kExitOracleMismatch : kExitOk;
}

int cmd_census(long N, int workers, const std::string& format, std::ostream& out) {
    const CensusReport r = census(N, workers);
    if (format == "csv") {
        out << "N,total,pivotal,twisted_pivotal,unimodular,spherical,twisted_spherical,"
               "nonunimod_twisted_spherical\n";
        out << r.N << "," << r.total_valid << "," << r.with_pivotal << ","
            << r.with_twisted_pivotal << "," << r.unimodular << "," << r.with_spherical << ","
            << r.with_twisted_spherical << "," << r.nonunimodular_with_twisted_spherical << "\n";
        return kExitOk;
    }
    json result;
    result["N"] = r.N;
    result["total"] = r.total_valid;
    result["pivotal"] = r.with_pivotal;
    result["twisted_pivotal"] = r.with_twisted_pivotal;
    result["unimodular"] = r.unimodular;
    result["spherical"] = r.with_spherical;
    result["twisted_spherical"] = r.with_twisted_spherical;
    result["nonunimod_twisted_spherical"] = r.nonunimodular_with_twisted_spherical;
    // The worker count is deliberately not echoed: reports are identical for
    // any parallelism.
    json params;
    params["N"] = N;
    out << envelope("census", params, result, "skipped").dump(2) << "\n";
    return kExitOk;
}

int cmd_sphere(const AlgebraArgs& a, long c, long d, bool oracle, std::ostream& out) {
    const HopfParams H = a.build();
    const SphereReport rep = make_sphere_report(H, c, d, oracle);
    json params = a.to_json();
    params["c"] = rep.c;
    params["d"] = rep.d;
    json result;
    result["algebra"] = H.name();
    result["dim_punctured"] = rep.dim_punctured;
    result["dim_sphere"] = rep.dim_sphere;
    result["trace_dims"] = json::array({rep.trace_dims.first, rep.trace_dims.second});
    std::string status = "skipped";
    if (rep.oracle_checked) {
        result["oracle_dim_punctured"] = rep.oracle_dim_punctured;
        status = rep.oracle_matches ? "checked-ok" : "checked-mismatch";
    }
    out << envelope("sphere", params, result, status).dump(2) << "\n";
    return status == "checked-mismatch" ? kExitOracleMismatch : kExitOk;
}

json verify_one(const HopfParams& H, long* mismatches) {
    const auto congruence = quasi_pivotal_pairs(H);
    const auto oracle = oracle_accepted_pairs(H);
    const std::set<std::pair<long, long>> cset(congruence.begin(), congruence.end());
    const bool match = (cset == oracle);
    if (!match) ++*mismatches;
    json j;
    j["algebra"] = H.name();
    j["congruence_pairs"] = pairs_to_json(congruence);
    j["oracle_pairs"] = pairs_to_json({oracle.begin(), oracle.end()});
    j["match"] = match;
    return j;
}

int cmd_verify(const AlgebraArgs& a, bool exhaustive, std::ostream& out) {
    json cases = json::array();
    long mismatches = 0;
    if (exhaustive) {
        for (const auto& t : valid_gen_taft_tuples(a.n))
            cases.push_back(verify_one(make_gen_taft(a.n, t[0], t[1], t[2], t[3]), &mismatches));
        if (a.taft) cases.push_back(verify_one(make_taft(a.n), &mismatches));
    } else {
        cases.push_back(verify_one(a.build(), &mismatches));
    }
    json result;
    result["cases"] = cases;
    result["mismatches"] = mismatches;
    json params = a.to_json();
    params["exhaustive"] = exhaustive;
    const std::string status = mismatches == 0 ? "checked-ok" : "checked-mismatch";
    out << envelope("verify", params, result, status).dump(2) << "\n";
    return mismatches == 0 ? kExitOk : kExitOracleMismatch;
}

int cmd_lattice(long n_max, std::ostream& out) {
    json minima;
    for (Implication which :
         {Implication::TwistedPivotalWithoutPivotal, Implication::TwistedSphericalWithoutSpherical,
          Implication::QuasiWithoutTwistedPivotal, Implication::ValidWithoutQuasi,
          Implication::UnimodularWithoutSpherical}) {
        auto n = minimal_counterexample(which, n_max);
        if (n)
            minima[implication_name(which)] = *n;
        else
            minima[implication_name(which)] = nullptr;
    }
    json params;
    params["max"] = n_max;
    json result;
    result["minima"] = minima;
    out << envelope("lattice", params, result, "skipped").dump(2) << "\n";
    return kExitOk;
}

int cmd_vectg(const std::string& path, std::ostream& out) {
    const FiniteGroup G = load_cayley_file(path);
    const auto pairs = vectg_classify(G);
    long trivial = 0, punctured = 0, sphere = 0;
    json jpairs = json::array();
    for (const auto& p : pairs) {
        trivial += p.trivial_twist;
        punctured += p.punctured_nonzero;
        sphere += p.sphere_nonzero;
        json jp;
        jp["z"] = p.z;
        jp["chi_exponents"] = p.chi.exponents;
        jp["chi_modulus"] = p.chi.modulus;
        jp["trivial_twist"] = p.trivial_twist;
        jp["punctured_nonzero"] = p.punctured_nonzero;
        jp["sphere_nonzero"] = p.sphere_nonzero;
        jpairs.push_back(std::move(jp));
    }
    json result;
    result["order"] = G.order;
    result["center_size"] = static_cast<long>(group_center(G).size());
    result["character_count"] = static_cast<long>(group_characters(G).size());
    result["pair_count"] = static_cast<long>(pairs.size());
    result["trivial_twist_count"] = trivial;
    result["punctured_nonzero_count"] = punctured;
    result["sphere_nonzero_count"] = sphere;
    result["pairs"] = jpairs;
    json params;
    params["cayley"] = path;
    out << envelope("vectg", params, result, "skipped").dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact classification of twisted pivotal structures on (generalized) Taft "
                 "algebras and their string-net sphere dimensions"};
    app.require_subcommand(1);

    AlgebraArgs cls_args;
    bool cls_oracle = false;
    auto* cls = app.add_subcommand("classify", "classify all (c,d) pairs for one algebra");
    add_algebra_options(cls, &cls_args);
    cls->add_flag("--oracle", cls_oracle, "cross-check distinguished data via exact integrals");

    long census_n = 0;
    int census_workers = 0;
    std::string census_format = "json";
    auto* cen = app.add_subcommand("census", "aggregate counts over all parameter tuples");
    cen->add_option("--n", census_n, "level N")->required();
    cen->add_option("--workers", census_workers, "worker threads (default: hardware)");
    cen->add_option("--format", census_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    AlgebraArgs sph_args;
    long sph_c = 0, sph_d = 0;
    bool sph_oracle = false;
    auto* sph = app.add_subcommand("sphere", "twisted sphere dimensions for one pair (c,d)");
    add_algebra_options(sph, &sph_args);
    sph->add_option("--c", sph_c, "alpha = T_c")->required();
    sph->add_option("--d", sph_d, "pivot g^d")->required();
    sph->add_flag("--oracle", sph_oracle, "cross-check via the coend Hom-space computation");

    AlgebraArgs ver_args;
    bool ver_exhaustive = false;
    auto* ver = app.add_subcommand(
        "verify", "compare the congruence classifier with the matrix intertwiner oracle");
    add_algebra_options(ver, &ver_args);
    ver->add_flag("--exhaustive", ver_exhaustive, "all valid tuples at level N");

    long lat_max = 0;
    auto* lat = app.add_subcommand("lattice", "minimal counterexample levels for the "
                                              "structure implications");
    lat->add_option("--max", lat_max, "largest level to search")->required();

    std::string vg_path;
    auto* vg = app.add_subcommand("vectg", "invertible center objects of Vect_G");
    vg->add_option("--cayley", vg_path, "Cayley table file")->required();

    std::vector<const char*> argv;
    argv.push_back("taftnet");
    for (const auto& s : args) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(cls)) return cmd_classify(cls_args, cls_oracle, out);
        if (app.got_subcommand(cen)) {
            if (census_workers <= 0) {
                if (const char* env = std::getenv("TOOLKIT_WORKERS"))
                    census_workers = std::atoi(env);
            }
            return cmd_census(census_n, census_workers, census_format, out);
        }
        if (app.got_subcommand(sph)) return cmd_sphere(sph_args, sph_c, sph_d, sph_oracle, out);
        if (app.got_subcommand(ver)) return cmd_verify(ver_args, ver_exhaustive, out);
        if (app.got_subcommand(lat)) return cmd_lattice(lat_max, out);
        if (app.got_subcommand(vg)) return cmd_vectg(vg_path, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "no subcommand given\n";
    return kExitUsage;
}

}  // namespace taftnet::cli
