// fanpart: certify fan-partition dimension bounds and search for measure
// equipartitions with prescribed vanishing Fourier transforms.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "fanpart/certifier.hpp"
#include "fanpart/io.hpp"
#include "fanpart/solver.hpp"

using namespace fanpart;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitUncertified = 3;

std::string now_iso8601() {
    // overridable so reruns can be made byte-identical
    if (const char* fixed = std::getenv("FANPART_TIMESTAMP")) return fixed;
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::ostringstream os;
    os << std::put_time(std::gmtime(&t), "%FT%TZ");
    return os.str();
}

RunManifest make_manifest(const std::string& command, const std::vector<std::string>& args,
                          const std::vector<std::string>& inputs, std::uint64_t seed) {
    RunManifest m;
    m.command = command;
    m.arguments = args;
    m.seed = seed;
    m.timestamp = now_iso8601();
    for (const std::string& path : inputs) m.input_digests[path] = digest_file(path);
    return m;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

struct SetChoice {
    std::string name;  // equipartition | makeev | prop51 | prop51-literal | custom
    int p = 0;
};

SetChoice parse_set(const std::string& s) {
    SetChoice c;
    auto colon = s.find(':');
    c.name = s.substr(0, colon);
    if (colon != std::string::npos) {
        std::string rest = s.substr(colon + 1);
        if (rest.rfind("p=", 0) != 0) throw CLI::ValidationError("--set", "expected <name>[:p=<prime>]");
        c.p = std::stoi(rest.substr(2));
    }
    return c;
}

AnnihilationSpec build_set(const SetChoice& choice, const std::vector<int>& orders, int m,
                           const std::string& entries_file) {
    if (choice.name == "equipartition") return build_equipartition_set(orders, m);
    if (choice.name == "makeev") {
        if (choice.p < 2) throw CLI::ValidationError("--set", "makeev needs :p=<odd prime>");
        return build_makeev_set(orders, choice.p, m);
    }
    if (choice.name == "prop51") return build_prop51_set(m);
    if (choice.name == "prop51-literal") return build_prop51_set(m, true);
    if (choice.name == "custom") {
        if (entries_file.empty()) throw CLI::ValidationError("--entries", "custom set needs --entries file.json");
        std::ifstream in(entries_file);
        if (!in) throw CLI::ValidationError("--entries", "cannot open " + entries_file);
        json j = json::parse(in);
        std::vector<std::pair<int, Tuple>> entries;
        for (const json& e : j.at("entries")) entries.emplace_back(e.at(0).get<int>(), e.at(1).get<Tuple>());
        return build_custom_set(orders, std::move(entries), m);
    }
    throw CLI::ValidationError("--set", "unknown set name: " + choice.name);
}

json table_payload(const std::vector<BoundReport>& reports) {
    json arr = json::array();
    for (const BoundReport& r : reports) arr.push_back(bound_report_to_json(r));
    return json{{"table", std::move(arr)}};
}

void print_table(const std::vector<BoundReport>& reports, std::ostream& os) {
    os << std::left << std::setw(44) << "name" << std::setw(12) << "dimension"
       << "note\n";
    for (const BoundReport& r : reports) {
        os << std::setw(44) << r.name
           << std::setw(12) << (r.certified_dimension ? std::to_string(*r.certified_dimension) : "none")
           << r.anchor << "\n";
    }
}

struct ProblemFile {
    SolveProblem problem;
    std::string claim;  // equipartition | makeev | pair-of-nine-fans
    int p = 0;
    std::vector<std::string> cloud_paths;
};

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open problem file: " + path);
    json j = json::parse(in);

    ProblemFile pf;
    std::vector<int> orders = j.at("orders").get<std::vector<int>>();
    int m = j.value("m", 1);
    SetChoice choice{j.at("set").get<std::string>(), j.value("p", 0)};
    if (choice.name == "custom") {
        std::vector<std::pair<int, Tuple>> entries;
        for (const json& e : j.at("entries")) entries.emplace_back(e.at(0).get<int>(), e.at(1).get<Tuple>());
        pf.problem.spec = build_custom_set(orders, std::move(entries), m);
    } else {
        pf.problem.spec = build_set(choice, orders, m, "");
    }
    pf.p = choice.p;

    pf.problem.measures.d = j.at("d").get<int>();
    for (const json& c : j.at("clouds")) {
        std::string cpath = c.get<std::string>();
        pf.cloud_paths.push_back(cpath);
        PointCloud cloud = load_cloud_csv(cpath);
        if (cloud.d != pf.problem.measures.d) throw std::runtime_error("cloud dimension mismatch: " + cpath);
        pf.problem.measures.measures.push_back(std::move(cloud));
    }

    pf.problem.budget.tolerance = j.value("tol", 1e-3);
    pf.problem.budget.max_evaluations = j.value("budget", 40000);
    pf.problem.budget.restarts = j.value("restarts", 8);
    pf.problem.budget.sigma0 = j.value("sigma0", 0.35);

    if (j.contains("claim"))
        pf.claim = j.at("claim").get<std::string>();
    else if (choice.name == "equipartition")
        pf.claim = "equipartition";
    else if (choice.name == "makeev")
        pf.claim = "makeev";
    else if (choice.name.rfind("prop51", 0) == 0)
        pf.claim = "pair-of-nine-fans";
    else
        throw std::runtime_error("custom problem needs an explicit \"claim\"");
    return pf;
}

VerifyReport run_claim(const ProblemFile& pf, const RegionMassTable& table, double tol) {
    if (pf.claim == "equipartition") return verify(table, ClaimFamily::FullEquipartition, tol);
    if (pf.claim == "makeev") return verify(table, ClaimFamily::MakeevModuloH, tol, pf.p);
    if (pf.claim == "pair-of-nine-fans") return verify(table, ClaimFamily::PairOfNineFans, tol);
    if (pf.claim == "q8-mod-z4") return verify(table, ClaimFamily::Q8ModuloZ4, tol);
    throw std::runtime_error("unknown claim family: " + pf.claim);
}

json verify_report_to_json(const VerifyReport& rep) {
    return json{{"pass", rep.pass}, {"max_residual", rep.max_residual}, {"lines", rep.lines}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fan-partition certification and equipartition search"};
    app.require_subcommand(1);
    std::vector<std::string> raw_args(argv + 1, argv + argc);

    // certify ----------------------------------------------------------------
    auto* certify_cmd = app.add_subcommand("certify", "certify a dimension bound for an annihilation set");
    std::string orders_str, set_str = "equipartition", entries_file, certify_out;
    int m = 1;
    certify_cmd->add_option("--orders", orders_str, "comma-separated cyclic orders, e.g. 9,9")->required();
    certify_cmd->add_option("--m", m, "number of measures");
    certify_cmd->add_option("--set", set_str, "equipartition | makeev:p=<p> | prop51 | prop51-literal | custom");
    certify_cmd->add_option("--entries", entries_file, "custom entries JSON file");
    certify_cmd->add_option("--out", certify_out, "output BoundReport JSON path");

    // table ------------------------------------------------------------------
    auto* table_cmd = app.add_subcommand("table", "emit the full table of certified bounds");
    std::string table_out, golden_file, filter;
    table_cmd->add_option("--out", table_out, "output JSON path");
    table_cmd->add_option("--golden", golden_file, "golden file to diff against");
    table_cmd->add_option("--filter", filter, "keep only rows whose name contains this substring");

    // solve ------------------------------------------------------------------
    auto* solve_cmd = app.add_subcommand("solve", "search for a fan configuration with vanishing transforms");
    std::string problem_file, solve_out;
    std::uint64_t seed = 0;
    bool force = false;
    double tol_override = -1.0;
    int budget_override = -1;
    solve_cmd->add_option("--problem", problem_file, "problem JSON")->required();
    solve_cmd->add_option("--out", solve_out, "output result JSON")->required();
    solve_cmd->add_option("--seed", seed, "RNG seed (required for reproducibility)")->required();
    solve_cmd->add_option("--tol", tol_override, "override relative residual tolerance");
    solve_cmd->add_option("--budget", budget_override, "override evaluation budget");
    solve_cmd->add_flag("--force", force, "search even when no dimension is certified");

    // verify -----------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "re-verify the claims of a solve result");
    std::string result_file, verify_problem_file;
    verify_cmd->add_option("--result", result_file, "result JSON from solve")->required();
    verify_cmd->add_option("--problem", verify_problem_file, "problem JSON")->required();

    // gen --------------------------------------------------------------------
    auto* gen_cmd = app.add_subcommand("gen", "generate a deterministic point cloud");
    std::string dist = "uniform-ball", gen_out;
    int gen_d = 1, gen_n = 30, gen_q = 3, gen_components = 3;
    std::uint64_t gen_seed = 0;
    gen_cmd->add_option("--dist", dist, "uniform-ball | gaussian-mixture | moment-curve-clusters")->required();
    gen_cmd->add_option("--d", gen_d, "complex dimension");
    gen_cmd->add_option("--n", gen_n, "point count (per cluster for moment-curve-clusters)");
    gen_cmd->add_option("--q", gen_q, "fan order (moment-curve-clusters)");
    gen_cmd->add_option("--components", gen_components, "mixture components");
    gen_cmd->add_option("--seed", gen_seed, "RNG seed")->required();
    gen_cmd->add_option("--out", gen_out, "output CSV path")->required();

    // transform --------------------------------------------------------------
    auto* transform_cmd = app.add_subcommand("transform", "Fourier transform of a region-mass function file");
    std::string transform_in, transform_out;
    transform_cmd->add_option("--in", transform_in, "GroupFunction JSON")->required();
    transform_cmd->add_option("--out", transform_out, "output coefficients JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*certify_cmd) {
            std::vector<int> orders;
            for (std::size_t pos = 0; pos < orders_str.size();) {
                std::size_t next = orders_str.find(',', pos);
                if (next == std::string::npos) next = orders_str.size();
                orders.push_back(std::stoi(orders_str.substr(pos, next - pos)));
                pos = next + 1;
            }
            AnnihilationSpec spec = build_set(parse_set(set_str), orders, m, entries_file);
            BoundReport report = certify(spec, set_str);

            json out = bound_report_to_json(report);
            std::vector<std::string> inputs;
            if (!entries_file.empty()) inputs.push_back(entries_file);
            out["manifest"] = make_manifest("certify", raw_args, inputs, 0).to_json();
            if (!certify_out.empty()) write_text(certify_out, out.dump(2) + "\n");

            std::cout << "set: " << set_str << "  orders:";
            for (int q : orders) std::cout << " " << q;
            std::cout << "  m=" << m << "\n";
            std::cout << "polynomial terms: " << report.polynomial.terms().size() << "\n";
            std::cout << "certified dimension: "
                      << (report.certified_dimension ? std::to_string(*report.certified_dimension) : "none") << "\n";
            return report.certified_dimension ? 0 : 1;
        }

        if (*table_cmd) {
            std::vector<BoundReport> reports = paper_table();
            if (!filter.empty()) {
                std::erase_if(reports, [&](const BoundReport& r) { return r.name.find(filter) == std::string::npos; });
            }
            json payload = table_payload(reports);
            print_table(reports, std::cout);
            if (!table_out.empty()) {
                json out = payload;
                out["manifest"] = make_manifest("table", raw_args, {}, 0).to_json();
                write_text(table_out, out.dump(2) + "\n");
            }
            if (!golden_file.empty()) {
                std::ifstream in(golden_file);
                if (!in) throw std::runtime_error("cannot open golden file: " + golden_file);
                json golden = json::parse(in);
                golden.erase("manifest");
                if (golden != payload) {
                    std::cout << "--- golden\n+++ computed\n";
                    std::cout << "-" << golden.dump() << "\n+" << payload.dump() << "\n";
                    return 1;
                }
                std::cout << "table matches golden file\n";
            }
            return 0;
        }

        if (*solve_cmd) {
            ProblemFile pf = load_problem(problem_file);
            if (tol_override >= 0) pf.problem.budget.tolerance = tol_override;
            if (budget_override > 0) pf.problem.budget.max_evaluations = budget_override;
            pf.problem.budget.seed = seed;

            BoundReport report = certify(pf.problem.spec);
            bool certified = report.certified_dimension && *report.certified_dimension <= pf.problem.measures.d;
            if (!certified && !force) {
                std::cerr << "problem is not certified for d=" << pf.problem.measures.d
                          << " (certified dimension: "
                          << (report.certified_dimension ? std::to_string(*report.certified_dimension) : "none")
                          << "); pass --force to search anyway\n";
                return kExitUncertified;
            }

            SolveResult result = solve(pf.problem);
            VerifyReport rep = run_claim(pf, result.table, pf.problem.budget.tolerance);

            json out;
            out["manifest"] =
                make_manifest("solve", raw_args, [&] {
                    std::vector<std::string> ins{problem_file};
                    for (const auto& c : pf.cloud_paths) ins.push_back(c);
                    return ins;
                }(), seed).to_json();
            out["config"] = fan_config_to_json(result.config);
            out["residual"] = result.residual;
            out["converged"] = result.converged;
            out["evaluations"] = result.evaluations;
            json masses = json::array();
            for (const auto& per_measure : result.table.masses) {
                json row = json::array();
                for (const complexd& v : per_measure) row.push_back(complex_to_json(v));
                masses.push_back(std::move(row));
            }
            out["region_masses"] = std::move(masses);
            out["verification"] = verify_report_to_json(rep);
            write_text(solve_out, out.dump(2) + "\n");

            std::cout << "converged: " << (result.converged ? "true" : "false")
                      << "  residual: " << result.residual << "  evaluations: " << result.evaluations << "\n";
            for (const std::string& line : rep.lines) std::cout << "  " << line << "\n";
            return 0;
        }

        if (*verify_cmd) {
            ProblemFile pf = load_problem(verify_problem_file);
            std::ifstream in(result_file);
            if (!in) throw std::runtime_error("cannot open result file: " + result_file);
            json rj = json::parse(in);
            FanConfig cfg = fan_config_from_json(rj.at("config"));
            RegionMassTable table = region_masses(pf.problem.measures, cfg);
            VerifyReport rep = run_claim(pf, table, pf.problem.budget.tolerance);
            for (const std::string& line : rep.lines) std::cout << line << "\n";
            std::cout << (rep.pass ? "PASS" : "FAIL") << "\n";
            return rep.pass ? 0 : 1;
        }

        if (*gen_cmd) {
            PointCloud cloud;
            if (dist == "uniform-ball")
                cloud = gen_uniform_ball(gen_d, gen_n, gen_seed);
            else if (dist == "gaussian-mixture")
                cloud = gen_gaussian_mixture(gen_d, gen_n, gen_components, gen_seed);
            else if (dist == "moment-curve-clusters")
                cloud = gen_moment_curve_clusters(gen_d, gen_q, gen_n, gen_seed);
            else
                throw CLI::ValidationError("--dist", "unknown distribution: " + dist);
            std::string manifest = make_manifest("gen", raw_args, {}, gen_seed).to_json().dump();
            write_text(gen_out, "# manifest: " + manifest + "\n" + cloud_to_csv(cloud));
            std::cout << "wrote " << cloud.points.size() << " points to " << gen_out << "\n";
            return 0;
        }

        if (*transform_cmd) {
            std::ifstream in(transform_in);
            if (!in) throw std::runtime_error("cannot open " + transform_in);
            GroupFunction f = group_function_from_json(json::parse(in));
            json out;
            if (f.group.is_q8) {
                Q8Transform t = q8_fourier_transform(f);
                json ce = json::array();
                for (const complexd& v : t.c_eps) ce.push_back(complex_to_json(v));
                json cs = json::array();
                for (const complexd& v : t.c_sigma) cs.push_back(complex_to_json(v));
                out["c_eps"] = std::move(ce);
                out["c_sigma"] = std::move(cs);
            } else {
                FourierCoefficients c = fourier_transform(f);
                json arr = json::array();
                for (const complexd& v : c.c) arr.push_back(complex_to_json(v));
                out["coefficients"] = std::move(arr);
            }
            out["manifest"] = make_manifest("transform", raw_args, {transform_in}, 0).to_json();
            std::string text = out.dump(2) + "\n";
            if (!transform_out.empty())
                write_text(transform_out, text);
            else
                std::cout << text;
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
