// Command-line front end: solve instances, build reduction gadgets, generate
// random inputs, and run timing sweeps over instance/solver grids.
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "happy/errors.hpp"
#include "happy/io.hpp"
#include "happy/mhe.hpp"
#include "happy/mhv.hpp"
#include "happy/reductions.hpp"

using namespace happy;
using nlohmann::json;

namespace {

struct SolveOptions {
    std::string input;
    std::string algo = "brute";
    std::uint64_t seed = 0;
    std::uint64_t reps = 0;
    unsigned long long budget = kDefaultEnumerationBudget;
    int max_dp_width = kDefaultSubsetDpWidth;
    bool as_json = false;
};

SolveResult run_solver(const Instance &instance, const SolveOptions &opt) {
    if (opt.algo == "brute")
        return instance.kind == Kind::MHV ? mhv_brute_force(instance, opt.budget)
                                          : mhe_brute_force(instance, opt.budget);
    if (opt.algo == "randomized") {
        if (instance.kind != Kind::MHV)
            throw std::invalid_argument("--algo randomized only applies to mhv instances");
        RandomizedConfig cfg;
        cfg.seed = opt.seed;
        cfg.repetitions = opt.reps;
        return mhv_randomized(instance, cfg);
    }
    if (opt.algo == "trivial") {
        if (instance.kind != Kind::MHV)
            throw std::invalid_argument("--algo trivial only applies to mhv instances");
        return best_trivial_extension(instance);
    }
    if (opt.algo == "kernel-dp") {
        if (instance.kind != Kind::MHE)
            throw std::invalid_argument("--algo kernel-dp only applies to mhe instances");
        return mhe_solve(instance, opt.max_dp_width);
    }
    throw std::invalid_argument("unknown algorithm '" + opt.algo + "'");
}

json result_to_json(const Instance &instance, const SolveOptions &opt,
                    const SolveResult &result, double millis) {
    json out{{"schema", 1},
             {"input", opt.input},
             {"algo", opt.algo},
             {"kind", instance.kind == Kind::MHV ? "mhv" : "mhe"},
             {"n", instance.graph.vertex_count()},
             {"colors", instance.precoloring.palette_size()},
             {"k", instance.k},
             {"millis", millis}};
    out["decision"] = result.decision ? json(*result.decision) : json();
    out["optimum"] = result.optimum ? json(*result.optimum) : json();
    if (result.certificate) {
        std::vector<int> colors;
        for (int v = 1; v <= result.certificate->size(); ++v)
            colors.push_back(result.certificate->color_of(v));
        out["certificate"] = colors;
        out["value"] = evaluate(instance, *result.certificate);
    } else {
        out["certificate"] = json();
        out["value"] = json();
    }
    out["stats"] = {{"calls", result.stats.calls},
                    {"seed", result.stats.seed},
                    {"repetitions", result.stats.repetitions}};
    return out;
}

int cmd_solve(const SolveOptions &opt) {
    Instance instance = load_instance(opt.input);
    const auto start = std::chrono::steady_clock::now();
    SolveResult result = run_solver(instance, opt);
    const double millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();

    const bool yes = result.optimum ? *result.optimum >= instance.k : result.is_yes();
    if (opt.as_json) {
        std::cout << result_to_json(instance, opt, result, millis).dump(2) << '\n';
    } else {
        if (result.optimum)
            std::cout << "optimum " << *result.optimum << '\n';
        else if (result.certificate)
            std::cout << "value " << evaluate(instance, *result.certificate) << '\n';
        std::cout << "decision " << (yes ? "yes" : "no") << " (target " << instance.k
                  << ")\n";
        if (result.certificate) {
            std::cout << "coloring";
            for (int v = 1; v <= result.certificate->size(); ++v)
                std::cout << ' ' << result.certificate->color_of(v);
            std::cout << '\n';
        }
    }
    return yes ? 0 : 1;
}

struct ReduceOptions {
    std::string from;
    std::string input;
    std::string output;
    long long target = 1;
    bool verify = false;
};

ReductionOutput build_reduction(const ReduceOptions &opt) {
    if (opt.from == "independent-set") {
        Instance source = load_instance(opt.input);
        if (source.precoloring.uncolored_count() != 0)
            throw std::invalid_argument(
                "independent-set input must be a totally precolored instance");
        Coloring coloring(source.graph.vertex_count(), source.precoloring.palette_size());
        for (int v = 1; v <= source.graph.vertex_count(); ++v)
            coloring.set(v, source.precoloring.color_of(v));
        return reduce_colored_graph_to_mhv_subdivision(source.graph, coloring, source.k);
    }
    SetSystem system = load_set_system(opt.input);
    if (opt.from == "set-packing")
        return reduce_set_packing_to_mhv(system, opt.target);
    if (opt.from == "brds")
        return reduce_brds_to_mhe(system, opt.target);
    if (opt.from == "x3c") {
        if (system.universe_size % 3 != 0)
            throw std::invalid_argument("x3c universe size must be a multiple of 3");
        return reduce_x3c_to_mhe_above_guarantee(system.universe_size / 3, system.sets);
    }
    if (opt.from == "set-partitioning")
        return reduce_set_partitioning_to_mhe(eliminate_size_two_sets(system));
    throw std::invalid_argument("unknown reduction '" + opt.from + "'");
}

void write_mapper_sidecar(const ReductionOutput &out, const std::string &path) {
    json mapper{{"schema", 1},
                {"source", to_string(out.source_kind)},
                {"target", out.instance.k},
                {"guarantee", out.guarantee},
                {"guarantee_color", out.guarantee_color},
                {"element_vertices", out.element_vertices},
                {"set_vertices", out.set_vertices},
                {"guard_vertices", out.guard_vertices},
                {"edge_vertices", out.edge_vertices}};
    std::ofstream file(path);
    if (!file)
        throw std::runtime_error("cannot write " + path);
    file << mapper.dump(2) << '\n';
}

int cmd_reduce(const ReduceOptions &opt) {
    ReductionOutput out = build_reduction(opt);
    {
        std::ofstream file(opt.output);
        if (!file)
            throw std::runtime_error("cannot write " + opt.output);
        file << serialize_instance(out.instance);
    }
    write_mapper_sidecar(out, opt.output + ".mapper.json");
    std::cout << "wrote " << opt.output << " (" << out.instance.graph.vertex_count()
              << " vertices, target " << out.instance.k << ")\n";

    if (opt.verify) {
        try {
            SolveResult r = out.instance.kind == Kind::MHV
                                ? mhv_brute_force(out.instance)
                                : mhe_subset_dp(out.instance);
            if (*r.optimum >= out.instance.k) {
                SourceCertificate cert = map_solution_back(out, *r.certificate);
                std::cout << "verify: yes-instance; source certificate";
                for (int j : cert.chosen_sets)
                    std::cout << " S" << j;
                for (int v : cert.independent_set)
                    std::cout << " v" << v;
                std::cout << '\n';
            } else {
                std::cout << "verify: no-instance (optimum " << *r.optimum << " < target "
                          << out.instance.k << ")\n";
            }
        } catch (const ResourceLimitError &e) {
            std::cerr << "warning: verification skipped, gadget too large (" << e.what()
                      << ")\n";
        }
    }
    return 0;
}

struct GenOptions {
    std::string kind = "mhv";
    int n = 10;
    int colors = 3;
    double edge_prob = 0.3;
    double precolor_frac = 0.3;
    std::uint64_t seed = 0;
    long long k = 0;
    std::string output;
};

int cmd_gen(const GenOptions &opt) {
    Instance base = generate_random(opt.kind == "mhv" ? Kind::MHV : Kind::MHE, opt.n,
                                    opt.colors, opt.edge_prob, opt.precolor_frac, opt.seed);
    Instance inst(base.kind, base.graph, base.precoloring, opt.k);
    const std::string text = serialize_instance(inst);
    if (opt.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(opt.output);
        if (!file)
            throw std::runtime_error("cannot write " + opt.output);
        file << text;
        std::cout << "wrote " << opt.output << '\n';
    }
    return 0;
}

struct BenchOptions {
    std::string suite;
    std::string out;
};

int cmd_bench(const BenchOptions &opt) {
    std::ifstream file(opt.suite);
    if (!file)
        throw std::runtime_error("cannot open " + opt.suite);
    json suite = json::parse(file);
    const std::vector<std::string> instances = suite.at("instances");
    const std::vector<std::string> solvers = suite.at("solvers");
    const std::uint64_t seed = suite.value("seed", 0);

    std::ofstream csv(opt.out);
    if (!csv)
        throw std::runtime_error("cannot write " + opt.out);
    csv << "instance,solver,seed,decision,value,millis\n";

    std::map<std::string, std::pair<double, int>> log_millis; // solver -> (sum, count)
    for (const std::string &path : instances) {
        for (const std::string &solver : solvers) {
            SolveOptions sopt;
            sopt.input = path;
            sopt.algo = solver;
            sopt.seed = seed;
            try {
                Instance instance = load_instance(path);
                const auto start = std::chrono::steady_clock::now();
                SolveResult r = run_solver(instance, sopt);
                const double millis = std::chrono::duration<double, std::milli>(
                                          std::chrono::steady_clock::now() - start)
                                          .count();
                const bool yes = r.optimum ? *r.optimum >= instance.k : r.is_yes();
                csv << path << ',' << solver << ',' << seed << ','
                    << (yes ? "yes" : "no") << ',';
                if (r.optimum)
                    csv << *r.optimum;
                else if (r.certificate)
                    csv << evaluate(instance, *r.certificate);
                csv << ',' << millis << '\n';
                auto &[sum, count] = log_millis[solver];
                sum += std::log(std::max(millis, 1e-6));
                ++count;
            } catch (const std::exception &e) {
                csv << path << ',' << solver << ',' << seed << ",error,," << '\n';
                std::cerr << "error: " << path << " / " << solver << ": " << e.what()
                          << '\n';
            }
        }
    }
    for (const auto &[solver, entry] : log_millis)
        std::cout << solver << ": geometric mean " << std::exp(entry.first / entry.second)
                  << " ms over " << entry.second << " runs\n";
    std::cout << "wrote " << opt.out << '\n';
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"solvers and gadget generators for happy coloring problems"};
    app.require_subcommand(1);

    SolveOptions solve_opt;
    CLI::App *solve = app.add_subcommand("solve", "solve an instance file");
    solve->add_option("--input", solve_opt.input, "instance file")->required();
    solve->add_option("--algo", solve_opt.algo,
                      "brute | randomized | trivial | kernel-dp")
        ->check(CLI::IsMember({"brute", "randomized", "trivial", "kernel-dp"}));
    solve->add_option("--seed", solve_opt.seed, "base RNG seed (randomized)");
    solve->add_option("--reps", solve_opt.reps, "repetition override, 0 = auto");
    solve->add_option("--budget", solve_opt.budget, "enumeration budget (brute)");
    solve->add_option("--max-dp-width", solve_opt.max_dp_width,
                      "uncolored-vertex limit for the subset DP");
    solve->add_flag("--json", solve_opt.as_json, "emit a JSON report");

    ReduceOptions reduce_opt;
    CLI::App *reduce = app.add_subcommand("reduce", "build a hardness gadget instance");
    reduce
        ->add_option("--from", reduce_opt.from,
                     "set-packing | brds | independent-set | x3c | set-partitioning")
        ->required()
        ->check(CLI::IsMember(
            {"set-packing", "brds", "independent-set", "x3c", "set-partitioning"}));
    reduce->add_option("--input", reduce_opt.input, "set system or colored instance file")
        ->required();
    reduce->add_option("--output", reduce_opt.output, "gadget instance file")->required();
    reduce->add_option("--target", reduce_opt.target,
                       "source target k (set-packing, brds)");
    reduce->add_flag("--verify", reduce_opt.verify,
                     "solve the gadget and map the certificate back");

    GenOptions gen_opt;
    CLI::App *gen = app.add_subcommand("gen", "generate a random instance");
    gen->add_option("--kind", gen_opt.kind, "mhv | mhe")
        ->check(CLI::IsMember({"mhv", "mhe"}));
    gen->add_option("--n", gen_opt.n, "vertex count");
    gen->add_option("--colors", gen_opt.colors, "palette size");
    gen->add_option("--edge-prob", gen_opt.edge_prob, "edge probability");
    gen->add_option("--precolor-frac", gen_opt.precolor_frac, "precolored fraction");
    gen->add_option("--seed", gen_opt.seed, "RNG seed");
    gen->add_option("--k", gen_opt.k, "target written into the header");
    gen->add_option("--output", gen_opt.output, "output file (default stdout)");

    BenchOptions bench_opt;
    CLI::App *bench = app.add_subcommand("bench", "time solvers over an instance list");
    bench->add_option("--suite", bench_opt.suite, "JSON file with instances and solvers")
        ->required();
    bench->add_option("--out", bench_opt.out, "CSV output path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed())
            return cmd_solve(solve_opt);
        if (reduce->parsed())
            return cmd_reduce(reduce_opt);
        if (gen->parsed())
            return cmd_gen(gen_opt);
        if (bench->parsed())
            return cmd_bench(bench_opt);
    } catch (const ParseError &e) {
        std::cerr << "parse error (line " << e.line() << "): " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
