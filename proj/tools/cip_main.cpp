#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cip/io.hpp"
#include "cip/oracle.hpp"
#include "cip/solver.hpp"

namespace fs = std::filesystem;

namespace {

std::string stem_of(const std::string& path) {
    return fs::path(path).stem().string();
}

int resolve_k(int k, double k_frac, int n) {
    if (k >= 0) return k;
    return (int)std::ceil(k_frac * n);
}

struct CommonOpts {
    double time_limit = 600.0;
    bool strong_triangle = false;
    std::string strong_mode = "clique";
    cip::VertexOrder seed_order = cip::VertexOrder::deg_desc;
    int bitset_threshold = cip::Graph::kDefaultBitsetThreshold;
    long long node_cap = -1;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--time-limit", c.time_limit, "wall clock budget in seconds")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--enable-strong-triangle", c.strong_triangle,
                  "also prune edges by common-neighborhood structure");
    cmd->add_option("--strong-mode", c.strong_mode, "strong triangle variant")
        ->check(CLI::IsMember({"clique", "color"}));
    std::map<std::string, cip::VertexOrder> orders{{"deg-desc", cip::VertexOrder::deg_desc},
                                                   {"deg-asc", cip::VertexOrder::deg_asc},
                                                   {"id", cip::VertexOrder::id}};
    cmd->add_option("--seed-order", c.seed_order, "vertex order seeding the greedy cliques")
        ->transform(CLI::CheckedTransformer(orders, CLI::ignore_case));
    cmd->add_option("--bitset-threshold", c.bitset_threshold,
                    "largest vertex count stored as adjacency bitsets")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--node-cap", c.node_cap, "abort after this many search nodes");
}

cip::SolveConfig to_config(const CommonOpts& c) {
    cip::SolveConfig cfg;
    cfg.time_limit_seconds = c.time_limit;
    cfg.strong_triangle = c.strong_triangle;
    cfg.strong_mode = c.strong_mode == "color" ? cip::TriangleStrength::color
                                               : cip::TriangleStrength::clique;
    cfg.seed_order = c.seed_order;
    cfg.bitset_threshold = c.bitset_threshold;
    cfg.node_cap = c.node_cap;
    return cfg;
}

cip::SolveReport run_one(const std::string& path, int k, double k_frac, const CommonOpts& c) {
    cip::Graph g = cip::parse_graph(path, cip::GraphFormat::auto_detect, c.bitset_threshold);
    cip::SolveReport rep;
    rep.name = stem_of(path);
    rep.n = g.num_vertices();
    rep.m = g.num_edges();
    rep.k = resolve_k(k, k_frac, g.num_vertices());
    rep.k_fraction = k >= 0 ? -1.0 : k_frac;
    rep.result = cip::solve(g, rep.k, to_config(c));
    return rep;
}

int cmd_solve(const std::string& path, int k, double k_frac, const CommonOpts& c,
              const std::string& format) {
    cip::SolveReport rep = run_one(path, k, k_frac, c);
    std::cout << (format == "json" ? cip::report_json(rep) : cip::report_text(rep));
    return rep.result.status == cip::SolveStatus::optimal ? 0 : 3;
}

std::vector<std::string> gather_graphs(const std::string& dir, const std::string& manifest) {
    std::vector<std::string> paths;
    if (!manifest.empty()) {
        std::ifstream in(manifest);
        if (!in) throw cip::InputError("cannot open " + manifest);
        std::string line;
        while (std::getline(in, line)) {
            auto cut = line.find('#');
            if (cut != std::string::npos) line.resize(cut);
            std::istringstream ls(line);
            std::string p;
            if (ls >> p) paths.push_back(p);
        }
    } else {
        for (const auto& ent : fs::directory_iterator(dir))
            if (ent.is_regular_file()) paths.push_back(ent.path().string());
        std::sort(paths.begin(), paths.end());
    }
    return paths;
}

int cmd_bench(const std::string& dir, const std::string& manifest, std::vector<int> ks,
              std::vector<double> fracs, const CommonOpts& c) {
    if (ks.empty() && fracs.empty()) fracs.push_back(0.01);
    std::cout << cip::bench_csv_header();
    int failures = 0;
    for (const auto& path : gather_graphs(dir, manifest)) {
        for (int k : ks) {
            try {
                std::cout << cip::bench_csv_row(run_one(path, k, -1.0, c)) << std::flush;
            } catch (const std::exception& e) {
                std::cerr << path << ": " << e.what() << "\n";
                ++failures;
            }
        }
        for (double f : fracs) {
            try {
                std::cout << cip::bench_csv_row(run_one(path, -1, f, c)) << std::flush;
            } catch (const std::exception& e) {
                std::cerr << path << ": " << e.what() << "\n";
                ++failures;
            }
        }
    }
    return failures == 0 ? 0 : 1;
}

int cmd_verify(const std::string& path, int k, const CommonOpts& c) {
    cip::Graph g = cip::parse_graph(path, cip::GraphFormat::auto_detect, c.bitset_threshold);
    cip::ThetaWitness truth;
    try {
        truth = cip::brute_force_theta(g, k);
        cip::ThetaWitness again = cip::brute_force_theta_all_subsets(g, k);
        if (again.theta != truth.theta) {
            std::cout << "internal enumeration mismatch: " << truth.theta << " vs " << again.theta
                      << "\n";
            return 1;
        }
    } catch (const cip::BudgetError& e) {
        std::cout << "refused: " << e.what() << "\n";
        return 2;
    }
    cip::SolveResult r = cip::solve(g, k, to_config(c));
    std::cout << "brute force theta = " << truth.theta << ", solver theta = " << r.theta
              << " (" << (r.status == cip::SolveStatus::optimal ? "optimal" : "timeout") << ")\n";
    if (r.status != cip::SolveStatus::optimal || r.theta != truth.theta) return 1;
    std::cout << "agree\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact clique interdiction"};
    app.require_subcommand(1);

    std::string graph_path, format = "text", graphs_dir, manifest;
    int k = -1;
    double k_frac = -1.0;
    std::vector<int> bench_ks;
    std::vector<double> bench_fracs;
    CommonOpts solve_opts, bench_opts, verify_opts;

    CLI::App* solve = app.add_subcommand("solve", "solve one instance");
    solve->add_option("graph,--graph", graph_path, "edge list or DIMACS file")
        ->required()
        ->check(CLI::ExistingFile);
    auto* opt_k = solve->add_option("--k", k, "interdiction budget")->check(CLI::NonNegativeNumber);
    auto* opt_frac = solve->add_option("--k-frac", k_frac, "budget as a fraction of n, rounded up")
                         ->check(CLI::Range(0.0, 1.0));
    opt_k->excludes(opt_frac);
    opt_frac->excludes(opt_k);
    solve->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    add_common(solve, solve_opts);

    CLI::App* bench = app.add_subcommand("bench", "solve a batch, CSV on stdout");
    auto* opt_dir = bench->add_option("--graphs", graphs_dir, "directory of graph files")
                        ->check(CLI::ExistingDirectory);
    auto* opt_man = bench->add_option("--manifest", manifest, "file listing graph paths")
                        ->check(CLI::ExistingFile);
    opt_dir->excludes(opt_man);
    opt_man->excludes(opt_dir);
    bench->add_option("--k", bench_ks, "absolute budgets to run");
    bench->add_option("--k-frac", bench_fracs, "fractional budgets to run");
    add_common(bench, bench_opts);

    CLI::App* verify = app.add_subcommand("verify", "cross-check the solver against brute force");
    verify->add_option("graph,--graph", graph_path, "edge list or DIMACS file")
        ->required()
        ->check(CLI::ExistingFile);
    verify->add_option("--k", k, "interdiction budget")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_common(verify, verify_opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            if (k < 0 && k_frac < 0.0) {
                std::cerr << "solve: need --k or --k-frac\n";
                return 1;
            }
            return cmd_solve(graph_path, k, k_frac, solve_opts, format);
        }
        if (bench->parsed()) {
            if (graphs_dir.empty() && manifest.empty()) {
                std::cerr << "bench: need --graphs or --manifest\n";
                return 1;
            }
            return cmd_bench(graphs_dir, manifest, bench_ks, bench_fracs, bench_opts);
        }
        if (verify->parsed()) return cmd_verify(graph_path, k, verify_opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
