#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "dynmis/harness.hpp"
#include "dynmis/workload.hpp"

using namespace dynmis;

namespace {

struct FamilyOpts {
    std::string family = "uniform";
    double p_edge = 0.5;
    long long window = 0;
    int hot_size = 4;
    double hot_frac = 0.8;
    int clique_size = 8;

    void attach(CLI::App* cmd) {
        cmd->add_option("--family", family, "workload family: uniform|er|sliding|hub|clique");
        cmd->add_option("--p-edge", p_edge, "er: edge probability of the build pool");
        cmd->add_option("--window", window, "sliding: live-edge window (0 = 2n)");
        cmd->add_option("--hot-size", hot_size, "hub: hot set size");
        cmd->add_option("--hot-frac", hot_frac, "hub: fraction of updates touching the hot set");
        cmd->add_option("--clique-size", clique_size, "clique: cycled clique size");
    }

    WorkloadSpec spec(int n, long long k, uint64_t seed) const {
        WorkloadSpec s;
        s.family = family_from_name(family);
        s.n = n;
        s.k = k;
        s.seed = seed;
        s.p_edge = p_edge;
        s.window = window;
        s.hot_set_size = hot_size;
        s.hot_fraction = hot_frac;
        s.clique_size = clique_size;
        return s;
    }
};

void emit(std::ostream& os, const std::vector<RunResult>& rows) {
    os << kCsvHeader << "\n";
    for (const auto& r : rows) os << csv_row(r) << "\n";
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output: " + path);
    return file;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fully dynamic maximal independent set benchmark harness"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a workload file");
    int gen_n = 64;
    long long gen_k = 1000;
    uint64_t gen_seed = 1;
    std::string gen_out;
    FamilyOpts gen_fam;
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--k", gen_k, "number of updates")->required();
    gen->add_option("--seed", gen_seed, "workload seed");
    gen->add_option("--out", gen_out, "output path (- for stdout)");
    gen_fam.attach(gen);

    // run
    auto* runc = app.add_subcommand("run", "run one algorithm over one workload");
    std::string run_algo = "det";
    int run_n = 64;
    long long run_k = 1000;
    uint64_t run_seed = 1;
    long long run_verify = 0, run_audit = 0;
    std::string run_out, run_updates;
    FamilyOpts run_fam;
    runc->add_option("--algo", run_algo, "det|warmup|m13|sqrtn")->required();
    runc->add_option("--n", run_n, "vertex count");
    runc->add_option("--k", run_k, "number of updates");
    runc->add_option("--seed", run_seed, "trial seed (workload + algorithm)");
    runc->add_option("--verify-every", run_verify, "oracle-check the MIS every v updates");
    runc->add_option("--audit-every", run_audit, "full invariant audit every v updates");
    runc->add_option("--updates-file", run_updates, "replay updates from a file");
    runc->add_option("--out", run_out, "CSV output path (- for stdout)");
    run_fam.attach(runc);

    // bench
    auto* bench = app.add_subcommand("bench", "run a size/seed matrix and fit slopes");
    std::vector<std::string> bench_algos{"det"};
    std::vector<int> bench_ns{256, 512, 1024};
    std::vector<uint64_t> bench_seeds{1, 2, 3, 4, 5};
    long long bench_k = 0;
    double bench_kmult = 50.0;
    std::string bench_out;
    FamilyOpts bench_fam;
    bench->add_option("--algos", bench_algos, "algorithms to sweep")->delimiter(',');
    bench->add_option("--ns", bench_ns, "vertex counts")->delimiter(',');
    bench->add_option("--seeds", bench_seeds, "seeds per size")->delimiter(',');
    bench->add_option("--k", bench_k, "updates per run (overrides --k-mult)");
    bench->add_option("--k-mult", bench_kmult, "updates per run = k-mult * n");
    bench->add_option("--out", bench_out, "CSV output path (- for stdout)");
    bench_fam.attach(bench);

    // verify
    auto* ver = app.add_subcommand("verify", "replay a workload file with verify-every=1");
    std::string ver_algo = "det", ver_file;
    uint64_t ver_seed = 1;
    ver->add_option("--algo", ver_algo, "det|warmup|m13|sqrtn")->required();
    ver->add_option("file", ver_file, "update file")->required();
    ver->add_option("--seed", ver_seed, "algorithm seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            auto seq = generate(gen_fam.spec(gen_n, gen_k, gen_seed));
            std::ofstream f;
            write_updates(open_out(f, gen_out), gen_n, seq);
            return 0;
        }
        if (*runc) {
            RunConfig cfg;
            cfg.algo = algo_from_name(run_algo);
            cfg.seed = run_seed;
            cfg.verify_every = run_verify;
            cfg.audit_every = run_audit;
            if (!run_updates.empty())
                cfg.updates_file = run_updates;
            else
                cfg.workload = run_fam.spec(run_n, run_k, run_seed);
            RunResult r = run(cfg);
            std::ofstream f;
            emit(open_out(f, run_out), {r});
            if (!r.error.empty()) {
                std::cerr << "error: " << r.error << "\n";
                return 2;
            }
            return (r.meter.verify_failures || r.meter.audit_failures) ? 1 : 0;
        }
        if (*bench) {
            std::vector<RunConfig> cfgs;
            for (const auto& an : bench_algos)
                for (int n : bench_ns)
                    for (uint64_t s : bench_seeds) {
                        RunConfig cfg;
                        cfg.algo = algo_from_name(an);
                        cfg.seed = s;
                        long long k = bench_k > 0
                                          ? bench_k
                                          : static_cast<long long>(bench_kmult * n);
                        cfg.workload = bench_fam.spec(n, k, s);
                        cfgs.push_back(cfg);
                    }
            auto rows = bench_matrix(cfgs);
            std::ofstream f;
            emit(open_out(f, bench_out), rows);
            // per-algorithm log-log fit of work/update against n
            bool any_error = false;
            for (const auto& an : bench_algos) {
                Algo a = algo_from_name(an);
                std::vector<std::pair<double, std::vector<size_t>>> groups;
                for (int n : bench_ns) {
                    std::vector<size_t> idx;
                    for (size_t i = 0; i < rows.size(); ++i)
                        if (rows[i].config.algo == a && rows[i].config.workload.n == n &&
                            rows[i].error.empty())
                            idx.push_back(i);
                    if (!idx.empty()) groups.push_back({static_cast<double>(n), idx});
                }
                if (groups.size() >= 2)
                    std::cerr << "slope(" << an << ") = " << slope_for(rows, groups) << "\n";
                for (const auto& r : rows)
                    if (!r.error.empty()) any_error = true;
            }
            return any_error ? 2 : 0;
        }
        if (*ver) {
            RunConfig cfg;
            cfg.algo = algo_from_name(ver_algo);
            cfg.updates_file = ver_file;
            cfg.verify_every = 1;
            cfg.seed = ver_seed;
            RunResult r = run(cfg);
            std::cout << kCsvHeader << "\n" << csv_row(r) << "\n";
            if (!r.error.empty()) {
                std::cerr << "error: " << r.error << "\n";
                return 2;
            }
            std::cerr << (r.meter.verify_failures ? "verify: FAILED\n" : "verify: ok\n");
            return r.meter.verify_failures ? 1 : 0;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
