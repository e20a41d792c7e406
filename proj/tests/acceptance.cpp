// Acceptance suite: every release gate runs here, one pass/fail line each.
// A1 correctness sweep        A2 oracle equivalence   A3 sample-and-prune bound
// A4 phase success fraction   A5 phase-count budgets  A6 invariant audits
// A7 scaling fits             A8 exponent chain       A9 determinism
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>

#include "dynmis/algo_sqrtn.hpp"
#include "dynmis/harness.hpp"
#include "dynmis/mis_oracle.hpp"
#include "dynmis/phase_warmup.hpp"
#include "dynmis/rng.hpp"

using namespace dynmis;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(const char* id, bool pass, const std::string& detail, double secs) {
    std::printf("[%s] %s  %s  (%.1fs)\n", id, pass ? "PASS" : "FAIL", detail.c_str(), secs);
    std::fflush(stdout);
}

RunConfig sweep_config(Algo a, Family f, int n, long long k, uint64_t seed) {
    RunConfig cfg;
    cfg.algo = a;
    cfg.workload.family = f;
    cfg.workload.n = n;
    cfg.workload.k = k;
    cfg.workload.seed = seed * 7919 + n;
    cfg.seed = seed;
    return cfg;
}

const Family kFamilies[] = {Family::UniformToggle, Family::ErBuildTeardown,
                            Family::SlidingWindow, Family::HubAttack, Family::CliqueCycle};
const Algo kAlgos[] = {Algo::Det, Algo::WarmupN23, Algo::M13, Algo::SqrtN};

// shared sweep: verify after every update, full-recount audits on; feeds A1 and A6
struct SweepTotals {
    uint64_t verify_failures = 0;
    uint64_t audit_failures = 0;
    long long runs = 0;
    std::string first_error;
};

SweepTotals& correctness_sweep() {
    static SweepTotals totals;
    static bool done = false;
    if (done) return totals;
    for (Algo a : kAlgos)
        for (Family f : kFamilies)
            for (int n : {64, 256, 1024})
                for (uint64_t seed = 1; seed <= 10; ++seed) {
                    auto cfg = sweep_config(a, f, n, 20LL * n, seed);
                    cfg.verify_every = 1;
                    cfg.audit_every = 1;
                    auto r = run(cfg);
                    totals.verify_failures += r.meter.verify_failures;
                    totals.audit_failures += r.meter.audit_failures;
                    ++totals.runs;
                    if (!r.error.empty() && totals.first_error.empty())
                        totals.first_error = std::string(algo_name(a)) + "/" +
                                             family_name(f) + "/n=" + std::to_string(n) +
                                             ": " + r.error;
                }
    done = true;
    return totals;
}

} // namespace

TEST_CASE("A1 correctness sweep: oracle-valid after every update") {
    Timer t;
    auto& s = correctness_sweep();
    bool pass = s.verify_failures == 0 && s.first_error.empty();
    report("A1", pass,
           std::to_string(s.runs) + " runs, verify_failures=" +
               std::to_string(s.verify_failures) +
               (s.first_error.empty() ? "" : ", error: " + s.first_error),
           t.seconds());
    CHECK(s.verify_failures == 0);
    CHECK(s.first_error.empty());
}

TEST_CASE("A2 oracle equivalence: greedy vs brute force") {
    Timer t;
    long long mismatches = 0;
    const std::pair<Vertex, Vertex> pairs[6] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (int mask = 0; mask < 64; ++mask) {
        DynamicGraph g(4);
        for (int b = 0; b < 6; ++b)
            if (mask & (1 << b)) g.insert_edge(pairs[b].first, pairs[b].second);
        if (!(greedy_mis(g) == brute_force_lex_mis(g))) ++mismatches;
    }
    SplitMix64 rng(20260809);
    for (int n = 5; n <= 8; ++n)
        for (int trial = 0; trial < 1000; ++trial) {
            DynamicGraph g(n);
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    if (rng.bernoulli(0.35)) g.insert_edge(u, v);
            if (!(greedy_mis(g) == brute_force_lex_mis(g))) ++mismatches;
        }
    report("A2", mismatches == 0,
           "64 exhaustive + 4000 random graphs, mismatches=" + std::to_string(mismatches),
           t.seconds());
    CHECK(mismatches == 0);
}

TEST_CASE("A3 sample-and-prune residual degree bound") {
    Timer t;
    const int n = 512;
    const double p = 0.1;
    const double bound = 5.0 / p * std::log(static_cast<double>(n));
    long long violations = 0;
    SplitMix64 master(424242);
    for (int trial = 0; trial < 1000; ++trial) {
        SplitMix64 rng = master.split(trial);
        DynamicGraph g(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (rng.bernoulli(0.05)) g.insert_edge(u, v);
        std::vector<char> sampled(n, 0);
        for (Vertex v = 0; v < n; ++v) sampled[v] = rng.bernoulli(p) ? 1 : 0;
        MisSet m = greedy_mis(g, [&](Vertex v) { return sampled[v] != 0; });
        std::vector<char> pruned(n, 0); // M and its neighborhood
        for (Vertex v = 0; v < n; ++v) {
            if (!m.in[v]) continue;
            pruned[v] = 1;
            for (Vertex w : g.neighbors(v)) pruned[w] = 1;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (pruned[v]) continue;
            int d = g.induced_degree(v, [&](Vertex w) { return !pruned[w]; });
            if (static_cast<double>(d) > bound) ++violations;
        }
    }
    report("A3", violations == 0,
           "1000 trials on er(512,0.05), p=0.1, violations=" + std::to_string(violations),
           t.seconds());
    CHECK(violations == 0);
}

TEST_CASE("A4 phase success fraction at n = 1024") {
    Timer t;
    std::string detail;
    bool pass = true;
    struct Plan {
        Algo algo;
        long long k;
        int seeds;
    };
    const Plan plans[] = {{Algo::WarmupN23, 60000, 4}, {Algo::M13, 200000, 2}, {Algo::SqrtN, 3000, 1}};
    for (const auto& plan : plans) {
        uint64_t total = 0, good = 0;
        for (int seed = 1; seed <= plan.seeds; ++seed) {
            auto cfg = sweep_config(plan.algo, Family::UniformToggle, 1024, plan.k, seed);
            auto r = run(cfg);
            total += r.meter.phases_total;
            good += r.meter.successful_phases();
        }
        double frac = total ? static_cast<double>(good) / static_cast<double>(total) : 0.0;
        bool ok = total >= 400 && frac >= 0.40;
        pass = pass && ok;
        detail += std::string(algo_name(plan.algo)) + ": " + std::to_string(total) +
                  " phases, success=" + std::to_string(frac).substr(0, 5) + "  ";
    }
    report("A4", pass, detail, t.seconds());
    CHECK(pass);
}

TEST_CASE("A5 phase-count budgets") {
    Timer t;
    auto pp = PhaseParams::for_vertex_count(1024);
    const long long K = 10 * pp.T;
    double mean_k = 0;
    const int seeds = 20;
    for (int seed = 1; seed <= seeds; ++seed) {
        auto r = run(sweep_config(Algo::WarmupN23, Family::UniformToggle, 1024, K, seed));
        mean_k += static_cast<double>(r.meter.phases_total);
    }
    mean_k /= seeds;
    double budget = 4.0 * static_cast<double>(K) / static_cast<double>(pp.T) + 10.0;
    bool warmup_ok = mean_k <= budget;

    // per-level analogue at the bottom level
    auto lp = LevelParams::for_vertex_count(1024);
    const int R = lp.R;
    double mean_kr = 0, mean_kr_prev = 0;
    for (int seed = 1; seed <= seeds; ++seed) {
        auto r = run(sweep_config(Algo::SqrtN, Family::UniformToggle, 1024, K, seed));
        const auto& kr = r.meter.level_phases;
        mean_kr += static_cast<double>(R - 1 < static_cast<int>(kr.size()) ? kr[R - 1] : 0);
        if (R >= 2)
            mean_kr_prev += static_cast<double>(R - 2 < static_cast<int>(kr.size()) ? kr[R - 2] : 0);
    }
    mean_kr /= seeds;
    mean_kr_prev /= seeds;
    double budget_r =
        4.0 * static_cast<double>(K) / static_cast<double>(lp.T[R - 1]) + 4.0 * mean_kr_prev + 10.0;
    bool sqrtn_ok = mean_kr <= budget_r;

    report("A5", warmup_ok && sqrtn_ok,
           "warmup mean k=" + std::to_string(mean_k) + " budget=" + std::to_string(budget) +
               "; sqrtn mean k_R=" + std::to_string(mean_kr) + " budget=" +
               std::to_string(budget_r),
           t.seconds());
    CHECK(warmup_ok);
    CHECK(sqrtn_ok);
}

TEST_CASE("A6 degree-cap and partition audits across the sweep") {
    Timer t;
    auto& s = correctness_sweep();
    report("A6", s.audit_failures == 0,
           "full-recount audits on criterion-sweep runs, audit_failures=" +
               std::to_string(s.audit_failures),
           t.seconds());
    CHECK(s.audit_failures == 0);
}

TEST_CASE("A7 scaling fits") {
    Timer t;
    const std::vector<int> ns = {256, 512, 1024, 2048, 4096};
    const int seeds = 5;

    auto sweep_slope = [&](Algo a) {
        std::vector<RunResult> rows;
        std::vector<std::pair<double, std::vector<size_t>>> groups;
        for (int n : ns) {
            std::vector<size_t> idx;
            for (int seed = 1; seed <= seeds; ++seed) {
                rows.push_back(run(sweep_config(a, Family::UniformToggle, n, 50LL * n, seed)));
                REQUIRE(rows.back().error.empty());
                idx.push_back(rows.size() - 1);
            }
            groups.push_back({static_cast<double>(n), idx});
        }
        return slope_for(rows, groups);
    };

    double det_slope = sweep_slope(Algo::Det);
    std::printf("  [A7] det slope    = %+.3f (target [0.8,1.2])\n", det_slope);
    std::fflush(stdout);
    double warm_slope = sweep_slope(Algo::WarmupN23);
    std::printf("  [A7] warmup slope = %+.3f (target [0.45,0.9], < det)\n", warm_slope);
    std::fflush(stdout);
    double sqrt_slope = sweep_slope(Algo::SqrtN);
    std::printf("  [A7] sqrtn slope  = %+.3f (target [0.3,0.75], <= warmup+0.05)\n", sqrt_slope);
    std::fflush(stdout);

    // m^{1/3} algorithm against targeted sparse edge counts (m ~ n)
    std::vector<RunResult> mrows;
    std::vector<std::pair<double, std::vector<size_t>>> mgroups;
    for (long long m_target : {1LL << 10, 1LL << 12, 1LL << 14, 1LL << 16}) {
        std::vector<size_t> idx;
        for (int seed = 1; seed <= seeds; ++seed) {
            RunConfig cfg;
            cfg.algo = Algo::M13;
            cfg.workload.family = Family::SlidingWindow;
            cfg.workload.n = static_cast<int>(m_target);
            cfg.workload.window = m_target;
            cfg.workload.k = 20 * m_target;
            cfg.workload.seed = seed * 131 + m_target;
            cfg.seed = seed;
            mrows.push_back(run(cfg));
            REQUIRE(mrows.back().error.empty());
            idx.push_back(mrows.size() - 1);
        }
        mgroups.push_back({static_cast<double>(m_target), idx});
    }
    double m13_slope = slope_for(mrows, mgroups);
    std::printf("  [A7] m13 slope    = %+.3f vs m (target [0.15,0.55])\n", m13_slope);
    std::fflush(stdout);

    bool det_ok = det_slope >= 0.8 && det_slope <= 1.2;
    bool warm_ok = warm_slope >= 0.45 && warm_slope <= 0.9 && warm_slope < det_slope;
    bool sqrt_ok = sqrt_slope >= 0.3 && sqrt_slope <= 0.75 && sqrt_slope <= warm_slope + 0.05;
    bool m13_ok = m13_slope >= 0.15 && m13_slope <= 0.55;

    char buf[160];
    std::snprintf(buf, sizeof buf, "det=%.2f warmup=%.2f sqrtn=%.2f m13=%.2f", det_slope,
                  warm_slope, sqrt_slope, m13_slope);
    report("A7", det_ok && warm_ok && sqrt_ok && m13_ok, buf, t.seconds());
    CHECK(det_ok);
    CHECK(warm_ok);
    CHECK(sqrt_ok);
    CHECK(m13_ok);
}

TEST_CASE("A8 exponent chain closes for R in 1..10") {
    Timer t;
    bool pass = true;
    double prev = 1.0;
    for (int R = 1; R <= 10; ++R) {
        auto e = solve_exponent_chain(R);
        double e_last = e[R - 1];
        if (std::abs((2.0 - 2.0 * e[0]) - e_last) > 1e-12) pass = false;
        for (int r = 1; r < R; ++r)
            if (std::abs((1.0 + e[r - 1] - 2.0 * e[r]) - e_last) > 1e-12) pass = false;
        if (!(e_last < prev && e_last > 0.5)) pass = false; // monotone toward 1/2
        prev = e_last;
    }
    report("A8", pass, "all chain equalities within 1e-12, e_R monotone to 1/2", t.seconds());
    CHECK(pass);
}

TEST_CASE("A9 determinism: identical seeds reproduce runs exactly") {
    Timer t;
    bool pass = true;
    std::string detail;
    for (Algo a : kAlgos) {
        auto cfg = sweep_config(a, Family::UniformToggle, 256, 5000, 4242);
        auto r1 = run(cfg);
        auto r2 = run(cfg);
        bool same =
            r1.meter.work_units == r2.meter.work_units && r1.final_mis == r2.final_mis;
        pass = pass && same;
        if (!same) detail += std::string(algo_name(a)) + " diverged  ";
    }
    report("A9", pass, detail.empty() ? "all four algorithms replay bit-exactly" : detail,
           t.seconds());
    CHECK(pass);
}
