#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "dynmis/harness.hpp"

using namespace dynmis;

namespace {

RunConfig basic(Algo a, int n, long long k, uint64_t seed) {
    RunConfig cfg;
    cfg.algo = a;
    cfg.workload.family = Family::UniformToggle;
    cfg.workload.n = n;
    cfg.workload.k = k;
    cfg.workload.seed = seed;
    cfg.seed = seed;
    return cfg;
}

} // namespace

TEST_CASE("det run with verify-every-update has zero failures") {
    auto cfg = basic(Algo::Det, 64, 1000, 21);
    cfg.verify_every = 1;
    auto r = run(cfg);
    CHECK(r.error.empty());
    CHECK(r.meter.verify_failures == 0);
    CHECK(r.k_updates == 1000);
}

TEST_CASE("K = 0 is initialization only, MIS = V") {
    for (Algo a : {Algo::Det, Algo::WarmupN23, Algo::M13, Algo::SqrtN}) {
        auto r = run(basic(a, 32, 0, 5));
        CHECK(r.error.empty());
        CHECK(r.final_mis.size() == 32);
        CHECK(r.meter.phases_total == 0);
    }
}

TEST_CASE("identical configs reproduce work_units and the final MIS") {
    for (Algo a : {Algo::Det, Algo::WarmupN23, Algo::M13, Algo::SqrtN}) {
        CAPTURE(algo_name(a));
        auto r1 = run(basic(a, 128, 3000, 77));
        auto r2 = run(basic(a, 128, 3000, 77));
        CHECK(r1.meter.work_units == r2.meter.work_units);
        CHECK(r1.final_mis == r2.final_mis);
        CHECK(r1.meter.phases_total == r2.meter.phases_total);
    }
}

TEST_CASE("csv rows are schema-stable") {
    auto r = run(basic(Algo::WarmupN23, 64, 500, 3));
    std::string row = csv_row(r);
    // 16 columns
    CHECK(std::count(row.begin(), row.end(), ',') == 15);
    std::string header(kCsvHeader);
    CHECK(std::count(header.begin(), header.end(), ',') == 15);
    CHECK(row.substr(0, 7) == "warmup,");
    auto r2 = run(basic(Algo::WarmupN23, 64, 500, 3));
    auto strip_wall = [](std::string s) {
        // wall_ns is the 7th column; blank it
        size_t start = 0;
        for (int c = 0; c < 6; ++c) start = s.find(',', start) + 1;
        size_t end = s.find(',', start);
        return s.substr(0, start) + s.substr(end);
    };
    CHECK(strip_wall(csv_row(r)) == strip_wall(csv_row(r2)));
}

TEST_CASE("audit hook runs clean on all algorithms") {
    for (Algo a : {Algo::Det, Algo::WarmupN23, Algo::M13, Algo::SqrtN}) {
        CAPTURE(algo_name(a));
        auto cfg = basic(a, 96, 1500, 13);
        cfg.audit_every = 50;
        auto r = run(cfg);
        CHECK(r.error.empty());
        CHECK(r.meter.audit_failures == 0);
    }
}

TEST_CASE("bench matrix collects per-config rows and slopes fit") {
    std::vector<RunConfig> cfgs;
    for (int n : {64, 128, 256})
        for (uint64_t s : {1ull, 2ull}) cfgs.push_back(basic(Algo::Det, n, 20LL * n, s));
    auto rows = bench_matrix(cfgs);
    REQUIRE(rows.size() == 6);
    std::vector<std::pair<double, std::vector<size_t>>> groups;
    for (int n : {64, 128, 256}) {
        std::vector<size_t> idx;
        for (size_t i = 0; i < rows.size(); ++i)
            if (rows[i].config.workload.n == n) idx.push_back(i);
        groups.push_back({static_cast<double>(n), idx});
    }
    double slope = slope_for(rows, groups);
    CHECK(std::isfinite(slope));
}

TEST_CASE("loglog fit recovers a known exponent") {
    std::vector<std::pair<double, double>> pts;
    for (double x : {256.0, 512.0, 1024.0, 2048.0})
        pts.push_back({x, 3.0 * std::pow(x, 0.63)});
    CHECK(fit_loglog_slope(pts) == doctest::Approx(0.63).epsilon(1e-9));
}

TEST_CASE("malformed updates file is rejected with an error") {
    RunConfig cfg = basic(Algo::Det, 8, 0, 1);
    cfg.updates_file = "/nonexistent/updates.txt";
    auto r = run(cfg);
    CHECK_FALSE(r.error.empty());
}
