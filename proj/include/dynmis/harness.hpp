#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dynmis/meter.hpp"
#include "dynmis/mis_oracle.hpp"
#include "dynmis/workload.hpp"

namespace dynmis {

enum class Algo { Det, WarmupN23, M13, SqrtN };

const char* algo_name(Algo a);
Algo algo_from_name(const std::string& name);

struct RunConfig {
    Algo algo = Algo::Det;
    WorkloadSpec workload;
    std::optional<std::string> updates_file; // overrides workload generation
    long long verify_every = 0;              // 0 = off, 1 = every update
    long long audit_every = 0;               // full-recount invariant audits
    uint64_t seed = 0;                       // algorithm randomness
};

struct RunResult {
    RunConfig config;
    WorkMeter meter;
    MisSet final_mis;
    long long k_updates = 0;
    std::string error; // empty on success
};

RunResult run(const RunConfig& config);

// CSV schema, stable across runs; wall_ns is the only non-reproducible column
extern const char* kCsvHeader;
std::string csv_row(const RunResult& r);

std::vector<RunResult> bench_matrix(const std::vector<RunConfig>& configs);

// least-squares slope of log2(work/update) against log2(x)
double fit_loglog_slope(const std::vector<std::pair<double, double>>& points);

// slope of mean per-update work vs n (or any x key), configs grouped by x
double slope_for(const std::vector<RunResult>& rows,
                 const std::vector<std::pair<double, std::vector<size_t>>>& groups);

} // namespace dynmis
