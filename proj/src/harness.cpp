#include "dynmis/harness.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "dynmis/algo_m13.hpp"
#include "dynmis/algo_sqrtn.hpp"
#include "dynmis/det_mis.hpp"
#include "dynmis/phase_warmup.hpp"

namespace dynmis {

const char* algo_name(Algo a) {
    switch (a) {
    case Algo::Det: return "det";
    case Algo::WarmupN23: return "warmup";
    case Algo::M13: return "m13";
    case Algo::SqrtN: return "sqrtn";
    }
    return "?";
}

Algo algo_from_name(const std::string& name) {
    if (name == "det") return Algo::Det;
    if (name == "warmup") return Algo::WarmupN23;
    if (name == "m13") return Algo::M13;
    if (name == "sqrtn") return Algo::SqrtN;
    throw std::invalid_argument("unknown algorithm: " + name);
}

namespace {

// uniform driver surface over the four runner types
struct DetDriver {
    DynamicGraph g;
    WorkMeter meter;
    DetMis engine;

    DetDriver(int n, uint64_t) : g(n), engine(n, &meter) {
        engine.init_from_graph(g, [](Vertex) { return true; });
    }
    void apply_update(const UpdateEvent& e) {
        g.apply(e);
        meter.charge(1);
        engine.edge_update(e);
    }
    MisSet current_mis() const { return engine.snapshot(); }
    const DynamicGraph& graph() const { return g; }
    bool audit(std::string* why) const {
        if (!engine.audit(why)) return false;
        auto vr = verify_mis(g, engine.snapshot());
        if (!vr.ok()) {
            if (why) *why = vr.describe();
            return false;
        }
        return true;
    }
};

template <typename Driver>
RunResult drive(const RunConfig& cfg, int n, const std::vector<UpdateEvent>& seq) {
    RunResult out;
    out.config = cfg;
    out.k_updates = static_cast<long long>(seq.size());
    Driver d(n, cfg.seed);
    auto t0 = std::chrono::steady_clock::now();
    long long i = 0;
    for (const auto& e : seq) {
        d.apply_update(e);
        ++i;
        if (cfg.verify_every > 0 && i % cfg.verify_every == 0) {
            auto vr = verify_mis(d.graph(), d.current_mis());
            if (!vr.ok()) ++d.meter_ref().verify_failures;
        }
        if (cfg.audit_every > 0 && i % cfg.audit_every == 0) {
            std::string why;
            if (!d.audit(&why)) {
                ++d.meter_ref().audit_failures;
                if (out.error.empty()) out.error = "audit: " + why;
            }
        }
    }
    auto t1 = std::chrono::steady_clock::now();
    out.meter = d.meter_ref();
    out.meter.wall_ns =
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
    out.final_mis = d.current_mis();
    return out;
}

// thin adapters so every runner exposes meter_ref()
template <typename R>
struct Adapter : R {
    using R::R;
    WorkMeter& meter_ref() { return this->meter(); }
};

template <>
struct Adapter<DetDriver> : DetDriver {
    using DetDriver::DetDriver;
    WorkMeter& meter_ref() { return meter; }
};

} // namespace

RunResult run(const RunConfig& config) {
    try {
        RunConfig cfg = config;
        int n;
        std::vector<UpdateEvent> seq;
        if (cfg.updates_file) {
            std::tie(n, seq) = read_updates_file(*cfg.updates_file);
            cfg.workload.n = n; // keep the CSV row truthful on replays
            cfg.workload.k = static_cast<long long>(seq.size());
        } else {
            n = cfg.workload.n;
            seq = generate(cfg.workload);
        }
        switch (cfg.algo) {
        case Algo::Det: return drive<Adapter<DetDriver>>(cfg, n, seq);
        case Algo::WarmupN23: return drive<Adapter<WarmupRunner>>(cfg, n, seq);
        case Algo::M13: return drive<Adapter<M13Runner>>(cfg, n, seq);
        case Algo::SqrtN: return drive<Adapter<SqrtnRunner>>(cfg, n, seq);
        }
    } catch (const std::exception& ex) {
        RunResult bad;
        bad.config = config;
        bad.error = ex.what();
        return bad;
    }
    RunResult bad;
    bad.config = config;
    bad.error = "unknown algorithm";
    return bad;
}

const char* kCsvHeader =
    "algo,family,n,k_updates,seed,work_units,wall_ns,phases_total,"
    "ph_th,ph_ti,ph_tl,ph_texp,ph_parent,ph_epoch,max_deltaL,verify_failures";

std::string csv_row(const RunResult& r) {
    std::ostringstream os;
    const WorkMeter& m = r.meter;
    os << algo_name(r.config.algo) << ',' << family_name(r.config.workload.family) << ','
       << r.config.workload.n << ',' << r.k_updates << ',' << r.config.seed << ','
       << m.work_units << ',' << m.wall_ns << ',' << m.phases_total;
    for (int c = 0; c < 6; ++c) os << ',' << m.phases_by_cause[c];
    os << ',' << m.max_delta_l << ',' << m.verify_failures;
    return os.str();
}

std::vector<RunResult> bench_matrix(const std::vector<RunConfig>& configs) {
    std::vector<RunResult> out;
    out.reserve(configs.size());
    for (const auto& cfg : configs) out.push_back(run(cfg));
    return out;
}

double fit_loglog_slope(const std::vector<std::pair<double, double>>& points) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double k = static_cast<double>(points.size());
    for (auto [x, y] : points) {
        double lx = std::log2(x), ly = std::log2(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

double slope_for(const std::vector<RunResult>& rows,
                 const std::vector<std::pair<double, std::vector<size_t>>>& groups) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& [x, idxs] : groups) {
        double mean = 0;
        for (size_t i : idxs)
            mean += static_cast<double>(rows[i].meter.work_units) /
                    std::max<long long>(1, rows[i].k_updates);
        mean /= static_cast<double>(idxs.size());
        pts.push_back({x, mean});
    }
    return fit_loglog_slope(pts);
}

} // namespace dynmis
