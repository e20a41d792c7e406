#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dynmis/det_mis.hpp"
#include "dynmis/graph.hpp"
#include "dynmis/meter.hpp"
#include "dynmis/mis_oracle.hpp"
#include "dynmis/rng.hpp"

namespace dynmis {

// Per-phase parameters for the single-level phase algorithms.
//   T         = floor(1/(6 p^2)), at least 1
//   delta_cap = ceil(5 ln(n)/p), ln floored at 1 for tiny n
//   i_move_cap= ceil(2/p)
struct PhaseParams {
    double p = 0.5;
    long long T = 1;
    long long delta_cap = 1;
    long long i_move_cap = 1;

    // p = (ln n)^{1/3} / n^{2/3}
    static PhaseParams for_vertex_count(int n);
    static PhaseParams from_p(double p, int n);
};

enum class StepResult { Continued, PhaseEnded };

// Sample-and-prune preprocessing: pick each vertex independently with
// probability p, freeze M_H = Greedy(G[H]). Draws exactly n coins from rng
// in vertex order, so a fixed seed replays bit-exactly.
std::pair<std::vector<char>, MisSet> preprocess(const DynamicGraph& g, double p,
                                                SplitMix64& rng);

// Phase-restart algorithm: sample H with probability p, freeze M_H =
// Greedy(G[H]), partition the rest into I (adjacent to M_H) and L, and run
// the counter engine on G[L]. The maintained MIS is M_H ∪ M_L. A phase ends
// at the first of: an update inside H (TH), 2/p many I->L moves (TI), an
// L-degree above delta_cap (TL), or T updates (TEXP).
class WarmupRunner {
public:
    WarmupRunner(int n, uint64_t seed);
    WarmupRunner(int n, uint64_t seed, PhaseParams params);

    // Applies one adversary update. On any phase termination the update has
    // already landed in the graph and the rebuilt phase absorbs it.
    void apply_update(const UpdateEvent& e);

    MisSet current_mis() const;
    const DynamicGraph& graph() const { return g_; }
    const WorkMeter& meter() const { return meter_; }
    WorkMeter& meter() { return meter_; }
    const PhaseParams& params() const { return params_; }

    // test hook: restart the current phase with an explicit H sample
    void restart_phase_with(const std::vector<char>& h_mask);

    long long phase_age() const { return age_; }
    long long moves_i_to_l() const { return moves_itl_; }

    // Recomputes partition labels, M_H-neighbor counts, engine counters and
    // the L-degree cap from scratch; returns false on any mismatch.
    bool audit(std::string* why = nullptr) const;

private:
    enum Label : uint8_t { H = 0, I = 1, L = 2 };

    void start_phase();
    void build_phase(const std::vector<char>& h_mask);
    // one update inside the live phase; nullopt = continued
    std::optional<PhaseCause> feed(const UpdateEvent& e);
    std::vector<Vertex> low_neighbors(Vertex v) const;
    bool degree_over_cap(Vertex v) const;

    DynamicGraph g_;
    PhaseParams params_;
    SplitMix64 rng_;
    WorkMeter meter_;

    std::vector<uint8_t> label_;
    std::vector<char> mis_h_;
    std::vector<int> mh_cnt_; // current M_H neighbors, tracked for non-H vertices
    DetMis low_;
    long long moves_itl_ = 0;
    long long age_ = 0;
};

// Drives a full update sequence from the empty graph.
std::pair<MisSet, WorkMeter> warmup_run(int n, const std::vector<UpdateEvent>& updates,
                                        uint64_t seed);

} // namespace dynmis
