#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "dynmis/det_mis.hpp"
#include "dynmis/graph.hpp"
#include "dynmis/meter.hpp"
#include "dynmis/phase_warmup.hpp"
#include "dynmis/rng.hpp"

namespace dynmis {

// Epoch anchor: all phase parameters derive from the edge count m_est fixed
// at epoch start (m_est = 1 for the empty graph), never from the live count.
// The epoch is live while m_est/2 < m < 2*m_est.
struct EpochParams {
    long long m_est = 1;
    double p = 1.0;             // m_est^{-1/3}
    double high_threshold = 1;  // m_est^{2/3}
    long long T = 1;            // floor(m_est^{2/3}/6), min 1
    long long delta_cap = 1;    // ceil(5 m_est^{1/3} ln(m_est)), ln floored at 1
    long long i_move_cap = 1;   // ceil(m_est^{1/3})
    long long low_degree_cap = 1; // ceil((7/6) m_est^{2/3}), V_low degree bound

    static EpochParams for_edge_count(long long m);
    bool live(long long m) const { return 2 * m > m_est && m < 2 * m_est; }
};

// Same phase structure as the n^{2/3} algorithm, with three changes: the
// epoch wrapper above, lazy H-sampling (zero-degree vertices toss their coin
// on their first incident insertion of the phase), and explicit L-neighbor
// lists for the O(m^{1/3}) vertices whose phase-start degree is at least
// m_est^{2/3}.
class M13Runner {
public:
    M13Runner(int n, uint64_t seed);

    void apply_update(const UpdateEvent& e);

    MisSet current_mis() const;
    const DynamicGraph& graph() const { return g_; }
    const WorkMeter& meter() const { return meter_; }
    WorkMeter& meter() { return meter_; }
    const EpochParams& epoch() const { return epoch_; }
    size_t high_count() const { return v_high_.size(); }

    // test hooks
    void restart_epoch_with(long long m_est_override);
    void restart_phase_with(const std::vector<char>& h_mask);

    bool audit(std::string* why = nullptr) const;

private:
    enum Label : uint8_t { H = 0, I = 1, L = 2 };

    void start_epoch();
    void start_phase();
    void build_phase(const std::vector<char>& h_mask, const std::vector<char>& coin_drawn);
    std::optional<PhaseCause> feed(const UpdateEvent& e);

    void draw_lazy_coin(Vertex v);
    void promote_lazy_h(Vertex v);
    std::vector<Vertex> low_neighbors_of(Vertex v);
    void broadcast_move(Vertex v, bool into_l);
    bool degree_cap_hit(Vertex x, bool& tl);

    DynamicGraph g_;
    SplitMix64 rng_;
    WorkMeter meter_;
    EpochParams epoch_;

    std::vector<uint8_t> label_;
    std::vector<char> mis_h_;
    std::vector<int> mh_cnt_;
    std::vector<char> coin_drawn_; // per-phase lazy-sampling memo
    DetMis low_;

    std::vector<Vertex> v_high_;
    std::vector<char> is_high_;
    std::vector<std::unordered_set<Vertex>> high_l_; // adj ∩ L for each V_high vertex

    long long moves_itl_ = 0;
    long long age_ = 0;
};

std::pair<MisSet, WorkMeter> m13_run(int n, const std::vector<UpdateEvent>& updates,
                                     uint64_t seed);

} // namespace dynmis
