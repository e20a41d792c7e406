#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dynmis/det_mis.hpp"
#include "dynmis/graph.hpp"
#include "dynmis/meter.hpp"
#include "dynmis/rng.hpp"
#include "dynmis/subgraph.hpp"

namespace dynmis {

// Exponents e_r with Delta_r = n^{e_r} solving the chain
//   n^2/Delta_1^2 = n*Delta_1/Delta_2^2 = ... = n*Delta_{R-1}/Delta_R^2 = Delta_R,
// i.e. e_R = 2^R/(2^{R+1}-1) and e_{r-1} = 2 e_r + (e_R - 1).
std::vector<double> solve_exponent_chain(int R);

// Per-level sampling probabilities and caps.
//   Delta_r = ceil(n^{e_r}),  p_r = 5 ln n / n^{e_r},
//   T_r = floor(1/(24 p_r^2)) min 1,  touched_cap_r = ceil(1/p_r)
// R starts from round(2 log2 log2 n) and is reduced until the level spacing
// p_r >= 2 p_{r-1}, p_1 >= 1/n and p_R <= 1 all hold (re-solving the chain
// each time). R = 0 means no level structure is feasible at this n and the
// runner falls back to the plain counter engine on the whole graph.
struct LevelParams {
    int R = 0;
    std::vector<double> e;       // 1-based at index r-1
    std::vector<double> p;
    std::vector<long long> delta;
    std::vector<long long> T;
    std::vector<long long> touched_cap;

    bool det_fallback() const { return R == 0; }
    static LevelParams for_vertex_count(int n);
    static LevelParams for_fixed_r(int n, int R); // no feasibility reduction
};

// Nested level phases: level r samples H~^r over all of V, freezes
// H^r = H~^r ∩ L^{r-1} and M^r = Greedy(G[H^r]), and maintains the explicit
// level graph G^r = G[L^r]. Level r+1 runs inside level r; the counter
// engine maintains M* on G^R. The full MIS is M^1 ∪ ... ∪ M^R ∪ M*.
class SqrtnRunner {
public:
    SqrtnRunner(int n, uint64_t seed);
    SqrtnRunner(int n, uint64_t seed, LevelParams params);

    void apply_update(const UpdateEvent& e);

    MisSet current_mis() const;
    const DynamicGraph& graph() const { return g_; }
    const WorkMeter& meter() const { return meter_; }
    WorkMeter& meter() { return meter_; }
    const LevelParams& params() const { return params_; }

    int level_of(Vertex v) const { return lev_[v]; }   // r of H^r/I^r, R+1 for L^R
    bool is_h(Vertex v) const { return kind_[v] == KH; }

    bool audit(std::string* why = nullptr) const;

private:
    enum Kind : uint8_t { KH = 0, KI = 1, KL = 2 };

    // rebuilds levels r..R (samples, partitions, level graphs, M*, counters)
    void level_preprocess(int r);
    // processes one update at a live level; returns true if t_L fired there
    bool process_level(int r, const UpdateEvent& e, int r_limit, int& tl_level);
    void move_up_to_i(Vertex v, int r, int r_limit);
    bool descend(Vertex v, int from_level, int r_limit, int& tl_level);

    bool in_l(Vertex v, int r) const { return lev_[v] > r; }
    const std::vector<Vertex>& domain_of(int r) const; // vertex list of L^{r-1}
    bool mis_member(Vertex v) const {
        return (kind_[v] == KH && mis_[lev_[v] - 1][v]) ||
               (lev_[v] == params_.R + 1 && star_.in_mis(v));
    }

    DynamicGraph g_;
    SplitMix64 rng_;
    WorkMeter meter_;
    LevelParams params_;

    // per-vertex classification: (kind, lev); lev = R+1 encodes L^R residue
    std::vector<uint8_t> kind_;
    std::vector<int> lev_;

    // per-level state, index r-1
    std::vector<std::vector<char>> h_tilde_;
    std::vector<std::vector<char>> mis_;
    std::vector<std::vector<int>> mcnt_; // M^r neighbors, valid while v ∈ I^r
    std::vector<SubGraph> level_graph_;
    std::vector<long long> touched_;
    std::vector<long long> age_;

    DetMis star_;
    std::vector<Vertex> all_vertices_;
    std::vector<Vertex> nbr_scratch_;
};

std::pair<MisSet, WorkMeter> sqrtn_run(int n, const std::vector<UpdateEvent>& updates,
                                       uint64_t seed);

} // namespace dynmis
