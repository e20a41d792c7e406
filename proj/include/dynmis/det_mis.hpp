#pragma once

#include <string>
#include <vector>

#include "dynmis/graph.hpp"
#include "dynmis/meter.hpp"
#include "dynmis/mis_oracle.hpp"
#include "dynmis/subgraph.hpp"

namespace dynmis {

// Counter-based dynamic MIS over an explicitly maintained induced subgraph.
// Every active vertex keeps a count of its active MIS neighbors; a vertex is
// in the MIS iff its count is zero. Supports edge updates plus vertex
// activation/deactivation, so the phase algorithms can run it on G[L].
//
// Tie-break: when an insertion joins two MIS members, the larger id leaves.
// Cascading joins are processed in increasing id order.
class DetMis {
public:
    explicit DetMis(int n = 0, WorkMeter* meter = nullptr) { reset(n, meter); }

    void reset(int n, WorkMeter* meter) {
        sg_.reset(n);
        in_mis_.assign(n, 0);
        cnt_.assign(n, 0);
        meter_ = meter;
    }

    // Builds the engine over the subgraph of g induced by `active` and
    // computes the greedy MIS; one work unit per edge scanned.
    template <typename Pred>
    void init_from_graph(const DynamicGraph& g, Pred&& active) {
        const int n = g.vertex_count();
        sg_.clear();
        std::fill(in_mis_.begin(), in_mis_.end(), 0);
        std::fill(cnt_.begin(), cnt_.end(), 0);
        for (Vertex v = 0; v < n; ++v)
            if (active(v)) sg_.add_vertex(v);
        uint64_t work = n;
        for (Vertex v : sg_.vertices()) {
            for (Vertex w : g.neighbors(v)) {
                ++work;
                if (w > v && sg_.has_vertex(w)) sg_.add_edge(v, w);
            }
        }
        work += greedy_init();
        charge(work);
    }

    // Rebuilds from an explicit level graph (vertices and edges copied).
    void init_from_subgraph(const SubGraph& src);

    // Graph g already reflects the toggle of (u,v); no-op unless both
    // endpoints are active in this engine.
    void edge_update(const UpdateEvent& e) {
        if (!sg_.has_vertex(e.u) || !sg_.has_vertex(e.v)) return;
        if (e.kind == UpdateKind::Insert)
            edge_insert(e.u, e.v);
        else
            edge_delete(e.u, e.v);
    }

    void edge_insert(Vertex u, Vertex v);
    void edge_delete(Vertex u, Vertex v);

    // v inactive; nbrs = v's active neighbors (caller-computed).
    void activate(Vertex v, const std::vector<Vertex>& nbrs);
    void deactivate(Vertex v);

    bool active(Vertex v) const { return sg_.has_vertex(v); }
    bool in_mis(Vertex v) const { return in_mis_[v] != 0; }
    int count(Vertex v) const { return cnt_[v]; }
    const SubGraph& graph() const { return sg_; }

    MisSet snapshot() const {
        MisSet s(static_cast<int>(in_mis_.size()));
        s.in = in_mis_;
        return s;
    }

    // Full recount of counters plus MIS validity on the maintained subgraph.
    bool audit(std::string* why = nullptr) const;

private:
    void charge(uint64_t u) {
        if (meter_) meter_->charge(u);
    }
    uint64_t greedy_init();
    void join(Vertex v);
    void join_zeros(std::vector<Vertex>& cand);

    SubGraph sg_;
    std::vector<char> in_mis_;
    std::vector<int> cnt_;
    std::vector<Vertex> scratch_;
    WorkMeter* meter_ = nullptr;
};

} // namespace dynmis
