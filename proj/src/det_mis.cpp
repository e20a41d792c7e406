#include "dynmis/det_mis.hpp"

#include <algorithm>
#include <cassert>

namespace dynmis {

uint64_t DetMis::greedy_init() {
    // ascending scan: a vertex joins iff no earlier neighbor joined
    uint64_t work = 0;
    std::vector<Vertex> order(sg_.vertices());
    std::sort(order.begin(), order.end());
    for (Vertex v : order) {
        ++work;
        if (cnt_[v] == 0) {
            in_mis_[v] = 1;
            for (const auto& a : sg_.arcs(v)) {
                ++cnt_[a.to];
                ++work;
            }
        }
    }
    return work;
}

void DetMis::init_from_subgraph(const SubGraph& src) {
    sg_.clear();
    std::fill(in_mis_.begin(), in_mis_.end(), 0);
    std::fill(cnt_.begin(), cnt_.end(), 0);
    uint64_t work = 0;
    for (Vertex v : src.vertices()) {
        sg_.add_vertex(v);
        ++work;
    }
    for (Vertex v : src.vertices()) {
        for (const auto& a : src.arcs(v)) {
            ++work;
            if (a.to > v) sg_.add_edge(v, a.to);
        }
    }
    work += greedy_init();
    charge(work);
}

void DetMis::join(Vertex v) {
    in_mis_[v] = 1;
    uint64_t work = 1;
    for (const auto& a : sg_.arcs(v)) {
        ++cnt_[a.to];
        ++work;
    }
    charge(work);
}

void DetMis::join_zeros(std::vector<Vertex>& cand) {
    std::sort(cand.begin(), cand.end());
    for (Vertex v : cand) {
        // joins only increment counters, so one ascending pass suffices
        if (!in_mis_[v] && cnt_[v] == 0) join(v);
    }
}

void DetMis::edge_insert(Vertex u, Vertex v) {
    sg_.add_edge(u, v);
    charge(2);
    const bool mu = in_mis_[u] != 0, mv = in_mis_[v] != 0;
    if (mu && mv) {
        // conflict: the larger id leaves, its neighbors may cascade in
        ++cnt_[u];
        ++cnt_[v];
        Vertex loser = std::max(u, v);
        in_mis_[loser] = 0;
        scratch_.clear();
        uint64_t work = 3;
        for (const auto& a : sg_.arcs(loser)) {
            ++work;
            if (--cnt_[a.to] == 0 && !in_mis_[a.to]) scratch_.push_back(a.to);
        }
        charge(work);
        join_zeros(scratch_);
    } else if (mu != mv) {
        ++cnt_[mu ? v : u];
        charge(1);
    }
}

void DetMis::edge_delete(Vertex u, Vertex v) {
    sg_.remove_edge(u, v);
    charge(2);
    const bool mu = in_mis_[u] != 0, mv = in_mis_[v] != 0;
    assert(!(mu && mv));
    if (mu != mv) {
        Vertex o = mu ? v : u;
        if (--cnt_[o] == 0) join(o);
        charge(1);
    }
}

void DetMis::activate(Vertex v, const std::vector<Vertex>& nbrs) {
    assert(!sg_.has_vertex(v));
    sg_.add_vertex(v);
    int c = 0;
    uint64_t work = 1;
    for (Vertex w : nbrs) {
        assert(sg_.has_vertex(w));
        sg_.add_edge(v, w);
        c += in_mis_[w] != 0;
        ++work;
    }
    cnt_[v] = c;
    charge(work);
    if (c == 0) join(v);
}

void DetMis::deactivate(Vertex v) {
    assert(sg_.has_vertex(v));
    const bool was_mis = in_mis_[v] != 0;
    scratch_.clear();
    uint64_t work = 1;
    for (const auto& a : sg_.arcs(v)) {
        ++work;
        scratch_.push_back(a.to);
    }
    sg_.remove_vertex(v);
    in_mis_[v] = 0;
    cnt_[v] = 0;
    if (was_mis) {
        std::vector<Vertex> cand;
        for (Vertex w : scratch_) {
            ++work;
            if (--cnt_[w] == 0 && !in_mis_[w]) cand.push_back(w);
        }
        charge(work);
        join_zeros(cand);
    } else {
        charge(work);
    }
}

bool DetMis::audit(std::string* why) const {
    for (Vertex v : sg_.vertices()) {
        int c = 0;
        for (const auto& a : sg_.arcs(v))
            c += in_mis_[a.to] != 0;
        if (c != cnt_[v]) {
            if (why) *why = "counter mismatch at vertex " + std::to_string(v);
            return false;
        }
        if ((cnt_[v] == 0) != (in_mis_[v] != 0)) {
            if (why) *why = "membership/counter inconsistency at vertex " + std::to_string(v);
            return false;
        }
    }
    for (Vertex v = 0; v < sg_.universe(); ++v) {
        if (in_mis_[v] && !sg_.has_vertex(v)) {
            if (why) *why = "inactive vertex flagged in MIS: " + std::to_string(v);
            return false;
        }
    }
    return true;
}

} // namespace dynmis
