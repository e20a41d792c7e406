#pragma once

#include <vector>

#include "dynmis/graph.hpp"

namespace dynmis {

// Explicitly maintained induced subgraph over the fixed universe [0,n).
// Each adjacency entry carries the index of its mirror entry in the
// neighbor's list, so edge and vertex removals run in O(1) per arc.
class SubGraph {
public:
    struct Arc {
        Vertex to;
        int rev; // index of the mirror arc in adj[to]
    };

    explicit SubGraph(int n = 0) { reset(n); }

    void reset(int n) {
        n_ = n;
        m_ = 0;
        adj_.assign(n, {});
        present_.assign(n, 0);
        verts_.clear();
        vpos_.assign(n, -1);
    }

    // drop all vertices and edges, keep capacity
    void clear() {
        for (Vertex v : verts_) {
            adj_[v].clear();
            present_[v] = 0;
            vpos_[v] = -1;
        }
        verts_.clear();
        m_ = 0;
    }

    int universe() const { return n_; }
    long long edge_count() const { return m_; }
    bool has_vertex(Vertex v) const { return present_[v] != 0; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<Arc>& arcs(Vertex v) const { return adj_[v]; }
    const std::vector<Vertex>& vertices() const { return verts_; }

    void add_vertex(Vertex v) {
        present_[v] = 1;
        vpos_[v] = static_cast<int>(verts_.size());
        verts_.push_back(v);
    }

    // both endpoints present, edge assumed absent
    void add_edge(Vertex u, Vertex v) {
        adj_[u].push_back({v, static_cast<int>(adj_[v].size())});
        adj_[v].push_back({u, static_cast<int>(adj_[u].size()) - 1});
        ++m_;
    }

    // locates v in adj[u] by scan; returns false if the edge is absent
    bool remove_edge(Vertex u, Vertex v) {
        if (adj_[u].size() > adj_[v].size()) std::swap(u, v);
        for (int i = 0; i < static_cast<int>(adj_[u].size()); ++i) {
            if (adj_[u][i].to == v) {
                drop_arc(v, adj_[u][i].rev);
                drop_arc(u, i);
                --m_;
                return true;
            }
        }
        return false;
    }

    // removes v and every incident edge
    void remove_vertex(Vertex v) {
        while (!adj_[v].empty()) {
            Arc a = adj_[v].back();
            drop_arc(a.to, a.rev);
            adj_[v].pop_back();
            --m_;
        }
        int i = vpos_[v];
        Vertex last = verts_.back();
        verts_[i] = last;
        vpos_[last] = i;
        verts_.pop_back();
        vpos_[v] = -1;
        present_[v] = 0;
    }

    bool has_edge_scan(Vertex u, Vertex v) const {
        if (adj_[u].size() > adj_[v].size()) std::swap(u, v);
        for (const Arc& a : adj_[u])
            if (a.to == v) return true;
        return false;
    }

    int max_degree() const {
        int d = 0;
        for (Vertex v : verts_)
            if (degree(v) > d) d = degree(v);
        return d;
    }

private:
    void drop_arc(Vertex w, int i) {
        Arc moved = adj_[w].back();
        if (i != static_cast<int>(adj_[w].size()) - 1) {
            adj_[w][i] = moved;
            adj_[moved.to][moved.rev].rev = i;
        }
        adj_[w].pop_back();
    }

    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<Arc>> adj_;
    std::vector<char> present_;
    std::vector<Vertex> verts_;
    std::vector<int> vpos_;
};

} // namespace dynmis
