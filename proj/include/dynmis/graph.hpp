#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace dynmis {

using Vertex = int;

enum class UpdateKind : uint8_t { Insert, Delete };

// A single edge insertion or deletion; the adversary's atom.
struct UpdateEvent {
    UpdateKind kind;
    Vertex u;
    Vertex v;

    static UpdateEvent insert(Vertex u, Vertex v) { return {UpdateKind::Insert, u, v}; }
    static UpdateEvent remove(Vertex u, Vertex v) { return {UpdateKind::Delete, u, v}; }

    bool operator==(const UpdateEvent&) const = default;
};

// Fixed-universe dynamic graph: vertices [0,n), symmetric adjacency with
// O(1)-expected edge toggle and membership, plus an iterable neighbor list
// per vertex. Duplicate inserts and phantom deletes are hard errors; they
// signal a malformed adversary sequence.
class DynamicGraph {
public:
    explicit DynamicGraph(int n);

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }

    bool has_edge(Vertex u, Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }

    // vertices with degree > 0, in no particular order (stable per history)
    const std::vector<Vertex>& non_isolated() const { return nonzero_; }

    void apply(const UpdateEvent& e);
    void insert_edge(Vertex u, Vertex v);
    void delete_edge(Vertex u, Vertex v);

    template <typename Pred>
    int induced_degree(Vertex v, Pred&& mask) const {
        int d = 0;
        for (Vertex w : adj_[v])
            if (mask(w)) ++d;
        return d;
    }

    int max_degree() const;

private:
    void check_vertex(Vertex v) const;
    void nonzero_add(Vertex v);
    void nonzero_remove(Vertex v);

    int n_;
    long long m_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::unordered_map<Vertex, int>> pos_; // neighbor -> index in adj_
    std::vector<Vertex> nonzero_;
    std::vector<int> nonzero_pos_; // -1 when isolated
};

} // namespace dynmis
