#include "dynmis/graph.hpp"

namespace dynmis {

DynamicGraph::DynamicGraph(int n) : n_(n) {
    if (n < 1)
        throw std::invalid_argument("DynamicGraph: vertex count must be >= 1");
    adj_.resize(n_);
    pos_.resize(n_);
    nonzero_pos_.assign(n_, -1);
}

void DynamicGraph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("DynamicGraph: vertex " + std::to_string(v) +
                                    " outside universe [0," + std::to_string(n_) + ")");
}

bool DynamicGraph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& p = pos_[u];
    return p.find(v) != p.end();
}

void DynamicGraph::nonzero_add(Vertex v) {
    nonzero_pos_[v] = static_cast<int>(nonzero_.size());
    nonzero_.push_back(v);
}

void DynamicGraph::nonzero_remove(Vertex v) {
    int i = nonzero_pos_[v];
    Vertex last = nonzero_.back();
    nonzero_[i] = last;
    nonzero_pos_[last] = i;
    nonzero_.pop_back();
    nonzero_pos_[v] = -1;
}

void DynamicGraph::insert_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("DynamicGraph: self-loop rejected");
    if (has_edge(u, v))
        throw std::invalid_argument("DynamicGraph: duplicate insert of edge (" +
                                    std::to_string(u) + "," + std::to_string(v) + ")");
    if (adj_[u].empty()) nonzero_add(u);
    if (adj_[v].empty()) nonzero_add(v);
    pos_[u].emplace(v, static_cast<int>(adj_[u].size()));
    adj_[u].push_back(v);
    pos_[v].emplace(u, static_cast<int>(adj_[v].size()));
    adj_[v].push_back(u);
    ++m_;
}

void DynamicGraph::delete_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    auto it = pos_[u].find(v);
    if (it == pos_[u].end())
        throw std::invalid_argument("DynamicGraph: delete of missing edge (" +
                                    std::to_string(u) + "," + std::to_string(v) + ")");
    // remove v from adj_[u] by swap-pop, then u from adj_[v]
    for (Vertex a : {u, v}) {
        Vertex b = (a == u) ? v : u;
        int i = pos_[a][b];
        Vertex moved = adj_[a].back();
        adj_[a][i] = moved;
        pos_[a][moved] = i;
        adj_[a].pop_back();
        pos_[a].erase(b);
        if (adj_[a].empty()) nonzero_remove(a);
    }
    --m_;
}

void DynamicGraph::apply(const UpdateEvent& e) {
    if (e.kind == UpdateKind::Insert)
        insert_edge(e.u, e.v);
    else
        delete_edge(e.u, e.v);
}

int DynamicGraph::max_degree() const {
    int d = 0;
    for (Vertex v : nonzero_)
        if (degree(v) > d) d = degree(v);
    return d;
}

} // namespace dynmis
