#include "dynmis/mis_oracle.hpp"

namespace dynmis {

std::string VerifyResult::describe() const {
    switch (kind) {
    case Valid: return "Valid";
    case NotIndependent:
        return "NotIndependent(" + std::to_string(u) + "," + std::to_string(v) + ")";
    case NotMaximal: return "NotMaximal(" + std::to_string(u) + ")";
    case NotInMask: return "NotInMask(" + std::to_string(u) + ")";
    }
    return "?";
}

namespace {
struct AllMask {
    bool operator()(Vertex) const { return true; }
};
} // namespace

MisSet greedy_mis(const DynamicGraph& g) { return greedy_mis(g, AllMask{}); }

VerifyResult verify_mis(const DynamicGraph& g, const MisSet& s) {
    return verify_mis(g, s, AllMask{});
}

MisSet brute_force_lex_mis(const DynamicGraph& g) {
    const int n = g.vertex_count();
    if (n > 20)
        throw std::invalid_argument("brute_force_lex_mis: oracle guard n <= 20");
    std::vector<Vertex> chosen;
    MisSet s(n);
    for (Vertex v = 0; v < n; ++v) {
        bool eligible = true;
        for (Vertex m : chosen) {
            if (g.has_edge(m, v)) {
                eligible = false;
                break;
            }
        }
        if (eligible) {
            chosen.push_back(v);
            s.in[v] = 1;
        }
    }
    return s;
}

} // namespace dynmis
