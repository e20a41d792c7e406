#pragma once

#include <string>
#include <vector>

#include "dynmis/graph.hpp"

namespace dynmis {

// An independent set over the fixed universe, stored as a membership vector.
struct MisSet {
    std::vector<char> in;

    MisSet() = default;
    explicit MisSet(int n) : in(n, 0) {}

    int universe() const { return static_cast<int>(in.size()); }
    bool contains(Vertex v) const { return in[v] != 0; }
    void add(Vertex v) { in[v] = 1; }

    int size() const {
        int s = 0;
        for (char c : in) s += (c != 0);
        return s;
    }

    std::vector<Vertex> members() const {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < universe(); ++v)
            if (in[v]) out.push_back(v);
        return out;
    }

    bool operator==(const MisSet&) const = default;
};

struct VerifyResult {
    enum Kind { Valid, NotIndependent, NotMaximal, NotInMask } kind = Valid;
    Vertex u = -1;
    Vertex v = -1;

    bool ok() const { return kind == Valid; }
    std::string describe() const;
};

// Lexicographically-first greedy MIS of g restricted to vertices satisfying
// mask: vertices are visited in increasing id and join iff no smaller-id
// neighbor (within the mask) joined before them.
template <typename Pred>
MisSet greedy_mis(const DynamicGraph& g, Pred&& mask) {
    const int n = g.vertex_count();
    MisSet s(n);
    for (Vertex v = 0; v < n; ++v) {
        if (!mask(v)) continue;
        bool blocked = false;
        for (Vertex w : g.neighbors(v)) {
            if (w < v && s.in[w] && mask(w)) {
                blocked = true;
                break;
            }
        }
        if (!blocked) s.in[v] = 1;
    }
    return s;
}

MisSet greedy_mis(const DynamicGraph& g);

// Checks independence and maximality of s on the subgraph induced by mask;
// returns a concrete witness on failure.
template <typename Pred>
VerifyResult verify_mis(const DynamicGraph& g, const MisSet& s, Pred&& mask) {
    const int n = g.vertex_count();
    for (Vertex v = 0; v < n; ++v) {
        if (s.in[v]) {
            if (!mask(v)) return {VerifyResult::NotInMask, v, -1};
            for (Vertex w : g.neighbors(v))
                if (s.in[w] && mask(w))
                    return {VerifyResult::NotIndependent, std::min(v, w), std::max(v, w)};
        } else if (mask(v)) {
            bool covered = false;
            for (Vertex w : g.neighbors(v)) {
                if (s.in[w] && mask(w)) {
                    covered = true;
                    break;
                }
            }
            if (!covered) return {VerifyResult::NotMaximal, v, -1};
        }
    }
    return {};
}

VerifyResult verify_mis(const DynamicGraph& g, const MisSet& s);

// Independent oracle for tests: re-derives the lexicographically-first MIS by
// direct simulation of the ordering definition, rescanning all lower-id
// members for each vertex. Guarded to n <= 20.
MisSet brute_force_lex_mis(const DynamicGraph& g);

} // namespace dynmis
