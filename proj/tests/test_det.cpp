#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "dynmis/det_mis.hpp"
#include "dynmis/rng.hpp"

using namespace dynmis;

namespace {
const auto all = [](Vertex) { return true; };
}

TEST_CASE("init builds the greedy MIS with consistent counters") {
    DynamicGraph g(3);
    g.insert_edge(0, 1);
    g.insert_edge(1, 2);
    DetMis d(3);
    d.init_from_graph(g, all);
    CHECK(d.in_mis(0));
    CHECK_FALSE(d.in_mis(1));
    CHECK(d.in_mis(2));
    CHECK(d.count(0) == 0);
    CHECK(d.count(1) == 2);
    CHECK(d.count(2) == 0);

    DynamicGraph tri(3);
    tri.insert_edge(0, 1);
    tri.insert_edge(1, 2);
    tri.insert_edge(0, 2);
    d.init_from_graph(tri, all);
    CHECK(d.snapshot().members() == std::vector<Vertex>{0});
    CHECK(d.count(1) == 1);
    CHECK(d.count(2) == 1);
}

TEST_CASE("conflicting insertion evicts the larger id") {
    DynamicGraph g(3);
    DetMis d(3);
    d.init_from_graph(g, all);
    CHECK(d.snapshot().members() == std::vector<Vertex>{0, 1, 2});
    g.insert_edge(0, 1);
    d.edge_insert(0, 1);
    CHECK(d.snapshot().members() == std::vector<Vertex>{0, 2});
    CHECK(d.count(1) == 1);
    CHECK(verify_mis(g, d.snapshot()).ok());
}

TEST_CASE("deletions re-admit uncovered vertices") {
    DynamicGraph g(3);
    g.insert_edge(0, 1);
    g.insert_edge(1, 2);
    DetMis d(3);
    d.init_from_graph(g, all);

    SUBCASE("still blocked by the other member") {
        g.delete_edge(0, 1);
        d.edge_delete(0, 1);
        CHECK(d.count(1) == 1);
        CHECK(d.snapshot().members() == std::vector<Vertex>{0, 2});
        CHECK(verify_mis(g, d.snapshot()).ok());
    }

    SUBCASE("triangle delete lets 1 join") {
        DynamicGraph tri(3);
        tri.insert_edge(0, 1);
        tri.insert_edge(1, 2);
        tri.insert_edge(0, 2);
        d.init_from_graph(tri, all);
        tri.delete_edge(0, 1);
        d.edge_delete(0, 1);
        CHECK(d.snapshot().members() == std::vector<Vertex>{0, 1});
        CHECK(d.count(2) == 2);
        CHECK(verify_mis(tri, d.snapshot()).ok());
    }
}

TEST_CASE("vertex activation") {
    DynamicGraph g(4);
    g.insert_edge(0, 1);
    g.insert_edge(2, 3);
    DetMis d(4);

    SUBCASE("isolated vertex joins") {
        d.init_from_graph(g, [](Vertex v) { return v < 2; });
        d.activate(2, {});
        CHECK(d.in_mis(2));
    }
    SUBCASE("vertex next to a member stays out") {
        d.init_from_graph(g, [](Vertex v) { return v < 2; });
        d.activate(2, {0});
        // 0 is in the MIS, so 2 is blocked with count 1
        CHECK_FALSE(d.in_mis(2));
        CHECK(d.count(2) == 1);
    }
    SUBCASE("vertex next to two non-members joins and bumps their counters") {
        DynamicGraph h(4);
        h.insert_edge(0, 1);
        h.insert_edge(0, 2);
        h.insert_edge(3, 1);
        h.insert_edge(3, 2);
        d.init_from_graph(h, [](Vertex v) { return v != 3; });
        CHECK(d.snapshot().members() == std::vector<Vertex>{0});
        int c1 = d.count(1), c2 = d.count(2);
        d.activate(3, {1, 2});
        CHECK(d.in_mis(3));
        CHECK(d.count(1) == c1 + 1);
        CHECK(d.count(2) == c2 + 1);
        std::string why;
        CHECK(d.audit(&why));
    }
}

TEST_CASE("vertex deactivation cascades in id order") {
    SUBCASE("non-member leaves quietly") {
        DynamicGraph g(3);
        g.insert_edge(0, 1);
        DetMis d(3);
        d.init_from_graph(g, all);
        d.deactivate(1);
        CHECK(d.snapshot().members() == std::vector<Vertex>{0, 2});
    }
    SUBCASE("path end removal") {
        DynamicGraph g(3);
        g.insert_edge(0, 1);
        g.insert_edge(1, 2);
        DetMis d(3);
        d.init_from_graph(g, all);
        d.deactivate(0);
        CHECK(d.count(1) == 1);
        CHECK(d.snapshot().members() == std::vector<Vertex>{2});
    }
    SUBCASE("star center removal admits all leaves") {
        DynamicGraph g(5);
        for (Vertex leaf = 1; leaf < 5; ++leaf) g.insert_edge(0, leaf);
        DetMis d(5);
        d.init_from_graph(g, all);
        CHECK(d.snapshot().members() == std::vector<Vertex>{0});
        d.deactivate(0);
        CHECK(d.snapshot().members() == std::vector<Vertex>{1, 2, 3, 4});
        std::string why;
        CHECK(d.audit(&why));
    }
}

TEST_CASE("oracle sweep over random toggles keeps a valid MIS") {
    const int n = 48;
    SplitMix64 rng(3);
    DynamicGraph g(n);
    DetMis d(n);
    d.init_from_graph(g, all);
    for (int step = 0; step < 6000; ++step) {
        Vertex u = static_cast<Vertex>(rng.next_below(n));
        Vertex v = static_cast<Vertex>(rng.next_below(n - 1));
        if (v >= u) ++v;
        UpdateEvent e = g.has_edge(u, v) ? UpdateEvent::remove(u, v) : UpdateEvent::insert(u, v);
        g.apply(e);
        d.edge_update(e);
        if (step % 5 == 0) {
            REQUIRE(verify_mis(g, d.snapshot()).ok());
            std::string why;
            REQUIRE_MESSAGE(d.audit(&why), why);
        }
    }
}

TEST_CASE("determinism: identical sequences give identical states") {
    const int n = 32;
    auto run = [&] {
        SplitMix64 rng(17);
        DynamicGraph g(n);
        WorkMeter m;
        DetMis d(n, &m);
        d.init_from_graph(g, all);
        for (int step = 0; step < 3000; ++step) {
            Vertex u = static_cast<Vertex>(rng.next_below(n));
            Vertex v = static_cast<Vertex>(rng.next_below(n - 1));
            if (v >= u) ++v;
            UpdateEvent e =
                g.has_edge(u, v) ? UpdateEvent::remove(u, v) : UpdateEvent::insert(u, v);
            g.apply(e);
            d.edge_update(e);
        }
        return std::make_pair(d.snapshot(), m.work_units);
    };
    auto a = run(), b = run();
    CHECK(a.first == b.first);
    CHECK(a.second == b.second);
}

TEST_CASE("meter growth stays within the m + K*D regression envelope") {
    const int n = 96;
    SplitMix64 rng(23);
    DynamicGraph g(n);
    WorkMeter m;
    DetMis d(n, &m);
    d.init_from_graph(g, all);
    uint64_t init_cost = m.work_units;
    const int K = 20000;
    int max_deg = 0;
    for (int step = 0; step < K; ++step) {
        Vertex u = static_cast<Vertex>(rng.next_below(n));
        Vertex v = static_cast<Vertex>(rng.next_below(n - 1));
        if (v >= u) ++v;
        UpdateEvent e = g.has_edge(u, v) ? UpdateEvent::remove(u, v) : UpdateEvent::insert(u, v);
        g.apply(e);
        d.edge_update(e);
        max_deg = std::max(max_deg, std::max(g.degree(u), g.degree(v)));
    }
    const uint64_t envelope =
        16ull * (init_cost + static_cast<uint64_t>(K) * static_cast<uint64_t>(max_deg));
    CHECK(m.work_units <= envelope);
}
