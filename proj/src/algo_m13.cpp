#include "dynmis/algo_m13.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace dynmis {

EpochParams EpochParams::for_edge_count(long long m) {
    EpochParams ep;
    ep.m_est = std::max<long long>(1, m);
    double md = static_cast<double>(ep.m_est);
    ep.p = std::pow(md, -1.0 / 3.0);
    double m23 = std::pow(md, 2.0 / 3.0);
    double m13 = std::pow(md, 1.0 / 3.0);
    ep.high_threshold = m23;
    ep.T = std::max<long long>(1, static_cast<long long>(std::floor(m23 / 6.0)));
    double lnm = std::max(1.0, std::log(md));
    ep.delta_cap = static_cast<long long>(std::ceil(5.0 * m13 * lnm));
    ep.i_move_cap = std::max<long long>(1, static_cast<long long>(std::ceil(m13)));
    ep.low_degree_cap = static_cast<long long>(std::ceil(7.0 / 6.0 * m23));
    return ep;
}

M13Runner::M13Runner(int n, uint64_t seed)
    : g_(n), rng_(SplitMix64(seed).split(0x6d313373)), low_(n, &meter_) {
    label_.assign(n, L);
    mis_h_.assign(n, 0);
    mh_cnt_.assign(n, 0);
    coin_drawn_.assign(n, 0);
    is_high_.assign(n, 0);
    high_l_.resize(n);
    start_epoch();
}

void M13Runner::start_epoch() {
    epoch_ = EpochParams::for_edge_count(g_.edge_count());
    start_phase();
}

void M13Runner::restart_epoch_with(long long m_est_override) {
    epoch_ = EpochParams::for_edge_count(m_est_override);
    start_phase();
}

void M13Runner::start_phase() {
    // lazy preprocessing: only vertices with non-zero degree toss coins now
    const int n = g_.vertex_count();
    std::vector<char> h(n, 0), drawn(n, 0);
    std::vector<Vertex> order(g_.non_isolated());
    std::sort(order.begin(), order.end());
    for (Vertex v : order) {
        drawn[v] = 1;
        h[v] = rng_.bernoulli(epoch_.p) ? 1 : 0;
    }
    meter_.charge(order.size() + 1);
    build_phase(h, drawn);
}

void M13Runner::restart_phase_with(const std::vector<char>& h_mask) {
    std::vector<char> drawn(g_.vertex_count(), 1);
    build_phase(h_mask, drawn);
}

void M13Runner::build_phase(const std::vector<char>& h_mask, const std::vector<char>& coin_drawn) {
    const int n = g_.vertex_count();
    coin_drawn_ = coin_drawn;

    MisSet mh = greedy_mis(g_, [&](Vertex v) { return h_mask[v] != 0; });
    mis_h_ = mh.in;

    std::fill(mh_cnt_.begin(), mh_cnt_.end(), 0);
    uint64_t work = n;
    for (Vertex x : g_.non_isolated()) {
        if (h_mask[x]) work += g_.degree(x);
        if (!mis_h_[x]) continue;
        for (Vertex w : g_.neighbors(x)) {
            ++mh_cnt_[w];
            ++work;
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (h_mask[v])
            label_[v] = H;
        else
            label_[v] = mh_cnt_[v] > 0 ? I : L;
    }
    work += n;

    // V_high is fixed per phase from degrees in the phase-start graph
    for (Vertex v : v_high_) {
        is_high_[v] = 0;
        high_l_[v].clear();
    }
    v_high_.clear();
    for (Vertex v : g_.non_isolated()) {
        ++work;
        if (static_cast<double>(g_.degree(v)) >= epoch_.high_threshold - 1e-9) {
            v_high_.push_back(v);
            is_high_[v] = 1;
        }
    }
    std::sort(v_high_.begin(), v_high_.end());
    assert(static_cast<double>(v_high_.size()) <=
           4.0 * std::pow(static_cast<double>(epoch_.m_est), 1.0 / 3.0) + 1e-9);
    for (Vertex v : v_high_) {
        for (Vertex w : g_.neighbors(v)) {
            ++work;
            if (label_[w] == L) high_l_[v].insert(w);
        }
    }
    meter_.charge(work);

    low_.init_from_graph(g_, [&](Vertex v) { return label_[v] == L; });
    moves_itl_ = 0;
    age_ = 0;
    meter_.note_degree(low_.graph().max_degree());
}

void M13Runner::draw_lazy_coin(Vertex v) {
    coin_drawn_[v] = 1;
    meter_.charge(1);
    if (rng_.bernoulli(epoch_.p)) promote_lazy_h(v);
}

// A previously isolated vertex whose coin lands in H behaves as if it had
// been in H all phase: isolated in G[H] at phase start, so it is in M_H,
// and no other vertex's classification depended on it.
void M13Runner::promote_lazy_h(Vertex v) {
    assert(g_.degree(v) == 0);
    if (label_[v] == L && low_.active(v)) low_.deactivate(v);
    label_[v] = H;
    mis_h_[v] = 1;
    meter_.charge(1);
}

std::vector<Vertex> M13Runner::low_neighbors_of(Vertex v) {
    std::vector<Vertex> out;
    if (is_high_[v]) {
        out.assign(high_l_[v].begin(), high_l_[v].end());
        std::sort(out.begin(), out.end());
        meter_.charge(out.size() + 1);
    } else {
        // V_low degree stays below (7/6) m_est^{2/3} all phase
        assert(g_.degree(v) <= epoch_.low_degree_cap);
        for (Vertex w : g_.neighbors(v))
            if (label_[w] == L) out.push_back(w);
        meter_.charge(g_.degree(v) + 1);
    }
    return out;
}

void M13Runner::broadcast_move(Vertex v, bool into_l) {
    // every L<->I move informs all V_high vertices
    for (Vertex h : v_high_) {
        if (h == v) continue;
        if (g_.has_edge(h, v)) {
            if (into_l)
                high_l_[h].insert(v);
            else
                high_l_[h].erase(v);
        }
    }
    meter_.charge(v_high_.size() + 1);
}

std::optional<PhaseCause> M13Runner::feed(const UpdateEvent& e) {
    const Vertex u = e.u, v = e.v;
    const bool ins = e.kind == UpdateKind::Insert;

    // epoch boundary first; its restart subsumes the phase restart
    long long m_after = g_.edge_count() + (ins ? 1 : -1);
    if (!epoch_.live(m_after)) {
        g_.apply(e);
        meter_.charge(1);
        return PhaseCause::EPOCH;
    }

    if (ins) {
        if (!coin_drawn_[u]) draw_lazy_coin(u);
        if (!coin_drawn_[v]) draw_lazy_coin(v);
    }

    if (label_[u] == H && label_[v] == H) {
        g_.apply(e);
        meter_.charge(1);
        return PhaseCause::TH;
    }

    g_.apply(e);
    meter_.charge(1);

    bool tl = false;
    auto check_cap = [&](Vertex x) {
        int d = low_.graph().degree(x);
        meter_.note_degree(d);
        if (d > epoch_.delta_cap) tl = true;
    };

    const uint8_t lu = label_[u], lv = label_[v];
    if (lu == L && lv == L) {
        low_.edge_update(e);
        if (ins) {
            check_cap(u);
            check_cap(v);
        }
    } else if (lu != H && lv != H) {
        // I-I or I-L
    } else {
        const Vertex a = (lu == H) ? u : v;
        const Vertex b = (lu == H) ? v : u;
        if (mis_h_[a]) {
            if (ins) {
                ++mh_cnt_[b];
                meter_.charge(1);
                if (label_[b] == L) {
                    label_[b] = I;
                    low_.deactivate(b);
                    broadcast_move(b, false);
                }
            } else {
                --mh_cnt_[b];
                meter_.charge(1);
                if (label_[b] == I && mh_cnt_[b] == 0) {
                    label_[b] = L;
                    std::vector<Vertex> nbrs = low_neighbors_of(b);
                    low_.activate(b, nbrs);
                    broadcast_move(b, true);
                    ++moves_itl_;
                    check_cap(b);
                    for (Vertex w : nbrs) check_cap(w);
                }
            }
        }
    }

    // keep the explicit L-neighbor lists in step with the edge itself
    for (int side = 0; side < 2; ++side) {
        Vertex x = side == 0 ? u : v;
        Vertex y = side == 0 ? v : u;
        if (is_high_[x] && label_[y] == L) {
            if (ins)
                high_l_[x].insert(y);
            else
                high_l_[x].erase(y);
        }
    }
    meter_.charge(2);

    ++age_;
    if (moves_itl_ >= epoch_.i_move_cap) return PhaseCause::TI;
    if (tl) return PhaseCause::TL;
    if (age_ >= epoch_.T) return PhaseCause::TEXP;
    return std::nullopt;
}

void M13Runner::apply_update(const UpdateEvent& e) {
    auto ended = feed(e);
    if (!ended) return;
    meter_.phase_end(*ended);
    if (*ended == PhaseCause::EPOCH)
        start_epoch(); // re-anchors m_est and rebuilds the phase
    else
        start_phase(); // rebuilds from the already-updated graph
}

MisSet M13Runner::current_mis() const {
    const int n = g_.vertex_count();
    MisSet s(n);
    for (Vertex v = 0; v < n; ++v)
        s.in[v] = mis_h_[v] || low_.in_mis(v);
    return s;
}

bool M13Runner::audit(std::string* why) const {
    const int n = g_.vertex_count();
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (!epoch_.live(g_.edge_count()) && g_.edge_count() != 0)
        return fail("edge count outside live epoch window");
    MisSet mh(n);
    mh.in = mis_h_;
    auto vr = verify_mis(g_, mh, [&](Vertex v) { return label_[v] == H; });
    if (!vr.ok()) return fail("M_H invalid: " + vr.describe());
    for (Vertex v = 0; v < n; ++v) {
        int c = 0;
        for (Vertex w : g_.neighbors(v)) c += mis_h_[w] != 0;
        if (label_[v] != H && c != mh_cnt_[v])
            return fail("mh_cnt mismatch at " + std::to_string(v));
        uint8_t expect = label_[v] == H ? H : (c > 0 ? I : L);
        if (label_[v] != expect) return fail("label mismatch at " + std::to_string(v));
        if (label_[v] == L) {
            if (!low_.active(v)) return fail("L vertex missing from engine");
            int dl = 0;
            for (Vertex w : g_.neighbors(v)) dl += label_[w] == L;
            if (dl != low_.graph().degree(v)) return fail("G[L] degree mismatch");
            if (dl > epoch_.delta_cap) return fail("delta_cap exceeded in live phase");
        } else if (low_.active(v)) {
            return fail("non-L vertex active in engine");
        }
        if (is_high_[v]) {
            // high lists must equal adj ∩ L exactly
            size_t expect_sz = 0;
            for (Vertex w : g_.neighbors(v)) {
                if (label_[w] == L) {
                    ++expect_sz;
                    if (!high_l_[v].count(w)) return fail("high_l missing neighbor");
                }
            }
            if (expect_sz != high_l_[v].size()) return fail("high_l stale entry");
        } else if (!g_.neighbors(v).empty() &&
                   static_cast<double>(g_.degree(v)) > epoch_.low_degree_cap) {
            return fail("V_low degree above 7/6 m^{2/3}");
        }
    }
    std::string dwhy;
    if (!low_.audit(&dwhy)) return fail("engine: " + dwhy);
    auto full = verify_mis(g_, current_mis());
    if (!full.ok()) return fail("combined MIS: " + full.describe());
    return true;
}

std::pair<MisSet, WorkMeter> m13_run(int n, const std::vector<UpdateEvent>& updates,
                                     uint64_t seed) {
    M13Runner r(n, seed);
    for (const auto& e : updates) r.apply_update(e);
    return {r.current_mis(), r.meter()};
}

} // namespace dynmis
