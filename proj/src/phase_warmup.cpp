#include "dynmis/phase_warmup.hpp"

#include <algorithm>
#include <cassert>

namespace dynmis {

PhaseParams PhaseParams::from_p(double p, int n) {
    PhaseParams pp;
    pp.p = std::clamp(p, 1e-12, 1.0);
    double t = 1.0 / (6.0 * pp.p * pp.p);
    pp.T = std::max<long long>(1, static_cast<long long>(std::floor(std::min(t, 4.0e18))));
    double lnn = std::max(1.0, std::log(static_cast<double>(n)));
    pp.delta_cap = static_cast<long long>(std::ceil(5.0 * lnn / pp.p));
    pp.i_move_cap = std::max<long long>(1, static_cast<long long>(std::ceil(2.0 / pp.p)));
    return pp;
}

PhaseParams PhaseParams::for_vertex_count(int n) {
    double lnn = std::log(static_cast<double>(n));
    double p = (n <= 1 || lnn <= 0.0) ? 1.0
                                      : std::cbrt(lnn) / std::pow(static_cast<double>(n), 2.0 / 3.0);
    return from_p(p, n);
}

std::pair<std::vector<char>, MisSet> preprocess(const DynamicGraph& g, double p,
                                                SplitMix64& rng) {
    const int n = g.vertex_count();
    std::vector<char> h(n, 0);
    for (Vertex v = 0; v < n; ++v)
        h[v] = rng.bernoulli(p) ? 1 : 0;
    MisSet mh = greedy_mis(g, [&](Vertex v) { return h[v] != 0; });
    return {std::move(h), std::move(mh)};
}

WarmupRunner::WarmupRunner(int n, uint64_t seed)
    : WarmupRunner(n, seed, PhaseParams::for_vertex_count(n)) {}

WarmupRunner::WarmupRunner(int n, uint64_t seed, PhaseParams params)
    : g_(n), params_(params), rng_(SplitMix64(seed).split(0x7761726d)), low_(n, &meter_) {
    label_.assign(n, L);
    mis_h_.assign(n, 0);
    mh_cnt_.assign(n, 0);
    start_phase();
}

void WarmupRunner::start_phase() {
    const int n = g_.vertex_count();
    std::vector<char> h(n, 0);
    for (Vertex v = 0; v < n; ++v)
        h[v] = rng_.bernoulli(params_.p) ? 1 : 0;
    meter_.charge(n);
    build_phase(h);
}

void WarmupRunner::restart_phase_with(const std::vector<char>& h_mask) {
    build_phase(h_mask);
}

void WarmupRunner::build_phase(const std::vector<char>& h_mask) {
    const int n = g_.vertex_count();
    MisSet mh = greedy_mis(g_, [&](Vertex v) { return h_mask[v] != 0; });
    mis_h_ = mh.in;

    std::fill(mh_cnt_.begin(), mh_cnt_.end(), 0);
    uint64_t work = n;
    for (Vertex x = 0; x < n; ++x) {
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
    meter_.charge(work);

    low_.init_from_graph(g_, [&](Vertex v) { return label_[v] == L; });
    moves_itl_ = 0;
    age_ = 0;
    meter_.note_degree(low_.graph().max_degree());
}

std::vector<Vertex> WarmupRunner::low_neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex w : g_.neighbors(v))
        if (label_[w] == L) out.push_back(w);
    return out;
}

bool WarmupRunner::degree_over_cap(Vertex v) const {
    int d = low_.graph().degree(v);
    return d > params_.delta_cap;
}

std::optional<PhaseCause> WarmupRunner::feed(const UpdateEvent& e) {
    const Vertex u = e.u, v = e.v;
    const bool ins = e.kind == UpdateKind::Insert;

    // An update inside H invalidates the frozen M_H: no phase-local
    // processing, the rebuild reads the post-update graph instead.
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
        if (d > params_.delta_cap) tl = true;
    };

    const uint8_t lu = label_[u], lv = label_[v];
    if (lu == L && lv == L) {
        low_.edge_update(e);
        if (ins) {
            check_cap(u);
            check_cap(v);
        }
    } else if (lu != H && lv != H) {
        // I-I or I-L: partition unaffected
    } else {
        // exactly one endpoint in H
        const Vertex a = (lu == H) ? u : v; // H endpoint
        const Vertex b = (lu == H) ? v : u;
        if (mis_h_[a]) {
            if (ins) {
                ++mh_cnt_[b];
                meter_.charge(1);
                if (label_[b] == L) {
                    // L -> I: remove b and its edges from G[L]
                    label_[b] = I;
                    low_.deactivate(b);
                }
            } else {
                --mh_cnt_[b];
                meter_.charge(1);
                assert(label_[b] == I);
                if (label_[b] == I && mh_cnt_[b] == 0) {
                    // I -> L: full neighbor scan, then vertex insert into G[L]
                    label_[b] = L;
                    std::vector<Vertex> nbrs = low_neighbors(b);
                    meter_.charge(g_.degree(b));
                    low_.activate(b, nbrs);
                    ++moves_itl_;
                    check_cap(b);
                    for (Vertex w : nbrs) check_cap(w);
                }
            }
        }
        // non-members of M_H in H do not affect the partition
    }

    ++age_;
    if (moves_itl_ >= params_.i_move_cap) return PhaseCause::TI;
    if (tl) return PhaseCause::TL;
    if (age_ >= params_.T) return PhaseCause::TEXP;
    return std::nullopt;
}

void WarmupRunner::apply_update(const UpdateEvent& e) {
    auto ended = feed(e);
    if (!ended) return;
    meter_.phase_end(*ended);
    start_phase(); // rebuilds from the already-updated graph
}

MisSet WarmupRunner::current_mis() const {
    const int n = g_.vertex_count();
    MisSet s(n);
    for (Vertex v = 0; v < n; ++v)
        s.in[v] = mis_h_[v] || low_.in_mis(v);
    return s;
}

bool WarmupRunner::audit(std::string* why) const {
    const int n = g_.vertex_count();
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    // M_H still an MIS of G[H]
    auto vr = verify_mis(g_, [&] {
        MisSet s(n);
        s.in = mis_h_;
        return s;
    }(), [&](Vertex v) { return label_[v] == H; });
    if (!vr.ok()) return fail("M_H invalid: " + vr.describe());
    for (Vertex v = 0; v < n; ++v) {
        if (mis_h_[v] && label_[v] != H) return fail("M_H member outside H");
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
            if (dl > params_.delta_cap) return fail("delta_cap exceeded in live phase");
        } else if (low_.active(v)) {
            return fail("non-L vertex active in engine");
        }
    }
    std::string dwhy;
    if (!low_.audit(&dwhy)) return fail("engine: " + dwhy);
    auto full = verify_mis(g_, current_mis());
    if (!full.ok()) return fail("combined MIS: " + full.describe());
    if (moves_itl_ > params_.i_move_cap) return fail("I->L move budget exceeded");
    return true;
}

std::pair<MisSet, WorkMeter> warmup_run(int n, const std::vector<UpdateEvent>& updates,
                                        uint64_t seed) {
    WarmupRunner r(n, seed);
    for (const auto& e : updates) r.apply_update(e);
    return {r.current_mis(), r.meter()};
}

} // namespace dynmis
