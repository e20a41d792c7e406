#include "dynmis/algo_sqrtn.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "dynmis/mis_oracle.hpp"

namespace dynmis {

std::vector<double> solve_exponent_chain(int R) {
    if (R < 1) throw std::invalid_argument("solve_exponent_chain: R >= 1 required");
    std::vector<double> e(R);
    double pow_r = std::ldexp(1.0, R); // 2^R
    double e_last = pow_r / (2.0 * pow_r - 1.0);
    e[R - 1] = e_last;
    for (int r = R - 1; r >= 1; --r)
        e[r - 1] = 2.0 * e[r] + (e_last - 1.0);
    // the chain must close: n^2/D_1^2 = n D_{r-1}/D_r^2 = D_R in exponents
    assert(std::abs((2.0 - 2.0 * e[0]) - e_last) < 1e-9);
    for (int r = 1; r < R; ++r)
        assert(std::abs((1.0 + e[r - 1] - 2.0 * e[r]) - e_last) < 1e-9);
    return e;
}

LevelParams LevelParams::for_fixed_r(int n, int R) {
    LevelParams lp;
    lp.R = R;
    lp.e = solve_exponent_chain(R);
    double lnn = std::max(1.0, std::log(static_cast<double>(n)));
    lp.p.resize(R);
    lp.delta.resize(R);
    lp.T.resize(R);
    lp.touched_cap.resize(R);
    for (int r = 0; r < R; ++r) {
        double draw = std::pow(static_cast<double>(n), lp.e[r]);
        lp.delta[r] = static_cast<long long>(std::ceil(draw));
        lp.p[r] = 5.0 * lnn / draw;
        double t = 1.0 / (24.0 * lp.p[r] * lp.p[r]);
        lp.T[r] = std::max<long long>(1, static_cast<long long>(std::floor(std::min(t, 4.0e18))));
        lp.touched_cap[r] = static_cast<long long>(std::ceil(1.0 / lp.p[r]));
    }
    return lp;
}

LevelParams LevelParams::for_vertex_count(int n) {
    if (n < 4) return LevelParams{}; // det fallback
    double llog = std::log2(std::log2(static_cast<double>(n)));
    int r_target = std::max(1, static_cast<int>(std::llround(2.0 * llog)));
    for (int R = r_target; R >= 1; --R) {
        LevelParams lp = for_fixed_r(n, R);
        bool ok = lp.p[0] >= 1.0 / n && lp.p[R - 1] <= 1.0;
        for (int r = 1; r < R && ok; ++r) {
            // level spacing: Delta_{r-1} >= 2 Delta_r, i.e. p_r >= 2 p_{r-1}
            if (lp.p[r] < 2.0 * lp.p[r - 1]) ok = false;
        }
        if (ok) return lp;
    }
    return LevelParams{}; // det fallback
}

SqrtnRunner::SqrtnRunner(int n, uint64_t seed)
    : SqrtnRunner(n, seed, LevelParams::for_vertex_count(n)) {}

SqrtnRunner::SqrtnRunner(int n, uint64_t seed, LevelParams params)
    : g_(n), rng_(SplitMix64(seed).split(0x73717274)), params_(std::move(params)),
      star_(n, &meter_) {
    all_vertices_.resize(n);
    for (Vertex v = 0; v < n; ++v) all_vertices_[v] = v;
    const int R = params_.R;
    kind_.assign(n, KL);
    lev_.assign(n, R + 1);
    if (params_.det_fallback()) {
        star_.init_from_graph(g_, [](Vertex) { return true; });
        return;
    }
    h_tilde_.assign(R, std::vector<char>(n, 0));
    mis_.assign(R, std::vector<char>(n, 0));
    mcnt_.assign(R, std::vector<int>(n, 0));
    level_graph_.assign(R, SubGraph(n));
    touched_.assign(R, 0);
    age_.assign(R, 0);
    level_preprocess(1);
}

const std::vector<Vertex>& SqrtnRunner::domain_of(int r) const {
    return r == 1 ? all_vertices_ : level_graph_[r - 2].vertices();
}

void SqrtnRunner::level_preprocess(int r) {
    const int n = g_.vertex_count();
    const int R = params_.R;
    for (int rho = r; rho <= R; ++rho) {
        uint64_t work = 0;
        auto& ht = h_tilde_[rho - 1];
        for (Vertex v = 0; v < n; ++v)
            ht[v] = rng_.bernoulli(params_.p[rho - 1]) ? 1 : 0;
        work += n;

        // H^rho = H~^rho ∩ L^{rho-1}, frozen for this phase; the domain list
        // lives one level up and is not touched while rebuilding this level
        const std::vector<Vertex>& dom = domain_of(rho);
        std::vector<Vertex> hs;
        for (Vertex v : dom)
            if (ht[v]) hs.push_back(v);
        std::sort(hs.begin(), hs.end());
        work += dom.size();

        auto& mis = mis_[rho - 1];
        std::fill(mis.begin(), mis.end(), 0);
        auto& mc = mcnt_[rho - 1];
        // blank slate: stale classes from the torn-down phase must not leak
        for (Vertex v : dom) {
            mc[v] = 0;
            kind_[v] = KL;
            lev_[v] = R + 1;
        }
        work += n + dom.size();

        // M^rho = Greedy over G[H^rho]; scans stay inside G^{rho-1}
        for (Vertex v : hs) {
            kind_[v] = KH;
            lev_[v] = rho;
        }
        auto member_scan = [&](Vertex v) {
            if (rho == 1) {
                for (Vertex w : g_.neighbors(v)) {
                    ++work;
                    if (kind_[w] == KH && lev_[w] == rho && mis[w]) return true;
                }
            } else {
                for (const auto& a : level_graph_[rho - 2].arcs(v)) {
                    ++work;
                    if (kind_[a.to] == KH && lev_[a.to] == rho && mis[a.to]) return true;
                }
            }
            return false;
        };
        for (Vertex v : hs)
            if (!member_scan(v)) mis[v] = 1;

        // count M^rho neighbors for the I/L split of the rest of L^{rho-1}
        for (Vertex x : hs) {
            if (!mis[x]) continue;
            if (rho == 1) {
                for (Vertex w : g_.neighbors(x)) {
                    ++mc[w];
                    ++work;
                }
            } else {
                for (const auto& a : level_graph_[rho - 2].arcs(x)) {
                    ++mc[a.to];
                    ++work;
                }
            }
        }
        SubGraph& lg = level_graph_[rho - 1];
        lg.clear();
        for (Vertex v : dom) {
            ++work;
            if (kind_[v] == KH && lev_[v] == rho) continue;
            if (mc[v] > 0) {
                kind_[v] = KI;
                lev_[v] = rho;
            } else {
                kind_[v] = KL;
                lev_[v] = R + 1; // tentative; deeper levels may capture
                lg.add_vertex(v);
            }
        }
        // explicit level graph G^rho = G[L^rho]
        for (Vertex v : lg.vertices()) {
            if (rho == 1) {
                for (Vertex w : g_.neighbors(v)) {
                    ++work;
                    if (w > v && lev_[w] > rho) lg.add_edge(v, w);
                }
            } else {
                for (const auto& a : level_graph_[rho - 2].arcs(v)) {
                    ++work;
                    if (a.to > v && lev_[a.to] > rho) lg.add_edge(v, a.to);
                }
            }
        }
        meter_.note_degree(lg.max_degree());
        touched_[rho - 1] = 0;
        age_[rho - 1] = 0;
        meter_.charge(work);
    }
    star_.init_from_subgraph(level_graph_[R - 1]);
}

void SqrtnRunner::move_up_to_i(Vertex v, int r, int r_limit) {
    const int R = params_.R;
    int old_lev = lev_[v];
    int stop = std::min(old_lev, r_limit);
    for (int rho = r; rho < stop; ++rho) {
        meter_.charge(level_graph_[rho - 1].degree(v) + 1);
        if (rho == R) star_.deactivate(v);
        level_graph_[rho - 1].remove_vertex(v);
    }
    kind_[v] = KI;
    lev_[v] = r;
    mcnt_[r - 1][v] = 1;
}

bool SqrtnRunner::descend(Vertex v, int from_level, int r_limit, int& tl_level) {
    const int R = params_.R;
    kind_[v] = KL;
    lev_[v] = R + 1;
    for (int target = from_level; target <= R; ++target) {
        if (target >= r_limit) return false; // doomed levels re-classify v
        // neighbors of v inside L^target, read from the level above
        nbr_scratch_.clear();
        uint64_t work = 1;
        if (target == 1) {
            for (Vertex w : g_.neighbors(v)) {
                ++work;
                if (lev_[w] > target) nbr_scratch_.push_back(w);
            }
        } else {
            for (const auto& a : level_graph_[target - 2].arcs(v)) {
                ++work;
                if (lev_[a.to] > target) nbr_scratch_.push_back(a.to);
            }
        }
        SubGraph& lg = level_graph_[target - 1];
        lg.add_vertex(v);
        bool over = false;
        for (Vertex w : nbr_scratch_) {
            lg.add_edge(v, w);
            ++work;
            meter_.note_degree(lg.degree(w));
            if (lg.degree(w) > params_.delta[target - 1]) over = true;
        }
        meter_.note_degree(lg.degree(v));
        if (lg.degree(v) > params_.delta[target - 1]) over = true;
        if (target == R) {
            std::sort(nbr_scratch_.begin(), nbr_scratch_.end());
            star_.activate(v, nbr_scratch_);
        }
        meter_.charge(work);
        if (over) {
            tl_level = target;
            return true;
        }
        if (target < R) {
            // captured by level target+1 iff adjacent to M^{target+1}
            int mc = 0;
            for (Vertex w : nbr_scratch_)
                if (kind_[w] == KH && lev_[w] == target + 1 && mis_[target][w]) ++mc;
            meter_.charge(nbr_scratch_.size());
            if (target + 1 >= r_limit) return false;
            if (mc > 0) {
                // leaves L^{target+1}..: only G^{target} keeps v
                kind_[v] = KI;
                lev_[v] = target + 1;
                mcnt_[target][v] = mc;
                return false;
            }
        }
    }
    return false;
}

bool SqrtnRunner::process_level(int r, const UpdateEvent& e, int r_limit, int& tl_level) {
    const int R = params_.R;
    const Vertex u = e.u, v = e.v;
    const bool ins = e.kind == UpdateKind::Insert;
    const bool uL = lev_[u] > r, vL = lev_[v] > r;
    meter_.charge(2);

    if (uL && vL) {
        SubGraph& lg = level_graph_[r - 1];
        if (ins) {
            lg.add_edge(u, v);
            if (r == R) star_.edge_insert(u, v);
            meter_.charge(2);
            meter_.note_degree(lg.degree(u));
            meter_.note_degree(lg.degree(v));
            if (lg.degree(u) > params_.delta[r - 1] || lg.degree(v) > params_.delta[r - 1]) {
                tl_level = r;
                return true;
            }
        } else {
            lg.remove_edge(u, v);
            if (r == R) star_.edge_delete(u, v);
            meter_.charge(2);
        }
        return false;
    }
    if (!uL && !vL) {
        // both captured at levels <= r; only same-level M^r/I^r counters move
        for (int side = 0; side < 2; ++side) {
            Vertex a = side == 0 ? u : v;
            Vertex b = side == 0 ? v : u;
            if (kind_[a] == KH && lev_[a] == r && mis_[r - 1][a] && kind_[b] == KI &&
                lev_[b] == r) {
                meter_.charge(1);
                if (ins) {
                    ++mcnt_[r - 1][b];
                } else if (--mcnt_[r - 1][b] == 0) {
                    // b detached from M^r: sinks to its new home
                    return descend(b, r, r_limit, tl_level);
                }
                break;
            }
        }
        return false;
    }
    // exactly one endpoint inside L^r
    const Vertex a = uL ? v : u; // captured endpoint
    const Vertex b = uL ? u : v;
    if (kind_[a] == KH && lev_[a] == r && mis_[r - 1][a]) {
        if (ins) {
            // b is now adjacent to M^r and must join I^r
            move_up_to_i(b, r, r_limit);
        } else {
            // an L^r vertex cannot have had an M^r neighbor
            assert(false && "delete between M^r and L^r");
        }
    }
    return false;
}

void SqrtnRunner::apply_update(const UpdateEvent& e) {
    if (params_.det_fallback()) {
        g_.apply(e);
        meter_.charge(1);
        star_.edge_update(e);
        return;
    }
    const int R = params_.R;
    const Vertex u = e.u, v = e.v;

    int hmin_u = R + 1, hmin_v = R + 1;
    for (int r = R; r >= 1; --r) {
        if (h_tilde_[r - 1][u]) hmin_u = r;
        if (h_tilde_[r - 1][v]) hmin_v = r;
    }
    meter_.charge(2 * R);

    // smallest terminating level; TEXP wins classification on a full phase
    int r_star = 0;
    PhaseCause cause = PhaseCause::TEXP;
    for (int r = 1; r <= R; ++r) {
        if (age_[r - 1] >= params_.T[r - 1]) {
            r_star = r;
            cause = PhaseCause::TEXP;
            break;
        }
        if (hmin_u <= r && hmin_v <= r &&
            (h_tilde_[r - 1][u] || h_tilde_[r - 1][v])) {
            r_star = r;
            cause = PhaseCause::TH;
            break;
        }
        bool incident = hmin_u <= r || hmin_v <= r;
        if (incident && touched_[r - 1] + 1 >= params_.touched_cap[r - 1]) {
            r_star = r;
            cause = PhaseCause::TI;
            break;
        }
    }

    g_.apply(e);
    meter_.charge(1);
    for (int r = 1; r <= R; ++r) {
        if (hmin_u <= r || hmin_v <= r) ++touched_[r - 1];
        ++age_[r - 1];
    }
    meter_.charge(R);

    const int r_limit = r_star ? r_star : R + 1;
    int tl_level = 0;
    for (int r = 1; r < r_limit; ++r) {
        if (process_level(r, e, r_limit, tl_level)) {
            r_star = tl_level;
            cause = PhaseCause::TL;
            break;
        }
    }

    if (r_star) {
        meter_.level_phase_end(r_star, cause);
        for (int r = r_star + 1; r <= R; ++r)
            meter_.level_phase_end(r, PhaseCause::PARENT);
        level_preprocess(r_star);
    }
}

MisSet SqrtnRunner::current_mis() const {
    const int n = g_.vertex_count();
    MisSet s(n);
    if (params_.det_fallback()) {
        for (Vertex v = 0; v < n; ++v) s.in[v] = star_.in_mis(v);
        return s;
    }
    for (Vertex v = 0; v < n; ++v)
        s.in[v] = mis_member(v);
    return s;
}

bool SqrtnRunner::audit(std::string* why) const {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const int n = g_.vertex_count();
    if (params_.det_fallback()) {
        std::string dwhy;
        if (!star_.audit(&dwhy)) return fail("engine: " + dwhy);
        auto vr = verify_mis(g_, current_mis());
        return vr.ok() ? true : fail("MIS: " + vr.describe());
    }
    const int R = params_.R;
    std::vector<int> mneigh(R);
    for (Vertex v = 0; v < n; ++v) {
        if (lev_[v] < 1 || lev_[v] > R + 1) return fail("level out of range");
        if (lev_[v] == R + 1 && kind_[v] != KL) return fail("bottom dweller not L-kind");
        if (kind_[v] != KL && lev_[v] > R) return fail("captured vertex above R");
        std::fill(mneigh.begin(), mneigh.end(), 0);
        for (Vertex w : g_.neighbors(v))
            if (kind_[w] == KH && mis_[lev_[w] - 1][w]) ++mneigh[lev_[w] - 1];
        // membership of L^r for r below the home level forbids M^r neighbors
        for (int r = 1; r < lev_[v] && r <= R; ++r)
            if (mneigh[r - 1] > 0)
                return fail("vertex " + std::to_string(v) + " should be captured at level " +
                            std::to_string(r));
        if (kind_[v] == KI) {
            int r = lev_[v];
            if (mneigh[r - 1] <= 0) return fail("I vertex without M neighbor");
            if (mneigh[r - 1] != mcnt_[r - 1][v]) return fail("mcnt mismatch");
        }
        if (kind_[v] == KH) {
            int r = lev_[v];
            if (!h_tilde_[r - 1][v]) return fail("H vertex not sampled");
        }
    }
    // frozen-sample stability: H~^r ∩ L^{r-1} = H^r
    for (int r = 1; r <= R; ++r) {
        for (Vertex v = 0; v < n; ++v) {
            bool in_dom = lev_[v] >= r; // v ∈ L^{r-1}
            bool is_hr = kind_[v] == KH && lev_[v] == r;
            if (h_tilde_[r - 1][v] && in_dom && !is_hr)
                return fail("sample stability broken at level " + std::to_string(r));
        }
        // M^r equals a fresh greedy over G[H^r]
        MisSet fresh = greedy_mis(g_, [&](Vertex v) { return kind_[v] == KH && lev_[v] == r; });
        for (Vertex v = 0; v < n; ++v) {
            bool stored = kind_[v] == KH && lev_[v] == r && mis_[r - 1][v];
            if (stored != (fresh.in[v] != 0)) return fail("frozen M^r no longer greedy MIS");
        }
    }
    // level graphs: exact induced subgraphs with degree caps
    for (int r = 1; r <= R; ++r) {
        const SubGraph& lg = level_graph_[r - 1];
        long long edges = 0;
        int verts = 0;
        for (Vertex v = 0; v < n; ++v) {
            bool inside = lev_[v] > r;
            if (inside != lg.has_vertex(v)) return fail("level graph vertex set mismatch");
            if (!inside) continue;
            ++verts;
            int d = 0;
            for (Vertex w : g_.neighbors(v))
                if (lev_[w] > r) ++d;
            if (d != lg.degree(v)) return fail("level graph degree mismatch");
            if (d > params_.delta[r - 1])
                return fail("degree cap exceeded at level " + std::to_string(r));
            edges += d;
        }
        if (verts != static_cast<int>(lg.vertices().size()) || edges != 2 * lg.edge_count())
            return fail("level graph size mismatch");
        if (touched_[r - 1] >= params_.touched_cap[r - 1])
            return fail("touched budget exceeded in live phase");
    }
    // star engine mirrors G^R
    const SubGraph& gr = level_graph_[R - 1];
    for (Vertex v = 0; v < n; ++v) {
        if (gr.has_vertex(v) != star_.active(v)) return fail("engine vertex set mismatch");
        if (gr.has_vertex(v) && gr.degree(v) != star_.graph().degree(v))
            return fail("engine degree mismatch");
    }
    std::string dwhy;
    if (!star_.audit(&dwhy)) return fail("engine: " + dwhy);
    auto vr = verify_mis(g_, current_mis());
    if (!vr.ok()) return fail("combined MIS: " + vr.describe());
    return true;
}

std::pair<MisSet, WorkMeter> sqrtn_run(int n, const std::vector<UpdateEvent>& updates,
                                       uint64_t seed) {
    SqrtnRunner r(n, seed);
    for (const auto& e : updates) r.apply_update(e);
    return {r.current_mis(), r.meter()};
}

} // namespace dynmis
