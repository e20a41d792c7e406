#include "dynmis/workload.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "dynmis/rng.hpp"

namespace dynmis {

const char* family_name(Family f) {
    switch (f) {
    case Family::UniformToggle: return "uniform";
    case Family::ErBuildTeardown: return "er";
    case Family::SlidingWindow: return "sliding";
    case Family::HubAttack: return "hub";
    case Family::CliqueCycle: return "clique";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "uniform") return Family::UniformToggle;
    if (name == "er") return Family::ErBuildTeardown;
    if (name == "sliding") return Family::SlidingWindow;
    if (name == "hub") return Family::HubAttack;
    if (name == "clique") return Family::CliqueCycle;
    throw std::invalid_argument("unknown workload family: " + name);
}

namespace {

uint64_t pair_key(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (static_cast<uint64_t>(u) << 32) | static_cast<uint32_t>(v);
}

// presence tracker the generators toggle against
struct EdgeState {
    std::unordered_set<uint64_t> present;

    bool has(Vertex u, Vertex v) const { return present.count(pair_key(u, v)) != 0; }
    UpdateEvent toggle(Vertex u, Vertex v) {
        if (u > v) std::swap(u, v);
        uint64_t key = pair_key(u, v);
        auto it = present.find(key);
        if (it == present.end()) {
            present.insert(key);
            return UpdateEvent::insert(u, v);
        }
        present.erase(it);
        return UpdateEvent::remove(u, v);
    }
};

std::pair<Vertex, Vertex> random_pair(SplitMix64& rng, int n) {
    Vertex u = static_cast<Vertex>(rng.next_below(n));
    Vertex v = static_cast<Vertex>(rng.next_below(n - 1));
    if (v >= u) ++v;
    if (u > v) std::swap(u, v);
    return {u, v};
}

std::vector<UpdateEvent> gen_uniform(const WorkloadSpec& s, SplitMix64 rng) {
    EdgeState st;
    std::vector<UpdateEvent> out;
    out.reserve(s.k);
    for (long long i = 0; i < s.k; ++i) {
        auto [u, v] = random_pair(rng, s.n);
        out.push_back(st.toggle(u, v));
    }
    return out;
}

std::vector<UpdateEvent> gen_er(const WorkloadSpec& s, SplitMix64 rng) {
    if (s.k % 2 != 0)
        throw std::invalid_argument("er build/teardown needs an even number of updates");
    // edge universe sampled with probability p_edge, inserted in shuffled
    // order, then deleted in reverse; insert and delete multisets match
    std::vector<std::pair<Vertex, Vertex>> pool;
    for (Vertex u = 0; u < s.n; ++u)
        for (Vertex v = u + 1; v < s.n; ++v)
            if (rng.bernoulli(s.p_edge)) pool.push_back({u, v});
    long long half = s.k / 2;
    if (half > static_cast<long long>(pool.size()))
        throw std::invalid_argument("er spec infeasible: K/2 exceeds sampled edge pool");
    for (size_t i = pool.size(); i > 1; --i)
        std::swap(pool[i - 1], pool[rng.next_below(i)]);
    std::vector<UpdateEvent> out;
    out.reserve(s.k);
    for (long long i = 0; i < half; ++i)
        out.push_back(UpdateEvent::insert(pool[i].first, pool[i].second));
    for (long long i = half - 1; i >= 0; --i)
        out.push_back(UpdateEvent::remove(pool[i].first, pool[i].second));
    return out;
}

std::vector<UpdateEvent> gen_sliding(const WorkloadSpec& s, SplitMix64 rng) {
    long long pairs = static_cast<long long>(s.n) * (s.n - 1) / 2;
    long long window = s.window > 0 ? s.window : 2LL * s.n;
    if (window > pairs)
        throw std::invalid_argument("sliding window larger than the pair universe");
    EdgeState st;
    std::vector<std::pair<Vertex, Vertex>> fifo;
    size_t head = 0;
    std::vector<UpdateEvent> out;
    out.reserve(s.k);
    for (long long i = 0; i < s.k; ++i) {
        if (static_cast<long long>(fifo.size() - head) < window) {
            Vertex u, v;
            do {
                std::tie(u, v) = random_pair(rng, s.n);
            } while (st.has(u, v));
            st.toggle(u, v);
            fifo.push_back({u, v});
            out.push_back(UpdateEvent::insert(u, v));
        } else {
            auto [u, v] = fifo[head++];
            st.toggle(u, v);
            out.push_back(UpdateEvent::remove(u, v));
        }
    }
    return out;
}

std::vector<UpdateEvent> gen_hub(const WorkloadSpec& s, SplitMix64 rng) {
    int hot = std::max(1, std::min(s.hot_set_size, s.n - 1));
    // fixed random hot set
    std::vector<Vertex> ids(s.n);
    for (Vertex v = 0; v < s.n; ++v) ids[v] = v;
    for (int i = 0; i < hot; ++i) {
        size_t j = i + rng.next_below(s.n - i);
        std::swap(ids[i], ids[j]);
    }
    std::vector<Vertex> hotset(ids.begin(), ids.begin() + hot);
    EdgeState st;
    std::vector<UpdateEvent> out;
    out.reserve(s.k);
    for (long long i = 0; i < s.k; ++i) {
        Vertex u, v;
        if (rng.next_double() < s.hot_fraction) {
            u = hotset[rng.next_below(hot)];
            v = static_cast<Vertex>(rng.next_below(s.n - 1));
            if (v >= u) ++v;
        } else {
            std::tie(u, v) = random_pair(rng, s.n);
        }
        out.push_back(st.toggle(u, v));
    }
    return out;
}

std::vector<UpdateEvent> gen_clique(const WorkloadSpec& s, SplitMix64) {
    int c = std::max(2, std::min(s.clique_size, s.n));
    std::vector<UpdateEvent> out;
    out.reserve(s.k);
    int offset = 0;
    bool building = true;
    int a = 0, b = 1;
    auto vid = [&](int i) { return static_cast<Vertex>((offset + i) % s.n); };
    for (long long i = 0; i < s.k; ++i) {
        Vertex u = vid(a), v = vid(b);
        if (u > v) std::swap(u, v);
        out.push_back(building ? UpdateEvent::insert(u, v) : UpdateEvent::remove(u, v));
        if (++b == c) {
            if (++a == c - 1) {
                a = 0;
                if (!building) offset = (offset + c) % s.n;
                building = !building;
            }
            b = a + 1;
        }
    }
    return out;
}

} // namespace

std::vector<UpdateEvent> generate(const WorkloadSpec& spec) {
    if (spec.n < 2) throw std::invalid_argument("workload needs n >= 2");
    if (spec.k < 0) throw std::invalid_argument("workload needs K >= 0");
    SplitMix64 rng = SplitMix64(spec.seed).split(0x776b6c64 + static_cast<int>(spec.family));
    switch (spec.family) {
    case Family::UniformToggle: return gen_uniform(spec, rng);
    case Family::ErBuildTeardown: return gen_er(spec, rng);
    case Family::SlidingWindow: return gen_sliding(spec, rng);
    case Family::HubAttack: return gen_hub(spec, rng);
    case Family::CliqueCycle: return gen_clique(spec, rng);
    }
    throw std::invalid_argument("unknown family");
}

void write_updates(std::ostream& out, int n, const std::vector<UpdateEvent>& seq) {
    out << "n " << n << "\n";
    for (const auto& e : seq) {
        Vertex u = std::min(e.u, e.v), v = std::max(e.u, e.v);
        out << (e.kind == UpdateKind::Insert ? '+' : '-') << ' ' << u << ' ' << v << "\n";
    }
}

void write_updates_file(const std::string& path, int n, const std::vector<UpdateEvent>& seq) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    write_updates(f, n, seq);
}

std::pair<int, std::vector<UpdateEvent>> read_updates(std::istream& in) {
    std::string line;
    long long lineno = 0;
    auto bad = [&](const std::string& why) {
        throw std::runtime_error("update file line " + std::to_string(lineno) + ": " + why);
    };
    if (!std::getline(in, line)) {
        ++lineno;
        bad("missing header");
    }
    ++lineno;
    int n = 0;
    {
        std::istringstream hs(line);
        std::string tag;
        if (!(hs >> tag >> n) || tag != "n" || n < 1) bad("expected header 'n <N>'");
        std::string extra;
        if (hs >> extra) bad("trailing tokens in header");
    }
    std::vector<UpdateEvent> seq;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) bad("empty line");
        std::istringstream ls(line);
        std::string op;
        long long u, v;
        if (!(ls >> op >> u >> v) || (op != "+" && op != "-")) bad("expected '+ u v' or '- u v'");
        std::string extra;
        if (ls >> extra) bad("trailing tokens");
        if (u < 0 || v < 0 || u >= n || v >= n) bad("vertex outside [0,n)");
        if (u >= v) bad("expected u < v");
        seq.push_back(op == "+" ? UpdateEvent::insert(static_cast<Vertex>(u), static_cast<Vertex>(v))
                                : UpdateEvent::remove(static_cast<Vertex>(u), static_cast<Vertex>(v)));
    }
    return {n, std::move(seq)};
}

std::pair<int, std::vector<UpdateEvent>> read_updates_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open for reading: " + path);
    return read_updates(f);
}

} // namespace dynmis
