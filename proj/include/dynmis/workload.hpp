#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dynmis/graph.hpp"

namespace dynmis {

enum class Family { UniformToggle, ErBuildTeardown, SlidingWindow, HubAttack, CliqueCycle };

const char* family_name(Family f);
Family family_from_name(const std::string& name);

// Oblivious-adversary update sequences: a spec fully determines its sequence
// before any algorithm runs, and generation is bit-exact in (family,n,K,seed).
struct WorkloadSpec {
    Family family = Family::UniformToggle;
    int n = 2;
    long long k = 0;
    uint64_t seed = 0;

    // family parameters
    double p_edge = 0.5;      // ErBuildTeardown
    long long window = 0;     // SlidingWindow; 0 -> 2n default
    int hot_set_size = 4;     // HubAttack
    double hot_fraction = 0.8;
    int clique_size = 8;      // CliqueCycle
};

std::vector<UpdateEvent> generate(const WorkloadSpec& spec);

// Update file format: first line "n <N>", then one event per line,
// "+ u v" or "- u v" with u < v, 0-based decimal.
void write_updates(std::ostream& out, int n, const std::vector<UpdateEvent>& seq);
void write_updates_file(const std::string& path, int n, const std::vector<UpdateEvent>& seq);
std::pair<int, std::vector<UpdateEvent>> read_updates(std::istream& in);
std::pair<int, std::vector<UpdateEvent>> read_updates_file(const std::string& path);

} // namespace dynmis
