#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace dynmis {

// Why a phase (or epoch) was terminated.
enum class PhaseCause : int { TH = 0, TI = 1, TL = 2, TEXP = 3, PARENT = 4, EPOCH = 5 };

inline const char* cause_name(PhaseCause c) {
    switch (c) {
    case PhaseCause::TH: return "TH";
    case PhaseCause::TI: return "TI";
    case PhaseCause::TL: return "TL";
    case PhaseCause::TEXP: return "TEXP";
    case PhaseCause::PARENT: return "PARENT";
    case PhaseCause::EPOCH: return "EPOCH";
    }
    return "?";
}

// Machine-independent work accounting: one unit per counter touch or
// adjacency-iteration step. Wall time is informational only.
struct WorkMeter {
    uint64_t work_units = 0;
    uint64_t wall_ns = 0;
    uint64_t phases_total = 0;
    std::array<uint64_t, 6> phases_by_cause{};
    std::vector<uint64_t> level_phases; // k_r, 1-based level r at index r-1
    int64_t max_delta_l = 0;            // largest degree seen in any maintained low/level graph
    uint64_t verify_failures = 0;
    uint64_t audit_failures = 0;

    void charge(uint64_t units) { work_units += units; }

    void phase_end(PhaseCause c) {
        ++phases_total;
        ++phases_by_cause[static_cast<int>(c)];
    }

    void level_phase_end(int level, PhaseCause c) {
        if (static_cast<size_t>(level) > level_phases.size())
            level_phases.resize(level, 0);
        ++level_phases[level - 1];
        phase_end(c);
    }

    void note_degree(int64_t d) {
        if (d > max_delta_l) max_delta_l = d;
    }

    uint64_t successful_phases() const {
        return phases_by_cause[static_cast<int>(PhaseCause::TEXP)] +
               phases_by_cause[static_cast<int>(PhaseCause::PARENT)] +
               phases_by_cause[static_cast<int>(PhaseCause::EPOCH)];
    }
};

} // namespace dynmis
