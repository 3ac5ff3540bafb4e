#pragma once

#include <vector>

#include "cogsim/domain.hpp"
#include "cogsim/rng.hpp"

namespace cogsim {

// Ground-truth stage per day, index 0 = day 1. Severity is non-decreasing:
// there is no cognitive recovery.
struct LabelSchedule {
    std::vector<CognitiveLabel> labels;

    CognitiveLabel at_day(int day) const {
        if (day < 1 || day > static_cast<int>(labels.size())) {
            throw InputError("day " + std::to_string(day) + " out of schedule range");
        }
        return labels[static_cast<std::size_t>(day - 1)];
    }
    int total_days() const { return static_cast<int>(labels.size()); }
};

// Inclusive integer bounds for the uniform transition-day draws.
struct TransitionBounds {
    int lo = 0;
    int hi = 0;
};

inline constexpr TransitionBounds kMildProgressorOnset{35, 45};   // D1
inline constexpr TransitionBounds kFastDeclinerToEarly{25, 35};   // D2
inline constexpr TransitionBounds kGradualDeclinerOnset{20, 30};  // D3
inline constexpr TransitionBounds kGradualDeclinerToEarly{45, 55};  // D4
inline constexpr TransitionBounds kFastDeclinerToModerate{60, 75};  // D5

// Smallest horizon that can hold every possible transition day.
inline constexpr int kMinTotalDays = 76;

// Draws the transition days used by `kind`. Stable profiles return an empty
// set. Throws ConfigError when total_days < kMinTotalDays.
TransitionDays sample_transition_days(ProgressionProfileKind kind,
                                      int total_days, RngStream& rng);

// Piecewise stage function. Intervals are half-open and lower-inclusive: on
// the sampled transition day itself the post-transition stage already holds.
CognitiveLabel label_at(ProgressionProfileKind kind, const TransitionDays& t,
                        int day);

LabelSchedule build_schedule(const UserProfile& user, int total_days);

}  // namespace cogsim
