#include "cogsim/progression.hpp"

namespace cogsim {

namespace {

int draw(const TransitionBounds& b, RngStream& rng) {
    return static_cast<int>(rng.uniform_int(b.lo, b.hi));
}

int require(const std::optional<int>& slot, const char* name) {
    if (!slot) {
        throw InputError(std::string("transition slot ") + name +
                         " missing for this profile");
    }
    return *slot;
}

}  // namespace

TransitionDays sample_transition_days(ProgressionProfileKind kind,
                                      int total_days, RngStream& rng) {
    if (total_days < kMinTotalDays) {
        throw ConfigError("total_days must be >= " +
                          std::to_string(kMinTotalDays) +
                          " to hold all transition draws, got " +
                          std::to_string(total_days));
    }
    TransitionDays t;
    switch (kind) {
        case ProgressionProfileKind::StableHealthy:
        case ProgressionProfileKind::StableMCI:
        case ProgressionProfileKind::StableEarlyAD:
            break;
        case ProgressionProfileKind::MildProgressor:
            t.d1 = draw(kMildProgressorOnset, rng);
            break;
        case ProgressionProfileKind::GradualDecliner:
            t.d3 = draw(kGradualDeclinerOnset, rng);
            t.d4 = draw(kGradualDeclinerToEarly, rng);
            break;
        case ProgressionProfileKind::FastDecliner:
            t.d2 = draw(kFastDeclinerToEarly, rng);
            t.d5 = draw(kFastDeclinerToModerate, rng);
            break;
    }
    t.validate(total_days);
    return t;
}

CognitiveLabel label_at(ProgressionProfileKind kind, const TransitionDays& t,
                        int day) {
    if (day < 1) {
        throw InputError("day index must be >= 1, got " + std::to_string(day));
    }
    switch (kind) {
        case ProgressionProfileKind::StableHealthy:
            return CognitiveLabel::Healthy;
        case ProgressionProfileKind::StableMCI:
            return CognitiveLabel::MCI;
        case ProgressionProfileKind::StableEarlyAD:
            return CognitiveLabel::EarlyAD;
        case ProgressionProfileKind::MildProgressor: {
            const int d1 = require(t.d1, "d1");
            return day < d1 ? CognitiveLabel::Healthy : CognitiveLabel::MCI;
        }
        case ProgressionProfileKind::GradualDecliner: {
            const int d3 = require(t.d3, "d3");
            const int d4 = require(t.d4, "d4");
            if (day < d3) return CognitiveLabel::Healthy;
            if (day < d4) return CognitiveLabel::MCI;
            return CognitiveLabel::EarlyAD;
        }
        case ProgressionProfileKind::FastDecliner: {
            const int d2 = require(t.d2, "d2");
            const int d5 = require(t.d5, "d5");
            if (day < d2) return CognitiveLabel::MCI;
            if (day < d5) return CognitiveLabel::EarlyAD;
            return CognitiveLabel::ModAD;
        }
    }
    throw InputError("unhandled profile kind");
}

LabelSchedule build_schedule(const UserProfile& user, int total_days) {
    if (total_days < 1) {
        throw InputError("total_days must be >= 1");
    }
    user.transitions.validate(total_days);
    LabelSchedule schedule;
    schedule.labels.reserve(static_cast<std::size_t>(total_days));
    for (int day = 1; day <= total_days; ++day) {
        schedule.labels.push_back(label_at(user.kind, user.transitions, day));
    }
    return schedule;
}

}  // namespace cogsim
