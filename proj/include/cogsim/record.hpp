#pragma once

#include <string>
#include <vector>

#include "cogsim/behaviors.hpp"
#include "cogsim/domain.hpp"
#include "cogsim/textgen.hpp"

namespace cogsim {

// One logged (user, day, video) interaction. coherence_clean is the score of
// the generated summary against the video's reference description (or the
// calibrated parametric draw); coherence_noisy is the degraded-condition
// value, clipped to [0, 1].
struct SessionRecord {
    int user_id = 0;
    int day = 0;
    int video_id = 0;
    VideoCategory category = VideoCategory::News;
    CognitiveLabel label = CognitiveLabel::Healthy;
    Summary summary;
    QARecord qa;
    BehaviorSample behaviors;
    double coherence_clean = 0.0;
    double coherence_noisy = 0.0;
    std::vector<ConfoundKind> confounds_applied;

    bool operator==(const SessionRecord&) const = default;
};

}  // namespace cogsim
