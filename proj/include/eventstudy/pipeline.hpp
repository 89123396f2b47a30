#pragma once

#include "eventstudy/align.hpp"
#include "eventstudy/market_model.hpp"
#include "eventstudy/stats.hpp"

#include <functional>
#include <span>
#include <vector>

namespace eventstudy {

/// Result of the full analysis chain: alignment, per-event fits, abnormal
/// returns, and cross-sectional statistics. `excluded` merges alignment-stage
/// and fit-stage exclusions; together with the panel's event_order it covers
/// every input event exactly once.
struct StudyOutcome {
    std::vector<AlignedEvent> aligned;
    PanelBuildResult build;
    EventStudyResult result;
    std::vector<ExcludedEvent> excluded;
};

using SeriesLookup = std::function<const PriceSeries&(const std::string&)>;

/// Runs events -> alignment -> market model -> event-study statistics.
/// Labels are made unique up front so exclusions and panel rows share one key
/// space. Throws Error(NoUsableEvents) when fewer than 2 events survive.
StudyOutcome run_pipeline(std::span<const EventSpec> events, const SeriesLookup& series_by_id,
                          const WindowConfig& windows, double alpha_level,
                          const DecisionPolicy& policy, bool strict_day0 = false);

} // namespace eventstudy
