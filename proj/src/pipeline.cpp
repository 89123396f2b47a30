#include "eventstudy/pipeline.hpp"

#include <set>

namespace eventstudy {

namespace {

std::vector<EventSpec> with_unique_labels(std::span<const EventSpec> events) {
    std::vector<EventSpec> out(events.begin(), events.end());
    std::set<std::string> seen;
    for (EventSpec& event : out) {
        if (event.label.empty()) event.label = event.security_id;
        std::string label = event.label;
        for (int k = 2; seen.contains(label); ++k) {
            label = event.label + "#" + std::to_string(k);
        }
        event.label = label;
        seen.insert(label);
    }
    return out;
}

} // namespace

StudyOutcome run_pipeline(std::span<const EventSpec> events, const SeriesLookup& series_by_id,
                          const WindowConfig& windows, double alpha_level,
                          const DecisionPolicy& policy, bool strict_day0) {
    windows.validate();
    policy.validate();

    StudyOutcome outcome;
    const std::vector<EventSpec> labelled = with_unique_labels(events);
    for (const EventSpec& event : labelled) {
        try {
            const PriceSeries& stock = series_by_id(event.security_id);
            const PriceSeries& market = series_by_id(event.market_id);
            outcome.aligned.push_back(align_event(event, stock, market, windows, strict_day0));
        } catch (const Error& e) {
            outcome.excluded.push_back({event.label, e.code(), e.what()});
        }
    }

    if (static_cast<int>(outcome.aligned.size()) < 2) {
        throw Error(ErrorCode::NoUsableEvents,
                    std::to_string(outcome.aligned.size()) +
                        " events aligned; the cross-sectional test needs at least 2");
    }

    outcome.build = build_panel(outcome.aligned, windows);
    for (const ExcludedEvent& excluded : outcome.build.excluded) {
        outcome.excluded.push_back(excluded);
    }
    if (outcome.build.panel.n_events() < 2) {
        throw Error(ErrorCode::NoUsableEvents,
                    "only " + std::to_string(outcome.build.panel.n_events()) +
                        " usable event after exclusions");
    }

    outcome.result = compute_event_study(outcome.build.panel, alpha_level, policy);
    return outcome;
}

} // namespace eventstudy
