#pragma once

#include "eventstudy/market_model.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace eventstudy {

/// Cross-sectional statistics for one event-day. aar/sigma/t_stat are absent
/// when the cross-section is too thin to define them (n = 0, n < 2, or zero
/// dispersion with nonzero mean).
struct DayStat {
    int event_day = 0;
    std::optional<double> aar;
    std::optional<double> sigma;
    int n = 0;
    std::optional<double> t_stat;
    bool significant = false;
    double caar = 0.0;
};

enum class Hypothesis { accept_H0, reject_H0 };

std::string_view to_string(Hypothesis h);
Hypothesis hypothesis_from_string(std::string_view name);

/// Reject H0 only when a run of at least k_consecutive significant event-days
/// occurs inside [runup_start, runup_end]; isolated significant days do not
/// establish a run-up.
struct DecisionPolicy {
    int k_consecutive = 3;
    int runup_start = -10;
    int runup_end = -1;

    void validate() const;
};

struct EventStudyResult {
    std::vector<DayStat> stats; // evt_start..evt_end in order
    std::vector<int> significant_days;
    /// caar(-1)/caar(0); absent when caar(0) == 0 or day -1/0 not in window.
    std::optional<double> reaction_fraction;
    Hypothesis hypothesis_decision = Hypothesis::accept_H0;
    double alpha_level = 0.05;
    /// Events whose event-window coverage has gaps (missing days summed as 0).
    std::vector<std::string> gapped_events;
};

/// Mean abnormal return over events with data at day t, with the count.
/// Throws Error(NoData) when no event has data at t.
std::pair<double, int> aar(const AbnormalReturnPanel& panel, int event_day);

/// Sample standard deviation (divisor N-1) of abnormal returns at day t.
/// Throws Error(InsufficientCrossSection) when fewer than 2 events have data.
double cross_sectional_sigma(const AbnormalReturnPanel& panel, int event_day);

/// sqrt(n) * aar / sigma. sigma = 0 with aar = 0 returns 0 by convention;
/// sigma = 0 with aar != 0 throws Error(ZeroDispersion).
double t_stat(double aar_value, double sigma_value, int n);

struct CarPoint {
    double value = 0.0;
    /// True when a day in [evt_start, t] is missing and contributed 0.
    bool gapped = false;
};

/// Running sum of one event's abnormal returns from evt_start through t.
/// Throws Error(UnknownEvent) for labels not in the panel.
CarPoint car(const AbnormalReturnPanel& panel, const std::string& event_label, int event_day);

/// Cross-sectional mean of per-event CARs truncated at day t.
/// Throws Error(NoData) when the panel holds no events.
double caar(const AbnormalReturnPanel& panel, int event_day);

/// caar(-1) / caar(0): the share of the announcement reaction already
/// impounded the day before. Throws Error(UndefinedFraction) when
/// caar_day0 == 0.
double reaction_fraction(double caar_day_minus1, double caar_day0);

/// Event-days whose |t_stat| reaches the two-sided critical value at
/// alpha_level with df degrees of freedom, ascending. Days without a defined
/// t_stat are skipped.
std::vector<int> significance_scan(std::span<const DayStat> stats, double alpha_level, int df);

Hypothesis decide_hypothesis(std::span<const int> significant_days, const DecisionPolicy& policy);

/// Assembles per-day statistics, significance flags (df = n-1 per day),
/// CAAR trajectory, reaction fraction and the hypothesis decision.
EventStudyResult compute_event_study(const AbnormalReturnPanel& panel, double alpha_level,
                                     const DecisionPolicy& policy);

} // namespace eventstudy
