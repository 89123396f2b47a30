#include "eventstudy/stats.hpp"

#include "eventstudy/student_t.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace eventstudy {

std::string_view to_string(Hypothesis h) {
    return h == Hypothesis::accept_H0 ? "accept_H0" : "reject_H0";
}

Hypothesis hypothesis_from_string(std::string_view name) {
    if (name == "accept_H0") return Hypothesis::accept_H0;
    if (name == "reject_H0") return Hypothesis::reject_H0;
    throw Error(ErrorCode::InvalidConfig, "unknown hypothesis '" + std::string(name) + "'");
}

void DecisionPolicy::validate() const {
    if (k_consecutive < 1) {
        throw Error(ErrorCode::InvalidConfig, "k_consecutive must be at least 1");
    }
    if (!(runup_start <= runup_end && runup_end <= -1)) {
        throw Error(ErrorCode::InvalidConfig,
                    "run-up window must satisfy runup_start <= runup_end <= -1");
    }
}

std::pair<double, int> aar(const AbnormalReturnPanel& panel, int event_day) {
    double sum = 0.0;
    int n = 0;
    for (const auto& [label, row] : panel.per_event) {
        auto it = row.find(event_day);
        if (it == row.end()) continue;
        sum += it->second;
        ++n;
    }
    if (n == 0) {
        throw Error(ErrorCode::NoData, "no abnormal returns at day " + std::to_string(event_day));
    }
    return {sum / n, n};
}

double cross_sectional_sigma(const AbnormalReturnPanel& panel, int event_day) {
    const int n = panel.n_at(event_day);
    if (n < 2) {
        throw Error(ErrorCode::InsufficientCrossSection,
                    "need at least 2 events at day " + std::to_string(event_day) + ", have " +
                        std::to_string(n));
    }
    const double mean = aar(panel, event_day).first;
    double ss = 0.0;
    for (const auto& [label, row] : panel.per_event) {
        auto it = row.find(event_day);
        if (it == row.end()) continue;
        const double d = it->second - mean;
        ss += d * d;
    }
    return std::sqrt(ss / (n - 1));
}

double t_stat(double aar_value, double sigma_value, int n) {
    if (n < 2) {
        throw Error(ErrorCode::InsufficientCrossSection,
                    "t-stat needs n >= 2, have " + std::to_string(n));
    }
    if (sigma_value == 0.0) {
        if (aar_value == 0.0) return 0.0;
        throw Error(ErrorCode::ZeroDispersion, "zero dispersion with nonzero mean");
    }
    return std::sqrt(static_cast<double>(n)) * aar_value / sigma_value;
}

CarPoint car(const AbnormalReturnPanel& panel, const std::string& event_label, int event_day) {
    auto event_it = panel.per_event.find(event_label);
    if (event_it == panel.per_event.end()) {
        throw Error(ErrorCode::UnknownEvent, "no event labelled '" + event_label + "'");
    }
    if (panel.event_days.empty()) {
        throw Error(ErrorCode::NoData, "panel has no event window");
    }
    const int start = panel.event_days.front();
    CarPoint point;
    for (int day = start; day <= event_day; ++day) {
        auto it = event_it->second.find(day);
        if (it == event_it->second.end()) {
            point.gapped = true;
            continue;
        }
        point.value += it->second;
    }
    return point;
}

double caar(const AbnormalReturnPanel& panel, int event_day) {
    if (panel.per_event.empty()) throw Error(ErrorCode::NoData, "panel holds no events");
    double sum = 0.0;
    for (const auto& [label, row] : panel.per_event) {
        sum += car(panel, label, event_day).value;
    }
    return sum / static_cast<double>(panel.per_event.size());
}

double reaction_fraction(double caar_day_minus1, double caar_day0) {
    if (caar_day0 == 0.0) {
        throw Error(ErrorCode::UndefinedFraction, "caar(0) is zero");
    }
    return caar_day_minus1 / caar_day0;
}

std::vector<int> significance_scan(std::span<const DayStat> stats, double alpha_level, int df) {
    if (df < 1) throw Error(ErrorCode::InvalidConfig, "significance_scan needs df >= 1");
    const double critical = student_t_critical(alpha_level, df);
    std::vector<int> days;
    for (const DayStat& stat : stats) {
        if (!stat.t_stat) continue;
        if (std::fabs(*stat.t_stat) >= critical) days.push_back(stat.event_day);
    }
    std::sort(days.begin(), days.end());
    return days;
}

Hypothesis decide_hypothesis(std::span<const int> significant_days, const DecisionPolicy& policy) {
    policy.validate();
    std::vector<int> sorted(significant_days.begin(), significant_days.end());
    std::sort(sorted.begin(), sorted.end());

    int run = 0;
    int previous = 0;
    for (int day : sorted) {
        if (day < policy.runup_start || day > policy.runup_end) continue;
        run = (run > 0 && day == previous + 1) ? run + 1 : 1;
        previous = day;
        if (run >= policy.k_consecutive) return Hypothesis::reject_H0;
    }
    return Hypothesis::accept_H0;
}

EventStudyResult compute_event_study(const AbnormalReturnPanel& panel, double alpha_level,
                                     const DecisionPolicy& policy) {
    policy.validate();
    if (!(alpha_level > 0.0 && alpha_level <= 1.0)) {
        throw Error(ErrorCode::InvalidConfig, "alpha_level must lie in (0, 1]");
    }
    if (panel.per_event.empty()) throw Error(ErrorCode::NoData, "panel holds no events");

    EventStudyResult result;
    result.alpha_level = alpha_level;
    result.stats.reserve(panel.event_days.size());

    // Per-event running CAR totals, advanced day by day in label order so the
    // statistics are exactly invariant to the input order of events.
    std::map<std::string, double> running_car;
    std::map<std::string, bool> gapped;
    for (const auto& [label, row] : panel.per_event) {
        running_car[label] = 0.0;
        gapped[label] = false;
    }

    std::map<int, double> critical_by_df;
    for (int day : panel.event_days) {
        DayStat stat;
        stat.event_day = day;
        stat.n = panel.n_at(day);
        if (stat.n >= 1) stat.aar = aar(panel, day).first;
        if (stat.n >= 2) {
            stat.sigma = cross_sectional_sigma(panel, day);
            if (*stat.sigma > 0.0) {
                stat.t_stat = t_stat(*stat.aar, *stat.sigma, stat.n);
            } else if (*stat.aar == 0.0) {
                stat.t_stat = 0.0;
            }
            if (stat.t_stat) {
                const int df = stat.n - 1;
                auto [it, inserted] = critical_by_df.try_emplace(df, 0.0);
                if (inserted) it->second = student_t_critical(alpha_level, df);
                stat.significant = std::fabs(*stat.t_stat) >= it->second;
            }
        }

        double car_sum = 0.0;
        for (auto& [label, total] : running_car) {
            auto it = panel.per_event.at(label).find(day);
            if (it == panel.per_event.at(label).end()) {
                gapped[label] = true;
            } else {
                total += it->second;
            }
            car_sum += total;
        }
        stat.caar = car_sum / static_cast<double>(running_car.size());

        if (stat.significant) result.significant_days.push_back(day);
        result.stats.push_back(stat);
    }

    for (const auto& [label, has_gap] : gapped) {
        if (has_gap) result.gapped_events.push_back(label);
    }

    std::optional<double> caar_m1;
    std::optional<double> caar_0;
    for (const DayStat& stat : result.stats) {
        if (stat.event_day == -1) caar_m1 = stat.caar;
        if (stat.event_day == 0) caar_0 = stat.caar;
    }
    if (caar_m1 && caar_0 && *caar_0 != 0.0) {
        result.reaction_fraction = reaction_fraction(*caar_m1, *caar_0);
    }

    result.hypothesis_decision = decide_hypothesis(result.significant_days, policy);
    return result;
}

} // namespace eventstudy
