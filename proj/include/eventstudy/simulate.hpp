#pragma once

#include "eventstudy/align.hpp"
#include "eventstudy/csv.hpp"
#include "eventstudy/stats.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace eventstudy {

/// Pre-announcement information leakage: a constant abnormal drift added to
/// the stock's return on event-days [onset_day, -1] plus a day-0 jump.
struct LeakageProfile {
    int onset_day = -16;
    double daily_drift = 0.0;
    double announcement_jump = 0.0;
};

struct BetaRange {
    double lo = 0.5;
    double hi = 1.5;
};

struct SimConfig {
    int n_events = 40;
    std::uint64_t seed = 42;
    double market_daily_vol = 0.01;
    double idio_vol = 0.01;
    /// Per-day drift alpha* shared by every simulated stock.
    double true_alpha = 0.0;
    BetaRange true_beta_range;
    std::optional<LeakageProfile> leakage;
    WindowConfig windows;

    std::string market_id = "MKT";
    /// First calendar day of the synthetic weekday calendar.
    Date start_date = Date::from_ymd(2015, 1, 5);
    /// Trading days between consecutive announcements.
    int event_spacing = 5;
    double initial_price = 100.0;

    void validate() const; // Error(InvalidConfig)
};

struct EventTruth {
    std::string security_id;
    double alpha_star = 0.0;
    double beta_star = 0.0;
    /// Nonzero injected abnormal returns by event-day.
    std::map<int, double> injected;
};

struct SimulatedPanel {
    PriceSeries market;
    std::vector<PriceSeries> stocks;
    std::vector<EventSpec> events;
    std::vector<EventTruth> truth;
};

/// Generates a synthetic market and one stock per event. Market returns are
/// i.i.d. Gaussian; each stock follows R_j = alpha* + beta* R_m + eps with
/// independent Gaussian noise, integrated to prices from initial_price.
/// Announcements are staggered event_spacing trading days apart and each
/// stock's file covers event-days [est_start-1, max(evt_end, 30)]. Fully
/// deterministic for a given seed.
SimulatedPanel simulate_panel(const SimConfig& cfg);

/// Writes <id>.csv per security (market included), events.csv and truth.json
/// into dir, byte-compatible with the ingestion formats.
void write_simulated_panel(const SimulatedPanel& panel, const std::filesystem::path& dir);

struct PowerCell {
    double daily_drift = 0.0;
    int n_events = 0;
    int replications = 0;
    int rejections = 0;
    double rejection_rate = 0.0;
};

/// Rejection rate of decide_hypothesis per (daily_drift, n_events) grid cell.
/// base.leakage supplies the onset day and announcement jump; a cell with
/// zero drift and zero jump simulates no leakage at all. Replications run in
/// parallel; every replication's seed is a pure function of (base seed, cell,
/// replication), so results are independent of scheduling.
std::vector<PowerCell> power_study(const SimConfig& base, std::span<const double> drifts,
                                   std::span<const int> event_counts, int replications,
                                   double alpha_level, const DecisionPolicy& policy);

} // namespace eventstudy
