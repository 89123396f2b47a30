#pragma once

#include "eventstudy/csv.hpp"
#include "eventstudy/returns.hpp"

#include <map>
#include <vector>

namespace eventstudy {

/// Estimation and event windows in event-day offsets relative to day 0.
/// The event window is tested for abnormal returns; the estimation window,
/// which precedes it, is used only to fit the market model.
struct WindowConfig {
    int est_start = -89;
    int est_end = -31;
    int evt_start = -30;
    int evt_end = 10;
    /// Minimum number of paired estimation-window observations.
    int min_estimation_days = 30;

    /// Throws Error(InvalidConfig) unless
    /// est_start < est_end < evt_start <= 0 <= evt_end and the estimation
    /// window has at least min_estimation_days trading days.
    void validate() const;

    int estimation_length() const { return est_end - est_start + 1; }
    int event_window_length() const { return evt_end - evt_start + 1; }
};

/// One event mapped onto integer event time. Event time is trading-day time:
/// day -k is the k-th prior row of the security's price file. Both return
/// maps share an identical key set (pairwise deletion).
struct AlignedEvent {
    EventSpec event;
    Date day0_date;
    std::map<int, double> stock_returns;
    std::map<int, double> market_returns;

    std::vector<int> coverage() const;
};

/// Maps the announcement onto the security's trading calendar and collects
/// paired stock/market returns for event-days [est_start, evt_end].
///
/// Day 0 is the security's trading day on the announcement date; when the
/// announcement falls on a non-trading day it moves to the next trading day
/// unless strict_day0 is set (Error: AnnouncementNotTradingDay). An event-day
/// with a return missing on either side is dropped from coverage. Throws
/// Error: InsufficientHistory when fewer than cfg.min_estimation_days
/// estimation days survive, IndexMismatch when the market series lacks the
/// day-0 date.
AlignedEvent align_event(const EventSpec& event, const PriceSeries& stock,
                         const PriceSeries& market, const WindowConfig& cfg,
                         bool strict_day0 = false);

} // namespace eventstudy
