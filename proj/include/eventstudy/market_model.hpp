#pragma once

#include "eventstudy/align.hpp"
#include "eventstudy/errors.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace eventstudy {

/// Market-model regression R_j = alpha + beta * R_m + e, fitted once per
/// event over its estimation window.
struct MarketModelFit {
    double alpha = 0.0;
    double beta = 0.0;
    int n_obs = 0;
    /// SSR / (n - 2).
    double residual_variance = 0.0;
    /// 1 - SSR/SST, clamped to [0, 1]; 1 when the residuals vanish.
    double r_squared = 0.0;
};

/// Abnormal returns over the event window, one row per event keyed by label.
struct AbnormalReturnPanel {
    std::vector<int> event_days; // evt_start..evt_end in order
    std::map<std::string, std::map<int, double>> per_event;
    std::vector<std::string> event_order; // input order of per_event keys
    std::map<int, int> events_with_data;  // N_t

    int n_events() const { return static_cast<int>(per_event.size()); }
    int n_at(int event_day) const;
};

struct ExcludedEvent {
    std::string label;
    ErrorCode reason = ErrorCode::InvalidConfig;
    std::string message;
};

struct PanelBuildResult {
    std::vector<MarketModelFit> fits; // input order, usable events only
    std::vector<std::string> fit_labels;
    AbnormalReturnPanel panel;
    std::vector<ExcludedEvent> excluded;
};

/// Ordinary least squares of stock returns on market returns via the
/// closed-form normal equations on centered data (two-pass means).
/// Throws Error: TooFewObservations (n < min_obs),
/// DegenerateRegressor (market returns have zero variance).
MarketModelFit ols_fit(std::span<const double> stock_returns,
                       std::span<const double> market_returns, int min_obs = 30);

/// r_stock - (fit.beta * r_market + fit.alpha).
double abnormal_return(const MarketModelFit& fit, double r_stock, double r_market);

/// Fits every event on its estimation window and fills the abnormal-return
/// panel over the event window. Events whose fit fails are excluded and
/// reported, not silently dropped. Duplicate labels are suffixed #2, #3, ...
/// Throws Error(NoUsableEvents) when every event is excluded.
PanelBuildResult build_panel(std::span<const AlignedEvent> events, const WindowConfig& cfg);

} // namespace eventstudy
