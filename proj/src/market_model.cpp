#include "eventstudy/market_model.hpp"

#include <algorithm>
#include <cmath>

namespace eventstudy {

namespace {

// Variance floor distinguishing a genuinely constant regressor from rounding
// noise in the centered sums; daily returns put sxx around 1e-3.
constexpr double kDegenerateVariance = 1e-30;

std::string unique_label(const std::map<std::string, std::map<int, double>>& taken,
                         const std::string& label) {
    if (!taken.contains(label)) return label;
    for (int k = 2;; ++k) {
        std::string candidate = label + "#" + std::to_string(k);
        if (!taken.contains(candidate)) return candidate;
    }
}

} // namespace

int AbnormalReturnPanel::n_at(int event_day) const {
    auto it = events_with_data.find(event_day);
    return it == events_with_data.end() ? 0 : it->second;
}

MarketModelFit ols_fit(std::span<const double> stock_returns,
                       std::span<const double> market_returns, int min_obs) {
    if (stock_returns.size() != market_returns.size()) {
        throw Error(ErrorCode::InvalidConfig, "ols_fit requires paired series");
    }
    const auto n = stock_returns.size();
    if (n < static_cast<std::size_t>(std::max(min_obs, 3))) {
        throw Error(ErrorCode::TooFewObservations,
                    std::to_string(n) + " paired observations, need " +
                        std::to_string(std::max(min_obs, 3)));
    }

    double mean_x = 0.0;
    double mean_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_x += market_returns[i];
        mean_y += stock_returns[i];
    }
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);

    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = market_returns[i] - mean_x;
        const double dy = stock_returns[i] - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (!(sxx > kDegenerateVariance)) {
        throw Error(ErrorCode::DegenerateRegressor, "market returns have zero variance");
    }

    MarketModelFit fit;
    fit.beta = sxy / sxx;
    fit.alpha = mean_y - fit.beta * mean_x;
    fit.n_obs = static_cast<int>(n);

    double ssr = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = stock_returns[i] - fit.alpha - fit.beta * market_returns[i];
        ssr += e * e;
    }
    fit.residual_variance = ssr / static_cast<double>(n - 2);
    fit.r_squared = syy > 0.0 ? std::clamp(1.0 - ssr / syy, 0.0, 1.0) : 1.0;
    return fit;
}

double abnormal_return(const MarketModelFit& fit, double r_stock, double r_market) {
    return r_stock - (fit.beta * r_market + fit.alpha);
}

PanelBuildResult build_panel(std::span<const AlignedEvent> events, const WindowConfig& cfg) {
    cfg.validate();
    PanelBuildResult result;
    result.panel.event_days.reserve(static_cast<std::size_t>(cfg.event_window_length()));
    for (int day = cfg.evt_start; day <= cfg.evt_end; ++day) {
        result.panel.event_days.push_back(day);
    }

    for (const AlignedEvent& aligned : events) {
        const std::string label = unique_label(result.panel.per_event, aligned.event.label);

        std::vector<double> stock_est;
        std::vector<double> market_est;
        for (const auto& [day, ret] : aligned.stock_returns) {
            if (day < cfg.est_start || day > cfg.est_end) continue;
            stock_est.push_back(ret);
            market_est.push_back(aligned.market_returns.at(day));
        }

        MarketModelFit fit;
        try {
            fit = ols_fit(stock_est, market_est, cfg.min_estimation_days);
        } catch (const Error& e) {
            result.excluded.push_back({label, e.code(), e.what()});
            continue;
        }

        std::map<int, double> row;
        for (const auto& [day, ret] : aligned.stock_returns) {
            if (day < cfg.evt_start || day > cfg.evt_end) continue;
            const double ar = abnormal_return(fit, ret, aligned.market_returns.at(day));
            if (!std::isfinite(ar)) {
                throw Error(ErrorCode::InvalidConfig,
                            "non-finite abnormal return for '" + label + "'");
            }
            row.emplace(day, ar);
            result.panel.events_with_data[day] += 1;
        }
        result.panel.per_event.emplace(label, std::move(row));
        result.panel.event_order.push_back(label);
        result.fits.push_back(fit);
        result.fit_labels.push_back(label);
    }

    if (result.fits.empty()) {
        throw Error(ErrorCode::NoUsableEvents, "every event failed the market-model fit");
    }
    return result;
}

} // namespace eventstudy
