#include "eventstudy/align.hpp"

#include "eventstudy/errors.hpp"

#include <algorithm>

namespace eventstudy {

void WindowConfig::validate() const {
    if (!(est_start < est_end && est_end < evt_start && evt_start <= 0 && 0 <= evt_end)) {
        throw Error(ErrorCode::InvalidConfig,
                    "window offsets must satisfy est_start < est_end < evt_start <= 0 <= evt_end");
    }
    if (min_estimation_days < 3) {
        throw Error(ErrorCode::InvalidConfig, "min_estimation_days must be at least 3");
    }
    if (estimation_length() < min_estimation_days) {
        throw Error(ErrorCode::InvalidConfig,
                    "estimation window has " + std::to_string(estimation_length()) +
                        " days, below the floor of " + std::to_string(min_estimation_days));
    }
}

std::vector<int> AlignedEvent::coverage() const {
    std::vector<int> days;
    days.reserve(stock_returns.size());
    for (const auto& [day, ret] : stock_returns) days.push_back(day);
    return days;
}

AlignedEvent align_event(const EventSpec& event, const PriceSeries& stock,
                         const PriceSeries& market, const WindowConfig& cfg, bool strict_day0) {
    cfg.validate();
    if (stock.observations.size() < 2 || market.observations.size() < 2) {
        throw Error(ErrorCode::InsufficientHistory,
                    "'" + event.label + "': price series too short");
    }

    const auto& obs = stock.observations;
    auto day0_it = std::lower_bound(
        obs.begin(), obs.end(), event.announcement_date,
        [](const PriceObservation& o, const Date& d) { return o.date < d; });
    if (day0_it == obs.end()) {
        throw Error(ErrorCode::InsufficientHistory,
                    "'" + event.label + "': announcement " + event.announcement_date.to_string() +
                        " is after the last trading day of " + stock.security_id);
    }
    if (strict_day0 && day0_it->date != event.announcement_date) {
        throw Error(ErrorCode::AnnouncementNotTradingDay,
                    "'" + event.label + "': " + event.announcement_date.to_string() +
                        " is not a trading day of " + stock.security_id);
    }
    const auto day0_index = static_cast<std::int64_t>(day0_it - obs.begin());

    const ReturnSeries stock_rets = simple_returns(stock);
    const ReturnSeries market_rets = simple_returns(market);

    std::map<Date, double> market_by_date;
    for (const auto& r : market_rets.observations) market_by_date.emplace(r.date, r.ret);

    // The market must at least trade on the anchor day; interior gaps are
    // handled by pairwise deletion below.
    const Date day0_date = day0_it->date;
    const bool market_has_day0 =
        std::any_of(market.observations.begin(), market.observations.end(),
                    [&](const PriceObservation& o) { return o.date == day0_date; });
    if (!market_has_day0) {
        throw Error(ErrorCode::IndexMismatch,
                    "'" + event.label + "': market series " + market.security_id +
                        " has no observation on day-0 date " + day0_date.to_string());
    }

    AlignedEvent aligned;
    aligned.event = event;
    aligned.day0_date = day0_date;

    for (int day = cfg.est_start; day <= cfg.evt_end; ++day) {
        const std::int64_t i = day0_index + day;
        if (i < 1 || i >= static_cast<std::int64_t>(obs.size())) continue;
        const Date date = obs[static_cast<std::size_t>(i)].date;
        auto market_it = market_by_date.find(date);
        if (market_it == market_by_date.end()) continue;
        aligned.stock_returns.emplace(
            day, stock_rets.observations[static_cast<std::size_t>(i - 1)].ret);
        aligned.market_returns.emplace(day, market_it->second);
    }

    int estimation_days = 0;
    for (const auto& [day, ret] : aligned.stock_returns) {
        if (day >= cfg.est_start && day <= cfg.est_end) ++estimation_days;
    }
    if (estimation_days < cfg.min_estimation_days) {
        throw Error(ErrorCode::InsufficientHistory,
                    "'" + event.label + "': " + std::to_string(estimation_days) +
                        " estimation days, need " + std::to_string(cfg.min_estimation_days));
    }
    return aligned;
}

} // namespace eventstudy
