#include "eventstudy/returns.hpp"

#include "eventstudy/errors.hpp"

namespace eventstudy {

ReturnSeries simple_returns(const PriceSeries& prices) {
    if (prices.observations.size() < 2) {
        throw Error(ErrorCode::TooShort, "need at least 2 prices for '" + prices.security_id +
                                             "', got " +
                                             std::to_string(prices.observations.size()));
    }
    ReturnSeries series;
    series.security_id = prices.security_id;
    series.observations.reserve(prices.observations.size() - 1);
    for (std::size_t i = 1; i < prices.observations.size(); ++i) {
        const double prev = prices.observations[i - 1].adj_close;
        const double cur = prices.observations[i].adj_close;
        series.observations.push_back({prices.observations[i].date, (cur - prev) / prev});
    }
    return series;
}

} // namespace eventstudy
