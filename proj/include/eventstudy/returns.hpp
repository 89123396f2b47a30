#pragma once

#include "eventstudy/csv.hpp"

#include <string>
#include <vector>

namespace eventstudy {

struct ReturnObservation {
    Date date;
    double ret = 0.0;
};

/// One-day simple returns; observation i of the source prices yields
/// ret = (P_i - P_{i-1}) / P_{i-1} dated at P_i's date.
struct ReturnSeries {
    std::string security_id;
    std::vector<ReturnObservation> observations;
};

/// Throws Error(TooShort) when prices has fewer than 2 observations.
ReturnSeries simple_returns(const PriceSeries& prices);

} // namespace eventstudy
