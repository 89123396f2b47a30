#pragma once

#include "eventstudy/date.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eventstudy {

struct PriceObservation {
    Date date;
    double adj_close = 0.0;

    bool operator==(const PriceObservation&) const = default;
};

/// Dated adjusted-close prices for one security or the market index.
/// Invariants: dates strictly increasing, prices strictly positive and finite.
struct PriceSeries {
    std::string security_id;
    std::vector<PriceObservation> observations;

    bool operator==(const PriceSeries&) const = default;
};

/// One announcement: day 0 of the event timeline.
struct EventSpec {
    std::string security_id;
    std::string market_id;
    Date announcement_date;
    std::string label;
};

/// Parses `date,adj_close` CSV text (ISO-8601 dates, LF or CRLF). Rows are
/// sorted by date on output regardless of input order.
/// Throws Error: MalformedRow, NonPositivePrice, DuplicateDate.
PriceSeries parse_price_csv(std::string_view text, std::string security_id = {});

/// Inverse of parse_price_csv; prices rendered with 17 significant digits so
/// parse(serialize(s)) == s.
std::string price_series_to_csv(const PriceSeries& series);

/// Parses `security_id,market_id,announcement_date,label` CSV text. The label
/// field is the remainder of the line, so it may contain commas. Order is
/// preserved. Throws Error: MalformedRow, EmptyFile.
std::vector<EventSpec> parse_event_csv(std::string_view text);

std::string events_to_csv(std::span<const EventSpec> events);

/// Whole-file read; throws Error(IoError).
std::string read_text_file(const std::filesystem::path& path);

/// Conventional location of a security's price file.
std::filesystem::path price_file_path(const std::filesystem::path& data_dir,
                                      const std::string& security_id);

} // namespace eventstudy
