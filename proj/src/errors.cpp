#include "eventstudy/errors.hpp"

#include <array>
#include <utility>

namespace eventstudy {

namespace {

constexpr std::array<std::pair<ErrorCode, std::string_view>, 18> kNames{{
    {ErrorCode::MalformedRow, "malformed_row"},
    {ErrorCode::NonPositivePrice, "non_positive_price"},
    {ErrorCode::DuplicateDate, "duplicate_date"},
    {ErrorCode::EmptyFile, "empty_file"},
    {ErrorCode::AnnouncementNotTradingDay, "announcement_not_trading_day"},
    {ErrorCode::InsufficientHistory, "insufficient_history"},
    {ErrorCode::IndexMismatch, "index_mismatch"},
    {ErrorCode::TooShort, "too_short"},
    {ErrorCode::DegenerateRegressor, "degenerate_regressor"},
    {ErrorCode::TooFewObservations, "too_few_observations"},
    {ErrorCode::NoUsableEvents, "no_usable_events"},
    {ErrorCode::NoData, "no_data"},
    {ErrorCode::InsufficientCrossSection, "insufficient_cross_section"},
    {ErrorCode::ZeroDispersion, "zero_dispersion"},
    {ErrorCode::UnknownEvent, "unknown_event"},
    {ErrorCode::UndefinedFraction, "undefined_fraction"},
    {ErrorCode::InvalidConfig, "invalid_config"},
    {ErrorCode::IoError, "io_error"},
}};

} // namespace

std::string_view to_string(ErrorCode code) {
    for (const auto& [c, name] : kNames) {
        if (c == code) return name;
    }
    return "unknown_error";
}

ErrorCode error_code_from_string(std::string_view name) {
    for (const auto& [code, n] : kNames) {
        if (n == name) return code;
    }
    throw Error(ErrorCode::InvalidConfig, "unknown error code name '" + std::string(name) + "'");
}

} // namespace eventstudy
