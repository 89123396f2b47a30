#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eventstudy {

enum class ErrorCode {
    // ingestion
    MalformedRow,
    NonPositivePrice,
    DuplicateDate,
    EmptyFile,
    AnnouncementNotTradingDay,
    InsufficientHistory,
    IndexMismatch,
    // returns
    TooShort,
    // market model
    DegenerateRegressor,
    TooFewObservations,
    NoUsableEvents,
    // event-study statistics
    NoData,
    InsufficientCrossSection,
    ZeroDispersion,
    UnknownEvent,
    UndefinedFraction,
    // configuration / io
    InvalidConfig,
    IoError,
};

std::string_view to_string(ErrorCode code);

/// Parses the snake_case name produced by to_string. Throws Error(InvalidConfig)
/// on unknown names.
ErrorCode error_code_from_string(std::string_view name);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace eventstudy
