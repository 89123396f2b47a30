#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace eventstudy {

/// Calendar day stored as a serial day count (days since 1970-01-01).
/// Comparisons, differences and day arithmetic are exact integer operations.
class Date {
public:
    Date() = default;

    static Date from_serial(std::int64_t days) { return Date(days); }
    /// Throws Error(InvalidConfig) for out-of-range month/day combinations.
    static Date from_ymd(int year, int month, int day);

    /// Strict ISO-8601 "YYYY-MM-DD". Returns nullopt on any deviation.
    static std::optional<Date> try_parse(std::string_view iso);
    /// As try_parse, but throws Error(MalformedRow).
    static Date parse(std::string_view iso);

    std::int64_t serial() const { return serial_; }
    int year() const;
    int month() const;
    int day() const;

    /// 0 = Sunday .. 6 = Saturday.
    int weekday() const;
    bool is_weekend() const;
    /// This date if it is a weekday, otherwise the following Monday.
    Date next_weekday_on_or_after() const;

    std::string to_string() const;

    Date operator+(std::int64_t days) const { return Date(serial_ + days); }
    Date operator-(std::int64_t days) const { return Date(serial_ - days); }
    std::int64_t operator-(Date other) const { return serial_ - other.serial_; }
    auto operator<=>(const Date&) const = default;

private:
    explicit Date(std::int64_t serial) : serial_(serial) {}
    std::int64_t serial_ = 0;
};

} // namespace eventstudy
