#include "eventstudy/date.hpp"

#include "eventstudy/errors.hpp"

#include <charconv>
#include <cstdio>

namespace eventstudy {

namespace {

// Civil <-> serial conversions, Gregorian calendar, proleptic.
// Algorithms from Howard Hinnant's chrono-compatible date notes.
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

struct Civil {
    int year;
    unsigned month;
    unsigned day;
};

Civil civil_from_days(std::int64_t z) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    return Civil{static_cast<int>(y + (m <= 2)), m, d};
}

unsigned days_in_month(int year, unsigned month) {
    static constexpr unsigned lengths[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month == 2) {
        const bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
        return leap ? 29u : 28u;
    }
    return lengths[month - 1];
}

bool parse_fixed_uint(std::string_view text, unsigned& out) {
    if (text.empty()) return false;
    unsigned value = 0;
    for (char c : text) {
        if (c < '0' || c > '9') return false;
        value = value * 10 + static_cast<unsigned>(c - '0');
    }
    out = value;
    return true;
}

} // namespace

Date Date::from_ymd(int year, int month, int day) {
    if (month < 1 || month > 12 || day < 1 ||
        static_cast<unsigned>(day) > days_in_month(year, static_cast<unsigned>(month))) {
        throw Error(ErrorCode::InvalidConfig, "invalid calendar day " + std::to_string(year) + "-" +
                                                  std::to_string(month) + "-" + std::to_string(day));
    }
    return Date(days_from_civil(year, static_cast<unsigned>(month), static_cast<unsigned>(day)));
}

std::optional<Date> Date::try_parse(std::string_view iso) {
    if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-') return std::nullopt;
    unsigned y = 0;
    unsigned m = 0;
    unsigned d = 0;
    if (!parse_fixed_uint(iso.substr(0, 4), y) || !parse_fixed_uint(iso.substr(5, 2), m) ||
        !parse_fixed_uint(iso.substr(8, 2), d)) {
        return std::nullopt;
    }
    if (m < 1 || m > 12 || d < 1 || d > days_in_month(static_cast<int>(y), m)) return std::nullopt;
    return Date(days_from_civil(static_cast<int>(y), m, d));
}

Date Date::parse(std::string_view iso) {
    auto parsed = try_parse(iso);
    if (!parsed) throw Error(ErrorCode::MalformedRow, "bad date '" + std::string(iso) + "'");
    return *parsed;
}

int Date::year() const { return civil_from_days(serial_).year; }
int Date::month() const { return static_cast<int>(civil_from_days(serial_).month); }
int Date::day() const { return static_cast<int>(civil_from_days(serial_).day); }

int Date::weekday() const {
    // 1970-01-01 was a Thursday.
    const std::int64_t wd = (serial_ + 4) % 7;
    return static_cast<int>(wd < 0 ? wd + 7 : wd);
}

bool Date::is_weekend() const {
    const int wd = weekday();
    return wd == 0 || wd == 6;
}

Date Date::next_weekday_on_or_after() const {
    const int wd = weekday();
    if (wd == 6) return *this + 2;
    if (wd == 0) return *this + 1;
    return *this;
}

std::string Date::to_string() const {
    const Civil c = civil_from_days(serial_);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", c.year, c.month, c.day);
    return buf;
}

} // namespace eventstudy
