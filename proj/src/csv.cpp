#include "eventstudy/csv.hpp"

#include "eventstudy/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace eventstudy {

namespace {

std::string_view strip_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

// Yields lines without their terminator; a trailing newline does not produce
// an empty final line.
std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.push_back(strip_cr(text.substr(pos)));
            break;
        }
        lines.push_back(strip_cr(text.substr(pos, nl - pos)));
        pos = nl + 1;
    }
    return lines;
}

std::vector<std::string_view> split_fields(std::string_view line, std::size_t max_fields = 0) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        if (max_fields != 0 && fields.size() + 1 == max_fields) {
            fields.push_back(line.substr(pos));
            break;
        }
        std::size_t comma = line.find(',', pos);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(pos));
            break;
        }
        fields.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return fields;
}

double parse_price_field(std::string_view field, std::size_t line_no) {
    field = trim(field);
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || field.empty()) {
        throw Error(ErrorCode::MalformedRow, "line " + std::to_string(line_no) +
                                                 ": non-numeric price '" + std::string(field) + "'");
    }
    if (!std::isfinite(value)) {
        throw Error(ErrorCode::MalformedRow,
                    "line " + std::to_string(line_no) + ": non-finite price");
    }
    if (value <= 0.0) {
        throw Error(ErrorCode::NonPositivePrice,
                    "line " + std::to_string(line_no) + ": price " + std::string(field));
    }
    return value;
}

Date parse_date_field(std::string_view field, std::size_t line_no) {
    auto date = Date::try_parse(trim(field));
    if (!date) {
        throw Error(ErrorCode::MalformedRow, "line " + std::to_string(line_no) + ": bad date '" +
                                                 std::string(field) + "'");
    }
    return *date;
}

void require_header(std::string_view line, std::string_view expected) {
    auto fields = split_fields(line);
    auto wanted = split_fields(expected);
    bool ok = fields.size() == wanted.size();
    for (std::size_t i = 0; ok && i < fields.size(); ++i) {
        ok = trim(fields[i]) == wanted[i];
    }
    if (!ok) {
        throw Error(ErrorCode::MalformedRow, "expected header '" + std::string(expected) +
                                                 "', got '" + std::string(line) + "'");
    }
}

std::string format_price(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

} // namespace

PriceSeries parse_price_csv(std::string_view text, std::string security_id) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw Error(ErrorCode::MalformedRow, "missing 'date,adj_close' header");
    require_header(lines.front(), "date,adj_close");

    PriceSeries series;
    series.security_id = std::move(security_id);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (trim(lines[i]).empty()) continue;
        auto fields = split_fields(lines[i]);
        if (fields.size() != 2) {
            throw Error(ErrorCode::MalformedRow,
                        "line " + std::to_string(i + 1) + ": expected 2 fields, got " +
                            std::to_string(fields.size()));
        }
        PriceObservation obs;
        obs.date = parse_date_field(fields[0], i + 1);
        obs.adj_close = parse_price_field(fields[1], i + 1);
        series.observations.push_back(obs);
    }

    std::sort(series.observations.begin(), series.observations.end(),
              [](const PriceObservation& a, const PriceObservation& b) { return a.date < b.date; });
    for (std::size_t i = 1; i < series.observations.size(); ++i) {
        if (series.observations[i - 1].date == series.observations[i].date) {
            throw Error(ErrorCode::DuplicateDate,
                        "duplicate date " + series.observations[i].date.to_string());
        }
    }
    return series;
}

std::string price_series_to_csv(const PriceSeries& series) {
    std::string out = "date,adj_close\n";
    for (const auto& obs : series.observations) {
        out += obs.date.to_string();
        out += ',';
        out += format_price(obs.adj_close);
        out += '\n';
    }
    return out;
}

std::vector<EventSpec> parse_event_csv(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw Error(ErrorCode::EmptyFile, "events file is empty");
    require_header(lines.front(), "security_id,market_id,announcement_date,label");

    std::vector<EventSpec> events;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (trim(lines[i]).empty()) continue;
        auto fields = split_fields(lines[i], 4);
        if (fields.size() != 4) {
            throw Error(ErrorCode::MalformedRow,
                        "line " + std::to_string(i + 1) + ": expected 4 fields");
        }
        EventSpec event;
        event.security_id = std::string(trim(fields[0]));
        event.market_id = std::string(trim(fields[1]));
        event.announcement_date = parse_date_field(fields[2], i + 1);
        event.label = std::string(trim(fields[3]));
        if (event.security_id.empty() || event.market_id.empty()) {
            throw Error(ErrorCode::MalformedRow,
                        "line " + std::to_string(i + 1) + ": empty identifier");
        }
        events.push_back(std::move(event));
    }
    if (events.empty()) throw Error(ErrorCode::EmptyFile, "events file has no data rows");
    return events;
}

std::string events_to_csv(std::span<const EventSpec> events) {
    std::string out = "security_id,market_id,announcement_date,label\n";
    for (const auto& event : events) {
        out += event.security_id;
        out += ',';
        out += event.market_id;
        out += ',';
        out += event.announcement_date.to_string();
        out += ',';
        out += event.label;
        out += '\n';
    }
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw Error(ErrorCode::IoError, "read failed for " + path.string());
    return std::move(buffer).str();
}

std::filesystem::path price_file_path(const std::filesystem::path& data_dir,
                                      const std::string& security_id) {
    return data_dir / (security_id + ".csv");
}

} // namespace eventstudy
