#include "eventstudy/csv.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace eventstudy;

TEST_SUITE("csv") {

TEST_CASE("parses a minimal well-formed price file") {
    const auto series = parse_price_csv("date,adj_close\n2019-01-02,100.0\n2019-01-03,105.0");
    REQUIRE_EQ(series.observations.size(), 2);
    CHECK_EQ(series.observations[0].date.to_string(), "2019-01-02");
    CHECK_EQ(series.observations[0].adj_close, doctest::Approx(100.0));
    CHECK_EQ(series.observations[1].adj_close, doctest::Approx(105.0));
}

TEST_CASE("rows are sorted by date regardless of input order") {
    const auto forward = parse_price_csv("date,adj_close\n2019-01-02,100.0\n2019-01-03,105.0");
    const auto reversed = parse_price_csv("date,adj_close\n2019-01-03,105.0\n2019-01-02,100.0");
    CHECK(forward == reversed);
}

TEST_CASE("accepts CRLF line endings and blank lines") {
    const auto series =
        parse_price_csv("date,adj_close\r\n2019-01-02,100.0\r\n\r\n2019-01-03,105.0\r\n");
    CHECK_EQ(series.observations.size(), 2);
}

TEST_CASE("rejects bad rows") {
    CHECK_ERROR_CODE(NonPositivePrice, parse_price_csv("date,adj_close\n2019-01-03,-5"));
    CHECK_ERROR_CODE(NonPositivePrice, parse_price_csv("date,adj_close\n2019-01-03,0"));
    CHECK_ERROR_CODE(MalformedRow, parse_price_csv("date,adj_close\n2019-01-03,abc"));
    CHECK_ERROR_CODE(MalformedRow, parse_price_csv("date,adj_close\n2019-13-01,10"));
    CHECK_ERROR_CODE(MalformedRow, parse_price_csv("date,adj_close\n2019-01-03"));
    CHECK_ERROR_CODE(MalformedRow, parse_price_csv("price\n1"));
    CHECK_ERROR_CODE(DuplicateDate,
                     parse_price_csv("date,adj_close\n2019-01-02,1\n2019-01-02,2"));
}

TEST_CASE("price csv round-trips through serialization") {
    GaussianRng rng(99);
    PriceSeries series;
    series.security_id = "RT";
    Date day = Date::from_ymd(2018, 3, 1);
    double price = 73.25;
    for (int i = 0; i < 40; ++i) {
        series.observations.push_back({day, price});
        day = (day + 1 + static_cast<int>(rng.uniform() * 3)).next_weekday_on_or_after();
        price *= 1.0 + 0.02 * rng.gaussian();
    }
    const auto reparsed = parse_price_csv(price_series_to_csv(series), "RT");
    CHECK(series == reparsed);
}

TEST_CASE("parses event lists") {
    const auto one = parse_event_csv(
        "security_id,market_id,announcement_date,label\nVOD,FTSE,2019-05-14,VOD deal\n");
    REQUIRE_EQ(one.size(), 1);
    CHECK_EQ(one[0].security_id, "VOD");
    CHECK_EQ(one[0].market_id, "FTSE");
    CHECK_EQ(one[0].announcement_date.to_string(), "2019-05-14");
    CHECK_EQ(one[0].label, "VOD deal");
}

TEST_CASE("labels may contain commas and order is preserved") {
    std::string text = "security_id,market_id,announcement_date,label\n";
    for (int i = 0; i < 58; ++i) {
        text += "S" + std::to_string(i) + ",MKT,2019-05-14,deal " + std::to_string(i) +
                ", with comma\n";
    }
    const auto events = parse_event_csv(text);
    REQUIRE_EQ(events.size(), 58);
    CHECK_EQ(events[7].security_id, "S7");
    CHECK_EQ(events[7].label, "deal 7, with comma");
}

TEST_CASE("empty event files are rejected") {
    CHECK_ERROR_CODE(EmptyFile, parse_event_csv(""));
    CHECK_ERROR_CODE(EmptyFile, parse_event_csv("security_id,market_id,announcement_date,label\n"));
    CHECK_ERROR_CODE(MalformedRow,
                     parse_event_csv("security_id,market_id,announcement_date,label\nVOD,FTSE\n"));
    CHECK_ERROR_CODE(MalformedRow, parse_event_csv("security_id,market_id,announcement_date,label\n"
                                                   "VOD,FTSE,2019-05-99,x\n"));
}

TEST_CASE("events round-trip through serialization") {
    const std::string text = "security_id,market_id,announcement_date,label\n"
                             "VOD,FTSE,2019-05-14,VOD deal\n"
                             "BP,FTSE,2018-11-02,BP, comma label\n";
    const auto events = parse_event_csv(text);
    CHECK_EQ(events_to_csv(events), text);
}

} // TEST_SUITE
