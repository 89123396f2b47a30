#include "eventstudy/simulate.hpp"

#include "eventstudy/parallel.hpp"
#include "eventstudy/pipeline.hpp"
#include "eventstudy/rng.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <unordered_map>

namespace eventstudy {

namespace {

constexpr std::uint64_t kMarketStream = 0;

std::string security_name(int index) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "SIM%03d", index);
    return buf;
}

std::vector<Date> weekday_calendar(Date start, int length) {
    std::vector<Date> days;
    days.reserve(static_cast<std::size_t>(length));
    Date day = start.next_weekday_on_or_after();
    while (static_cast<int>(days.size()) < length) {
        days.push_back(day);
        day = (day + 1).next_weekday_on_or_after();
    }
    return days;
}

PriceSeries integrate_prices(std::string id, std::span<const Date> dates,
                             std::span<const double> returns, double initial_price) {
    PriceSeries series;
    series.security_id = std::move(id);
    series.observations.reserve(dates.size());
    double price = initial_price;
    series.observations.push_back({dates[0], price});
    for (std::size_t i = 1; i < dates.size(); ++i) {
        price *= 1.0 + returns[i - 1];
        series.observations.push_back({dates[i], price});
    }
    return series;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
    out << contents;
    if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

} // namespace

void SimConfig::validate() const {
    windows.validate();
    if (n_events < 2) throw Error(ErrorCode::InvalidConfig, "n_events must be at least 2");
    if (!(market_daily_vol > 0.0) || !(idio_vol > 0.0)) {
        throw Error(ErrorCode::InvalidConfig, "volatilities must be positive");
    }
    if (!std::isfinite(true_alpha)) {
        throw Error(ErrorCode::InvalidConfig, "true_alpha must be finite");
    }
    if (!(true_beta_range.lo > 0.0 && true_beta_range.lo <= true_beta_range.hi &&
          true_beta_range.hi <= 4.0)) {
        throw Error(ErrorCode::InvalidConfig, "beta range must lie within (0, 4]");
    }
    if (leakage) {
        if (!(leakage->onset_day >= windows.evt_start && leakage->onset_day <= -1)) {
            throw Error(ErrorCode::InvalidConfig,
                        "leakage onset must lie within [evt_start, -1]");
        }
        if (!std::isfinite(leakage->daily_drift) || !std::isfinite(leakage->announcement_jump)) {
            throw Error(ErrorCode::InvalidConfig, "leakage parameters must be finite");
        }
    }
    if (event_spacing < 1) throw Error(ErrorCode::InvalidConfig, "event_spacing must be >= 1");
    if (!(initial_price > 0.0)) {
        throw Error(ErrorCode::InvalidConfig, "initial_price must be positive");
    }
}

SimulatedPanel simulate_panel(const SimConfig& cfg) {
    cfg.validate();

    const int lead = 1 - cfg.windows.est_start;             // trading days before day 0
    const int tail = std::max(cfg.windows.evt_end, 30);     // trading days after day 0
    const int last_announcement = lead + cfg.event_spacing * (cfg.n_events - 1);
    const int calendar_length = last_announcement + tail + 1;
    const std::vector<Date> calendar = weekday_calendar(cfg.start_date, calendar_length);

    // Market returns for calendar steps 1..length-1.
    GaussianRng market_rng(mix_seed(cfg.seed, kMarketStream));
    std::vector<double> market_returns(static_cast<std::size_t>(calendar_length - 1));
    for (double& r : market_returns) r = cfg.market_daily_vol * market_rng.gaussian();

    SimulatedPanel panel;
    panel.market = integrate_prices(cfg.market_id, calendar, market_returns, cfg.initial_price);

    for (int e = 0; e < cfg.n_events; ++e) {
        GaussianRng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(e) + 1));
        const double beta_star = rng.uniform_range(cfg.true_beta_range.lo, cfg.true_beta_range.hi);

        const int announcement_index = lead + cfg.event_spacing * e;
        const int first_index = announcement_index - lead;
        const int last_index = announcement_index + tail;

        EventTruth truth;
        truth.security_id = security_name(e);
        truth.alpha_star = cfg.true_alpha;
        truth.beta_star = beta_star;

        std::vector<double> returns(static_cast<std::size_t>(last_index - first_index));
        for (int i = first_index + 1; i <= last_index; ++i) {
            const int event_day = i - announcement_index;
            double r = cfg.true_alpha + beta_star * market_returns[static_cast<std::size_t>(i - 1)] +
                       cfg.idio_vol * rng.gaussian();
            double injected = 0.0;
            if (cfg.leakage) {
                if (event_day >= cfg.leakage->onset_day && event_day <= -1) {
                    injected += cfg.leakage->daily_drift;
                }
                if (event_day == 0) injected += cfg.leakage->announcement_jump;
            }
            if (injected != 0.0) truth.injected[event_day] = injected;
            returns[static_cast<std::size_t>(i - first_index - 1)] = r + injected;
        }

        const std::span<const Date> window_dates(calendar.data() + first_index,
                                                 static_cast<std::size_t>(tail + lead + 1));
        panel.stocks.push_back(integrate_prices(truth.security_id, window_dates, returns,
                                                cfg.initial_price));

        EventSpec event;
        event.security_id = truth.security_id;
        event.market_id = cfg.market_id;
        event.announcement_date = calendar[static_cast<std::size_t>(announcement_index)];
        event.label = truth.security_id;
        panel.events.push_back(std::move(event));
        panel.truth.push_back(std::move(truth));
    }
    return panel;
}

void write_simulated_panel(const SimulatedPanel& panel, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Error(ErrorCode::IoError, "cannot create " + dir.string());

    write_file(price_file_path(dir, panel.market.security_id), price_series_to_csv(panel.market));
    for (const PriceSeries& stock : panel.stocks) {
        write_file(price_file_path(dir, stock.security_id), price_series_to_csv(stock));
    }
    write_file(dir / "events.csv", events_to_csv(panel.events));

    nlohmann::json truth_json;
    truth_json["events"] = nlohmann::json::array();
    for (const EventTruth& truth : panel.truth) {
        nlohmann::json injected(nlohmann::json::value_t::object);
        for (const auto& [day, value] : truth.injected) {
            injected[std::to_string(day)] = value;
        }
        truth_json["events"].push_back({{"security_id", truth.security_id},
                                        {"alpha_star", truth.alpha_star},
                                        {"beta_star", truth.beta_star},
                                        {"injected", injected}});
    }
    write_file(dir / "truth.json", truth_json.dump(2) + "\n");
}

std::vector<PowerCell> power_study(const SimConfig& base, std::span<const double> drifts,
                                   std::span<const int> event_counts, int replications,
                                   double alpha_level, const DecisionPolicy& policy) {
    base.validate();
    policy.validate();
    if (replications < 1) {
        throw Error(ErrorCode::InvalidConfig, "replications must be at least 1");
    }
    if (drifts.empty() || event_counts.empty()) {
        throw Error(ErrorCode::InvalidConfig, "power grid must be non-empty");
    }

    const LeakageProfile profile = base.leakage.value_or(LeakageProfile{});
    std::vector<PowerCell> cells;
    for (std::size_t di = 0; di < drifts.size(); ++di) {
        for (std::size_t ni = 0; ni < event_counts.size(); ++ni) {
            PowerCell cell;
            cell.daily_drift = drifts[di];
            cell.n_events = event_counts[ni];
            cell.replications = replications;

            const std::uint64_t cell_seed =
                mix_seed(mix_seed(base.seed, di), 0x10000ull + ni);
            std::vector<char> rejected(static_cast<std::size_t>(replications), 0);
            parallel_for(replications, [&](int rep) {
                SimConfig cfg = base;
                cfg.n_events = cell.n_events;
                cfg.seed = mix_seed(cell_seed, static_cast<std::uint64_t>(rep));
                if (cell.daily_drift == 0.0 && profile.announcement_jump == 0.0) {
                    cfg.leakage.reset();
                } else {
                    cfg.leakage = LeakageProfile{profile.onset_day, cell.daily_drift,
                                                 profile.announcement_jump};
                }

                const SimulatedPanel panel = simulate_panel(cfg);
                std::unordered_map<std::string, const PriceSeries*> by_id;
                by_id.emplace(panel.market.security_id, &panel.market);
                for (const PriceSeries& stock : panel.stocks) {
                    by_id.emplace(stock.security_id, &stock);
                }
                const StudyOutcome outcome = run_pipeline(
                    panel.events,
                    [&](const std::string& id) -> const PriceSeries& { return *by_id.at(id); },
                    cfg.windows, alpha_level, policy);
                rejected[static_cast<std::size_t>(rep)] =
                    outcome.result.hypothesis_decision == Hypothesis::reject_H0 ? 1 : 0;
            });

            for (char r : rejected) cell.rejections += r;
            cell.rejection_rate =
                static_cast<double>(cell.rejections) / static_cast<double>(replications);
            cells.push_back(cell);
        }
    }
    return cells;
}

} // namespace eventstudy
