#include "eventstudy/report.hpp"

#include "eventstudy/version.hpp"

#include <charconv>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <map>
#include <sstream>

namespace eventstudy {

namespace {

std::string shortest(double value) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
    out << contents;
    if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

nlohmann::json optional_to_json(const std::optional<double>& value) {
    if (!value) return nullptr;
    return *value;
}

std::optional<double> optional_from_json(const nlohmann::json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<double>();
}

} // namespace

std::string format_percent(double fraction) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f%%", 100.0 * fraction);
    return buf;
}

Report run_study(const StudyConfig& cfg) {
    cfg.windows.validate();
    cfg.policy.validate();

    const std::vector<EventSpec> events = parse_event_csv(read_text_file(cfg.events_file));

    std::map<std::string, PriceSeries> cache;
    auto series_by_id = [&](const std::string& id) -> const PriceSeries& {
        auto it = cache.find(id);
        if (it == cache.end()) {
            const auto path = price_file_path(cfg.data_dir, id);
            it = cache.emplace(id, parse_price_csv(read_text_file(path), id)).first;
        }
        return it->second;
    };

    StudyOutcome outcome = run_pipeline(events, series_by_id, cfg.windows, cfg.alpha_level,
                                        cfg.policy, cfg.strict_day0);

    Report report;
    report.tool_version = kVersion;
    report.generated_at_unix = cfg.fixed_clock ? 0 : static_cast<std::int64_t>(std::time(nullptr));
    report.config = cfg;
    report.events_total = static_cast<int>(events.size());
    report.included_events = outcome.build.panel.event_order;
    report.excluded_events = std::move(outcome.excluded);
    report.result = std::move(outcome.result);
    return report;
}

nlohmann::json report_to_json(const Report& report) {
    nlohmann::json j;
    j["tool_version"] = report.tool_version;
    j["generated_at_unix"] = report.generated_at_unix;

    nlohmann::json config;
    config["data_dir"] = report.config.data_dir.string();
    config["events_file"] = report.config.events_file.string();
    config["alpha_level"] = report.config.alpha_level;
    config["strict_day0"] = report.config.strict_day0;
    config["fixed_clock"] = report.config.fixed_clock;
    config["windows"] = {{"est_start", report.config.windows.est_start},
                         {"est_end", report.config.windows.est_end},
                         {"evt_start", report.config.windows.evt_start},
                         {"evt_end", report.config.windows.evt_end},
                         {"min_estimation_days", report.config.windows.min_estimation_days}};
    config["decision_policy"] = {{"k_consecutive", report.config.policy.k_consecutive},
                                 {"runup_start", report.config.policy.runup_start},
                                 {"runup_end", report.config.policy.runup_end}};
    j["config"] = config;

    j["events_total"] = report.events_total;
    j["included_events"] = report.included_events;
    j["excluded_events"] = nlohmann::json::array();
    for (const ExcludedEvent& excluded : report.excluded_events) {
        j["excluded_events"].push_back({{"label", excluded.label},
                                        {"reason", std::string(to_string(excluded.reason))},
                                        {"message", excluded.message}});
    }

    j["day_stats"] = nlohmann::json::array();
    for (const DayStat& stat : report.result.stats) {
        j["day_stats"].push_back({{"event_day", stat.event_day},
                                  {"aar", optional_to_json(stat.aar)},
                                  {"sigma", optional_to_json(stat.sigma)},
                                  {"n", stat.n},
                                  {"t_stat", optional_to_json(stat.t_stat)},
                                  {"significant", stat.significant},
                                  {"caar", stat.caar}});
    }
    j["significant_days"] = report.result.significant_days;
    j["gapped_events"] = report.result.gapped_events;
    j["reaction_fraction"] = optional_to_json(report.result.reaction_fraction);
    j["hypothesis_decision"] = std::string(to_string(report.result.hypothesis_decision));
    return j;
}

Report report_from_json(const nlohmann::json& j) {
    Report report;
    report.tool_version = j.at("tool_version").get<std::string>();
    report.generated_at_unix = j.at("generated_at_unix").get<std::int64_t>();

    const auto& config = j.at("config");
    report.config.data_dir = config.at("data_dir").get<std::string>();
    report.config.events_file = config.at("events_file").get<std::string>();
    report.config.alpha_level = config.at("alpha_level").get<double>();
    report.config.strict_day0 = config.at("strict_day0").get<bool>();
    report.config.fixed_clock = config.at("fixed_clock").get<bool>();
    const auto& windows = config.at("windows");
    report.config.windows.est_start = windows.at("est_start").get<int>();
    report.config.windows.est_end = windows.at("est_end").get<int>();
    report.config.windows.evt_start = windows.at("evt_start").get<int>();
    report.config.windows.evt_end = windows.at("evt_end").get<int>();
    report.config.windows.min_estimation_days = windows.at("min_estimation_days").get<int>();
    const auto& policy = config.at("decision_policy");
    report.config.policy.k_consecutive = policy.at("k_consecutive").get<int>();
    report.config.policy.runup_start = policy.at("runup_start").get<int>();
    report.config.policy.runup_end = policy.at("runup_end").get<int>();

    report.events_total = j.at("events_total").get<int>();
    report.included_events = j.at("included_events").get<std::vector<std::string>>();
    for (const auto& entry : j.at("excluded_events")) {
        report.excluded_events.push_back(
            {entry.at("label").get<std::string>(),
             error_code_from_string(entry.at("reason").get<std::string>()),
             entry.at("message").get<std::string>()});
    }

    report.result.alpha_level = report.config.alpha_level;
    for (const auto& entry : j.at("day_stats")) {
        DayStat stat;
        stat.event_day = entry.at("event_day").get<int>();
        stat.aar = optional_from_json(entry.at("aar"));
        stat.sigma = optional_from_json(entry.at("sigma"));
        stat.n = entry.at("n").get<int>();
        stat.t_stat = optional_from_json(entry.at("t_stat"));
        stat.significant = entry.at("significant").get<bool>();
        stat.caar = entry.at("caar").get<double>();
        report.result.stats.push_back(stat);
    }
    report.result.significant_days = j.at("significant_days").get<std::vector<int>>();
    report.result.gapped_events = j.at("gapped_events").get<std::vector<std::string>>();
    report.result.reaction_fraction = optional_from_json(j.at("reaction_fraction"));
    report.result.hypothesis_decision =
        hypothesis_from_string(j.at("hypothesis_decision").get<std::string>());
    return report;
}

void emit_report(const Report& report, const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw Error(ErrorCode::IoError, "cannot create " + out_dir.string());

    write_file(out_dir / "report.json", report_to_json(report).dump(2) + "\n");

    std::string day_stats = "event_day,aar,sigma,n,t_stat,significant,caar\n";
    std::string aar_csv = "event_day,value\n";
    std::string caar_csv = "event_day,value\n";
    for (const DayStat& stat : report.result.stats) {
        day_stats += std::to_string(stat.event_day);
        day_stats += ',';
        if (stat.aar) day_stats += shortest(*stat.aar);
        day_stats += ',';
        if (stat.sigma) day_stats += shortest(*stat.sigma);
        day_stats += ',';
        day_stats += std::to_string(stat.n);
        day_stats += ',';
        if (stat.t_stat) day_stats += shortest(*stat.t_stat);
        day_stats += ',';
        day_stats += stat.significant ? '1' : '0';
        day_stats += ',';
        day_stats += shortest(stat.caar);
        day_stats += '\n';

        if (stat.aar) {
            aar_csv += std::to_string(stat.event_day) + ',' + shortest(*stat.aar) + '\n';
        }
        caar_csv += std::to_string(stat.event_day) + ',' + shortest(stat.caar) + '\n';
    }
    write_file(out_dir / "day_stats.csv", day_stats);
    write_file(out_dir / "aar.csv", aar_csv);
    write_file(out_dir / "caar.csv", caar_csv);
}

std::string render_summary(const Report& report) {
    std::ostringstream out;
    out << "event study: " << report.included_events.size() << " of " << report.events_total
        << " events included";
    if (!report.excluded_events.empty()) {
        out << " (" << report.excluded_events.size() << " excluded)";
    }
    out << "\n";
    out << "event window " << report.config.windows.evt_start << ".."
        << report.config.windows.evt_end << ", estimation window "
        << report.config.windows.est_start << ".." << report.config.windows.est_end << "\n";

    out << "significant days (alpha=" << report.config.alpha_level << "): ";
    if (report.result.significant_days.empty()) {
        out << "none";
    } else {
        for (std::size_t i = 0; i < report.result.significant_days.size(); ++i) {
            if (i > 0) out << ", ";
            out << report.result.significant_days[i];
        }
    }
    out << "\n";

    std::optional<double> caar_m1;
    std::optional<double> caar_0;
    for (const DayStat& stat : report.result.stats) {
        if (stat.event_day == -1) caar_m1 = stat.caar;
        if (stat.event_day == 0) caar_0 = stat.caar;
    }
    if (caar_m1 && caar_0) {
        char line[128];
        std::snprintf(line, sizeof(line), "CAAR(-1) = %.4f, CAAR(0) = %.4f", *caar_m1, *caar_0);
        out << line;
        if (report.result.reaction_fraction) {
            out << " -> " << format_percent(*report.result.reaction_fraction)
                << " of the market reaction occurred before the announcement";
        }
        out << "\n";
    }
    out << "decision: " << to_string(report.result.hypothesis_decision) << "\n";
    return out.str();
}

} // namespace eventstudy
