#pragma once

#include "eventstudy/pipeline.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <string>

namespace eventstudy {

struct StudyConfig {
    std::filesystem::path data_dir;
    std::filesystem::path events_file;
    std::filesystem::path output_dir;
    WindowConfig windows;
    double alpha_level = 0.05;
    DecisionPolicy policy;
    bool strict_day0 = false;
    /// Freeze generated_at_unix to 0 so identical inputs give byte-identical
    /// reports.
    bool fixed_clock = false;
};

/// Full study output: the per-day table over the event window plus exclusion
/// provenance and run metadata. The output directory is intentionally not
/// echoed, so a report's bytes do not depend on where it is written.
struct Report {
    std::string tool_version;
    std::int64_t generated_at_unix = 0;
    StudyConfig config;
    int events_total = 0;
    std::vector<std::string> included_events; // input order
    std::vector<ExcludedEvent> excluded_events;
    EventStudyResult result;
};

/// Loads the events file and one price CSV per referenced security, then runs
/// the analysis pipeline. Parse and I/O failures propagate; alignment and fit
/// failures become per-event exclusions. Throws Error(NoUsableEvents) when
/// fewer than 2 events survive.
Report run_study(const StudyConfig& cfg);

nlohmann::json report_to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);

/// Writes report.json, day_stats.csv, aar.csv and caar.csv into out_dir.
/// Throws Error(IoError).
void emit_report(const Report& report, const std::filesystem::path& out_dir);

/// Short human-readable summary; percentages rendered to one decimal.
std::string render_summary(const Report& report);

/// Fraction as a percentage with one decimal, e.g. 0.60656 -> "60.7%".
std::string format_percent(double fraction);

} // namespace eventstudy
