#include "eventstudy/report.hpp"
#include "eventstudy/simulate.hpp"
#include "eventstudy/version.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace eventstudy;

struct StudyArgs {
    StudyConfig cfg;
    bool print_summary = true;
};

void add_window_options(CLI::App* app, WindowConfig& windows) {
    app->add_option("--est-start", windows.est_start, "Estimation window start (event-day)")
        ->capture_default_str();
    app->add_option("--est-end", windows.est_end, "Estimation window end (event-day)")
        ->capture_default_str();
    app->add_option("--evt-start", windows.evt_start, "Event window start (event-day)")
        ->capture_default_str();
    app->add_option("--evt-end", windows.evt_end, "Event window end (event-day)")
        ->capture_default_str();
    app->add_option("--min-est-days", windows.min_estimation_days,
                    "Minimum paired estimation-window days")
        ->capture_default_str();
}

int run_study_command(const StudyArgs& args) {
    const Report report = run_study(args.cfg);
    emit_report(report, args.cfg.output_dir);
    if (args.print_summary) std::cout << render_summary(report);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Event-study analysis of abnormal returns around announcements"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("eventstudy ") + kVersion);
    app.set_config("--config", "", "Read options from a key=value config file");

    // study
    StudyArgs study;
    auto* study_cmd = app.add_subcommand("study", "Run an event study over CSV price data");
    study_cmd->add_option("--data-dir", study.cfg.data_dir, "Directory with <security_id>.csv files")
        ->required();
    study_cmd->add_option("--events", study.cfg.events_file, "Events CSV file")->required();
    study_cmd->add_option("--out", study.cfg.output_dir, "Output directory")->required();
    study_cmd->add_option("--alpha", study.cfg.alpha_level, "Two-sided significance level")
        ->capture_default_str();
    add_window_options(study_cmd, study.cfg.windows);
    study_cmd
        ->add_option("--k-consecutive", study.cfg.policy.k_consecutive,
                     "Consecutive significant days required to reject H0")
        ->capture_default_str();
    study_cmd->add_option("--runup-start", study.cfg.policy.runup_start, "Run-up window start")
        ->capture_default_str();
    study_cmd->add_option("--runup-end", study.cfg.policy.runup_end, "Run-up window end")
        ->capture_default_str();
    study_cmd->add_flag("--strict-day0", study.cfg.strict_day0,
                        "Fail when an announcement is not a trading day");
    study_cmd->add_flag("--fixed-clock", study.cfg.fixed_clock,
                        "Freeze the report timestamp for reproducible output");
    study_cmd->add_flag("!--no-summary", study.print_summary, "Suppress the summary printout");

    // simulate
    SimConfig sim;
    std::string sim_out;
    double leak_drift = 0.0;
    double leak_jump = 0.0;
    int leak_onset = -16;
    auto* sim_cmd = app.add_subcommand("simulate", "Generate a synthetic price panel");
    sim_cmd->add_option("--out", sim_out, "Output directory")->required();
    sim_cmd->add_option("--events", sim.n_events, "Number of simulated events")
        ->capture_default_str();
    sim_cmd->add_option("--seed", sim.seed, "RNG seed")->capture_default_str();
    sim_cmd->add_option("--market-vol", sim.market_daily_vol, "Market daily volatility")
        ->capture_default_str();
    sim_cmd->add_option("--idio-vol", sim.idio_vol, "Idiosyncratic daily volatility")
        ->capture_default_str();
    sim_cmd->add_option("--alpha-true", sim.true_alpha, "True per-day drift alpha*")
        ->capture_default_str();
    sim_cmd->add_option("--beta-min", sim.true_beta_range.lo, "Lower true beta bound")
        ->capture_default_str();
    sim_cmd->add_option("--beta-max", sim.true_beta_range.hi, "Upper true beta bound")
        ->capture_default_str();
    sim_cmd->add_option("--spacing", sim.event_spacing, "Trading days between announcements")
        ->capture_default_str();
    auto* onset_opt =
        sim_cmd->add_option("--leak-onset", leak_onset, "First leakage day (negative)");
    onset_opt->capture_default_str();
    sim_cmd->add_option("--leak-drift", leak_drift, "Daily abnormal drift on leakage days")
        ->capture_default_str();
    sim_cmd->add_option("--leak-jump", leak_jump, "Day-0 abnormal jump")->capture_default_str();
    add_window_options(sim_cmd, sim.windows);

    // power
    SimConfig power_base;
    std::vector<double> drifts{0.0, 0.005, 0.01};
    std::vector<int> counts{18, 40};
    int replications = 200;
    double power_alpha = 0.05;
    DecisionPolicy power_policy;
    int power_onset = -16;
    double power_jump = 0.0;
    std::string power_out;
    auto* power_cmd = app.add_subcommand(
        "power", "Rejection rate of the run-up decision across a simulation grid");
    power_cmd->add_option("--drifts", drifts, "Leakage drift grid")->capture_default_str();
    power_cmd->add_option("--events", counts, "Event-count grid")->capture_default_str();
    power_cmd->add_option("--reps", replications, "Replications per cell")->capture_default_str();
    power_cmd->add_option("--seed", power_base.seed, "RNG seed")->capture_default_str();
    power_cmd->add_option("--alpha", power_alpha, "Two-sided significance level")
        ->capture_default_str();
    power_cmd->add_option("--idio-vol", power_base.idio_vol, "Idiosyncratic daily volatility")
        ->capture_default_str();
    power_cmd->add_option("--market-vol", power_base.market_daily_vol, "Market daily volatility")
        ->capture_default_str();
    power_cmd->add_option("--leak-onset", power_onset, "First leakage day (negative)")
        ->capture_default_str();
    power_cmd->add_option("--leak-jump", power_jump, "Day-0 abnormal jump")
        ->capture_default_str();
    power_cmd
        ->add_option("--k-consecutive", power_policy.k_consecutive,
                     "Consecutive significant days required to reject H0")
        ->capture_default_str();
    power_cmd->add_option("--out", power_out, "Optional CSV output path");
    add_window_options(power_cmd, power_base.windows);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (study_cmd->parsed()) {
            return run_study_command(study);
        }
        if (sim_cmd->parsed()) {
            if (leak_drift != 0.0 || leak_jump != 0.0 || onset_opt->count() > 0) {
                sim.leakage = LeakageProfile{leak_onset, leak_drift, leak_jump};
            }
            const SimulatedPanel panel = simulate_panel(sim);
            write_simulated_panel(panel, sim_out);
            std::cout << "wrote " << panel.stocks.size() << " securities, events.csv and truth.json to "
                      << sim_out << "\n";
            return 0;
        }
        if (power_cmd->parsed()) {
            power_base.leakage = LeakageProfile{power_onset, 0.0, power_jump};
            const auto cells =
                power_study(power_base, drifts, counts, replications, power_alpha, power_policy);
            std::string table = "daily_drift,n_events,replications,rejections,rejection_rate\n";
            std::printf("%12s %9s %6s %10s %9s\n", "daily_drift", "n_events", "reps", "rejections",
                        "rate");
            for (const PowerCell& cell : cells) {
                std::printf("%12g %9d %6d %10d %9.3f\n", cell.daily_drift, cell.n_events,
                            cell.replications, cell.rejections, cell.rejection_rate);
                char row[128];
                std::snprintf(row, sizeof(row), "%.17g,%d,%d,%d,%.17g\n", cell.daily_drift,
                              cell.n_events, cell.replications, cell.rejections,
                              cell.rejection_rate);
                table += row;
            }
            if (!power_out.empty()) {
                std::ofstream out(power_out, std::ios::binary | std::ios::trunc);
                if (!out) throw Error(ErrorCode::IoError, "cannot open " + power_out);
                out << table;
            }
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
