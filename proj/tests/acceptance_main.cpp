// Acceptance suite: one self-contained check per release criterion, each
// printed as a single [PASS]/[FAIL] line. Exit status is the number of
// failing criteria.

#include "eventstudy/pipeline.hpp"
#include "eventstudy/report.hpp"
#include "eventstudy/rng.hpp"
#include "eventstudy/simulate.hpp"
#include "eventstudy/stats.hpp"
#include "eventstudy/student_t.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unordered_map>
#include <vector>

namespace {

using namespace eventstudy;
namespace fs = std::filesystem;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return {};
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

fs::path fresh_dir(const std::string& name) {
    auto dir = fs::temp_directory_path() / ("eventstudy_acceptance_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

StudyOutcome analyze(const SimulatedPanel& panel, const WindowConfig& windows,
                     double alpha = 0.05, DecisionPolicy policy = {}) {
    std::unordered_map<std::string, const PriceSeries*> by_id;
    by_id.emplace(panel.market.security_id, &panel.market);
    for (const PriceSeries& stock : panel.stocks) by_id.emplace(stock.security_id, &stock);
    return run_pipeline(
        panel.events,
        [&](const std::string& id) -> const PriceSeries& { return *by_id.at(id); }, windows,
        alpha, policy);
}

// --- criterion 1 -----------------------------------------------------------
// ols_fit matches the closed-form normal-equations oracle to 1e-10 on 100
// random instances (n = 59); residual-sum and orthogonality invariants hold;
// runtime < 1 s.
Outcome criterion_equation_oracle() {
    const auto start = std::chrono::steady_clock::now();
    double worst_coef = 0.0;
    double worst_invariant = 0.0;
    for (int instance = 0; instance < 100; ++instance) {
        GaussianRng rng(mix_seed(1001, static_cast<std::uint64_t>(instance)));
        const double alpha_true = 0.002 * rng.gaussian();
        const double beta_true = rng.uniform_range(0.2, 2.5);
        std::vector<double> market(59);
        std::vector<double> stock(59);
        for (std::size_t i = 0; i < market.size(); ++i) {
            market[i] = 0.012 * rng.gaussian();
            stock[i] = alpha_true + beta_true * market[i] + 0.01 * rng.gaussian();
        }
        const MarketModelFit fit = ols_fit(stock, market);
        const oracles::OlsOracle oracle = oracles::ols_closed_form(stock, market);
        worst_coef = std::max({worst_coef, std::fabs(fit.alpha - oracle.alpha),
                               std::fabs(fit.beta - oracle.beta)});

        double residual_sum = 0.0;
        double cross = 0.0;
        for (std::size_t i = 0; i < market.size(); ++i) {
            const double e = stock[i] - fit.alpha - fit.beta * market[i];
            residual_sum += e;
            cross += e * market[i];
        }
        const double n = static_cast<double>(market.size());
        worst_invariant =
            std::max({worst_invariant, std::fabs(residual_sum) / n, std::fabs(cross) / n});
    }
    const double elapsed = seconds_since(start);

    Outcome outcome;
    outcome.pass = worst_coef < 1e-10 && worst_invariant < 1e-9 && elapsed < 1.0;
    std::ostringstream detail;
    detail << "max coefficient gap " << worst_coef << ", max invariant " << worst_invariant
           << ", " << elapsed << "s";
    outcome.detail = detail.str();
    return outcome;
}

// --- criterion 2 -----------------------------------------------------------
// caar(t) equals the prefix sum of aar on 50 random complete panels to 1e-12;
// runtime < 1 s.
Outcome criterion_caar_prefix_sum() {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int p = 0; p < 50; ++p) {
        GaussianRng rng(mix_seed(2002, static_cast<std::uint64_t>(p)));
        const int n_events = 3 + static_cast<int>(rng.uniform() * 38.0);
        AbnormalReturnPanel panel;
        for (int day = -30; day <= 10; ++day) panel.event_days.push_back(day);
        for (int e = 0; e < n_events; ++e) {
            std::string label = "E" + std::to_string(e);
            std::map<int, double> row;
            for (int day = -30; day <= 10; ++day) {
                row[day] = 0.02 * rng.gaussian();
                panel.events_with_data[day] += 1;
            }
            panel.event_order.push_back(label);
            panel.per_event.emplace(std::move(label), std::move(row));
        }
        double prefix = 0.0;
        for (int day : panel.event_days) {
            prefix += aar(panel, day).first;
            worst = std::max(worst, std::fabs(caar(panel, day) - prefix));
        }
    }
    const double elapsed = seconds_since(start);

    Outcome outcome;
    outcome.pass = worst < 1e-12 && elapsed < 1.0;
    std::ostringstream detail;
    detail << "max |caar - prefix aar| = " << worst << ", " << elapsed << "s";
    outcome.detail = detail.str();
    return outcome;
}

// --- criterion 3 -----------------------------------------------------------
// Reaction-fraction arithmetic reproduces the reported percentages at the
// printed rounding: 0.037/0.061 -> 60.7% and 0.025/0.077 -> 32.5%.
Outcome criterion_reaction_arithmetic() {
    const std::string first = format_percent(reaction_fraction(0.037, 0.061));
    const std::string second = format_percent(reaction_fraction(0.025, 0.077));
    Outcome outcome;
    outcome.pass = first == "60.7%" && second == "32.5%";
    outcome.detail = "0.037/0.061 -> " + first + ", 0.025/0.077 -> " + second;
    return outcome;
}

// --- criterion 4 -----------------------------------------------------------
// Null calibration: no leakage, 40 events, 200 replications. Per-day
// significance frequency at alpha = 0.05 must stay within [0.02, 0.08] for
// every event day, and the consistency policy must reject in at most 5% of
// replications. Runtime < 60 s.
Outcome criterion_null_calibration() {
    const auto start = std::chrono::steady_clock::now();
    constexpr int kReplications = 200;
    const WindowConfig windows;
    const int window_days = windows.event_window_length();

    std::vector<int> significant_count(static_cast<std::size_t>(window_days), 0);
    int rejections = 0;
    for (int rep = 0; rep < kReplications; ++rep) {
        SimConfig cfg;
        cfg.n_events = 40;
        cfg.seed = mix_seed(0xEC0, static_cast<std::uint64_t>(rep));
        const StudyOutcome outcome = analyze(simulate_panel(cfg), windows);
        for (std::size_t d = 0; d < outcome.result.stats.size(); ++d) {
            if (outcome.result.stats[d].significant) ++significant_count[d];
        }
        if (outcome.result.hypothesis_decision == Hypothesis::reject_H0) ++rejections;
    }

    double min_freq = 1.0;
    double max_freq = 0.0;
    for (int count : significant_count) {
        const double freq = static_cast<double>(count) / kReplications;
        min_freq = std::min(min_freq, freq);
        max_freq = std::max(max_freq, freq);
    }
    const double reject_rate = static_cast<double>(rejections) / kReplications;
    const double elapsed = seconds_since(start);

    Outcome outcome;
    outcome.pass =
        min_freq >= 0.02 && max_freq <= 0.08 && reject_rate <= 0.05 && elapsed < 60.0;
    std::ostringstream detail;
    detail << "per-day significance frequency in [" << min_freq << ", " << max_freq
           << "], decision rejects " << reject_rate * 100.0 << "%, " << elapsed << "s";
    outcome.detail = detail.str();
    return outcome;
}

// --- criterion 5 -----------------------------------------------------------
// Detection power: leakage onset -16 with daily drift equal to 1.0x the
// idiosyncratic volatility. 40 events must reject in at least 95% of 200
// replications and 18 events must reject strictly less often. Runtime < 60 s.
Outcome criterion_detection_power() {
    const auto start = std::chrono::steady_clock::now();
    SimConfig base;
    base.seed = 42;
    base.leakage = LeakageProfile{-16, 0.0, 0.0};
    const std::vector<double> drifts{base.idio_vol}; // 1.0x idio_vol
    const std::vector<int> counts{40, 18};
    const auto cells = power_study(base, drifts, counts, 200, 0.05, DecisionPolicy{});
    const double rate40 = cells[0].rejection_rate;
    const double rate18 = cells[1].rejection_rate;
    const double elapsed = seconds_since(start);

    Outcome outcome;
    outcome.pass = rate40 >= 0.95 && rate18 < rate40 && elapsed < 60.0;
    std::ostringstream detail;
    detail << "rejection rate: n=40 -> " << rate40 << ", n=18 -> " << rate18 << ", " << elapsed
           << "s";
    outcome.detail = detail.str();
    return outcome;
}

// --- criterion 6 -----------------------------------------------------------
// Ground-truth recovery: idio_vol = 1e-6 panels recover (alpha*, beta*) to
// 1e-4 and produce |AAR| < 1e-6 on all non-leakage days.
Outcome criterion_ground_truth() {
    SimConfig cfg;
    cfg.n_events = 40;
    cfg.seed = 606;
    cfg.idio_vol = 1e-6;
    cfg.true_alpha = 0.0003;
    const SimulatedPanel panel = simulate_panel(cfg);
    const StudyOutcome outcome = analyze(panel, cfg.windows);

    double worst_param = 0.0;
    for (std::size_t e = 0; e < outcome.build.fits.size(); ++e) {
        worst_param = std::max({worst_param,
                                std::fabs(outcome.build.fits[e].alpha - panel.truth[e].alpha_star),
                                std::fabs(outcome.build.fits[e].beta - panel.truth[e].beta_star)});
    }
    double worst_aar = 0.0;
    for (const DayStat& stat : outcome.result.stats) {
        if (stat.aar) worst_aar = std::max(worst_aar, std::fabs(*stat.aar));
    }

    Outcome result;
    result.pass = outcome.build.fits.size() == 40 && worst_param < 1e-4 && worst_aar < 1e-6;
    std::ostringstream detail;
    detail << "max parameter error " << worst_param << ", max |AAR| " << worst_aar;
    result.detail = detail.str();
    return result;
}

// --- criterion 7 -----------------------------------------------------------
// Determinism: two CLI runs of `study` on the checked-in two-event fixture
// produce byte-identical report.json under --fixed-clock, matching the
// committed golden file.
Outcome criterion_determinism() {
    const fs::path fixtures = fs::path(EVENTSTUDY_FIXTURES_DIR) / "two_event";
    const fs::path golden = fs::path(EVENTSTUDY_FIXTURES_DIR) / "golden" / "report.json";
    const fs::path out_a = fresh_dir("determinism_a");
    const fs::path out_b = fresh_dir("determinism_b");

    auto run = [&](const fs::path& out) {
        const std::string command = std::string("cd \"") + fixtures.string() + "\" && \"" +
                                    EVENTSTUDY_CLI_PATH +
                                    "\" study --data-dir . --events events.csv --out \"" +
                                    out.string() + "\" --fixed-clock >/dev/null 2>/dev/null";
        const int status = std::system(command.c_str());
        return status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0;
    };

    Outcome outcome;
    if (!run(out_a) || !run(out_b)) {
        outcome.detail = "study runs failed";
        return outcome;
    }
    const std::string a = slurp(out_a / "report.json");
    const std::string b = slurp(out_b / "report.json");
    const std::string gold = slurp(golden);
    const bool identical = !a.empty() && a == b;
    const bool matches_golden = a == gold;
    outcome.pass = identical && matches_golden;
    std::ostringstream detail;
    detail << "run-to-run " << (identical ? "identical" : "DIFFERENT") << ", golden "
           << (matches_golden ? "matched" : "MISMATCH") << " (" << a.size() << " bytes)";
    outcome.detail = detail.str();
    fs::remove_all(out_a);
    fs::remove_all(out_b);
    return outcome;
}

// --- criterion 8 -----------------------------------------------------------
// t-distribution critical values for df in {5, 17, 39} at alpha = 0.05
// two-sided match reference values to 1e-6 and an independent quadrature
// oracle built on the t density.
Outcome criterion_t_critical_values() {
    struct Reference {
        int df;
        double value; // t_{0.975, df}
    };
    const std::vector<Reference> references{
        {5, 2.5705818356363141}, {17, 2.1098155778331806}, {39, 2.0226909200367604}};

    double worst_ref = 0.0;
    double worst_oracle = 0.0;
    for (const Reference& ref : references) {
        const double computed = student_t_critical(0.05, ref.df);
        worst_ref = std::max(worst_ref, std::fabs(computed - ref.value));
        worst_oracle = std::max(
            worst_oracle, std::fabs(computed - oracles::t_critical_quadrature(0.05, ref.df)));
    }

    Outcome outcome;
    outcome.pass = worst_ref < 1e-6 && worst_oracle < 1e-6;
    std::ostringstream detail;
    detail << "max |gap to reference| = " << worst_ref << ", to quadrature oracle = "
           << worst_oracle;
    outcome.detail = detail.str();
    return outcome;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"C1 market-model OLS matches the closed-form oracle", criterion_equation_oracle},
        {"C2 CAAR equals the prefix sum of AAR on complete panels", criterion_caar_prefix_sum},
        {"C3 reaction-fraction arithmetic reproduces 60.7% and 32.5%",
         criterion_reaction_arithmetic},
        {"C4 null simulation is calibrated at alpha = 0.05", criterion_null_calibration},
        {"C5 leakage detection power (40 events >= 95%, 18 events lower)",
         criterion_detection_power},
        {"C6 ground-truth recovery at idio_vol = 1e-6", criterion_ground_truth},
        {"C7 byte-identical report.json on the two-event fixture", criterion_determinism},
        {"C8 t critical values match the independent oracle", criterion_t_critical_values},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        Outcome outcome;
        try {
            outcome = criterion.run();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] %s (%s)\n", outcome.pass ? "PASS" : "FAIL", criterion.name,
                    outcome.detail.c_str());
        std::fflush(stdout);
        if (!outcome.pass) ++failures;
    }
    if (failures > 0) {
        std::printf("%d of %zu acceptance criteria failed\n", failures, criteria.size());
    } else {
        std::printf("all %zu acceptance criteria passed\n", criteria.size());
    }
    return failures;
}
