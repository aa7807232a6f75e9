#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "utsforge/analysis.hpp"
#include "utsforge/artifacts.hpp"
#include "utsforge/config.hpp"
#include "utsforge/errors.hpp"

namespace utsforge::cli {

namespace {

std::string g(double x, int digits = 6) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

std::string coords(const TaskCoordinates& c) {
    return "(" + std::to_string(c.m) + "," + std::to_string(c.j) + "," + std::to_string(c.s) + ")";
}

void write_text(const std::filesystem::path& file, const std::string& text) {
    std::ofstream f(file, std::ios::binary | std::ios::trunc);
    f << text;
    f.close();
    if (!f) throw ArtifactError("cannot write " + file.string());
}

}  // namespace

int cmd_run(const std::filesystem::path& config, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    ForgeOutcome outcome;
    const auto started = std::chrono::steady_clock::now();
    try {
        cfg = load_config(config);
        outcome = run_forge(cfg.request);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

    RunArtifacts artifacts{outcome.series, std::nullopt, seconds};
    if (outcome.failure)
        artifacts.failure = RunFailure{*outcome.failure, *outcome.failed_task, outcome.transform_fault};
    try {
        write_artifacts(cfg.output_dir, artifacts);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }

    const auto& s = outcome.series;
    out << "transform " << to_string(s.transform.kind()) << ", density " << g(s.config.density)
        << ", maxDegree " << s.config.max_degree << "\n";
    for (std::size_t i = 0; i < s.state.ledger.size(); ++i) {
        const auto& e = s.state.ledger[i];
        out << "task " << i + 1 << " " << coords(e.coords) << "  N=" << e.chosen_n
            << "  deg=" << e.fit_degree << "  err=" << g(e.achieved_error, 3) << " < tol=" << g(e.tol, 3)
            << "  " << g(e.seconds, 3) << "s\n";
    }
    out << s.state.ledger.size() << " tasks, " << s.state.coefficients.size() << " coefficients, "
        << g(seconds, 3) << "s -> " << cfg.output_dir.string() << "\n";
    if (outcome.failure) {
        err << "failed at task " << coords(*outcome.failed_task) << ": " << *outcome.failure << "\n";
        return outcome.transform_fault ? kExitError : kExitApproximationFailed;
    }
    return kExitOk;
}

int cmd_verify(const std::filesystem::path& dir, double density_multiplier, std::ostream& out,
               std::ostream& err) {
    try {
        const RunArtifacts artifacts = read_artifacts(dir);
        const auto report = verify_series(artifacts.series, artifacts.series.transform, density_multiplier);

        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : report.rows) {
            rows.push_back({{"entry", r.entry},
                            {"task", {{"m", r.coords.m}, {"j", r.coords.j}, {"s", r.coords.s}}},
                            {"chosenN", r.n},
                            {"tol", r.tol},
                            {"recorded", r.recorded},
                            {"recomputed", r.recomputed},
                            {"delta", r.delta},
                            {"pass", r.pass}});
            out << (r.pass ? "ok   " : "FAIL ") << "entry " << r.entry << " " << coords(r.coords)
                << "  recomputed=" << g(r.recomputed, 3) << " tol=" << g(r.tol, 3)
                << "  |delta|=" << g(r.delta, 3) << "\n";
        }
        const nlohmann::json doc{{"densityMultiplier", density_multiplier},
                                 {"allPass", report.all_pass()},
                                 {"rows", std::move(rows)}};
        write_text(dir / kVerificationFile, doc.dump(2) + "\n");
        out << (report.all_pass() ? "verified " : "verification failed: ") << report.rows.size()
            << " entries at density x" << g(density_multiplier) << "\n";
        return report.all_pass() ? kExitOk : kExitError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

int cmd_plotdata(const std::filesystem::path& dir, double window_fraction, std::ostream& out,
                 std::ostream& err) {
    try {
        const RunArtifacts artifacts = read_artifacts(dir);
        const auto& s = artifacts.series;

        std::string errors = "task,m,j,s,chosen_n,tol,achieved_error\n";
        for (std::size_t i = 0; i < s.state.ledger.size(); ++i) {
            const auto& e = s.state.ledger[i];
            errors += std::to_string(i + 1) + "," + std::to_string(e.coords.m) + "," +
                      std::to_string(e.coords.j) + "," + std::to_string(e.coords.s) + "," +
                      std::to_string(e.chosen_n) + "," + g(e.tol, 17) + "," + g(e.achieved_error, 17) + "\n";
        }

        const auto& a = s.state.coefficients;
        const std::vector<Complex> b = a.empty() ? std::vector<Complex>{} : coeffs_T(s.transform, a, a.size() - 1);
        std::string growth = "n,abs_b,root_abs_b\n";
        std::string radius = "prefix_length,radius_estimate\n";
        for (std::size_t n = 0; n < b.size(); ++n) {
            const double mod = std::abs(b[n]);
            growth += std::to_string(n) + "," + g(mod, 17) + ",";
            if (n > 0) growth += g(std::exp(std::log(mod) / static_cast<double>(n)), 17);
            growth += "\n";
            radius += std::to_string(n + 1) + "," +
                      g(radius_estimate(std::span<const Complex>(b.data(), n + 1), window_fraction), 17) +
                      "\n";
        }
        write_text(dir / kErrorCsv, errors);
        write_text(dir / kGrowthCsv, growth);
        write_text(dir / kRadiusCsv, radius);
        out << "wrote " << kErrorCsv << " (" << s.state.ledger.size() << " rows), " << kGrowthCsv
            << " and " << kRadiusCsv << " (" << b.size() << " rows)\n";
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

}  // namespace utsforge::cli
