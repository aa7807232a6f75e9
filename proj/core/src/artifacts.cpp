#include "utsforge/artifacts.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "format.hpp"
#include "json_io.hpp"
#include "utsforge/errors.hpp"

namespace utsforge {

namespace {

using detail::json;

constexpr const char* kLedgerFormat = "utsforge-ledger/1";

std::string slurp(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw ArtifactError("cannot read " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& file, const std::string& text) {
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    out << text;
    out.close();
    if (!out) throw ArtifactError("cannot write " + file.string());
}

double parse_double(const std::string& s, const std::string& where) {
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || (errno == ERANGE && std::isinf(v)))
        throw ArtifactError(where + ": bad number '" + s + "'");
    return v;
}

json coords_json(const TaskCoordinates& c) { return {{"m", c.m}, {"j", c.j}, {"s", c.s}}; }

TaskCoordinates coords_from(const json& j) {
    return {j.at("m").get<std::size_t>(), j.at("j").get<std::size_t>(), j.at("s").get<std::size_t>()};
}

}  // namespace

void write_coefficients_csv(const std::filesystem::path& file, const std::vector<Complex>& a) {
    std::string text = "index,re,im\n";
    for (std::size_t n = 0; n < a.size(); ++n)
        text += std::to_string(n) + "," + detail::exact(a[n].real()) + "," + detail::exact(a[n].imag()) + "\n";
    write_file(file, text);
}

std::vector<Complex> read_coefficients_csv(const std::filesystem::path& file) {
    const std::string text = slurp(file);
    const std::string name = file.filename().string();
    if (text.empty() || text.back() != '\n') throw ArtifactError(name + " is truncated");
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    if (line != "index,re,im") throw ArtifactError(name + ": unexpected header '" + line + "'");
    std::vector<Complex> out;
    while (std::getline(in, line)) {
        const std::string where = name + " line " + std::to_string(out.size() + 2);
        const auto c1 = line.find(',');
        const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
        if (c2 == std::string::npos || line.find(',', c2 + 1) != std::string::npos)
            throw ArtifactError(where + ": expected three fields");
        const std::string idx = line.substr(0, c1);
        if (idx != std::to_string(out.size())) throw ArtifactError(where + ": index out of sequence");
        out.emplace_back(parse_double(line.substr(c1 + 1, c2 - c1 - 1), where),
                         parse_double(line.substr(c2 + 1), where));
    }
    return out;
}

void write_artifacts(const std::filesystem::path& dir, const RunArtifacts& artifacts) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw ArtifactError("cannot create " + dir.string() + ": " + ec.message());

    const auto& s = artifacts.series;
    json entries = json::array();
    for (const auto& e : s.state.ledger) {
        entries.push_back({{"task", coords_json(e.coords)},
                           {"set", detail::to_json(e.set)},
                           {"setLabel", describe(e.set)},
                           {"target", detail::to_json(e.target.coefficients)},
                           {"tol", e.tol},
                           {"mu", detail::to_json(e.mu)},
                           {"chosenN", e.chosen_n},
                           {"achievedError", e.achieved_error},
                           {"blockRange", {e.block_begin, e.block_end}},
                           {"fitDegree", e.fit_degree},
                           {"fitTolerance", e.fit_tolerance},
                           {"seconds", e.seconds}});
    }
    json ledger{{"format", kLedgerFormat},
                {"status", artifacts.failure ? "failed" : "complete"},
                {"transform", detail::to_json(s.transform)},
                {"density", s.config.density},
                {"maxDegree", s.config.max_degree},
                {"seedLength", s.seed_length},
                {"coefficientCount", s.state.coefficients.size()},
                {"totalSeconds", artifacts.total_seconds},
                {"entries", std::move(entries)}};
    if (artifacts.failure) {
        ledger["failure"] = {{"message", artifacts.failure->message},
                             {"task", coords_json(artifacts.failure->task)},
                             {"kind", artifacts.failure->transform_fault ? "transform" : "approximation"}};
    } else {
        ledger["failure"] = nullptr;
    }

    write_coefficients_csv(dir / kCoefficientsFile, s.state.coefficients);
    write_file(dir / kLedgerFile, ledger.dump(2) + "\n");
}

RunArtifacts read_artifacts(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw ArtifactError(dir.string() + " is not a directory");
    const auto ledger_path = dir / kLedgerFile;
    const auto csv_path = dir / kCoefficientsFile;
    if (!std::filesystem::exists(ledger_path)) throw ArtifactError("missing " + ledger_path.string());
    if (!std::filesystem::exists(csv_path)) throw ArtifactError("missing " + csv_path.string());

    json j;
    try {
        j = json::parse(slurp(ledger_path));
    } catch (const json::parse_error& e) {
        throw ArtifactError(std::string("ledger.json is corrupt: ") + e.what());
    }

    RunArtifacts out;
    try {
        if (j.at("format") != kLedgerFormat) throw ArtifactError("ledger.json: unsupported format");
        auto& s = out.series;
        s.transform = detail::transform_from(j.at("transform"), "ledger.transform");
        s.config.density = j.at("density").get<double>();
        s.config.max_degree = j.at("maxDegree").get<int>();
        s.seed_length = j.at("seedLength").get<std::size_t>();
        out.total_seconds = j.value("totalSeconds", 0.0);
        for (const auto& e : j.at("entries")) {
            LedgerEntry entry;
            entry.coords = coords_from(e.at("task"));
            entry.set = detail::set_from(e.at("set"), "ledger.set");
            entry.target = detail::polynomial_from(e.at("target"), "ledger.target");
            entry.tol = e.at("tol").get<double>();
            entry.mu = detail::mu_from(e.at("mu"), "ledger.mu");
            entry.chosen_n = e.at("chosenN").get<std::size_t>();
            entry.achieved_error = e.at("achievedError").get<double>();
            const auto& range = e.at("blockRange");
            entry.block_begin = range.at(0).get<std::size_t>();
            entry.block_end = range.at(1).get<std::size_t>();
            entry.fit_degree = e.at("fitDegree").get<int>();
            entry.fit_tolerance = e.at("fitTolerance").get<double>();
            entry.seconds = e.at("seconds").get<double>();
            s.state.ledger.push_back(std::move(entry));
        }
        if (const auto& f = j.at("failure"); !f.is_null())
            out.failure = RunFailure{f.at("message").get<std::string>(), coords_from(f.at("task")),
                                     f.at("kind") == "transform"};
        s.state.coefficients = read_coefficients_csv(csv_path);
        const auto expected = j.at("coefficientCount").get<std::size_t>();
        if (s.state.coefficients.size() != expected)
            throw ArtifactError("coefficients.csv has " + std::to_string(s.state.coefficients.size()) +
                                " rows, ledger.json expects " + std::to_string(expected));
        for (const auto& e : s.state.ledger)
            if (e.chosen_n >= expected)
                throw ArtifactError("ledger entry chosenN " + std::to_string(e.chosen_n) +
                                    " lies past the coefficient table");
    } catch (const json::exception& e) {
        throw ArtifactError(std::string("ledger.json is malformed: ") + e.what());
    } catch (const ConfigError& e) {
        throw ArtifactError(std::string("ledger.json is malformed: ") + e.what());
    }
    return out;
}

}  // namespace utsforge
