#include "utsforge/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json_io.hpp"
#include "utsforge/enumeration.hpp"
#include "utsforge/errors.hpp"

namespace utsforge {

namespace detail {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ConfigError(where + ": " + what);
}

void expect_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* a : allowed) known = known || key == a;
        if (!known) fail(where, "unknown field '" + key + "'");
    }
}

const json& field(const json& j, const char* key, const std::string& where) {
    const auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
    return *it;
}

std::size_t index_from(const json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 0) fail(where, "expected a nonnegative integer");
    return j.get<std::size_t>();
}

std::string sub(const std::string& where, const std::string& key) { return where + "." + key; }
std::string sub(const std::string& where, std::size_t i) {
    return where + "[" + std::to_string(i) + "]";
}

LambdaRule rule_from(const json& j, const std::string& where) {
    if (j.is_string()) return rule_from(json{{"name", j}}, where);
    expect_keys(j, {"name", "band"}, where);
    const auto name = field(j, "name", where);
    if (!name.is_string()) fail(sub(where, "name"), "expected a string");
    const auto n = name.get<std::string>();
    if (n == "identity") return rows::Identity{};
    if (n == "cesaro") return rows::Cesaro{};
    if (n == "constantBand")
        return rows::ConstantBand{complex_list_from(field(j, "band", where), sub(where, "band"))};
    fail(sub(where, "name"), "unknown lambda rule '" + n + "'");
}

LambdaRule table_from(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) fail(where, "expected a nonempty list of rows");
    rows::Table table;
    for (std::size_t n = 0; n < j.size(); ++n) {
        auto row = complex_list_from(j[n], sub(where, n));
        if (row.size() != n + 1)
            fail(sub(where, n), "row n must have n+1 entries, got " + std::to_string(row.size()));
        table.rows.push_back(std::move(row));
    }
    return table;
}

Homeomorphism psi_from(const json& j, const std::string& where) {
    expect_keys(j, {"name", "alpha", "beta", "rho"}, where);
    const auto& name = field(j, "name", where);
    if (!name.is_string()) fail(sub(where, "name"), "expected a string");
    const auto n = name.get<std::string>();
    if (n == "affine") {
        const Complex beta = j.contains("beta") ? complex_from(j["beta"], sub(where, "beta")) : Complex{};
        return Homeomorphism::affine(complex_from(field(j, "alpha", where), sub(where, "alpha")), beta);
    }
    if (n == "radialPower") return Homeomorphism::radial_power(real_from(field(j, "rho", where), sub(where, "rho")));
    fail(sub(where, "name"), "unknown homeomorphism '" + n + "' (expected affine or radialPower)");
}

}  // namespace

double real_from(const json& j, const std::string& where) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        char* end = nullptr;
        errno = 0;
        const double v = std::strtod(s.c_str(), &end);
        if (s.empty() || end != s.c_str() + s.size() || (errno == ERANGE && std::isinf(v)))
            fail(where, "'" + s + "' is not a decimal number");
        return v;
    }
    fail(where, "expected a number or decimal string");
}

Complex complex_from(const json& j, const std::string& where) {
    if (j.is_array()) {
        if (j.size() != 2) fail(where, "complex pairs are [re, im]");
        return {real_from(j[0], where + ".re"), real_from(j[1], where + ".im")};
    }
    return {real_from(j, where), 0.0};
}

std::vector<Complex> complex_list_from(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected a list");
    std::vector<Complex> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(complex_from(j[i], sub(where, i)));
    return out;
}

TransformSpec transform_from(const json& j, const std::string& where) {
    if (j.is_string()) return transform_from(json{{"kind", j}}, where);
    expect_keys(j, {"kind", "rule", "rows", "psi"}, where);
    const auto& kind = field(j, "kind", where);
    if (!kind.is_string()) fail(sub(where, "kind"), "expected a string");
    const auto k = kind.get<std::string>();
    try {
        if (k == "identity" || k == "cesaro") {
            if (j.contains("rule") || j.contains("rows") || j.contains("psi"))
                fail(where, k + " takes no rule, rows or psi");
            return k == "identity" ? TransformSpec::identity() : TransformSpec::cesaro();
        }
        if (k != "linearTriangular" && k != "wrappedLinear")
            fail(sub(where, "kind"), "unknown transform kind '" + k + "'");
        if (j.contains("rule") == j.contains("rows"))
            fail(where, k + " needs exactly one of 'rule' or 'rows'");
        LambdaRule rule = j.contains("rule") ? rule_from(j["rule"], sub(where, "rule"))
                                             : table_from(j["rows"], sub(where, "rows"));
        if (k == "linearTriangular") {
            if (j.contains("psi")) fail(where, "linearTriangular takes no psi");
            return TransformSpec::linear(std::move(rule));
        }
        return TransformSpec::wrapped(std::move(rule), psi_from(field(j, "psi", where), sub(where, "psi")));
    } catch (const InvalidTransform& e) {
        fail(where, e.what());
    }
}

CompactSetSpec set_from(const json& j, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    const auto& shape = field(j, "shape", where);
    if (!shape.is_string()) fail(sub(where, "shape"), "expected a string");
    const auto s = shape.get<std::string>();
    CompactSetSpec spec;
    if (s == "segment") {
        expect_keys(j, {"shape", "z1", "z2"}, where);
        spec = shapes::Segment{complex_from(field(j, "z1", where), sub(where, "z1")),
                               complex_from(field(j, "z2", where), sub(where, "z2"))};
    } else if (s == "disk") {
        expect_keys(j, {"shape", "center", "radius"}, where);
        spec = shapes::Disk{complex_from(field(j, "center", where), sub(where, "center")),
                            real_from(field(j, "radius", where), sub(where, "radius"))};
    } else if (s == "slitAnnulus") {
        expect_keys(j, {"shape", "rIn", "rOut", "gapAngle", "gapHalfWidth"}, where);
        spec = shapes::SlitAnnulus{real_from(field(j, "rIn", where), sub(where, "rIn")),
                                   real_from(field(j, "rOut", where), sub(where, "rOut")),
                                   real_from(field(j, "gapAngle", where), sub(where, "gapAngle")),
                                   real_from(field(j, "gapHalfWidth", where), sub(where, "gapHalfWidth"))};
    } else if (s == "polygonRegion") {
        expect_keys(j, {"shape", "vertices"}, where);
        spec = shapes::Polygon{complex_list_from(field(j, "vertices", where), sub(where, "vertices"))};
    } else {
        fail(sub(where, "shape"), "unknown shape '" + s + "'");
    }
    try {
        validate(spec);
    } catch (const InvalidSet& e) {
        fail(where, "invalid set " + describe(spec) + ": " + e.what());
    }
    return spec;
}

MuSpec mu_from(const json& j, const std::string& where) {
    if (j.is_string()) return mu_from(json{{"kind", j}}, where);
    expect_keys(j, {"kind", "start", "step", "indices", "thenStep"}, where);
    const auto& kind = field(j, "kind", where);
    if (!kind.is_string()) fail(sub(where, "kind"), "expected a string");
    const auto k = kind.get<std::string>();
    if (k == "all") return MuSpec::all();
    if (k == "arithmetic")
        return MuSpec::arithmetic(index_from(field(j, "start", where), sub(where, "start")),
                                  index_from(field(j, "step", where), sub(where, "step")));
    if (k == "explicit") {
        const auto& list = field(j, "indices", where);
        if (!list.is_array()) fail(sub(where, "indices"), "expected a list");
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < list.size(); ++i) idx.push_back(index_from(list[i], sub(sub(where, "indices"), i)));
        const std::size_t step = j.contains("thenStep") ? index_from(j["thenStep"], sub(where, "thenStep")) : 1;
        return MuSpec::explicit_list(std::move(idx), step);
    }
    fail(sub(where, "kind"), "unknown mu kind '" + k + "'");
}

ComplexPolynomial polynomial_from(const json& j, const std::string& where) {
    return ComplexPolynomial(complex_list_from(j, where));
}

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const std::vector<Complex>& zs) {
    json out = json::array();
    for (Complex z : zs) out.push_back(to_json(z));
    return out;
}

json to_json(const TransformSpec& t) {
    json out{{"kind", to_string(t.kind())}};
    if (t.kind() == TransformKind::identity || t.kind() == TransformKind::cesaro) return out;
    std::visit(
        [&](const auto& r) {
            using R = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<R, rows::Identity>) out["rule"] = {{"name", "identity"}};
            else if constexpr (std::is_same_v<R, rows::Cesaro>) out["rule"] = {{"name", "cesaro"}};
            else if constexpr (std::is_same_v<R, rows::ConstantBand>)
                out["rule"] = {{"name", "constantBand"}, {"band", to_json(r.band)}};
            else {
                json table = json::array();
                for (const auto& row : r.rows) table.push_back(to_json(row));
                out["rows"] = std::move(table);
            }
        },
        t.rule());
    if (const auto* psi = t.psi()) {
        const auto& p = psi->parameters();
        if (psi->name() == "affine" && p.size() == 2)
            out["psi"] = {{"name", "affine"}, {"alpha", to_json(p[0])}, {"beta", to_json(p[1])}};
        else if (psi->name() == "radialPower" && p.size() == 1)
            out["psi"] = {{"name", "radialPower"}, {"rho", p[0].real()}};
        else
            throw ArtifactError("homeomorphism '" + psi->name() + "' is not in the serializable catalog");
    }
    return out;
}

json to_json(const CompactSetSpec& s) {
    return std::visit(
        [](const auto& v) -> json {
            using S = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<S, shapes::Segment>)
                return {{"shape", "segment"}, {"z1", to_json(v.z1)}, {"z2", to_json(v.z2)}};
            else if constexpr (std::is_same_v<S, shapes::Disk>)
                return {{"shape", "disk"}, {"center", to_json(v.center)}, {"radius", v.radius}};
            else if constexpr (std::is_same_v<S, shapes::SlitAnnulus>)
                return {{"shape", "slitAnnulus"}, {"rIn", v.r_in}, {"rOut", v.r_out},
                        {"gapAngle", v.gap_angle}, {"gapHalfWidth", v.gap_half_width}};
            else
                return {{"shape", "polygonRegion"}, {"vertices", to_json(v.vertices)}};
        },
        s);
}

json to_json(const MuSpec& mu) {
    switch (mu.kind()) {
        case MuSpec::Kind::all:
            return {{"kind", "all"}};
        case MuSpec::Kind::arithmetic:
            return {{"kind", "arithmetic"}, {"start", mu.start()}, {"step", mu.step()}};
        case MuSpec::Kind::explicit_list:
            return {{"kind", "explicit"}, {"indices", mu.indices()}, {"thenStep", mu.step()}};
    }
    return {};
}

}  // namespace detail

RunConfig parse_config(std::string_view json_text) {
    using detail::json;
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config: expected a JSON object");
    for (const auto& [key, value] : j.items()) {
        static const char* known[] = {"transform", "sets",     "exhaustion", "targets",
                                      "enumeratedTargets",     "tolLadder",  "mu",
                                      "taskBudget", "seedPrefix", "density", "maxDegree",
                                      "outputDir"};
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw ConfigError("config: unknown field '" + key + "'");
    }

    RunConfig cfg;
    auto& r = cfg.request;
    if (j.contains("transform")) r.transform = detail::transform_from(j["transform"], "transform");

    if (j.contains("sets")) {
        const auto& sets = j["sets"];
        if (!sets.is_array()) throw ConfigError("sets: expected a list");
        for (std::size_t i = 0; i < sets.size(); ++i)
            r.sets.push_back(detail::set_from(sets[i], "sets[" + std::to_string(i) + "]"));
    }
    if (j.contains("exhaustion")) {
        const auto& e = j["exhaustion"];
        if (!e.is_number_integer() || e.get<long long>() < 0)
            throw ConfigError("exhaustion: expected a nonnegative integer");
        for (std::uint64_t m = 1; m <= e.get<std::uint64_t>(); ++m)
            r.sets.push_back(exhaustion_member(m));
    }

    if (j.contains("targets")) {
        const auto& t = j["targets"];
        if (!t.is_array()) throw ConfigError("targets: expected a list of coefficient lists");
        for (std::size_t i = 0; i < t.size(); ++i)
            r.targets.push_back(detail::polynomial_from(t[i], "targets[" + std::to_string(i) + "]"));
    }
    if (j.contains("enumeratedTargets")) {
        const auto& e = j["enumeratedTargets"];
        if (!e.is_number_integer() || e.get<long long>() < 0)
            throw ConfigError("enumeratedTargets: expected a nonnegative integer");
        for (std::uint64_t k = 1; k <= e.get<std::uint64_t>(); ++k)
            r.targets.push_back(enumerate_polynomials(k));
    }

    if (j.contains("tolLadder")) {
        const auto& t = j["tolLadder"];
        if (t.is_string() && t.get<std::string>() == "harmonic") {
            r.ladder = TolLadder::harmonic();
        } else if (t.is_array()) {
            std::vector<double> tols;
            for (std::size_t i = 0; i < t.size(); ++i)
                tols.push_back(detail::real_from(t[i], "tolLadder[" + std::to_string(i) + "]"));
            r.ladder = TolLadder::from_list(std::move(tols));
        } else {
            throw ConfigError("tolLadder: expected \"harmonic\" or a list of tolerances");
        }
    }
    if (j.contains("mu")) r.mu = detail::mu_from(j["mu"], "mu");

    if (j.contains("taskBudget")) {
        const auto& t = j["taskBudget"];
        if (!t.is_number_integer() || t.get<long long>() < 0)
            throw ConfigError("taskBudget: expected a nonnegative integer");
        r.task_budget = t.get<std::size_t>();
    }
    if (j.contains("seedPrefix")) r.seed = detail::complex_list_from(j["seedPrefix"], "seedPrefix");
    if (j.contains("density")) r.config.density = detail::real_from(j["density"], "density");
    if (!(r.config.density > 0.0) || !std::isfinite(r.config.density))
        throw ConfigError("density: must be positive and finite");
    if (j.contains("maxDegree")) {
        const auto& d = j["maxDegree"];
        if (!d.is_number_integer() || d.get<long long>() < 0 || d.get<long long>() > 100000)
            throw ConfigError("maxDegree: expected a nonnegative integer");
        r.config.max_degree = d.get<int>();
    }
    if (j.contains("outputDir")) {
        if (!j["outputDir"].is_string()) throw ConfigError("outputDir: expected a string");
        cfg.output_dir = j["outputDir"].get<std::string>();
    }

    for (Complex a : r.seed)
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw ConfigError("seedPrefix: entries must be finite");
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    RunConfig cfg = parse_config(buf.str());
    if (const char* env = std::getenv(kOutputDirEnv); env && *env) cfg.output_dir = env;
    return cfg;
}

}  // namespace utsforge
