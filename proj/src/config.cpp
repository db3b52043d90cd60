#include "v2xsec/config.hpp"

#include "v2xsec/secrecy.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

namespace v2xsec {

using nlohmann::json;

namespace {

enum class Kind { real, count, u64, technique, mode };

struct KeySpec {
    const char* name;
    Kind kind;
    bool required;
};

constexpr std::array kKeys{
    KeySpec{"radius_m", Kind::real, true},
    KeySpec{"alpha", Kind::real, true},
    KeySpec{"phi", Kind::real, true},
    KeySpec{"beta_db", Kind::real, true},
    KeySpec{"pt_dbm", Kind::real, true},
    KeySpec{"pc_dbm", Kind::real, true},
    KeySpec{"n_a", Kind::count, true},
    KeySpec{"n_c", Kind::count, true},
    KeySpec{"lambda_e_per_m2", Kind::real, true},
    KeySpec{"lambda_c_per_m2", Kind::real, true},
    KeySpec{"lambda_l_per_m", Kind::real, true},
    KeySpec{"u_e_per_m", Kind::real, true},
    KeySpec{"u_c_per_m", Kind::real, true},
    KeySpec{"technique", Kind::technique, true},
    KeySpec{"channel_mode", Kind::mode, false},
    KeySpec{"realizations", Kind::u64, true},
    KeySpec{"fading_draws_per_geometry", Kind::u64, false},
    KeySpec{"seed", Kind::u64, false},
    KeySpec{"exclusion_m", Kind::real, false},
    KeySpec{"bob_distance_m", Kind::real, false},
};

const KeySpec* find_key(const std::string& name)
{
    for (const auto& k : kKeys) {
        if (name == k.name) {
            return &k;
        }
    }
    return nullptr;
}

double get_real(const json& raw, const char* key, double fallback)
{
    if (!raw.contains(key)) {
        return fallback;
    }
    const auto& v = raw.at(key);
    if (!v.is_number()) {
        throw ConfigError(key, "expected a number");
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
        throw ConfigError(key, "must be finite");
    }
    return x;
}

std::uint64_t get_u64(const json& raw, const char* key, std::uint64_t fallback)
{
    if (!raw.contains(key)) {
        return fallback;
    }
    const auto& v = raw.at(key);
    if (v.is_number_unsigned()) {
        return v.get<std::uint64_t>();
    }
    if (v.is_number_integer()) {
        const auto x = v.get<std::int64_t>();
        if (x < 0) {
            throw ConfigError(key, "must be non-negative");
        }
        return static_cast<std::uint64_t>(x);
    }
    throw ConfigError(key, "expected a non-negative integer");
}

int get_count(const json& raw, const char* key, int fallback)
{
    if (!raw.contains(key)) {
        return fallback;
    }
    const auto& v = raw.at(key);
    if (!v.is_number_integer()) {
        throw ConfigError(key, "expected an integer");
    }
    const auto x = v.get<std::int64_t>();
    if (x < 0 || x > 4096) {
        throw ConfigError(key, "antenna count out of range");
    }
    return static_cast<int>(x);
}

std::string get_string(const json& raw, const char* key, const char* fallback)
{
    if (!raw.contains(key)) {
        return fallback;
    }
    const auto& v = raw.at(key);
    if (!v.is_string()) {
        throw ConfigError(key, "expected a string");
    }
    return v.get<std::string>();
}

}  // namespace

ConfigError::ConfigError(std::string field, const std::string& message)
    : std::invalid_argument(field + ": " + message), field_(std::move(field))
{
}

std::string_view to_string(Technique t) noexcept
{
    return t == Technique::an ? "an" : "cj";
}

std::string_view to_string(ChannelMode m) noexcept
{
    return m == ChannelMode::exact ? "exact" : "approx";
}

Technique parse_technique(std::string_view s)
{
    if (s == "an") {
        return Technique::an;
    }
    if (s == "cj") {
        return Technique::cj;
    }
    throw ConfigError("technique", "expected 'an' or 'cj', got '" + std::string(s) + "'");
}

ChannelMode parse_channel_mode(std::string_view s)
{
    if (s == "exact") {
        return ChannelMode::exact;
    }
    if (s == "approx") {
        return ChannelMode::approx;
    }
    throw ConfigError("channel_mode", "expected 'exact' or 'approx', got '" + std::string(s) + "'");
}

double ScenarioConfig::pt_watts() const
{
    return dbm_to_watts(pt_dbm);
}

double ScenarioConfig::pc_watts() const
{
    return dbm_to_watts(pc_dbm);
}

double ScenarioConfig::beta_linear() const
{
    return db_to_linear(beta_db);
}

double ScenarioConfig::mean_eve_count() const noexcept
{
    const double area = std::numbers::pi * radius_m * radius_m;
    return lambda_e_per_m2 * area + u_e_per_m * lambda_l_per_m * area;
}

double ScenarioConfig::mean_charlie_count() const noexcept
{
    const double area = std::numbers::pi * radius_m * radius_m;
    return lambda_c_per_m2 * area + u_c_per_m * lambda_l_per_m * area;
}

void check_config(const ScenarioConfig& c)
{
    if (!(c.radius_m > 0.0)) {
        throw ConfigError("radius_m", "radius must be positive");
    }
    if (!(c.alpha > 2.0)) {
        throw ConfigError("alpha", "path-loss exponent must exceed 2");
    }
    if (!(c.phi >= 0.0 && c.phi <= 1.0)) {
        throw ConfigError("phi", "power allocation ratio must lie in [0, 1]");
    }
    const std::array<std::pair<const char*, double>, 5> rates{{
        {"lambda_e_per_m2", c.lambda_e_per_m2},
        {"lambda_c_per_m2", c.lambda_c_per_m2},
        {"lambda_l_per_m", c.lambda_l_per_m},
        {"u_e_per_m", c.u_e_per_m},
        {"u_c_per_m", c.u_c_per_m},
    }};
    for (const auto& [name, value] : rates) {
        if (!(value >= 0.0)) {
            throw ConfigError(name, "intensity must be non-negative");
        }
    }
    if (c.n_a < 2) {
        throw ConfigError("n_a", "artificial noise needs at least 2 antennas (no null space otherwise)");
    }
    if (c.technique == Technique::cj && c.n_c < 2) {
        throw ConfigError("n_c", "cooperative jamming needs at least 2 antennas per Charlie");
    }
    if (c.realizations < 1) {
        throw ConfigError("realizations", "at least one realization is required");
    }
    if (c.fading_draws_per_geometry < 1) {
        throw ConfigError("fading_draws_per_geometry", "at least one fading draw per geometry is required");
    }
    if (!(c.exclusion_m > 0.0)) {
        throw ConfigError("exclusion_m", "exclusion radius must be positive");
    }
    if (!(c.bob_distance_m >= c.exclusion_m)) {
        throw ConfigError("bob_distance_m", "Bob distance must not be below the exclusion radius");
    }
}

ScenarioConfig validate_config(const json& raw)
{
    if (!raw.is_object()) {
        throw ConfigError("<document>", "configuration must be a key-value object");
    }
    for (const auto& [key, value] : raw.items()) {
        if (find_key(key) == nullptr) {
            throw ConfigError(key, "unknown configuration key");
        }
    }
    for (const auto& k : kKeys) {
        if (k.required && !raw.contains(k.name)) {
            throw ConfigError(k.name, "missing required key");
        }
    }

    ScenarioConfig c;
    c.radius_m = get_real(raw, "radius_m", c.radius_m);
    c.alpha = get_real(raw, "alpha", c.alpha);
    c.phi = get_real(raw, "phi", c.phi);
    c.beta_db = get_real(raw, "beta_db", c.beta_db);
    c.pt_dbm = get_real(raw, "pt_dbm", c.pt_dbm);
    c.pc_dbm = get_real(raw, "pc_dbm", c.pc_dbm);
    c.n_a = get_count(raw, "n_a", c.n_a);
    c.n_c = get_count(raw, "n_c", c.n_c);
    c.lambda_e_per_m2 = get_real(raw, "lambda_e_per_m2", c.lambda_e_per_m2);
    c.lambda_c_per_m2 = get_real(raw, "lambda_c_per_m2", c.lambda_c_per_m2);
    c.lambda_l_per_m = get_real(raw, "lambda_l_per_m", c.lambda_l_per_m);
    c.u_e_per_m = get_real(raw, "u_e_per_m", c.u_e_per_m);
    c.u_c_per_m = get_real(raw, "u_c_per_m", c.u_c_per_m);
    c.technique = parse_technique(get_string(raw, "technique", "an"));
    c.channel_mode = parse_channel_mode(get_string(raw, "channel_mode", "approx"));
    c.realizations = get_u64(raw, "realizations", c.realizations);
    c.fading_draws_per_geometry = get_u64(raw, "fading_draws_per_geometry", 1);
    c.seed = get_u64(raw, "seed", 1);
    c.exclusion_m = get_real(raw, "exclusion_m", 1.0);
    c.bob_distance_m = get_real(raw, "bob_distance_m", 100.0);
    check_config(c);
    return c;
}

json to_json(const ScenarioConfig& c)
{
    return json{
        {"radius_m", c.radius_m},
        {"alpha", c.alpha},
        {"phi", c.phi},
        {"beta_db", c.beta_db},
        {"pt_dbm", c.pt_dbm},
        {"pc_dbm", c.pc_dbm},
        {"n_a", c.n_a},
        {"n_c", c.n_c},
        {"lambda_e_per_m2", c.lambda_e_per_m2},
        {"lambda_c_per_m2", c.lambda_c_per_m2},
        {"lambda_l_per_m", c.lambda_l_per_m},
        {"u_e_per_m", c.u_e_per_m},
        {"u_c_per_m", c.u_c_per_m},
        {"technique", std::string(to_string(c.technique))},
        {"channel_mode", std::string(to_string(c.channel_mode))},
        {"realizations", c.realizations},
        {"fading_draws_per_geometry", c.fading_draws_per_geometry},
        {"seed", c.seed},
        {"exclusion_m", c.exclusion_m},
        {"bob_distance_m", c.bob_distance_m},
    };
}

void set_from_text(json& raw, const std::string& key, const std::string& text)
{
    const auto* spec = find_key(key);
    if (spec == nullptr) {
        throw ConfigError(key, "unknown configuration key");
    }
    const char* first = text.data();
    const char* last = text.data() + text.size();
    switch (spec->kind) {
    case Kind::real: {
        char* end = nullptr;
        const double x = std::strtod(text.c_str(), &end);
        if (text.empty() || end != text.c_str() + text.size()) {
            throw ConfigError(key, "cannot parse '" + text + "' as a number");
        }
        raw[key] = x;
        break;
    }
    case Kind::count: {
        std::int64_t x = 0;
        auto [ptr, ec] = std::from_chars(first, last, x);
        if (ec != std::errc{} || ptr != last) {
            throw ConfigError(key, "cannot parse '" + text + "' as an integer");
        }
        raw[key] = x;
        break;
    }
    case Kind::u64: {
        std::uint64_t x = 0;
        auto [ptr, ec] = std::from_chars(first, last, x);
        if (ec != std::errc{} || ptr != last) {
            throw ConfigError(key, "cannot parse '" + text + "' as a non-negative integer");
        }
        raw[key] = x;
        break;
    }
    case Kind::technique:
        raw[key] = std::string(to_string(parse_technique(text)));
        break;
    case Kind::mode:
        raw[key] = std::string(to_string(parse_channel_mode(text)));
        break;
    }
}

json apply_env_overrides(json raw, const std::string& prefix, const char* (*getenv)(const char*))
{
    for (const auto& k : kKeys) {
        std::string var = prefix;
        for (const char* p = k.name; *p != '\0'; ++p) {
            var.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(*p))));
        }
        if (const char* value = getenv(var.c_str()); value != nullptr) {
            set_from_text(raw, k.name, value);
        }
    }
    return raw;
}

json fig3_parameters()
{
    return json{
        {"radius_m", 3000.0},
        {"alpha", 3.0},
        {"phi", 0.5},
        {"beta_db", 0.0},
        {"pt_dbm", 10.0},
        {"pc_dbm", 10.0},
        {"n_a", 4},
        {"n_c", 4},
        {"lambda_e_per_m2", 1e-6},
        {"lambda_c_per_m2", 1e-6},
        {"lambda_l_per_m", 1e-3},
        {"u_e_per_m", 1e-3},
        {"u_c_per_m", 1e-3},
        {"technique", "an"},
        {"realizations", 25},
    };
}

}  // namespace v2xsec
