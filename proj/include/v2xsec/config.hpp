#pragma once

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace v2xsec {

enum class Technique { an, cj };
enum class ChannelMode { exact, approx };

std::string_view to_string(Technique t) noexcept;
std::string_view to_string(ChannelMode m) noexcept;
Technique parse_technique(std::string_view s);
ChannelMode parse_channel_mode(std::string_view s);

/// All parameters of one experiment. Powers in dBm and the threshold in dB,
/// as they appear on figure axes; linear values come from the accessors.
struct ScenarioConfig {
    double radius_m{3000.0};
    double alpha{3.0};
    double phi{0.5};
    double beta_db{0.0};
    double pt_dbm{20.0};
    double pc_dbm{20.0};
    int n_a{4};
    int n_c{4};
    double lambda_e_per_m2{1e-6};
    double lambda_c_per_m2{1e-6};
    double lambda_l_per_m{1e-3};
    double u_e_per_m{1e-3};
    double u_c_per_m{1e-3};
    Technique technique{Technique::an};
    ChannelMode channel_mode{ChannelMode::approx};
    std::uint64_t realizations{25};
    std::uint64_t fading_draws_per_geometry{1};
    std::uint64_t seed{1};
    double exclusion_m{1.0};
    double bob_distance_m{100.0};

    double pt_watts() const;
    double pc_watts() const;
    double beta_linear() const;

    /// Expected Eve count: lambda_E pi r^2 + u_E pi lambda_l r^2.
    double mean_eve_count() const noexcept;
    double mean_charlie_count() const noexcept;

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Raised for a violated configuration constraint; `field()` names the key.
class ConfigError : public std::invalid_argument {
public:
    ConfigError(std::string field, const std::string& message);
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Parses and checks a flat key-value document. Unknown keys are rejected;
/// seed, exclusion_m, bob_distance_m, channel_mode and
/// fading_draws_per_geometry fall back to defaults when omitted, every other
/// key is required.
ScenarioConfig validate_config(const nlohmann::json& raw);

/// Re-checks the invariants of an already typed config.
void check_config(const ScenarioConfig& config);

nlohmann::json to_json(const ScenarioConfig& config);

/// Applies `<prefix><UPPERCASE_KEY>` environment variables on top of `raw`.
/// `getenv` is injectable for tests.
nlohmann::json apply_env_overrides(nlohmann::json raw, const std::string& prefix,
                                   const char* (*getenv)(const char*));

/// Sets one key from its textual form, typed by the key (number, integer, or
/// enum name).
void set_from_text(nlohmann::json& raw, const std::string& key, const std::string& text);

/// Parameter set of the SOP-versus-phi figure (beta = 0 dB, alpha = 3,
/// N_A = N_C = 4, unit densities of 1e-6 / m^2 and 1e-3 / m, r = 3 km).
nlohmann::json fig3_parameters();

}  // namespace v2xsec
