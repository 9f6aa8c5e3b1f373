#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace lemniscate {

enum class OutputFormat { Text, Json, Latex };
std::string_view to_string(OutputFormat f);
OutputFormat output_format_from_string(std::string_view s);

/// Largest index per family group used by verify-all.
struct MaxM {
    int cosh = 6;   // cosh-sum families, m >= 1
    int sinh = 6;   // sinh-sum families, m >= 2
    int plus = 4;   // plus-sign integrals, m >= 1
    int minus = 4;  // minus-sign integrals, m >= 2

    friend bool operator==(const MaxM&, const MaxM&) = default;
};

/// Parses "N" (all groups) or a comma list such as "cosh=6,sinh=4,plus=3".
MaxM parse_max_m(std::string_view text, MaxM base = {});

struct Config {
    int precision_digits = 40;
    MaxM max_m;
    OutputFormat format = OutputFormat::Text;
    std::string cache_path;  // empty disables the cache
    int jobs = 1;
    bool include_conjecture = false;

    /// Throws DomainError when a field is out of range.
    void validate() const;
};

/// Upper bound accepted for any max_m entry.
inline constexpr int kMaxIndexLimit = 12;

/// Environment variables mirror the flags with this prefix, e.g.
/// LEMNISCATE_PRECISION_DIGITS, LEMNISCATE_MAX_M, LEMNISCATE_FORMAT,
/// LEMNISCATE_CACHE, LEMNISCATE_JOBS, LEMNISCATE_INCLUDE_CONJECTURE.
inline constexpr std::string_view kEnvPrefix = "LEMNISCATE_";

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;
/// Lookup through std::getenv.
EnvLookup process_environment();

/// Applies every variable present in the environment on top of `base`.
Config apply_environment(Config base, const EnvLookup& env);

}  // namespace lemniscate
