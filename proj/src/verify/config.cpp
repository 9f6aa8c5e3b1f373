#include "lemniscate/config.hpp"

#include "lemniscate/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

namespace lemniscate {

std::string_view to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::Text: return "text";
        case OutputFormat::Json: return "json";
        case OutputFormat::Latex: return "latex";
    }
    return "text";
}

OutputFormat output_format_from_string(std::string_view s) {
    if (s == "text") return OutputFormat::Text;
    if (s == "json") return OutputFormat::Json;
    if (s == "latex") return OutputFormat::Latex;
    throw DomainError("unknown output format '" + std::string(s) + "' (expected text, json or latex)");
}

namespace {

int parse_int(std::string_view s, std::string_view what) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw DomainError(std::string(what) + ": not an integer: '" + std::string(s) + "'");
    return v;
}

bool parse_bool(std::string_view s, std::string_view what) {
    std::string lower(s);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "1" || lower == "true" || lower == "yes" || lower == "on") return true;
    if (lower == "0" || lower == "false" || lower == "no" || lower == "off" || lower.empty()) return false;
    throw DomainError(std::string(what) + ": not a boolean: '" + std::string(s) + "'");
}

}  // namespace

MaxM parse_max_m(std::string_view text, MaxM base) {
    if (text.find('=') == std::string_view::npos) {
        const int n = parse_int(text, "max-m");
        return {n, n, n, n};
    }
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw DomainError("max-m: expected group=N, got '" + std::string(item) + "'");
        const std::string_view key = item.substr(0, eq);
        const int value = parse_int(item.substr(eq + 1), "max-m");
        if (key == "cosh") base.cosh = value;
        else if (key == "sinh") base.sinh = value;
        else if (key == "plus") base.plus = value;
        else if (key == "minus") base.minus = value;
        else throw DomainError("max-m: unknown group '" + std::string(key) + "' (cosh, sinh, plus, minus)");
    }
    return base;
}

void Config::validate() const {
    if (precision_digits < 10) throw DomainError("precision-digits must be at least 10");
    if (precision_digits > 2000) throw DomainError("precision-digits must be at most 2000");
    auto check = [](int v, int lo, const char* name) {
        if (v < lo || v > kMaxIndexLimit)
            throw DomainError(std::string("max-m for ") + name + " must lie in [" + std::to_string(lo) + ", " +
                              std::to_string(kMaxIndexLimit) + "]");
    };
    check(max_m.cosh, 1, "cosh");
    check(max_m.sinh, 2, "sinh");
    check(max_m.plus, 1, "plus");
    check(max_m.minus, 2, "minus");
    if (jobs < 1) throw DomainError("jobs must be at least 1");
}

EnvLookup process_environment() {
    return [](const std::string& name) -> std::optional<std::string> {
        const char* v = std::getenv(name.c_str());
        if (v == nullptr) return std::nullopt;
        return std::string(v);
    };
}

Config apply_environment(Config c, const EnvLookup& env) {
    auto get = [&](const char* suffix) { return env(std::string(kEnvPrefix) + suffix); };
    if (auto v = get("PRECISION_DIGITS")) c.precision_digits = parse_int(*v, "LEMNISCATE_PRECISION_DIGITS");
    if (auto v = get("MAX_M")) c.max_m = parse_max_m(*v, c.max_m);
    if (auto v = get("FORMAT")) c.format = output_format_from_string(*v);
    if (auto v = get("CACHE")) c.cache_path = *v;
    if (auto v = get("JOBS")) c.jobs = parse_int(*v, "LEMNISCATE_JOBS");
    if (auto v = get("INCLUDE_CONJECTURE")) c.include_conjecture = parse_bool(*v, "LEMNISCATE_INCLUDE_CONJECTURE");
    return c;
}

}  // namespace lemniscate
