#pragma once

#include "lemniscate/config.hpp"
#include "lemniscate/json_io.hpp"
#include "lemniscate/verification.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace lemniscate {

/// Suite categories, one per acceptance criterion.
inline constexpr const char* kSuiteCategories[] = {"examples", "routes",     "numeric",    "structural", "contour",
                                                   "generic_x", "conjecture", "sanity", "membership"};

struct SuiteItem {
    std::string id;
    std::string category;
    bool conjectural = false;
    std::function<VerificationReport()> run;
};

/// Index the coefficient tables must reach for a configuration.
int suite_table_index(const Config& config);

/// Every check of verify-all for the configuration. When `categories` is
/// non-empty only those categories are built.
std::vector<SuiteItem> build_suite(const Config& config, std::shared_ptr<const SeriesTables> tables,
                                   const std::vector<std::string>& categories = {});

struct SuiteResult {
    std::vector<VerificationReport> reports;  // sorted by id
    int passed = 0;
    int failed = 0;               // non-conjectural failures
    int conjectural_failed = 0;
    bool ok = false;              // no counted failure
    double runtime_ms = 0;
};

/// Runs the items on a pool of `jobs` threads. Exceptions become failed
/// reports. Conjectural failures count only when `include_conjecture`.
SuiteResult run_suite(const std::vector<SuiteItem>& items, int jobs, bool include_conjecture);

Json suite_to_json(const SuiteResult& result, const Config& config, bool include_runtime = true);
std::string suite_to_text(const SuiteResult& result);

}  // namespace lemniscate
