#include "lemniscate/cache.hpp"
#include "lemniscate/closed_forms.hpp"
#include "lemniscate/config.hpp"
#include "lemniscate/error.hpp"
#include "lemniscate/families.hpp"
#include "lemniscate/json_io.hpp"
#include "lemniscate/suite.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace lemniscate;
namespace fs = std::filesystem;

namespace {

class TempDir {
public:
    TempDir() {
        std::random_device rd;
        path_ = fs::temp_directory_path() / ("lemniscate-test-" + std::to_string(rd()));
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

Json without_runtime(Json j) {
    j["summary"].erase("runtime_ms");
    return j;
}

}  // namespace

TEST(JsonIo, PolyAndRationalFunctionRoundTrip) {
    const Poly p = Poly::from_strings({"1", "-16", "16"}) * Poly::from_strings({"2/7", "-1/3"});
    const Json j = to_json(p);
    EXPECT_EQ(j.front(), "2/7");
    EXPECT_EQ(poly_from_json(j), p);
    EXPECT_EQ(poly_from_json(Json::array()), Poly());
    const RationalFunction f(Poly::from_strings({"-1", "1"}), Poly::from_strings({"3", "2"}));
    EXPECT_EQ(rational_function_from_json(to_json(f)), f);
    EXPECT_THROW(poly_from_json(Json{"1/0"}), DomainError);
    EXPECT_THROW(poly_from_json(Json{{"a", 1}}), DomainError);
}

TEST(JsonIo, TablesExpressionsAndClosedFormsRoundTrip) {
    const SeriesTables t = SeriesTables::generate(6);
    for (SeriesKind k : {SeriesKind::SdP, SeriesKind::SnG, SeriesKind::Sn2Q, SeriesKind::SinhR}) {
        const Json j = to_json(t.table(k));
        EXPECT_EQ(j["kind"], std::string(to_string(k)));
        EXPECT_EQ(series_table_from_json(j), t.table(k));
    }
    const DiffExpr e = sinh_family_expr(SinhFamily::B5, 2, t);
    EXPECT_EQ(diff_expr_from_json(to_json(e)), e);
    const GammaPiExpr g = closed_sum(ClosedFamily::Cosh5, 2, SumRoute::Theorem);
    const Json gj = to_json(g);
    EXPECT_EQ(gamma_pi_from_json(gj), g);
    EXPECT_EQ(gj.size(), g.size());
    EXPECT_TRUE(gj.front().contains("pi_exp_x2"));
}

TEST(JsonIo, ReportFieldsMatchTheirKind) {
    VerificationReport exact;
    exact.id = "structural/x";
    exact.pass = true;
    const Json je = to_json(exact, false);
    EXPECT_TRUE(je["numeric_value"].is_null());
    EXPECT_TRUE(je["deviation"].is_null());
    EXPECT_FALSE(je.contains("runtime_ms"));
    const auto ctx = NumericContext::with_digits(30);
    VerificationReport num = compare(GammaPiExpr::monomial(1, 16, 4, -3), evaluate(GammaPiExpr::monomial(1, 16, 4, -3), ctx), 25, ctx);
    const Json jn = to_json(num);
    EXPECT_TRUE(jn["numeric_value"].is_string());
    EXPECT_TRUE(jn["symbolic_json"].is_array());
    EXPECT_TRUE(jn.contains("runtime_ms"));
    EXPECT_EQ(jn["pass"], true);
}

TEST(Cache, SaveLoadSaveIsByteStable) {
    TempDir dir;
    const fs::path p = dir.path() / "tables.json";
    const SeriesTables t = SeriesTables::generate(10);
    save_cache(p, t);
    const std::string first = read_file(p);
    EXPECT_EQ(first, cache_document(t));
    const auto loaded = load_cache(p);
    ASSERT_TRUE(loaded.has_value());
    EXPECT_EQ(*loaded, t);
    save_cache(p, *loaded);
    EXPECT_EQ(read_file(p), first);
    EXPECT_EQ(Json::parse(first)["schema_version"], kCacheSchemaVersion);
}

TEST(Cache, StatusLifecycle) {
    TempDir dir;
    const fs::path p = dir.path() / "sub" / "tables.json";
    fs::create_directories(p.parent_path());
    EXPECT_EQ(load_or_generate("", 6).status, CacheStatus::Disabled);
    const CachedTables created = load_or_generate(p, 6);
    EXPECT_EQ(created.status, CacheStatus::Created);
    EXPECT_GE(created.tables.max_index(), 6);
    EXPECT_EQ(load_or_generate(p, 6).status, CacheStatus::Hit);
    EXPECT_EQ(load_or_generate(p, 4).status, CacheStatus::Hit);
    const CachedTables extended = load_or_generate(p, 9);
    EXPECT_EQ(extended.status, CacheStatus::Extended);
    EXPECT_EQ(extended.tables, SeriesTables::generate(9));
    EXPECT_EQ(load_or_generate(p, 9).status, CacheStatus::Hit);
}

TEST(Cache, CorruptOrForeignDocumentsAreRegenerated) {
    TempDir dir;
    const fs::path p = dir.path() / "tables.json";
    const SeriesTables t = SeriesTables::generate(6);
    const std::string good = cache_document(t);

    write_file(p, good.substr(0, good.size() / 2));
    EXPECT_FALSE(load_cache(p).has_value());
    const CachedTables r = load_or_generate(p, 6);
    EXPECT_EQ(r.status, CacheStatus::Regenerated);
    EXPECT_EQ(r.tables, t);
    EXPECT_EQ(read_file(p), good);

    Json wrong_version = Json::parse(good);
    wrong_version["schema_version"] = kCacheSchemaVersion + 1;
    EXPECT_FALSE(parse_cache_document(wrong_version.dump()).has_value());

    // A single altered coefficient is caught by regeneration on load.
    Json tampered = Json::parse(good);
    tampered["tables"]["sd_p"]["polys"][3][1] = "-15";
    EXPECT_FALSE(parse_cache_document(tampered.dump()).has_value());
    write_file(p, tampered.dump());
    EXPECT_EQ(load_or_generate(p, 6).status, CacheStatus::Regenerated);

    EXPECT_FALSE(parse_cache_document("").has_value());
    EXPECT_FALSE(parse_cache_document("[]").has_value());
    EXPECT_TRUE(parse_cache_document(good).has_value());
}

TEST(Config, MaxMParsing) {
    EXPECT_EQ(parse_max_m("3"), (MaxM{3, 3, 3, 3}));
    EXPECT_EQ(parse_max_m("cosh=5,minus=2"), (MaxM{5, 6, 4, 2}));
    EXPECT_EQ(parse_max_m("sinh=3", MaxM{1, 1, 1, 1}), (MaxM{1, 3, 1, 1}));
    EXPECT_THROW(parse_max_m("tanh=2"), DomainError);
    EXPECT_THROW(parse_max_m("cosh"), DomainError);
    EXPECT_THROW(parse_max_m("x"), DomainError);
}

TEST(Config, Validation) {
    Config c;
    EXPECT_NO_THROW(c.validate());
    c.precision_digits = 9;
    EXPECT_THROW(c.validate(), DomainError);
    c = Config{};
    c.max_m = parse_max_m("1");
    EXPECT_THROW(c.validate(), DomainError);  // the sinh and minus groups start at 2
    c.max_m = parse_max_m("2");
    EXPECT_NO_THROW(c.validate());
    c.max_m = parse_max_m(std::to_string(kMaxIndexLimit + 1));
    EXPECT_THROW(c.validate(), DomainError);
    c = Config{};
    c.jobs = 0;
    EXPECT_THROW(c.validate(), DomainError);
}

TEST(Config, EnvironmentOverlay) {
    std::map<std::string, std::string> vars = {{"LEMNISCATE_PRECISION_DIGITS", "60"},
                                               {"LEMNISCATE_MAX_M", "cosh=3"},
                                               {"LEMNISCATE_FORMAT", "json"},
                                               {"LEMNISCATE_JOBS", "3"},
                                               {"LEMNISCATE_INCLUDE_CONJECTURE", "true"},
                                               {"LEMNISCATE_CACHE", "/tmp/x.json"}};
    const EnvLookup env = [&](const std::string& k) -> std::optional<std::string> {
        auto it = vars.find(k);
        if (it == vars.end()) return std::nullopt;
        return it->second;
    };
    const Config c = apply_environment(Config{}, env);
    EXPECT_EQ(c.precision_digits, 60);
    EXPECT_EQ(c.max_m, (MaxM{3, 6, 4, 4}));
    EXPECT_EQ(c.format, OutputFormat::Json);
    EXPECT_EQ(c.jobs, 3);
    EXPECT_TRUE(c.include_conjecture);
    EXPECT_EQ(c.cache_path, "/tmp/x.json");
    vars = {{"LEMNISCATE_JOBS", "three"}};
    EXPECT_THROW(apply_environment(Config{}, env), DomainError);
    vars = {};
    EXPECT_EQ(apply_environment(Config{}, env).precision_digits, 40);
}

TEST(Suite, CoversEveryCategoryWithUniqueIds) {
    Config c;
    c.precision_digits = 20;
    c.max_m = parse_max_m("2");
    auto tables = std::make_shared<const SeriesTables>(SeriesTables::generate(suite_table_index(c)));
    const auto items = build_suite(c, tables);
    std::set<std::string> ids, categories;
    for (const auto& item : items) {
        EXPECT_TRUE(ids.insert(item.id).second) << item.id;
        categories.insert(item.category);
        EXPECT_EQ(item.id.substr(0, item.category.size()), item.category);
        EXPECT_EQ(item.conjectural, item.category == "conjecture");
    }
    for (const char* cat : kSuiteCategories) EXPECT_TRUE(categories.count(cat)) << cat;
    const auto only = build_suite(c, tables, {"sanity"});
    ASSERT_FALSE(only.empty());
    for (const auto& item : only) EXPECT_EQ(item.category, "sanity");
}

TEST(Suite, ResultsDoNotDependOnJobCount) {
    Config c;
    c.precision_digits = 20;
    c.max_m = parse_max_m("2");
    auto tables = std::make_shared<const SeriesTables>(SeriesTables::generate(suite_table_index(c)));
    const auto items = build_suite(c, tables);
    const SuiteResult one = run_suite(items, 1, false);
    const SuiteResult four = run_suite(items, 4, false);
    EXPECT_TRUE(one.ok);
    EXPECT_EQ(one.failed, 0);
    EXPECT_EQ(one.passed, static_cast<int>(items.size()));
    const Json a = without_runtime(suite_to_json(one, c, false));
    const Json b = without_runtime(suite_to_json(four, c, false));
    EXPECT_EQ(a.dump(), b.dump());
    EXPECT_NE(suite_to_text(one).find("passed"), std::string::npos);
}

TEST(Suite, ExceptionsBecomeFailedReports) {
    std::vector<SuiteItem> items = {
        {"numeric/ok", "numeric", false, [] { VerificationReport r; r.id = "numeric/ok"; r.pass = true; return r; }},
        {"numeric/throws", "numeric", false, []() -> VerificationReport { throw ConvergenceError("budget"); }},
        {"conjecture/soft", "conjecture", true, [] { VerificationReport r; r.id = "conjecture/soft"; r.conjectural = true; return r; }},
    };
    const SuiteResult r = run_suite(items, 2, false);
    ASSERT_EQ(r.reports.size(), 3u);
    EXPECT_EQ(r.failed, 1);
    EXPECT_EQ(r.conjectural_failed, 1);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.reports[0].id, "conjecture/soft");
    EXPECT_EQ(r.reports[2].id, "numeric/throws");
    EXPECT_NE(r.reports[2].detail.find("budget"), std::string::npos);
    const SuiteResult strict = run_suite({items[0], items[2]}, 1, true);
    EXPECT_FALSE(strict.ok);
    EXPECT_TRUE(run_suite({items[0], items[2]}, 1, false).ok);
}
