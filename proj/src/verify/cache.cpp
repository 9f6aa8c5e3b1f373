#include "lemniscate/cache.hpp"

#include "lemniscate/error.hpp"
#include "lemniscate/json_io.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

namespace lemniscate {

std::string cache_document(const SeriesTables& tables) {
    Json tabs = Json::object();
    for (SeriesKind k : {SeriesKind::SdP, SeriesKind::SnG, SeriesKind::Sn2Q, SeriesKind::SinhR})
        tabs[std::string(to_string(k))] = to_json(tables.table(k));
    const Json doc{{"schema_version", kCacheSchemaVersion}, {"max_index", tables.max_index()}, {"tables", tabs}};
    return doc.dump(1) + "\n";
}

std::optional<SeriesTables> parse_cache_document(const std::string& text) {
    try {
        const Json doc = Json::parse(text);
        if (doc.at("schema_version").get<int>() != kCacheSchemaVersion) return std::nullopt;
        const Json& tabs = doc.at("tables");
        SeriesTables loaded(series_table_from_json(tabs.at("sd_p")), series_table_from_json(tabs.at("sn_g")),
                            series_table_from_json(tabs.at("sn2_q")), series_table_from_json(tabs.at("sinh_R")));
        if (loaded.max_index() != doc.at("max_index").get<int>()) return std::nullopt;
        // Regeneration is cheap next to what a wrong polynomial would cost downstream.
        if (!(SeriesTables::generate(loaded.max_index()) == loaded)) return std::nullopt;
        return loaded;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void save_cache(const std::filesystem::path& path, const SeriesTables& tables) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write cache file " + tmp.string());
        out << cache_document(tables);
        if (!out) throw Error("cannot write cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::optional<SeriesTables> load_cache(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_cache_document(buf.str());
}

std::string_view to_string(CacheStatus s) {
    switch (s) {
        case CacheStatus::Disabled: return "disabled";
        case CacheStatus::Hit: return "hit";
        case CacheStatus::Created: return "created";
        case CacheStatus::Regenerated: return "regenerated";
        case CacheStatus::Extended: return "extended";
    }
    return "unknown";
}

CachedTables load_or_generate(const std::filesystem::path& path, int max_index) {
    if (path.empty()) return {SeriesTables::generate(max_index), CacheStatus::Disabled};
    std::error_code ec;
    const bool existed = std::filesystem::exists(path, ec);
    std::optional<SeriesTables> cached = load_cache(path);
    if (cached && cached->max_index() >= max_index) return {std::move(*cached), CacheStatus::Hit};
    const CacheStatus status = !existed ? CacheStatus::Created : cached ? CacheStatus::Extended : CacheStatus::Regenerated;
    SeriesTables fresh = SeriesTables::generate(max_index);
    save_cache(path, fresh);
    return {std::move(fresh), status};
}

}  // namespace lemniscate
