#pragma once

#include "lemniscate/series.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace lemniscate {

inline constexpr int kCacheSchemaVersion = 1;

/// Serialized form of a SeriesTables value: a versioned JSON document.
std::string cache_document(const SeriesTables& tables);

/// Parses a cache document; nullopt when it is malformed, has another
/// schema version, or fails the consistency checks on load (every table is
/// regenerated up to the same index and compared).
std::optional<SeriesTables> parse_cache_document(const std::string& text);

/// Atomic write (temporary file plus rename).
void save_cache(const std::filesystem::path& path, const SeriesTables& tables);
std::optional<SeriesTables> load_cache(const std::filesystem::path& path);

enum class CacheStatus { Disabled, Hit, Created, Regenerated, Extended };
std::string_view to_string(CacheStatus s);

struct CachedTables {
    SeriesTables tables;
    CacheStatus status;
};

/// Tables reaching at least `max_index`, read from `path` when it holds a
/// valid cache that is large enough. Otherwise regenerated and written back.
/// An empty path disables the cache.
CachedTables load_or_generate(const std::filesystem::path& path, int max_index);

}  // namespace lemniscate
