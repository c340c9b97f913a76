#pragma once

// File cache keyed by (p, q, computation, n, version). One JSON file per key;
// the key is stored inside so collisions and corrupt files read as misses.

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

namespace projdim::cli {

struct CacheKey {
    int p = 0;
    int q = 0;
    std::string computation;
    std::size_t n = 0;
    std::string version;

    std::string canonical() const;
    std::string digest() const;  // 16 hex digits
};

class ResultCache {
public:
    // Empty directory disables the cache.
    explicit ResultCache(std::filesystem::path dir = {}) : dir_(std::move(dir)) {}

    bool enabled() const { return !dir_.empty(); }
    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path path_for(const CacheKey& key) const;

    std::optional<nlohmann::json> lookup(const CacheKey& key) const;
    // Write to a temporary file, then rename over the target.
    void store(const CacheKey& key, const nlohmann::json& value) const;

private:
    std::filesystem::path dir_;
};

// --cache-dir, else PROJDIM_CACHE_DIR, else $XDG_CACHE_HOME/projdim or ~/.cache/projdim.
std::filesystem::path default_cache_dir();

}  // namespace projdim::cli
