#include "cache.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <unistd.h>

namespace projdim::cli {

std::string CacheKey::canonical() const {
    std::ostringstream os;
    os << "p=" << p << ";q=" << q << ";computation=" << computation << ";n=" << n << ";version=" << version;
    return os.str();
}

std::string CacheKey::digest() const {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (unsigned char c : canonical()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::filesystem::path ResultCache::path_for(const CacheKey& key) const {
    return dir_ / (key.computation + "-" + key.digest() + ".json");
}

std::optional<nlohmann::json> ResultCache::lookup(const CacheKey& key) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    auto doc = nlohmann::json::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("key") || !doc.contains("value"))
        return std::nullopt;
    if (!doc["key"].is_string() || doc["key"].get<std::string>() != key.canonical()) return std::nullopt;
    return doc["value"];
}

void ResultCache::store(const CacheKey& key, const nlohmann::json& value) const {
    if (!enabled()) return;
    static std::atomic<unsigned> counter{0};
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    const auto target = path_for(key);
    auto tmp = target;
    tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++) + "." +
           std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()) % 100000);
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) return;  // unwritable cache is not an error
        nlohmann::json doc{{"key", key.canonical()}, {"value", value}};
        out << doc.dump() << '\n';
        if (!out) {
            std::filesystem::remove(tmp, ec);
            return;
        }
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("PROJDIM_CACHE_DIR"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "projdim";
    if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "projdim";
    return {};
}

}  // namespace projdim::cli
