#include "binform/store.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "json.hpp"

namespace binform {

using json = nlohmann::ordered_json;

std::string RunConfig::resolved_cache_path() const {
    if (!cache_path.empty()) return cache_path;
    if (const char* env = std::getenv("BINFORM_CACHE_DIR")) return std::string(env) + "/binform_cache.json";
    return "binform_cache.json";
}

std::string run_config_to_json(const RunConfig& cfg) {
    json j;
    j["command"] = cfg.command;
    json p = json::object();
    for (const auto& [k, v] : cfg.params) p[k] = v;
    j["params"] = p;
    j["max_rows"] = cfg.max_rows;
    j["max_cols"] = cfg.max_cols;
    j["time_budget_seconds"] = cfg.time_budget_seconds;
    j["prime_seed"] = cfg.prime_seed;
    j["certify"] = cfg.certify;
    j["use_cache"] = cfg.use_cache;
    j["cache_path"] = cfg.resolved_cache_path();
    j["format"] = cfg.format;
    return j.dump();
}

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in.good()) return;
    json j;
    try {
        in >> j;
    } catch (...) {
        return;  // unreadable cache: start fresh
    }
    if (!j.contains("version") || j["version"].get<int>() != kVersion) return;
    if (!j.contains("entries")) return;
    for (const auto& [k, v] : j["entries"].items()) entries_[k] = v["value"].get<std::string>();
}

std::optional<std::string> ResultCache::get(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void ResultCache::put(const std::string& key, const std::string& value) {
    auto it = entries_.find(key);
    if (it != entries_.end() && it->second == value) return;
    entries_[key] = value;
    dirty_ = true;
}

void ResultCache::flush() {
    if (!dirty_) return;
    json j;
    j["version"] = kVersion;
    json e = json::object();
    for (const auto& [k, v] : entries_) e[k] = json{{"value", v}};
    j["entries"] = e;
    std::string tmp = path_ + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out.good()) throw std::runtime_error("cache: cannot write " + tmp);
        out << j.dump(1) << "\n";
    }
    if (std::rename(tmp.c_str(), path_.c_str()) != 0) throw std::runtime_error("cache: atomic replace failed");
    dirty_ = false;
}

std::string ResultCache::dim_key(int d, int q, int m, const std::string& method, uint64_t seed) {
    return "dim/d=" + std::to_string(d) + "/q=" + std::to_string(q) + "/m=" + std::to_string(m) +
           "/method=" + method + "/seed=" + std::to_string(seed);
}

}  // namespace binform
