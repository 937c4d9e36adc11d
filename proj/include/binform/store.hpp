#ifndef BINFORM_STORE_HPP
#define BINFORM_STORE_HPP

#include <map>
#include <optional>
#include <string>


#include "binform/numeric.hpp"

namespace binform {

// Everything a run depends on; echoed into every report so identical
// config + seed reproduces identical bytes.
struct RunConfig {
    std::string command;
    std::map<std::string, std::string> params;
    int64_t max_rows = 400000;
    int64_t max_cols = 2000000;
    double time_budget_seconds = 1800.0;  // per row / sub-computation
    uint64_t prime_seed = 1;
    bool certify = false;
    bool use_cache = true;
    std::string cache_path;  // empty: resolved from env or default
    std::string format = "text";

    std::string resolved_cache_path() const;
};

std::string run_config_to_json(const RunConfig& cfg);

// Versioned key-value store persisted as one JSON file with atomic
// replacement. Keys carry the full parameter/method/seed scope.
class ResultCache {
public:
    static constexpr int kVersion = 1;

    explicit ResultCache(std::string path);

    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, const std::string& value);
    bool dirty() const { return dirty_; }
    void flush();

    const std::map<std::string, std::string>& entries() const { return entries_; }

    static std::string dim_key(int d, int q, int m, const std::string& method, uint64_t seed);

private:
    std::string path_;
    std::map<std::string, std::string> entries_;
    bool dirty_ = false;
};

}  // namespace binform

#endif
