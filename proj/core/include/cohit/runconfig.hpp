#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cohit {

// Resource ceilings and run options shared by the library entry points and
// the CLI. Ceilings are checked before allocation where possible.
struct RunConfig {
    std::uint64_t max_columns = 2'000'000;
    std::uint64_t max_row_bytes = 12ull << 30;  // resident accumulator bytes
    std::string cache_dir;                      // empty = caching disabled
    bool force_full_run = false;                // run elimination even when mu(N) > s
    std::optional<std::vector<std::uint64_t>> generator_override;

    // precedence: explicit flag > HIT_CACHE_DIR env > ./.hitcache
    static std::string resolve_cache_dir(const std::string& flag_value);
};

}  // namespace cohit
