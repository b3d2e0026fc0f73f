#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cohit/cohit.hpp"
#include "cohit/monomial.hpp"

namespace cohit {

enum class VerifyTier { core, extended };

// One published dimension pinned for regression. Every entry must carry a
// citation; an uncited entry is rejected at load time.
struct KnownValue {
    int s = 0;
    std::uint64_t n = 0;
    std::optional<WeightVector> omega;
    BasisPart part = BasisPart::full;
    std::uint64_t expected_dimension = 0;
    std::optional<std::uint64_t> expected_column_count;
    std::optional<std::uint64_t> expected_hit_rank;
    VerifyTier tier = VerifyTier::core;
    std::string citation;

    std::string describe() const;
};

// Built-in registry of literature values, core tier first.
const std::vector<KnownValue>& builtin_registry();

// Load additional entries from a JSON file (array of objects mirroring
// KnownValue). Throws std::runtime_error on malformed or uncited entries.
std::vector<KnownValue> load_registry_file(const std::string& path);

// Named weight vectors that recur across the computed degrees.
namespace named_weights {
// the five blocks carrying the degree-22 cohits
const std::vector<WeightVector>& degree22_blocks();
// the three candidate kernel blocks at degree 49; only the first survives
const std::vector<WeightVector>& degree49_kernel_blocks();
}  // namespace named_weights

}  // namespace cohit
