#pragma once

#include <json.hpp>

#include "cohit/cohit.hpp"
#include "cohit/invariant.hpp"
#include "cohit/kameko.hpp"

namespace cohit {

// Result JSON: {s, N, omega?, part, column_count, hit_rank, dimension,
// generator_set, saturation:[{gen, family_rank, cumulative_rank}]}
inline nlohmann::json to_json(const DimResult& r,
                              const std::optional<WeightVector>& omega = std::nullopt,
                              BasisPart part = BasisPart::full,
                              std::optional<std::uint64_t> block_dimension = std::nullopt) {
    nlohmann::json j;
    j["s"] = r.s;
    j["N"] = r.n;
    if (omega) j["omega"] = omega->text();
    j["part"] = part_name(part);
    j["column_count"] = r.column_count;
    j["hit_rank"] = r.hit_rank;
    j["dimension"] = block_dimension ? *block_dimension : r.dimension;
    j["generator_set"] = r.generator_set;
    j["wood_fast_path"] = r.wood_fast_path;
    nlohmann::json sat = nlohmann::json::array();
    for (const SaturationEntry& e : r.saturation)
        sat.push_back({{"gen", e.gen},
                       {"family_rank", e.family_rank},
                       {"cumulative_rank", e.cumulative_rank}});
    j["saturation"] = sat;
    return j;
}

// {s, N, source_degree, source_dim, target_dim, kernel_dim, is_iso,
//  mu_source, mu_target}
inline nlohmann::json to_json(const KamekoReport& r) {
    return {{"s", r.s},
            {"N", r.n},
            {"source_degree", r.source_degree},
            {"source_dim", r.source_dim},
            {"target_dim", r.target_dim},
            {"kernel_dim", r.kernel_dim},
            {"is_iso", r.is_iso},
            {"mu_source", r.mu_source},
            {"mu_target", r.mu_target},
            {"source_from", r.source_from},
            {"target_from", r.target_from}};
}

// {s, N, omega?, group, dimension, generators:[[monomial,...],...]}
inline nlohmann::json to_json(const InvariantReport& r) {
    nlohmann::json j;
    j["s"] = r.s;
    j["N"] = r.n;
    if (r.omega) j["omega"] = r.omega->text();
    j["group"] = r.group == InvariantGroup::gl ? "gl" : "sigma";
    j["dimension"] = r.dimension;
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& cls : r.generators) {
        nlohmann::json one = nlohmann::json::array();
        for (const Monomial& m : cls) one.push_back(m.text());
        gens.push_back(one);
    }
    j["generators"] = gens;
    return j;
}

}  // namespace cohit
