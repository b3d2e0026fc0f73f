#include "cohit/registry.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace cohit {

std::string KnownValue::describe() const {
    std::string out = "s=" + std::to_string(s) + " N=" + std::to_string(n);
    if (omega) out += " omega=" + omega->text();
    if (part != BasisPart::full) out += " part=" + part_name(part);
    return out;
}

namespace named_weights {

const std::vector<WeightVector>& degree22_blocks() {
    static const std::vector<WeightVector> v = {
        WeightVector({2, 2, 2, 1}), WeightVector({2, 4, 1, 1}), WeightVector({2, 4, 3}),
        WeightVector({4, 3, 1, 1}), WeightVector({4, 3, 3})};
    return v;
}

const std::vector<WeightVector>& degree49_kernel_blocks() {
    static const std::vector<WeightVector> v = {
        WeightVector({3, 3, 2, 2, 1}), WeightVector({3, 3, 4, 1, 1}), WeightVector({3, 3, 4, 3})};
    return v;
}

}  // namespace named_weights

const std::vector<KnownValue>& builtin_registry() {
    using WV = WeightVector;
    static const std::vector<KnownValue> table = [] {
        std::vector<KnownValue> t;
        auto add = [&](KnownValue v) { t.push_back(std::move(v)); };

        // ---- core tier ----
        add({5, 7, std::nullopt, BasisPart::full, 110, 330, 220, VerifyTier::core,
             "literature: five-variable cohit dimension 110 at degree 7 (330 columns, hit rank 220)"});
        add({5, 13, std::nullopt, BasisPart::full, 250, 2380, 2130, VerifyTier::core,
             "literature: five-variable cohit dimension 250 at degree 13 with published basis table"});
        add({5, 22, std::nullopt, BasisPart::full, 965, 14950, std::nullopt, VerifyTier::core,
             "literature: five-variable cohit dimension 965 at degree 22"});
        add({5, 22, WV({2, 2, 2, 1}), BasisPart::full, 280, std::nullopt, std::nullopt,
             VerifyTier::core, "literature: degree-22 weight block (2,2,2,1) has dimension 280"});
        add({5, 22, WV({2, 4, 1, 1}), BasisPart::full, 25, std::nullopt, std::nullopt,
             VerifyTier::core, "literature: degree-22 weight block (2,4,1,1) has dimension 25"});
        add({5, 22, WV({2, 4, 3}), BasisPart::full, 5, std::nullopt, std::nullopt,
             VerifyTier::core, "literature: degree-22 weight block (2,4,3) has dimension 5"});
        add({5, 22, WV({4, 3, 1, 1}), BasisPart::full, 480, std::nullopt, std::nullopt,
             VerifyTier::core, "literature: degree-22 weight block (4,3,1,1) has dimension 480"});
        add({5, 22, WV({4, 3, 3}), BasisPart::full, 175, std::nullopt, std::nullopt,
             VerifyTier::core, "literature: degree-22 weight block (4,3,3) has dimension 175"});

        // inputs consumed by the zero-part formula and the degree-49 assembly
        add({3, 49, std::nullopt, BasisPart::positive_part, 14, std::nullopt, std::nullopt,
             VerifyTier::core, "literature: three-variable positive-part dimension 14 at degree 49"});
        add({4, 49, std::nullopt, BasisPart::positive_part, 154, std::nullopt, std::nullopt,
             VerifyTier::core, "literature: four-variable positive-part dimension 154 at degree 49"});
        add({5, 49, std::nullopt, BasisPart::full, 2856, 292825, 289969, VerifyTier::extended,
             "literature: five-variable cohit dimension 2856 at degree 49 (292825 columns, hit rank 289969)"});

        // ---- extended tier ----
        add({5, 49, WV({3, 3, 2, 2, 1}), BasisPart::full, 1891, std::nullopt, std::nullopt,
             VerifyTier::extended,
             "literature: the degree-49 kernel block (3,3,2,2,1) is 1891-dimensional"});
        add({5, 49, WV({3, 3, 4, 1, 1}), BasisPart::full, 0, std::nullopt, std::nullopt,
             VerifyTier::extended, "literature: the degree-49 block (3,3,4,1,1) vanishes"});
        add({5, 49, WV({3, 3, 4, 3}), BasisPart::full, 0, std::nullopt, std::nullopt,
             VerifyTier::extended, "literature: the degree-49 block (3,3,4,3) vanishes"});
        add({5, 49, WV({3, 3, 2, 2, 1}), BasisPart::positive_part, 981, std::nullopt, std::nullopt,
             VerifyTier::extended,
             "literature: positive part of the degree-49 block (3,3,2,2,1) has dimension 981"});
        add({5, 49, WV({3, 3, 2, 2, 1}), BasisPart::zero_part, 910, std::nullopt, std::nullopt,
             VerifyTier::extended,
             "literature: zero part of the degree-49 block (3,3,2,2,1) has dimension 910"});
        add({5, 53, std::nullopt, BasisPart::full, 2201, 395010, 392809, VerifyTier::extended,
             "literature: five-variable cohit dimension 2201 at degree 53 (395010 columns, hit rank 392809)"});
        add({5, 61, std::nullopt, BasisPart::full, 945, 677040, 676095, VerifyTier::extended,
             "literature: five-variable cohit dimension 945 at degree 61 (677040 columns, hit rank 676095)"});
        add({5, 62, std::nullopt, BasisPart::full, 1171, 720720, 719549, VerifyTier::extended,
             "literature: five-variable cohit dimension 1171 at degree 62 (720720 columns, hit rank 719549)"});
        return t;
    }();
    return table;
}

std::vector<KnownValue> load_registry_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open registry file: " + path);
    nlohmann::json doc;
    f >> doc;
    if (!doc.is_array()) throw std::runtime_error("registry file must hold a JSON array");
    std::vector<KnownValue> out;
    for (const auto& item : doc) {
        KnownValue v;
        v.s = item.at("s").get<int>();
        v.n = item.at("N").get<std::uint64_t>();
        if (item.contains("omega") && !item["omega"].is_null())
            v.omega = WeightVector::parse(item["omega"].get<std::string>());
        if (item.contains("part")) {
            std::string p = item["part"].get<std::string>();
            if (p == "full") v.part = BasisPart::full;
            else if (p == "zero") v.part = BasisPart::zero_part;
            else if (p == "positive") v.part = BasisPart::positive_part;
            else throw std::runtime_error("registry: bad part '" + p + "'");
        }
        v.expected_dimension = item.at("dimension").get<std::uint64_t>();
        if (item.contains("column_count"))
            v.expected_column_count = item["column_count"].get<std::uint64_t>();
        if (item.contains("hit_rank"))
            v.expected_hit_rank = item["hit_rank"].get<std::uint64_t>();
        if (item.contains("tier")) {
            std::string t = item["tier"].get<std::string>();
            if (t == "core") v.tier = VerifyTier::core;
            else if (t == "extended") v.tier = VerifyTier::extended;
            else throw std::runtime_error("registry: bad tier '" + t + "'");
        }
        v.citation = item.value("citation", std::string{});
        if (v.citation.empty())
            throw std::runtime_error("registry: entry " + v.describe() + " lacks a citation");
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace cohit
