#ifndef BURNSIDE_IO_HPP
#define BURNSIDE_IO_HPP

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "burnside/common.hpp"
#include "burnside/fusion.hpp"
#include "burnside/group.hpp"

namespace burnside {

inline nlohmann::json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput("cannot parse " + path.string() + ": " + e.what());
    }
    return j;
}

/// Group file: either {"cayley": [[...]], "labels": [...], "name": "..."}
/// or {"degree": d, "perm_generators": [[...], ...], "name": "..."}.
/// Indices are 0-based.
inline FiniteGroup group_from_json(const nlohmann::json& j) {
    std::string name = j.value("name", std::string{});
    if (j.contains("cayley")) {
        std::vector<std::vector<int>> table = j.at("cayley").get<std::vector<std::vector<int>>>();
        std::vector<std::string> labels;
        if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
        return FiniteGroup::from_cayley(table, std::move(labels), std::move(name));
    }
    if (j.contains("perm_generators")) {
        const int degree = j.at("degree").get<int>();
        auto gens = j.at("perm_generators").get<std::vector<std::vector<int>>>();
        const std::size_t cap = j.value("order_cap", std::size_t{10000});
        return FiniteGroup::from_permutations(degree, gens, cap, std::move(name));
    }
    throw InvalidInput("group file needs either \"cayley\" or \"perm_generators\"");
}

inline FiniteGroup load_group(const std::filesystem::path& path) {
    return group_from_json(load_json(path));
}

/// Fusion spec: {"ambient": <path or inline group object>, "p": 2,
///               "sylow": [member indices]            (optional),
///               "labels": [[index, "label"], ...]    (optional)}.
/// "sylow" selects a particular Sylow copy; "labels" pins the internal
/// element ordering and display labels of S. Relative ambient paths are
/// resolved against the spec file's directory.
struct FusionSpec {
    FiniteGroup ambient;
    int p = 2;
    std::optional<std::vector<int>> sylow_members;
    std::optional<std::vector<std::pair<int, std::string>>> labels;
    std::optional<std::string> sylow_name;
};

inline std::vector<std::pair<int, std::string>> labels_from_json(const nlohmann::json& j) {
    std::vector<std::pair<int, std::string>> out;
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2)
            throw InvalidInput("labels entries must be [index, \"label\"] pairs");
        out.emplace_back(entry[0].get<int>(), entry[1].get<std::string>());
    }
    return out;
}

inline FusionSpec fusion_spec_from_json(const nlohmann::json& j,
                                        const std::filesystem::path& base_dir = ".") {
    FusionSpec spec;
    if (!j.contains("ambient")) throw InvalidInput("fusion spec needs an \"ambient\" group");
    if (j.at("ambient").is_string()) {
        std::filesystem::path p = j.at("ambient").get<std::string>();
        if (p.is_relative()) p = base_dir / p;
        spec.ambient = load_group(p);
    } else {
        spec.ambient = group_from_json(j.at("ambient"));
    }
    spec.p = j.value("p", 2);
    if (j.contains("sylow")) spec.sylow_members = j.at("sylow").get<std::vector<int>>();
    if (j.contains("labels")) spec.labels = labels_from_json(j.at("labels"));
    if (j.contains("sylow_name")) spec.sylow_name = j.at("sylow_name").get<std::string>();
    return spec;
}

inline FusionSpec load_fusion_spec(const std::filesystem::path& path) {
    return fusion_spec_from_json(load_json(path), path.parent_path());
}

inline FusionSystem build_fusion(const FusionSpec& spec) {
    std::optional<Subgroup> sylow;
    if (spec.sylow_members)
        sylow = Subgroup::from_members(spec.ambient, *spec.sylow_members);
    return fusion_from_ambient(spec.ambient, spec.p, sylow, spec.labels, spec.sylow_name);
}

}  // namespace burnside

#endif
