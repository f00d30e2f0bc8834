#ifndef BURNSIDE_FUSION_HPP
#define BURNSIDE_FUSION_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "burnside/common.hpp"
#include "burnside/group.hpp"
#include "burnside/lattice.hpp"

namespace burnside {

/// The fusion system F_S(G) induced on a Sylow p-subgroup S by conjugation
/// in an ambient group G, represented extensionally: the Cl(S) -> Cl(F)
/// partition, the F-subconjugation order and a fully normalized
/// representative class per F-class. Saturation comes structurally from
/// the Sylow embedding and is never axiom-checked.
struct FusionSystem {
    int p = 2;
    FiniteGroup ambient;
    std::string ambient_name;
    FiniteGroup S;                 // reindexed copy of the Sylow subgroup
    std::vector<int> to_ambient;   // S element index -> ambient element index
    SubgroupClassTable cls;        // Cl(S)

    std::vector<int> fusion_partition;        // S-class index -> F-class index
    std::vector<std::vector<int>> f_classes;  // F-class -> sorted member S-classes
    std::vector<std::vector<char>> f_subconj; // partial order on F-classes
    std::vector<int> fully_normalized;        // F-class -> designated S-class

    int class_count() const { return static_cast<int>(f_classes.size()); }

    /// Image of a subgroup of S (in S element indices) inside the ambient group.
    Subgroup ambient_subgroup(const Subgroup& h) const {
        std::vector<int> members;
        members.reserve(h.members().size());
        for (int m : h.members()) members.push_back(to_ambient[m]);
        return Subgroup::from_members(ambient, std::move(members));
    }

    int f_class_of(const Subgroup& h) const {
        int sc;
        try {
            sc = cls.class_of(h);
        } catch (const InvalidInput&) {
            throw NotASubgroupOfS("subgroup is not a subgroup of S");
        }
        return fusion_partition[sc];
    }

    bool f_iso(const Subgroup& a, const Subgroup& b) const {
        return f_class_of(a) == f_class_of(b);
    }

    bool is_inner() const {
        return class_count() == cls.size();
    }

    /// Label for an F-class: the generator string of the fully normalized
    /// representative subgroup.
    std::string f_class_label(int fc) const {
        return subgroup_label(S, cls.rep(fully_normalized[fc]));
    }
};

/// Builds F_S(G). When S is omitted it defaults to the canonical Sylow
/// p-subgroup; when given it must be Sylow (saturation is not guaranteed
/// otherwise, so anything else is refused). element_order optionally pins
/// the internal element indexing and labels of S: an ordered list of
/// (ambient element index, display label) covering S exactly.
inline FusionSystem fusion_from_ambient(
    const FiniteGroup& g, int p, std::optional<Subgroup> sylow = std::nullopt,
    std::optional<std::vector<std::pair<int, std::string>>> element_order = std::nullopt,
    std::optional<std::string> s_name = std::nullopt) {
    if (p < 2) throw InvalidInput("p must be a prime");
    int p_part = 1, n = g.order();
    while (n % p == 0) {
        n /= p;
        p_part *= p;
    }
    Subgroup s_amb = sylow ? *sylow : sylow_subgroup(g, p);
    if (s_amb.order() != p_part)
        throw NotSylow("provided subgroup has order " + std::to_string(s_amb.order()) +
                       ", the p-part of |G| is " + std::to_string(p_part));

    FusionSystem f;
    f.p = p;
    f.ambient = g;
    f.ambient_name = g.name();

    if (element_order) {
        std::vector<int> idx;
        for (const auto& [amb, label] : *element_order) idx.push_back(amb);
        std::vector<int> sorted = idx;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != s_amb.members())
            throw InvalidInput("element ordering does not cover the Sylow subgroup exactly");
        f.to_ambient = idx;
    } else {
        f.to_ambient = s_amb.members();
    }
    const int m = s_amb.order();
    std::vector<int> back(g.order(), -1);
    for (int i = 0; i < m; ++i) back[f.to_ambient[i]] = i;
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            table[a][b] = back[g.mul(f.to_ambient[a], f.to_ambient[b])];
    std::vector<std::string> labels;
    if (element_order) {
        for (const auto& [amb, label] : *element_order) labels.push_back(label);
    } else if (g.has_labels()) {
        for (int i = 0; i < m; ++i) labels.push_back(g.label(f.to_ambient[i]));
    }
    std::string name;
    if (s_name)
        name = *s_name;
    else if (g.order() == s_amb.order())
        name = g.name().empty() ? "S" : g.name();
    else
        name = g.name().empty() ? "S" : "Syl_" + std::to_string(p) + "(" + g.name() + ")";
    f.S = FiniteGroup::from_cayley(table, labels, std::move(name));
    f.cls = enumerate_subgroups(f.S);

    // P <~_F Q iff some ambient element conjugates P into Q.
    const int k = f.cls.size();
    std::vector<std::vector<char>> pre(k, std::vector<char>(k, 0));
    for (int i = 0; i < k; ++i) {
        Subgroup pi = f.ambient_subgroup(f.cls.rep(i));
        for (int j = 0; j < k; ++j) {
            Subgroup qj = f.ambient_subgroup(f.cls.rep(j));
            pre[i][j] = !transporter(g, pi, qj).empty();
        }
    }

    // Mutual subconjugation partitions Cl(S) into Cl(F); F-classes are
    // ordered by their smallest member S-class, which keeps subgroup order
    // ascending.
    f.fusion_partition.assign(k, -1);
    for (int i = 0; i < k; ++i) {
        if (f.fusion_partition[i] >= 0) continue;
        const int fc = static_cast<int>(f.f_classes.size());
        std::vector<int> members;
        for (int j = i; j < k; ++j) {
            if (f.fusion_partition[j] < 0 && pre[i][j] && pre[j][i]) {
                f.fusion_partition[j] = fc;
                members.push_back(j);
            }
        }
        f.f_classes.push_back(std::move(members));
    }

    const int fk = f.class_count();
    f.f_subconj.assign(fk, std::vector<char>(fk, 0));
    for (int a = 0; a < fk; ++a)
        for (int b = 0; b < fk; ++b)
            f.f_subconj[a][b] = pre[f.f_classes[a][0]][f.f_classes[b][0]];

    f.fully_normalized.resize(fk);
    for (int a = 0; a < fk; ++a) {
        int best = f.f_classes[a][0];
        int best_norm = normalizer(f.S, f.cls.rep(best)).order();
        for (int sc : f.f_classes[a]) {
            const int nn = normalizer(f.S, f.cls.rep(sc)).order();
            if (nn > best_norm) {
                best = sc;
                best_norm = nn;
            }
        }
        f.fully_normalized[a] = best;
    }
    return f;
}

/// The inner fusion system F_S(S).
inline FusionSystem inner_fusion(const FiniteGroup& s, int p) {
    return fusion_from_ambient(s, p);
}

}  // namespace burnside

#endif
