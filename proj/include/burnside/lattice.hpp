#ifndef BURNSIDE_LATTICE_HPP
#define BURNSIDE_LATTICE_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "burnside/common.hpp"
#include "burnside/group.hpp"

namespace burnside {

/// Conjugacy classes of subgroups of G with the subconjugation partial
/// order on classes. Classes are stored in the canonical ascending order:
/// by subgroup order, ties broken lexicographically by the sorted member
/// list of the representative (= smallest member of the class).
struct SubgroupClassTable {
    std::vector<std::vector<Subgroup>> classes;
    std::vector<std::vector<char>> subconj;  // subconj[i][j]: class i <~ class j

    int size() const { return static_cast<int>(classes.size()); }
    const Subgroup& rep(int c) const { return classes[c][0]; }

    /// Class index of a subgroup; throws if it is not listed.
    int class_of(const Subgroup& h) const {
        for (int c = 0; c < size(); ++c)
            for (const Subgroup& s : classes[c])
                if (s == h) return c;
        throw InvalidInput("subgroup not found in class table");
    }
};

/// All subgroups of G: cyclic seeds, then closure under pairwise joins,
/// iterated to a fixpoint.
inline std::vector<Subgroup> all_subgroups(const FiniteGroup& g,
                                           std::size_t subgroup_cap = 100000) {
    std::set<std::vector<int>> seen;
    std::vector<Subgroup> subs;
    auto add = [&](const Subgroup& s) {
        if (seen.insert(s.members()).second) {
            subs.push_back(s);
            if (subs.size() > subgroup_cap)
                throw OrderCapExceeded("subgroup count exceeds cap");
            return true;
        }
        return false;
    };
    add(Subgroup::trivial(g));
    for (int x = 0; x < g.order(); ++x) add(Subgroup::generated(g, {x}));
    bool changed = true;
    while (changed) {
        changed = false;
        const std::size_t count = subs.size();
        for (std::size_t i = 0; i < count; ++i) {
            for (std::size_t j = i + 1; j < count; ++j) {
                std::vector<int> gens = subs[i].members();
                gens.insert(gens.end(), subs[j].members().begin(), subs[j].members().end());
                if (add(Subgroup::generated(g, gens))) changed = true;
            }
        }
    }
    return subs;
}

/// Full class table for G. Intended for the small p-group side; ambient
/// groups are never lattice-enumerated.
inline SubgroupClassTable enumerate_subgroups(const FiniteGroup& g,
                                              std::size_t subgroup_cap = 100000) {
    std::vector<Subgroup> subs = all_subgroups(g, subgroup_cap);
    std::sort(subs.begin(), subs.end(), canonical_less);

    SubgroupClassTable table;
    std::vector<char> used(subs.size(), 0);
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (used[i]) continue;
        std::set<std::vector<int>> orbit_members;
        std::vector<Subgroup> orbit;
        for (int x = 0; x < g.order(); ++x) {
            Subgroup c = subs[i].conjugate(g, x);
            if (orbit_members.insert(c.members()).second) orbit.push_back(c);
        }
        std::sort(orbit.begin(), orbit.end(), canonical_less);
        for (std::size_t j = i; j < subs.size(); ++j)
            if (!used[j] && orbit_members.count(subs[j].members())) used[j] = 1;
        table.classes.push_back(std::move(orbit));
    }

    const int k = table.size();
    table.subconj.assign(k, std::vector<char>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            table.subconj[i][j] = !transporter(g, table.rep(i), table.rep(j)).empty();
    return table;
}

/// A subgroup realized as a FiniteGroup in its own right, with the map
/// from its element indices back to the parent's.
struct SubgroupAsGroup {
    FiniteGroup group;
    std::vector<int> to_parent;
};

inline SubgroupAsGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
    const int m = h.order();
    std::vector<int> back(g.order(), -1);
    for (int i = 0; i < m; ++i) back[h.members()[i]] = i;
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            table[a][b] = back[g.mul(h.members()[a], h.members()[b])];
    std::vector<std::string> labels;
    if (g.has_labels())
        for (int i = 0; i < m; ++i) labels.push_back(g.label(h.members()[i]));
    return {FiniteGroup::from_cayley(table, labels), h.members()};
}

/// Display label for a subgroup: "1" for the trivial subgroup, the group
/// name (or "G") for the whole group, otherwise a minimal generator string
/// such as "<r^2,s>" built from element labels.
inline std::string subgroup_label(const FiniteGroup& g, const Subgroup& h) {
    if (h.order() == 1) return "1";
    if (h.order() == g.order()) return g.name().empty() ? "G" : g.name();
    const std::vector<int>& m = h.members();
    for (int x : m)
        if (Subgroup::generated(g, {x}) == h) return "<" + g.label(x) + ">";
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (Subgroup::generated(g, {m[i], m[j]}) == h)
                return "<" + g.label(m[i]) + "," + g.label(m[j]) + ">";
    // Three generators suffice for anything we ever print; fall back to the
    // member list if not.
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            for (std::size_t l = j + 1; l < m.size(); ++l)
                if (Subgroup::generated(g, {m[i], m[j], m[l]}) == h)
                    return "<" + g.label(m[i]) + "," + g.label(m[j]) + "," + g.label(m[l]) + ">";
    std::string out = "{";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += ",";
        out += g.label(m[i]);
    }
    return out + "}";
}

}  // namespace burnside

#endif
