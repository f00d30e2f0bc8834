#ifndef BURNSIDE_GROUP_HPP
#define BURNSIDE_GROUP_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "burnside/common.hpp"

namespace burnside {

/// A finite group given by its complete multiplication table on element
/// indices 0..n-1. Immutable after construction; all queries are pure.
class FiniteGroup {
public:
    /// An empty placeholder; only assignment is meaningful on it.
    FiniteGroup() = default;

    /// Builds a group from a Cayley table, validating the group axioms.
    /// Associativity is checked exhaustively for n <= 64 and on 10^4
    /// sampled triples above that.
    static FiniteGroup from_cayley(const std::vector<std::vector<int>>& table,
                                   std::vector<std::string> labels = {},
                                   std::string name = "") {
        const int n = static_cast<int>(table.size());
        if (n == 0) throw NotAGroup("empty Cayley table");
        for (const auto& row : table) {
            if (static_cast<int>(row.size()) != n)
                throw NotAGroup("Cayley table is not square");
            for (int v : row)
                if (v < 0 || v >= n) throw NotAGroup("table entry out of range");
        }
        FiniteGroup g;
        g.n_ = n;
        g.name_ = std::move(name);
        g.mul_.resize(static_cast<std::size_t>(n) * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) g.mul_[static_cast<std::size_t>(a) * n + b] = table[a][b];
        g.validate();
        if (!labels.empty()) {
            if (static_cast<int>(labels.size()) != n)
                throw NotAGroup("label count does not match group order");
            g.labels_ = std::move(labels);
        }
        return g;
    }

    /// Enumerates the closure of a set of permutations of 0..degree-1 under
    /// composition, breadth first from the identity, and realizes the
    /// multiplication table on the enumerated elements. Element 0 is the
    /// identity. The product a*b acts as "b first, then a" on points.
    static FiniteGroup from_permutations(int degree,
                                         const std::vector<std::vector<int>>& generators,
                                         std::size_t order_cap = 10000,
                                         std::string name = "") {
        if (degree <= 0) throw NotAGroup("degree must be positive");
        for (const auto& p : generators) {
            if (static_cast<int>(p.size()) != degree)
                throw NotAGroup("generator degree mismatch");
            std::vector<char> seen(degree, 0);
            for (int v : p) {
                if (v < 0 || v >= degree || seen[v])
                    throw NotAGroup("generator is not a bijection");
                seen[v] = 1;
            }
        }
        std::vector<int> ident(degree);
        for (int i = 0; i < degree; ++i) ident[i] = i;

        std::vector<std::vector<int>> elems;
        std::map<std::vector<int>, int> index;
        elems.push_back(ident);
        index[ident] = 0;
        for (std::size_t head = 0; head < elems.size(); ++head) {
            for (const auto& g : generators) {
                std::vector<int> prod(degree);
                for (int i = 0; i < degree; ++i) prod[i] = elems[head][g[i]];
                if (index.emplace(prod, static_cast<int>(elems.size())).second) {
                    elems.push_back(std::move(prod));
                    if (elems.size() > order_cap)
                        throw OrderCapExceeded("permutation closure exceeds cap of " +
                                               std::to_string(order_cap));
                }
            }
        }
        const int n = static_cast<int>(elems.size());
        FiniteGroup g;
        g.n_ = n;
        g.name_ = std::move(name);
        g.mul_.resize(static_cast<std::size_t>(n) * n);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                std::vector<int> prod(degree);
                for (int i = 0; i < degree; ++i) prod[i] = elems[a][elems[b][i]];
                g.mul_[static_cast<std::size_t>(a) * n + b] = index.at(prod);
            }
        }
        g.validate();
        g.permutations_ = std::move(elems);
        return g;
    }

    int order() const { return n_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    /// g x g^-1
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }

    int element_order(int x) const {
        int k = 1, y = x;
        while (y != identity_) {
            y = mul(y, x);
            ++k;
        }
        return k;
    }

    const std::string& name() const { return name_; }

    std::string label(int i) const {
        if (!labels_.empty()) return labels_[i];
        return "g" + std::to_string(i);
    }
    bool has_labels() const { return !labels_.empty(); }

    /// Set element display labels (one per element, in index order).
    void set_labels(std::vector<std::string> labels) {
        if (static_cast<int>(labels.size()) != n_)
            throw InvalidInput("label count does not match group order");
        labels_ = std::move(labels);
    }
    void set_name(std::string name) { name_ = std::move(name); }

    /// Underlying permutations when built from generators, empty otherwise.
    const std::vector<std::vector<int>>& permutations() const { return permutations_; }

private:
    void validate() {
        const int n = n_;
        // Latin square check
        for (int a = 0; a < n; ++a) {
            std::vector<char> row(n, 0), col(n, 0);
            for (int b = 0; b < n; ++b) {
                if (row[mul(a, b)]++)
                    throw NotAGroup("row " + std::to_string(a) + " is not a permutation");
                if (col[mul(b, a)]++)
                    throw NotAGroup("column " + std::to_string(a) + " is not a permutation");
            }
        }
        identity_ = -1;
        for (int e = 0; e < n; ++e) {
            bool ok = true;
            for (int x = 0; x < n && ok; ++x)
                ok = mul(e, x) == x && mul(x, e) == x;
            if (ok) {
                identity_ = e;
                break;
            }
        }
        if (identity_ < 0) throw NotAGroup("no identity element");
        inv_.assign(n, -1);
        for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y) {
                if (mul(x, y) == identity_ && mul(y, x) == identity_) {
                    inv_[x] = y;
                    break;
                }
            }
            if (inv_[x] < 0) throw NotAGroup("element " + std::to_string(x) + " has no inverse");
        }
        auto check_triple = [&](int a, int b, int c) {
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                throw NotAGroup("associativity fails on (" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) + ")");
        };
        if (n <= 64) {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c) check_triple(a, b, c);
        } else {
            std::mt19937 rng(12345);
            std::uniform_int_distribution<int> dist(0, n - 1);
            for (int t = 0; t < 10000; ++t) check_triple(dist(rng), dist(rng), dist(rng));
        }
    }

    int n_ = 0;
    int identity_ = 0;
    std::vector<int> mul_;
    std::vector<int> inv_;
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> permutations_;
    std::string name_;
};

/// A subgroup stored as the sorted list of its member indices.
class Subgroup {
public:
    Subgroup() = default;

    /// Wraps a member set, verifying closure, identity and Lagrange.
    static Subgroup from_members(const FiniteGroup& g, std::vector<int> members) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        Subgroup h;
        h.members_ = std::move(members);
        if (!h.contains(g.identity())) throw NotAGroup("subgroup misses the identity");
        for (int x : h.members_) {
            if (!h.contains(g.inv(x))) throw NotAGroup("subgroup not closed under inverse");
            for (int y : h.members_)
                if (!h.contains(g.mul(x, y))) throw NotAGroup("subgroup not closed under product");
        }
        if (g.order() % h.order() != 0) throw NotAGroup("Lagrange violation");
        return h;
    }

    /// The subgroup generated by a set of elements (closure inside g).
    static Subgroup generated(const FiniteGroup& g, const std::vector<int>& gens) {
        std::vector<char> in(g.order(), 0);
        std::vector<int> work;
        auto push = [&](int x) {
            if (!in[x]) {
                in[x] = 1;
                work.push_back(x);
            }
        };
        push(g.identity());
        for (int x : gens) push(x);
        for (std::size_t head = 0; head < work.size(); ++head) {
            const int a = work[head];
            push(g.inv(a));
            for (std::size_t j = 0; j < work.size(); ++j) {
                push(g.mul(a, work[j]));
                push(g.mul(work[j], a));
            }
        }
        Subgroup h;
        for (int x = 0; x < g.order(); ++x)
            if (in[x]) h.members_.push_back(x);
        return h;
    }

    static Subgroup trivial(const FiniteGroup& g) {
        Subgroup h;
        h.members_ = {g.identity()};
        return h;
    }

    static Subgroup whole(const FiniteGroup& g) {
        Subgroup h;
        h.members_.resize(g.order());
        for (int i = 0; i < g.order(); ++i) h.members_[i] = i;
        return h;
    }

    int order() const { return static_cast<int>(members_.size()); }
    const std::vector<int>& members() const { return members_; }
    bool contains(int x) const {
        return std::binary_search(members_.begin(), members_.end(), x);
    }
    bool contains(const Subgroup& other) const {
        return std::includes(members_.begin(), members_.end(), other.members_.begin(),
                             other.members_.end());
    }

    Subgroup conjugate(const FiniteGroup& g, int by) const {
        Subgroup h;
        h.members_.reserve(members_.size());
        for (int x : members_) h.members_.push_back(g.conj(by, x));
        std::sort(h.members_.begin(), h.members_.end());
        return h;
    }

    bool operator==(const Subgroup& o) const { return members_ == o.members_; }
    bool operator!=(const Subgroup& o) const { return members_ != o.members_; }

private:
    std::vector<int> members_;
};

/// Canonical ordering: by order, then lexicographic on sorted members.
inline bool canonical_less(const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
}

/// N_G(P) = {g : gPg^-1 = P}.
inline Subgroup normalizer(const FiniteGroup& g, const Subgroup& p) {
    std::vector<int> members;
    for (int x = 0; x < g.order(); ++x) {
        bool fixes = true;
        for (int m : p.members()) {
            if (!p.contains(g.conj(x, m))) {
                fixes = false;
                break;
            }
        }
        if (fixes) members.push_back(x);
    }
    return Subgroup::from_members(g, std::move(members));
}

/// Transporter N_G(P,Q) = {g : gPg^-1 <= Q}. Empty iff P is not
/// G-subconjugate to Q.
inline std::vector<int> transporter(const FiniteGroup& g, const Subgroup& p, const Subgroup& q) {
    std::vector<int> result;
    if (p.order() > q.order()) return result;
    for (int x = 0; x < g.order(); ++x) {
        bool inside = true;
        for (int m : p.members()) {
            if (!q.contains(g.conj(x, m))) {
                inside = false;
                break;
            }
        }
        if (inside) result.push_back(x);
    }
    return result;
}

/// One representative per double coset PgQ, in ascending element order.
/// The classes partition G.
inline std::vector<int> double_cosets(const FiniteGroup& g, const Subgroup& p, const Subgroup& q) {
    std::vector<char> seen(g.order(), 0);
    std::vector<int> reps;
    for (int x = 0; x < g.order(); ++x) {
        if (seen[x]) continue;
        reps.push_back(x);
        for (int a : p.members())
            for (int b : q.members()) seen[g.mul(g.mul(a, x), b)] = 1;
    }
    return reps;
}

inline Subgroup intersect(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
    std::vector<int> members;
    std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                          b.members().end(), std::back_inserter(members));
    return Subgroup::from_members(g, std::move(members));
}

/// A Sylow p-subgroup, deterministically the smallest one in the canonical
/// subgroup ordering. Returns the trivial subgroup when p does not divide
/// |G|. Found by normalizer ascent, then minimized over all conjugates.
inline Subgroup sylow_subgroup(const FiniteGroup& g, int p) {
    int target = 1;
    int n = g.order();
    while (n % p == 0) {
        n /= p;
        target *= p;
    }
    Subgroup s = Subgroup::trivial(g);
    while (s.order() < target) {
        // N_G(S)/S contains an element of order p while S is not Sylow.
        Subgroup norm = normalizer(g, s);
        bool grown = false;
        for (int x : norm.members()) {
            if (s.contains(x)) continue;
            int xp = x;
            for (int i = 1; i < p; ++i) xp = g.mul(xp, x);
            if (!s.contains(xp)) continue;
            std::vector<int> gens = s.members();
            gens.push_back(x);
            s = Subgroup::generated(g, gens);
            grown = true;
            break;
        }
        if (!grown) throw NotAGroup("sylow ascent stalled");  // cannot happen
    }
    Subgroup best = s;
    for (int x = 0; x < g.order(); ++x) {
        Subgroup c = s.conjugate(g, x);
        if (canonical_less(c, best)) best = c;
    }
    return best;
}

}  // namespace burnside

#endif
