#ifndef BURNSIDE_BURNSIDE_RING_HPP
#define BURNSIDE_BURNSIDE_RING_HPP

#include <cassert>
#include <map>
#include <optional>
#include <vector>

#include "burnside/common.hpp"
#include "burnside/group.hpp"
#include "burnside/lattice.hpp"

namespace burnside {

enum class Basis { Transitive, Alpha };

/// Sparse coefficient vector over a chosen basis, indexed by class index.
/// Zero coefficients are never stored.
template <typename Scalar>
struct Element {
    Basis basis = Basis::Transitive;
    std::map<int, Scalar> coeffs;

    static Element basis_vector(Basis b, int cls, Scalar c = Scalar(1)) {
        Element e;
        e.basis = b;
        if (c != 0) e.coeffs[cls] = std::move(c);
        return e;
    }

    Scalar coeff(int cls) const {
        auto it = coeffs.find(cls);
        return it == coeffs.end() ? Scalar(0) : it->second;
    }

    void add(int cls, const Scalar& c) {
        if (c == 0) return;
        auto [it, fresh] = coeffs.emplace(cls, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) coeffs.erase(it);
        }
    }

    bool is_zero() const { return coeffs.empty(); }

    Element& operator+=(const Element& o) {
        if (basis != o.basis) throw BasisMismatch("adding elements over different bases");
        for (const auto& [cls, c] : o.coeffs) add(cls, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        if (basis != o.basis) throw BasisMismatch("subtracting elements over different bases");
        for (const auto& [cls, c] : o.coeffs) add(cls, -c);
        return *this;
    }
    Element& operator*=(const Scalar& s) {
        if (s == 0) {
            coeffs.clear();
            return *this;
        }
        for (auto& [cls, c] : coeffs) c *= s;
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Scalar& s, Element a) { return a *= s; }
    bool operator==(const Element& o) const { return basis == o.basis && coeffs == o.coeffs; }
};

using ZElement = Element<Int>;
using QElement = Element<Rat>;

inline QElement to_rational(const ZElement& x) {
    QElement out;
    out.basis = x.basis;
    for (const auto& [cls, c] : x.coeffs) out.coeffs[cls] = Rat(c);
    return out;
}

/// True iff all coefficients are nonnegative (the element is the class of
/// an actual G-set, not just a virtual one).
inline bool is_effective(const ZElement& x) {
    for (const auto& [cls, c] : x.coeffs)
        if (c < 0) return false;
    return true;
}

/// Phi_P([G/Q]) = |N_G(P,Q)| / |Q| = number of P-fixed points on G/Q.
inline Int mark(const FiniteGroup& g, const Subgroup& p, const Subgroup& q) {
    const Int t = static_cast<long>(transporter(g, p, q).size());
    assert(t % q.order() == 0);
    return t / q.order();
}

/// Matrix of marks: m[Q][P] = Phi_P([G/Q]), rows indexed by the transitive
/// set [G/Q], columns by the evaluating subgroup [P], both in class order.
/// Lower triangular with diagonal |N_G(Q)|/|Q|.
struct TableOfMarks {
    std::vector<std::vector<Int>> m;

    int size() const { return static_cast<int>(m.size()); }
    const Int& at(int q_cls, int p_cls) const { return m[q_cls][p_cls]; }
};

inline TableOfMarks table_of_marks(const FiniteGroup& g, const SubgroupClassTable& cls) {
    const int k = cls.size();
    TableOfMarks tom;
    tom.m.assign(k, std::vector<Int>(k, 0));
    for (int q = 0; q < k; ++q)
        for (int p = 0; p < k; ++p) tom.m[q][p] = mark(g, cls.rep(p), cls.rep(q));
    return tom;
}

/// Ghost map: the vector of marks of x, indexed by Cl(G) in class order.
template <typename Scalar>
std::vector<Scalar> ghost(const TableOfMarks& tom, const Element<Scalar>& x) {
    if (x.basis != Basis::Transitive) throw BasisMismatch("ghost expects the transitive basis");
    std::vector<Scalar> v(tom.size(), Scalar(0));
    for (const auto& [q, c] : x.coeffs)
        for (int p = 0; p < tom.size(); ++p) v[p] += c * Scalar(tom.at(q, p));
    return v;
}

/// Product of two elements in the transitive basis via the double-coset
/// formula: [G/P] x [G/Q] = sum over PgQ of [G/(P cap gQg^-1)].
template <typename Scalar>
Element<Scalar> product(const FiniteGroup& g, const SubgroupClassTable& cls,
                        const Element<Scalar>& x, const Element<Scalar>& y) {
    if (x.basis != Basis::Transitive || y.basis != Basis::Transitive)
        throw BasisMismatch("product expects the transitive basis");
    Element<Scalar> out;
    out.basis = Basis::Transitive;
    for (const auto& [pc, a] : x.coeffs) {
        for (const auto& [qc, b] : y.coeffs) {
            const Subgroup& p = cls.rep(pc);
            const Subgroup& q = cls.rep(qc);
            for (int rep : double_cosets(g, p, q)) {
                Subgroup r = intersect(g, p, q.conjugate(g, rep));
                out.add(cls.class_of(r), a * b);
            }
        }
    }
    return out;
}

struct UnghostResult {
    std::optional<ZElement> element;      // set iff the preimage is integral
    std::vector<Rat> rational_solution;   // always set, for diagnostics
    bool in_image() const { return element.has_value(); }
};

/// Inverts the ghost map on its image by back substitution along the
/// triangular table of marks. A vector outside Phi(A(G)) yields the
/// rational solution only.
inline UnghostResult unghost(const TableOfMarks& tom, const std::vector<Int>& v) {
    const int k = tom.size();
    if (static_cast<int>(v.size()) != k) throw InvalidInput("mark vector length mismatch");
    std::vector<Rat> c(k, 0);
    for (int p = k - 1; p >= 0; --p) {
        Rat rest = Rat(v[p]);
        for (int q = p + 1; q < k; ++q) rest -= c[q] * Rat(tom.at(q, p));
        c[p] = rest / Rat(tom.at(p, p));
    }
    UnghostResult res;
    res.rational_solution = c;
    ZElement e;
    e.basis = Basis::Transitive;
    for (int q = 0; q < k; ++q) {
        if (denominator(c[q]) != 1) return res;
        e.add(q, numerator(c[q]));
    }
    res.element = std::move(e);
    return res;
}

/// Verifies that phi (an element-index map T -> G) is multiplicative.
inline void check_homomorphism(const FiniteGroup& t, const FiniteGroup& g,
                               const std::vector<int>& phi) {
    if (static_cast<int>(phi.size()) != t.order())
        throw NotAHomomorphism("map length does not match |T|");
    for (int v : phi)
        if (v < 0 || v >= g.order()) throw NotAHomomorphism("image index out of range");
    for (int a = 0; a < t.order(); ++a)
        for (int b = 0; b < t.order(); ++b)
            if (phi[t.mul(a, b)] != g.mul(phi[a], phi[b]))
                throw NotAHomomorphism("phi(ab) != phi(a)phi(b) at (" + std::to_string(a) + "," +
                                       std::to_string(b) + ")");
}

/// Restriction along phi : T -> G. Each G-orbit G/Q is decomposed into
/// T-orbits under t.gQ = phi(t)gQ.
inline ZElement restrict_along(const FiniteGroup& g, const SubgroupClassTable& g_cls,
                               const FiniteGroup& t, const SubgroupClassTable& t_cls,
                               const std::vector<int>& phi, const ZElement& x) {
    if (x.basis != Basis::Transitive) throw BasisMismatch("restrict expects the transitive basis");
    check_homomorphism(t, g, phi);
    ZElement out;
    out.basis = Basis::Transitive;
    for (const auto& [qc, c] : x.coeffs) {
        const Subgroup& q = g_cls.rep(qc);
        // cosets of Q in G, tagged by a canonical representative
        std::map<int, int> coset_of;  // g index -> coset id
        std::vector<int> coset_rep;
        for (int e = 0; e < g.order(); ++e) {
            if (coset_of.count(e)) continue;
            const int id = static_cast<int>(coset_rep.size());
            coset_rep.push_back(e);
            for (int m : q.members()) coset_of[g.mul(e, m)] = id;
        }
        std::vector<char> done(coset_rep.size(), 0);
        for (std::size_t start = 0; start < coset_rep.size(); ++start) {
            if (done[start]) continue;
            // orbit of this coset under T, with stabilizer in T
            std::vector<int> stab;
            std::vector<std::size_t> orbit;
            orbit.push_back(start);
            done[start] = 1;
            for (std::size_t head = 0; head < orbit.size(); ++head) {
                const int rep = coset_rep[orbit[head]];
                for (int tt = 0; tt < t.order(); ++tt) {
                    const int moved = coset_of.at(g.mul(phi[tt], rep));
                    if (!done[moved]) {
                        done[moved] = 1;
                        orbit.push_back(moved);
                    }
                }
            }
            for (int tt = 0; tt < t.order(); ++tt)
                if (coset_of.at(g.mul(phi[tt], coset_rep[start])) == static_cast<int>(start))
                    stab.push_back(tt);
            assert(stab.size() * orbit.size() == static_cast<std::size_t>(t.order()));
            Subgroup st = Subgroup::from_members(t, std::move(stab));
            out.add(t_cls.class_of(st), c);
        }
    }
    return out;
}

}  // namespace burnside

#endif
