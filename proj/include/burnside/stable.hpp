#ifndef BURNSIDE_STABLE_HPP
#define BURNSIDE_STABLE_HPP

#include <cassert>
#include <vector>

#include "burnside/burnside_ring.hpp"
#include "burnside/common.hpp"
#include "burnside/fusion.hpp"
#include "burnside/group.hpp"
#include "burnside/lattice.hpp"

namespace burnside {

/// An element of Z localized at p: a reduced fraction whose denominator is
/// coprime to p.
struct PLocalScalar {
    Int num;
    Int den;  // positive, gcd(num,den)=1, gcd(den,p)=1

    static PLocalScalar from_rational(const Rat& v, int p) {
        PLocalScalar s{numerator(v), denominator(v)};
        if (s.den % p == 0)
            throw DenominatorDivisibleByP("denominator " + s.den.str() +
                                          " is divisible by p=" + std::to_string(p));
        return s;
    }
    Rat value() const { return Rat(num, den); }
};

/// True iff the ghost vector of x is constant on every fusion class.
template <typename Scalar>
bool is_f_stable(const FusionSystem& f, const TableOfMarks& tom, const Element<Scalar>& x) {
    std::vector<Scalar> v = ghost(tom, x);
    for (const auto& fc : f.f_classes)
        for (std::size_t i = 1; i < fc.size(); ++i)
            if (v[fc[i]] != v[fc[0]]) return false;
    return true;
}

/// Stability checked directly from the definition: restriction along a
/// conjugation morphism recovered from an ambient transporter witness must
/// agree with restriction along the inclusion, for one witness per
/// (source class, target class) pair. Independent of the mark route.
inline bool is_f_stable_by_restriction(const FusionSystem& f, const ZElement& x) {
    if (f.to_ambient.empty()) throw NoAmbientData("fusion system lacks ambient data");
    std::vector<int> back_s(f.ambient.order(), -1);
    for (int i = 0; i < f.S.order(); ++i) back_s[f.to_ambient[i]] = i;

    for (int i = 0; i < f.cls.size(); ++i) {
        const Subgroup& p = f.cls.rep(i);
        SubgroupAsGroup pg = subgroup_as_group(f.S, p);
        SubgroupClassTable pcls = enumerate_subgroups(pg.group);

        std::vector<int> incl(pg.group.order());
        for (int t = 0; t < pg.group.order(); ++t) incl[t] = pg.to_parent[t];
        ZElement base = restrict_along(f.S, f.cls, pg.group, pcls, incl, x);

        Subgroup p_amb = f.ambient_subgroup(p);
        for (int j = 0; j < f.cls.size(); ++j) {
            std::vector<int> trans =
                transporter(f.ambient, p_amb, f.ambient_subgroup(f.cls.rep(j)));
            if (trans.empty()) continue;
            const int g = trans[0];
            std::vector<int> phi(pg.group.order());
            for (int t = 0; t < pg.group.order(); ++t) {
                const int amb = f.to_ambient[pg.to_parent[t]];
                phi[t] = back_s[f.ambient.conj(g, amb)];
                assert(phi[t] >= 0);
            }
            if (!(restrict_along(f.S, f.cls, pg.group, pcls, phi, x) == base)) return false;
        }
    }
    return true;
}

/// Reeh's basis of A(F): one irreducible effective F-stable element per
/// F-class, in the transitive basis of A(S), together with the matrix of
/// their ghost vectors (rows = F-classes, columns = Cl(S)).
struct AlphaBasis {
    std::vector<ZElement> alphas;          // indexed by F-class
    std::vector<std::vector<Int>> marks;   // ghost vector of each alpha
    TableOfMarks tom;                      // table of marks of S

    /// Phi_P(alpha_c) at the fully normalized representative of F-class pc.
    Int mark_at(const FusionSystem& f, int alpha_c, int pc) const {
        return marks[alpha_c][f.fully_normalized[pc]];
    }
};

namespace detail {

inline void assert_alpha_properties(const FusionSystem& f, const AlphaBasis& b) {
    const int fk = f.class_count();
    for (int c = 0; c < fk; ++c) {
        const ZElement& a = b.alphas[c];
        const std::vector<Int>& v = b.marks[c];
        const int p0 = f.fully_normalized[c];
        // F-stability of the ghost vector
        for (const auto& fc : f.f_classes)
            for (std::size_t i = 1; i < fc.size(); ++i)
                if (v[fc[i]] != v[fc[0]]) throw NoSolution("alpha is not F-stable");
        // (i) support only on classes F-subconjugate to c
        for (const auto& [sc, coeff] : a.coeffs) {
            if (coeff < 0) throw NoSolution("alpha has a negative coefficient");
            if (!f.f_subconj[f.fusion_partition[sc]][c])
                throw NoSolution("alpha supported outside the subconjugate cone");
        }
        // (ii) the fully normalized component has coefficient 1 here, 0 elsewhere
        if (a.coeff(p0) != 1) throw NoSolution("fully normalized coefficient is not 1");
        for (int d = 0; d < fk; ++d)
            if (d != c && b.alphas[d].coeff(p0) != 0)
                throw NoSolution("fully normalized component reused across alphas");
        // (iii) diagonal mark value
        const Subgroup& rep = f.cls.rep(p0);
        if (v[p0] != Int(normalizer(f.S, rep).order() / rep.order()))
            throw NoSolution("diagonal mark of alpha is wrong");
        // (iv) support of the ghost vector
        for (int sc = 0; sc < f.cls.size(); ++sc) {
            const bool below = f.f_subconj[f.fusion_partition[sc]][c];
            if ((v[sc] != 0) != below) throw NoSolution("ghost support of alpha is wrong");
        }
    }
}

}  // namespace detail

/// Constructs the alpha basis by leveling rows of the table of marks: for
/// each F-class, start from the fully normalized row and repeatedly raise
/// every deficient coordinate of an unbalanced fusion class to the class
/// maximum by adding the exact multiple of the row with that diagonal.
/// Triangularity makes this terminate; the result is checked against all
/// basis properties before being returned.
inline AlphaBasis compute_alpha_basis(const FusionSystem& f) {
    AlphaBasis b;
    b.tom = table_of_marks(f.S, f.cls);
    const int k = f.cls.size();
    const int fk = f.class_count();
    b.alphas.resize(fk);
    b.marks.resize(fk);

    for (int c = fk - 1; c >= 0; --c) {
        std::vector<Int> lambda(k, 0);
        lambda[f.fully_normalized[c]] = 1;
        std::vector<Int> v(k, 0);
        auto recompute = [&]() {
            std::fill(v.begin(), v.end(), Int(0));
            for (int q = 0; q < k; ++q)
                if (lambda[q] != 0)
                    for (int p = 0; p < k; ++p) v[p] += lambda[q] * b.tom.at(q, p);
        };
        recompute();
        bool changed = true;
        while (changed) {
            changed = false;
            for (int fc = fk - 1; fc >= 0; --fc) {
                Int mx = 0;
                for (int sc : f.f_classes[fc])
                    if (v[sc] > mx) mx = v[sc];
                for (int sc : f.f_classes[fc]) {
                    const Int deficit = mx - v[sc];
                    if (deficit == 0) continue;
                    const Int diag = b.tom.at(sc, sc);
                    assert(deficit % diag == 0);
                    lambda[sc] += deficit / diag;
                    changed = true;
                }
                if (changed) {
                    recompute();
                }
            }
        }
        ZElement a;
        a.basis = Basis::Transitive;
        for (int q = 0; q < k; ++q) a.add(q, lambda[q]);
        b.alphas[c] = std::move(a);
        b.marks[c] = std::move(v);
    }
    detail::assert_alpha_properties(f, b);
    return b;
}

/// Coordinates of an F-stable element in the alpha basis, by back
/// substitution over the triangular alpha-mark matrix evaluated at fully
/// normalized representatives.
template <typename Scalar>
Element<Scalar> to_alpha(const FusionSystem& f, const AlphaBasis& b, const Element<Scalar>& x) {
    if (x.basis != Basis::Transitive) throw BasisMismatch("to_alpha expects the transitive basis");
    if (!is_f_stable(f, b.tom, x)) throw NotFStable("element is not F-stable");
    std::vector<Scalar> v = ghost(b.tom, x);
    const int fk = f.class_count();
    Element<Scalar> out;
    out.basis = Basis::Alpha;
    std::vector<Rat> mu(fk, 0);
    for (int c = fk - 1; c >= 0; --c) {
        const int p0 = f.fully_normalized[c];
        Rat rest = Rat(v[p0]);
        for (int d = c + 1; d < fk; ++d) rest -= mu[d] * Rat(b.marks[d][p0]);
        mu[c] = rest / Rat(b.marks[c][p0]);
    }
    for (int c = 0; c < fk; ++c) {
        if constexpr (std::is_same_v<Scalar, Int>) {
            if (denominator(mu[c]) != 1)
                throw NotIntegral("alpha coordinate " + std::to_string(c) + " is not integral");
            out.add(c, numerator(mu[c]));
        } else {
            out.add(c, Scalar(mu[c]));
        }
    }
    return out;
}

/// Expansion of alpha coordinates back into the transitive basis of A(S).
template <typename Scalar>
Element<Scalar> from_alpha(const AlphaBasis& b, const Element<Scalar>& x) {
    if (x.basis != Basis::Alpha) throw BasisMismatch("from_alpha expects the alpha basis");
    Element<Scalar> out;
    out.basis = Basis::Transitive;
    for (const auto& [c, mu] : x.coeffs)
        for (const auto& [sc, coeff] : b.alphas[c].coeffs) out.add(sc, mu * Scalar(coeff));
    return out;
}

/// Embeds an integer element into the p-local ring (denominators stay 1;
/// later arithmetic may introduce denominators coprime to p).
inline QElement localize(const ZElement& x, int p) {
    (void)p;
    return to_rational(x);
}

/// Validates that every coefficient of a rational element lies in Z_(p).
inline void check_p_local(const QElement& x, int p) {
    for (const auto& [cls, c] : x.coeffs) PLocalScalar::from_rational(c, p);
}

}  // namespace burnside

#endif
