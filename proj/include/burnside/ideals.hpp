#ifndef BURNSIDE_IDEALS_HPP
#define BURNSIDE_IDEALS_HPP

#include <set>
#include <string>
#include <vector>

#include "burnside/common.hpp"
#include "burnside/fusion.hpp"
#include "burnside/stable.hpp"

namespace burnside {

enum class Ring { Integral, PLocal };

/// Canonical label of a prime ideal of A(F) (ring = Integral) or of
/// A(F)_(p) (ring = PLocal): the F-class [P]_F and the type q, which is
/// the characteristic of the quotient. Type p forces the class of S.
struct IdealDescriptor {
    Ring ring = Ring::Integral;
    int f_class = 0;
    int q = 0;  // 0 or a prime

    bool operator==(const IdealDescriptor& o) const {
        return ring == o.ring && f_class == o.f_class && q == o.q;
    }
    bool operator<(const IdealDescriptor& o) const {
        if (ring != o.ring) return ring < o.ring;
        if (q != o.q) return q < o.q;
        return f_class < o.f_class;
    }
};

inline int s_class_index(const FusionSystem& f) { return f.class_count() - 1; }

/// Canonical form: the unique type-p ideal is labeled by [S]_F.
inline IdealDescriptor canonical(const FusionSystem& f, IdealDescriptor i) {
    if (i.q == f.p) i.f_class = s_class_index(f);
    if (i.ring == Ring::PLocal && i.q != 0 && i.q != f.p)
        throw InvalidInput("the p-local ring has only type 0 and type p prime ideals");
    return i;
}

inline int residue_characteristic(const IdealDescriptor& i) { return i.q; }

/// Phi_P(x) for x in alpha coordinates, evaluated at the fully normalized
/// representative of the given F-class.
template <typename Scalar>
Scalar alpha_mark(const FusionSystem& f, const AlphaBasis& b, int f_class,
                  const Element<Scalar>& x) {
    if (x.basis != Basis::Alpha) throw BasisMismatch("expected alpha coordinates");
    Scalar v(0);
    for (const auto& [c, mu] : x.coeffs) v += mu * Scalar(b.marks[c][f.fully_normalized[f_class]]);
    return v;
}

/// Ideal membership: one exact congruence on Phi_P(x).
inline bool membership(const FusionSystem& f, const AlphaBasis& b, const IdealDescriptor& i,
                       const ZElement& x) {
    if (i.ring != Ring::Integral) throw RingMismatch("integer element tested against a p-local ideal");
    const Int v = alpha_mark(f, b, i.f_class, x);
    return i.q == 0 ? v == 0 : v % i.q == 0;
}

/// p-local membership: type 0 means the mark vanishes, type p means its
/// p-adic valuation is at least 1.
inline bool membership(const FusionSystem& f, const AlphaBasis& b, const IdealDescriptor& i,
                       const QElement& x) {
    if (i.ring != Ring::PLocal) throw RingMismatch("p-local element tested against an integral ideal");
    check_p_local(x, f.p);
    const Rat v = alpha_mark(f, b, i.f_class, x);
    if (i.q == 0) return v == 0;
    PLocalScalar s = PLocalScalar::from_rational(v, f.p);
    return s.num % f.p == 0;
}

/// The complete list of prime ideals: one type-p ideal, one type-0 ideal
/// per F-class, and (for the integral ring) one type-q ideal per F-class
/// per listed prime q != p.
inline std::vector<IdealDescriptor> enumerate_primes(const FusionSystem& f, Ring ring,
                                                     const std::set<int>& prime_list = {}) {
    std::vector<IdealDescriptor> out;
    out.push_back({ring, s_class_index(f), f.p});
    for (int c = 0; c < f.class_count(); ++c) out.push_back({ring, c, 0});
    if (ring == Ring::Integral) {
        for (int q : prime_list) {
            if (q == f.p) continue;
            for (int c = 0; c < f.class_count(); ++c) out.push_back({ring, c, q});
        }
    }
    return out;
}

struct GeneratorSet {
    std::vector<ZElement> gens;  // alpha coordinates
};

/// Generator sets, ordered as in the worked examples: plain alphas in
/// ascending class order first, then the corrected terms carrying
/// alpha_[S], then a scalar multiple of alpha_[S] last when present.
/// Type p:  { alpha_c : c != [S] } + { p alpha_[S] }.
/// Type 0 at [P]: { alpha_c - Phi_P(alpha_c) alpha_[S] : c != [S] }.
/// Type q at [P]: the type-0 generators + { q alpha_[S] }.
inline GeneratorSet generators(const FusionSystem& f, const AlphaBasis& b,
                               const IdealDescriptor& i) {
    const int top = s_class_index(f);
    GeneratorSet out;
    auto alpha = [&](int c) { return ZElement::basis_vector(Basis::Alpha, c); };
    if (i.q == f.p) {
        for (int c = 0; c < top; ++c) out.gens.push_back(alpha(c));
        out.gens.push_back(Int(f.p) * alpha(top));
        return out;
    }
    std::vector<ZElement> corrected;
    for (int c = 0; c < top; ++c) {
        const Int phi = b.mark_at(f, c, i.f_class);
        ZElement g = alpha(c);
        if (phi != 0) {
            g -= phi * alpha(top);
            corrected.push_back(std::move(g));
        } else {
            out.gens.push_back(std::move(g));
        }
    }
    for (ZElement& g : corrected) out.gens.push_back(std::move(g));
    if (i.q != 0) out.gens.push_back(Int(i.q) * alpha(top));
    return out;
}

/// Closed-form inclusion test between canonical descriptors.
inline bool included(const FusionSystem& f, const IdealDescriptor& i, const IdealDescriptor& j) {
    if (i.ring != j.ring) throw RingMismatch("comparing ideals of different rings");
    if (i.q == j.q && i.f_class == j.f_class) return true;
    if (i.q == 0 && j.q != 0 && j.q != f.p && i.f_class == j.f_class) return true;
    if (i.q == 0 && j.q == f.p) return true;
    return false;
}

inline bool equal(const FusionSystem& f, const IdealDescriptor& i, const IdealDescriptor& j) {
    return included(f, i, j) && included(f, j, i);
}

/// The unique minimal F-class c with alpha_c outside the ideal: [S]_F for
/// type p, [P]_F otherwise.
inline int minimal_nonmember_alpha(const FusionSystem& f, const AlphaBasis& b,
                                   const IdealDescriptor& i) {
    (void)b;
    return i.q == f.p ? s_class_index(f) : i.f_class;
}

}  // namespace burnside

#endif
