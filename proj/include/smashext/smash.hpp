#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "smashext/action.hpp"
#include "smashext/fdalgebra.hpp"
#include "smashext/graded_basis.hpp"
#include "smashext/hopf.hpp"
#include "smashext/quiver.hpp"

namespace smashext {

// Smash product A#H of a structure-constant algebra with a verified action:
// (a#h)(b#g) = a(h_(1).b) # h_(2)g. Basis (a_i#h_s) at index i*dimH + s.
inline FDAlgebra smash_fd(const FDAlgebra& a, const HopfAlgebraSC& h,
                          const std::vector<MatrixQ>& act) {
    std::size_t na = a.dim(), nh = h.dim;
    FDAlgebra b;
    auto idx = [nh](std::size_t i, std::size_t s) { return i * nh + s; };
    b.labels.resize(na * nh);
    b.degrees.resize(na * nh);
    b.internal_degrees.resize(na * nh);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t s = 0; s < nh; ++s) {
            b.labels[idx(i, s)] = a.labels[i] + "#" + h.labels[s];
            b.degrees[idx(i, s)] = a.degrees[i];
            b.internal_degrees[idx(i, s)] = a.internal_degrees[i];
        }
    b.unit.assign(na * nh, Rational(0));
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t s = 0; s < nh; ++s)
            if (!a.unit[i].is_zero() && !h.unit[s].is_zero())
                b.unit[idx(i, s)] = a.unit[i] * h.unit[s];

    b.mult.assign(na * nh, std::vector<QVec>(na * nh, QVec(na * nh)));
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t s = 0; s < nh; ++s)
            for (std::size_t j = 0; j < na; ++j)
                for (std::size_t t = 0; t < nh; ++t) {
                    QVec& out = b.mult[idx(i, s)][idx(j, t)];
                    for (const auto& [c, h1, h2] : h.sweedler2(s)) {
                        QVec hb = act[h1].col(j);          // h1 . b_j in A
                        QVec prod = a.mul(a.basis_vec(i), hb);
                        const QVec& ht = h.mult[h2][t];
                        for (std::size_t k = 0; k < na; ++k) {
                            if (prod[k].is_zero()) continue;
                            for (std::size_t u = 0; u < nh; ++u)
                                if (!ht[u].is_zero()) out[idx(k, u)] += c * prod[k] * ht[u];
                        }
                    }
                }

    // A#H is generated by A#1 and 1#H.
    for (const QVec& g : a.generating_set()) {
        QVec v(na * nh);
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t s = 0; s < nh; ++s)
                if (!g[i].is_zero() && !h.unit[s].is_zero()) v[idx(i, s)] = g[i] * h.unit[s];
        b.generators.push_back(std::move(v));
    }
    for (std::size_t s = 0; s < nh; ++s) {
        QVec v(na * nh);
        for (std::size_t i = 0; i < na; ++i)
            if (!a.unit[i].is_zero()) v[idx(i, s)] = a.unit[i];
        b.generators.push_back(std::move(v));
    }
    return b;
}

// Degree-truncated smash product of a presented algebra with H.
struct SmashAlgebra {
    FDAlgebra algebra;
    std::size_t base_dim_total = 0;
    std::size_t hopf_dim = 0;
    int bound = 0;
    std::vector<std::size_t> dims;  // dim (A#H)_d for d <= bound
    bool associativity_checked = false;
};

inline SmashAlgebra smash_product(PresentationBasis& a, const HopfAlgebraSC& h, PresHAction& act,
                                  int bound, std::uint64_t seed = 0) {
    auto rep = act.verify(bound);
    if (!rep.ok)
        throw std::invalid_argument("smash_product: action invalid: " + rep.failures.front());
    FDAlgebra atr = truncate_presentation(a, bound);
    SmashAlgebra s;
    s.algebra = smash_fd(atr, h, act.on_truncation(bound));
    s.base_dim_total = atr.dim();
    s.hopf_dim = h.dim;
    s.bound = bound;
    for (int d = 0; d <= bound; ++d) s.dims.push_back(a.dim(d) * h.dim);

    // Spot-check associativity on seeded random homogeneous triples whose
    // total degree stays inside the truncation.
    std::uint64_t state = seed ? seed : 0x9e3779b97f4a7c15ull;
    auto next = [&state]() {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 0x2545f4914f6cdd1dull;
    };
    std::size_t nb = s.algebra.dim();
    for (int t = 0; t < 50; ++t) {
        std::size_t i = next() % nb, j = next() % nb, k = next() % nb;
        if (s.algebra.internal_degrees[i] + s.algebra.internal_degrees[j] +
                s.algebra.internal_degrees[k] >
            bound)
            continue;
        QVec lhs = s.algebra.mul(s.algebra.mult[i][j], s.algebra.basis_vec(k));
        QVec rhs = s.algebra.mul(s.algebra.basis_vec(i), s.algebra.mult[j][k]);
        if (lhs != rhs) throw std::logic_error("smash_product: associativity spot-check failed");
    }
    s.associativity_checked = true;
    return s;
}

// Regular covering of a G-graded presentation: vertices (v,h), arrows
// a_h : (v,h) -> (w, g_a h) for each base arrow a : v -> w.
struct CoveringMap {
    std::vector<std::size_t> vertex_to_base;
    std::vector<std::size_t> arrow_to_base;
    std::size_t group_order = 1;

    std::size_t vertex_index(std::size_t base_v, std::size_t g) const {
        return base_v * group_order + g;
    }
    std::size_t arrow_index(std::size_t base_a, std::size_t g) const {
        return base_a * group_order + g;
    }
};

struct CoveringResult {
    Presentation presentation;
    CoveringMap map;
};

namespace detail {
// Lift of a base path starting at group coordinate g; returns the covering
// path. Arrows of the lift: a_{g}, then a'_{gdeg(a) g}, ...
inline Path lift_path(const Quiver& base, const CoveringMap& cm, const Path& p, std::size_t g,
                      const FiniteGroup& grp) {
    Path out;
    out.src = cm.vertex_index(p.src, g);
    std::size_t cur = g;
    std::size_t at = p.src;
    out.traversal.reserve(p.traversal.size());
    for (std::size_t a : p.traversal) {
        out.traversal.push_back(cm.arrow_index(a, cur));
        cur = grp.mul(base.arrows()[a].gdeg, cur);
        at = base.arrows()[a].tgt;
    }
    out.tgt = cm.vertex_index(at, cur);
    out.ndeg = p.ndeg;
    return out;
}
}  // namespace detail

inline CoveringResult covering_presentation(const Presentation& pres) {
    const Quiver& q = pres.quiver();
    if (!q.group()) throw std::invalid_argument("covering_presentation: quiver carries no group");
    auto hom = check_g_homogeneity(pres);
    if (!hom.ok) throw std::invalid_argument("covering_presentation: " + hom.message);
    const FiniteGroup& grp = *q.group();
    std::size_t n = grp.order();

    CoveringMap cm;
    cm.group_order = n;
    std::vector<std::string> vertices;
    for (std::size_t v = 0; v < q.vertices().size(); ++v)
        for (std::size_t g = 0; g < n; ++g) {
            vertices.push_back(n == 1 ? q.vertices()[v]
                                      : q.vertices()[v] + "@" + grp.label(g));
            cm.vertex_to_base.push_back(v);
        }
    std::vector<Arrow> arrows;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const Arrow& ar = q.arrows()[a];
        for (std::size_t g = 0; g < n; ++g) {
            Arrow lifted;
            lifted.label = n == 1 ? ar.label : ar.label + "_" + grp.label(g);
            lifted.src = cm.vertex_index(ar.src, g);
            lifted.tgt = cm.vertex_index(ar.tgt, grp.mul(ar.gdeg, g));
            lifted.ndeg = ar.ndeg;
            lifted.gdeg = 0;
            arrows.push_back(std::move(lifted));
            cm.arrow_to_base.push_back(a);
        }
    }
    Quiver cq(std::move(vertices), std::move(arrows), std::nullopt);

    std::vector<PathElement> relations;
    for (const auto& r : pres.relations()) {
        for (std::size_t g = 0; g < n; ++g) {
            std::vector<std::pair<Rational, Path>> terms;
            for (const auto& [c, p] : r.terms())
                terms.emplace_back(c, detail::lift_path(q, cm, p, g, grp));
            relations.emplace_back(std::move(terms));
        }
    }
    return CoveringResult{Presentation(std::move(cq), std::move(relations),
                                       pres.homogeneity_degree()),
                          cm};
}

struct CoveringIsoReport {
    bool ok = true;
    std::vector<std::string> failures;
    std::vector<std::size_t> smash_dims, covering_dims;

    void fail(const std::string& what) {
        ok = false;
        failures.push_back(what);
    }
};

// Canonical map R#kG* -> S on basis elements: m # p_g maps to the lift of m
// starting at (src m, g). Checks bijectivity degreewise and multiplicativity
// on all basis pairs up to the bound.
inline CoveringIsoReport verify_covering_iso(PresentationBasis& base, const HopfAlgebraSC& dual_kg,
                                             PresHAction& act, int bound) {
    CoveringIsoReport rep;
    const Quiver& q = base.quiver();
    if (!q.group()) {
        rep.fail("base quiver carries no group");
        return rep;
    }
    const FiniteGroup& grp = *q.group();
    if (dual_kg.dim != grp.order()) {
        rep.fail("Hopf dimension differs from group order");
        return rep;
    }
    auto cov = covering_presentation(base.presentation());
    PresentationBasis sb(cov.presentation);

    SmashAlgebra sm = smash_product(base, dual_kg, act, bound);
    std::size_t nh = dual_kg.dim;

    // Per-degree map matrices: columns indexed by (base monomial, p_g).
    std::vector<MatrixQ> phi(bound + 1);
    std::vector<std::vector<std::size_t>> col_offset(bound + 1);
    for (int d = 0; d <= bound; ++d) {
        std::size_t cols = base.dim(d) * nh;
        rep.smash_dims.push_back(cols);
        rep.covering_dims.push_back(sb.dim(d));
        if (sb.dim(d) != cols) {
            rep.fail("dimension mismatch in degree " + std::to_string(d));
            return rep;
        }
        MatrixQ m(sb.dim(d), cols);
        for (std::size_t i = 0; i < base.dim(d); ++i) {
            const Path& mon = base.basis(d)[i];
            for (std::size_t g = 0; g < nh; ++g) {
                Path lifted = detail::lift_path(q, cov.map, mon, g, grp);
                m.set_col(i * nh + g, sb.reduce_path(d, lifted));
            }
        }
        if (rank(m) != cols) {
            rep.fail("map is not bijective in degree " + std::to_string(d));
            return rep;
        }
        phi[d] = std::move(m);
    }

    // Multiplicativity on all basis pairs with degree sum within the bound.
    std::vector<std::size_t> offset(bound + 2, 0);
    for (int d = 0; d <= bound; ++d) offset[d + 1] = offset[d] + base.dim(d);
    auto smash_index = [&](int d, std::size_t i, std::size_t g) {
        return (offset[d] + i) * nh + g;
    };
    for (int d1 = 0; d1 <= bound && rep.ok; ++d1)
        for (int d2 = 0; d1 + d2 <= bound && rep.ok; ++d2)
            for (std::size_t i = 0; i < base.dim(d1) && rep.ok; ++i)
                for (std::size_t g = 0; g < nh && rep.ok; ++g)
                    for (std::size_t j = 0; j < base.dim(d2); ++j)
                        for (std::size_t gg = 0; gg < nh; ++gg) {
                            const QVec& prod =
                                sm.algebra.mult[smash_index(d1, i, g)][smash_index(d2, j, gg)];
                            QVec lhs(sb.dim(d1 + d2));
                            for (std::size_t k = 0; k < base.dim(d1 + d2); ++k)
                                for (std::size_t u = 0; u < nh; ++u) {
                                    const Rational& c = prod[smash_index(d1 + d2, k, u)];
                                    if (!c.is_zero()) axpy(lhs, c, phi[d1 + d2].col(k * nh + u));
                                }
                            QVec a = phi[d1].col(i * nh + g);
                            QVec b2 = phi[d2].col(j * nh + gg);
                            QVec rhs(sb.dim(d1 + d2));
                            for (std::size_t pa = 0; pa < a.size(); ++pa) {
                                if (a[pa].is_zero()) continue;
                                for (std::size_t pb = 0; pb < b2.size(); ++pb) {
                                    if (b2[pb].is_zero()) continue;
                                    axpy(rhs, a[pa] * b2[pb], sb.mul_basis(d1, pa, d2, pb));
                                }
                            }
                            if (lhs != rhs) {
                                rep.fail("multiplicativity fails on basis pair in degrees (" +
                                         std::to_string(d1) + "," + std::to_string(d2) + ")");
                                break;
                            }
                        }
    return rep;
}

}  // namespace smashext
