#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "smashext/fdalgebra.hpp"
#include "smashext/graded_basis.hpp"
#include "smashext/hopf.hpp"
#include "smashext/matrix.hpp"
#include "smashext/quiver.hpp"

namespace smashext {

struct ActionReport {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(const std::string& what) {
        ok = false;
        failures.push_back(what);
    }
};

// H-module-algebra action on R = kQ/I, input on the vertex span and the
// arrow span and extended to paths through the comultiplication:
// h.(a q) = (h_(1).a)(h_(2).q). The extension lives on the free path
// algebra; the induced action on R exists exactly when the ideal is stable,
// which verify() checks rather than assumes.
class PresHAction {
public:
    PresHAction(PresentationBasis& basis, const HopfAlgebraSC& hopf,
                std::vector<MatrixQ> on_vertices, std::vector<MatrixQ> on_arrows)
        : basis_(&basis),
          hopf_(&hopf),
          on_vertices_(std::move(on_vertices)),
          on_arrows_(std::move(on_arrows)) {
        std::size_t nv = quiver().vertices().size();
        std::size_t na = quiver().arrows().size();
        if (on_vertices_.size() != hopf.dim || on_arrows_.size() != hopf.dim)
            throw std::invalid_argument("PresHAction: one matrix per Hopf basis element");
        for (const auto& m : on_vertices_)
            if (m.rows() != nv || m.cols() != nv)
                throw std::invalid_argument("PresHAction: vertex matrix size mismatch");
        for (const auto& m : on_arrows_)
            if (m.rows() != na || m.cols() != na)
                throw std::invalid_argument("PresHAction: arrow matrix size mismatch");
        // Degree preservation on the arrow span.
        for (const auto& m : on_arrows_)
            for (std::size_t i = 0; i < na; ++i)
                for (std::size_t j = 0; j < na; ++j)
                    if (!m(i, j).is_zero() &&
                        quiver().arrows()[i].ndeg != quiver().arrows()[j].ndeg)
                        throw std::invalid_argument("PresHAction: arrow action mixes N-degrees");
    }

    // The kG*-action induced by a G-grading: p_g projects onto the
    // G-degree-g component.
    static PresHAction from_grading(PresentationBasis& basis, const HopfAlgebraSC& dual_kg,
                                    const FiniteGroup& group) {
        const Quiver& q = basis.quiver();
        if (!q.group() || !(*q.group() == group))
            throw std::invalid_argument("from_grading: quiver group differs");
        auto rep = check_g_homogeneity(basis.presentation());
        if (!rep.ok) throw std::invalid_argument("from_grading: " + rep.message);
        std::size_t n = group.order();
        if (dual_kg.dim != n) throw std::invalid_argument("from_grading: Hopf dim != |G|");
        std::vector<MatrixQ> on_v(n, MatrixQ(q.vertices().size(), q.vertices().size()));
        std::vector<MatrixQ> on_a(n, MatrixQ(q.arrows().size(), q.arrows().size()));
        for (std::size_t v = 0; v < q.vertices().size(); ++v)
            on_v[group.identity()](v, v) = Rational(1);
        for (std::size_t a = 0; a < q.arrows().size(); ++a)
            on_a[q.arrows()[a].gdeg](a, a) = Rational(1);
        return PresHAction(basis, dual_kg, std::move(on_v), std::move(on_a));
    }

    const HopfAlgebraSC& hopf() const { return *hopf_; }
    PresentationBasis& basis() const { return *basis_; }
    const Quiver& quiver() const { return basis_->quiver(); }

    // Action of basis element h on the free path span of degree d.
    const MatrixQ& free_matrix(std::size_t h, int d) {
        auto key = std::make_pair(h, d);
        auto it = free_cache_.find(key);
        if (it != free_cache_.end()) return it->second;

        const auto paths = enumerate_paths(quiver(), d);
        std::map<std::vector<std::size_t>, std::size_t> index;
        for (std::size_t i = 0; i < paths.size(); ++i) index.emplace(path_key(paths[i]), i);

        MatrixQ m(paths.size(), paths.size());
        if (d == 0) {
            // Degree-0 paths are the vertex idempotents, in vertex order.
            m = on_vertices_[h];
        } else {
            for (std::size_t j = 0; j < paths.size(); ++j) {
                const Path& p = paths[j];
                if (p.traversal.size() == 1) {
                    std::size_t a = p.traversal[0];
                    for (std::size_t b = 0; b < quiver().arrows().size(); ++b)
                        if (!on_arrows_[h](b, a).is_zero()) {
                            Path bp = Path::of_arrow(quiver(), b);
                            m(index.at(path_key(bp)), j) += on_arrows_[h](b, a);
                        }
                    continue;
                }
                // p = last o rest; h.p = sum (h1.last)(h2.rest)
                std::size_t last = p.traversal.back();
                Path rest = p;
                rest.traversal.pop_back();
                rest.tgt = quiver().arrows()[last].src;
                rest.ndeg = p.ndeg - quiver().arrows()[last].ndeg;
                const auto rest_paths = enumerate_paths(quiver(), rest.ndeg);
                std::map<std::vector<std::size_t>, std::size_t> rest_index;
                for (std::size_t i = 0; i < rest_paths.size(); ++i)
                    rest_index.emplace(path_key(rest_paths[i]), i);
                std::size_t rj = rest_index.at(path_key(rest));
                for (const auto& [c, h1, h2] : hopf_->sweedler2(h)) {
                    const MatrixQ& lower = free_matrix(h2, rest.ndeg);
                    for (std::size_t b = 0; b < quiver().arrows().size(); ++b) {
                        if (on_arrows_[h1](b, last).is_zero()) continue;
                        Path bp = Path::of_arrow(quiver(), b);
                        for (std::size_t ri = 0; ri < rest_paths.size(); ++ri) {
                            if (lower(ri, rj).is_zero()) continue;
                            auto comp = compose(bp, rest_paths[ri]);
                            if (!comp) continue;
                            m(index.at(path_key(*comp)), j) +=
                                c * on_arrows_[h1](b, last) * lower(ri, rj);
                        }
                    }
                }
            }
        }
        return free_cache_.emplace(key, std::move(m)).first->second;
    }

    // Induced matrix on the chosen basis of R_d. Only meaningful when the
    // ideal is stable; callers should verify() first.
    const MatrixQ& matrix(std::size_t h, int d) {
        auto key = std::make_pair(h, d);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        const MatrixQ& fm = free_matrix(h, d);
        const auto& basis_paths = basis_->basis(d);
        MatrixQ m(basis_paths.size(), basis_paths.size());
        for (std::size_t j = 0; j < basis_paths.size(); ++j) {
            std::size_t pj = basis_->path_index(d, basis_paths[j]);
            QVec coords(basis_paths.size());
            for (std::size_t i = 0; i < fm.rows(); ++i) {
                if (fm(i, pj).is_zero()) continue;
                axpy(coords, fm(i, pj), basis_->reduce_path(d, basis_->paths(d)[i]));
            }
            m.set_col(j, coords);
        }
        return cache_.emplace(key, std::move(m)).first->second;
    }

    // Block-diagonal action matrices matching truncate_presentation's basis
    // order.
    std::vector<MatrixQ> on_truncation(int bound) {
        std::vector<std::size_t> offset(bound + 2, 0);
        for (int d = 0; d <= bound; ++d) offset[d + 1] = offset[d] + basis_->dim(d);
        std::size_t n = offset[bound + 1];
        std::vector<MatrixQ> out(hopf_->dim, MatrixQ(n, n));
        for (std::size_t h = 0; h < hopf_->dim; ++h)
            for (int d = 0; d <= bound; ++d) {
                const MatrixQ& m = matrix(h, d);
                for (std::size_t i = 0; i < m.rows(); ++i)
                    for (std::size_t j = 0; j < m.cols(); ++j)
                        if (!m(i, j).is_zero()) out[h](offset[d] + i, offset[d] + j) = m(i, j);
            }
        return out;
    }

    // Checks every module-algebra invariant on bases up to degree bound:
    // h.1 = eps(h)1, the module law, the module-algebra law, and ideal
    // stability. The first failure of each kind is reported with a witness.
    ActionReport verify(int bound) {
        ActionReport rep;
        const HopfAlgebraSC& h = *hopf_;
        std::size_t nv = quiver().vertices().size();

        // h.1 = eps(h) 1 on the degree-0 span.
        for (std::size_t s = 0; s < h.dim && rep.ok; ++s) {
            QVec one(nv, Rational(1));
            QVec img = on_vertices_[s] * one;
            QVec want(nv);
            for (std::size_t v = 0; v < nv; ++v) want[v] = h.counit[s];
            if (img != want) rep.fail("h.1 != eps(h)1 at " + h.labels[s]);
        }

        // Module law (g h).p = g.(h.p) on free spaces of every degree.
        for (int d = 0; d <= bound && rep.ok; ++d) {
            for (std::size_t s = 0; s < h.dim && rep.ok; ++s)
                for (std::size_t t = 0; t < h.dim; ++t) {
                    MatrixQ lhs = free_matrix(s, d) * free_matrix(t, d);
                    MatrixQ rhs(lhs.rows(), lhs.cols());
                    for (std::size_t u = 0; u < h.dim; ++u)
                        if (!h.mult[s][t][u].is_zero())
                            rhs = rhs + h.mult[s][t][u] * free_matrix(u, d);
                    if (!(lhs == rhs)) {
                        rep.fail("module law fails at (" + h.labels[s] + "," + h.labels[t] +
                                 ") in degree " + std::to_string(d));
                        break;
                    }
                }
        }

        // Module-algebra law on path pairs. The path extension satisfies it
        // for "arrow times rest" by construction; this re-checks all splits.
        for (int d1 = 0; d1 <= bound && rep.ok; ++d1)
            for (int d2 = 0; d1 + d2 <= bound && rep.ok; ++d2) {
                auto ps = enumerate_paths(quiver(), d1);
                auto qs = enumerate_paths(quiver(), d2);
                auto prod_paths = enumerate_paths(quiver(), d1 + d2);
                std::map<std::vector<std::size_t>, std::size_t> pidx;
                for (std::size_t i = 0; i < prod_paths.size(); ++i)
                    pidx.emplace(path_key(prod_paths[i]), i);
                for (std::size_t s = 0; s < h.dim && rep.ok; ++s) {
                    const MatrixQ& md = free_matrix(s, d1 + d2);
                    for (std::size_t a = 0; a < ps.size() && rep.ok; ++a)
                        for (std::size_t b = 0; b < qs.size(); ++b) {
                            QVec lhs(prod_paths.size()), rhs(prod_paths.size());
                            if (auto pq = compose(ps[a], qs[b]))
                                lhs = md.col(pidx.at(path_key(*pq)));
                            for (const auto& [c, h1, h2] : h.sweedler2(s)) {
                                const MatrixQ& m1 = free_matrix(h1, d1);
                                const MatrixQ& m2 = free_matrix(h2, d2);
                                for (std::size_t i = 0; i < ps.size(); ++i) {
                                    if (m1(i, a).is_zero()) continue;
                                    for (std::size_t j = 0; j < qs.size(); ++j) {
                                        if (m2(j, b).is_zero()) continue;
                                        if (auto pq = compose(ps[i], qs[j]))
                                            rhs[pidx.at(path_key(*pq))] +=
                                                c * m1(i, a) * m2(j, b);
                                    }
                                }
                            }
                            if (lhs != rhs) {
                                rep.fail("module-algebra law fails for " + h.labels[s] +
                                         " on (" + path_label(quiver(), ps[a]) + ", " +
                                         path_label(quiver(), qs[b]) + ")");
                                break;
                            }
                        }
                }
            }

        // Ideal stability, degree by degree.
        for (int d = 0; d <= bound && rep.ok; ++d) {
            auto rows = basis_->ideal_rows_global(d);
            if (rows.empty()) continue;
            for (std::size_t s = 0; s < h.dim && rep.ok; ++s) {
                const MatrixQ& fm = free_matrix(s, d);
                for (const auto& r : rows) {
                    if (!basis_->in_ideal(d, fm * r)) {
                        rep.fail("ideal is not stable under " + h.labels[s] + " in degree " +
                                 std::to_string(d));
                        break;
                    }
                }
            }
        }
        return rep;
    }

private:
    static std::vector<std::size_t> path_key(const Path& p) {
        std::vector<std::size_t> k;
        k.push_back(p.src);
        k.insert(k.end(), p.traversal.begin(), p.traversal.end());
        return k;
    }

    PresentationBasis* basis_;
    const HopfAlgebraSC* hopf_;
    std::vector<MatrixQ> on_vertices_, on_arrows_;
    std::map<std::pair<std::size_t, int>, MatrixQ> free_cache_;
    std::map<std::pair<std::size_t, int>, MatrixQ> cache_;
};

// Module-algebra verification for a structure-constant algebra (optionally
// dg): h.1 = eps(h)1, module law, module-algebra law, and when a
// differential is supplied, d(h.a) = h.d(a).
inline ActionReport verify_fd_module_algebra(const FDAlgebra& a, const HopfAlgebraSC& h,
                                             const std::vector<MatrixQ>& act,
                                             const MatrixQ* diff = nullptr) {
    ActionReport rep;
    if (act.size() != h.dim) {
        rep.fail("one action matrix per Hopf basis element");
        return rep;
    }
    std::size_t n = a.dim();
    for (const auto& m : act)
        if (m.rows() != n || m.cols() != n) {
            rep.fail("action matrix size mismatch");
            return rep;
        }
    for (std::size_t s = 0; s < h.dim; ++s) {
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (!act[s](r, c).is_zero() &&
                    (a.degrees[r] != a.degrees[c] ||
                     a.internal_degrees[r] != a.internal_degrees[c])) {
                    rep.fail("action of " + h.labels[s] + " does not preserve degrees");
                    r = n;
                    break;
                }
        if (!rep.ok) return rep;
    }
    for (std::size_t s = 0; s < h.dim && rep.ok; ++s) {
        QVec img = act[s] * a.unit;
        QVec want(n);
        axpy(want, h.counit[s], a.unit);
        if (img != want) rep.fail("h.1 != eps(h)1 at " + h.labels[s]);
    }
    for (std::size_t s = 0; s < h.dim && rep.ok; ++s)
        for (std::size_t t = 0; t < h.dim; ++t) {
            MatrixQ lhs = act[s] * act[t];
            MatrixQ rhs(n, n);
            for (std::size_t u = 0; u < h.dim; ++u)
                if (!h.mult[s][t][u].is_zero()) rhs = rhs + h.mult[s][t][u] * act[u];
            if (!(lhs == rhs)) {
                rep.fail("module law fails at (" + h.labels[s] + "," + h.labels[t] + ")");
                break;
            }
        }
    for (std::size_t s = 0; s < h.dim && rep.ok; ++s)
        for (std::size_t i = 0; i < n && rep.ok; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                QVec lhs = act[s] * a.mult[i][j];
                QVec rhs(n);
                for (const auto& [c, h1, h2] : h.sweedler2(s)) {
                    QVec u = act[h1].col(i);
                    QVec v = act[h2].col(j);
                    QVec uv = a.mul(u, v);
                    axpy(rhs, c, uv);
                }
                if (lhs != rhs) {
                    rep.fail("module-algebra law fails for " + h.labels[s] + " on (" +
                             a.labels[i] + "," + a.labels[j] + ")");
                    break;
                }
            }
    if (diff && rep.ok)
        for (std::size_t s = 0; s < h.dim; ++s)
            if (!(*diff * act[s] == act[s] * *diff)) {
                rep.fail("differential is not H-linear at " + h.labels[s]);
                break;
            }
    return rep;
}

}  // namespace smashext
