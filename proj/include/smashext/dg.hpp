#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "smashext/action.hpp"
#include "smashext/fdalgebra.hpp"
#include "smashext/hopf.hpp"
#include "smashext/matrix.hpp"
#include "smashext/smash.hpp"

namespace smashext {

// Finite-dimensional cochain dg algebra: structure constants plus a degree
// +1 differential.
struct DGAlgebraSC {
    FDAlgebra algebra;
    MatrixQ diff;
};

struct DGReport {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(const std::string& what) {
        ok = false;
        failures.push_back(what);
    }
};

// Associativity, unit, d of degree +1, d^2 = 0, and the graded Leibniz rule
// on all basis pairs.
inline DGReport verify_dg(const DGAlgebraSC& a) {
    DGReport rep;
    std::size_t n = a.algebra.dim();
    if (auto err = a.algebra.verify()) {
        rep.fail(*err);
        return rep;
    }
    if (a.diff.rows() != n || a.diff.cols() != n) {
        rep.fail("differential size mismatch");
        return rep;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!a.diff(i, j).is_zero() && a.algebra.degrees[i] != a.algebra.degrees[j] + 1) {
                rep.fail("differential is not of degree +1 at " + a.algebra.labels[j]);
                return rep;
            }
    MatrixQ dd = a.diff * a.diff;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_zero(dd.col(j))) {
            rep.fail("d^2 != 0, witness " + a.algebra.labels[j]);
            return rep;
        }
    for (std::size_t i = 0; i < n && rep.ok; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            QVec lhs = a.diff * a.algebra.mult[i][j];
            QVec rhs = a.algebra.mul(a.diff.col(i), a.algebra.basis_vec(j));
            QVec second = a.algebra.mul(a.algebra.basis_vec(i), a.diff.col(j));
            Rational sign = a.algebra.degrees[i] % 2 == 0 ? Rational(1) : Rational(-1);
            axpy(rhs, sign, second);
            if (lhs != rhs) {
                rep.fail("Leibniz rule fails at (" + a.algebra.labels[i] + "," +
                         a.algebra.labels[j] + ")");
                break;
            }
        }
    return rep;
}

// H(A) with an induced product through chosen representatives. Section
// choice: the first kernel vectors (in deterministic kernel order) that are
// independent modulo the image; the alternate section scans them in reverse
// and is used to confirm representative independence.
struct CohomologyAlgebra {
    FDAlgebra algebra;                 // product on classes
    std::vector<QVec> representatives;  // cocycle representative per class
    std::map<int, std::size_t> dims;    // per cohomological degree
};

namespace detail {

struct CohomologyScaffold {
    std::vector<int> levels;                       // distinct degrees present
    std::map<int, std::vector<std::size_t>> slots;  // degree -> ambient indices
    std::map<int, std::vector<QVec>> image;         // local coordinates
    std::map<int, std::vector<QVec>> kernel;        // local coordinates
};

inline CohomologyScaffold cohomology_scaffold(const DGAlgebraSC& a) {
    CohomologyScaffold s;
    std::size_t n = a.algebra.dim();
    for (std::size_t i = 0; i < n; ++i) s.slots[a.algebra.degrees[i]].push_back(i);
    for (const auto& [deg, slot] : s.slots) s.levels.push_back(deg);
    for (int deg : s.levels) {
        const auto& slot = s.slots.at(deg);
        auto up = s.slots.find(deg + 1);
        std::size_t rows = up == s.slots.end() ? 0 : up->second.size();
        MatrixQ dn(rows, slot.size());
        for (std::size_t j = 0; j < slot.size(); ++j)
            for (std::size_t i = 0; i < rows; ++i) dn(i, j) = a.diff(up->second[i], slot[j]);
        s.kernel[deg] = rows == 0 ? [&] {
            std::vector<QVec> full;
            for (std::size_t j = 0; j < slot.size(); ++j) {
                QVec v(slot.size());
                v[j] = Rational(1);
                full.push_back(std::move(v));
            }
            return full;
        }()
                                  : kernel_basis(dn);
        // image of d from one degree below, in this degree's local coords
        auto down = s.slots.find(deg - 1);
        std::vector<QVec> im;
        if (down != s.slots.end()) {
            for (std::size_t j : down->second) {
                QVec v(slot.size());
                bool nz = false;
                for (std::size_t i = 0; i < slot.size(); ++i) {
                    v[i] = a.diff(slot[i], j);
                    nz = nz || !v[i].is_zero();
                }
                if (nz) im.push_back(std::move(v));
            }
        }
        s.image[deg] = std::move(im);
    }
    return s;
}

}  // namespace detail

inline CohomologyAlgebra cohomology_algebra(const DGAlgebraSC& a, bool alternate_section = false) {
    auto rep = verify_dg(a);
    if (!rep.ok)
        throw std::invalid_argument("cohomology_algebra: not a dg algebra: " + rep.failures.front());
    auto s = detail::cohomology_scaffold(a);
    std::size_t n = a.algebra.dim();

    CohomologyAlgebra h;
    std::vector<int> class_degree;
    std::map<int, SolvedSystem> projector;  // [image | chosen reps] per degree
    std::map<int, std::vector<std::size_t>> class_of;  // degree -> class indices

    for (int deg : s.levels) {
        const auto& slot = s.slots.at(deg);
        RowSpace span(slot.size());
        for (const auto& v : s.image.at(deg)) span.add_row(v);
        std::size_t im_rank = span.rank();
        std::vector<QVec> chosen;
        auto consider = [&](const QVec& k) {
            if (span.add_row(k)) chosen.push_back(k);
        };
        const auto& ker = s.kernel.at(deg);
        if (alternate_section)
            for (auto it = ker.rbegin(); it != ker.rend(); ++it) consider(*it);
        else
            for (const auto& k : ker) consider(k);
        (void)im_rank;
        // projector columns: image basis then chosen representatives
        MatrixQ cols(slot.size(), s.image.at(deg).size() + chosen.size());
        for (std::size_t j = 0; j < s.image.at(deg).size(); ++j)
            cols.set_col(j, s.image.at(deg)[j]);
        for (std::size_t j = 0; j < chosen.size(); ++j)
            cols.set_col(s.image.at(deg).size() + j, chosen[j]);
        projector.emplace(deg, SolvedSystem(cols));
        for (const auto& c : chosen) {
            QVec ambient(n);
            for (std::size_t i = 0; i < slot.size(); ++i) ambient[slot[i]] = c[i];
            class_of[deg].push_back(h.representatives.size());
            h.representatives.push_back(std::move(ambient));
            class_degree.push_back(deg);
        }
        h.dims[deg] = chosen.size();
    }

    std::size_t m = h.representatives.size();
    auto project = [&](const QVec& ambient, int deg) {
        const auto& slot = s.slots.at(deg);
        QVec local(slot.size());
        for (std::size_t i = 0; i < slot.size(); ++i) local[i] = ambient[slot[i]];
        auto sol = projector.at(deg).solve(local);
        if (!sol) throw std::logic_error("cohomology_algebra: projection failed");
        QVec coords(m);
        std::size_t off = s.image.at(deg).size();
        for (std::size_t j = 0; j < class_of.at(deg).size(); ++j)
            coords[class_of.at(deg)[j]] = (*sol)[off + j];
        return coords;
    };

    h.algebra.labels.resize(m);
    for (std::size_t i = 0; i < m; ++i) h.algebra.labels[i] = "H" + std::to_string(i);
    h.algebra.degrees = class_degree;
    h.algebra.internal_degrees = class_degree;
    h.algebra.mult.assign(m, std::vector<QVec>(m, QVec(m)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            QVec prod = a.algebra.mul(h.representatives[i], h.representatives[j]);
            int deg = class_degree[i] + class_degree[j];
            if (s.slots.count(deg) == 0) {
                if (!is_zero(prod))
                    throw std::logic_error("cohomology_algebra: product escapes the grading");
                continue;
            }
            h.algebra.mult[i][j] = project(prod, deg);
        }
    h.algebra.unit = project(a.algebra.unit, 0);
    return h;
}

// Recomputes every product after shifting each representative by image
// elements (the classes stay fixed); the structure constants must not move.
inline bool cohomology_product_representative_independent(const DGAlgebraSC& a,
                                                          const CohomologyAlgebra& h) {
    auto s = detail::cohomology_scaffold(a);
    std::size_t n = a.algebra.dim();
    std::size_t m = h.representatives.size();
    std::vector<QVec> shifted = h.representatives;
    for (std::size_t i = 0; i < m; ++i) {
        int deg = h.algebra.degrees[i];
        const auto& slot = s.slots.at(deg);
        for (const QVec& im : s.image.at(deg))
            for (std::size_t l = 0; l < slot.size(); ++l) shifted[i][slot[l]] += im[l];
    }
    // projector per degree over [image | shifted representatives]
    std::map<int, SolvedSystem> projector;
    std::map<int, std::vector<std::size_t>> class_of;
    for (std::size_t i = 0; i < m; ++i) class_of[h.algebra.degrees[i]].push_back(i);
    for (int deg : s.levels) {
        const auto& slot = s.slots.at(deg);
        const auto& im = s.image.at(deg);
        const auto& cls = class_of[deg];
        MatrixQ cols(slot.size(), im.size() + cls.size());
        for (std::size_t j = 0; j < im.size(); ++j) cols.set_col(j, im[j]);
        for (std::size_t j = 0; j < cls.size(); ++j) {
            QVec local(slot.size());
            for (std::size_t l = 0; l < slot.size(); ++l) local[l] = shifted[cls[j]][slot[l]];
            cols.set_col(im.size() + j, local);
        }
        projector.emplace(deg, SolvedSystem(cols));
    }
    auto project = [&](const QVec& ambient, int deg) -> std::optional<QVec> {
        if (s.slots.count(deg) == 0) return is_zero(ambient) ? std::optional<QVec>(QVec(m)) : std::nullopt;
        const auto& slot = s.slots.at(deg);
        QVec local(slot.size());
        for (std::size_t l = 0; l < slot.size(); ++l) local[l] = ambient[slot[l]];
        auto sol = projector.at(deg).solve(local);
        if (!sol) return std::nullopt;
        QVec coords(m);
        const auto& cls = class_of[deg];
        for (std::size_t j = 0; j < cls.size(); ++j)
            coords[cls[j]] = (*sol)[s.image.at(deg).size() + j];
        return coords;
    };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            QVec prod = a.algebra.mul(shifted[i], shifted[j]);
            auto coords = project(prod, h.algebra.degrees[i] + h.algebra.degrees[j]);
            if (!coords || *coords != h.algebra.mult[i][j]) return false;
        }
    (void)n;
    return true;
}

struct DGSmashReport {
    bool ok = true;
    std::vector<std::string> failures;
    std::map<int, std::size_t> dims_smash_cohomology;
    std::map<int, std::size_t> dims_cohomology_smash;
    bool sections_agree = false;

    void fail(const std::string& what) {
        ok = false;
        failures.push_back(what);
    }
};

// H(A#H) vs H(A)#H: builds both sides and checks that the canonical
// degreewise identification [a (x) h] <-> [a] (x) h intertwines the
// products exactly.
inline DGSmashReport dg_smash_cohomology_check(const DGAlgebraSC& a, const HopfAlgebraSC& hopf,
                                               const std::vector<MatrixQ>& act) {
    DGSmashReport rep;
    auto dgr = verify_dg(a);
    if (!dgr.ok) {
        rep.fail("base is not a dg algebra: " + dgr.failures.front());
        return rep;
    }
    auto ar = verify_fd_module_algebra(a.algebra, hopf, act, &a.diff);
    if (!ar.ok) {
        rep.fail("action incompatible: " + ar.failures.front());
        return rep;
    }

    // Smash side with delta = d (x) id.
    DGAlgebraSC b;
    b.algebra = smash_fd(a.algebra, hopf, act);
    std::size_t na = a.algebra.dim(), nh = hopf.dim;
    b.diff = MatrixQ(na * nh, na * nh);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            if (!a.diff(i, j).is_zero())
                for (std::size_t t = 0; t < nh; ++t) b.diff(i * nh + t, j * nh + t) = a.diff(i, j);
    auto dgb = verify_dg(b);
    if (!dgb.ok) {
        rep.fail("smash product is not a dg algebra: " + dgb.failures.front());
        return rep;
    }

    CohomologyAlgebra hb = cohomology_algebra(b);
    CohomologyAlgebra ha = cohomology_algebra(a);
    {
        CohomologyAlgebra hb2 = cohomology_algebra(b, true);
        CohomologyAlgebra ha2 = cohomology_algebra(a, true);
        rep.sections_agree = hb2.dims == hb.dims && ha2.dims == ha.dims;
    }

    // Induced action on H(A): act on representatives, project back.
    std::size_t m = ha.representatives.size();
    MatrixQ reps(na, m);
    for (std::size_t j = 0; j < m; ++j) reps.set_col(j, ha.representatives[j]);
    // projection of a cocycle onto classes: solve [diff columns | reps]
    std::vector<QVec> dcols;
    for (std::size_t j = 0; j < na; ++j) {
        QVec c = a.diff.col(j);
        if (!is_zero(c)) dcols.push_back(std::move(c));
    }
    MatrixQ proj_cols(na, dcols.size() + m);
    for (std::size_t j = 0; j < dcols.size(); ++j) proj_cols.set_col(j, dcols[j]);
    for (std::size_t j = 0; j < m; ++j) proj_cols.set_col(dcols.size() + j, ha.representatives[j]);
    SolvedSystem proj(proj_cols);
    auto to_classes = [&](const QVec& v) {
        auto sol = proj.solve(v);
        if (!sol) throw std::logic_error("dg_smash_cohomology_check: projection failed");
        QVec out(m);
        for (std::size_t j = 0; j < m; ++j) out[j] = (*sol)[dcols.size() + j];
        return out;
    };
    std::vector<MatrixQ> act_h(hopf.dim, MatrixQ(m, m));
    for (std::size_t s = 0; s < hopf.dim; ++s)
        for (std::size_t j = 0; j < m; ++j)
            act_h[s].set_col(j, to_classes(act[s] * ha.representatives[j]));
    auto ar2 = verify_fd_module_algebra(ha.algebra, hopf, act_h);
    if (!ar2.ok) {
        rep.fail("induced action on H(A) invalid: " + ar2.failures.front());
        return rep;
    }

    FDAlgebra hasmash = smash_fd(ha.algebra, hopf, act_h);

    // Canonical map H(A)#H -> H(A#H): [rep_i (x) h_s].
    std::size_t nb = b.algebra.dim();
    std::size_t mb = hb.representatives.size();
    MatrixQ brep(nb, mb);
    for (std::size_t j = 0; j < mb; ++j) brep.set_col(j, hb.representatives[j]);
    std::vector<QVec> bd;
    for (std::size_t j = 0; j < nb; ++j) {
        QVec c = b.diff.col(j);
        if (!is_zero(c)) bd.push_back(std::move(c));
    }
    MatrixQ bcols(nb, bd.size() + mb);
    for (std::size_t j = 0; j < bd.size(); ++j) bcols.set_col(j, bd[j]);
    for (std::size_t j = 0; j < mb; ++j) bcols.set_col(bd.size() + j, hb.representatives[j]);
    SolvedSystem bproj(bcols);
    auto b_to_classes = [&](const QVec& v) {
        auto sol = bproj.solve(v);
        if (!sol) throw std::logic_error("dg_smash_cohomology_check: smash projection failed");
        QVec out(mb);
        for (std::size_t j = 0; j < mb; ++j) out[j] = (*sol)[bd.size() + j];
        return out;
    };

    if (m * nh != mb) {
        rep.fail("dimension mismatch: dim H(A)#H = " + std::to_string(m * nh) +
                 ", dim H(A#H) = " + std::to_string(mb));
        return rep;
    }
    MatrixQ phi(mb, m * nh);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t s = 0; s < nh; ++s) {
            QVec elem(nb);
            for (std::size_t k = 0; k < na; ++k)
                if (!ha.representatives[i][k].is_zero())
                    elem[k * nh + s] = ha.representatives[i][k];
            phi.set_col(i * nh + s, b_to_classes(elem));
        }
    if (rank(phi) != m * nh) {
        rep.fail("canonical identification is not bijective");
        return rep;
    }
    for (std::size_t u = 0; u < m * nh && rep.ok; ++u)
        for (std::size_t v = 0; v < m * nh; ++v) {
            // phi(u v) vs phi(u) phi(v)
            QVec lhs(mb);
            const QVec& prod = hasmash.mult[u][v];
            for (std::size_t k = 0; k < m * nh; ++k)
                if (!prod[k].is_zero()) axpy(lhs, prod[k], phi.col(k));
            QVec rhs = hb.algebra.mul(phi.col(u), phi.col(v));
            if (lhs != rhs) {
                rep.fail("canonical identification is not multiplicative at pair (" +
                         std::to_string(u) + "," + std::to_string(v) + ")");
                break;
            }
        }

    for (const auto& [deg, cnt] : hb.dims) rep.dims_smash_cohomology[deg] = cnt;
    for (const auto& [deg, cnt] : ha.dims) rep.dims_cohomology_smash[deg] = cnt * nh;
    return rep;
}

}  // namespace smashext
