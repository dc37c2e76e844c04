#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "smashext/graded_basis.hpp"
#include "smashext/matrix.hpp"

namespace smashext {

// Finite-dimensional graded algebra by structure constants.
//
// Two degrees per basis element: `degrees` is the cohomological degree that
// drives Koszul signs (zero for an ordinary graded algebra viewed as a
// complex concentrated in degree 0), `internal_degrees` is the N-grading
// used to block linear solves. For a dg algebra the two coincide.
struct FDAlgebra {
    std::vector<std::string> labels;
    std::vector<int> degrees;
    std::vector<int> internal_degrees;
    std::vector<std::vector<QVec>> mult;  // mult[i][j] = coordinates of b_i b_j
    QVec unit;
    // Homogeneous algebra generators (with the unit) as coordinate vectors;
    // empty means "use the whole basis". Only used to trim linearity solves.
    std::vector<QVec> generators;

    std::size_t dim() const { return labels.size(); }

    QVec mul(const QVec& x, const QVec& y) const {
        QVec z(dim());
        for (std::size_t i = 0; i < dim(); ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (y[j].is_zero()) continue;
                Rational c = x[i] * y[j];
                axpy(z, c, mult[i][j]);
            }
        }
        return z;
    }

    MatrixQ left_mult(const QVec& x) const {
        MatrixQ m(dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) {
            QVec e(dim());
            e[j] = Rational(1);
            m.set_col(j, mul(x, e));
        }
        return m;
    }

    QVec basis_vec(std::size_t i) const {
        QVec v(dim());
        v[i] = Rational(1);
        return v;
    }

    std::vector<QVec> generating_set() const {
        if (!generators.empty()) return generators;
        std::vector<QVec> out;
        for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_vec(i));
        return out;
    }

    // Degree of a homogeneous element; throws on mixed degrees.
    std::pair<int, int> element_degree(const QVec& x) const {
        std::optional<std::pair<int, int>> d;
        for (std::size_t i = 0; i < dim(); ++i) {
            if (x[i].is_zero()) continue;
            std::pair<int, int> di{degrees[i], internal_degrees[i]};
            if (d && *d != di) throw std::invalid_argument("FDAlgebra: inhomogeneous element");
            d = di;
        }
        return d.value_or(std::pair<int, int>{0, 0});
    }

    // Associativity, unit, and degree-additivity of the product on the
    // whole basis; returns the first violation.
    std::optional<std::string> verify() const {
        std::size_t n = dim();
        if (degrees.size() != n || internal_degrees.size() != n || mult.size() != n ||
            unit.size() != n)
            return "inconsistent field sizes";
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (mult[i].size() != n || mult[i][j].size() != n) return "ragged mult table";
                for (std::size_t k = 0; k < n; ++k)
                    if (!mult[i][j][k].is_zero() &&
                        (degrees[k] != degrees[i] + degrees[j] ||
                         internal_degrees[k] != internal_degrees[i] + internal_degrees[j]))
                        return "product not degree-additive at (" + labels[i] + "," + labels[j] +
                               ")";
            }
        for (std::size_t i = 0; i < n; ++i) {
            if (mul(unit, basis_vec(i)) != basis_vec(i) || mul(basis_vec(i), unit) != basis_vec(i))
                return "unit law fails at " + labels[i];
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    QVec lhs = mul(mult[i][j], basis_vec(k));
                    QVec rhs = mul(basis_vec(i), mult[j][k]);
                    if (lhs != rhs)
                        return "associativity fails at (" + labels[i] + "," + labels[j] + "," +
                               labels[k] + ")";
                }
        }
        return std::nullopt;
    }
};

// Bounded-degree truncation of R = kQ/I as a structure-constant algebra.
// Products that would exceed the bound are cut to zero.
inline FDAlgebra truncate_presentation(PresentationBasis& pb, int bound) {
    FDAlgebra a;
    std::vector<std::pair<int, std::size_t>> index;  // (degree, position in that degree)
    for (int d = 0; d <= bound; ++d) {
        for (std::size_t i = 0; i < pb.dim(d); ++i) {
            a.labels.push_back(path_label(pb.quiver(), pb.basis(d)[i]));
            a.degrees.push_back(0);
            a.internal_degrees.push_back(d);
            index.emplace_back(d, i);
        }
    }
    std::size_t n = a.labels.size();
    a.unit.assign(n, Rational(0));
    for (std::size_t k = 0; k < n; ++k)
        if (index[k].first == 0) a.unit[k] = Rational(1);

    std::vector<std::size_t> offset(bound + 2, 0);
    for (int d = 0; d <= bound; ++d) offset[d + 1] = offset[d] + pb.dim(d);

    a.mult.assign(n, std::vector<QVec>(n, QVec(n)));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            auto [d1, i] = index[p];
            auto [d2, j] = index[q];
            if (d1 + d2 > bound) continue;
            QVec c = pb.mul_basis(d1, i, d2, j);
            for (std::size_t k = 0; k < c.size(); ++k)
                if (!c[k].is_zero()) a.mult[p][q][offset[d1 + d2] + k] = c[k];
        }

    // Generators: vertex idempotents and arrows, reduced into the basis.
    for (std::size_t v = 0; v < pb.quiver().vertices().size(); ++v) {
        QVec g(n);
        QVec c = pb.reduce_path(0, Path::vertex(v));
        for (std::size_t k = 0; k < c.size(); ++k) g[offset[0] + k] = c[k];
        a.generators.push_back(std::move(g));
    }
    for (std::size_t ar = 0; ar < pb.quiver().arrows().size(); ++ar) {
        int d = pb.quiver().arrows()[ar].ndeg;
        if (d > bound) continue;
        QVec g(n);
        QVec c = pb.reduce_path(d, Path::of_arrow(pb.quiver(), ar));
        for (std::size_t k = 0; k < c.size(); ++k) g[offset[d] + k] = c[k];
        a.generators.push_back(std::move(g));
    }
    return a;
}

// Finite-dimensional left module over an FDAlgebra, given by one action
// matrix per algebra basis element. Basis vectors carry the same two
// gradings as the algebra.
struct ModuleRep {
    std::vector<int> degrees;
    std::vector<int> internal_degrees;
    std::vector<MatrixQ> action;

    std::size_t dim() const { return degrees.size(); }

    MatrixQ act(const FDAlgebra& a, const QVec& x) const {
        MatrixQ m(dim(), dim());
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!x[i].is_zero()) m = m + x[i] * action[i];
        return m;
    }

    std::optional<std::string> verify(const FDAlgebra& a) const {
        if (action.size() != a.dim()) return "one action matrix per algebra basis element";
        for (const auto& m : action)
            if (m.rows() != dim() || m.cols() != dim()) return "action matrix size mismatch";
        if (!(act(a, a.unit) == MatrixQ::identity(dim()))) return "unit does not act as identity";
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j) {
                MatrixQ lhs = action[i] * action[j];
                MatrixQ rhs = act(a, a.mult[i][j]);
                if (!(lhs == rhs))
                    return "module law fails at (" + a.labels[i] + "," + a.labels[j] + ")";
            }
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t r = 0; r < dim(); ++r)
                for (std::size_t c = 0; c < dim(); ++c)
                    if (!action[i](r, c).is_zero() &&
                        (degrees[r] != degrees[c] + a.degrees[i] ||
                         internal_degrees[r] != internal_degrees[c] + a.internal_degrees[i]))
                        return "action of " + a.labels[i] + " is not graded";
        return std::nullopt;
    }
};

// The left regular module.
inline ModuleRep regular_module(const FDAlgebra& a) {
    ModuleRep m;
    m.degrees = a.degrees;
    m.internal_degrees = a.internal_degrees;
    for (std::size_t i = 0; i < a.dim(); ++i) m.action.push_back(a.left_mult(a.basis_vec(i)));
    return m;
}

// Basis of the space of A-linear maps M -> N (all degrees of maps). Maps are
// strictly A-linear; Koszul signs enter only through the twisted composition
// product, following the convention f*g = (-1)^{|f||g|} g o f.
struct HomBasis {
    std::vector<MatrixQ> maps;
    std::vector<int> coh_shift;
    std::vector<int> internal_shift;

    std::size_t size() const { return maps.size(); }
};

inline HomBasis hom_space(const FDAlgebra& a, const ModuleRep& m, const ModuleRep& n) {
    HomBasis out;
    std::size_t dm = m.dim(), dn = n.dim();
    if (dm == 0 || dn == 0) return out;

    // Precompute generator action matrices and degrees.
    std::vector<MatrixQ> gm, gn;
    std::vector<std::pair<int, int>> gdeg;
    for (const QVec& g : a.generating_set()) {
        gm.push_back(m.act(a, g));
        gn.push_back(n.act(a, g));
        gdeg.push_back(a.element_degree(g));
    }

    // Unknown entries F[nu, mu] grouped by the (coh, internal) shift.
    std::map<std::pair<int, int>, std::vector<std::pair<std::size_t, std::size_t>>> blocks;
    for (std::size_t nu = 0; nu < dn; ++nu)
        for (std::size_t mu = 0; mu < dm; ++mu)
            blocks[{n.degrees[nu] - m.degrees[mu],
                    n.internal_degrees[nu] - m.internal_degrees[mu]}]
                .emplace_back(nu, mu);

    for (const auto& [shift, unknowns] : blocks) {
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> pos;
        for (std::size_t u = 0; u < unknowns.size(); ++u) pos.emplace(unknowns[u], u);
        RowSpace rows(unknowns.size());
        for (std::size_t g = 0; g < gm.size(); ++g) {
            for (std::size_t mu = 0; mu < dm; ++mu) {
                for (std::size_t nu2 = 0; nu2 < dn; ++nu2) {
                    // Equation for coordinate nu2 of F(g.mu) - g.F(mu).
                    if (n.degrees[nu2] != m.degrees[mu] + gdeg[g].first + shift.first ||
                        n.internal_degrees[nu2] !=
                            m.internal_degrees[mu] + gdeg[g].second + shift.second)
                        continue;
                    QVec row(unknowns.size());
                    bool nonzero = false;
                    for (std::size_t nu = 0; nu < dn; ++nu) {
                        if (gn[g](nu2, nu).is_zero()) continue;
                        auto it = pos.find({nu, mu});
                        if (it == pos.end()) continue;
                        row[it->second] -= gn[g](nu2, nu);
                        nonzero = true;
                    }
                    for (std::size_t mu2 = 0; mu2 < dm; ++mu2) {
                        if (gm[g](mu2, mu).is_zero()) continue;
                        auto it = pos.find({nu2, mu2});
                        if (it == pos.end()) continue;
                        row[it->second] += gm[g](mu2, mu);
                        nonzero = true;
                    }
                    if (nonzero) rows.add_row(std::move(row));
                }
            }
        }
        for (const QVec& v : rows.kernel()) {
            MatrixQ f(dn, dm);
            for (std::size_t u = 0; u < unknowns.size(); ++u)
                f(unknowns[u].first, unknowns[u].second) = v[u];
            out.maps.push_back(std::move(f));
            out.coh_shift.push_back(shift.first);
            out.internal_shift.push_back(shift.second);
        }
    }
    return out;
}

inline QVec vectorize(const MatrixQ& m) {
    QVec v(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m(i, j);
    return v;
}

// Expresses matrices in the coordinates of a HomBasis.
class HomCoordinates {
public:
    explicit HomCoordinates(const HomBasis& basis)
        : basis_(&basis), sys_(make_matrix(basis)) {}

    std::optional<QVec> coords(const MatrixQ& f) const { return sys_.solve(vectorize(f)); }

    // Coordinates or throw; most call sites expect membership.
    QVec coords_checked(const MatrixQ& f, const char* what) const {
        auto c = coords(f);
        if (!c) throw std::logic_error(std::string(what) + ": map lies outside the Hom space");
        return *c;
    }

private:
    static MatrixQ make_matrix(const HomBasis& basis) {
        if (basis.size() == 0) return MatrixQ(0, 0);
        std::size_t len = basis.maps[0].rows() * basis.maps[0].cols();
        MatrixQ m(len, basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j) m.set_col(j, vectorize(basis.maps[j]));
        return m;
    }

    const HomBasis* basis_;
    SolvedSystem sys_;
};

// Endomorphism algebra End_A(M) with the twisted product f*g = (-1)^{|f||g|} g o f.
inline FDAlgebra hom_star_algebra(const HomBasis& homs) {
    FDAlgebra e;
    std::size_t n = homs.size();
    if (n == 0) throw std::invalid_argument("hom_star_algebra: empty Hom space");
    HomCoordinates hc(homs);
    e.labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) e.labels[i] = "f" + std::to_string(i);
    e.degrees = homs.coh_shift;
    e.internal_degrees = homs.internal_shift;
    e.mult.assign(n, std::vector<QVec>(n, QVec(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            MatrixQ prod = homs.maps[j] * homs.maps[i];  // g o f
            if ((homs.coh_shift[i] * homs.coh_shift[j]) % 2 != 0) prod = Rational(-1) * prod;
            e.mult[i][j] = hc.coords_checked(prod, "hom_star_algebra");
        }
    e.unit = hc.coords_checked(MatrixQ::identity(homs.maps[0].rows()), "hom_star_algebra unit");
    return e;
}

}  // namespace smashext
