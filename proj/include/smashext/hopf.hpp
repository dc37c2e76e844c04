#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "smashext/group.hpp"
#include "smashext/matrix.hpp"

namespace smashext {

// Finite-dimensional Hopf algebra by structure constants over Q.
//  mult[i][j]   : coordinates of b_i * b_j
//  comult[i]    : matrix with entry (j,k) = coefficient of b_j (x) b_k in D(b_i)
//  counit       : functional, counit[i] = eps(b_i)
//  antipode     : matrix, column j = coordinates of S(b_j)
struct HopfAlgebraSC {
    std::size_t dim = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<QVec>> mult;
    QVec unit;
    std::vector<MatrixQ> comult;
    QVec counit;
    MatrixQ antipode;
    MatrixQ antipode_inverse;  // computed on construction/verification

    QVec mul(const QVec& x, const QVec& y) const {
        QVec z(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim; ++j) {
                if (y[j].is_zero()) continue;
                Rational c = x[i] * y[j];
                axpy(z, c, mult[i][j]);
            }
        }
        return z;
    }

    MatrixQ left_mult_matrix(std::size_t i) const {
        MatrixQ m(dim, dim);
        for (std::size_t j = 0; j < dim; ++j) m.set_col(j, mult[i][j]);
        return m;
    }

    Rational eps(const QVec& x) const {
        Rational e;
        for (std::size_t i = 0; i < dim; ++i) e += counit[i] * x[i];
        return e;
    }

    // Sweedler terms of D(b_g) as (coef, h1, h2).
    std::vector<std::tuple<Rational, std::size_t, std::size_t>> sweedler2(std::size_t g) const {
        std::vector<std::tuple<Rational, std::size_t, std::size_t>> out;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                if (!comult[g](i, j).is_zero()) out.emplace_back(comult[g](i, j), i, j);
        return out;
    }

    // Sweedler terms of (D (x) id)D(b_g) as (coef, h1, h2, h3).
    std::vector<std::tuple<Rational, std::size_t, std::size_t, std::size_t>> sweedler3(
        std::size_t g) const {
        std::vector<std::tuple<Rational, std::size_t, std::size_t, std::size_t>> out;
        for (const auto& [c, u, v] : sweedler2(g))
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    if (!comult[u](i, j).is_zero()) out.emplace_back(c * comult[u](i, j), i, j, v);
        return out;
    }

    std::size_t index_of(const std::string& label) const {
        for (std::size_t i = 0; i < dim; ++i)
            if (labels[i] == label) return i;
        throw std::invalid_argument("HopfAlgebraSC: unknown basis label '" + label + "'");
    }
};

struct HopfAxiomReport {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(const std::string& what) {
        ok = false;
        failures.push_back(what);
    }
};

namespace detail {
// Try to invert a square matrix; nullopt when singular.
inline std::optional<MatrixQ> inverse(const MatrixQ& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    std::size_t n = m.rows();
    MatrixQ aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Rational(1);
    }
    RrefResult r = rref(std::move(aug));
    for (std::size_t i = 0; i < n; ++i)
        if (i >= r.pivot_columns.size() || r.pivot_columns[i] != i) return std::nullopt;
    MatrixQ inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
    return inv;
}
}  // namespace detail

// Checks all Hopf axioms on basis elements; reports every violated identity
// with a witness. A passing report also leaves antipode_inverse filled in.
inline HopfAxiomReport verify_hopf_axioms(HopfAlgebraSC& h) {
    HopfAxiomReport rep;
    std::size_t n = h.dim;
    if (h.labels.size() != n || h.mult.size() != n || h.comult.size() != n ||
        h.unit.size() != n || h.counit.size() != n)
        throw std::invalid_argument("verify_hopf_axioms: inconsistent field sizes");

    auto basis = [&](std::size_t i) {
        QVec v(n);
        v[i] = Rational(1);
        return v;
    };

    for (std::size_t i = 0; i < n && rep.ok; ++i)
        for (std::size_t j = 0; j < n && rep.ok; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                QVec lhs = h.mul(h.mult[i][j], basis(k));
                QVec rhs = h.mul(basis(i), h.mult[j][k]);
                if (lhs != rhs) {
                    rep.fail("associativity fails at (" + h.labels[i] + "," + h.labels[j] + "," +
                             h.labels[k] + ")");
                    break;
                }
            }
    for (std::size_t i = 0; i < n; ++i) {
        if (h.mul(h.unit, basis(i)) != basis(i) || h.mul(basis(i), h.unit) != basis(i)) {
            rep.fail("unit law fails at " + h.labels[i]);
            break;
        }
    }

    // Coassociativity: compare coefficient of b_a (x) b_b (x) b_c.
    for (std::size_t g = 0; g < n; ++g) {
        std::vector<Rational> lhs(n * n * n), rhs(n * n * n);
        for (const auto& [c, u, v] : h.sweedler2(g)) {
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    if (!h.comult[u](a, b).is_zero())
                        lhs[(a * n + b) * n + v] += c * h.comult[u](a, b);
                    if (!h.comult[v](a, b).is_zero())
                        rhs[(u * n + a) * n + b] += c * h.comult[v](a, b);
                }
        }
        if (lhs != rhs) {
            rep.fail("coassociativity fails at " + h.labels[g]);
            break;
        }
    }

    for (std::size_t g = 0; g < n; ++g) {
        QVec l(n), r(n);
        for (const auto& [c, u, v] : h.sweedler2(g)) {
            l[v] += c * h.counit[u];
            r[u] += c * h.counit[v];
        }
        if (l != basis(g) || r != basis(g)) {
            rep.fail("counit law fails at " + h.labels[g]);
            break;
        }
    }

    // Comultiplication is an algebra morphism (including on the unit).
    {
        std::vector<Rational> du(n * n);
        for (std::size_t i = 0; i < n; ++i)
            if (!h.unit[i].is_zero())
                for (const auto& [c, u, v] : h.sweedler2(i)) du[u * n + v] += h.unit[i] * c;
        std::vector<Rational> uu(n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) uu[a * n + b] = h.unit[a] * h.unit[b];
        if (du != uu) rep.fail("comultiplication does not preserve the unit");
    }
    for (std::size_t i = 0; i < n && rep.ok; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Rational> lhs(n * n), rhs(n * n);
            for (std::size_t k = 0; k < n; ++k)
                if (!h.mult[i][j][k].is_zero())
                    for (const auto& [c, u, v] : h.sweedler2(k))
                        lhs[u * n + v] += h.mult[i][j][k] * c;
            for (const auto& [c1, u1, v1] : h.sweedler2(i))
                for (const auto& [c2, u2, v2] : h.sweedler2(j)) {
                    const QVec& mu = h.mult[u1][u2];
                    const QVec& mv = h.mult[v1][v2];
                    Rational c = c1 * c2;
                    for (std::size_t a = 0; a < n; ++a) {
                        if (mu[a].is_zero()) continue;
                        for (std::size_t b = 0; b < n; ++b)
                            if (!mv[b].is_zero()) rhs[a * n + b] += c * mu[a] * mv[b];
                    }
                }
            if (lhs != rhs) {
                rep.fail("comultiplication is not multiplicative at (" + h.labels[i] + "," +
                         h.labels[j] + ")");
                break;
            }
        }

    for (std::size_t i = 0; i < n && rep.ok; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational lhs = h.eps(h.mult[i][j]);
            if (lhs != h.counit[i] * h.counit[j]) {
                rep.fail("counit is not multiplicative at (" + h.labels[i] + "," + h.labels[j] +
                         ")");
                break;
            }
        }
    if (h.eps(h.unit) != Rational(1)) rep.fail("counit does not send 1 to 1");

    // Antipode law: m(S (x) id)D = u eps = m(id (x) S)D.
    for (std::size_t g = 0; g < n; ++g) {
        QVec l(n), r(n);
        for (const auto& [c, u, v] : h.sweedler2(g)) {
            axpy(l, c, h.mul(h.antipode.col(u), basis(v)));
            axpy(r, c, h.mul(basis(u), h.antipode.col(v)));
        }
        QVec want(n);
        axpy(want, h.counit[g], h.unit);
        if (l != want || r != want) {
            rep.fail("antipode law fails at " + h.labels[g]);
            break;
        }
    }

    if (auto inv = detail::inverse(h.antipode))
        h.antipode_inverse = *inv;
    else
        rep.fail("antipode matrix is singular");

    return rep;
}

// Group algebra kG: basis = group elements, D(g) = g (x) g, S(g) = g^{-1}.
inline HopfAlgebraSC group_algebra(const FiniteGroup& g) {
    HopfAlgebraSC h;
    std::size_t n = g.order();
    h.dim = n;
    h.labels = g.labels();
    h.mult.assign(n, std::vector<QVec>(n, QVec(n)));
    h.unit = QVec(n);
    h.unit[g.identity()] = Rational(1);
    h.comult.assign(n, MatrixQ(n, n));
    h.counit.assign(n, Rational(1));
    h.antipode = MatrixQ(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) h.mult[a][b][g.mul(a, b)] = Rational(1);
        h.comult[a](a, a) = Rational(1);
        h.antipode(g.inverse(a), a) = Rational(1);
    }
    h.antipode_inverse = h.antipode;  // overwritten by verification
    return h;
}

// Dual group algebra kG*: basis p_g of delta functions.
inline HopfAlgebraSC dual_group_algebra(const FiniteGroup& g) {
    HopfAlgebraSC h;
    std::size_t n = g.order();
    h.dim = n;
    h.labels.resize(n);
    for (std::size_t a = 0; a < n; ++a) h.labels[a] = "p_" + g.label(a);
    h.mult.assign(n, std::vector<QVec>(n, QVec(n)));
    h.unit.assign(n, Rational(1));
    h.comult.assign(n, MatrixQ(n, n));
    h.counit.assign(n, Rational(0));
    h.counit[g.identity()] = Rational(1);
    h.antipode = MatrixQ(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        h.mult[a][a][a] = Rational(1);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (g.mul(x, y) == a) h.comult[a](x, y) = Rational(1);
        h.antipode(g.inverse(a), a) = Rational(1);
    }
    h.antipode_inverse = h.antipode;
    return h;
}

struct IntegralCertificate {
    QVec element;       // a left integral
    bool normalized = false;  // eps(element) = 1
    bool semisimple = false;  // eps on the integral space is nonzero
};

// Left integral: solves h*x = eps(h)x over all basis h. Semisimplicity in
// characteristic zero is decided by eps(integral) != 0 (Larson-Radford);
// when nonzero the integral is rescaled to eps = 1.
inline IntegralCertificate left_integral(const HopfAlgebraSC& h) {
    std::size_t n = h.dim;
    MatrixQ stacked(n * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        MatrixQ li = h.left_mult_matrix(i);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                Rational v = li(r, c);
                if (r == c) v -= h.counit[i];
                stacked(i * n + r, c) = v;
            }
    }
    auto ker = kernel_basis(stacked);
    if (ker.empty())
        throw std::logic_error(
            "left_integral: empty integral space (input is not a finite-dimensional Hopf algebra)");
    IntegralCertificate cert;
    for (const auto& v : ker) {
        Rational e = h.eps(v);
        if (!e.is_zero()) {
            cert.element = v;
            Rational inv = e.inv();
            for (auto& x : cert.element) x *= inv;
            cert.normalized = true;
            cert.semisimple = true;
            return cert;
        }
    }
    cert.element = ker.front();
    return cert;
}

struct InvariantsResult {
    std::vector<QVec> basis;  // basis of X^H
    bool projector_agrees = false;
};

// X^H = {x : h.x = eps(h)x}, solved as one stacked eigen-system. The
// normalized-integral projector x -> integral.x is cross-checked against the
// solution space.
inline InvariantsResult invariants(const HopfAlgebraSC& h, const std::vector<MatrixQ>& action,
                                   bool check_module = true) {
    if (action.size() != h.dim) throw std::invalid_argument("invariants: one matrix per basis element");
    std::size_t xd = action.empty() ? 0 : action[0].rows();
    for (const auto& m : action)
        if (m.rows() != xd || m.cols() != xd)
            throw std::invalid_argument("invariants: action matrices must be square, equal size");

    if (check_module) {
        MatrixQ u(xd, xd);
        for (std::size_t i = 0; i < h.dim; ++i)
            if (!h.unit[i].is_zero()) u = u + h.unit[i] * action[i];
        if (!(u == MatrixQ::identity(xd)))
            throw std::invalid_argument("invariants: action does not respect the unit");
        for (std::size_t i = 0; i < h.dim; ++i)
            for (std::size_t j = 0; j < h.dim; ++j) {
                MatrixQ prod = action[i] * action[j];
                MatrixQ want(xd, xd);
                for (std::size_t k = 0; k < h.dim; ++k)
                    if (!h.mult[i][j][k].is_zero()) want = want + h.mult[i][j][k] * action[k];
                if (!(prod == want))
                    throw std::invalid_argument("invariants: action is not an H-module at (" +
                                                h.labels[i] + "," + h.labels[j] + ")");
            }
    }

    MatrixQ stacked(h.dim * xd, xd);
    for (std::size_t i = 0; i < h.dim; ++i)
        for (std::size_t r = 0; r < xd; ++r)
            for (std::size_t c = 0; c < xd; ++c) {
                Rational v = action[i](r, c);
                if (r == c) v -= h.counit[i];
                stacked(i * xd + r, c) = v;
            }
    InvariantsResult res;
    res.basis = kernel_basis(stacked);

    IntegralCertificate cert = left_integral(h);
    if (cert.semisimple) {
        MatrixQ proj(xd, xd);
        for (std::size_t i = 0; i < h.dim; ++i)
            if (!cert.element[i].is_zero()) proj = proj + cert.element[i] * action[i];
        bool ok = true;
        // Image of the projector inside the solution space...
        RowSpace sol(xd);
        for (const auto& v : res.basis) sol.add_row(v);
        for (std::size_t j = 0; j < xd && ok; ++j) ok = sol.contains(proj.col(j));
        // ...and the projector restricted to the solution space is identity.
        for (const auto& v : res.basis)
            if (ok && proj * v != v) ok = false;
        res.projector_agrees = ok;
    }
    return res;
}

}  // namespace smashext
