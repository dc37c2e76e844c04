#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "smashext/hopf.hpp"

using namespace smashext;

namespace {

// Linear dual of a Hopf algebra: transpose every structure map. Oracle only.
HopfAlgebraSC dual_hopf(const HopfAlgebraSC& h) {
    HopfAlgebraSC d;
    std::size_t n = h.dim;
    d.dim = n;
    d.labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) d.labels[i] = h.labels[i] + "*";
    d.mult.assign(n, std::vector<QVec>(n, QVec(n)));
    d.comult.assign(n, MatrixQ(n, n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                d.mult[i][j][k] = h.comult[k](i, j);  // dual mult = comult transpose
                d.comult[i](j, k) = h.mult[j][k][i];  // dual comult = mult transpose
            }
        }
    d.unit = h.counit;
    d.counit = h.unit;
    d.antipode = h.antipode.transpose();
    d.antipode_inverse = d.antipode;
    return d;
}

bool same_structure(const HopfAlgebraSC& a, const HopfAlgebraSC& b) {
    if (a.dim != b.dim || a.unit != b.unit || a.counit != b.counit) return false;
    for (std::size_t i = 0; i < a.dim; ++i) {
        if (!(a.comult[i] == b.comult[i])) return false;
        for (std::size_t j = 0; j < a.dim; ++j)
            if (a.mult[i][j] != b.mult[i][j]) return false;
    }
    return a.antipode == b.antipode;
}

}  // namespace

TEST_CASE("group algebras satisfy the Hopf axioms") {
    for (std::size_t n : {1u, 2u, 3u, 4u, 6u}) {
        auto h = group_algebra(FiniteGroup::cyclic(n));
        auto rep = verify_hopf_axioms(h);
        INFO("kZ/" << n);
        CHECK(rep.ok);
    }
    auto klein = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    auto h = group_algebra(klein);
    CHECK(verify_hopf_axioms(h).ok);
}

TEST_CASE("dual group algebras satisfy the Hopf axioms") {
    for (std::size_t n : {1u, 2u, 3u, 4u, 6u}) {
        auto h = dual_group_algebra(FiniteGroup::cyclic(n));
        auto rep = verify_hopf_axioms(h);
        INFO("k(Z/" << n << ")*");
        CHECK(rep.ok);
    }
}

TEST_CASE("kZ/3 comultiplication and antipode") {
    auto g3 = FiniteGroup::cyclic(3);
    auto h = group_algebra(g3);
    // D(g) = g (x) g
    CHECK(h.comult[1](1, 1) == Rational(1));
    // S(g) = g^2
    CHECK(h.antipode(2, 1) == Rational(1));
}

TEST_CASE("dual kZ/3 comultiplication enumerates factorizations") {
    auto g3 = FiniteGroup::cyclic(3);
    auto h = dual_group_algebra(g3);
    // D(p_e) = p_e (x) p_e + p_g (x) p_g2 + p_g2 (x) p_g
    MatrixQ want(3, 3);
    want(0, 0) = Rational(1);
    want(1, 2) = Rational(1);
    want(2, 1) = Rational(1);
    CHECK(h.comult[0] == want);
}

TEST_CASE("dual group algebra equals transposed dual of the group algebra") {
    for (std::size_t n : {2u, 3u, 4u}) {
        auto g = FiniteGroup::cyclic(n);
        auto d1 = dual_group_algebra(g);
        auto d2 = dual_hopf(group_algebra(g));
        CHECK(same_structure(d1, d2));
    }
    auto klein = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    CHECK(same_structure(dual_group_algebra(klein), dual_hopf(group_algebra(klein))));
}

TEST_CASE("broken antipode is reported with a witness") {
    auto h = group_algebra(FiniteGroup::cyclic(3));
    h.antipode = MatrixQ::identity(3);
    auto rep = verify_hopf_axioms(h);
    CHECK(!rep.ok);
    bool antipode_failure = false;
    for (const auto& f : rep.failures)
        if (f.find("antipode law") != std::string::npos) antipode_failure = true;
    CHECK(antipode_failure);
}

TEST_CASE("antipodes of kG and kG* are involutions") {
    for (std::size_t n : {1u, 2u, 3u, 4u, 6u}) {
        auto g = FiniteGroup::cyclic(n);
        auto h1 = group_algebra(g);
        auto h2 = dual_group_algebra(g);
        CHECK(h1.antipode * h1.antipode == MatrixQ::identity(n));
        CHECK(h2.antipode * h2.antipode == MatrixQ::identity(n));
    }
}

TEST_CASE("counit composed with antipode is the counit; S fixes 1") {
    for (std::size_t n : {2u, 3u, 4u}) {
        auto g = FiniteGroup::cyclic(n);
        for (auto h : {group_algebra(g), dual_group_algebra(g)}) {
            QVec s1 = h.antipode * h.unit;
            CHECK(s1 == h.unit);
            for (std::size_t i = 0; i < h.dim; ++i)
                CHECK(h.eps(h.antipode.col(i)) == h.counit[i]);
        }
    }
}

TEST_CASE("left integrals") {
    auto g3 = FiniteGroup::cyclic(3);
    auto kg = group_algebra(g3);
    auto c1 = left_integral(kg);
    CHECK(c1.semisimple);
    CHECK(c1.normalized);
    for (std::size_t i = 0; i < 3; ++i) CHECK(c1.element[i] == Rational(1, 3));

    auto kgs = dual_group_algebra(g3);
    auto c2 = left_integral(kgs);
    CHECK(c2.semisimple);
    QVec pe(3);
    pe[0] = Rational(1);
    CHECK(c2.element == pe);

    auto k1 = group_algebra(FiniteGroup::cyclic(1));
    auto c3 = left_integral(k1);
    CHECK(c3.semisimple);
    CHECK(c3.element == QVec{Rational(1)});
}

TEST_CASE("invariants: trivial action returns everything") {
    auto h = group_algebra(FiniteGroup::cyclic(3));
    std::vector<MatrixQ> act;
    for (std::size_t i = 0; i < 3; ++i) act.push_back(h.counit[i] * MatrixQ::identity(4));
    auto inv = invariants(h, act);
    CHECK(inv.basis.size() == 4);
    CHECK(inv.projector_agrees);
}

TEST_CASE("invariants of a graded space under k(Z/3)*") {
    auto g3 = FiniteGroup::cyclic(3);
    auto h = dual_group_algebra(g3);
    // X = k^3 graded by Z/3, p_g acting as projection on the g-component.
    std::vector<MatrixQ> act(3, MatrixQ(3, 3));
    for (std::size_t g = 0; g < 3; ++g) act[g](g, g) = Rational(1);
    auto inv = invariants(h, act);
    REQUIRE(inv.basis.size() == 1);
    CHECK(inv.basis[0][0] == Rational(1));
    CHECK(inv.projector_agrees);
}

TEST_CASE("invariants of the regular kZ/2 action") {
    auto g2 = FiniteGroup::cyclic(2);
    auto h = group_algebra(g2);
    std::vector<MatrixQ> act = {h.left_mult_matrix(0), h.left_mult_matrix(1)};
    auto inv = invariants(h, act);
    REQUIRE(inv.basis.size() == 1);
    CHECK(inv.basis[0][0] == inv.basis[0][1]);  // span(1 + g)
    CHECK(inv.projector_agrees);
}

TEST_CASE("invariants rejects non-modules") {
    auto h = group_algebra(FiniteGroup::cyclic(2));
    std::vector<MatrixQ> bad = {MatrixQ::identity(2), Rational(2) * MatrixQ::identity(2)};
    CHECK_THROWS(invariants(h, bad));
}
