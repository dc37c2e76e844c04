#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "smashext/graded_basis.hpp"
#include "smashext/quiver.hpp"

using namespace smashext;

TEST_CASE("path enumeration on loops") {
    Quiver q({"v"}, {{"x", 0, 0}, {"y", 0, 0}, {"z", 0, 0}});
    CHECK(enumerate_paths(q, 2).size() == 9);
    auto d0 = enumerate_paths(q, 0);
    REQUIRE(d0.size() == 1);
    CHECK(d0[0].is_vertex());
}

TEST_CASE("degree zero paths are one idempotent per vertex") {
    Quiver q({"a", "b", "c"}, {{"f", 0, 1}, {"g", 1, 2}});
    auto d0 = enumerate_paths(q, 0);
    REQUIRE(d0.size() == 3);
    for (std::size_t v = 0; v < 3; ++v) CHECK(d0[v].src == v);
    auto d2 = enumerate_paths(q, 2);
    REQUIRE(d2.size() == 1);
    CHECK(d2[0].src == 0);
    CHECK(d2[0].tgt == 2);
}

TEST_CASE("word display order matches composition order") {
    Quiver q({"v"}, {{"x", 0, 0}, {"y", 0, 0}});
    Path xy = *compose(Path::of_arrow(q, 0), Path::of_arrow(q, 1));  // y first
    CHECK(path_label(q, xy) == "x.y");
    CHECK(xy.traversal == std::vector<std::size_t>{1, 0});
}

TEST_CASE("graded basis of the polynomial algebra") {
    PresentationBasis b(testhelpers::kxyz());
    CHECK(b.dim(0) == 1);
    CHECK(b.dim(2) == 6);
    CHECK(b.hilbert_function(5) ==
          std::vector<std::size_t>{1, 3, 6, 10, 15, 21});
}

TEST_CASE("free algebra has all paths as basis") {
    Quiver q({"v"}, {{"x", 0, 0}, {"y", 0, 0}, {"z", 0, 0}});
    PresentationBasis b(Presentation(q, {}));
    CHECK(b.hilbert_function(3) == std::vector<std::size_t>{1, 3, 9, 27});
}

TEST_CASE("normal forms in k[x,y,z]") {
    auto pres = testhelpers::kxyz();
    PresentationBasis b(pres);
    const Quiver& q = b.quiver();

    PathElement rel = testhelpers::word_element(q, Rational(1), {"x", "y"}) +
                      testhelpers::word_element(q, Rational(-1), {"y", "x"});
    CHECK(is_zero(b.normal_form(rel, 2)));

    // A chosen basis monomial reduces to its own indicator.
    const auto& mons = b.basis(2);
    for (std::size_t i = 0; i < mons.size(); ++i) {
        QVec v = b.reduce_path(2, mons[i]);
        for (std::size_t j = 0; j < v.size(); ++j)
            CHECK(v[j] == (i == j ? Rational(1) : Rational(0)));
    }

    // yx and xy land on the same coordinates.
    auto xy = testhelpers::word_element(q, Rational(1), {"x", "y"});
    auto yx = testhelpers::word_element(q, Rational(1), {"y", "x"});
    CHECK(b.normal_form(xy, 2) == b.normal_form(yx, 2));

    CHECK_THROWS(b.normal_form(xy + testhelpers::word_element(q, Rational(1), {"x"}), 2));
}

TEST_CASE("basis dimension does not depend on arrow declaration order") {
    auto pres = testhelpers::kxyz();
    // Re-declare arrows reversed: z, y, x.
    Quiver q2({"v"}, {{"z", 0, 0}, {"y", 0, 0}, {"x", 0, 0}});
    auto w = [&](const char* a, const char* bl) {
        return *compose(Path::of_arrow(q2, q2.arrow_index(a)),
                        Path::of_arrow(q2, q2.arrow_index(bl)));
    };
    std::vector<PathElement> rels = {
        PathElement({{Rational(1), w("x", "y")}, {Rational(-1), w("y", "x")}}),
        PathElement({{Rational(1), w("x", "z")}, {Rational(-1), w("z", "x")}}),
        PathElement({{Rational(1), w("z", "y")}, {Rational(-1), w("y", "z")}}),
    };
    PresentationBasis b1(pres), b2(Presentation(q2, rels, 2));
    for (int d = 0; d <= 5; ++d) CHECK(b1.dim(d) == b2.dim(d));
}

TEST_CASE("multiplication through normal forms is associative") {
    testhelpers::Rng rng(5);
    PresentationBasis b(testhelpers::kxyz());
    for (int t = 0; t < 30; ++t) {
        int d1 = 1 + static_cast<int>(rng.below(2));
        int d2 = 1 + static_cast<int>(rng.below(2));
        int d3 = 1 + static_cast<int>(rng.below(2));
        std::size_t i = rng.below(b.dim(d1)), j = rng.below(b.dim(d2)), k = rng.below(b.dim(d3));
        // nf(nf(ab) c) vs nf(a nf(bc)) computed through coordinates
        QVec ab = b.mul_basis(d1, i, d2, j);
        QVec bc = b.mul_basis(d2, j, d3, k);
        QVec left(b.dim(d1 + d2 + d3)), right(b.dim(d1 + d2 + d3));
        for (std::size_t m = 0; m < ab.size(); ++m)
            if (!ab[m].is_zero()) axpy(left, ab[m], b.mul_basis(d1 + d2, m, d3, k));
        for (std::size_t m = 0; m < bc.size(); ++m)
            if (!bc[m].is_zero()) axpy(right, bc[m], b.mul_basis(d1, i, d2 + d3, m));
        CHECK(left == right);
    }
}

TEST_CASE("g-homogeneity report") {
    auto pres = testhelpers::kxyz(3);
    auto rep = check_g_homogeneity(pres);
    CHECK(rep.ok);
    // every relation sits in G-degree g^2
    for (auto g : rep.relation_gdeg) CHECK(g == 2);

    // xyz has total gdeg identity
    const Quiver& q = pres.quiver();
    Path xyz = *compose(Path::of_arrow(q, 0), *compose(Path::of_arrow(q, 1), Path::of_arrow(q, 2)));
    CHECK(path_gdeg(q, xyz) == q.group()->identity());

    // vertex idempotents have identity gdeg
    CHECK(path_gdeg(q, Path::vertex(0)) == q.group()->identity());

    // x*y - z*z with gdeg(z) = e fails
    FiniteGroup g3 = FiniteGroup::cyclic(3);
    Quiver qbad({"v"}, {{"x", 0, 0, 1, 1}, {"y", 0, 0, 1, 1}, {"z", 0, 0, 1, 0}}, g3);
    PathElement bad = testhelpers::word_element(qbad, Rational(1), {"x", "y"}) +
                      testhelpers::word_element(qbad, Rational(-1), {"z", "z"});
    Presentation pbad(qbad, {bad});
    auto rep2 = check_g_homogeneity(pbad);
    CHECK(!rep2.ok);
    CHECK(!rep2.message.empty());
}

TEST_CASE("relation-free presentations count all paths") {
    Quiver q({"v"}, {{"x", 0, 0}, {"y", 0, 0}});
    PresentationBasis b(Presentation(q, {}));
    for (int d = 0; d <= 6; ++d)
        CHECK(b.dim(d) == enumerate_paths(q, d).size());
}
