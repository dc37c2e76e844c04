#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "smashext/action.hpp"
#include "smashext/smash.hpp"

using namespace smashext;

namespace {

PresHAction trivial_action(PresentationBasis& pb, const HopfAlgebraSC& h) {
    std::size_t nv = pb.quiver().vertices().size();
    std::size_t na = pb.quiver().arrows().size();
    std::vector<MatrixQ> on_v, on_a;
    for (std::size_t s = 0; s < h.dim; ++s) {
        on_v.push_back(h.counit[s] * MatrixQ::identity(nv));
        on_a.push_back(h.counit[s] * MatrixQ::identity(na));
    }
    return PresHAction(pb, h, std::move(on_v), std::move(on_a));
}

}  // namespace

TEST_CASE("trivial action is a module-algebra action") {
    PresentationBasis pb(testhelpers::kxyz());
    auto h = group_algebra(FiniteGroup::cyclic(3));
    auto act = trivial_action(pb, h);
    CHECK(act.verify(4).ok);
}

TEST_CASE("grading action of k(Z/3)* on k[x,y,z]") {
    PresentationBasis pb(testhelpers::kxyz(3));
    auto g3 = FiniteGroup::cyclic(3);
    auto h = dual_group_algebra(g3);
    auto act = PresHAction::from_grading(pb, h, g3);
    CHECK(act.verify(5).ok);

    // degree 1: p_g is the identity on span(x,y,z), p_e acts by zero
    CHECK(act.matrix(1, 1) == MatrixQ::identity(3));
    CHECK(act.matrix(0, 1) == MatrixQ(3, 3));
    // degree 0: p_e is the identity
    CHECK(act.matrix(0, 0) == MatrixQ::identity(1));
    CHECK(act.matrix(1, 0) == MatrixQ(1, 1));
}

TEST_CASE("unstable ideal is reported") {
    // k<x,y>/(xy) with the kZ/2 swap x <-> y: the swap sends xy to yx,
    // which is not in the ideal.
    Quiver q({"v"}, {{"x", 0, 0}, {"y", 0, 0}});
    PathElement xy = testhelpers::word_element(q, Rational(1), {"x", "y"});
    PresentationBasis pb(Presentation(q, {xy}, 2));
    auto h = group_algebra(FiniteGroup::cyclic(2));
    MatrixQ swap(2, 2);
    swap(0, 1) = Rational(1);
    swap(1, 0) = Rational(1);
    PresHAction act(pb, h, {MatrixQ::identity(1), MatrixQ::identity(1)},
                    {MatrixQ::identity(2), swap});
    auto rep = act.verify(3);
    CHECK(!rep.ok);
    bool stability = false;
    for (const auto& f : rep.failures)
        if (f.find("ideal is not stable") != std::string::npos) stability = true;
    CHECK(stability);
}

TEST_CASE("smash with the trivial Hopf algebra reproduces the base") {
    PresentationBasis pb(testhelpers::kxyz());
    auto h = group_algebra(FiniteGroup::cyclic(1));
    auto act = trivial_action(pb, h);
    SmashAlgebra s = smash_product(pb, h, act, 3);
    FDAlgebra a = truncate_presentation(pb, 3);
    REQUIRE(s.algebra.dim() == a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) CHECK(s.algebra.mult[i][j] == a.mult[i][j]);
}

TEST_CASE("smash dimensions of k[x,y,z] # k(Z/3)*") {
    PresentationBasis pb(testhelpers::kxyz(3));
    auto g3 = FiniteGroup::cyclic(3);
    auto h = dual_group_algebra(g3);
    auto act = PresHAction::from_grading(pb, h, g3);
    SmashAlgebra s = smash_product(pb, h, act, 5, 7);
    CHECK(s.dims == std::vector<std::size_t>{3, 9, 18, 30, 45, 63});
    CHECK(s.associativity_checked);
    CHECK(!s.algebra.verify());
}

TEST_CASE("covering of k[x,y,z] by Z/3") {
    auto pres = testhelpers::kxyz(3);
    auto cov = covering_presentation(pres);
    CHECK(cov.presentation.quiver().vertices().size() == 3);
    CHECK(cov.presentation.quiver().arrows().size() == 9);
    CHECK(cov.presentation.relations().size() == 9);

    // rho' contains x_{i+1} y_i - y_{i+1} x_i for every i
    const Quiver& cq = cov.presentation.quiver();
    for (std::size_t i = 0; i < 3; ++i) {
        std::string xi1 = "x_" + FiniteGroup::cyclic(3).label((i + 1) % 3);
        std::string yi = "y_" + FiniteGroup::cyclic(3).label(i);
        std::string yi1 = "y_" + FiniteGroup::cyclic(3).label((i + 1) % 3);
        std::string xi = "x_" + FiniteGroup::cyclic(3).label(i);
        PathElement want =
            testhelpers::word_element(cq, Rational(1), {xi1.c_str(), yi.c_str()}) +
            testhelpers::word_element(cq, Rational(-1), {yi1.c_str(), xi.c_str()});
        bool found = false;
        for (const auto& r : cov.presentation.relations())
            if (r.monic() == want.monic() || r.monic() == (Rational(-1) * want).monic())
                found = true;
        INFO("looking for " << want.str(cq));
        CHECK(found);
    }

    PresentationBasis sb(cov.presentation);
    CHECK(sb.hilbert_function(3) == std::vector<std::size_t>{3, 9, 18, 30});

    // 9 paths of degree 2 leaving the vertex at group coordinate e, all
    // ending at coordinate g^2
    auto paths = enumerate_paths(cq, 2, {{std::optional<std::size_t>{0}, std::nullopt}});
    CHECK(paths.size() == 9);
    for (const auto& p : paths) CHECK(p.tgt == 2);
}

TEST_CASE("covering with the trivial group is a relabeling") {
    auto pres = testhelpers::kxyz(1);
    auto cov = covering_presentation(pres);
    CHECK(cov.presentation.quiver().vertices().size() == 1);
    CHECK(cov.presentation.quiver().arrows().size() == 3);
    CHECK(cov.presentation.relations().size() == 3);
}

TEST_CASE("covering of k[x,y,z] by Z/2") {
    auto pres = testhelpers::kxyz(2);
    auto cov = covering_presentation(pres);
    CHECK(cov.presentation.quiver().vertices().size() == 2);
    CHECK(cov.presentation.quiver().arrows().size() == 6);
    CHECK(cov.presentation.relations().size() == 6);
    PresentationBasis sb(cov.presentation);
    CHECK(sb.hilbert_function(4) == std::vector<std::size_t>{2, 6, 12, 20, 30});
}

TEST_CASE("covering isomorphism R # kG* = S") {
    for (std::size_t n : {1u, 2u, 3u}) {
        PresentationBasis pb(testhelpers::kxyz(n));
        auto g = FiniteGroup::cyclic(n);
        auto h = dual_group_algebra(g);
        auto act = PresHAction::from_grading(pb, h, g);
        auto rep = verify_covering_iso(pb, h, act, 4);
        INFO("n = " << n);
        CHECK(rep.ok);
    }
}
