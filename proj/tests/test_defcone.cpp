#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "teslerforge/defcone.hpp"
#include "teslerforge/tesler.hpp"
#include "oracle_helpers.hpp"
#include "test_util.hpp"

using namespace teslerforge;
using namespace teslerforge::defcone;
using testutil::hv;
using testutil::tilde;
using testutil::tri;

namespace {

// Worked example: a = (8,7,8,1) with the fixed projected matrix below is a
// deforming vector for the unit 4x4 Tesler polytope.
DeformingVector example_dv() {
    return {hv({8, 7, 8, 1}), tilde({{-1, 2, -3, -4}, {-5, 6, 7}, {-8, 9}})};
}

DeformingVector sample_dv(testutil::RatSampler& sampler, int n) {
    DeformingVector dv{HookVector(), TildeUpperTri(n)};
    for (int i = 0; i < n; ++i) dv.a.push_back(sampler.rat(-2, 2, 2));
    for (int i = 1; i <= n - 1; ++i) {
        for (int j = i; j <= n; ++j) dv.btilde.set(i, j, sampler.rat(-2, 2, 2));
    }
    return dv;
}

polyhedra::DeformCheck oracle_check(const HookVector& base, const DeformingVector& dv) {
    const polyhedra::HRep h = tesler_hrep(base);
    const polyhedra::VRep v = polyhedra::enumerate_vertices(h);
    return polyhedra::is_deformation(h, v, dv.a, dv.btilde.flat());
}

}  // namespace

TEST_CASE("cone membership goldens") {
    CHECK(cone_contains(example_dv()));

    CHECK(cone_contains({hv({2, 0, 1}), TildeUpperTri(3)}));  // zero matrix, nonnegative a

    DeformingVector bad{hv({0, 0}), TildeUpperTri(2)};
    bad.btilde.set(1, 1, Rat(-1));  // first hook sum -1 < 0 = -a_1
    CHECK_FALSE(cone_contains(bad));
}

TEST_CASE("Q(a, btilde) reuses the Tesler constraint matrix") {
    const DeformingVector dv = example_dv();
    const polyhedra::HRep q = q_polytope(dv);
    const polyhedra::HRep t = tesler_hrep(dv.a);
    CHECK(q.dim == t.dim);
    CHECK(q.eq.size() == 4);
    CHECK(q.ineq.size() == 9);
    for (std::size_t k = 0; k < q.ineq.size(); ++k) {
        CHECK(q.ineq[k].coeffs == t.ineq[k].coeffs);
        CHECK(q.ineq[k].rhs == dv.btilde.flat()[k]);
    }

    // zero right-hand side reproduces the Tesler polytope itself
    const DeformingVector self{hv({1, 2, 3}), TildeUpperTri(3)};
    const polyhedra::HRep qs = q_polytope(self);
    const polyhedra::HRep ts = tesler_hrep(self.a);
    for (std::size_t k = 0; k < qs.ineq.size(); ++k) CHECK(qs.ineq[k].rhs == ts.ineq[k].rhs);
}

TEST_CASE("translate goldens") {
    SUBCASE("zero matrix part shifts only the corner") {
        const DeformingVector dv{hv({3, 2, 5}), TildeUpperTri(3)};
        const TeslerTranslate t = tesler_translate(dv);
        CHECK(t.hook_sums == hv({3, 2, 0}));
        UpperTri expected(3);
        expected.set(3, 3, Rat(5));
        CHECK(t.shift == expected);

        const auto q = polyhedra::enumerate_vertices(q_polytope(dv));
        const auto base = polyhedra::enumerate_vertices(tesler_hrep(t.hook_sums));
        CHECK(q.vertices == testutil::translated(base.vertices, t.shift.flat()));
    }

    SUBCASE("zero vector gives the origin") {
        const DeformingVector dv{hv({0, 0}), TildeUpperTri(2)};
        const TeslerTranslate t = tesler_translate(dv);
        CHECK(t.hook_sums == hv({0, 0}));
        CHECK(t.shift == UpperTri(2));
        const auto q = polyhedra::enumerate_vertices(q_polytope(dv));
        REQUIRE(q.vertices.size() == 1);
        CHECK(q.vertices[0] == RatVector{0, 0, 0});
    }

    SUBCASE("worked 4x4 example") {
        const TeslerTranslate t = tesler_translate(example_dv());
        CHECK(t.hook_sums == hv({2, 13, 6, 0}));
        const auto q = polyhedra::enumerate_vertices(q_polytope(example_dv()));
        const auto base = polyhedra::enumerate_vertices(tesler_hrep(t.hook_sums));
        CHECK(q.vertices == testutil::translated(base.vertices, t.shift.flat()));
    }

    SUBCASE("outside the cone") {
        DeformingVector dv{hv({0, 0}), TildeUpperTri(2)};
        dv.btilde.set(1, 2, Rat(-1));
        CHECK_THROWS_AS(tesler_translate(dv), Error);
    }
}

TEST_CASE("golden vertex correspondence") {
    const UpperTri v = tri({{0, 1, 0, 0}, {0, 2, 0}, {3, 0}, {1}});
    const UpperTri image = deform_vertex(v, example_dv());
    CHECK(image == tri({{1, 0, 3, 4}, {5, 9, -7}, {29, -9}, {-11}}));

    // the image lies in Q(a, btilde): right hook sums, entries above -btilde
    const DeformingVector dv = example_dv();
    CHECK(hook_vector(image) == dv.a);
    for (int i = 1; i <= 4; ++i) {
        for (int j = i; j <= 4; ++j) {
            if (i == 4 && j == 4) continue;
            CHECK(-image.at(i, j) <= dv.btilde.at(i, j));
        }
    }
}

TEST_CASE("zero right-hand side fixes every vertex") {
    testutil::RatSampler sampler(11);
    const HookVector a0 = sampler.hook_vector(4, true);
    const DeformingVector dv{a0, TildeUpperTri(4)};
    for (const auto& v : tesler::tesler_vertices(a0)) {
        CHECK(deform_vertex(v, dv) == v);
    }
}

TEST_CASE("matrix-free deforming vectors reduce to the support map") {
    testutil::RatSampler sampler(12);
    const HookVector a0 = sampler.hook_vector(3, true);
    const HookVector a = sampler.hook_vector(3, false);
    const DeformingVector dv{a, TildeUpperTri(3)};
    for (const auto& v : tesler::tesler_vertices(a0)) {
        CHECK(deform_vertex(v, dv) == tesler::support_map_vertex(v, a));
    }
}

TEST_CASE("deform_vertex validates its inputs") {
    DeformingVector outside{hv({0, 0, 0, 0}), TildeUpperTri(4)};
    outside.btilde.set(1, 1, Rat(-1));
    const UpperTri v = tri({{0, 1, 0, 0}, {0, 2, 0}, {3, 0}, {1}});
    CHECK_THROWS_AS(deform_vertex(v, outside), Error);

    const UpperTri not_vertex = tri({{1, 1, 0, 0}, {0, 2, 0}, {3, 0}, {1}});
    CHECK_THROWS_AS(deform_vertex(not_vertex, example_dv()), Error);
}

TEST_CASE("face index goldens") {
    CHECK(face_index(hv({1, 1, 1, 1})).indices == std::vector<int>{1, 2, 3});
    CHECK(face_index(hv({2, 0, 3, 0})).indices == std::vector<int>{1, 3});
    CHECK(face_index(hv({0, 0, 0, 5})).indices.empty());
    CHECK_THROWS_AS(face_index(hv({-1, 0})), Error);
}

TEST_CASE("relation between Tesler polytopes via index sets") {
    const TeslerCompare same = tesler_deforms(hv({2, 3, 1}), hv({2, 3, 1}));
    CHECK(same.relation == TeslerRelation::NormallyEquivalent);

    const TeslerCompare def = tesler_deforms(hv({1, 0, 1}), hv({1, 1, 1}));
    CHECK(def.relation == TeslerRelation::Deformation);

    const TeslerCompare neither = tesler_deforms(hv({1, 1, 1}), hv({1, 0, 1}));
    CHECK(neither.relation == TeslerRelation::Neither);

    // last coordinate does not matter
    CHECK(tesler_deforms(hv({1, 1, 0}), hv({1, 1, 7})).relation ==
          TeslerRelation::NormallyEquivalent);
}

TEST_CASE("relation agrees with the brute-force deformation check") {
    const auto def = testutil::oracle_tesler_deformation(hv({1, 0, 1}), hv({1, 1, 1}));
    CHECK(def.is_deformation());
    CHECK(def.check->verdict == polyhedra::DeformCheck::Verdict::Strong);

    const auto neither = testutil::oracle_tesler_deformation(hv({1, 1, 1}), hv({1, 0, 1}));
    CHECK_FALSE(neither.is_deformation());
}

TEST_CASE("membership face goldens") {
    const DeformingVector interior{hv({1, 1, 1, 1}), TildeUpperTri(4)};
    CHECK(cone_face_membership(interior).indices == std::vector<int>{1, 2, 3});

    const DeformingVector apex{hv({0, 0, 0}), TildeUpperTri(3)};
    CHECK(cone_face_membership(apex).indices.empty());

    CHECK(cone_face_membership(example_dv()).indices == std::vector<int>{1, 2, 3});

    DeformingVector outside{hv({0, 0}), TildeUpperTri(2)};
    outside.btilde.set(1, 1, Rat(-1));
    CHECK_THROWS_AS(cone_face_membership(outside), Error);
}

TEST_CASE("zero matrix part lands on the face labelled by the index set") {
    testutil::RatSampler sampler(13);
    for (int round = 0; round < 10; ++round) {
        const HookVector a = sampler.hook_vector(sampler.integer(2, 5), false);
        CHECK(cone_face_membership({a, TildeUpperTri(static_cast<int>(a.size()))}) ==
              face_index(a));
    }
}

TEST_CASE("membership agrees with the oracle on random vectors") {
    testutil::RatSampler sampler(14);
    const HookVector ones = hv({1, 1, 1});
    int inside = 0;
    for (int round = 0; round < 40; ++round) {
        const DeformingVector dv = sample_dv(sampler, 3);
        const bool contains = cone_contains(dv);
        const auto check = oracle_check(ones, dv);
        CHECK(contains == check.is_deformation());
        if (!contains) continue;

        ++inside;
        // deformations of the unit polytope are translated Tesler polytopes
        const TeslerTranslate t = tesler_translate(dv);
        const auto q = polyhedra::enumerate_vertices(q_polytope(dv));
        const auto base = polyhedra::enumerate_vertices(tesler_hrep(t.hook_sums));
        CHECK(q.vertices == testutil::translated(base.vertices, t.shift.flat()));

        // the vertex correspondence covers Vert(Q) and scales edges
        std::vector<UpperTri> images = q_vertex_set(dv);
        CHECK(testutil::vrep_of(q.vertices).vertices.size() == images.size());
        CHECK(polyhedra::edge_check_deformation(
            polyhedra::enumerate_vertices(tesler_hrep(ones)), check.q, check.vertex_map));

        // and agrees pointwise with the facet-intersection map of the oracle
        const auto base_vertices = tesler::tesler_vertices(ones);
        for (std::size_t k = 0; k < base_vertices.size(); ++k) {
            CHECK(deform_vertex(base_vertices[k], dv).flat() ==
                  check.q.vertices[check.vertex_map[k]]);
        }
    }
    CHECK(inside > 0);
}

TEST_CASE("cone answers do not depend on the positive base vector") {
    testutil::RatSampler sampler(15);
    for (int round = 0; round < 12; ++round) {
        const DeformingVector dv = sample_dv(sampler, 3);
        const bool c1 = oracle_check(hv({1, 1, 1}), dv).is_deformation();
        const bool c2 = oracle_check(hv({2, 1, 3}), dv).is_deformation();
        CHECK(c1 == c2);
        CHECK(c1 == cone_contains(dv));
    }
}

TEST_CASE("face lattice ordering matches index-set containment") {
    testutil::RatSampler sampler(16);
    std::vector<DeformingVector> in_cone;
    while (in_cone.size() < 6) {
        DeformingVector dv = sample_dv(sampler, 3);
        if (cone_contains(dv)) in_cone.push_back(std::move(dv));
    }
    for (const auto& dv1 : in_cone) {
        for (const auto& dv2 : in_cone) {
            const FaceIndex f1 = cone_face_membership(dv1);
            const FaceIndex f2 = cone_face_membership(dv2);
            CHECK(face_leq(f1, f2) ==
                  std::includes(f2.indices.begin(), f2.indices.end(), f1.indices.begin(),
                                f1.indices.end()));
        }
    }
}

TEST_CASE("boundary vectors merge vertices") {
    // eta_1(btilde) = -a_1 forces the first cone inequality tight.
    DeformingVector dv{hv({1, 1, 1}), TildeUpperTri(3)};
    dv.btilde.set(1, 1, Rat(-1));
    REQUIRE(cone_contains(dv));
    REQUIRE(cone_face_membership(dv).indices == std::vector<int>{2});

    const auto images = q_vertex_set(dv);
    CHECK(images.size() < 6);
    const auto q = polyhedra::enumerate_vertices(q_polytope(dv));
    std::vector<RatVector> flat_images;
    for (const auto& m : images) flat_images.push_back(m.flat());
    CHECK(flat_images == q.vertices);

    const auto check = oracle_check(hv({1, 1, 1}), dv);
    CHECK(check.verdict == polyhedra::DeformCheck::Verdict::Strong);
}
