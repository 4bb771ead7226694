#include "doctest.h"

#include "oracles.hpp"
#include "test_support.hpp"
#include "toric/cones.hpp"

using namespace toric;
using toric::testing::random_vector;
using toric::testing::rows_of;

namespace {

Polycone random_cone(std::mt19937& rng, std::size_t n, std::size_t max_gens, long bound)
{
    std::uniform_int_distribution<std::size_t> count(0, max_gens);
    std::vector<IntVector> gens;
    std::size_t k = count(rng);
    for (std::size_t i = 0; i < k; ++i)
        gens.push_back(random_vector(rng, n, -bound, bound));
    return cone_from_rays(n, gens);
}

Polycone random_pointed_cone(std::mt19937& rng, std::size_t n, long bound)
{
    for (;;)
    {
        Polycone c = random_cone(rng, n, n + 2, bound);
        if (c.pointed())
            return c;
    }
}

}  // namespace

TEST_CASE("cone_from_rays examples")
{
    Polycone a = cone_from_rays(2, rows_of({{2, 0}, {0, 3}}));
    CHECK(a.rays() == rows_of({{0, 1}, {1, 0}}));
    CHECK(a.dim() == 2);

    Polycone z = cone_from_rays(2, {});
    CHECK(z.is_zero());
    CHECK(z.dim() == 0);
    CHECK(z == Polycone::zero(2));

    Polycone b = cone_from_rays(2, rows_of({{1, 0}, {1, 2}, {1, 1}}));
    CHECK(b.rays() == rows_of({{1, 0}, {1, 2}}));
    CHECK(b.normals() == rows_of({{0, 1}, {2, -1}}));
}

TEST_CASE("lines and lower-dimensional cones")
{
    Polycone half = cone_from_rays(2, rows_of({{1, 0}, {0, 1}, {0, -1}}));
    CHECK(half.lineality_rank() == 1);
    CHECK(half.lineality() == rows_of({{0, 1}}));
    CHECK(half.rays() == rows_of({{1, 0}}));
    CHECK(!half.pointed());

    Polycone ray = cone_from_rays(3, rows_of({{2, 4, 0}}));
    CHECK(ray.dim() == 1);
    CHECK(ray.rays() == rows_of({{1, 2, 0}}));
    CHECK(ray.equations().size() == 2);
    CHECK(ray.normals().size() == 1);

    Polycone plane = cone_from_rays(2, rows_of({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
    CHECK(plane.lineality_rank() == 2);
    CHECK(plane.normals().empty());
}

TEST_CASE("dual cone examples")
{
    Polycone quadrant = cone_from_rays(2, rows_of({{1, 0}, {0, 1}}));
    CHECK(dual_cone(quadrant) == quadrant);

    // brute force: primitive covectors in a box that are nonnegative on both
    // generators and tight on one of them are the boundary rays of the dual
    Polycone sigma = cone_from_rays(2, rows_of({{1, 0}, {1, 2}}));
    std::set<IntVector> boundary;
    oracle::for_each_box_point(2, -5, 5, [&](const IntVector& u) {
        if (is_zero(u) || content(u) != 1)
            return;
        Integer a = dot(u, int_vector({1, 0}));
        Integer b = dot(u, int_vector({1, 2}));
        if (a >= 0 && b >= 0 && (a == 0 || b == 0))
            boundary.insert(u);
    });
    CHECK(boundary == std::set<IntVector>{int_vector({0, 1}), int_vector({2, -1})});
    DualCone d = dual_cone(sigma);
    CHECK(std::set<IntVector>(d.rays().begin(), d.rays().end()) == boundary);

    DualCone whole = dual_cone(Polycone::zero(2));
    CHECK(whole.lineality_rank() == 2);
    CHECK(whole.rays().empty());
}

TEST_CASE("dual of a ray has the orthogonal line as lineality")
{
    Polycone ray = cone_from_rays(2, rows_of({{1, 0}}));
    DualCone d = dual_cone(ray);
    CHECK(d.lineality() == rows_of({{0, 1}}));
    CHECK(d.rays() == rows_of({{1, 0}}));
    CHECK(dual_cone(d) == ray);
}

TEST_CASE("face lattice examples")
{
    Polycone quadrant = cone_from_rays(2, rows_of({{1, 0}, {0, 1}}));
    CHECK(faces(quadrant).size() == 4);
    CHECK(faces(cone_from_rays(2, rows_of({{1, 1}}))).size() == 2);
    CHECK(faces(cone_from_rays(3, rows_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}))).size() == 8);
    CHECK(faces(Polycone::zero(3)).size() == 1);
    CHECK_THROWS_AS(faces(cone_from_rays(2, rows_of({{1, 0}, {-1, 0}}))), NotPointedError);

    // square pyramid: 1 apex + 4 rays + 4 two-faces + itself
    Polycone pyramid =
        cone_from_rays(3, rows_of({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}}));
    CHECK(faces(pyramid).size() == 10);
}

TEST_CASE("contains_point examples")
{
    Polycone quadrant = cone_from_rays(2, rows_of({{1, 0}, {0, 1}}));
    CHECK(contains_point(quadrant, RatVector(int_vector({1, 1}))));
    CHECK(!contains_point(quadrant, RatVector(int_vector({-1, 0}))));
    Polycone sigma = cone_from_rays(2, rows_of({{1, 0}, {1, 2}}));
    CHECK(contains_point(sigma, RatVector(int_vector({1, 1}))));
    CHECK(contains_point(sigma, RatVector(std::vector<Rational>{Rational(1, 2), Rational(1, 3)})));
    CHECK(!contains_point(sigma, RatVector(int_vector({1, 3}))));
}

TEST_CASE("intersect_cones examples")
{
    Polycone quadrant = cone_from_rays(2, rows_of({{1, 0}, {0, 1}}));
    CHECK(intersect_cones(quadrant, quadrant) == quadrant);
    CHECK(intersect_cones(quadrant, Polycone::zero(2)) == Polycone::zero(2));

    // {x,y >= 0} ∩ {y >= |x|} = {0 <= x <= y}; checked pointwise on a box
    Polycone wedge = cone_from_rays(2, rows_of({{1, 1}, {-1, 1}}));
    Polycone meet = intersect_cones(quadrant, wedge);
    CHECK(meet.rays() == rows_of({{0, 1}, {1, 1}}));
    oracle::for_each_box_point(2, -6, 6, [&](const IntVector& p) {
        bool expected = p[0] >= 0 && p[1] >= p[0];
        CHECK(meet.contains(p) == expected);
    });

    // two rays meeting only at the origin
    Polycone r1 = cone_from_rays(2, rows_of({{1, 0}}));
    Polycone r2 = cone_from_rays(2, rows_of({{0, 1}}));
    CHECK(intersect_cones(r1, r2) == Polycone::zero(2));
}

TEST_CASE("transform_cone preserves the face count")
{
    Polycone sigma = cone_from_rays(2, rows_of({{1, 0}, {1, 2}}));
    IntMatrix t{{1, 1}, {0, 1}};
    Polycone image = transform_cone(sigma, t);
    CHECK(image.rays() == rows_of({{1, 1}, {1, 3}}));
    CHECK(faces(image).size() == faces(sigma).size());
}

TEST_CASE("biduality on random cones")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial)
    {
        std::size_t n = 1 + trial % 4;
        Polycone c = random_cone(rng, n, 5, 5);
        CHECK(dual_cone(dual_cone(c)) == c);
        CHECK(c.dim() + dual_cone(c).lineality_rank() == n);
    }
}

TEST_CASE("face lattice structure on random pointed cones")
{
    std::mt19937 rng(12);
    for (int trial = 0; trial < 40; ++trial)
    {
        std::size_t n = 2 + trial % 3;
        Polycone c = random_pointed_cone(rng, n, 4);
        FaceLattice fl = faces(c);
        CHECK(fl.find(c) < fl.size());
        CHECK(fl.find(Polycone::zero(n)) < fl.size());
        for (std::size_t i = 0; i < fl.size(); ++i)
        {
            const Face& f = fl.faces()[i];
            // witness: nonnegative on c and cutting out exactly this face
            for (const IntVector& r : c.rays())
            {
                CHECK(dot(f.witness, r) >= 0);
                bool on_face = std::binary_search(f.cone.rays().begin(), f.cone.rays().end(), r);
                CHECK((dot(f.witness, r) == 0) == on_face);
            }
            // faces of faces are faces
            FaceLattice sub = faces(f.cone);
            for (const Face& g : sub.faces())
                CHECK(fl.find(g.cone) < fl.size());
            for (std::size_t j = 0; j < fl.size(); ++j)
            {
                Polycone meet = intersect_cones(f.cone, fl.faces()[j].cone);
                CHECK(fl.find(meet) < fl.size());
            }
        }
        if (c.rays().size() == c.dim())
            CHECK(fl.size() == (std::size_t{1} << c.dim()));
    }
}

TEST_CASE("membership agrees with an exact LP")
{
    std::mt19937 rng(13);
    int checked = 0;
    for (int trial = 0; trial < 250; ++trial)
    {
        std::size_t n = 1 + trial % 3;
        std::uniform_int_distribution<std::size_t> count(0, 4);
        std::vector<IntVector> gens;
        for (std::size_t i = 0, k = count(rng); i < k; ++i)
            gens.push_back(random_vector(rng, n, -4, 4));
        Polycone c = cone_from_rays(n, gens);
        for (int s = 0; s < 2; ++s)
        {
            IntVector num = random_vector(rng, n, -6, 6);
            std::vector<Rational> p;
            for (auto& x : num)
                p.emplace_back(x, 1 + s);
            bool lp = oracle::in_cone_by_lp(gens, {}, p);
            CHECK(contains_point(c, RatVector(p)) == lp);
            ++checked;
        }
    }
    CHECK(checked == 500);
}
