#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

#include "tcup/degree_scan.hpp"
#include "tcup/errors.hpp"
#include "tcup/fan_fuzz.hpp"
#include "tcup/standard_fans.hpp"
#include "tcup/support_complex.hpp"

using namespace tcup;

namespace {
const Deg U = {Int(-1), Int(0), Int(0)};
const Deg UP = {Int(0), Int(-1), Int(0)};
const Deg W = {Int(-1), Int(-1), Int(0)};
} // namespace

TEST_CASE("fixture vertex sets follow the vertex rule")
{
    Fan fan = obstructed_threefold();
    CHECK(build_support_complex(fan, 0, U).vertices == std::vector<int>{1, 2, 3, 4, 5});
    SupportComplex g6 = build_support_complex(fan, 5, UP);
    CHECK(g6.vertices == std::vector<int>{6, 7});
    CHECK(g6.edges.empty());
    SupportComplex hex = build_support_complex(fan, 0, W);
    CHECK(hex.vertices == std::vector<int>{1, 2, 3, 5, 6, 7});
    CHECK(hex.edges.size() == 6);
    CHECK(hex.triangles.empty());
    // every vertex of the hexagon has degree two
    std::map<int, int> degree;
    for (const auto& e : hex.edges) {
        ++degree[e[0]];
        ++degree[e[1]];
    }
    for (int v : hex.vertices)
        CHECK(degree[v] == 2);
}

TEST_CASE("component labelling matches the fixture")
{
    Fan fan = obstructed_threefold();
    ComponentLabeling c = components(build_support_complex(fan, 0, U));
    REQUIRE(c.component_count == 2);
    CHECK(c.members[0] == std::vector<int>{1, 2, 3, 4});
    CHECK(c.members[1] == std::vector<int>{5});
    CHECK(c.reduced_h0_dim() == 1);

    ComponentLabeling c6 = components(build_support_complex(fan, 5, UP));
    REQUIRE(c6.component_count == 2);
    CHECK(c6.members[0] == std::vector<int>{6});
    CHECK(c6.members[1] == std::vector<int>{7});

    SupportComplex empty;
    empty.cover.resize(fan.max_cones().size());
    CHECK(components(empty).component_count == 0);
    CHECK(components(empty).reduced_h0_dim() == 0);
}

TEST_CASE("simplicial first cohomology of small complexes")
{
    Fan fan = obstructed_threefold();
    CHECK(simplicial_h1_dim(build_support_complex(fan, 0, W)) == 1); // hexagon

    SupportComplex simplex;
    simplex.vertices = {0, 1, 2};
    simplex.edges = {{0, 1}, {0, 2}, {1, 2}};
    simplex.triangles = {{0, 1, 2}};
    CHECK(simplicial_h1_dim(simplex) == 0);

    SupportComplex points;
    points.vertices = {0, 1};
    CHECK(simplicial_h1_dim(points) == 0);
}

TEST_CASE("ray with pairing -1 is never a vertex of its own complex")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 8; ++i) {
        Fan fan = random_smooth_complete_fan(rng(), i % 2 ? 2 : 3);
        for (int ray = 0; ray < fan.ray_count(); ++ray)
            for (const Deg& u : candidate_degrees(fan, ray))
                CHECK_FALSE(build_support_complex(fan, ray, u).has_vertex(ray));
    }
}

TEST_CASE("closed cover complex computes the same cohomology")
{
    Fan fan = obstructed_threefold();
    SupportComplex hex = build_support_complex(fan, 0, W);
    ScalarCechComplex cc = closed_cover_complex(hex);
    CHECK(cc.h1_dim() == 1);
    CHECK(cc.h1_dim() == simplicial_h1_dim(hex));

    SupportComplex gamma = build_support_complex(fan, 0, U);
    ScalarCechComplex cg = closed_cover_complex(gamma);
    CHECK(cg.h0_dim() == 2);
    CHECK(cg.h0_dim() == components(gamma).component_count);
}

TEST_CASE("cover agreement on random fans and degrees")
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 10; ++i) {
        Fan fan = random_smooth_complete_fan(rng(), i % 2 ? 2 : 3);
        for (int ray = 0; ray < fan.ray_count(); ++ray) {
            for (const Deg& u : candidate_degrees(fan, ray)) {
                SupportComplex cx = build_support_complex(fan, ray, u);
                if (cx.vertices.empty())
                    continue;
                ScalarCechComplex cc = closed_cover_complex(cx);
                CHECK(cc.h0_dim() == components(cx).component_count);
                CHECK(cc.h1_dim() == simplicial_h1_dim(cx));
            }
        }
    }
}

TEST_CASE("cover differentials compose to zero")
{
    Fan fan = obstructed_threefold();
    for (const Deg& u : {U, W}) {
        ScalarCechComplex cc = closed_cover_complex(build_support_complex(fan, 0, u));
        IntMat d0 = cc.d0_matrix(), d1 = cc.d1_matrix();
        for (size_t i = 0; i < cc.triples.size(); ++i) {
            for (size_t j = 0; j < cc.pieces.size(); ++j) {
                Int acc = 0;
                for (size_t k = 0; k < cc.pairs.size(); ++k)
                    acc += d1[i][k] * d0[k][j];
                CHECK(acc == 0);
            }
        }
    }
}

TEST_CASE("single covering piece has trivial cohomology")
{
    SupportComplex cx;
    cx.vertices = {0, 1};
    cx.edges = {{0, 1}};
    cx.cover = {{0, 1}, {}}; // one nonempty piece
    ScalarCechComplex cc = closed_cover_complex(cx);
    CHECK(cc.h0_dim() == 1);
    CHECK(cc.h1_dim() == 0);
}

TEST_CASE("coboundary decisions")
{
    // Hexagon covered by its six closed edges: adjacent pieces meet in one
    // vertex, no triple meets, so any single-entry one-cochain is closed.
    SupportComplex hex;
    hex.vertices = {0, 1, 2, 3, 4, 5};
    hex.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}};
    hex.cover = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}};
    ScalarCechComplex cc = closed_cover_complex(hex);
    REQUIRE(cc.triples.empty());
    CHECK(cc.h0_dim() == 1);
    CHECK(cc.h1_dim() == 1);
    CHECK(cc.h1_dim() == simplicial_h1_dim(hex));

    CechCocycle zero;
    zero.p = 1;
    auto [is_zero, primitive] = is_coboundary(cc, zero);
    CHECK(is_zero);
    REQUIRE(primitive.has_value());
    for (const Rat& v : *primitive)
        CHECK(v == 0);

    // One +-1 entry on a covering pair pairs to 1 with the fundamental
    // cycle, so it cannot bound.
    CechCocycle spike;
    spike.p = 1;
    spike.set({cc.pairs[0][0], cc.pairs[0][1]}, Rat(1));
    CHECK_FALSE(is_coboundary(cc, spike).first);

    // Coboundaries are recognized: d0 of a random zero-cochain.
    std::mt19937_64 rng(23);
    CechCocycle cob;
    cob.p = 1;
    std::vector<Rat> x;
    for (size_t i = 0; i < cc.pieces.size(); ++i)
        x.push_back(Rat((long)(rng() % 9) - 4));
    for (const auto& pr : cc.pairs) {
        Rat v = x[cc.piece_index.at(pr[1])] - x[cc.piece_index.at(pr[0])];
        if (v != 0)
            cob.set({pr[0], pr[1]}, v);
    }
    CHECK(is_coboundary(cc, cob).first);
}

TEST_CASE("non-cocycle input to the coboundary solver is rejected")
{
    // A complex with triple overlaps: the connected one-skeleton at the
    // fixture degree (-1,0,0) for the second ray.
    Fan fan = obstructed_threefold();
    SupportComplex cx = build_support_complex(fan, 1, U);
    ScalarCechComplex cc = closed_cover_complex(cx);
    REQUIRE_FALSE(cc.triples.empty());
    CechCocycle bad;
    bad.p = 1;
    bad.set({cc.triples[0][0], cc.triples[0][1]}, Rat(1));
    CHECK_THROWS_AS(is_coboundary(cc, bad), ContractViolation);
}

TEST_CASE("alternating cochain access resolves signs")
{
    CechCocycle c;
    c.p = 1;
    c.set({3, 7}, Rat(5));
    CHECK(c.at({3, 7}) == 5);
    CHECK(c.at({7, 3}) == -5);
    CHECK(c.at({3, 3}) == 0);
    c.set({9, 2}, Rat(1)); // stored as -(2,9)
    CHECK(c.at({2, 9}) == -1);
}

TEST_CASE("cover pieces are monotone in their ray sets")
{
    Fan fan = obstructed_threefold();
    SupportComplex cx = build_support_complex(fan, 0, W);
    for (size_t a = 0; a < cx.cover.size(); ++a)
        for (size_t b = 0; b < cx.cover.size(); ++b) {
            const auto &va = cx.cover[a], &vb = cx.cover[b];
            if (std::includes(vb.begin(), vb.end(), va.begin(), va.end()))
                for (int v : va)
                    CHECK(std::binary_search(vb.begin(), vb.end(), v));
        }
}
