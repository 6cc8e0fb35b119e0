#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "tcup/degree_scan.hpp"
#include "tcup/standard_fans.hpp"
#include "tcup/support_complex.hpp"

using namespace tcup;

namespace {

Fan p1()
{
    return Fan(1, {{Int(1)}, {Int(-1)}}, {Cone{{0}}, Cone{{1}}});
}

bool matches(const SignFace& face, const std::vector<int>& signs)
{
    return face.signs == signs;
}

} // namespace

TEST_CASE("slice of the projective line is a single bounded point")
{
    Fan fan = p1();
    auto faces = enumerate_faces(fan, 0);
    REQUIRE(faces.size() == 1);
    CHECK(faces[0].bounded);
    CHECK(faces[0].signs == std::vector<int>{-1, 1}); // the other ray is positive at u = -1
    REQUIRE(faces[0].witness.has_value());
    CHECK((*faces[0].witness)[0] == -1);
    CHECK(recession_trivial(fan, 0, faces[0].signs));
}

TEST_CASE("threefold fixture: the face of (-1,0,0) for the first ray")
{
    Fan fan = obstructed_threefold();
    Deg u = {Int(-1), Int(0), Int(0)};
    std::vector<int> expected = {-1, -1, -1, -1, -1, -1, 0, 0, 1};
    CHECK(sign_face_of(fan, 0, u) == expected);

    auto faces = enumerate_faces(fan, 0);
    int hits = 0;
    for (const auto& f : faces)
        if (matches(f, expected)) {
            ++hits;
            CHECK(f.bounded);
        }
    CHECK(hits == 1);
    CHECK(recession_trivial(fan, 0, expected));
}

TEST_CASE("all-strictly-negative pattern has trivial recession on complete fans")
{
    for (auto fan : {projective_space(3), obstructed_threefold()}) {
        std::vector<int> signs(fan.ray_count(), -1);
        CHECK(recession_trivial(fan, 0, signs));
    }
}

TEST_CASE("all-nonnegative faces of a complete fan are bounded")
{
    // Rays of a complete fan positively span, so a recession direction that
    // is nonnegative on every ray is zero.
    for (auto fan : {projective_space(3), obstructed_threefold(), hirzebruch(2)}) {
        for (int ray = 0; ray < fan.ray_count(); ++ray) {
            for (const auto& face : enumerate_faces(fan, ray)) {
                bool nonneg = true;
                for (int e = 0; e < fan.ray_count(); ++e)
                    if (e != ray && face.signs[e] < 0)
                        nonneg = false;
                if (nonneg)
                    CHECK(face.bounded);
            }
        }
    }
}

TEST_CASE("faces partition the slice")
{
    Fan fan = obstructed_threefold();
    for (int ray : {0, 5}) {
        auto faces = enumerate_faces(fan, ray);
        // witnesses land in their own face
        for (const auto& f : faces) {
            REQUIRE(f.witness.has_value());
            const auto& w = *f.witness;
            for (int e = 0; e < fan.ray_count(); ++e) {
                Rat v = 0;
                for (int i = 0; i < fan.rank(); ++i)
                    v += Rat(fan.ray(e)[i]) * w[i];
                int s = v < 0 ? -1 : (v > 0 ? 1 : 0);
                CHECK(s == f.signs[e]);
            }
        }
        // lattice points of the slice land in exactly one face
        for (const Deg& u : box_degrees(fan, ray, Int(3))) {
            auto signs = sign_face_of(fan, ray, u);
            int count = 0;
            for (const auto& f : faces)
                if (matches(f, signs))
                    ++count;
            CHECK(count == 1);
        }
    }
}

TEST_CASE("candidate degrees contain the fixture's active degrees")
{
    Fan fan = obstructed_threefold();
    auto c0 = candidate_degrees(fan, 0);
    auto has = [](const std::vector<Deg>& v, const Deg& u) {
        return std::find(v.begin(), v.end(), u) != v.end();
    };
    CHECK(has(c0, {Int(-1), Int(0), Int(0)}));
    CHECK(has(c0, {Int(-1), Int(-1), Int(0)}));
    CHECK(has(candidate_degrees(fan, 5), {Int(0), Int(-1), Int(0)}));
    for (int ray = 0; ray < fan.ray_count(); ++ray)
        for (const Deg& u : candidate_degrees(fan, ray))
            CHECK(fan.pairing(ray, u) == -1);
}

TEST_CASE("candidate enumeration is exhaustive against a brute-force box")
{
    // Any degree with nonzero reduced H^0 or H^1 of its support complex must
    // appear among the certified candidates.
    std::vector<Fan> fans;
    fans.push_back(projective_space(2));
    fans.push_back(hirzebruch(2));
    fans.push_back(hirzebruch(3));
    fans.push_back(product_of_lines(2));
    fans.push_back(obstructed_threefold());
    for (const Fan& fan : fans) {
        for (int ray = 0; ray < fan.ray_count(); ++ray) {
            auto candidates = candidate_degrees(fan, ray);
            Int radius = 1;
            for (const auto& u : candidates)
                for (const auto& x : u)
                    radius = std::max(radius, Int(abs(x)));
            Int box = radius * 3;
            std::set<Deg> candidate_set(candidates.begin(), candidates.end());
            for (const Deg& u : box_degrees(fan, ray, box)) {
                SupportComplex cx = build_support_complex(fan, ray, u);
                if (cx.vertices.empty())
                    continue;
                bool contributes =
                    components(cx).reduced_h0_dim() > 0 || simplicial_h1_dim(cx) > 0;
                if (contributes)
                    CHECK(candidate_set.count(u) == 1);
            }
        }
    }
}

TEST_CASE("the two-dimensional slice has unbounded faces")
{
    Fan fan = obstructed_threefold();
    auto faces = enumerate_faces(fan, 0);
    bool saw_unbounded = false;
    for (const auto& f : faces)
        if (!f.bounded)
            saw_unbounded = true;
    CHECK(saw_unbounded);
}
