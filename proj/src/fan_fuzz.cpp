#include "tcup/fan_fuzz.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tcup/errors.hpp"
#include "tcup/standard_fans.hpp"

namespace tcup {

Fan star_subdivide(const Fan& fan, int cone_index, const std::vector<int>& face_rays)
{
    if (cone_index < 0 || cone_index >= (int)fan.max_cones().size())
        throw ContractViolation("star_subdivide: cone index out of range");
    if (face_rays.size() < 2)
        throw ContractViolation("star_subdivide: face must have at least two rays");
    std::vector<int> face = face_rays;
    std::sort(face.begin(), face.end());
    if (!fan.max_cones()[cone_index].contains_all(face))
        throw ContractViolation("star_subdivide: rays are not a face of the chosen cone");

    Deg fresh(fan.rank(), Int(0));
    for (int r : face)
        for (int i = 0; i < fan.rank(); ++i)
            fresh[i] += fan.ray(r)[i];
    for (const auto& r : fan.rays())
        if (r == fresh)
            throw ContractViolation("star_subdivide: subdivision ray already present");

    std::vector<Deg> rays = fan.rays();
    rays.push_back(fresh);
    const int fresh_index = (int)rays.size() - 1;

    std::vector<Cone> cones;
    for (const auto& c : fan.max_cones()) {
        if (!c.contains_all(face)) {
            cones.push_back(c);
            continue;
        }
        for (int drop : face) {
            Cone piece;
            for (int r : c.rays)
                if (r != drop)
                    piece.rays.push_back(r);
            piece.rays.push_back(fresh_index);
            std::sort(piece.rays.begin(), piece.rays.end());
            cones.push_back(std::move(piece));
        }
    }
    return Fan(fan.rank(), std::move(rays), std::move(cones));
}

Fan random_smooth_complete_fan(std::uint64_t seed, int rank, int min_subdivisions,
                               int max_subdivisions)
{
    if (rank != 2 && rank != 3)
        throw ContractViolation("random_smooth_complete_fan: rank must be 2 or 3");
    std::mt19937_64 rng(seed);
    auto pick = [&](int n) { return (int)(rng() % (std::uint64_t)n); };

    Fan fan = [&]() {
        if (rank == 2) {
            switch (pick(3)) {
            case 0: return projective_space(2);
            case 1: return product_of_lines(2);
            default: return hirzebruch(1 + pick(3));
            }
        }
        switch (pick(3)) {
        case 0: return projective_space(3);
        case 1: return product_of_lines(3);
        default: return obstructed_threefold();
        }
    }();

    int steps = min_subdivisions + pick(max_subdivisions - min_subdivisions + 1);
    for (int s = 0; s < steps; ++s) {
        bool done = false;
        for (int attempt = 0; attempt < 32 && !done; ++attempt) {
            int ci = pick((int)fan.max_cones().size());
            const auto& cone = fan.max_cones()[ci];
            int size = 2 + (rank == 3 ? pick(2) : 0);
            std::vector<int> face = cone.rays;
            while ((int)face.size() > size)
                face.erase(face.begin() + pick((int)face.size()));
            try {
                fan = star_subdivide(fan, ci, face);
                done = true;
            } catch (const ContractViolation&) {
                // duplicate subdivision ray; try another face
            }
        }
        if (!done)
            break;
    }
    if (!fan.is_smooth() || !fan.is_complete())
        throw std::logic_error("random_smooth_complete_fan: generator invariant broken");
    return fan;
}

} // namespace tcup
