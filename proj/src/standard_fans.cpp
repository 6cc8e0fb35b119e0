#include "tcup/standard_fans.hpp"

#include "tcup/errors.hpp"

namespace tcup {

Fan projective_space(int n)
{
    if (n < 1)
        throw ContractViolation("projective_space: n must be >= 1");
    std::vector<Deg> rays;
    for (int i = 0; i < n; ++i) {
        Deg e(n, Int(0));
        e[i] = 1;
        rays.push_back(std::move(e));
    }
    Deg neg(n, Int(-1));
    rays.push_back(std::move(neg));
    std::vector<Cone> cones;
    for (int skip = 0; skip <= n; ++skip) {
        Cone c;
        for (int i = 0; i <= n; ++i)
            if (i != skip)
                c.rays.push_back(i);
        cones.push_back(std::move(c));
    }
    return Fan(n, std::move(rays), std::move(cones));
}

Fan product_of_lines(int n)
{
    if (n < 1)
        throw ContractViolation("product_of_lines: n must be >= 1");
    std::vector<Deg> rays;
    for (int i = 0; i < n; ++i) {
        Deg p(n, Int(0)), m(n, Int(0));
        p[i] = 1;
        m[i] = -1;
        rays.push_back(std::move(p));
        rays.push_back(std::move(m));
    }
    std::vector<Cone> cones;
    for (int mask = 0; mask < (1 << n); ++mask) {
        Cone c;
        for (int i = 0; i < n; ++i)
            c.rays.push_back(2 * i + ((mask >> i) & 1));
        cones.push_back(std::move(c));
    }
    return Fan(n, std::move(rays), std::move(cones));
}

Fan hirzebruch(int a)
{
    std::vector<Deg> rays = {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(a)}, {Int(0), Int(-1)}};
    std::vector<Cone> cones = {Cone{{0, 1}}, Cone{{1, 2}}, Cone{{2, 3}}, Cone{{3, 0}}};
    return Fan(2, std::move(rays), std::move(cones));
}

Fan obstructed_threefold()
{
    std::vector<Deg> rays = {
        {Int(1), Int(0), Int(0)},  {Int(1), Int(0), Int(-1)}, {Int(1), Int(0), Int(1)},
        {Int(2), Int(-1), Int(0)}, {Int(1), Int(-1), Int(0)}, {Int(1), Int(1), Int(0)},
        {Int(0), Int(1), Int(-1)}, {Int(0), Int(1), Int(1)},  {Int(-1), Int(0), Int(0)},
    };
    std::vector<Cone> cones = {
        Cone{{0, 1, 3}}, Cone{{0, 1, 6}}, Cone{{0, 2, 3}}, Cone{{0, 2, 7}}, Cone{{0, 5, 6}},
        Cone{{0, 5, 7}}, Cone{{1, 3, 4}}, Cone{{1, 4, 8}}, Cone{{1, 6, 8}}, Cone{{2, 3, 4}},
        Cone{{2, 4, 8}}, Cone{{2, 7, 8}}, Cone{{5, 6, 8}}, Cone{{5, 7, 8}},
    };
    return Fan(3, std::move(rays), std::move(cones));
}

} // namespace tcup
