#include "tcup/fan_json.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "tcup/errors.hpp"

namespace tcup {

namespace {

using ordered_json = nlohmann::ordered_json;

int line_of_byte(const std::string& text, size_t byte)
{
    int line = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n')
            ++line;
    return line;
}

[[noreturn]] void fail(const std::string& msg)
{
    throw ParseError("fan file: " + msg);
}

long long to_int64(const Int& x)
{
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (x < lo || x > hi)
        throw ParseError("fan file emit: ray coordinate does not fit in 64 bits");
    return x.convert_to<long long>();
}

} // namespace

Fan load_fan_json(const std::string& text)
{
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("fan file: line " + std::to_string(line_of_byte(text, e.byte)) + ": " +
                         e.what());
    }
    if (!j.is_object())
        fail("top level must be an object");
    if (!j.contains("rank") || !j["rank"].is_number_integer())
        fail("missing integer field \"rank\"");
    int rank = j["rank"].get<int>();
    if (!j.contains("rays") || !j["rays"].is_array())
        fail("missing array field \"rays\"");
    if (!j.contains("max_cones") || !j["max_cones"].is_array())
        fail("missing array field \"max_cones\"");

    std::vector<Deg> rays;
    for (const auto& r : j["rays"]) {
        if (!r.is_array())
            fail("each ray must be an array of integers");
        Deg v;
        for (const auto& x : r) {
            if (!x.is_number_integer())
                fail("ray coordinates must be integers");
            v.push_back(Int(x.get<long long>()));
        }
        rays.push_back(std::move(v));
    }
    std::vector<Cone> cones;
    for (const auto& c : j["max_cones"]) {
        if (!c.is_array())
            fail("each maximal cone must be an array of ray indices");
        Cone cone;
        for (const auto& x : c) {
            if (!x.is_number_integer())
                fail("cone entries must be integer ray indices");
            cone.rays.push_back(x.get<int>());
        }
        cones.push_back(std::move(cone));
    }
    try {
        return Fan(rank, std::move(rays), std::move(cones));
    } catch (const std::exception& e) {
        throw ParseError(std::string("fan file: ") + e.what());
    }
}

Fan load_fan_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open fan file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_fan_json(buf.str());
}

std::string emit_fan_json(const Fan& fan)
{
    ordered_json j;
    j["rank"] = fan.rank();
    auto rays = ordered_json::array();
    for (const auto& r : fan.rays()) {
        auto row = ordered_json::array();
        for (const auto& x : r)
            row.push_back(to_int64(x));
        rays.push_back(std::move(row));
    }
    j["rays"] = std::move(rays);
    auto cones = ordered_json::array();
    for (const auto& c : fan.max_cones()) {
        auto row = ordered_json::array();
        for (int r : c.rays)
            row.push_back(r);
        cones.push_back(std::move(row));
    }
    j["max_cones"] = std::move(cones);
    return j.dump() + "\n";
}

} // namespace tcup
