#include "stacky/fan_json.hpp"

#include <fstream>
#include <stdexcept>

namespace stacky {

namespace {

[[noreturn]] void bad(const std::string& msg) {
    throw std::invalid_argument("fan document: " + msg);
}

} // namespace

FanCandidate fan_candidate_from_json(const Json& j) {
    if (!j.is_object()) bad("top level must be an object");
    for (const auto& [key, value] : j.items())
        if (key != "rank" && key != "rays" && key != "max_cones" && key != "name")
            bad("unknown key \"" + key + "\"");
    if (!j.contains("rank") || !j["rank"].is_number_integer()) bad("missing integer \"rank\"");
    if (!j.contains("rays") || !j["rays"].is_array()) bad("missing array \"rays\"");
    if (!j.contains("max_cones") || !j["max_cones"].is_array()) bad("missing array \"max_cones\"");

    FanCandidate c;
    c.rank = j["rank"].get<int>();
    if (j.contains("name")) {
        if (!j["name"].is_string()) bad("\"name\" must be a string");
        c.name = j["name"].get<std::string>();
    }
    for (const auto& ray : j["rays"]) {
        if (!ray.is_array()) bad("each ray must be an array of integers");
        IntVec v;
        for (const auto& x : ray) {
            if (!x.is_number_integer()) bad("ray coordinates must be integers");
            v.push_back(Int(static_cast<long>(x.get<long long>())));
        }
        c.rays.push_back(std::move(v));
    }
    for (const auto& cone : j["max_cones"]) {
        if (!cone.is_array()) bad("each cone must be an array of ray indices");
        std::vector<int> s;
        for (const auto& x : cone) {
            if (!x.is_number_integer()) bad("cone entries must be integer ray indices");
            s.push_back(x.get<int>());
        }
        c.max_cones.push_back(std::move(s));
    }
    return c;
}

Json fan_to_json(const StackyFan& f, const std::string& name) {
    Json j = Json::object();
    if (!name.empty()) j["name"] = name;
    j["rank"] = f.rank;
    Json rays = Json::array();
    for (const IntVec& v : f.rays) {
        Json rv = Json::array();
        for (const Int& x : v) {
            if (!x.fits_slong_p()) throw std::invalid_argument("ray coordinate too large for JSON");
            rv.push_back(static_cast<long long>(x.get_si()));
        }
        rays.push_back(std::move(rv));
    }
    j["rays"] = std::move(rays);
    Json cones = Json::array();
    for (const Cone& c : f.max_cones) cones.push_back(c.ray_indices);
    j["max_cones"] = std::move(cones);
    return j;
}

FanCandidate load_fan_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open \"" + path + "\"");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        bad("parse error in \"" + path + "\": " + e.what());
    }
    return fan_candidate_from_json(j);
}

} // namespace stacky
