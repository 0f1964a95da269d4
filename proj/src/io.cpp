#include "toric/io.hpp"

#include <fstream>
#include <sstream>

namespace toric {

namespace {

Int parse_int(const nlohmann::json& x) {
    if (x.is_number_integer()) return Int(std::to_string(x.get<long long>()));
    if (x.is_string()) {
        Int v;
        if (v.set_str(x.get<std::string>(), 10) != 0) throw InputError("invalid integer string: " + x.get<std::string>());
        return v;
    }
    throw InputError("expected an integer, got " + x.dump());
}

std::vector<IntVector> parse_vectors(const nlohmann::json& arr, std::size_t len, const std::string& key) {
    if (!arr.is_array()) throw InputError("\"" + key + "\" must be an array of integer vectors");
    std::vector<IntVector> out;
    for (const auto& v : arr) {
        if (!v.is_array() || v.size() != len)
            throw InputError("\"" + key + "\" entries must be integer arrays of length " + std::to_string(len));
        IntVector iv;
        for (const auto& x : v) iv.push_back(parse_int(x));
        out.push_back(std::move(iv));
    }
    return out;
}

}  // namespace

Cone cone_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InputError("cone description must be a JSON object");
    if (!j.contains("lattice_rank") || !j["lattice_rank"].is_number_integer())
        throw InputError("missing integer \"lattice_rank\"");
    const long long n = j["lattice_rank"].get<long long>();
    if (n < 0) throw InputError("\"lattice_rank\" must be nonnegative");
    int present = 0;
    for (const char* key : {"rays", "dual_rays", "polytope_vertices"}) present += j.contains(key) ? 1 : 0;
    if (present != 1) throw InputError("exactly one of \"rays\", \"dual_rays\", \"polytope_vertices\" is required");
    std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
    const auto len = static_cast<std::size_t>(n);
    if (j.contains("rays")) return Cone::from_rays(static_cast<int>(n), parse_vectors(j["rays"], len, "rays"), name);
    if (j.contains("dual_rays"))
        return Cone::from_dual_rays(static_cast<int>(n), parse_vectors(j["dual_rays"], len, "dual_rays"), name);
    return homogenize_polytope(parse_vectors(j["polytope_vertices"], len, "polytope_vertices"), name);
}

Cone load_cone_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
    return cone_from_json(j);
}

nlohmann::json int_to_json(const Int& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

nlohmann::json vector_to_json(const IntVector& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v) a.push_back(int_to_json(x));
    return a;
}

nlohmann::json cone_to_json(const Cone& c) {
    nlohmann::json j;
    j["name"] = c.name();
    j["lattice_rank"] = c.dim();
    j["rays"] = nlohmann::json::array();
    for (const auto& r : c.rays()) j["rays"].push_back(vector_to_json(r));
    return j;
}

}  // namespace toric
