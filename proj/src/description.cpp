#include "wsg/description.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wsg {

namespace {

using ordered_json = nlohmann::ordered_json;

// Integers outside int64 are written as decimal strings.
ordered_json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return ordered_json(v.get_si());
    return ordered_json(v.get_str());
}

Int int_from_json(const ordered_json& j, const std::string& where) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Int(std::to_string(j.get<std::uint64_t>()), 10);
        return Int(std::to_string(j.get<std::int64_t>()), 10);
    }
    if (j.is_string()) return parse_int(j.get<std::string>());
    throw std::invalid_argument(where + ": expected an integer, got " + j.dump());
}

ordered_json tuple_to_json(const IntTuple& t) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : t) arr.push_back(int_to_json(c));
    return arr;
}

IntTuple tuple_from_json(const ordered_json& j, const std::string& where) {
    if (!j.is_array()) throw std::invalid_argument(where + ": expected an array, got " + j.dump());
    std::vector<Int> coords;
    for (const auto& c : j) coords.push_back(int_from_json(c, where));
    return IntTuple(std::move(coords));
}

const ordered_json& required(const ordered_json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw std::invalid_argument(std::string("description: missing key \"") + key + "\"");
    return *it;
}

}  // namespace

Description::Description(long genus, Lattice lattice, std::vector<IntTuple> gamma_fundamental, std::string label)
    : genus_(genus), lattice_(std::move(lattice)), gamma_(std::move(gamma_fundamental)), label_(std::move(label)) {
    if (genus_ < 0) throw std::invalid_argument("description: genus must be >= 0");
    std::sort(gamma_.begin(), gamma_.end());
    gamma_.erase(std::unique(gamma_.begin(), gamma_.end()), gamma_.end());
    const Int top = top_degree();
    bool has_zero = false;
    for (const auto& g : gamma_) {
        require_length(g, m(), "gamma_fundamental entry");
        if (!lattice_.in_region(g))
            throw std::invalid_argument("description: gamma " + g.to_string() + " lies outside the region C");
        Int s = g.sum();
        if (s < 0 || s > top)
            throw std::invalid_argument("description: gamma " + g.to_string() + " has |gamma| = " + s.get_str() +
                                        " outside [0, 2g-2+m] = [0, " + top.get_str() + "]");
        if (s == 0 && g == IntTuple::zero(m())) has_zero = true;
    }
    if (!has_zero) throw std::invalid_argument("description: gamma_fundamental must contain the zero tuple");
}

bool Description::operator==(const Description& other) const {
    return genus_ == other.genus_ && lattice_ == other.lattice_ && gamma_ == other.gamma_ && label_ == other.label_;
}

std::string to_json_string(const Description& d, int indent) {
    ordered_json j;
    j["m"] = d.m();
    j["genus"] = d.genus();
    ordered_json gens = ordered_json::array();
    for (const auto& eta : d.lattice().generators()) gens.push_back(tuple_to_json(eta));
    j["lattice_generators"] = std::move(gens);
    ordered_json gammas = ordered_json::array();
    for (const auto& g : d.gamma_fundamental()) gammas.push_back(tuple_to_json(g));
    j["gamma_fundamental"] = std::move(gammas);
    j["label"] = d.label();
    return j.dump(indent);
}

Description description_from_json_string(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("description: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("description: top level must be a JSON object");

    const Int m = int_from_json(required(j, "m"), "m");
    if (m < 2) throw std::invalid_argument("description: m must be >= 2");
    const Int genus = int_from_json(required(j, "genus"), "genus");
    if (!genus.fits_slong_p()) throw std::invalid_argument("description: genus out of range");

    const auto& gens_json = required(j, "lattice_generators");
    if (!gens_json.is_array()) throw std::invalid_argument("description: lattice_generators must be an array");
    std::vector<IntTuple> gens;
    for (const auto& g : gens_json) gens.push_back(tuple_from_json(g, "lattice_generators"));
    if (Int(static_cast<unsigned long>(gens.size())) != m - 1)
        throw std::invalid_argument("description: expected m-1 = " + Int(m - 1).get_str() + " lattice generators, got " +
                                    std::to_string(gens.size()));
    Lattice lattice = Lattice::from_generators(gens);

    const auto& gamma_json = required(j, "gamma_fundamental");
    if (!gamma_json.is_array()) throw std::invalid_argument("description: gamma_fundamental must be an array");
    std::vector<IntTuple> gammas;
    for (const auto& g : gamma_json) gammas.push_back(tuple_from_json(g, "gamma_fundamental"));

    const auto& label = required(j, "label");
    if (!label.is_string()) throw std::invalid_argument("description: label must be a string");

    return Description(genus.get_si(), std::move(lattice), std::move(gammas), label.get<std::string>());
}

Description load_description(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open description file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return description_from_json_string(buf.str());
}

void save_description(const Description& d, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write description file " + path.string());
    out << to_json_string(d) << '\n';
    if (!out) throw std::runtime_error("error writing " + path.string());
}

const char* to_string(Violation::Kind kind) {
    switch (kind) {
        case Violation::Kind::NotAbsoluteMaximal: return "not-absolute-maximal";
        case Violation::Kind::MissingAbsoluteMaximal: return "missing-absolute-maximal";
        case Violation::Kind::RiemannRoch: return "riemann-roch";
        case Violation::Kind::NegativeDegree: return "negative-degree";
    }
    return "unknown";
}

}  // namespace wsg
