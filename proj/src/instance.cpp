#include "vpgmis/instance.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace vpgmis {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void reject_unknown_fields(const json& obj, std::initializer_list<const char*> allowed,
                           const std::string& where) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* name : allowed)
            if (item.key() == name) known = true;
        if (!known)
            throw std::invalid_argument("unknown field \"" + item.key() + "\" in " + where);
    }
}

Rational parse_weight(const json& w) {
    if (w.is_string()) return parse_rational(w.get<std::string>());
    if (w.is_number_integer()) return Rational(BigInt(w.get<long long>()));
    if (w.is_number_unsigned()) return Rational(BigInt(w.get<unsigned long long>()));
    if (w.is_number_float()) {
        // Re-serialize to the shortest round-trip decimal and parse that
        // exactly, so e.g. 2.5 becomes 5/2.
        return parse_rational(w.dump());
    }
    throw std::invalid_argument("weight must be a number or a \"p/q\" string");
}

}  // namespace

std::optional<int> Instance::position_of(int id) const {
    for (int i = 0; i < n(); ++i)
        if (paths[i].id == id) return i;
    return std::nullopt;
}

int derive_c(const Instance& instance) {
    if (instance.paths.empty())
        throw std::invalid_argument("EmptyInstance: cannot derive c without paths");
    int best = 0;
    for (const auto& path : instance.paths)
        best = std::max(best, path.max_segment_length());
    return best == 0 ? 1 : best;
}

Instance make_instance(int k, std::vector<GridPath> paths) {
    Instance instance;
    instance.k = k;
    instance.paths = std::move(paths);
    instance.c = instance.paths.empty() ? 1 : derive_c(instance);
    return instance;
}

InstanceValidation validate_instance(const Instance& instance, const BoundingBox& box) {
    InstanceValidation out;
    std::set<int> ids;
    for (const auto& path : instance.paths) {
        if (!ids.insert(path.id).second) out.duplicate_ids = true;
        auto result = validate_path(path, instance.k, box);
        if (!result.ok())
            out.reports.push_back({path.id, std::move(result.violations)});
    }
    return out;
}

Instance parse_instance_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("instance must be a JSON object");
    reject_unknown_fields(doc, {"k", "paths"}, "instance");
    if (!doc.contains("k") || !doc["k"].is_number_integer())
        throw std::invalid_argument("instance needs an integer \"k\"");
    if (!doc.contains("paths") || !doc["paths"].is_array())
        throw std::invalid_argument("instance needs a \"paths\" array");

    const int k = doc["k"].get<int>();
    if (k < 0) throw std::invalid_argument("k must be non-negative");

    std::vector<GridPath> paths;
    paths.reserve(doc["paths"].size());
    for (const auto& entry : doc["paths"]) {
        if (!entry.is_object()) throw std::invalid_argument("path entries must be objects");
        reject_unknown_fields(entry, {"id", "weight", "vertices"}, "path");
        if (!entry.contains("id") || !entry["id"].is_number_integer())
            throw std::invalid_argument("path needs an integer \"id\"");
        if (!entry.contains("weight"))
            throw std::invalid_argument("path needs a \"weight\"");
        if (!entry.contains("vertices") || !entry["vertices"].is_array())
            throw std::invalid_argument("path needs a \"vertices\" array");

        GridPath path;
        path.id = entry["id"].get<int>();
        if (path.id < 0) throw std::invalid_argument("path ids must be non-negative");
        path.weight = parse_weight(entry["weight"]);
        for (const auto& vert : entry["vertices"]) {
            if (!vert.is_array() || vert.size() != 2 ||
                !vert[0].is_number_integer() || !vert[1].is_number_integer())
                throw std::invalid_argument("vertices must be [x, y] integer pairs");
            path.vertices.push_back({vert[0].get<int>(), vert[1].get<int>()});
        }
        if (path.vertices.empty())
            throw std::invalid_argument("paths need at least one vertex");
        paths.push_back(std::move(path));
    }
    return make_instance(k, std::move(paths));
}

Instance load_instance(const std::string& file_path) {
    std::ifstream in(file_path);
    if (!in) throw std::runtime_error("cannot open " + file_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_instance_json(buffer.str());
}

std::string instance_to_json(const Instance& instance) {
    ordered_json doc;
    doc["k"] = instance.k;
    doc["paths"] = ordered_json::array();
    for (const auto& path : instance.paths) {
        ordered_json entry;
        entry["id"] = path.id;
        const BigInt den = boost::multiprecision::denominator(path.weight);
        if (den == 1 && boost::multiprecision::numerator(path.weight) >= INT64_MIN &&
            boost::multiprecision::numerator(path.weight) <= INT64_MAX) {
            entry["weight"] = boost::multiprecision::numerator(path.weight)
                                  .convert_to<long long>();
        } else {
            entry["weight"] = to_string(path.weight);
        }
        entry["vertices"] = ordered_json::array();
        for (const auto& v : path.vertices)
            entry["vertices"].push_back(ordered_json::array({v.x, v.y}));
        doc["paths"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

void save_instance(const Instance& instance, const std::string& file_path) {
    std::ofstream out(file_path);
    if (!out) throw std::runtime_error("cannot open " + file_path + " for writing");
    out << instance_to_json(instance);
}

}  // namespace vpgmis
