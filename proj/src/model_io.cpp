#include "sdg/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sdg {

namespace {

using nlohmann::json;

std::vector<int> parse_key_indices(const std::string& key, size_t expect) {
    std::vector<int> out;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(std::stoi(part));
    if (out.size() != expect)
        throw usage_error("model key '" + key + "' needs " + std::to_string(expect) + " indices");
    return out;
}

SpacePtr load_space(const json& j) {
    if (!j.contains("points")) throw usage_error("model needs a 'points' field");
    std::vector<std::string> points;
    if (j["points"].is_number_integer()) {
        points = numbered_points(j["points"].get<int>());
    } else {
        for (const auto& p : j["points"]) points.push_back(p.get<std::string>());
    }
    int n = static_cast<int>(points.size());
    std::vector<std::pair<int, int>> edges;
    if (j.contains("neighbours")) {
        if (j["neighbours"].is_string() && j["neighbours"].get<std::string>() == "total") {
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) edges.push_back({a, b});
        } else {
            for (const auto& e : j["neighbours"]) {
                if (!e.is_array() || e.size() != 2)
                    throw usage_error("neighbour entries are pairs [i,j]");
                edges.push_back({e[0].get<int>(), e[1].get<int>()});
            }
        }
    }
    return make_space(std::move(points), edges);
}

GroupPtr load_group(const json& j) {
    if (j.contains("name")) return named_group(j["name"].get<std::string>());
    if (!j.contains("table")) throw usage_error("group needs a 'name' or a 'table'");
    std::vector<std::vector<int>> table;
    for (const auto& row : j["table"]) table.push_back(row.get<std::vector<int>>());
    std::vector<std::string> names;
    if (j.contains("names")) {
        for (const auto& s : j["names"]) names.push_back(s.get<std::string>());
    } else {
        for (size_t i = 0; i < table.size(); ++i) names.push_back("g" + std::to_string(i));
    }
    return std::make_shared<FiniteGroup>("custom", std::move(names), std::move(table));
}

int element_of(const json& v, const FiniteGroup& g) {
    if (v.is_number_integer()) return v.get<int>();
    return g.index(v.get<std::string>());
}

int point_of(const json& v, const NeighbourSpace& m) {
    if (v.is_number_integer()) return v.get<int>();
    return m.point_index(v.get<std::string>());
}

} // namespace

Model load_model(const std::string& json_text) {
    json j = json::parse(json_text);
    Model model;
    model.space = load_space(j);
    if (j.contains("group")) model.group = load_group(j["group"]);

    auto need_group = [&]() -> GroupPtr {
        if (!model.group) throw usage_error("model uses group values but declares no group");
        return model.group;
    };

    if (j.contains("form0")) {
        GroupPtr g = need_group();
        std::vector<int> vals(static_cast<size_t>(model.space->size()), g->id());
        for (const auto& [key, v] : j["form0"].items())
            vals[static_cast<size_t>(std::stoi(key))] = element_of(v, *g);
        model.form0 = Form0(model.space, g, std::move(vals));
    }
    if (j.contains("form1")) {
        GroupPtr g = need_group();
        std::map<std::pair<int, int>, int> vals;
        for (const auto& [key, v] : j["form1"].items()) {
            auto idx = parse_key_indices(key, 2);
            vals[{idx[0], idx[1]}] = element_of(v, *g);
        }
        model.form1 = Form1(model.space, g, vals);
    }
    if (j.contains("connection")) {
        GroupPtr g = need_group();
        std::map<std::pair<int, int>, int> vals;
        for (const auto& [key, v] : j["connection"].items()) {
            auto idx = parse_key_indices(key, 2);
            vals[{idx[0], idx[1]}] = element_of(v, *g);
        }
        model.connection = GroupConnection(model.space, g, vals);
    }
    if (j.contains("lambda")) {
        std::map<std::vector<int>, int> table;
        for (const auto& [key, v] : j["lambda"].items())
            table[parse_key_indices(key, 3)] = point_of(v, *model.space);
        model.lambda = AffineConnection(model.space, std::move(table));
    }
    return model;
}

Model load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open model file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return load_model(ss.str());
}

void check_morphism(const std::string& json_text) {
    json j = json::parse(json_text);
    if (!j.contains("source") || !j.contains("target") || !j.contains("map"))
        throw usage_error("morphism needs 'source', 'target' and 'map'");
    SpacePtr src = load_space(j["source"]);
    SpacePtr dst = load_space(j["target"]);
    std::vector<int> map;
    for (const auto& v : j["map"]) map.push_back(point_of(v, *dst));
    if (!preserves_neighbours(*src, *dst, map))
        throw domain_error("declared morphism does not preserve the neighbour relation");
}

} // namespace sdg
