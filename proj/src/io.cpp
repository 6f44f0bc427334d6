#include "sandpilion/io.hpp"

#include <sstream>

#include "sandpilion/errors.hpp"

namespace sandpilion {

Json graph_to_json(const Multigraph& g) {
    Json vertices = Json::array();
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        const auto& label = g.label(i);
        Json v = {{"id", i}, {"role", role_name(label.role)}};
        if (label.role != Role::ConeApex) v["index"] = label.index;
        vertices.push_back(std::move(v));
    }
    Json edges = Json::array();
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
        for (std::size_t v = u + 1; v < g.vertex_count(); ++v)
            if (const int k = g.multiplicity(u, v); k > 0) edges.push_back({{"u", u}, {"v", v}, {"mult", k}});
    return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

Multigraph graph_from_json(const Json& j) {
    try {
        std::vector<VertexLabel> labels;
        const auto& vertices = j.at("vertices");
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            const auto& v = vertices[i];
            if (v.at("id").get<std::size_t>() != i) throw InvalidArgument("vertex ids must be 0, 1, 2, ... in order");
            const auto role = role_from_name(v.at("role").get<std::string>());
            if (!role) throw InvalidArgument("unknown role " + v.at("role").dump());
            labels.push_back(*role == Role::ConeApex ? VertexLabel::apex() : VertexLabel{*role, v.at("index").get<int>()});
        }
        Multigraph g(std::move(labels));
        for (const auto& e : j.at("edges")) {
            const int mult = e.contains("mult") ? e.at("mult").get<int>() : 1;
            if (mult < 1) throw InvalidArgument("edge multiplicity must be positive");
            g.add_edge(e.at("u").get<std::size_t>(), e.at("v").get<std::size_t>(), mult);
        }
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed graph JSON: ") + e.what());
    }
}

std::string graph_to_dot(const Multigraph& g, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (const auto& label : g.vertices()) out << "  " << to_string(label) << ";\n";
    for (const auto& [u, v] : g.edge_instances())
        out << "  " << to_string(g.label(u)) << " -- " << to_string(g.label(v)) << ";\n";
    out << "}\n";
    return out.str();
}

Json matrix_to_json(const IntMatrix& m) {
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", decimal_array(m.entries())}};
}

IntMatrix matrix_from_json(const Json& j) {
    try {
        const auto rows = j.at("rows").get<std::size_t>();
        const auto cols = j.at("cols").get<std::size_t>();
        const auto& entries = j.at("entries");
        if (!entries.is_array() || entries.size() != rows * cols)
            throw InvalidArgument("matrix JSON needs rows*cols entries");
        IntMatrix m(rows, cols);
        for (std::size_t k = 0; k < entries.size(); ++k) {
            const auto& e = entries[k];
            BigInt value;
            if (e.is_string()) value = from_decimal(e.get<std::string>());
            else if (e.is_number_integer()) value = from_decimal(e.dump());
            else throw InvalidArgument("matrix entries must be integers or decimal strings");
            m(k / cols, k % cols) = value;
        }
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed matrix JSON: ") + e.what());
    }
}

Json decimal_array(const std::vector<BigInt>& values) {
    Json out = Json::array();
    for (const auto& x : values) out.push_back(to_decimal(x));
    return out;
}

Json group_to_json(const AbelianGroup& group) {
    return {{"invariant_factors", decimal_array(group.factors())},
            {"order", to_decimal(group.order())},
            {"mu", group.mu()}};
}

Json prediction_to_json(const GroupPrediction& prediction) {
    auto out = group_to_json(prediction.group());
    out["case"] = case_name(prediction.case_tag);
    return out;
}

}  // namespace sandpilion
