#include "radiolabel/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace radiolabel {

namespace {

std::string role_json_name(const Role& r) {
    return r.kind == RoleKind::Center ? std::string("center") : role_name(r);
}

VertexId parse_vertex_key(const std::string& key) {
    std::size_t used = 0;
    long value = -1;
    try {
        value = std::stol(key, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != key.size() || value < 0)
        throw Error(ErrorKind::Parse, "vertex key '" + key + "' is not a non-negative integer");
    return static_cast<VertexId>(value);
}

template <typename T>
T get_field(const Json& doc, const char* name) {
    if (!doc.is_object() || !doc.contains(name))
        throw Error(ErrorKind::Parse, std::string("missing field '") + name + "'");
    try {
        return doc.at(name).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("field '") + name + "': " + e.what());
    }
}

}  // namespace

Json to_json(const Graph& g) {
    Json doc;
    doc["n_vertices"] = g.vertex_count();
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges())
        edges.push_back({u, v});
    doc["edges"] = std::move(edges);
    Json roles = Json::object();
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        roles[std::to_string(v)] = role_json_name(g.role(v));
    doc["roles"] = std::move(roles);
    return doc;
}

Graph graph_from_json(const Json& doc) {
    const auto n = get_field<long>(doc, "n_vertices");
    if (n < 1)
        throw Error(ErrorKind::Parse, "n_vertices must be positive");
    const auto raw_edges = get_field<std::vector<std::vector<long>>>(doc, "edges");
    std::vector<Edge> edges;
    for (const auto& e : raw_edges) {
        if (e.size() != 2 || e[0] < 0 || e[1] < 0)
            throw Error(ErrorKind::Parse, "each edge must be a pair of non-negative vertex ids");
        edges.emplace_back(static_cast<VertexId>(e[0]), static_cast<VertexId>(e[1]));
    }

    std::vector<Role> roles;
    if (doc.contains("roles")) {
        const auto raw = get_field<std::map<std::string, std::string>>(doc, "roles");
        if (raw.size() != static_cast<std::size_t>(n))
            throw Error(ErrorKind::InvalidGraph, "roles cover " + std::to_string(raw.size()) + " of " +
                                                     std::to_string(n) + " vertices");
        roles.resize(static_cast<std::size_t>(n));
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (const auto& [key, name] : raw) {
            const VertexId v = parse_vertex_key(key);
            if (v >= static_cast<VertexId>(n) || seen[v])
                throw Error(ErrorKind::InvalidGraph, "role key '" + key + "' out of range");
            seen[v] = true;
            roles[v] = parse_role(name);
        }
    }
    return Graph(static_cast<std::size_t>(n), std::move(edges), std::move(roles));
}

Json to_json(const Labeling& c, const PositionAssignment* positions) {
    Json doc;
    Json labels = Json::object();
    for (VertexId v = 0; v < c.size(); ++v)
        labels[std::to_string(v)] = c[v];
    doc["labels"] = std::move(labels);
    if (positions) {
        Json pos = Json::object();
        for (VertexId v = 0; v < positions->position.size(); ++v)
            pos[std::to_string(v)] = positions->position[v];
        doc["positions"] = std::move(pos);
    }
    return doc;
}

Labeling labeling_from_json(const Json& doc) {
    const auto raw = get_field<std::map<std::string, long>>(doc, "labels");
    std::vector<Label> labels(raw.size(), 0);
    std::vector<bool> seen(raw.size(), false);
    for (const auto& [key, value] : raw) {
        const VertexId v = parse_vertex_key(key);
        if (v >= raw.size() || seen[v])
            throw Error(ErrorKind::InvalidLabeling,
                        "labeling is partial: keys must be exactly 0.." + std::to_string(raw.size() - 1));
        seen[v] = true;
        labels[v] = static_cast<Label>(value);
    }
    return Labeling(std::move(labels));
}

Json to_json(const BoundReport& report) {
    Json doc;
    doc["value"] = report.value;
    doc["method"] = method_name(report.method);
    if (report.method == BoundMethod::GearForbidden) {
        Json per = Json::object();
        for (const auto& [v, count] : report.per_vertex_forbidden)
            per[std::to_string(v)] = count;
        doc["per_vertex_forbidden"] = std::move(per);
    }
    return doc;
}

Json to_json(const SolveResult& result) {
    Json doc;
    doc["status"] = result.solved() ? "solved" : "inconclusive";
    if (result.solved())
        doc["rn"] = result.rn();
    doc["lower_bound"] = result.lower_bound;
    doc["upper_bound"] = result.upper_bound ? Json(*result.upper_bound) : Json(nullptr);
    doc["witness"] = result.witness ? to_json(*result.witness)["labels"] : Json(nullptr);
    doc["stats"] = {
        {"nodes_explored", result.stats.nodes_explored},
        {"spans_tried", result.stats.spans_tried},
        {"wall_time_ms", std::chrono::duration<double, std::milli>(result.stats.wall_time).count()},
    };
    return doc;
}

Json to_json(const Violation& v) {
    return {{"u", v.u}, {"v", v.v}, {"distance", v.distance}, {"label_gap", v.label_gap}, {"required", v.required}};
}

std::string format_violation(const Violation& v) {
    std::ostringstream out;
    out << "(" << v.u << "," << v.v << ") d=" << v.distance << " gap=" << v.label_gap << " need=" << v.required;
    return out.str();
}

std::string to_dot(const Graph& g, const Labeling* c, const PositionAssignment* positions) {
    if (c && c->size() != g.vertex_count())
        throw Error(ErrorKind::InvalidLabeling, "labeling does not match graph");
    std::ostringstream out;
    out << "graph G {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v << " [label=\"" << role_name(g.role(v));
        if (positions)
            out << "\\nx" << positions->position[v];
        if (c)
            out << "\\n" << (*c)[v];
        out << "\"];\n";
    }
    for (const auto& [u, v] : g.edges())
        out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

Json read_json(const std::string& path, std::istream& in) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else {
        std::ifstream file(path);
        if (!file)
            throw Error(ErrorKind::Io, "cannot read file '" + path + "'");
        std::ostringstream buf;
        buf << file.rdbuf();
        text = buf.str();
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::Parse, "malformed JSON in '" + path + "': " + e.what());
    }
}

}  // namespace radiolabel
