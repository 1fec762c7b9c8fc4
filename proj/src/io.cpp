#include "matchdim/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace matchdim {

using nlohmann::json;

GraphFormat parse_format(const std::string& name) {
    if (name == "json") return GraphFormat::Json;
    if (name == "edgelist") return GraphFormat::EdgeList;
    if (name == "dot") return GraphFormat::Dot;
    throw std::runtime_error("unknown format '" + name +
                             "' (expected json, edgelist or dot)");
}

std::string to_json(const Graph& g) {
    json doc;
    doc["n"] = g.order();
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    doc["edges"] = std::move(edges);
    if (!g.labels().empty()) {
        json labels = json::object();
        for (const auto& [v, name] : g.labels())
            labels[std::to_string(v)] = name;
        doc["labels"] = std::move(labels);
    }
    return doc.dump();
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.order() << "\n";
    for (const auto& [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    return out.str();
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (VertexId v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (const std::string* name = g.label(v)) {
            std::string escaped;
            for (char ch : *name) {
                if (ch == '"' || ch == '\\') escaped += '\\';
                escaped += ch;
            }
            out << " [label=\"" << escaped << "\"]";
        }
        out << ";\n";
    }
    for (const auto& [u, v] : g.edges())
        out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string serialize(const Graph& g, GraphFormat format) {
    switch (format) {
        case GraphFormat::Json: return to_json(g);
        case GraphFormat::EdgeList: return to_edge_list(g);
        case GraphFormat::Dot: return to_dot(g);
    }
    throw std::logic_error("serialize: unreachable");
}

Graph parse_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("JSON parse failure: ") + e.what());
    }
    if (!doc.is_object())
        throw std::runtime_error("graph document must be a JSON object");
    for (const auto& [key, value] : doc.items())
        if (key != "n" && key != "edges" && key != "labels")
            throw std::runtime_error("unexpected key '" + key +
                                     "' in graph document");
    if (!doc.contains("n") || !doc["n"].is_number_integer() ||
        doc["n"].get<long long>() < 0)
        throw std::runtime_error("graph document needs a non-negative integer 'n'");
    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw std::runtime_error("graph document needs an 'edges' array");

    const int n = doc["n"].get<int>();
    std::vector<Edge> edges;
    for (const auto& pair : doc["edges"]) {
        if (!pair.is_array() || pair.size() != 2 ||
            !pair[0].is_number_integer() || !pair[1].is_number_integer())
            throw std::runtime_error("each edge must be an [u, v] integer pair");
        edges.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
    std::map<VertexId, std::string> labels;
    if (doc.contains("labels")) {
        if (!doc["labels"].is_object())
            throw std::runtime_error("'labels' must be an object");
        for (const auto& [key, value] : doc["labels"].items()) {
            if (!value.is_string())
                throw std::runtime_error("label values must be strings");
            size_t consumed = 0;
            int v;
            try {
                v = std::stoi(key, &consumed);
            } catch (const std::exception&) {
                throw std::runtime_error("label key '" + key +
                                         "' is not a vertex index");
            }
            if (consumed != key.size())
                throw std::runtime_error("label key '" + key +
                                         "' is not a vertex index");
            labels[v] = value.get<std::string>();
        }
    }
    try {
        return with_edges(n, edges, std::move(labels));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("invalid graph document: ") +
                                 e.what());
    }
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string directive;
        if (!(fields >> directive)) continue;  // blank line
        const std::string where = " (line " + std::to_string(lineno) + ")";
        if (directive == "n") {
            if (n >= 0) throw std::runtime_error("duplicate 'n' line" + where);
            if (!(fields >> n) || n < 0)
                throw std::runtime_error("'n' needs a non-negative count" + where);
        } else if (directive == "e") {
            if (n < 0)
                throw std::runtime_error("'e' line before 'n' line" + where);
            int u, v;
            if (!(fields >> u >> v))
                throw std::runtime_error("'e' needs two vertex indices" + where);
            edges.emplace_back(u, v);
        } else {
            throw std::runtime_error("unknown directive '" + directive + "'" +
                                     where);
        }
        std::string rest;
        if (fields >> rest)
            throw std::runtime_error("trailing tokens" + where);
    }
    if (n < 0) throw std::runtime_error("edge list is missing the 'n' line");
    try {
        return with_edges(n, edges);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("invalid edge list: ") + e.what());
    }
}

Graph parse_graph(const std::string& text) {
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '{') return parse_json(text);
        break;
    }
    return parse_edge_list(text);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

}  // namespace matchdim
