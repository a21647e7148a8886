#include "strongdom/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace strongdom {

namespace {

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
    throw Error(Errc::parse_error, origin + ":" + std::to_string(line) + ": " + msg);
}

bool parse_int(const std::string& tok, int& out) {
    if (tok.empty()) return false;
    std::size_t pos = 0;
    try {
        long v = std::stol(tok, &pos);
        if (pos != tok.size() || v < 0 || v > 1'000'000'000) return false;
        out = static_cast<int>(v);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

} // namespace

Graph parse_graph_text(std::istream& in, const std::string& origin) {
    int line_no = 0;
    int n = -1;
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    std::vector<bool> labeled;

    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string type;
        if (!(tokens >> type)) continue; // blank line

        if (type == "n") {
            if (n >= 0) fail(origin, line_no, "duplicate header line");
            std::string count;
            std::string extra;
            if (!(tokens >> count) || tokens >> extra)
                fail(origin, line_no, "expected 'n <count>'");
            if (!parse_int(count, n)) fail(origin, line_no, "bad vertex count '" + count + "'");
            labels.resize(static_cast<std::size_t>(n));
            labeled.resize(static_cast<std::size_t>(n), false);
            for (int v = 0; v < n; ++v)
                labels[static_cast<std::size_t>(v)] = "v" + std::to_string(v);
        } else if (type == "l") {
            if (n < 0) fail(origin, line_no, "label line before header");
            std::string id_tok, label, extra;
            if (!(tokens >> id_tok >> label) || tokens >> extra)
                fail(origin, line_no, "expected 'l <id> <label>'");
            int id = 0;
            if (!parse_int(id_tok, id) || id >= n)
                fail(origin, line_no, "vertex id '" + id_tok + "' out of range");
            if (labeled[static_cast<std::size_t>(id)])
                fail(origin, line_no, "duplicate label line for vertex " + id_tok);
            labeled[static_cast<std::size_t>(id)] = true;
            labels[static_cast<std::size_t>(id)] = label;
        } else if (type == "e") {
            if (n < 0) fail(origin, line_no, "edge line before header");
            std::string a_tok, b_tok, extra;
            if (!(tokens >> a_tok >> b_tok) || tokens >> extra)
                fail(origin, line_no, "expected 'e <a> <b>'");
            int a = 0, b = 0;
            if (!parse_int(a_tok, a) || a >= n)
                fail(origin, line_no, "vertex id '" + a_tok + "' out of range");
            if (!parse_int(b_tok, b) || b >= n)
                fail(origin, line_no, "vertex id '" + b_tok + "' out of range");
            if (a == b) fail(origin, line_no, "self-loop at vertex " + a_tok);
            edges.emplace_back(a, b);
        } else {
            fail(origin, line_no, "unknown line type '" + type + "'");
        }
    }
    if (n < 0) fail(origin, line_no, "missing 'n <count>' header");

    try {
        return Graph::make(n, edges, std::move(labels));
    } catch (const Error& e) {
        throw Error(Errc::parse_error, origin + ": " + e.what());
    }
}

Graph parse_graph_json(const std::string& text, const std::string& origin) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::parse_error, origin + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
        throw Error(Errc::parse_error, origin + ": expected object with integer field 'n'");

    int n = doc["n"].get<int>();
    std::vector<Edge> edges;
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array())
            throw Error(Errc::parse_error, origin + ": 'edges' must be an array");
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw Error(Errc::parse_error, origin + ": each edge must be a pair of ids");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    }
    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        if (!doc["labels"].is_array())
            throw Error(Errc::parse_error, origin + ": 'labels' must be an array");
        for (const auto& l : doc["labels"]) {
            if (!l.is_string())
                throw Error(Errc::parse_error, origin + ": labels must be strings");
            labels.push_back(l.get<std::string>());
        }
    }

    try {
        return Graph::make(n, edges, std::move(labels));
    } catch (const Error& e) {
        throw Error(Errc::parse_error, origin + ": " + e.what());
    }
}

std::string to_text(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "l " << v << " " << g.label(v) << "\n";
    for (const Edge& e : g.edges()) out << "e " << e.first << " " << e.second << "\n";
    return out.str();
}

std::string to_json_string(const Graph& g) {
    nlohmann::ordered_json doc;
    doc["n"] = g.vertex_count();
    auto edges = nlohmann::ordered_json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.first, e.second});
    doc["edges"] = std::move(edges);
    doc["labels"] = g.labels();
    return doc.dump(2) + "\n";
}

Graph read_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::parse_error, path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();

    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_graph_json(text, path);
    std::istringstream stream(text);
    return parse_graph_text(stream, path);
}

void write_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::parse_error, path + ": cannot open file for writing");
    bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    out << (json ? to_json_string(g) : to_text(g));
    if (!out) throw Error(Errc::parse_error, path + ": write failed");
}

} // namespace strongdom
