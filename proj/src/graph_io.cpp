#include "lga/graph_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace lga {

namespace {

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

LayeredGraph parse_graph(const std::string& document) {
    std::istringstream in(document);
    std::string line;
    int lineno = 0;

    enum class Section { header, vertices, edges } section = Section::header;
    int declared_levels = -1;
    std::vector<LayeredGraph::VertexData> verts;
    std::vector<std::pair<int, int>> edges;
    std::map<std::string, int> id_of;
    std::vector<std::string> file_ids;

    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        std::istringstream ls(line);

        if (section == Section::header) {
            std::string key;
            ls >> key;
            if (key != "levels:") throw GraphParseError(lineno, "expected 'levels: <k>' header");
            if (!(ls >> declared_levels) || declared_levels < 0)
                throw GraphParseError(lineno, "expected nonnegative level count");
            section = Section::vertices;
            continue;
        }

        std::string first;
        ls >> first;
        if (first == "vertices:") continue;
        if (first == "edges:") {
            section = Section::edges;
            continue;
        }

        if (section == Section::vertices) {
            int level;
            std::string label;
            if (!(ls >> level)) throw GraphParseError(lineno, "expected '<id> <level> <label>'");
            if (!(ls >> label)) throw GraphParseError(lineno, "vertex is missing a label");
            if (level < 0 || level > declared_levels)
                throw GraphParseError(lineno, "vertex level outside 0..declared levels");
            if (id_of.count(first)) throw GraphParseError(lineno, "duplicate vertex id: " + first);
            id_of[first] = static_cast<int>(verts.size());
            file_ids.push_back(first);
            verts.push_back({level, label});
        } else {
            std::string lower;
            if (!(ls >> lower)) throw GraphParseError(lineno, "expected '<upper-id> <lower-id>'");
            auto up = id_of.find(first);
            auto lo = id_of.find(lower);
            if (up == id_of.end()) throw GraphParseError(lineno, "unknown vertex id: " + first);
            if (lo == id_of.end()) throw GraphParseError(lineno, "unknown vertex id: " + lower);
            edges.emplace_back(up->second, lo->second);
        }
    }
    if (declared_levels < 0) throw GraphParseError(lineno, "missing 'levels:' header");
    if (verts.empty()) throw GraphParseError(lineno, "graph has no vertices");

    LayeredGraph g(std::move(verts), std::move(edges));
    auto diags = validate(g);
    for (const auto& d : diags)
        if (d.severity == Diagnostic::Severity::error) throw GraphValidationError(d.message);
    return g;
}

LayeredGraph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string format_graph(const LayeredGraph& g) {
    std::ostringstream os;
    os << "levels: " << g.max_level() << "\n";
    os << "vertices:\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        os << v << " " << g.level(v) << " " << g.label(v) << "\n";
    os << "edges:\n";
    for (const auto& [upper, lower] : g.edges()) os << upper << " " << lower << "\n";
    return os.str();
}

}  // namespace lga
