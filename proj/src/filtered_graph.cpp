#include "sizefn/filtered_graph.hpp"

#include "graph_lines.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace sizefn {

FilteredGraph::FilteredGraph(std::vector<std::pair<VertexId, double>> vertices,
                             const std::vector<std::pair<VertexId, VertexId>>& edges) {
    std::sort(vertices.begin(), vertices.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i > 0 && vertices[i].first == vertices[i - 1].first)
            throw std::invalid_argument("duplicate vertex id " + std::to_string(vertices[i].first));
        if (!std::isfinite(vertices[i].second))
            throw std::invalid_argument("non-finite value at vertex " +
                                        std::to_string(vertices[i].first));
        ids_.push_back(vertices[i].first);
        values_.push_back(vertices[i].second);
    }
    adj_.resize(ids_.size());
    edges_.reserve(edges.size());
    for (const auto& [p, q] : edges) {
        std::uint32_t a = index_of(p);
        std::uint32_t b = index_of(q);
        if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(p));
        if (a > b) std::swap(a, b);
        edges_.emplace_back(a, b);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate edge");
    for (const auto& [a, b] : edges_) {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
}

bool FilteredGraph::has_vertex(VertexId id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    return it != ids_.end() && *it == id;
}

std::uint32_t FilteredGraph::index_of(VertexId id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id)
        throw std::invalid_argument("unknown vertex id " + std::to_string(id));
    return static_cast<std::uint32_t>(it - ids_.begin());
}

double FilteredGraph::min_value() const {
    if (empty()) throw std::logic_error("min_value of empty graph");
    return *std::min_element(values_.begin(), values_.end());
}

double FilteredGraph::max_value() const {
    if (empty()) throw std::logic_error("max_value of empty graph");
    return *std::max_element(values_.begin(), values_.end());
}

FilteredGraph FilteredGraph::induced_subgraph(std::vector<VertexId> subset) const {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    std::vector<std::pair<VertexId, double>> vertices;
    vertices.reserve(subset.size());
    std::vector<char> keep(ids_.size(), 0);
    for (VertexId id : subset) {
        std::uint32_t i = index_of(id);
        keep[i] = 1;
        vertices.emplace_back(id, values_[i]);
    }
    std::vector<std::pair<VertexId, VertexId>> sub_edges;
    for (const auto& [a, b] : edges_)
        if (keep[a] && keep[b]) sub_edges.emplace_back(ids_[a], ids_[b]);
    return FilteredGraph(std::move(vertices), sub_edges);
}

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    // normalize "-0" to "0"
    if (buf[0] == '-' && std::strtod(buf, nullptr) == 0.0) return buf + 1;
    return buf;
}

namespace {

VertexId parse_id(const std::string& tok, std::size_t line_no) {
    try {
        std::size_t pos = 0;
        unsigned long long raw = std::stoull(tok, &pos);
        if (pos != tok.size() || raw > 0xffffffffull) throw std::invalid_argument("");
        return static_cast<VertexId>(raw);
    } catch (...) {
        throw ParseError("line " + std::to_string(line_no) + ": bad vertex id '" + tok + "'",
                         line_no);
    }
}

}  // namespace

namespace detail {

GraphLines parse_graph_lines(const std::string& text, bool allow_assignments) {
    GraphLines out;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (tag == "v") {
            std::string id_tok, val_tok;
            if (!(ls >> id_tok >> val_tok))
                throw ParseError("line " + std::to_string(line_no) + ": expected `v <id> <value>`",
                                 line_no);
            VertexId id = parse_id(id_tok, line_no);
            char* end = nullptr;
            double val = std::strtod(val_tok.c_str(), &end);
            if (end != val_tok.c_str() + val_tok.size() || !std::isfinite(val))
                throw ParseError("line " + std::to_string(line_no) + ": bad value '" + val_tok + "'",
                                 line_no);
            out.vertices.emplace_back(id, val);
        } else if (tag == "e") {
            std::string a_tok, b_tok;
            if (!(ls >> a_tok >> b_tok))
                throw ParseError("line " + std::to_string(line_no) + ": expected `e <id> <id>`",
                                 line_no);
            out.edges.emplace_back(parse_id(a_tok, line_no), parse_id(b_tok, line_no));
        } else if (allow_assignments && (tag == "A" || tag == "B")) {
            std::string id_tok;
            if (!(ls >> id_tok))
                throw ParseError("line " + std::to_string(line_no) + ": expected `" + tag + " <id>`",
                                 line_no);
            out.assignments.emplace_back(tag[0], parse_id(id_tok, line_no));
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unknown tag '" + tag + "'",
                             line_no);
        }
        std::string rest;
        if (ls >> rest && rest[0] != '#')
            throw ParseError("line " + std::to_string(line_no) + ": trailing token '" + rest + "'",
                             line_no);
    }
    return out;
}

}  // namespace detail

FilteredGraph parse_graph_text(const std::string& text) {
    detail::GraphLines lines = detail::parse_graph_lines(text, false);
    if (lines.vertices.empty()) throw ParseError("graph file declares no vertices");
    try {
        return FilteredGraph(std::move(lines.vertices), lines.edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

FilteredGraph load_graph_file(const std::string& path) { return parse_graph_text(read_file(path)); }

std::string graph_to_text(const FilteredGraph& g) {
    std::string out;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        out += "v " + std::to_string(g.id_of(static_cast<std::uint32_t>(i))) + " " +
               format_real(g.value_of(static_cast<std::uint32_t>(i))) + "\n";
    }
    for (const auto& [a, b] : g.edges())
        out += "e " + std::to_string(g.id_of(a)) + " " + std::to_string(g.id_of(b)) + "\n";
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

}  // namespace sizefn
