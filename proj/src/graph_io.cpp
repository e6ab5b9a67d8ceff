#include "gsq/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "gsq/error.hpp"

namespace gsq {

namespace {

struct Token {
    long long value;
    std::size_t column;
};

// Non-negative integers separated by blanks.
std::vector<Token> integers(const std::string& line, std::size_t line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t end = i;
        while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
        long long v = 0;
        const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + end, v);
        if (ec != std::errc() || ptr != line.data() + end || v < 0)
            throw ParseError(line_no, i + 1, "expected a non-negative integer, got '" + line.substr(i, end - i) + "'");
        out.push_back({v, i + 1});
        i = end;
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
    if (!out) throw Error("error writing '" + path + "'");
}

template <class F>
auto with_path(const std::string& path, F&& parse) {
    try {
        return parse(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.column(), path + ": " + e.message());
    }
}

bool blank(const std::string& s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

GraphFile parse_graph(const std::string& text) {
    GraphFile file;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool in_header = true;
    std::optional<long long> n, m;
    std::vector<Edge> edges;
    std::map<Edge, std::size_t> seen;  // edge -> line
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] == '#') {
            if (in_header) file.header.push_back(line.substr(1));
            continue;
        }
        if (blank(line)) continue;
        in_header = false;
        const auto tokens = integers(line, line_no);
        if (tokens.size() != 2)
            throw ParseError(line_no, 1, n ? "expected an edge 'u v'" : "expected the header 'n m'");
        if (!n) {
            if (tokens[0].value > 1'000'000) throw ParseError(line_no, 1, "too many vertices");
            n = tokens[0].value;
            m = tokens[1].value;
            continue;
        }
        const auto [u, v] = std::pair{tokens[0], tokens[1]};
        if (static_cast<long long>(edges.size()) == *m)
            throw ParseError(line_no, 1, "more than the declared " + std::to_string(*m) + " edges");
        if (u.value >= *n) throw ParseError(line_no, u.column, "vertex " + std::to_string(u.value) + " out of range");
        if (v.value >= *n) throw ParseError(line_no, v.column, "vertex " + std::to_string(v.value) + " out of range");
        if (u.value == v.value) throw ParseError(line_no, 1, "loop at vertex " + std::to_string(u.value));
        if (u.value > v.value) throw ParseError(line_no, 1, "edge endpoints must be listed as u < v");
        const Edge e{static_cast<Vertex>(u.value), static_cast<Vertex>(v.value)};
        if (auto it = seen.find(e); it != seen.end())
            throw ParseError(line_no, 1, "duplicate edge, first given on line " + std::to_string(it->second));
        seen.emplace(e, line_no);
        edges.push_back(e);
    }
    if (!n) throw ParseError(line_no + 1, 1, "missing header 'n m'");
    if (static_cast<long long>(edges.size()) != *m)
        throw ParseError(line_no + 1, 1,
                         "expected " + std::to_string(*m) + " edges, found " + std::to_string(edges.size()));
    file.graph = Graph(static_cast<int>(*n), std::move(edges));
    return file;
}

std::string format_graph(const GraphFile& file) {
    std::ostringstream out;
    for (const auto& h : file.header) out << '#' << h << '\n';
    out << file.graph.vertex_count() << ' ' << file.graph.edge_count() << '\n';
    for (const auto& [u, v] : file.graph.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

GraphFile load_graph(const std::string& path) { return with_path(path, parse_graph); }

void save_graph(const std::string& path, const GraphFile& file) { write_file(path, format_graph(file)); }

ListAssignment parse_lists(const std::string& text) {
    std::vector<std::vector<Color>> lists;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] == '#') continue;
        if (blank(line)) throw ParseError(line_no, 1, "empty color list for vertex " + std::to_string(lists.size()));
        std::vector<Color> list;
        for (const auto& t : integers(line, line_no)) {
            if (t.value > 1'000'000'000) throw ParseError(line_no, t.column, "color id too large");
            list.push_back(static_cast<Color>(t.value));
        }
        lists.push_back(std::move(list));
    }
    return ListAssignment(std::move(lists));
}

std::string format_lists(const ListAssignment& lists) {
    std::ostringstream out;
    for (Vertex v = 0; v < lists.vertex_count(); ++v) {
        const auto& list = lists.list(v);
        for (std::size_t i = 0; i < list.size(); ++i) out << (i ? " " : "") << list[i];
        out << '\n';
    }
    return out.str();
}

ListAssignment load_lists(const std::string& path) { return with_path(path, parse_lists); }

void save_lists(const std::string& path, const ListAssignment& lists) { write_file(path, format_lists(lists)); }

std::vector<std::string> provenance_header(const ConstructionRecipe& r) {
    std::string line = " recipe " + to_string(r.kind) + " k=" + std::to_string(r.k);
    if (r.kind == ConstructionRecipe::Kind::example2) line += " M=" + std::to_string(r.M);
    line += " seed=" + std::to_string(r.seed) + " contracted=" + (r.contracted ? "1" : "0");
    if (r.untight) line += " untight=1";
    std::vector<std::string> out{line};
    for (const auto& step : r.log) out.push_back(" step " + step);
    return out;
}

std::optional<ConstructionRecipe> recipe_from_header(const std::vector<std::string>& header) {
    for (const auto& line : header) {
        std::istringstream in(line);
        std::string word, kind;
        if (!(in >> word) || word != "recipe" || !(in >> kind)) continue;
        ConstructionRecipe r;
        if (kind == "example1") r.kind = ConstructionRecipe::Kind::example1;
        else if (kind == "example2") r.kind = ConstructionRecipe::Kind::example2;
        else throw Error("unknown construction '" + kind + "' in provenance header");
        std::map<std::string, std::string> fields;
        while (in >> word) {
            const auto eq = word.find('=');
            if (eq == std::string::npos) throw Error("malformed provenance field '" + word + "'");
            fields[word.substr(0, eq)] = word.substr(eq + 1);
        }
        try {
            r.k = std::stoi(fields.at("k"));
            if (r.kind == ConstructionRecipe::Kind::example2) r.M = std::stoi(fields.at("M"));
            r.seed = std::stoull(fields.at("seed"));
            r.contracted = fields.count("contracted") && fields["contracted"] == "1";
            r.untight = fields.count("untight") && fields["untight"] == "1";
        } catch (const std::exception&) {
            throw Error("incomplete provenance line '" + line + "'");
        }
        for (const auto& l : header)
            if (l.rfind(" step ", 0) == 0) r.log.push_back(l.substr(6));
        return r;
    }
    return std::nullopt;
}

}  // namespace gsq
