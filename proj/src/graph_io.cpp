#include "pcf/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "pcf/error.hpp"

namespace pcf {

namespace {

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) {
            ++j;
        }
        if (j > i) {
            out.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

std::optional<long long> to_int(std::string_view tok)
{
    long long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size()) {
        return std::nullopt;
    }
    return v;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what)
{
    throw InputError("line " + std::to_string(line_no) + ": " + what);
}

struct Header {
    long long n = 0;
    long long m = 0;
};

Header check_header(std::optional<long long> n, std::optional<long long> m, std::size_t line_no)
{
    if (!n || !m || *n < 0 || *m < 0 || *n > (1LL << 30)) {
        fail(line_no, "malformed header");
    }
    return {*n, *m};
}

Edge parse_edge(std::string_view a, std::string_view b, std::size_t line_no)
{
    auto u = to_int(a);
    auto v = to_int(b);
    if (!u || !v || *u < INT32_MIN || *u > INT32_MAX || *v < INT32_MIN || *v > INT32_MAX) {
        fail(line_no, "malformed edge line");
    }
    return {static_cast<Vertex>(*u), static_cast<Vertex>(*v)};
}

Graph finish(const std::optional<Header>& header, const std::vector<Edge>& edges)
{
    if (!header) {
        throw InputError("missing header");
    }
    if (static_cast<long long>(edges.size()) != header->m) {
        throw InputError("header declares " + std::to_string(header->m) + " edges but " +
                         std::to_string(edges.size()) + " were read");
    }
    return build_graph(static_cast<int>(header->n), edges);
}

Graph load_edgelist(std::istream& in)
{
    std::optional<Header> header;
    std::vector<Edge> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = split_ws(line);
        if (toks.empty() || toks.front().front() == '#') {
            continue;
        }
        if (toks.size() != 2) {
            fail(line_no, header ? "malformed edge line" : "malformed header");
        }
        if (!header) {
            header = check_header(to_int(toks[0]), to_int(toks[1]), line_no);
            continue;
        }
        edges.push_back(parse_edge(toks[0], toks[1], line_no));
    }
    return finish(header, edges);
}

Graph load_dimacs(std::istream& in)
{
    std::optional<Header> header;
    std::vector<Edge> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = split_ws(line);
        if (toks.empty() || toks.front() == "c") {
            continue;
        }
        if (toks.front() == "p") {
            if (header) {
                fail(line_no, "second problem line");
            }
            if (toks.size() != 4 || (toks[1] != "edge" && toks[1] != "col")) {
                fail(line_no, "malformed header");
            }
            header = check_header(to_int(toks[2]), to_int(toks[3]), line_no);
        } else if (toks.front() == "e") {
            if (!header) {
                fail(line_no, "edge line before problem line");
            }
            if (toks.size() != 3) {
                fail(line_no, "malformed edge line");
            }
            edges.push_back(parse_edge(toks[1], toks[2], line_no));
        } else {
            fail(line_no, "unknown line prefix '" + std::string(toks.front()) + "'");
        }
    }
    return finish(header, edges);
}

} // namespace

GraphFormat parse_graph_format(std::string_view name)
{
    if (name == "edgelist") {
        return GraphFormat::edgelist;
    }
    if (name == "dimacs") {
        return GraphFormat::dimacs;
    }
    throw InputError("unknown graph format '" + std::string(name) + "'");
}

std::string_view format_name(GraphFormat f)
{
    return f == GraphFormat::dimacs ? "dimacs" : "edgelist";
}

GraphFormat format_from_path(std::string_view path)
{
    auto ends_with = [&](std::string_view suffix) { return path.ends_with(suffix); };
    return ends_with(".col") || ends_with(".dimacs") ? GraphFormat::dimacs : GraphFormat::edgelist;
}

Graph load_graph(std::istream& in, GraphFormat format)
{
    return format == GraphFormat::dimacs ? load_dimacs(in) : load_edgelist(in);
}

void save_graph(std::ostream& out, const Graph& g, GraphFormat format)
{
    const bool dimacs = format == GraphFormat::dimacs;
    out << (dimacs ? "p edge " : "") << g.order() << ' ' << g.size() << '\n';
    for (const Edge& e : g.edges()) {
        out << (dimacs ? "e " : "") << e.u << ' ' << e.v << '\n';
    }
}

Graph load_graph_file(const std::string& path, GraphFormat format)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open graph file '" + path + "'");
    }
    try {
        return load_graph(in, format);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

} // namespace pcf
