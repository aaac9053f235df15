#include "pcf/generators.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <utility>

#include "pcf/error.hpp"
#include "random.hpp"

namespace pcf {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 8> kFamilies{{
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::complete, "complete"},
    {Family::star, "star"},
    {Family::complete_bipartite, "complete_bipartite"},
    {Family::grid, "grid"},
    {Family::gnp, "gnp"},
    {Family::planar3tree, "planar3tree"},
}};

constexpr double kMaxVertices = 1 << 24;

std::size_t arity(Family f)
{
    switch (f) {
    case Family::complete_bipartite:
    case Family::grid:
    case Family::gnp:
        return 2;
    default:
        return 1;
    }
}

[[noreturn]] void bad(const GenSpec& spec, const std::string& what)
{
    throw InputError(std::string(family_name(spec.family)) + ": " + what);
}

int int_param(const GenSpec& spec, std::size_t i, int min_value)
{
    double x = spec.params[i];
    if (!std::isfinite(x) || std::floor(x) != x) {
        bad(spec, "parameter " + std::to_string(i + 1) + " must be an integer");
    }
    if (x < min_value || x > kMaxVertices) {
        bad(spec, "parameter " + std::to_string(i + 1) + " must be in " + std::to_string(min_value) +
                      ".." + std::to_string(static_cast<long>(kMaxVertices)));
    }
    return static_cast<int>(x);
}

Graph make_path(int n)
{
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        edges.push_back({v, v + 1});
    }
    return build_graph(n, edges);
}

Graph make_cycle(int n)
{
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        edges.push_back({v, v + 1});
    }
    edges.push_back({1, n});
    return build_graph(n, edges);
}

Graph make_complete(int n)
{
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = u + 1; v <= n; ++v) {
            edges.push_back({u, v});
        }
    }
    return build_graph(n, edges);
}

Graph make_star(int leaves)
{
    std::vector<Edge> edges;
    for (Vertex v = 2; v <= leaves + 1; ++v) {
        edges.push_back({1, v});
    }
    return build_graph(leaves + 1, edges);
}

Graph make_complete_bipartite(int a, int b)
{
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= a; ++u) {
        for (Vertex v = a + 1; v <= a + b; ++v) {
            edges.push_back({u, v});
        }
    }
    return build_graph(a + b, edges);
}

// Row-major: cell (i, j), 0-based, is vertex i * cols + j + 1.
Graph make_grid(int rows, int cols)
{
    std::vector<Edge> edges;
    auto id = [cols](int i, int j) { return i * cols + j + 1; };
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            if (j + 1 < cols) {
                edges.push_back({id(i, j), id(i, j + 1)});
            }
            if (i + 1 < rows) {
                edges.push_back({id(i, j), id(i + 1, j)});
            }
        }
    }
    return build_graph(rows * cols, edges);
}

Graph make_gnp(int n, double p, std::uint64_t seed)
{
    detail::Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = u + 1; v <= n; ++v) {
            if (detail::unit_real(rng) < p) {
                edges.push_back({u, v});
            }
        }
    }
    return build_graph(n, edges);
}

// Stacked triangulation: every insertion splits a uniformly chosen face of
// the current plane triangulation into three. The starting triangle bounds
// two faces, the inner one and the outer one.
Graph make_planar3tree(int n, std::uint64_t seed)
{
    detail::Rng rng(seed);
    std::vector<Edge> edges{{1, 2}, {2, 3}, {1, 3}};
    std::vector<std::array<Vertex, 3>> faces{{1, 2, 3}, {1, 2, 3}};
    for (Vertex x = 4; x <= n; ++x) {
        auto pick = static_cast<std::size_t>(detail::uniform_below(rng, faces.size()));
        auto [a, b, c] = faces[pick];
        edges.push_back({a, x});
        edges.push_back({b, x});
        edges.push_back({c, x});
        faces[pick] = {a, b, x};
        faces.push_back({b, c, x});
        faces.push_back({a, c, x});
    }
    return build_graph(n, edges);
}

std::string format_param(double x)
{
    std::ostringstream os;
    os << x;
    return os.str();
}

} // namespace

Family parse_family(std::string_view name)
{
    for (auto [f, s] : kFamilies) {
        if (s == name) {
            return f;
        }
    }
    throw InputError("unknown graph family '" + std::string(name) + "'");
}

std::string_view family_name(Family f)
{
    for (auto [g, s] : kFamilies) {
        if (g == f) {
            return s;
        }
    }
    return "?";
}

std::vector<double> parse_params(std::string_view text)
{
    std::vector<double> out;
    if (text.empty()) {
        return out;
    }
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string tok(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
        std::size_t used = 0;
        double x = 0;
        try {
            x = std::stod(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (tok.empty() || used != tok.size()) {
            throw InputError("malformed parameter '" + tok + "'");
        }
        out.push_back(x);
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

void validate(const GenSpec& spec)
{
    if (spec.params.size() != arity(spec.family)) {
        bad(spec, "expects " + std::to_string(arity(spec.family)) + " parameter(s), got " +
                      std::to_string(spec.params.size()));
    }
    switch (spec.family) {
    case Family::path:
    case Family::complete:
        int_param(spec, 0, 1);
        break;
    case Family::cycle:
        int_param(spec, 0, 3);
        break;
    case Family::star:
        int_param(spec, 0, 0);
        break;
    case Family::complete_bipartite:
        int_param(spec, 0, 1);
        int_param(spec, 1, 1);
        break;
    case Family::grid:
        if (static_cast<double>(int_param(spec, 0, 1)) * int_param(spec, 1, 1) > kMaxVertices) {
            bad(spec, "grid too large");
        }
        break;
    case Family::gnp: {
        int_param(spec, 0, 1);
        double p = spec.params[1];
        if (!(p >= 0.0 && p <= 1.0)) {
            bad(spec, "p must lie in [0, 1]");
        }
        break;
    }
    case Family::planar3tree:
        int_param(spec, 0, 3);
        break;
    }
}

Graph generate(const GenSpec& spec)
{
    validate(spec);
    auto p = [&](std::size_t i) { return static_cast<int>(spec.params[i]); };
    switch (spec.family) {
    case Family::path:
        return make_path(p(0));
    case Family::cycle:
        return make_cycle(p(0));
    case Family::complete:
        return make_complete(p(0));
    case Family::star:
        return make_star(p(0));
    case Family::complete_bipartite:
        return make_complete_bipartite(p(0), p(1));
    case Family::grid:
        return make_grid(p(0), p(1));
    case Family::gnp:
        return make_gnp(p(0), spec.params[1], spec.seed);
    case Family::planar3tree:
        return make_planar3tree(p(0), spec.seed);
    }
    return {};
}

std::string graph_id(const GenSpec& spec)
{
    std::string id(family_name(spec.family));
    for (double x : spec.params) {
        id += "_" + format_param(x);
    }
    if (spec.randomized()) {
        id += "_s" + std::to_string(spec.seed);
    }
    return id;
}

} // namespace pcf
