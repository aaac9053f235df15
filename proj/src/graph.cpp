#include "pcf/graph.hpp"

#include <algorithm>
#include <string>

#include "pcf/error.hpp"

namespace pcf {

namespace {

std::string pair_text(const Edge& e)
{
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

} // namespace

bool Graph::adjacent(Vertex u, Vertex v) const
{
    auto nbrs = neighbours(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 1; u <= order(); ++u) {
        for (Vertex v : neighbours(u)) {
            if (u < v) {
                out.push_back({u, v});
            }
        }
    }
    return out;
}

Graph build_graph(int n, std::span<const Edge> edges)
{
    if (n < 0) {
        throw InputError("negative vertex count " + std::to_string(n));
    }
    Graph g;
    g.adjacency_.resize(static_cast<std::size_t>(n));
    for (const Edge& e : edges) {
        if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
            Vertex bad = (e.u < 1 || e.u > n) ? e.u : e.v;
            throw InputError("edge " + pair_text(e) + ": endpoint " + std::to_string(bad) +
                             " out of range 1.." + std::to_string(n));
        }
        if (e.u == e.v) {
            throw InputError("edge " + pair_text(e) + ": self-loop");
        }
        g.adjacency_[Graph::index(e.u)].push_back(e.v);
        g.adjacency_[Graph::index(e.v)].push_back(e.u);
    }
    for (Vertex v = 1; v <= n; ++v) {
        auto& nbrs = g.adjacency_[Graph::index(v)];
        std::sort(nbrs.begin(), nbrs.end());
        auto dup = std::adjacent_find(nbrs.begin(), nbrs.end());
        if (dup != nbrs.end()) {
            Edge e{std::min(v, *dup), std::max(v, *dup)};
            throw InputError("duplicate edge " + pair_text(e));
        }
    }
    g.edge_count_ = edges.size();
    return g;
}

} // namespace pcf
