#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace pcf {

/// Vertices are identified by 1..n everywhere in the public API.
using Vertex = int;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph stored as sorted adjacency lists.
/// Immutable once built; construct through build_graph().
class Graph {
public:
    Graph() = default;

    int order() const noexcept { return static_cast<int>(adjacency_.size()); }
    std::size_t size() const noexcept { return edge_count_; }

    std::span<const Vertex> neighbours(Vertex v) const { return adjacency_.at(index(v)); }
    int degree(Vertex v) const { return static_cast<int>(neighbours(v).size()); }
    bool adjacent(Vertex u, Vertex v) const;
    bool contains(Vertex v) const noexcept { return v >= 1 && v <= order(); }

    /// All edges with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend Graph build_graph(int n, std::span<const Edge> edges);

    static std::size_t index(Vertex v) { return static_cast<std::size_t>(v - 1); }

    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Builds a graph on vertices 1..n. Throws InputError naming the offending
/// pair for an out-of-range endpoint, a self-loop or a duplicate edge.
Graph build_graph(int n, std::span<const Edge> edges);

} // namespace pcf
