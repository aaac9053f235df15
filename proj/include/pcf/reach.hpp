#pragma once

#include <vector>

#include "pcf/graph.hpp"
#include "pcf/ordering.hpp"

namespace pcf {

/// R(G, ord, v, s): the vertices w with w at or left of v that v reaches by a
/// path of length at most s whose internal vertices all lie strictly right
/// of v. Always contains v. Returned sorted by vertex id.
std::vector<Vertex> reach_set(const Graph& g, const VertexOrdering& ord, Vertex v, int s);

/// Reusable scratch space for computing many reach sets over one
/// (graph, ordering) pair. Breadth-first search to depth s that only expands
/// v itself and vertices right of v.
class ReachExplorer {
public:
    ReachExplorer(const Graph& g, const VertexOrdering& ord);

    /// Unsorted view, valid until the next call.
    const std::vector<Vertex>& explore(Vertex v, int s);

private:
    const Graph* graph_;
    const VertexOrdering* order_;
    std::vector<unsigned> stamp_;
    unsigned epoch_ = 0;
    std::vector<Vertex> frontier_;
    std::vector<Vertex> next_;
    std::vector<Vertex> reached_;
};

struct ReachProfile {
    int s = 1;
    std::vector<int> sizes; ///< sizes[v - 1] = |R(G, ord, v, s)|
    int max = 0;            ///< 0 only for the empty graph
};

ReachProfile back_reach_profile(const Graph& g, const VertexOrdering& ord, int s);

struct DegeneracyOrder {
    VertexOrdering order;
    int degeneracy = 0;
};

/// Smallest-last elimination: repeatedly removes a minimum-degree vertex
/// (smallest id on ties); the ordering is the reversed removal sequence, so
/// every vertex has at most `degeneracy` neighbours to its left.
DegeneracyOrder degeneracy_order(const Graph& g);

/// Greedy right-to-left construction: each step places, at the rightmost free
/// position, the vertex whose radius-2 reach set would be smallest given the
/// vertices already placed to its right. Smallest id on ties. Heuristic; no
/// approximation guarantee.
VertexOrdering min_backreach_order(const Graph& g);

inline constexpr int kDefaultScolLimit = 10;
/// Hard ceiling of the subset-indexed search, independent of the caller's limit.
inline constexpr int kMaxScolVertices = 24;

struct ScolResult {
    int value = 0;
    VertexOrdering witness;
};

/// Exact s-strong colouring number: the minimum over all orderings of the
/// back-reach maximum. The witness is the lexicographically first optimal
/// ordering. Throws LimitExceeded when g has more than `limit` vertices.
ScolResult exact_scol(const Graph& g, int s, int limit = kDefaultScolLimit);

} // namespace pcf
