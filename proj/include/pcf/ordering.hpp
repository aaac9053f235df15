#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "pcf/graph.hpp"

namespace pcf {

/// A total order of 1..n. Position 0 is the leftmost vertex.
class VertexOrdering {
public:
    VertexOrdering() = default;

    /// Throws InputError unless `seq` is a permutation of 1..seq.size().
    static VertexOrdering from_sequence(std::vector<Vertex> seq);
    static VertexOrdering identity(int n);

    int size() const noexcept { return static_cast<int>(seq_.size()); }
    Vertex at(std::size_t position) const { return seq_.at(position); }
    std::size_t position(Vertex v) const { return pos_.at(static_cast<std::size_t>(v - 1)); }
    std::span<const Vertex> sequence() const noexcept { return seq_; }

    /// u strictly left of v.
    bool before(Vertex u, Vertex v) const { return position(u) < position(v); }

    VertexOrdering reversed() const;

    friend bool operator==(const VertexOrdering& a, const VertexOrdering& b) { return a.seq_ == b.seq_; }

private:
    std::vector<Vertex> seq_;
    std::vector<std::size_t> pos_;
};

/// Ordering files list one 1-based vertex id per line, leftmost first.
/// `n` is the vertex count of the graph the ordering is meant for.
VertexOrdering load_ordering(std::istream& in, int n);
void save_ordering(std::ostream& out, const VertexOrdering& ord);

} // namespace pcf
