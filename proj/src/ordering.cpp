#include "pcf/ordering.hpp"

#include <istream>
#include <numeric>
#include <ostream>
#include <string>

#include "pcf/error.hpp"

namespace pcf {

VertexOrdering VertexOrdering::from_sequence(std::vector<Vertex> seq)
{
    VertexOrdering ord;
    const auto n = seq.size();
    ord.pos_.assign(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Vertex v = seq[i];
        if (v < 1 || static_cast<std::size_t>(v) > n) {
            throw InputError("ordering entry " + std::to_string(v) + " out of range 1.." + std::to_string(n));
        }
        auto& slot = ord.pos_[static_cast<std::size_t>(v - 1)];
        if (slot != n) {
            throw InputError("vertex " + std::to_string(v) + " appears twice in ordering");
        }
        slot = i;
    }
    ord.seq_ = std::move(seq);
    return ord;
}

VertexOrdering VertexOrdering::identity(int n)
{
    std::vector<Vertex> seq(static_cast<std::size_t>(n));
    std::iota(seq.begin(), seq.end(), 1);
    return from_sequence(std::move(seq));
}

VertexOrdering VertexOrdering::reversed() const
{
    return from_sequence({seq_.rbegin(), seq_.rend()});
}

VertexOrdering load_ordering(std::istream& in, int n)
{
    std::vector<Vertex> seq;
    long long v = 0;
    while (in >> v) {
        if (v < 1 || v > n) {
            throw InputError("ordering entry " + std::to_string(v) + " out of range 1.." + std::to_string(n));
        }
        seq.push_back(static_cast<Vertex>(v));
    }
    if (!in.eof()) {
        throw InputError("malformed ordering entry after position " + std::to_string(seq.size()));
    }
    if (static_cast<int>(seq.size()) != n) {
        throw InputError("ordering lists " + std::to_string(seq.size()) + " vertices, graph has " +
                         std::to_string(n));
    }
    return VertexOrdering::from_sequence(std::move(seq));
}

void save_ordering(std::ostream& out, const VertexOrdering& ord)
{
    for (Vertex v : ord.sequence()) {
        out << v << '\n';
    }
}

} // namespace pcf
