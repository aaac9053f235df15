#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pcf/graph.hpp"
#include "pcf/ordering.hpp"

namespace pcf {

/// Vertex colouring with colours drawn from 1..palette.
class Colouring {
public:
    Colouring() = default;
    /// colours[v - 1] is the colour of v; throws InputError for a colour
    /// outside 1..palette.
    Colouring(std::vector<int> colours, int palette);

    int size() const noexcept { return static_cast<int>(colours_.size()); }
    int palette() const noexcept { return palette_; }
    int used() const noexcept { return used_; }
    int colour(Vertex v) const { return colours_.at(static_cast<std::size_t>(v - 1)); }
    std::span<const int> colours() const noexcept { return colours_; }

    friend bool operator==(const Colouring&, const Colouring&) = default;

private:
    std::vector<int> colours_;
    int palette_ = 0;
    int used_ = 0;
};

enum class Criterion { proper, odd, conflict_free };

Criterion parse_criterion(std::string_view name);
std::string_view criterion_name(Criterion c);

struct Verdict {
    bool ok = true;
    std::optional<Vertex> witness; ///< set whenever ok is false
    std::string detail;
};

/// Left-to-right conflict-free colouring along `ord`. Each vertex takes the
/// smallest colour missing from
///   X: the colours of its radius-2 reach set (minus itself), and
///   Y: the colours of the leftmost neighbours of its left neighbours
///      (skipping those whose leftmost neighbour is the vertex itself).
/// The result is proper and conflict-free, and its palette is 2r - 1 where r
/// is the back-reach maximum of `ord` at radius 2.
Colouring greedy_cf_colouring(const Graph& g, const VertexOrdering& ord);

/// Checks one criterion. Vertices without neighbours are exempt from the odd
/// and conflict-free conditions. Throws std::invalid_argument when the
/// colouring does not cover exactly the vertices of g.
Verdict verify_colouring(const Graph& g, const Colouring& col, Criterion criterion);

inline constexpr int kDefaultChromaticLimit = 8;

struct ChromaticResult {
    int value = 0;
    Colouring witness;
};

/// Smallest number of colours in a proper colouring that also satisfies
/// `variant` (so conflict_free gives the proper conflict-free chromatic
/// number). Exhaustive backtracking; throws LimitExceeded above `limit`
/// vertices.
ChromaticResult exact_chromatic(const Graph& g, Criterion variant, int limit = kDefaultChromaticLimit);

/// Colouring files: header "n c", then n lines "v colour" sorted by v.
Colouring load_colouring(std::istream& in);
void save_colouring(std::ostream& out, const Colouring& col);

} // namespace pcf
