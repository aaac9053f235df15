#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pcf/graph.hpp"

namespace pcf {

enum class Family { path, cycle, complete, star, complete_bipartite, grid, gnp, planar3tree };

Family parse_family(std::string_view name);
std::string_view family_name(Family f);

/// Generator request. Parameters per family:
///   path(n), cycle(n), complete(n), star(m), complete_bipartite(a, b),
///   grid(rows, cols), gnp(n, p), planar3tree(n).
/// The seed is only consulted by gnp and planar3tree.
struct GenSpec {
    Family family = Family::path;
    std::vector<double> params;
    std::uint64_t seed = 0;

    bool randomized() const noexcept { return family == Family::gnp || family == Family::planar3tree; }
};

/// Parses a comma-separated parameter list such as "20,50" or "8,0.4".
std::vector<double> parse_params(std::string_view text);

/// Throws InputError when the parameters do not fit the family.
void validate(const GenSpec& spec);

/// Deterministic in (family, params, seed). Randomized families draw from
/// std::mt19937_64 seeded with `seed`.
Graph generate(const GenSpec& spec);

/// Stable CSV-safe identifier, e.g. "grid_20_50" or "gnp_8_0.4_s3".
std::string graph_id(const GenSpec& spec);

} // namespace pcf
