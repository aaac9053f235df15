#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pcf/generators.hpp"
#include "pcf/graph.hpp"
#include "pcf/ordering.hpp"

namespace pcf {

enum class StrategyKind { identity, reverse, random, degeneracy, min_backreach };

/// Named ordering strategy. Spelled identity, reverse, random(SEED),
/// degeneracy or min_backreach; "random" alone means seed 0.
struct Strategy {
    StrategyKind kind = StrategyKind::identity;
    std::uint64_t seed = 0;

    std::string name() const;
    friend bool operator==(const Strategy&, const Strategy&) = default;
};

Strategy parse_strategy(std::string_view text);
std::vector<Strategy> parse_strategy_list(std::string_view comma_separated);

/// random(seed) is a Fisher-Yates shuffle driven by std::mt19937_64(seed).
VertexOrdering make_ordering(const Graph& g, const Strategy& strategy);

enum class BoundKind { scol2, kplanar, minor };

BoundKind parse_bound_kind(std::string_view name);

/// Upper bounds on the proper conflict-free chromatic number:
///   scol2   x = scol_2(G)               -> 2x - 1
///   kplanar x = k, G k-planar            -> 60x + 59
///   minor   x = t, G has no K_t minor    -> 5(x - 1)(x - 2) - 1
/// Throws std::domain_error outside x >= 1, x >= 0 and x >= 2 respectively.
long long bound(BoundKind kind, long long x);

struct CorpusEntry {
    std::string graph_id;
    std::string family;
    std::variant<GenSpec, std::filesystem::path> source;
};

CorpusEntry corpus_entry(const GenSpec& spec);
CorpusEntry corpus_entry(const std::filesystem::path& file);

/// One entry per non-blank, non-'#' line:
///   <family> <params> [seed]     e.g. "grid 20,50" or "gnp 8,0.4 3"
///   file <path>                  relative paths resolve against base_dir
std::vector<CorpusEntry> load_corpus(std::istream& in, const std::filesystem::path& base_dir);

Graph materialize(const CorpusEntry& entry);

struct BenchRecord {
    std::string graph_id;
    std::string family;
    int n = 0;
    std::size_t m = 0;
    std::string strategy;
    int r2 = 0;
    int colours_used = 0;
    int bound_thm1 = 0;
    bool proper_ok = false;
    bool odd_ok = false;
    bool cf_ok = false;
    std::optional<int> exact_cf;
    double runtime_ms = 0.0;

    /// All validators passed and the colour count is within bound_thm1.
    bool ok() const noexcept { return proper_ok && odd_ok && cf_ok && colours_used <= bound_thm1; }
};

/// Records in (graph, strategy) order. exact_cf is filled for graphs with at
/// most exact_up_to vertices. Loading failures are rethrown as InputError
/// prefixed with the graph id.
std::vector<BenchRecord> run_corpus(std::span<const CorpusEntry> corpus, std::span<const Strategy> strategies,
                                    int exact_up_to = 0);

inline constexpr std::string_view kCsvHeader =
    "graph_id,family,n,m,strategy,r2,colours_used,bound_thm1,proper_ok,odd_ok,cf_ok,exact_cf,runtime_ms";

void write_csv(std::ostream& out, std::span<const BenchRecord> records);

} // namespace pcf
