#include "pcf/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "pcf/colouring.hpp"
#include "pcf/error.hpp"
#include "pcf/graph_io.hpp"
#include "pcf/reach.hpp"
#include "random.hpp"

namespace pcf {

namespace {

VertexOrdering shuffled(int n, std::uint64_t seed)
{
    std::vector<Vertex> seq(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        seq[static_cast<std::size_t>(i)] = i + 1;
    }
    detail::Rng rng(seed);
    for (std::size_t i = seq.size(); i > 1; --i) {
        auto j = static_cast<std::size_t>(detail::uniform_below(rng, i));
        std::swap(seq[i - 1], seq[j]);
    }
    return VertexOrdering::from_sequence(std::move(seq));
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n\r") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string Strategy::name() const
{
    switch (kind) {
    case StrategyKind::identity:
        return "identity";
    case StrategyKind::reverse:
        return "reverse";
    case StrategyKind::random:
        return "random(" + std::to_string(seed) + ")";
    case StrategyKind::degeneracy:
        return "degeneracy";
    case StrategyKind::min_backreach:
        return "min_backreach";
    }
    return "?";
}

Strategy parse_strategy(std::string_view text)
{
    if (text == "identity") {
        return {StrategyKind::identity};
    }
    if (text == "reverse") {
        return {StrategyKind::reverse};
    }
    if (text == "degeneracy") {
        return {StrategyKind::degeneracy};
    }
    if (text == "min_backreach") {
        return {StrategyKind::min_backreach};
    }
    if (text == "random") {
        return {StrategyKind::random, 0};
    }
    if (text.starts_with("random(") && text.ends_with(")") && text.size() > 8) {
        std::string digits(text.substr(7, text.size() - 8));
        if (digits.find_first_not_of("0123456789") == std::string::npos) {
            try {
                return {StrategyKind::random, std::stoull(digits)};
            } catch (const std::out_of_range&) {
            }
        }
    }
    throw InputError("unknown strategy '" + std::string(text) + "'");
}

std::vector<Strategy> parse_strategy_list(std::string_view comma_separated)
{
    std::vector<Strategy> out;
    std::size_t start = 0;
    while (start <= comma_separated.size()) {
        std::size_t comma = comma_separated.find(',', start);
        if (comma == std::string_view::npos) {
            comma = comma_separated.size();
        }
        out.push_back(parse_strategy(comma_separated.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

VertexOrdering make_ordering(const Graph& g, const Strategy& strategy)
{
    switch (strategy.kind) {
    case StrategyKind::identity:
        return VertexOrdering::identity(g.order());
    case StrategyKind::reverse:
        return VertexOrdering::identity(g.order()).reversed();
    case StrategyKind::random:
        return shuffled(g.order(), strategy.seed);
    case StrategyKind::degeneracy:
        return degeneracy_order(g).order;
    case StrategyKind::min_backreach:
        return min_backreach_order(g);
    }
    throw std::logic_error("unhandled strategy");
}

BoundKind parse_bound_kind(std::string_view name)
{
    if (name == "scol2") {
        return BoundKind::scol2;
    }
    if (name == "kplanar") {
        return BoundKind::kplanar;
    }
    if (name == "minor") {
        return BoundKind::minor;
    }
    throw InputError("unknown bound kind '" + std::string(name) + "'");
}

long long bound(BoundKind kind, long long x)
{
    switch (kind) {
    case BoundKind::scol2:
        if (x < 1) {
            throw std::domain_error("scol2 bound needs scol_2 >= 1");
        }
        return 2 * x - 1;
    case BoundKind::kplanar:
        if (x < 0) {
            throw std::domain_error("k-planar bound needs k >= 0");
        }
        return 60 * x + 59;
    case BoundKind::minor:
        if (x < 2) {
            throw std::domain_error("minor-free bound needs t >= 2");
        }
        return 5 * (x - 1) * (x - 2) - 1;
    }
    throw std::logic_error("unhandled bound kind");
}

CorpusEntry corpus_entry(const GenSpec& spec)
{
    validate(spec);
    return {graph_id(spec), std::string(family_name(spec.family)), spec};
}

CorpusEntry corpus_entry(const std::filesystem::path& file)
{
    return {file.string(), "file", file};
}

std::vector<CorpusEntry> load_corpus(std::istream& in, const std::filesystem::path& base_dir)
{
    std::vector<CorpusEntry> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string head;
        if (!(fields >> head) || head.front() == '#') {
            continue;
        }
        std::string arg;
        std::string extra;
        std::string more;
        fields >> arg >> extra >> more;
        auto where = "corpus line " + std::to_string(line_no) + ": ";
        if (arg.empty() || !more.empty()) {
            throw InputError(where + "expected \"<family> <params> [seed]\" or \"file <path>\"");
        }
        try {
            if (head == "file") {
                if (!extra.empty()) {
                    throw InputError("unexpected token '" + extra + "'");
                }
                std::filesystem::path p(arg);
                out.push_back(corpus_entry(p.is_absolute() ? p : base_dir / p));
                continue;
            }
            GenSpec spec{parse_family(head), parse_params(arg), 0};
            if (!extra.empty()) {
                if (extra.find_first_not_of("0123456789") != std::string::npos) {
                    throw InputError("malformed seed '" + extra + "'");
                }
                spec.seed = std::stoull(extra);
            }
            out.push_back(corpus_entry(spec));
        } catch (const std::exception& e) {
            throw InputError(where + e.what());
        }
    }
    return out;
}

Graph materialize(const CorpusEntry& entry)
{
    try {
        if (const auto* spec = std::get_if<GenSpec>(&entry.source)) {
            return generate(*spec);
        }
        const auto& path = std::get<std::filesystem::path>(entry.source);
        return load_graph_file(path.string(), format_from_path(path.string()));
    } catch (const std::exception& e) {
        throw InputError(entry.graph_id + ": " + e.what());
    }
}

std::vector<BenchRecord> run_corpus(std::span<const CorpusEntry> corpus, std::span<const Strategy> strategies,
                                    int exact_up_to)
{
    if (strategies.empty()) {
        throw std::invalid_argument("run_corpus: no strategies given");
    }
    std::vector<BenchRecord> records;
    for (const CorpusEntry& entry : corpus) {
        const Graph g = materialize(entry);
        std::optional<int> exact_cf;
        if (g.order() <= exact_up_to) {
            exact_cf = exact_chromatic(g, Criterion::conflict_free, std::max(exact_up_to, kDefaultChromaticLimit)).value;
        }
        for (const Strategy& strategy : strategies) {
            const auto start = std::chrono::steady_clock::now();
            BenchRecord rec;
            rec.graph_id = entry.graph_id;
            rec.family = entry.family;
            rec.n = g.order();
            rec.m = g.size();
            rec.strategy = strategy.name();
            const VertexOrdering ord = make_ordering(g, strategy);
            rec.r2 = back_reach_profile(g, ord, 2).max;
            const Colouring col = greedy_cf_colouring(g, ord);
            rec.colours_used = col.used();
            rec.bound_thm1 = rec.r2 >= 1 ? static_cast<int>(bound(BoundKind::scol2, rec.r2)) : 0;
            rec.proper_ok = verify_colouring(g, col, Criterion::proper).ok;
            rec.odd_ok = verify_colouring(g, col, Criterion::odd).ok;
            rec.cf_ok = verify_colouring(g, col, Criterion::conflict_free).ok;
            rec.exact_cf = exact_cf;
            rec.runtime_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            records.push_back(std::move(rec));
        }
    }
    return records;
}

void write_csv(std::ostream& out, std::span<const BenchRecord> records)
{
    auto flag = [](bool b) { return b ? "true" : "false"; };
    out << kCsvHeader << '\n';
    for (const BenchRecord& r : records) {
        char runtime[32];
        std::snprintf(runtime, sizeof runtime, "%.3f", r.runtime_ms);
        out << csv_field(r.graph_id) << ',' << csv_field(r.family) << ',' << r.n << ',' << r.m << ','
            << csv_field(r.strategy) << ',' << r.r2 << ',' << r.colours_used << ',' << r.bound_thm1 << ','
            << flag(r.proper_ok) << ',' << flag(r.odd_ok) << ',' << flag(r.cf_ok) << ',';
        if (r.exact_cf) {
            out << *r.exact_cf;
        }
        out << ',' << runtime << '\n';
    }
}

} // namespace pcf
