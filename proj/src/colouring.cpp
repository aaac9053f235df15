#include "pcf/colouring.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "pcf/error.hpp"
#include "pcf/reach.hpp"

namespace pcf {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v - 1); }

class NeighbourhoodCounter {
public:
    explicit NeighbourhoodCounter(int palette) : counts_(static_cast<std::size_t>(palette) + 1, 0) {}

    // True when v's neighbourhood sees some colour an odd number of times
    // (odd) or exactly once (conflict_free).
    bool check(const Graph& g, std::span<const int> colours, Vertex v, Criterion c)
    {
        for (Vertex w : g.neighbours(v)) {
            ++counts_[static_cast<std::size_t>(colours[idx(w)])];
        }
        bool ok = false;
        for (Vertex w : g.neighbours(v)) {
            int& k = counts_[static_cast<std::size_t>(colours[idx(w)])];
            if (k > 0) {
                ok = ok || (c == Criterion::odd ? k % 2 == 1 : k == 1);
                k = 0;
            }
        }
        return ok;
    }

private:
    std::vector<int> counts_;
};

} // namespace

Colouring::Colouring(std::vector<int> colours, int palette) : colours_(std::move(colours)), palette_(palette)
{
    std::vector<bool> seen(static_cast<std::size_t>(std::max(palette, 0)) + 1, false);
    for (std::size_t i = 0; i < colours_.size(); ++i) {
        int c = colours_[i];
        if (c < 1 || c > palette) {
            throw InputError("vertex " + std::to_string(i + 1) + " has colour " + std::to_string(c) +
                             " outside palette 1.." + std::to_string(palette));
        }
        if (!seen[static_cast<std::size_t>(c)]) {
            seen[static_cast<std::size_t>(c)] = true;
            ++used_;
        }
    }
}

Criterion parse_criterion(std::string_view name)
{
    if (name == "proper") {
        return Criterion::proper;
    }
    if (name == "odd") {
        return Criterion::odd;
    }
    if (name == "conflict_free") {
        return Criterion::conflict_free;
    }
    throw InputError("unknown criterion '" + std::string(name) + "'");
}

std::string_view criterion_name(Criterion c)
{
    switch (c) {
    case Criterion::proper:
        return "proper";
    case Criterion::odd:
        return "odd";
    case Criterion::conflict_free:
        return "conflict_free";
    }
    return "?";
}

Colouring greedy_cf_colouring(const Graph& g, const VertexOrdering& ord)
{
    const int n = g.order();
    if (n == 0) {
        return {};
    }
    const int r2 = back_reach_profile(g, ord, 2).max;
    const int palette = std::max(1, 2 * r2 - 1);

    std::vector<Vertex> leftmost(static_cast<std::size_t>(n), 0);
    for (Vertex v = 1; v <= n; ++v) {
        auto nbrs = g.neighbours(v);
        if (!nbrs.empty()) {
            leftmost[idx(v)] = *std::min_element(nbrs.begin(), nbrs.end(), [&](Vertex a, Vertex b) {
                return ord.position(a) < ord.position(b);
            });
        }
    }

    std::vector<int> colours(static_cast<std::size_t>(n), 0);
    std::vector<int> blocked_at(static_cast<std::size_t>(palette) + 2, -1);
    ReachExplorer explorer(g, ord);
    for (int i = 0; i < n; ++i) {
        const Vertex v = ord.at(static_cast<std::size_t>(i));
        auto block = [&](int c) {
            if (c <= palette) {
                blocked_at[static_cast<std::size_t>(c)] = i;
            }
        };
        for (Vertex w : explorer.explore(v, 2)) {
            if (w != v) {
                block(colours[idx(w)]);
            }
        }
        for (Vertex u : g.neighbours(v)) {
            if (ord.before(u, v) && leftmost[idx(u)] != v) {
                block(colours[idx(leftmost[idx(u)])]);
            }
        }
        int c = 1;
        while (c <= palette && blocked_at[static_cast<std::size_t>(c)] == i) {
            ++c;
        }
        if (c > palette) {
            throw BoundViolation("greedy_cf_colouring: palette of " + std::to_string(palette) +
                                   " exhausted at vertex " + std::to_string(v));
        }
        colours[idx(v)] = c;
    }
    return Colouring(std::move(colours), palette);
}

Verdict verify_colouring(const Graph& g, const Colouring& col, Criterion criterion)
{
    if (col.size() != g.order()) {
        throw std::invalid_argument("colouring covers " + std::to_string(col.size()) + " vertices, graph has " +
                                    std::to_string(g.order()));
    }
    const auto colours = col.colours();
    if (criterion == Criterion::proper) {
        for (const Edge& e : g.edges()) {
            if (col.colour(e.u) == col.colour(e.v)) {
                return {false, e.u,
                        "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") has both ends coloured " +
                            std::to_string(col.colour(e.u))};
            }
        }
        return {true, std::nullopt, "proper"};
    }
    NeighbourhoodCounter counter(col.palette());
    for (Vertex v = 1; v <= g.order(); ++v) {
        if (g.degree(v) > 0 && !counter.check(g, colours, v, criterion)) {
            return {false, v,
                    "no colour appears " + std::string(criterion == Criterion::odd ? "an odd number of times" : "exactly once") +
                        " in the neighbourhood of vertex " + std::to_string(v)};
        }
    }
    return {true, std::nullopt, std::string(criterion_name(criterion))};
}

namespace {

class ChromaticSearch {
public:
    ChromaticSearch(const Graph& g, Criterion variant)
        : g_(g), variant_(variant), n_(g.order()), colours_(static_cast<std::size_t>(n_), 0),
          counter_(n_), closes_(static_cast<std::size_t>(n_) + 1)
    {
        // A vertex's neighbourhood is fully coloured once its largest
        // neighbour is; check it there instead of at the leaves.
        for (Vertex v = 1; v <= n_; ++v) {
            auto nbrs = g.neighbours(v);
            if (!nbrs.empty()) {
                closes_[static_cast<std::size_t>(nbrs.back())].push_back(v);
            }
        }
    }

    bool solve(int palette)
    {
        palette_ = palette;
        return extend(1, 0);
    }

    Colouring witness() const { return Colouring(colours_, palette_); }

private:
    bool extend(Vertex v, int introduced)
    {
        if (v > n_) {
            return true;
        }
        const int top = std::min(palette_, introduced + 1);
        for (int c = 1; c <= top; ++c) {
            if (conflicts(v, c)) {
                continue;
            }
            colours_[idx(v)] = c;
            if (closed_ok(v) && extend(v + 1, std::max(introduced, c))) {
                return true;
            }
        }
        colours_[idx(v)] = 0;
        return false;
    }

    bool conflicts(Vertex v, int c) const
    {
        for (Vertex w : g_.neighbours(v)) {
            if (w >= v) {
                break;
            }
            if (colours_[idx(w)] == c) {
                return true;
            }
        }
        return false;
    }

    bool closed_ok(Vertex v)
    {
        if (variant_ == Criterion::proper) {
            return true;
        }
        for (Vertex w : closes_[static_cast<std::size_t>(v)]) {
            if (!counter_.check(g_, colours_, w, variant_)) {
                return false;
            }
        }
        return true;
    }

    const Graph& g_;
    Criterion variant_;
    int n_;
    int palette_ = 0;
    std::vector<int> colours_;
    NeighbourhoodCounter counter_;
    std::vector<std::vector<Vertex>> closes_;
};

} // namespace

ChromaticResult exact_chromatic(const Graph& g, Criterion variant, int limit)
{
    if (g.order() > limit) {
        throw LimitExceeded("exact_chromatic: graph has " + std::to_string(g.order()) + " vertices, limit is " +
                            std::to_string(limit));
    }
    if (g.order() == 0) {
        return {};
    }
    ChromaticSearch search(g, variant);
    for (int c = 1;; ++c) {
        if (search.solve(c)) {
            return {c, search.witness()};
        }
    }
}

Colouring load_colouring(std::istream& in)
{
    std::string line;
    auto next_line = [&](std::istringstream& fields) {
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") != std::string::npos) {
                fields.clear();
                fields.str(line);
                return true;
            }
        }
        return false;
    };
    std::istringstream fields;
    long long n = 0;
    long long palette = 0;
    std::string rest;
    if (!next_line(fields) || !(fields >> n >> palette) || (fields >> rest) || n < 0 || palette < 0 ||
        n > (1LL << 30) || palette > (1LL << 30)) {
        throw InputError("colouring: malformed header");
    }
    std::vector<int> colours(static_cast<std::size_t>(n), 0);
    for (long long i = 0; i < n; ++i) {
        long long v = 0;
        long long c = 0;
        if (!next_line(fields) || !(fields >> v >> c) || (fields >> rest)) {
            throw InputError("colouring: expected " + std::to_string(n) + " lines \"v colour\"");
        }
        if (v < 1 || v > n) {
            throw InputError("colouring: vertex " + std::to_string(v) + " out of range");
        }
        auto& slot = colours[static_cast<std::size_t>(v - 1)];
        if (slot != 0) {
            throw InputError("colouring: vertex " + std::to_string(v) + " listed twice");
        }
        if (c < 1 || c > palette) {
            throw InputError("colouring: vertex " + std::to_string(v) + " has colour " + std::to_string(c) +
                             " outside palette 1.." + std::to_string(palette));
        }
        slot = static_cast<int>(c);
    }
    if (next_line(fields)) {
        throw InputError("colouring: trailing content after " + std::to_string(n) + " vertices");
    }
    return Colouring(std::move(colours), static_cast<int>(palette));
}

void save_colouring(std::ostream& out, const Colouring& col)
{
    out << col.size() << ' ' << col.palette() << '\n';
    for (Vertex v = 1; v <= col.size(); ++v) {
        out << v << ' ' << col.colour(v) << '\n';
    }
}

} // namespace pcf
