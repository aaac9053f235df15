#include "pcf/reach.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "pcf/error.hpp"

namespace pcf {

namespace {

void check_radius(int s)
{
    if (s < 1) {
        throw std::invalid_argument("reach radius must be >= 1, got " + std::to_string(s));
    }
}

void check_ordering(const Graph& g, const VertexOrdering& ord)
{
    if (ord.size() != g.order()) {
        throw std::invalid_argument("ordering has " + std::to_string(ord.size()) + " vertices, graph has " +
                                    std::to_string(g.order()));
    }
}

} // namespace

ReachExplorer::ReachExplorer(const Graph& g, const VertexOrdering& ord)
    : graph_(&g), order_(&ord), stamp_(static_cast<std::size_t>(g.order()), 0)
{
    check_ordering(g, ord);
}

const std::vector<Vertex>& ReachExplorer::explore(Vertex v, int s)
{
    check_radius(s);
    if (!graph_->contains(v)) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }
    if (++epoch_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 1;
    }
    auto seen = [this](Vertex u) -> unsigned& { return stamp_[static_cast<std::size_t>(u - 1)]; };
    const std::size_t vpos = order_->position(v);

    reached_.assign(1, v);
    frontier_.assign(1, v);
    seen(v) = epoch_;
    for (int depth = 1; depth <= s && !frontier_.empty(); ++depth) {
        next_.clear();
        for (Vertex u : frontier_) {
            for (Vertex w : graph_->neighbours(u)) {
                if (seen(w) == epoch_) {
                    continue;
                }
                seen(w) = epoch_;
                if (order_->position(w) < vpos) {
                    reached_.push_back(w);
                } else {
                    next_.push_back(w);
                }
            }
        }
        std::swap(frontier_, next_);
    }
    return reached_;
}

std::vector<Vertex> reach_set(const Graph& g, const VertexOrdering& ord, Vertex v, int s)
{
    ReachExplorer explorer(g, ord);
    std::vector<Vertex> out = explorer.explore(v, s);
    std::sort(out.begin(), out.end());
    return out;
}

ReachProfile back_reach_profile(const Graph& g, const VertexOrdering& ord, int s)
{
    check_radius(s);
    ReachExplorer explorer(g, ord);
    ReachProfile profile;
    profile.s = s;
    profile.sizes.resize(static_cast<std::size_t>(g.order()));
    for (Vertex v = 1; v <= g.order(); ++v) {
        int size = static_cast<int>(explorer.explore(v, s).size());
        profile.sizes[static_cast<std::size_t>(v - 1)] = size;
        profile.max = std::max(profile.max, size);
    }
    return profile;
}

DegeneracyOrder degeneracy_order(const Graph& g)
{
    const int n = g.order();
    std::vector<int> degree(static_cast<std::size_t>(n));
    std::set<std::pair<int, Vertex>> queue;
    for (Vertex v = 1; v <= n; ++v) {
        degree[static_cast<std::size_t>(v - 1)] = g.degree(v);
        queue.emplace(g.degree(v), v);
    }
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    std::vector<Vertex> sequence;
    sequence.reserve(static_cast<std::size_t>(n));
    int d = 0;
    while (!queue.empty()) {
        auto [deg, v] = *queue.begin();
        queue.erase(queue.begin());
        d = std::max(d, deg);
        removed[static_cast<std::size_t>(v - 1)] = true;
        sequence.push_back(v);
        for (Vertex w : g.neighbours(v)) {
            auto i = static_cast<std::size_t>(w - 1);
            if (!removed[i]) {
                queue.erase({degree[i], w});
                queue.emplace(--degree[i], w);
            }
        }
    }
    std::reverse(sequence.begin(), sequence.end());
    return {VertexOrdering::from_sequence(std::move(sequence)), d};
}

VertexOrdering min_backreach_order(const Graph& g)
{
    const int n = g.order();
    const auto idx = [](Vertex v) { return static_cast<std::size_t>(v - 1); };
    std::vector<bool> placed(static_cast<std::size_t>(n), false);
    std::vector<unsigned> stamp(static_cast<std::size_t>(n), 0);
    unsigned epoch = 0;

    // |{v} ∪ (N(v) \ S) ∪ (N(S ∩ N(v)) \ S)| with S the placed set.
    auto score = [&](Vertex v) {
        ++epoch;
        int count = 0;
        auto mark = [&](Vertex w) {
            if (stamp[idx(w)] != epoch) {
                stamp[idx(w)] = epoch;
                ++count;
            }
        };
        mark(v);
        for (Vertex u : g.neighbours(v)) {
            if (!placed[idx(u)]) {
                mark(u);
                continue;
            }
            for (Vertex w : g.neighbours(u)) {
                if (!placed[idx(w)]) {
                    mark(w);
                }
            }
        }
        return count;
    };

    std::vector<int> scores(static_cast<std::size_t>(n));
    for (Vertex v = 1; v <= n; ++v) {
        scores[idx(v)] = score(v);
    }

    std::vector<Vertex> right_to_left;
    right_to_left.reserve(static_cast<std::size_t>(n));
    std::vector<Vertex> touched;
    for (int step = 0; step < n; ++step) {
        Vertex best = 0;
        for (Vertex v = 1; v <= n; ++v) {
            if (!placed[idx(v)] && (best == 0 || scores[idx(v)] < scores[idx(best)])) {
                best = v;
            }
        }
        placed[idx(best)] = true;
        right_to_left.push_back(best);

        // Only scores within distance two of the new vertex can change.
        touched.clear();
        for (Vertex u : g.neighbours(best)) {
            touched.push_back(u);
            for (Vertex w : g.neighbours(u)) {
                touched.push_back(w);
            }
        }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        for (Vertex v : touched) {
            if (!placed[idx(v)]) {
                scores[idx(v)] = score(v);
            }
        }
    }
    std::reverse(right_to_left.begin(), right_to_left.end());
    return VertexOrdering::from_sequence(std::move(right_to_left));
}

namespace {

// Subset search for exact_scol. A prefix of an ordering is identified by the
// set of vertices it contains; the reach set of the next vertex depends only
// on that set, so the best completion of a prefix is memoised per set.
class ScolSearch {
public:
    ScolSearch(const Graph& g, int s) : n_(g.order()), s_(s), adj_(static_cast<std::size_t>(n_), 0)
    {
        for (Vertex v = 1; v <= n_; ++v) {
            for (Vertex w : g.neighbours(v)) {
                adj_[static_cast<std::size_t>(v - 1)] |= bit(w);
            }
        }
        memo_.assign(std::size_t{1} << n_, 0);
    }

    int best(std::uint32_t left)
    {
        if (left == full()) {
            return 0;
        }
        auto& slot = memo_[left];
        if (slot != 0) {
            return slot - 1;
        }
        int result = n_ + 1;
        for (Vertex v = 1; v <= n_; ++v) {
            if ((left & bit(v)) != 0) {
                continue;
            }
            int c = cost(left, v);
            if (c >= result) {
                continue;
            }
            result = std::min(result, std::max(c, best(left | bit(v))));
        }
        slot = static_cast<std::uint8_t>(result + 1);
        return result;
    }

    VertexOrdering witness()
    {
        std::vector<Vertex> seq;
        std::uint32_t left = 0;
        const int target = best(0);
        while (left != full()) {
            for (Vertex v = 1; v <= n_; ++v) {
                if ((left & bit(v)) == 0 && std::max(cost(left, v), best(left | bit(v))) <= target) {
                    seq.push_back(v);
                    left |= bit(v);
                    break;
                }
            }
        }
        return VertexOrdering::from_sequence(std::move(seq));
    }

private:
    static std::uint32_t bit(Vertex v) { return std::uint32_t{1} << (v - 1); }
    std::uint32_t full() const { return n_ == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n_) - 1; }

    // |R(v)| when exactly the vertices in `left` precede v.
    int cost(std::uint32_t left, Vertex v) const
    {
        const std::uint32_t right = full() & ~left & ~bit(v);
        std::uint32_t reached = bit(v);
        std::uint32_t frontier = bit(v);
        for (int depth = 0; depth < s_ && frontier != 0; ++depth) {
            std::uint32_t next = 0;
            for (std::uint32_t f = frontier; f != 0; f &= f - 1) {
                next |= adj_[static_cast<std::size_t>(std::countr_zero(f))];
            }
            next &= ~reached;
            reached |= next;
            frontier = next & right;
        }
        return std::popcount(reached & ~right);
    }

    int n_;
    int s_;
    std::vector<std::uint32_t> adj_;
    std::vector<std::uint8_t> memo_;
};

} // namespace

ScolResult exact_scol(const Graph& g, int s, int limit)
{
    check_radius(s);
    if (g.order() > limit) {
        throw LimitExceeded("exact_scol: graph has " + std::to_string(g.order()) + " vertices, limit is " +
                            std::to_string(limit));
    }
    if (g.order() > kMaxScolVertices) {
        throw LimitExceeded("exact_scol: at most " + std::to_string(kMaxScolVertices) + " vertices supported");
    }
    if (g.order() == 0) {
        return {0, VertexOrdering::identity(0)};
    }
    ScolSearch search(g, s);
    int value = search.best(0);
    return {value, search.witness()};
}

} // namespace pcf
