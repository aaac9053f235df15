// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Tolerances are exact; runtime budgets are part of the
// pass condition.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pcf/bench.hpp"
#include "pcf/cli.hpp"
#include "pcf/colouring.hpp"
#include "pcf/generators.hpp"
#include "pcf/graph_io.hpp"
#include "pcf/reach.hpp"

using namespace pcf;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct Criterion_ {
    int id;
    std::string title;
    double budget_s;
    std::function<Outcome()> run;
};

std::vector<Graph> gnp_samples()
{
    std::vector<Graph> out;
    for (std::uint64_t i = 0; i < 200; ++i) {
        double p = 0.1 + 0.1 * static_cast<double>(i % 9); // 0.1 .. 0.9
        out.push_back(generate({Family::gnp, {8, p}, 1000 + i}));
    }
    return out;
}

std::vector<Graph> planar_samples()
{
    std::vector<Graph> out;
    for (std::uint64_t i = 0; i < 50; ++i) {
        out.push_back(generate({Family::planar3tree, {50}, i}));
    }
    return out;
}

std::vector<Graph> theorem_corpus()
{
    auto all = oracle::all_graphs(5);
    for (auto& g : gnp_samples()) {
        all.push_back(std::move(g));
    }
    for (auto& g : planar_samples()) {
        all.push_back(std::move(g));
    }
    return all;
}

std::vector<Strategy> strategies_for(std::size_t index)
{
    return {{StrategyKind::identity}, {StrategyKind::reverse}, {StrategyKind::random, 7919 + index},
            {StrategyKind::degeneracy}, {StrategyKind::min_backreach}};
}

Outcome theorem_contract()
{
    Outcome o;
    auto corpus = theorem_corpus();
    std::size_t checked = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Graph& g = corpus[i];
        for (const Strategy& s : strategies_for(i)) {
            auto ord = make_ordering(g, s);
            int r2 = back_reach_profile(g, ord, 2).max;
            Colouring col = greedy_cf_colouring(g, ord);
            for (Criterion c : {Criterion::proper, Criterion::odd, Criterion::conflict_free}) {
                o.require(verify_colouring(g, col, c).ok, "graph #" + std::to_string(i) + " " + s.name() + ": " +
                                                              std::string(criterion_name(c)) + " failed");
            }
            o.require(col.used() <= 2 * r2 - 1, "graph #" + std::to_string(i) + " " + s.name() + ": " +
                                                     std::to_string(col.used()) + " colours > 2*" +
                                                     std::to_string(r2) + "-1");
            ++checked;
        }
    }
    if (o.ok) {
        o.detail = std::to_string(corpus.size()) + " graphs x 5 strategies = " + std::to_string(checked) +
                   " colourings valid and within 2*r2-1";
    }
    return o;
}

Outcome exact_chain()
{
    Outcome o;
    auto graphs = oracle::all_graphs(5);
    int tight = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        const std::string tag = "graph #" + std::to_string(i) + ": ";
        int chi = exact_chromatic(g, Criterion::proper).value;
        int chi_o = exact_chromatic(g, Criterion::odd).value;
        int chi_pcf = exact_chromatic(g, Criterion::conflict_free).value;
        int scol1 = exact_scol(g, 1).value;
        int scol2 = exact_scol(g, 2).value;
        int d = degeneracy_order(g).degeneracy;
        if (g.size() > 0) {
            o.require(chi <= chi_o && chi_o <= chi_pcf && chi_pcf <= 2 * scol2 - 1,
                      tag + "chain chi <= chi_o <= chi_pcf <= 2 scol2 - 1 broken");
            tight += chi_pcf == 2 * scol2 - 1;
        } else {
            o.require(chi == 1 && chi_o == 1 && chi_pcf == 1, tag + "edgeless values not all 1");
        }
        o.require(chi <= scol1, tag + "chi > scol1");
        o.require(scol1 == d + 1, tag + "scol1 != degeneracy + 1");
    }
    if (o.ok) {
        o.detail = "1024 graphs on 5 vertices; chi_pcf = 2 scol2 - 1 on " + std::to_string(tight) + " of them";
    }
    return o;
}

Outcome tightness()
{
    Outcome o;
    Graph c5 = generate({Family::cycle, {5}});
    Graph p4 = generate({Family::path, {4}});
    int c5_pcf = exact_chromatic(c5, Criterion::conflict_free).value;
    int c5_scol = exact_scol(c5, 2).value;
    int p4_pcf = exact_chromatic(p4, Criterion::conflict_free).value;
    int p4_scol = exact_scol(p4, 2).value;
    o.require(c5_pcf == 5 && 2 * c5_scol - 1 == 5, "C5: chi_pcf=" + std::to_string(c5_pcf) +
                                                       " scol2=" + std::to_string(c5_scol));
    o.require(p4_pcf == 3 && p4_scol == 2, "P4: chi_pcf=" + std::to_string(p4_pcf) + " scol2=" + std::to_string(p4_scol));
    if (o.ok) {
        o.detail = "C5: 5 = 2*3-1, P4: 3 = 2*2-1";
    }
    return o;
}

Outcome reach_oracle()
{
    Outcome o;
    std::size_t compared = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        Graph g = generate({Family::gnp, {8, 0.4}, seed});
        for (std::uint64_t j = 0; j < 3; ++j) {
            auto ord = make_ordering(g, {StrategyKind::random, seed * 3 + j});
            std::vector<Vertex> seq(ord.sequence().begin(), ord.sequence().end());
            for (int s = 1; s <= 3; ++s) {
                for (Vertex v = 1; v <= g.order(); ++v) {
                    auto fast = reach_set(g, ord, v, s);
                    auto slow = oracle::reach_set(g, seq, v, s);
                    o.require(fast == std::vector<Vertex>(slow.begin(), slow.end()),
                              "gnp seed " + std::to_string(seed) + " vertex " + std::to_string(v) + " s=" +
                                  std::to_string(s));
                    ++compared;
                }
            }
        }
    }
    if (o.ok) {
        o.detail = std::to_string(compared) + " reach sets equal to path enumeration";
    }
    return o;
}

Outcome planar_grids()
{
    Outcome o;
    const long long reference = bound(BoundKind::kplanar, 0);
    std::ostringstream summary;
    for (auto [r, c] : {std::pair{20, 50}, std::pair{40, 25}}) {
        Graph g = generate({Family::grid, {static_cast<double>(r), static_cast<double>(c)}});
        auto ord = VertexOrdering::identity(g.order());
        int r2 = back_reach_profile(g, ord, 2).max;
        Colouring col = greedy_cf_colouring(g, ord);
        bool valid = verify_colouring(g, col, Criterion::conflict_free).ok &&
                     verify_colouring(g, col, Criterion::proper).ok;
        std::string tag = "grid(" + std::to_string(r) + "," + std::to_string(c) + ")";
        o.require(r2 <= 4, tag + " r2=" + std::to_string(r2));
        o.require(col.used() <= 7, tag + " colours=" + std::to_string(col.used()));
        o.require(col.used() < reference, tag + " not below 59");
        o.require(valid, tag + " colouring invalid");
        summary << tag << ": r2=" << r2 << " colours=" << col.used() << "; ";
    }
    if (o.ok) {
        o.detail = summary.str() + "reference bound 59";
    }
    return o;
}

Outcome constants()
{
    Outcome o;
    o.require(bound(BoundKind::scol2, 2) == 3, "scol2(2) != 3");
    o.require(bound(BoundKind::kplanar, 1) == 119, "kplanar(1) != 119");
    o.require(bound(BoundKind::minor, 5) == 59, "minor(5) != 59");
    for (long long x = 1; x <= 50; ++x) {
        o.require(bound(BoundKind::scol2, x) == 2 * x - 1, "scol2 formula");
        o.require(bound(BoundKind::kplanar, x) == 60 * x + 59, "kplanar formula");
        o.require(bound(BoundKind::minor, x + 1) == 5 * x * (x - 1) - 1, "minor formula");
    }
    if (o.ok) {
        o.detail = "2r-1 (r=2 -> 3), 60k+59 (k=1 -> 119), 5(t-1)(t-2)-1 (t=5 -> 59)";
    }
    return o;
}

int cli(std::vector<std::string> args, const std::string& input, std::string* out = nullptr)
{
    args.insert(args.begin(), "pcfcol");
    std::istringstream in(input);
    std::ostringstream o;
    std::ostringstream e;
    int code = run_cli(args, in, o, e);
    if (out) {
        *out = o.str();
    }
    return code;
}

std::string strip_last_column(const std::string& csv)
{
    std::istringstream in(csv);
    std::string line;
    std::string out;
    while (std::getline(in, line)) {
        out += line.substr(0, line.rfind(',')) + '\n';
    }
    return out;
}

Outcome tooling()
{
    Outcome o;
    auto dir = std::filesystem::temp_directory_path() / "pcf_acceptance";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);

    auto corpus = theorem_corpus();
    corpus.push_back(generate({Family::grid, {20, 50}}));
    corpus.push_back(generate({Family::grid, {40, 25}}));
    std::size_t round_trips = 0;
    std::size_t verified = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Graph& g = corpus[i];
        for (GraphFormat f : {GraphFormat::edgelist, GraphFormat::dimacs}) {
            std::stringstream buf;
            save_graph(buf, g, f);
            o.require(load_graph(buf, f) == g, "round trip failed for graph #" + std::to_string(i));
            ++round_trips;
        }
        const auto graph_path = (dir / "g.el").string();
        {
            std::ofstream f(graph_path);
            save_graph(f, g, GraphFormat::edgelist);
        }
        for (const Strategy& s : strategies_for(i)) {
            std::string colouring;
            int code = cli({"colour", "--graph", graph_path, "--strategy", s.name(), "--out", "-"}, "", &colouring);
            o.require(code == 0, "colour exit " + std::to_string(code) + " on graph #" + std::to_string(i));
            for (std::string c : {"proper", "odd", "conflict_free"}) {
                int v = cli({"verify", "--graph", graph_path, "--colouring", "-", "--criterion", c}, colouring);
                o.require(v == 0, "verify " + c + " rejected colour output on graph #" + std::to_string(i));
                ++verified;
            }
        }
    }

    const auto corpus_path = (dir / "corpus.txt").string();
    {
        std::ofstream f(corpus_path);
        f << "# mixed corpus\npath 4\ncycle 5\nstar 6\ncomplete_bipartite 3,4\ngrid 6,7\n";
        for (int s = 0; s < 10; ++s) {
            f << "gnp 8,0.4 " << s << "\nplanar3tree 30 " << s << "\n";
        }
    }
    const std::vector<std::string> bench{"bench", "--corpus", corpus_path, "--strategies",
                                         "identity,reverse,random(11),degeneracy,min_backreach", "--exact-up-to", "8"};
    std::string first;
    std::string second;
    o.require(cli(bench, "", &first) == 0, "first bench run failed");
    o.require(cli(bench, "", &second) == 0, "second bench run failed");
    o.require(strip_last_column(first) == strip_last_column(second), "bench CSV differs between runs");
    o.require(std::count(first.begin(), first.end(), '\n') == 1 + 25 * 5, "unexpected bench row count");

    std::filesystem::remove_all(dir);
    if (o.ok) {
        o.detail = std::to_string(round_trips) + " save/load round trips, " + std::to_string(verified) +
                   " colour->verify checks, bench CSV identical across runs";
    }
    return o;
}

} // namespace

int main()
{
    const std::vector<Criterion_> criteria{
        {1, "greedy colouring is proper, odd, conflict-free and within 2*r2-1", 60, theorem_contract},
        {2, "exact chain chi <= chi_o <= chi_pcf <= 2*scol2-1, chi <= scol1 = degeneracy+1", 120, exact_chain},
        {3, "tightness witnesses C5 and P4", 10, tightness},
        {4, "reach sets equal brute-force path enumeration", 30, reach_oracle},
        {5, "row-major grids: r2 <= 4, colours <= 7 < 59", 10, planar_grids},
        {6, "bound constants", 1, constants},
        {7, "tooling round trips (save/load, colour->verify, bench determinism)", 120, tooling},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs >= c.budget_s) {
            o.ok = false;
            o.detail += " [over time budget]";
        }
        failures += !o.ok;
        std::printf("%s AC%d %s -- %s (%.2fs, budget %.0fs)\n", o.ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
                    o.detail.c_str(), secs, c.budget_s);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
