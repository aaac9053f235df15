#include "pcf/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "pcf/bench.hpp"
#include "pcf/colouring.hpp"
#include "pcf/error.hpp"
#include "pcf/generators.hpp"
#include "pcf/graph_io.hpp"
#include "pcf/reach.hpp"

namespace pcf {

namespace {

struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

struct GraphSource {
    std::string path;
    std::string format;

    void add_to(CLI::App& cmd)
    {
        cmd.add_option("--graph", path, "graph file, - for stdin")->required();
        cmd.add_option("--format", format, "edgelist or dimacs (default: by extension)")
            ->check(CLI::IsMember({"edgelist", "dimacs"}));
    }

    Graph load(std::istream& in) const
    {
        if (path == "-") {
            return load_graph(in, format.empty() ? GraphFormat::edgelist : parse_graph_format(format));
        }
        return load_graph_file(path, format.empty() ? format_from_path(path) : parse_graph_format(format));
    }
};

// Writes to `path` ("-" is the given stream).
void write_to(const std::string& path, std::ostream& stdout_stream, const std::function<void(std::ostream&)>& body)
{
    if (path == "-") {
        body(stdout_stream);
        return;
    }
    std::ofstream file(path);
    if (!file) {
        throw InputError("cannot open '" + path + "' for writing");
    }
    body(file);
    if (!file) {
        throw InputError("write to '" + path + "' failed");
    }
}

template <typename Fn>
auto read_from(const std::string& path, std::istream& stdin_stream, Fn&& fn)
{
    if (path == "-") {
        return fn(stdin_stream);
    }
    std::ifstream file(path);
    if (!file) {
        throw InputError("cannot open '" + path + "'");
    }
    return fn(file);
}

struct OrderChoice {
    std::string order_path;
    std::string strategy;

    VertexOrdering resolve(const Graph& g, std::istream& in) const
    {
        if (!order_path.empty()) {
            return read_from(order_path, in, [&](std::istream& s) { return load_ordering(s, g.order()); });
        }
        return make_ordering(g, parse_strategy(strategy));
    }
};

class Cli {
public:
    explicit Cli(Streams io) : io_(io) { build(); }

    int run(const std::vector<std::string>& args)
    {
        std::vector<const char*> argv;
        for (const auto& a : args) {
            argv.push_back(a.c_str());
        }
        try {
            app_.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::ParseError& e) {
            if (e.get_exit_code() == 0) {
                io_.out << app_.help();
                return kExitOk;
            }
            io_.err << "error: " << e.what() << '\n';
            return kExitUsage;
        }
        try {
            return action_();
        } catch (const BoundViolation& e) {
            io_.err << "bound violated: " << e.what() << '\n';
            return kExitFailed;
        } catch (const std::exception& e) {
            io_.err << "error: " << e.what() << '\n';
            return kExitUsage;
        }
    }

private:
    void build()
    {
        app_.require_subcommand(1);
        app_.set_help_flag("-h,--help", "print help");
        add_gen();
        add_scol();
        add_colour();
        add_verify();
        add_exact();
        add_bench();
    }

    void usage_unless(bool cond, const std::string& msg)
    {
        if (!cond) {
            throw InputError(msg);
        }
    }

    void add_gen()
    {
        auto* cmd = app_.add_subcommand("gen", "generate a graph");
        cmd->add_option("--family", gen_.family, "path|cycle|complete|star|complete_bipartite|grid|gnp|planar3tree")
            ->required();
        cmd->add_option("--params", gen_.params, "comma-separated parameters, e.g. 20,50")->required();
        cmd->add_option("--seed", gen_.seed, "seed for gnp and planar3tree");
        cmd->add_option("--format", gen_.format, "edgelist or dimacs")->check(CLI::IsMember({"edgelist", "dimacs"}));
        cmd->add_option("--out", gen_.out, "output path, - for stdout");
        cmd->callback([this] {
            action_ = [this] {
                GenSpec spec{parse_family(gen_.family), parse_params(gen_.params), gen_.seed};
                Graph g = generate(spec);
                write_to(gen_.out, io_.out, [&](std::ostream& s) { save_graph(s, g, parse_graph_format(gen_.format)); });
                return kExitOk;
            };
        });
    }

    void add_scol()
    {
        auto* cmd = app_.add_subcommand("scol", "back-reach profile of an ordering, or exact scol_s");
        scol_.graph.add_to(*cmd);
        cmd->add_option("--s", scol_.s, "radius (default 2)")->check(CLI::PositiveNumber);
        cmd->add_option("--order", scol_.order.order_path, "ordering file");
        cmd->add_option("--strategy", scol_.order.strategy, "ordering strategy");
        cmd->add_flag("--exact", scol_.exact, "minimise over all orderings");
        cmd->add_option("--limit", scol_.limit, "vertex limit for --exact");
        cmd->add_flag("--verbose", scol_.verbose, "print per-vertex reach sizes");
        cmd->callback([this] {
            action_ = [this] {
                int chosen = int(!scol_.order.order_path.empty()) + int(!scol_.order.strategy.empty()) + int(scol_.exact);
                usage_unless(chosen == 1, "scol: give exactly one of --order, --strategy, --exact");
                Graph g = scol_.graph.load(io_.in);
                VertexOrdering ord;
                if (scol_.exact) {
                    ord = exact_scol(g, scol_.s, scol_.limit).witness;
                } else {
                    ord = scol_.order.resolve(g, io_.in);
                }
                ReachProfile profile = back_reach_profile(g, ord, scol_.s);
                io_.out << profile.max << '\n';
                if (scol_.verbose) {
                    for (Vertex v = 1; v <= g.order(); ++v) {
                        io_.out << v << ' ' << profile.sizes[static_cast<std::size_t>(v - 1)] << '\n';
                    }
                }
                return kExitOk;
            };
        });
    }

    void add_colour()
    {
        auto* cmd = app_.add_subcommand("colour", "conflict-free colouring along an ordering");
        colour_.graph.add_to(*cmd);
        cmd->add_option("--order", colour_.order.order_path, "ordering file");
        cmd->add_option("--strategy", colour_.order.strategy, "ordering strategy");
        cmd->add_option("--out", colour_.out, "colouring file to write, - for stdout");
        cmd->callback([this] {
            action_ = [this] {
                int chosen = int(!colour_.order.order_path.empty()) + int(!colour_.order.strategy.empty());
                usage_unless(chosen == 1, "colour: give exactly one of --order, --strategy");
                usage_unless(!(colour_.graph.path == "-" && colour_.order.order_path == "-"),
                             "colour: graph and ordering cannot both come from stdin");
                Graph g = colour_.graph.load(io_.in);
                VertexOrdering ord = colour_.order.resolve(g, io_.in);
                Colouring col = greedy_cf_colouring(g, ord);
                if (!colour_.out.empty()) {
                    write_to(colour_.out, io_.out, [&](std::ostream& s) { save_colouring(s, col); });
                }
                std::ostream& summary = colour_.out == "-" ? io_.err : io_.out;
                summary << "colours=" << col.used() << " bound=" << col.palette() << '\n';
                bool ok = col.used() <= col.palette();
                for (Criterion c : {Criterion::proper, Criterion::odd, Criterion::conflict_free}) {
                    Verdict v = verify_colouring(g, col, c);
                    if (!v.ok) {
                        io_.err << criterion_name(c) << " check failed: " << v.detail << '\n';
                        ok = false;
                    }
                }
                return ok ? kExitOk : kExitFailed;
            };
        });
    }

    void add_verify()
    {
        auto* cmd = app_.add_subcommand("verify", "check a colouring against a criterion");
        verify_.graph.add_to(*cmd);
        cmd->add_option("--colouring", verify_.colouring, "colouring file, - for stdin")->required();
        cmd->add_option("--criterion", verify_.criterion, "proper|odd|conflict_free")
            ->required()
            ->check(CLI::IsMember({"proper", "odd", "conflict_free"}));
        cmd->callback([this] {
            action_ = [this] {
                usage_unless(!(verify_.graph.path == "-" && verify_.colouring == "-"),
                             "verify: graph and colouring cannot both come from stdin");
                Graph g = verify_.graph.load(io_.in);
                Colouring col = read_from(verify_.colouring, io_.in, [](std::istream& s) { return load_colouring(s); });
                usage_unless(col.size() == g.order(), "verify: colouring has " + std::to_string(col.size()) +
                                                          " vertices, graph has " + std::to_string(g.order()));
                Verdict v = verify_colouring(g, col, parse_criterion(verify_.criterion));
                if (v.ok) {
                    io_.out << "ok\n";
                    return kExitOk;
                }
                io_.out << "fail vertex=" << *v.witness << ": " << v.detail << '\n';
                return kExitFailed;
            };
        });
    }

    void add_exact()
    {
        auto* cmd = app_.add_subcommand("exact", "exact chromatic number by exhaustive search");
        exact_.graph.add_to(*cmd);
        cmd->add_option("--variant", exact_.variant, "proper|odd|conflict_free")
            ->required()
            ->check(CLI::IsMember({"proper", "odd", "conflict_free"}));
        cmd->add_option("--limit", exact_.limit, "vertex limit");
        cmd->add_option("--out", exact_.out, "write an optimal colouring here");
        cmd->callback([this] {
            action_ = [this] {
                Graph g = exact_.graph.load(io_.in);
                ChromaticResult r = exact_chromatic(g, parse_criterion(exact_.variant), exact_.limit);
                io_.out << r.value << '\n';
                if (!exact_.out.empty()) {
                    write_to(exact_.out, io_.out, [&](std::ostream& s) { save_colouring(s, r.witness); });
                }
                return kExitOk;
            };
        });
    }

    void add_bench()
    {
        auto* cmd = app_.add_subcommand("bench", "run ordering strategies over a corpus and write CSV");
        cmd->add_option("--corpus", bench_.corpus, "corpus file, - for stdin")->required();
        cmd->add_option("--strategies", bench_.strategies, "comma-separated strategy names")->required();
        cmd->add_option("--exact-up-to", bench_.exact_up_to, "compute exact conflict-free number up to this n");
        cmd->add_option("--out", bench_.out, "CSV path, - for stdout");
        cmd->callback([this] {
            action_ = [this] {
                auto strategies = parse_strategy_list(bench_.strategies);
                std::filesystem::path base =
                    bench_.corpus == "-" ? std::filesystem::current_path()
                                         : std::filesystem::path(bench_.corpus).parent_path();
                auto corpus =
                    read_from(bench_.corpus, io_.in, [&](std::istream& s) { return load_corpus(s, base); });
                auto records = run_corpus(corpus, strategies, bench_.exact_up_to);
                write_to(bench_.out, io_.out, [&](std::ostream& s) { write_csv(s, records); });
                bool ok = true;
                for (const auto& r : records) {
                    if (!r.ok()) {
                        io_.err << "check failed: " << r.graph_id << " " << r.strategy << '\n';
                        ok = false;
                    }
                }
                return ok ? kExitOk : kExitFailed;
            };
        });
    }

    Streams io_;
    CLI::App app_{"Conflict-free colouring along strong-colouring-number orderings", "pcfcol"};
    std::function<int()> action_;

    struct {
        std::string family, params;
        std::uint64_t seed = 0;
        std::string format = "edgelist";
        std::string out = "-";
    } gen_;
    struct {
        GraphSource graph;
        int s = 2;
        OrderChoice order;
        bool exact = false;
        int limit = kDefaultScolLimit;
        bool verbose = false;
    } scol_;
    struct {
        GraphSource graph;
        OrderChoice order;
        std::string out;
    } colour_;
    struct {
        GraphSource graph;
        std::string colouring, criterion;
    } verify_;
    struct {
        GraphSource graph;
        std::string variant;
        int limit = kDefaultChromaticLimit;
        std::string out;
    } exact_;
    struct {
        std::string corpus, strategies;
        int exact_up_to = 0;
        std::string out = "-";
    } bench_;
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    Cli cli({in, out, err});
    return cli.run(args);
}

} // namespace pcf
