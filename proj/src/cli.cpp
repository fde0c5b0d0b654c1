#include "gbs/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "gbs/bound.hpp"
#include "gbs/chain_family.hpp"
#include "gbs/error.hpp"
#include "gbs/graph.hpp"
#include "gbs/moves.hpp"
#include "gbs/tree_ball.hpp"
#include "gbs/words.hpp"

namespace gbs::cli {

namespace {

// Plain aligned columns, or tab-separated with --porcelain.
class Table {
public:
    explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void print(std::ostream& out, bool porcelain) const {
        if (porcelain) {
            print_tsv(out, header_);
            for (const auto& r : rows_) print_tsv(out, r);
            return;
        }
        std::vector<std::size_t> width(header_.size(), 0);
        auto measure = [&](const std::vector<std::string>& r) {
            for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
        };
        measure(header_);
        for (const auto& r : rows_) measure(r);
        auto line = [&](const std::vector<std::string>& r) {
            std::string s;
            for (std::size_t i = 0; i < r.size(); ++i) {
                s += r[i];
                if (i + 1 < r.size()) s += std::string(width[i] - r[i].size() + 2, ' ');
            }
            out << s << '\n';
        };
        line(header_);
        for (const auto& r : rows_) line(r);
    }

private:
    static void print_tsv(std::ostream& out, const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "\t" : "") << r[i];
        out << '\n';
    }

    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GbsError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_log(const std::string& path, const std::vector<MoveRecord>& log) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw GbsError("cannot write move log '" + path + "'");
    out << format_move_log(log);
}

ChainSpec spec_from(const std::vector<std::int64_t>& q, const std::vector<std::int64_t>& r) {
    ChainSpec spec{q, r};
    require_valid(spec);
    return spec;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graphs of groups with cyclic vertex and edge groups", "gbs"};
    app.require_subcommand(1);
    bool porcelain = false;
    app.add_flag("--porcelain", porcelain, "Tab-separated output for scripts");

    std::string graph_path, log_path, edge_name, vertex_name, new_vertex, new_edge, word_text, word_file;
    std::string complex_path, base_name, origin_addr, first_addr, second_addr, move_log_path;
    std::vector<std::string> ends;
    std::vector<std::int64_t> q, r;
    std::int64_t b = 0, radius = 0, beta1 = -1, kmax = 0;
    bool beta1_from_complex = false;

    auto graph_arg = [&](CLI::App* sub) { sub->add_option("graph", graph_path, "Graph file")->required(); };
    auto log_arg = [&](CLI::App* sub) { sub->add_option("--log", log_path, "Write the move log to this file"); };

    auto* validate_cmd = app.add_subcommand("validate", "Check a graph file");
    graph_arg(validate_cmd);

    auto* reduce_cmd = app.add_subcommand("reduce", "Collapse edges until the graph is reduced");
    graph_arg(reduce_cmd);
    log_arg(reduce_cmd);

    auto* collapse_cmd = app.add_subcommand("collapse", "Collapse one edge");
    graph_arg(collapse_cmd);
    collapse_cmd->add_option("--edge", edge_name, "Oriented edge (name or ~name); its origin is removed")->required();
    log_arg(collapse_cmd);

    auto* expand_cmd = app.add_subcommand("expand", "Elementary expansion at a vertex");
    graph_arg(expand_cmd);
    expand_cmd->add_option("--vertex", vertex_name)->required();
    expand_cmd->add_option("--b", b, "Label of the new edge at the vertex")->required();
    expand_cmd->add_option("--ends", ends, "Edge ends moved to the new vertex")->delimiter(',');
    expand_cmd->add_option("--new-vertex", new_vertex);
    expand_cmd->add_option("--new-edge", new_edge);
    log_arg(expand_cmd);

    auto* subdivide_cmd = app.add_subcommand("subdivide", "Subdivide an edge");
    graph_arg(subdivide_cmd);
    subdivide_cmd->add_option("--edge", edge_name)->required();
    subdivide_cmd->add_option("--new-vertex", new_vertex);
    subdivide_cmd->add_option("--new-edge", new_edge);
    log_arg(subdivide_cmd);

    auto* essential_cmd = app.add_subcommand("essential", "List essential vertices");
    graph_arg(essential_cmd);

    auto* word_cmd = app.add_subcommand("word", "Reduce words and decide ellipticity");
    graph_arg(word_cmd);
    auto* word_opt = word_cmd->add_option("--word", word_text, "A single word, 'word <base>: g0 e1 g1 ...'");
    auto* file_opt = word_cmd->add_option("--file", word_file, "File with one word per line");
    word_opt->excludes(file_opt);

    auto* ball_cmd = app.add_subcommand("ball", "Tabulate a Bass-Serre tree ball");
    graph_arg(ball_cmd);
    ball_cmd->add_option("--base", base_name)->required();
    ball_cmd->add_option("--radius", radius)->required();

    auto* fold_cmd = app.add_subcommand("fold-type", "Classify the fold of two tree edges");
    graph_arg(fold_cmd);
    fold_cmd->add_option("--base", base_name)->required();
    fold_cmd->add_option("--radius", radius)->required();
    fold_cmd->add_option("--origin", origin_addr, "Address of the common origin")->required();
    fold_cmd->add_option("--first", first_addr, "Address of the first terminus")->required();
    fold_cmd->add_option("--second", second_addr, "Address of the second terminus")->required();

    auto* bound_cmd = app.add_subcommand("bound", "Accessibility bounds from a 2-complex");
    bound_cmd->add_option("complex", complex_path, "Complex file")->required();
    auto* beta_opt = bound_cmd->add_option("--beta1", beta1, "First Betti number of the group");
    auto* beta_flag = bound_cmd->add_flag("--beta1-from-complex", beta1_from_complex,
                                          "Use dim H^1(L;Z2) as an upper bound for beta1");
    beta_opt->excludes(beta_flag);

    auto* chain_cmd = app.add_subcommand("chain", "Emit the graph of a chain q0..q(k-1), r1..rk");
    chain_cmd->add_option("--q", q)->delimiter(',')->required();
    chain_cmd->add_option("--r", r)->delimiter(',')->required();

    auto* twogen_cmd = app.add_subcommand("check-2gen", "Test the 2-generation criterion of a reduced chain");
    twogen_cmd->add_option("--q", q)->delimiter(',')->required();
    twogen_cmd->add_option("--r", r)->delimiter(',')->required();

    auto* family_cmd = app.add_subcommand("verify-family", "Check the valence-5 chain family for k = 1..kmax");
    family_cmd->add_option("--kmax", kmax)->required();

    auto* replay_cmd = app.add_subcommand("replay", "Apply a move log to a graph");
    graph_arg(replay_cmd);
    replay_cmd->add_option("log", move_log_path, "Move log")->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (validate_cmd->parsed()) {
            const GbsGraph g = read_graph_file(graph_path);
            const auto problems = validate(g);
            if (problems.empty()) {
                out << "valid\n";
                return kExitOk;
            }
            for (const auto& p : problems) out << "violation: " << p << '\n';
            return kExitDomain;
        }
        if (reduce_cmd->parsed()) {
            auto [g, log] = reduce_graph(read_graph_file(graph_path));
            write_log(log_path, log);
            out << format_graph(g);
            return kExitOk;
        }
        if (collapse_cmd->parsed()) {
            const GbsGraph g = read_graph_file(graph_path);
            auto [h, rec] = collapse(g, g.edge(edge_name));
            write_log(log_path, {rec});
            out << format_graph(h);
            return kExitOk;
        }
        if (expand_cmd->parsed()) {
            const GbsGraph g = read_graph_file(graph_path);
            std::set<Edge> end_set;
            for (const auto& e : ends) end_set.insert(g.edge(e));
            auto [h, rec] = expand(g, g.vertex(vertex_name), end_set, b,
                                   new_vertex.empty() ? std::nullopt : std::optional(new_vertex),
                                   new_edge.empty() ? std::nullopt : std::optional(new_edge));
            write_log(log_path, {rec});
            out << format_graph(h);
            return kExitOk;
        }
        if (subdivide_cmd->parsed()) {
            const GbsGraph g = read_graph_file(graph_path);
            auto [h, rec] = subdivide(g, g.edge(edge_name), new_vertex.empty() ? std::nullopt : std::optional(new_vertex),
                                      new_edge.empty() ? std::nullopt : std::optional(new_edge));
            write_log(log_path, {rec});
            out << format_graph(h);
            return kExitOk;
        }
        if (essential_cmd->parsed()) {
            const GbsGraph g = read_graph_file(graph_path);
            const auto ess = essential_vertices(g);
            Table t({"vertex", "ends", "essential"});
            std::vector<Vertex> order = g.vertices();
            std::sort(order.begin(), order.end(),
                      [&](Vertex a, Vertex c) { return g.vertex_name(a) < g.vertex_name(c); });
            for (Vertex v : order)
                t.add({g.vertex_name(v), std::to_string(g.ends_at(v).size()), yes_no(ess.count(v) > 0)});
            t.print(out, porcelain);
            return kExitOk;
        }
        if (word_cmd->parsed()) {
            const GbsGraph g = read_graph_file(graph_path);
            require_finite(g);
            std::vector<GogWord> words;
            if (!word_text.empty()) {
                words.push_back(parse_word(g, word_text, "--word"));
            } else if (!word_file.empty()) {
                words = parse_words(g, read_text_file(word_file), word_file);
            } else {
                err << "word: give --word or --file\n";
                return kExitUsage;
            }
            Table t({"input", "reduced", "elliptic", "translation_length"});
            for (const auto& w : words) {
                const auto len = translation_length(g, w);
                t.add({format_word(g, w), format_word(g, reduce_word(g, w)), yes_no(len == 0), std::to_string(len)});
            }
            t.print(out, porcelain);
            return kExitOk;
        }
        if (ball_cmd->parsed()) {
            const GbsGraph g = read_graph_file(graph_path);
            require_finite(g);
            const auto ball = expand_ball(g, g.vertex(base_name), radius, ball_cap_from_env());
            std::vector<std::size_t> order(ball.size());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
            std::vector<std::string> addr(ball.size());
            for (std::size_t i = 0; i < ball.size(); ++i) addr[i] = ball.address_string(i);
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) {
                if (ball.node(a).depth != ball.node(c).depth) return ball.node(a).depth < ball.node(c).depth;
                return addr[a] < addr[c];
            });
            Table t({"address", "vertex", "depth", "valence"});
            for (auto i : order)
                t.add({addr[i], g.vertex_name(ball.node(i).image), std::to_string(ball.node(i).depth),
                       ball.is_frontier(i) ? "frontier" : std::to_string(ball.valence(i))});
            t.print(out, porcelain);
            return kExitOk;
        }
        if (fold_cmd->parsed()) {
            const GbsGraph g = read_graph_file(graph_path);
            require_finite(g);
            const auto ball = expand_ball(g, g.vertex(base_name), radius, ball_cap_from_env());
            auto locate = [&](const std::string& a) {
                auto i = ball.find(a);
                if (!i) throw GbsError("address '" + a + "' is not in the ball");
                return *i;
            };
            const auto o = locate(origin_addr);
            const auto type = classify_fold(ball, TreeEdge{o, locate(first_addr)}, TreeEdge{o, locate(second_addr)});
            out << to_string(type) << '\n';
            return kExitOk;
        }
        if (bound_cmd->parsed()) {
            const ChainComplex2 c = read_complex_file(complex_path);
            BoundReport rep;
            if (beta1_from_complex) {
                rep = accessibility_bounds_from_complex(c);
            } else if (beta1 >= 0) {
                rep = accessibility_bounds(c, beta1);
            } else {
                err << "bound: give --beta1 N or --beta1-from-complex\n";
                return kExitUsage;
            }
            Table t({"quantity", "value"});
            t.add({"l0", std::to_string(c.cells0.size())});
            t.add({"l1", std::to_string(c.cells1.size())});
            t.add({"l2", std::to_string(c.cells2.size())});
            t.add({"h1_mod2", std::to_string(h1_dim_mod2(c))});
            t.add({"delta", std::to_string(rep.delta)});
            t.add({rep.beta1_is_upper_bound ? "beta1_upper_bound" : "beta1", std::to_string(rep.beta1)});
            t.add({"vertex_bound", std::to_string(rep.vertex_bound)});
            t.add({"edge_bound", std::to_string(rep.edge_bound)});
            t.add({"total_bound", std::to_string(rep.total_bound)});
            t.add({"bf_vertex_bound", std::to_string(rep.bf_vertex_bound)});
            t.print(out, porcelain);
            return kExitOk;
        }
        if (chain_cmd->parsed()) {
            out << format_graph(make_chain(spec_from(q, r)));
            return kExitOk;
        }
        if (twogen_cmd->parsed()) {
            const bool yes = is_two_generated(spec_from(q, r));
            out << "two-generated: " << (yes ? "true" : "false") << '\n';
            return kExitOk;
        }
        if (family_cmd->parsed()) {
            const auto report = verify_family(kmax);
            Table t({"k", "vertices", "edges", "complexity", "reduced", "2-generated", "valences", "essential", "status"});
            for (const auto& row : report.rows) {
                std::string status = "ok";
                if (!row.ok()) {
                    status = "FAIL:";
                    for (const auto& f : row.failures) status += " " + f + ";";
                }
                t.add({std::to_string(row.k), std::to_string(row.vertices), std::to_string(row.edges),
                       std::to_string(row.vertices + row.edges), yes_no(row.reduced), yes_no(row.two_generated),
                       std::to_string(row.min_valence) + "-" + std::to_string(row.max_valence),
                       std::to_string(row.essential), status});
            }
            t.print(out, porcelain);
            return report.ok() ? kExitOk : kExitDomain;
        }
        if (replay_cmd->parsed()) {
            const GbsGraph g = read_graph_file(graph_path);
            auto [h, recs] = replay(g, read_text_file(move_log_path), move_log_path);
            out << format_graph(h);
            return kExitOk;
        }
    } catch (const GbsError& e) {
        err << "gbs: " << e.what() << '\n';
        return kExitDomain;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace gbs::cli
