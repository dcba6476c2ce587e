#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hypercenter/diametric.hpp"
#include "hypercenter/errors.hpp"
#include "hypercenter/graph.hpp"
#include "hypercenter/halfint.hpp"
#include "hypercenter/hyperbolicity.hpp"
#include "hypercenter/pcenter.hpp"
#include "hypercenter/tree_approx.hpp"

namespace hc = hypercenter;
using ordered_json = nlohmann::ordered_json;

namespace {

struct GraphArgs {
    std::string path;
    bool largest_component = false;
    std::string remap_out;
};

void add_graph_args(CLI::App* cmd, GraphArgs& args) {
    cmd->add_option("graph", args.path, "edge-list file (\"u v\" per line, '#' comments)")
        ->required();
    cmd->add_flag("--largest-component", args.largest_component,
                  "keep the largest component of a disconnected input");
    cmd->add_option("--remap-out", args.remap_out,
                    "write the internal-id/original-label table as CSV");
}

hc::LoadResult load_graph(const GraphArgs& args) {
    hc::LoadResult lr = hc::load_edge_list_file(args.path, args.largest_component);
    if (lr.self_loops_dropped > 0)
        std::cerr << "note: dropped " << lr.self_loops_dropped << " self-loop(s)\n";
    if (lr.duplicate_edges_dropped > 0)
        std::cerr << "note: dropped " << lr.duplicate_edges_dropped << " duplicate edge(s)\n";
    if (lr.vertices_dropped > 0)
        std::cerr << "note: kept largest component, dropped " << lr.vertices_dropped
                  << " vertex(es) / " << lr.edges_dropped << " edge(s)\n";
    if (!args.remap_out.empty()) {
        std::ofstream out(args.remap_out);
        if (!out) throw hc::InputError("cannot open remap table for writing: " + args.remap_out);
        out << "id,label\n";
        for (hc::Vertex v = 0; v < lr.graph.num_vertices(); ++v)
            out << v << ',' << lr.labels[v] << '\n';
    }
    return lr;
}

hc::HalfInt parse_half_integer(const std::string& text) {
    std::size_t used = 0;
    long double value = 0;
    try {
        value = std::stold(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a half-integer: " + text);
    }
    long double doubled = value * 2.0L;
    long double snapped = std::round(doubled);
    if (used != text.size() || value < 0 || std::fabs(doubled - snapped) > 1e-9)
        throw std::invalid_argument("delta must be a nonnegative multiple of 0.5: " + text);
    return hc::HalfInt::from_doubled(static_cast<std::int64_t>(snapped));
}

std::pair<int, int> parse_p_range(const std::string& text) {
    auto parse_int = [&](const std::string& part) {
        try {
            std::size_t used = 0;
            int v = std::stoi(part, &used);
            if (used != part.size()) throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            throw std::invalid_argument("bad p value: " + text);
        }
    };
    std::size_t dots = text.find("..");
    int lo, hi;
    if (dots == std::string::npos) {
        lo = hi = parse_int(text);
    } else {
        lo = parse_int(text.substr(0, dots));
        hi = parse_int(text.substr(dots + 2));
    }
    if (lo < 1 || hi < lo) throw std::invalid_argument("p range must satisfy 1 <= a <= b");
    return {lo, hi};
}

// ---- solve ----

struct SolveArgs {
    GraphArgs graph;
    std::string p_text;
    std::string algo = "auto";
    std::string delta_text;
    std::string format = "json";
    std::uint64_t seed = 0;
    std::uint64_t samples = 1000;
    hc::Vertex start = 0;
    hc::Vertex root = 0;
};

int cmd_solve(const SolveArgs& args) {
    hc::LoadResult lr = load_graph(args.graph);
    const hc::Graph& g = lr.graph;
    auto [p_lo, p_hi] = parse_p_range(args.p_text);

    hc::SolveOptions options;
    options.algo = hc::algo_from_string(args.algo);
    options.seed = args.seed;
    options.start = args.start;
    options.root = args.root;
    if (!args.delta_text.empty()) {
        options.delta = parse_half_integer(args.delta_text);
    } else if (g.num_vertices() <= 512) {
        options.delta = hc::delta_four_point_exact(g).delta_four_point;
    } else {
        options.delta =
            hc::delta_four_point_sampled(g, args.samples, args.seed).delta_four_point;
        std::cerr << "note: delta estimated by sampling (a lower bound); the round cap "
                     "and lambda_n derived from it are diagnostic only\n";
    }

    const bool csv = args.format == "csv";
    if (csv) std::cout << "p,algo,radius,lower_bound,kappa,rounds,bfs_total,millis\n";
    for (int p = p_lo; p <= p_hi; ++p) {
        auto t0 = std::chrono::steady_clock::now();
        hc::CenterSolution sol = hc::solve(g, p, options);
        auto t1 = std::chrono::steady_clock::now();
        auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        if (csv) {
            std::cout << sol.p << ',' << args.algo << ',' << sol.radius << ','
                      << sol.lower_bound << ',' << sol.kappa << ',' << sol.rounds << ','
                      << sol.bfs_total << ',' << millis << '\n';
        } else {
            ordered_json row;
            row["p"] = sol.p;
            row["algo"] = args.algo;
            ordered_json centers = ordered_json::array();
            for (hc::Vertex c : sol.centers) centers.push_back(lr.labels[c]);
            row["centers"] = std::move(centers);
            row["radius"] = sol.radius;
            row["witness"] = lr.labels[sol.witness];
            row["kappa"] = sol.kappa;
            row["lower_bound"] = sol.lower_bound;
            row["rounds"] = sol.rounds;
            row["bfs_total"] = sol.bfs_total;
            row["phi_history"] = sol.phi_history;
            std::cout << row.dump() << '\n';
        }
    }
    return 0;
}

// ---- hyperbolicity ----

struct HyperArgs {
    GraphArgs graph;
    bool exact = false;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 0;
};

int cmd_hyperbolicity(const HyperArgs& args) {
    hc::LoadResult lr = load_graph(args.graph);
    const hc::Graph& g = lr.graph;

    hc::HyperbolicityReport rep;
    if (args.exact || g.num_vertices() <= 512) {
        rep = hc::delta_four_point_exact(g);
    } else {
        rep = hc::delta_four_point_sampled(g, args.samples, args.seed);
        std::cerr << "note: graph too large for the exact quadruple scan; "
                     "sampled value is a lower bound\n";
    }

    ordered_json out;
    out["n"] = g.num_vertices();
    out["m"] = g.num_edges();
    out["delta_four_point"] = rep.delta_four_point.value();
    out["exact"] = rep.exact;
    out["samples_used"] = rep.samples_used;
    ordered_json wit = ordered_json::array();
    for (hc::Vertex v : rep.witness_quadruple) wit.push_back(lr.labels[v]);
    out["witness_quadruple"] = std::move(wit);
    out["lambda_n"] = rep.lambda_n;
    if (g.num_vertices() <= 16) {
        try {
            out["delta_insize"] = hc::delta_insize_exact(g).value();
        } catch (const hc::LimitError&) {
            // too many geodesics to enumerate; leave the field out
        }
    }
    std::cout << out.dump() << '\n';
    return 0;
}

// ---- tree-approx ----

struct TreeArgs {
    GraphArgs graph;
    hc::Vertex root = 0;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 0;
    std::string dump_tree;
};

int cmd_tree_approx(const TreeArgs& args) {
    hc::LoadResult lr = load_graph(args.graph);
    const hc::Graph& g = lr.graph;
    const hc::Vertex n = g.num_vertices();
    hc::ApproxTree at = hc::layering_partition(g, args.root);

    if (!args.dump_tree.empty()) {
        std::ofstream out(args.dump_tree);
        if (!out) throw hc::InputError("cannot open tree dump for writing: " + args.dump_tree);
        out << "cluster,parent,depth,min_vertex,size\n";
        for (hc::Cluster c = 0; c < at.cluster_count; ++c) {
            out << c << ',';
            if (at.cluster_parent[c] == hc::kNoCluster)
                out << -1;
            else
                out << at.cluster_parent[c];
            out << ',' << at.cluster_depth[c] << ',' << lr.labels[at.cluster_min_vertex[c]]
                << ',' << at.cluster_size[c] << '\n';
        }
    }

    // Distance distortion between the cluster tree and the graph: exhaustive
    // on small inputs, seeded sampling otherwise.
    std::map<hc::Dist, std::uint64_t> histogram;
    hc::Dist max_err = 0;
    std::uint64_t pairs = 0;
    const bool exhaustive = n <= 512;
    if (exhaustive) {
        for (hc::Vertex u = 0; u < n; ++u) {
            hc::DistanceField f = hc::bfs(g, u);
            for (hc::Vertex v = u + 1; v < n; ++v) {
                hc::Dist err = std::abs(hc::tree_distance(at, u, v) - f.dist[v]);
                ++histogram[err];
                max_err = std::max(max_err, err);
                ++pairs;
            }
        }
    } else {
        std::mt19937_64 rng(args.seed);
        hc::DistanceField f;
        for (std::uint64_t s = 0; s < args.samples; ++s) {
            if (s % 16 == 0) f = hc::bfs(g, static_cast<hc::Vertex>(rng() % n));
            hc::Vertex v = static_cast<hc::Vertex>(rng() % n);
            if (v == f.source) continue;
            hc::Dist err = std::abs(hc::tree_distance(at, f.source, v) - f.dist[v]);
            ++histogram[err];
            max_err = std::max(max_err, err);
            ++pairs;
        }
    }

    hc::Dist max_depth = 0;
    for (hc::Cluster c = 0; c < at.cluster_count; ++c)
        max_depth = std::max(max_depth, at.cluster_depth[c]);

    ordered_json out;
    out["n"] = n;
    out["m"] = g.num_edges();
    out["root"] = lr.labels[at.root_vertex];
    out["clusters"] = at.cluster_count;
    out["max_depth"] = max_depth;
    out["exhaustive"] = exhaustive;
    out["pairs_checked"] = pairs;
    out["max_abs_error"] = max_err;
    ordered_json hist;
    for (const auto& [err, count] : histogram) hist[std::to_string(err)] = count;
    out["histogram"] = std::move(hist);
    std::cout << out.dump() << '\n';
    return 0;
}

// ---- certify ----

struct CertifyArgs {
    GraphArgs graph;
    std::string centers_path;
    bool compare = false;
    std::uint64_t seed = 0;
    hc::Vertex start = 0;
    hc::Vertex root = 0;
};

int cmd_certify(const CertifyArgs& args) {
    hc::LoadResult lr = load_graph(args.graph);
    const hc::Graph& g = lr.graph;

    std::ifstream in(args.centers_path);
    if (!in) throw hc::InputError("cannot open centers file: " + args.centers_path);
    std::unordered_map<std::string, hc::Vertex> by_label;
    by_label.reserve(lr.labels.size());
    for (hc::Vertex v = 0; v < g.num_vertices(); ++v) by_label.emplace(lr.labels[v], v);

    std::vector<hc::Vertex> centers;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string label;
        if (!(ls >> label)) continue;  // blank line
        auto it = by_label.find(label);
        if (it == by_label.end())
            throw hc::InputError("centers file line " + std::to_string(line_no) +
                                 ": unknown vertex label '" + label + "'");
        if (std::find(centers.begin(), centers.end(), it->second) == centers.end())
            centers.push_back(it->second);
    }
    if (centers.empty()) throw hc::InputError("centers file lists no vertices");

    auto [radius, witness] = hc::evaluate_radius(g, centers);
    ordered_json out;
    out["p"] = centers.size();
    ordered_json labels = ordered_json::array();
    for (hc::Vertex c : centers) labels.push_back(lr.labels[c]);
    out["centers"] = std::move(labels);
    out["radius"] = radius;
    out["witness"] = lr.labels[witness];
    if (args.compare) {
        hc::SolveOptions options;
        options.seed = args.seed;
        options.start = args.start;
        options.root = args.root;
        hc::CenterSolution sol = hc::solve(g, static_cast<int>(centers.size()), options);
        out["solve_radius"] = sol.radius;
        out["solve_lower_bound"] = sol.lower_bound;
    }
    std::cout << out.dump() << '\n';
    return 0;
}

int run_app(int argc, char** argv) {
    CLI::App app{"approximate p-centers with packing certificates on hyperbolic graphs"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    CLI::App* solve_cmd =
        app.add_subcommand("solve", "compute p centers and their quality certificate");
    add_graph_args(solve_cmd, solve_args.graph);
    solve_cmd->add_option("--p", solve_args.p_text, "p value or inclusive range a..b")
        ->required();
    solve_cmd->add_option("--algo", solve_args.algo,
                          "auto | general | tree | chepoi1 | brute");
    solve_cmd->add_option("--delta", solve_args.delta_text,
                          "hyperbolicity override (half-integer) for the round cap");
    solve_cmd->add_option("--format", solve_args.format, "json (one object per p) | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    solve_cmd->add_option("--seed", solve_args.seed, "seed for the sampled delta estimate")
        ->envname("HYPERCENTER_SEED");
    solve_cmd->add_option("--samples", solve_args.samples,
                          "sample count for the delta estimate on large graphs");
    solve_cmd->add_option("--start", solve_args.start, "start vertex id for the pair search");
    solve_cmd->add_option("--root", solve_args.root, "layering root vertex id");

    HyperArgs hyper_args;
    CLI::App* hyper_cmd =
        app.add_subcommand("hyperbolicity", "four-point hyperbolicity, exact or sampled");
    add_graph_args(hyper_cmd, hyper_args.graph);
    hyper_cmd->add_flag("--exact", hyper_args.exact,
                        "force the exact quadruple scan (refuses n > 512)");
    hyper_cmd->add_option("--samples", hyper_args.samples, "sampled quadruple count");
    hyper_cmd->add_option("--seed", hyper_args.seed, "sampling seed")
        ->envname("HYPERCENTER_SEED");

    TreeArgs tree_args;
    CLI::App* tree_cmd = app.add_subcommand(
        "tree-approx", "layering-partition tree and its distance-distortion report");
    add_graph_args(tree_cmd, tree_args.graph);
    tree_cmd->add_option("--root", tree_args.root, "layering root vertex id");
    tree_cmd->add_option("--samples", tree_args.samples,
                         "pair samples on graphs too large for the exhaustive scan");
    tree_cmd->add_option("--seed", tree_args.seed, "sampling seed")
        ->envname("HYPERCENTER_SEED");
    tree_cmd->add_option("--dump-tree", tree_args.dump_tree, "write the cluster tree as CSV");

    CertifyArgs certify_args;
    CLI::App* certify_cmd =
        app.add_subcommand("certify", "evaluate the domination radius of given centers");
    add_graph_args(certify_cmd, certify_args.graph);
    certify_cmd->add_option("--centers", certify_args.centers_path,
                            "file with one vertex label per line")
        ->required();
    certify_cmd->add_flag("--compare", certify_args.compare,
                          "also run solve with the same p and report its radius");
    certify_cmd->add_option("--seed", certify_args.seed, "seed for --compare")
        ->envname("HYPERCENTER_SEED");
    certify_cmd->add_option("--start", certify_args.start, "start vertex for --compare");
    certify_cmd->add_option("--root", certify_args.root, "layering root for --compare");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(solve_args);
        if (hyper_cmd->parsed()) return cmd_hyperbolicity(hyper_args);
        if (tree_cmd->parsed()) return cmd_tree_approx(tree_args);
        if (certify_cmd->parsed()) return cmd_certify(certify_args);
    } catch (const hypercenter::InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const hypercenter::LimitError& e) {
        std::cerr << "limit exceeded: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_app(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
