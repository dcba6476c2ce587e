#include "hypercenter/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "hypercenter/errors.hpp"

namespace hypercenter {

namespace {

// Reachability sweep over a raw adjacency list; fills comp ids in discovery
// order of their smallest vertex.
std::size_t label_components(const std::vector<std::vector<Vertex>>& adj,
                             std::vector<std::uint32_t>& comp) {
    const std::size_t n = adj.size();
    comp.assign(n, static_cast<std::uint32_t>(-1));
    std::uint32_t next = 0;
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] != static_cast<std::uint32_t>(-1)) continue;
        comp[s] = next;
        queue.clear();
        queue.push_back(s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            for (Vertex w : adj[u]) {
                if (comp[w] == static_cast<std::uint32_t>(-1)) {
                    comp[w] = next;
                    queue.push_back(w);
                }
            }
        }
        ++next;
    }
    return next;
}

}  // namespace

Graph Graph::from_edges(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    if (n == 0) throw InputError("graph has no vertices");
    Graph g;
    g.n_ = n;
    g.m_ = edges.size();
    std::vector<std::uint32_t> deg(n, 0);
    for (auto [a, b] : edges) {
        if (a >= n || b >= n) throw std::invalid_argument("edge endpoint out of range");
        if (a == b) throw std::invalid_argument("self-loop");
        ++deg[a];
        ++deg[b];
    }
    g.offsets_.assign(n + 1, 0);
    for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.targets_.resize(2 * edges.size());
    std::vector<std::uint64_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [a, b] : edges) {
        g.targets_[fill[a]++] = b;
        g.targets_[fill[b]++] = a;
    }
    for (Vertex v = 0; v < n; ++v) {
        auto begin = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
        auto end = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
        std::sort(begin, end);
        if (std::adjacent_find(begin, end) != end)
            throw std::invalid_argument("duplicate edge");
    }
    // Connectivity check doubles as a validation of the CSR arrays.
    DistanceField f = bfs(g, 0);
    for (Vertex v = 0; v < n; ++v)
        if (f.dist[v] < 0) throw InputError("graph is disconnected");
    return g;
}

LoadResult load_edge_list(std::istream& in, bool keep_largest_component) {
    LoadResult res;
    std::unordered_map<std::string, Vertex> ids;
    std::vector<std::string> labels;
    std::vector<std::pair<Vertex, Vertex>> raw;
    std::string line;
    std::size_t line_no = 0;

    auto intern = [&](const std::string& tok) -> Vertex {
        auto it = ids.find(tok);
        if (it != ids.end()) return it->second;
        if (labels.size() >= static_cast<std::size_t>(1) << 31)
            throw InputError("too many vertices (id space is 31 bits)");
        Vertex id = static_cast<Vertex>(labels.size());
        ids.emplace(tok, id);
        labels.push_back(tok);
        return id;
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a >> b) || (ls >> extra)) {
            throw InputError("line " + std::to_string(line_no) +
                             ": expected two whitespace-separated labels");
        }
        if (a == b) {
            intern(a);
            ++res.self_loops_dropped;
            continue;
        }
        Vertex u = intern(a);
        Vertex v = intern(b);
        raw.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (labels.empty()) throw InputError("empty graph");

    std::sort(raw.begin(), raw.end());
    std::size_t before = raw.size();
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    res.duplicate_edges_dropped = before - raw.size();

    const Vertex n_all = static_cast<Vertex>(labels.size());
    std::vector<std::vector<Vertex>> adj(n_all);
    for (auto [u, v] : raw) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<std::uint32_t> comp;
    res.component_count = label_components(adj, comp);

    std::vector<std::pair<Vertex, Vertex>> edges;
    if (res.component_count == 1) {
        edges = std::move(raw);
        res.labels = std::move(labels);
        res.graph = Graph::from_edges(n_all, edges);
        return res;
    }
    if (!keep_largest_component) {
        throw InputError("graph is disconnected (" + std::to_string(res.component_count) +
                         " components); enable keep_largest_component to proceed");
    }
    // Component ids are ordered by smallest member, so on a size tie the
    // earliest-seen component wins.
    std::vector<std::size_t> size(res.component_count, 0);
    for (Vertex v = 0; v < n_all; ++v) ++size[comp[v]];
    std::uint32_t keep = 0;
    for (std::uint32_t c = 1; c < res.component_count; ++c)
        if (size[c] > size[keep]) keep = c;

    std::vector<Vertex> remap(n_all, kNoVertex);
    Vertex next = 0;
    for (Vertex v = 0; v < n_all; ++v) {
        if (comp[v] == keep) {
            remap[v] = next++;
            res.labels.push_back(labels[v]);
        }
    }
    res.vertices_dropped = n_all - next;
    for (auto [u, v] : raw) {
        if (comp[u] == keep)
            edges.emplace_back(remap[u], remap[v]);
        else
            ++res.edges_dropped;
    }
    res.graph = Graph::from_edges(next, edges);
    return res;
}

LoadResult load_edge_list_file(const std::string& path, bool keep_largest_component) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return load_edge_list(in, keep_largest_component);
}

DistanceField bfs(const Graph& g, Vertex source) {
    const Vertex n = g.num_vertices();
    if (source >= n) throw std::invalid_argument("bfs source out of range");
    DistanceField f;
    f.source = source;
    f.dist.assign(n, -1);
    f.parent.assign(n, kNoVertex);
    std::vector<Vertex> queue;
    queue.reserve(n);
    queue.push_back(source);
    f.dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        Dist du = f.dist[u];
        for (Vertex w : g.neighbors(u)) {
            if (f.dist[w] < 0) {
                f.dist[w] = du + 1;
                queue.push_back(w);
            }
        }
    }
    // Parents in a second pass: neighbor lists are sorted, so the first
    // neighbor one layer up is the minimum-id one.
    for (Vertex v = 0; v < n; ++v) {
        if (v == source) continue;
        Dist want = f.dist[v] - 1;
        for (Vertex w : g.neighbors(v)) {
            if (f.dist[w] == want) {
                f.parent[v] = w;
                break;
            }
        }
    }
    return f;
}

DistanceField bfs_multi(const Graph& g, std::span<const Vertex> sources) {
    const Vertex n = g.num_vertices();
    if (sources.empty()) throw std::invalid_argument("bfs_multi needs at least one source");
    DistanceField f;
    f.dist.assign(n, -1);
    f.parent.assign(n, kNoVertex);
    std::vector<Vertex> queue;
    queue.reserve(n);
    std::vector<Vertex> seeds(sources.begin(), sources.end());
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    for (Vertex s : seeds) {
        if (s >= n) throw std::invalid_argument("bfs_multi source out of range");
        f.dist[s] = 0;
        queue.push_back(s);
    }
    f.source = seeds.front();
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        Dist du = f.dist[u];
        for (Vertex w : g.neighbors(u)) {
            if (f.dist[w] < 0) {
                f.dist[w] = du + 1;
                queue.push_back(w);
            }
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (f.dist[v] == 0) continue;
        Dist want = f.dist[v] - 1;
        for (Vertex w : g.neighbors(v)) {
            if (f.dist[w] == want) {
                f.parent[v] = w;
                break;
            }
        }
    }
    return f;
}

std::pair<Dist, std::vector<Vertex>> farthest_set(const Graph& g, Vertex u) {
    DistanceField f = bfs(g, u);
    Dist ecc = 0;
    for (Dist d : f.dist) ecc = std::max(ecc, d);
    std::vector<Vertex> attain;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (f.dist[v] == ecc) attain.push_back(v);
    return {ecc, attain};
}

std::vector<Vertex> geodesic(const Graph& g, Vertex u, Vertex v) {
    DistanceField f = bfs(g, u);
    std::vector<Vertex> path;
    Vertex cur = v;
    path.push_back(cur);
    while (cur != u) {
        cur = f.parent[cur];
        path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

Vertex point_along(const DistanceField& from_u, Vertex v, Dist t) {
    if (v >= from_u.dist.size()) throw std::invalid_argument("vertex out of range");
    Dist d = from_u.dist[v];
    if (t < 0 || t > d) throw std::out_of_range("point_along position outside the geodesic");
    Vertex cur = v;
    for (Dist step = 0; step < d - t; ++step) cur = from_u.parent[cur];
    return cur;
}

Vertex point_along(const Graph& g, Vertex u, Vertex v, Dist t) {
    DistanceField f = bfs(g, u);
    return point_along(f, v, t);
}

std::pair<Dist, Vertex> evaluate_radius(const Graph& g, std::span<const Vertex> centers) {
    DistanceField f = bfs_multi(g, centers);
    Dist radius = 0;
    Vertex witness = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (f.dist[v] > radius) {
            radius = f.dist[v];
            witness = v;
        }
    }
    return {radius, witness};
}

std::vector<std::vector<Dist>> all_pairs_distances(const Graph& g) {
    const Vertex n = g.num_vertices();
    std::vector<std::vector<Dist>> d;
    d.reserve(n);
    for (Vertex v = 0; v < n; ++v) d.push_back(bfs(g, v).dist);
    return d;
}

}  // namespace hypercenter
