#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hypercenter {

using Vertex = std::uint32_t;
using Dist = std::int32_t;

inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

// Immutable CSR adjacency of a simple, connected, undirected graph with
// unit-length edges. Vertex ids are 0..n-1. Neighbor lists are sorted
// ascending. Once built, a Graph is safe to share across threads.
class Graph {
public:
    Graph() = default;

    // Builds from an explicit edge list. Throws std::invalid_argument on
    // out-of-range ids, self-loops or duplicate edges, and InputError if the
    // result is disconnected or empty.
    static Graph from_edges(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    Vertex num_vertices() const { return n_; }
    std::size_t num_edges() const { return m_; }

    std::span<const Vertex> neighbors(Vertex u) const {
        return {targets_.data() + offsets_[u], targets_.data() + offsets_[u + 1]};
    }

    std::size_t degree(Vertex u) const { return offsets_[u + 1] - offsets_[u]; }

private:
    Vertex n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::uint64_t> offsets_;
    std::vector<Vertex> targets_;
};

// Single-source BFS result. parent[v] is the minimum-id neighbor of v one
// layer closer to the source; parent[source] == kNoVertex. For multi-source
// fields, dist is the distance to the nearest source and every source has
// parent kNoVertex.
struct DistanceField {
    Vertex source = kNoVertex;
    std::vector<Dist> dist;
    std::vector<Vertex> parent;
};

struct LoadResult {
    Graph graph;
    std::vector<std::string> labels;  // internal id -> original label
    std::size_t self_loops_dropped = 0;
    std::size_t duplicate_edges_dropped = 0;
    std::size_t vertices_dropped = 0;  // outside the kept component
    std::size_t edges_dropped = 0;     // incident to dropped vertices
    std::size_t component_count = 1;   // in the raw input
};

// Parses whitespace-separated "u v" edge lines. Lines that are blank or start
// with '#' are skipped. Labels are arbitrary tokens, remapped to 0..n-1 in
// first-appearance order. Self-loops and duplicate (undirected) edges are
// dropped with counts. A disconnected input is an InputError unless
// keep_largest_component is set, in which case the largest component (ties:
// the one containing the smallest first-seen vertex) is kept and ids are
// compacted preserving relative order.
LoadResult load_edge_list(std::istream& in, bool keep_largest_component = false);
LoadResult load_edge_list_file(const std::string& path, bool keep_largest_component = false);

DistanceField bfs(const Graph& g, Vertex source);
DistanceField bfs_multi(const Graph& g, std::span<const Vertex> sources);

// Eccentricity of u together with every vertex attaining it, ascending ids.
std::pair<Dist, std::vector<Vertex>> farthest_set(const Graph& g, Vertex u);

// The canonical shortest u-v path: follow min-id BFS parents from v in
// bfs(g, u), then reverse. Element k is at distance k from u.
std::vector<Vertex> geodesic(const Graph& g, Vertex u, Vertex v);

// Vertex at distance t from u on the canonical u-v geodesic.
// Throws std::out_of_range unless 0 <= t <= d(u, v).
Vertex point_along(const Graph& g, Vertex u, Vertex v, Dist t);

// Same, reusing an existing single-source field rooted at u.
Vertex point_along(const DistanceField& from_u, Vertex v, Dist t);

// Covering radius of a nonempty center set via one multi-source BFS.
// Returns (radius, witness) where the witness is the smallest-id vertex
// attaining the radius.
std::pair<Dist, Vertex> evaluate_radius(const Graph& g, std::span<const Vertex> centers);

// Distance matrix by n successive BFS. Intended for small instances
// (oracles, exact hyperbolicity); memory is n^2 entries.
std::vector<std::vector<Dist>> all_pairs_distances(const Graph& g);

}  // namespace hypercenter
