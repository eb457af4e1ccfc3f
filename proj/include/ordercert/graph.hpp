#pragma once

#include "ordercert/errors.hpp"

#include <boost/dynamic_bitset.hpp>

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ordercert {

using Bitset = boost::dynamic_bitset<>;

// Undirected simple graph on vertices 0..n-1, adjacency kept as per-vertex
// bitsets. Symmetric and irreflexive by construction.
struct Graph {
    int n = 0;
    std::vector<Bitset> adj;

    Graph() = default;
    explicit Graph(int n_vertices);

    bool has_edge(int u, int v) const { return u != v && adj[u].test(v); }
    void add_edge(int u, int v); // throws input_error on self-loop or out-of-range
    int degree(int v) const { return static_cast<int>(adj[v].count()); }
    long edge_count() const;

    bool operator==(const Graph&) const = default;
};

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);
Graph complement(const Graph& g);

int max_degree(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g); // each sorted, ordered by least vertex
int diameter(const Graph& g);                             // max over components; 0 for empty graph
bool is_clique(const Graph& g, std::span<const int> s);
bool is_independent(const Graph& g, std::span<const int> s);
int max_clique_size(const Graph& g); // exhaustive branch and bound, intended for small n

// BFS distances from src; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int src);

// A permutation of 0..n-1 with its inverse. order[i] is the vertex at
// position i; pos[v] is the position of vertex v.
struct VertexOrdering {
    std::vector<int> order;
    std::vector<int> pos;

    VertexOrdering() = default;
    explicit VertexOrdering(std::vector<int> order_); // throws input_error if not a permutation

    int size() const { return static_cast<int>(order.size()); }
    VertexOrdering reversed() const;
    static VertexOrdering identity(int n);

    bool operator==(const VertexOrdering&) const = default;
};

// --- file formats ---

// Edge-list text: first line "n m", then m lines "u v" (0-based);
// '#' starts a comment that runs to end of line.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
std::string emit_edge_list(const Graph& g);

// graph6, bit-exact with the published format. emit handles n <= 62
// (short form); parse also accepts the 3-byte extended order.
Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

} // namespace ordercert
