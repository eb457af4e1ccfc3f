#include "ordercert/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <numeric>
#include <sstream>

namespace ordercert {

Graph::Graph(int n_vertices) : n(n_vertices) {
    if (n < 0)
        throw input_error("negative vertex count");
    adj.assign(n, Bitset(n));
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw input_error("edge endpoint out of range: (" + std::to_string(u) + "," +
                          std::to_string(v) + ") with n=" + std::to_string(n));
    if (u == v)
        throw input_error("self-loop at vertex " + std::to_string(u) + " (simple graphs only)");
    adj[u].set(v);
    adj[v].set(u);
}

long Graph::edge_count() const {
    long twice = 0;
    for (const auto& row : adj)
        twice += static_cast<long>(row.count());
    return twice / 2;
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

Graph complement(const Graph& g) {
    Graph c(g.n);
    for (int v = 0; v < g.n; ++v) {
        c.adj[v] = ~g.adj[v];
        c.adj[v].reset(v);
    }
    return c;
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.n; ++v)
        d = std::max(d, g.degree(v));
    return d;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.n, -1);
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v = static_cast<int>(g.adj[u].find_first()); v >= 0;
             v = static_cast<int>(g.adj[u].find_next(v))) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(g.n, false);
    for (int s = 0; s < g.n; ++s) {
        if (seen[s])
            continue;
        auto dist = bfs_distances(g, s);
        std::vector<int> comp;
        for (int v = 0; v < g.n; ++v)
            if (dist[v] >= 0) {
                comp.push_back(v);
                seen[v] = true;
            }
        comps.push_back(std::move(comp));
    }
    return comps;
}

int diameter(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.n; ++v) {
        auto dist = bfs_distances(g, v);
        for (int d : dist)
            best = std::max(best, d);
    }
    return best;
}

bool is_clique(const Graph& g, std::span<const int> s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (!g.has_edge(s[i], s[j]))
                return false;
    return true;
}

bool is_independent(const Graph& g, std::span<const int> s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j]))
                return false;
    return true;
}

namespace {

void clique_expand(const Graph& g, Bitset cand, int size, int& best) {
    if (size + static_cast<int>(cand.count()) <= best)
        return;
    best = std::max(best, size);
    for (int v = static_cast<int>(cand.find_first()); v >= 0;
         v = static_cast<int>(cand.find_next(v))) {
        cand.reset(v);
        clique_expand(g, cand & g.adj[v], size + 1, best);
    }
}

} // namespace

int max_clique_size(const Graph& g) {
    if (g.n == 0)
        return 0;
    Bitset all(g.n);
    all.set();
    int best = 0;
    clique_expand(g, all, 0, best);
    return best;
}

VertexOrdering::VertexOrdering(std::vector<int> order_) : order(std::move(order_)) {
    const int n = static_cast<int>(order.size());
    pos.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        if (v < 0 || v >= n || pos[v] != -1)
            throw input_error("ordering is not a permutation of 0.." + std::to_string(n - 1));
        pos[v] = i;
    }
}

VertexOrdering VertexOrdering::reversed() const {
    std::vector<int> rev(order.rbegin(), order.rend());
    return VertexOrdering(std::move(rev));
}

VertexOrdering VertexOrdering::identity(int n) {
    std::vector<int> ord(n);
    std::iota(ord.begin(), ord.end(), 0);
    return VertexOrdering(std::move(ord));
}

// --- edge-list text ---

Graph parse_edge_list(std::istream& in) {
    auto next_data_line = [&](std::string& line) -> bool {
        while (std::getline(in, line)) {
            if (auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            if (line.find_first_not_of(" \t\r\n") != std::string::npos)
                return true;
        }
        return false;
    };

    std::string line;
    if (!next_data_line(line))
        throw input_error("edge list: missing header line \"n m\"");
    long n, m;
    {
        std::istringstream hdr(line);
        if (!(hdr >> n >> m) || n < 0 || m < 0)
            throw input_error("edge list: malformed header line: " + line);
    }
    Graph g(static_cast<int>(n));
    for (long e = 0; e < m; ++e) {
        if (!next_data_line(line))
            throw input_error("edge list: expected " + std::to_string(m) + " edges, got " +
                              std::to_string(e));
        std::istringstream es(line);
        int u, v;
        if (!(es >> u >> v))
            throw input_error("edge list: malformed edge line: " + line);
        g.add_edge(u, v);
    }
    return g;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.n; ++u)
        for (int v = static_cast<int>(g.adj[u].find_next(u)); v >= 0;
             v = static_cast<int>(g.adj[u].find_next(v)))
            out << u << ' ' << v << '\n';
    return out.str();
}

// --- graph6 ---

namespace {

constexpr const char* kGraph6Header = ">>graph6<<";

} // namespace

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    if (s.rfind(kGraph6Header, 0) == 0)
        s.erase(0, std::string(kGraph6Header).size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r'))
        s.pop_back();
    if (s.empty())
        throw input_error("graph6: empty string");

    size_t at = 0;
    long n;
    if (s[at] == 126) { // '~' marks the extended order forms
        if (s.size() < 4)
            throw input_error("graph6: truncated extended order");
        if (s[1] == 126)
            throw input_error("graph6: 8-byte order form not supported");
        n = 0;
        for (int b = 1; b <= 3; ++b) {
            int c = s[b] - 63;
            if (c < 0 || c > 63)
                throw input_error("graph6: bad order byte");
            n = (n << 6) | c;
        }
        at = 4;
    } else {
        n = s[0] - 63;
        if (n < 0 || n > 62)
            throw input_error("graph6: bad order byte");
        at = 1;
    }

    const long npairs = n * (n - 1) / 2;
    const long nbytes = (npairs + 5) / 6;
    if (static_cast<long>(s.size()) - static_cast<long>(at) != nbytes)
        throw input_error("graph6: bit-vector length mismatch (expected " +
                          std::to_string(nbytes) + " bytes, got " +
                          std::to_string(s.size() - at) + ")");

    Graph g(static_cast<int>(n));
    long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int c = s[at + bit / 6] - 63;
            if (c < 0 || c > 63)
                throw input_error("graph6: byte out of range");
            if ((c >> (5 - bit % 6)) & 1)
                g.add_edge(i, j);
        }
    }
    // trailing padding bits must be zero
    for (long b = npairs; b < nbytes * 6; ++b) {
        int c = s[at + b / 6] - 63;
        if ((c >> (5 - b % 6)) & 1)
            throw input_error("graph6: nonzero padding bits");
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    if (g.n > 62)
        throw input_error("graph6 emit: only the short form (n <= 62) is supported");
    std::string s;
    s.push_back(static_cast<char>(g.n + 63));
    const long npairs = static_cast<long>(g.n) * (g.n - 1) / 2;
    const long nbytes = (npairs + 5) / 6;
    std::vector<int> bytes(nbytes, 0);
    long bit = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.has_edge(i, j))
                bytes[bit / 6] |= 1 << (5 - bit % 6);
    for (int b : bytes)
        s.push_back(static_cast<char>(b + 63));
    return s;
}

} // namespace ordercert
