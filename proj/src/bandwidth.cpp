#include "ordercert/bandwidth.hpp"

#include <algorithm>
#include <numeric>

namespace ordercert {

int LowerBounds::best() const { return std::max({degree, diameter, clique}); }

int ordering_width(const Graph& g, const VertexOrdering& ord) {
    if (ord.size() != g.n)
        throw input_error("ordering length does not match vertex count");
    int width = 0;
    for (int u = 0; u < g.n; ++u)
        for (int v = static_cast<int>(g.adj[u].find_next(u)); v >= 0;
             v = static_cast<int>(g.adj[u].find_next(v)))
            width = std::max(width, std::abs(ord.pos[u] - ord.pos[v]));
    return width;
}

namespace {

Graph induced(const Graph& g, const std::vector<int>& verts) {
    Graph h(static_cast<int>(verts.size()));
    for (size_t a = 0; a < verts.size(); ++a)
        for (size_t b = a + 1; b < verts.size(); ++b)
            if (g.has_edge(verts[a], verts[b]))
                h.add_edge(static_cast<int>(a), static_cast<int>(b));
    return h;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

} // namespace

LowerBounds lower_bounds(const Graph& g) {
    LowerBounds lb;
    lb.degree = ceil_div(max_degree(g), 2);
    for (const auto& comp : components(g)) {
        int np = static_cast<int>(comp.size());
        if (np <= 1)
            continue;
        int dp = diameter(induced(g, comp));
        lb.diameter = std::max(lb.diameter, ceil_div(np - 1, dp));
    }
    lb.clique = std::max(0, max_clique_size(g) - 1);
    return lb;
}

int bandwidth_guard() { return guard_override().value_or(14); }

namespace {

// Feasibility search for an ordering of width <= b, vertices tried in
// increasing index, so the first full ordering found is the
// lexicographically least one of that width.
struct WidthSearch {
    const Graph& g;
    int b;
    std::vector<int> order;
    std::vector<int> pos;          // -1 while unplaced
    std::vector<int> unplaced_nbr; // per placed vertex

    WidthSearch(const Graph& g_, int b_)
        : g(g_), b(b_), pos(g_.n, -1), unplaced_nbr(g_.n, 0) {}

    bool feasible_after_place(int p) {
        // every placed vertex with unplaced neighbours must fit them all
        // into the slots up to its deadline
        for (int q = 0; q <= p; ++q) {
            int w = order[q];
            if (unplaced_nbr[w] > 0 && q + b - p < unplaced_nbr[w])
                return false;
        }
        return true;
    }

    bool run(int p) {
        if (p == g.n)
            return true;
        for (int v = 0; v < g.n; ++v) {
            if (pos[v] >= 0)
                continue;
            bool ok = true;
            for (int u = static_cast<int>(g.adj[v].find_first()); u >= 0 && ok;
                 u = static_cast<int>(g.adj[v].find_next(u)))
                if (pos[u] >= 0 && p - pos[u] > b)
                    ok = false;
            if (!ok)
                continue;
            pos[v] = p;
            order.push_back(v);
            for (int u = static_cast<int>(g.adj[v].find_first()); u >= 0;
                 u = static_cast<int>(g.adj[v].find_next(u)))
                if (pos[u] >= 0 && u != v)
                    --unplaced_nbr[u];
            unplaced_nbr[v] = 0;
            for (int u = static_cast<int>(g.adj[v].find_first()); u >= 0;
                 u = static_cast<int>(g.adj[v].find_next(u)))
                if (pos[u] < 0)
                    ++unplaced_nbr[v];
            if (feasible_after_place(p) && run(p + 1))
                return true;
            for (int u = static_cast<int>(g.adj[v].find_first()); u >= 0;
                 u = static_cast<int>(g.adj[v].find_next(u)))
                if (pos[u] >= 0 && u != v)
                    ++unplaced_nbr[u];
            unplaced_nbr[v] = 0;
            order.pop_back();
            pos[v] = -1;
        }
        return false;
    }
};

// Minimum width of a connected (or any) small graph, with witness.
std::pair<int, std::vector<int>> solve_component(const Graph& h) {
    if (h.n == 0)
        return {0, {}};
    int lb = lower_bounds(h).best();
    for (int b = lb; b < std::max(1, h.n); ++b) {
        WidthSearch search(h, b);
        if (search.run(0))
            return {b, search.order};
    }
    return {0, {0}}; // n == 1
}

} // namespace

BandwidthResult exact_bandwidth(const Graph& g, int max_component) {
    BandwidthResult res;
    res.bounds = lower_bounds(g);
    std::vector<int> witness;
    for (const auto& comp : components(g)) {
        if (static_cast<int>(comp.size()) > max_component)
            throw size_guard_error("exact_bandwidth", static_cast<int>(comp.size()),
                                   max_component);
        auto [value, local] = solve_component(induced(g, comp));
        res.value = std::max(res.value, value);
        for (int li : local)
            witness.push_back(comp[li]);
    }
    res.ordering = g.n > 0 ? VertexOrdering(std::move(witness)) : VertexOrdering();
    if (ordering_width(g, res.ordering) != res.value)
        throw std::logic_error("bandwidth witness does not match reported value");
    return res;
}

BoundedOrdering interval_bandwidth_ordering(const Graph& g) {
    auto ord = find_ordering(g, {ConditionId::Interval});
    if (!ord)
        throw input_error("not an interval graph");
    BoundedOrdering out{*ord, ordering_width(g, *ord), max_degree(g)};
    if (out.width > out.guarantee)
        throw std::logic_error("interval ordering exceeded the degree bound");
    return out;
}

BoundedOrdering cocomp_bandwidth_ordering(const Graph& g) {
    if (g.edge_count() == 0)
        throw input_error("co-comparability bandwidth bound needs at least one edge");
    auto ord = find_ordering(g, {ConditionId::CoComparability});
    if (!ord)
        throw input_error("not a co-comparability graph");
    BoundedOrdering out{*ord, ordering_width(g, *ord), 2 * max_degree(g) - 1};
    if (out.width > out.guarantee)
        throw std::logic_error("co-comparability ordering exceeded the 2D-1 bound");
    return out;
}

BoundedOrdering split_bandwidth_ordering(const Graph& g) {
    auto part = recognize_split_fast(g);
    if (!part)
        throw input_error("not a split graph");
    std::vector<int> isolated, rest;
    for (int v = 0; v < g.n; ++v)
        (g.degree(v) == 0 ? isolated : rest).push_back(v);
    std::vector<int> ord(isolated);
    ord.insert(ord.end(), rest.begin(), rest.end());
    int delta = max_degree(g);
    BoundedOrdering out{VertexOrdering(std::move(ord)), 0, delta * (delta + 2)};
    out.width = ordering_width(g, out.ordering);
    // the proof's sharper bound: width <= |I1| + |K| - 1 (all non-isolated
    // vertices sit in one block)
    if (out.width > out.guarantee ||
        out.width > std::max<int>(0, static_cast<int>(rest.size()) - 1))
        throw std::logic_error("split ordering exceeded its bound");
    return out;
}

// --- caterpillars ---

void validate_caterpillar(const Caterpillar& c) {
    const Graph& t = c.tree;
    if (t.n == 0)
        throw input_error("caterpillar on zero vertices");
    if (t.edge_count() != t.n - 1 || components(t).size() != 1)
        throw input_error("caterpillar host is not a tree");
    if (c.leaves.size() != c.spine.size())
        throw input_error("caterpillar leaf lists do not match spine length");
    std::vector<int> owner(t.n, -1); // spine index covering each vertex
    for (size_t i = 0; i < c.spine.size(); ++i) {
        int v = c.spine[i];
        if (v < 0 || v >= t.n || owner[v] != -1)
            throw input_error("caterpillar spine is not a sequence of distinct vertices");
        owner[v] = static_cast<int>(i);
        if (i > 0 && !t.has_edge(c.spine[i - 1], v))
            throw input_error("caterpillar spine is not a path in the tree");
    }
    for (size_t i = 0; i < c.spine.size(); ++i)
        for (int l : c.leaves[i]) {
            if (l < 0 || l >= t.n || owner[l] != -1)
                throw input_error("caterpillar leaf listed twice or clashes with spine");
            if (t.degree(l) != 1 || !t.has_edge(l, c.spine[i]))
                throw input_error("vertex " + std::to_string(l) +
                                  " is not a leaf hanging off its spine vertex");
            owner[l] = static_cast<int>(i);
        }
    for (int v = 0; v < t.n; ++v)
        if (owner[v] == -1)
            throw input_error("caterpillar misses vertex " + std::to_string(v));
}

namespace {

// Longest path of a path graph, from its least endpoint.
std::optional<std::vector<int>> path_order(const Graph& t) {
    if (t.n == 1)
        return std::vector<int>{0};
    int start = -1;
    for (int v = 0; v < t.n; ++v) {
        if (t.degree(v) > 2)
            return std::nullopt;
        if (t.degree(v) == 1 && start < 0)
            start = v;
    }
    if (start < 0)
        return std::nullopt;
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (static_cast<int>(order.size()) < t.n) {
        int next = -1;
        for (int u = static_cast<int>(t.adj[cur].find_first()); u >= 0;
             u = static_cast<int>(t.adj[cur].find_next(u)))
            if (u != prev)
                next = u;
        if (next < 0)
            return std::nullopt;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

} // namespace

std::optional<Caterpillar> caterpillar_from_tree(const Graph& tree) {
    if (tree.n == 0 || tree.edge_count() != tree.n - 1 || components(tree).size() != 1)
        return std::nullopt;
    Caterpillar c;
    c.tree = tree;
    // a bare path is its own spine
    if (auto p = path_order(tree)) {
        c.spine = *p;
        c.leaves.assign(c.spine.size(), {});
        return c;
    }
    // otherwise the spine is the path of internal vertices
    std::vector<int> internal;
    for (int v = 0; v < tree.n; ++v)
        if (tree.degree(v) >= 2)
            internal.push_back(v);
    Graph spine_graph = induced(tree, internal);
    auto p = path_order(spine_graph);
    if (!p)
        return std::nullopt; // internal vertices do not form a path
    for (int li : *p)
        c.spine.push_back(internal[li]);
    c.leaves.assign(c.spine.size(), {});
    std::vector<int> owner(tree.n, -1);
    for (size_t i = 0; i < c.spine.size(); ++i)
        owner[c.spine[i]] = static_cast<int>(i);
    for (int v = 0; v < tree.n; ++v) {
        if (owner[v] >= 0)
            continue;
        if (tree.degree(v) != 1)
            return std::nullopt;
        int parent = static_cast<int>(tree.adj[v].find_first());
        if (owner[parent] < 0)
            return std::nullopt;
        c.leaves[owner[parent]].push_back(v);
    }
    validate_caterpillar(c);
    return c;
}

VertexOrdering caterpillar_ordering(const Caterpillar& c) {
    validate_caterpillar(c);
    std::vector<int> ord;
    ord.reserve(c.tree.n);
    for (size_t i = 0; i < c.spine.size(); ++i) {
        ord.push_back(c.spine[i]);
        std::vector<int> ls(c.leaves[i]);
        std::sort(ls.begin(), ls.end());
        ord.insert(ord.end(), ls.begin(), ls.end());
    }
    VertexOrdering vo(std::move(ord));
    if (ordering_width(c.tree, vo) > max_degree(c.tree))
        throw std::logic_error("caterpillar ordering exceeded the tree degree bound");
    return vo;
}

namespace {

void check_kkm_property(const Graph& g, const Caterpillar& t) {
    if (t.tree.n != g.n)
        throw input_error("caterpillar does not span the graph");
    for (int u = 0; u < t.tree.n; ++u)
        if (!t.tree.adj[u].is_subset_of(g.adj[u]))
            throw input_error("caterpillar is not a subgraph of the graph");
    std::vector<std::vector<int>> tdist(g.n);
    for (int v = 0; v < g.n; ++v)
        tdist[v] = bfs_distances(t.tree, v);
    for (int u = 0; u < g.n; ++u)
        for (int v = static_cast<int>(g.adj[u].find_next(u)); v >= 0;
             v = static_cast<int>(g.adj[u].find_next(v))) {
            int d = tdist[u][v];
            if (d > 4)
                throw input_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") has tree-distance " + std::to_string(d) + " > 4");
            if (d == 4 && (t.tree.degree(u) != 1 || t.tree.degree(v) != 1))
                throw input_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") at tree-distance 4 is not a leaf pair");
        }
}

} // namespace

BoundedOrdering atfree_bandwidth_ordering(const Graph& g, const Caterpillar& t) {
    validate_caterpillar(t);
    check_kkm_property(g, t);
    VertexOrdering ord = caterpillar_ordering(t);
    BoundedOrdering out{ord, ordering_width(g, ord), 3 * max_degree(g)};
    if (out.width > out.guarantee)
        throw std::logic_error("caterpillar ordering exceeded the 3D bound");
    return out;
}

int caterpillar_guard() { return guard_override().value_or(10); }

namespace {

struct TreeEnum {
    const Graph& g;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> chosen;
    std::vector<int> parent; // union-find, path halving

    explicit TreeEnum(const Graph& g_) : g(g_), parent(g_.n) {
        for (int u = 0; u < g.n; ++u)
            for (int v = static_cast<int>(g.adj[u].find_next(u)); v >= 0;
                 v = static_cast<int>(g.adj[u].find_next(v)))
                edges.emplace_back(u, v);
    }

    int find(std::vector<int>& p, int x) {
        while (p[x] != x)
            x = p[x] = p[p[x]];
        return x;
    }

    std::optional<Caterpillar> search(size_t at, std::vector<int> uf) {
        if (static_cast<int>(chosen.size()) == g.n - 1) {
            Graph tree(g.n);
            for (int e : chosen)
                tree.add_edge(edges[e].first, edges[e].second);
            if (auto c = caterpillar_from_tree(tree)) {
                try {
                    check_kkm_property(g, *c);
                    return c;
                } catch (const input_error&) {
                }
            }
            return std::nullopt;
        }
        if (edges.size() - at < g.n - 1 - chosen.size())
            return std::nullopt;
        auto [u, v] = edges[at];
        int ru = find(uf, u), rv = find(uf, v);
        if (ru != rv) {
            std::vector<int> uf2 = uf;
            uf2[ru] = rv;
            chosen.push_back(static_cast<int>(at));
            if (auto c = search(at + 1, std::move(uf2)))
                return c;
            chosen.pop_back();
        }
        return search(at + 1, std::move(uf));
    }
};

} // namespace

std::optional<Caterpillar> find_spanning_caterpillar(const Graph& g, int max_n) {
    if (g.n > max_n)
        throw size_guard_error("find_spanning_caterpillar", g.n, max_n);
    if (g.n == 0 || components(g).size() != 1)
        throw input_error("find_spanning_caterpillar needs a connected graph");
    TreeEnum en(g);
    std::vector<int> uf(g.n);
    std::iota(uf.begin(), uf.end(), 0);
    return en.search(0, std::move(uf));
}

} // namespace ordercert
