#include "ordercert/representations.hpp"

#include <algorithm>
#include <numeric>

namespace ordercert {

long Orientation::arc_count() const {
    long c = 0;
    for (const auto& row : out)
        c += static_cast<long>(row.count());
    return c;
}

bool is_transitive(const Orientation& o) {
    for (int u = 0; u < o.n; ++u)
        for (int v = static_cast<int>(o.out[u].find_first()); v >= 0;
             v = static_cast<int>(o.out[u].find_next(v)))
            if (!o.out[v].is_subset_of(o.out[u]))
                return false;
    return true;
}

Permutation::Permutation(std::vector<int> pi_) : pi(std::move(pi_)) {
    const int n = static_cast<int>(pi.size());
    inv.assign(n, -1);
    for (int p = 0; p < n; ++p) {
        int v = pi[p];
        if (v < 1 || v > n || inv[v - 1] != -1)
            throw input_error("not a permutation of 1.." + std::to_string(n));
        inv[v - 1] = p;
    }
}

// --- intervals ---

IntervalModel interval_model_from_ordering(const Graph& g, const VertexOrdering& ord) {
    Verdict v = check_ordering(g, ord, ConditionId::Interval);
    if (!v.holds)
        throw condition_error("ordering does not admit an interval model", *v.witness);
    IntervalModel model;
    model.intervals.resize(g.n);
    for (int i = 0; i < g.n; ++i) {
        int vert = ord.order[i];
        int r = i; // point interval for isolated vertices
        for (int u = static_cast<int>(g.adj[vert].find_first()); u >= 0;
             u = static_cast<int>(g.adj[vert].find_next(u)))
            r = std::max(r, ord.pos[u]);
        model.intervals[vert] = {Rational(i + 1), Rational(r + 1)};
    }
    return model;
}

IntervalModel canonicalise_intervals(const IntervalModel& model) {
    const int n = model.size();
    struct Endpoint {
        Rational value;
        int kind; // 0 = left, 1 = right
        int vertex;
    };
    std::vector<Endpoint> events;
    events.reserve(2 * n);
    for (int v = 0; v < n; ++v) {
        auto [l, r] = model.intervals[v];
        if (l > r)
            throw input_error("interval with left > right at vertex " + std::to_string(v));
        events.push_back({l, 0, v});
        events.push_back({r, 1, v});
    }
    // Left endpoints before coincident rights keeps closed touching pairs
    // intersecting after the spread.
    std::sort(events.begin(), events.end(), [](const Endpoint& a, const Endpoint& b) {
        if (a.value != b.value)
            return a.value < b.value;
        if (a.kind != b.kind)
            return a.kind < b.kind;
        return a.vertex < b.vertex;
    });
    IntervalModel out;
    out.intervals.resize(n);
    for (int t = 0; t < 2 * n; ++t) {
        const Endpoint& e = events[t];
        (e.kind == 0 ? out.intervals[e.vertex].first : out.intervals[e.vertex].second) =
            Rational(t + 1);
    }
    return out;
}

VertexOrdering ordering_from_intervals(const IntervalModel& model) {
    IntervalModel canon = canonicalise_intervals(model);
    std::vector<int> ord(canon.size());
    std::iota(ord.begin(), ord.end(), 0);
    std::sort(ord.begin(), ord.end(), [&](int a, int b) {
        return canon.intervals[a].first < canon.intervals[b].first;
    });
    return VertexOrdering(std::move(ord));
}

Graph intersection_graph_of_intervals(const IntervalModel& model) {
    const int n = model.size();
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            Rational lo = std::max(model.intervals[u].first, model.intervals[v].first);
            Rational hi = std::min(model.intervals[u].second, model.intervals[v].second);
            if (lo <= hi)
                g.add_edge(u, v);
        }
    return g;
}

// --- subtrees of a tree ---

Graph intersection_graph_of_subtrees(const Graph& tree,
                                     const std::vector<std::vector<int>>& subtrees) {
    if (tree.edge_count() != tree.n - 1 || components(tree).size() != 1)
        throw input_error("host graph is not a tree");
    std::vector<Bitset> sets;
    for (size_t s = 0; s < subtrees.size(); ++s) {
        Bitset bs(tree.n);
        for (int v : subtrees[s]) {
            if (v < 0 || v >= tree.n)
                throw input_error("subtree vertex out of range");
            bs.set(v);
        }
        if (bs.none())
            throw input_error("empty subtree at index " + std::to_string(s));
        // connectivity inside the host
        int start = static_cast<int>(bs.find_first());
        Bitset seen(tree.n);
        seen.set(start);
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            Bitset nbrs = tree.adj[u] & bs & ~seen;
            for (int w = static_cast<int>(nbrs.find_first()); w >= 0;
                 w = static_cast<int>(nbrs.find_next(w))) {
                seen.set(w);
                stack.push_back(w);
            }
        }
        if (seen != bs)
            throw input_error("disconnected subtree at index " + std::to_string(s));
        sets.push_back(std::move(bs));
    }
    Graph g(static_cast<int>(sets.size()));
    for (size_t u = 0; u < sets.size(); ++u)
        for (size_t v = u + 1; v < sets.size(); ++v)
            if ((sets[u] & sets[v]).any())
                g.add_edge(static_cast<int>(u), static_cast<int>(v));
    return g;
}

// --- orientations ---

Orientation orientation_from_ordering(const Graph& g, const VertexOrdering& ord, OrientMode mode) {
    ConditionId required =
        mode == OrientMode::Edges ? ConditionId::Comparability : ConditionId::CoComparability;
    Verdict v = check_ordering(g, ord, required);
    if (!v.holds)
        throw condition_error("ordering does not certify the requested orientation", *v.witness);
    Orientation o(g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            int a = ord.order[i], b = ord.order[j];
            bool take = mode == OrientMode::Edges ? g.has_edge(a, b) : !g.has_edge(a, b);
            if (take)
                o.add_arc(a, b);
        }
    if (!is_transitive(o))
        throw std::logic_error("orientation failed transitivity validation"); // unreachable
    return o;
}

// --- permutation graphs ---

Graph permutation_graph(const Permutation& pi) {
    const int n = pi.size();
    Graph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (pi.inv[i - 1] > pi.inv[j - 1]) // (i-j) < 0 here
                g.add_edge(i - 1, j - 1);
    return g;
}

FunctionDiagram linear_diagram_from_permutation(const Permutation& pi) {
    FunctionDiagram d;
    d.grid = {Rational(0), Rational(1)};
    for (int i = 1; i <= pi.size(); ++i)
        d.curves.push_back({Rational(i), Rational(pi.inv[i - 1] + 1)});
    return d;
}

namespace {

void validate_diagram(const FunctionDiagram& d) {
    if (d.grid.size() < 2 || d.grid.front() != Rational(0) || d.grid.back() != Rational(1))
        throw input_error("diagram grid must run from 0 to 1");
    for (size_t t = 1; t < d.grid.size(); ++t)
        if (!(d.grid[t - 1] < d.grid[t]))
            throw input_error("diagram grid not strictly increasing");
    for (const auto& c : d.curves)
        if (c.size() != d.grid.size())
            throw input_error("curve not defined on the full grid");
}

} // namespace

Graph intersection_graph_of_diagram(const FunctionDiagram& d) {
    validate_diagram(d);
    const int n = d.size();
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool meet = false;
            for (size_t t = 0; t + 1 < d.grid.size() && !meet; ++t) {
                Rational d0 = d.curves[u][t] - d.curves[v][t];
                Rational d1 = d.curves[u][t + 1] - d.curves[v][t + 1];
                // touching counts: zero at a breakpoint or a sign change
                meet = d0 == Rational(0) || d1 == Rational(0) ||
                       ((d0 < Rational(0)) != (d1 < Rational(0)));
            }
            if (meet)
                g.add_edge(u, v);
        }
    return g;
}

VertexOrdering ordering_from_diagram(const FunctionDiagram& d) {
    validate_diagram(d);
    std::vector<int> ord(d.size());
    std::iota(ord.begin(), ord.end(), 0);
    std::sort(ord.begin(), ord.end(), [&](int a, int b) {
        return d.curves[a] < d.curves[b] || (d.curves[a] == d.curves[b] && a < b);
    });
    return VertexOrdering(std::move(ord));
}

Permutation permutation_from_ordering(const Graph& g, const VertexOrdering& ord) {
    for (ConditionId c : {ConditionId::Comparability, ConditionId::CoComparability}) {
        Verdict v = check_ordering(g, ord, c);
        if (!v.holds)
            throw condition_error("ordering does not certify a permutation graph", *v.witness);
    }
    // Second linear order: agree with position order on non-edges, disagree
    // on edges. Total because both orientations are transitive.
    auto before = [&](int u, int w) {
        return g.has_edge(u, w) ? ord.pos[u] > ord.pos[w] : ord.pos[u] < ord.pos[w];
    };
    std::vector<int> second(ord.order);
    std::sort(second.begin(), second.end(), before);
    for (size_t a = 0; a < second.size(); ++a)
        for (size_t b = a + 1; b < second.size(); ++b)
            if (!before(second[a], second[b]))
                throw std::logic_error("second linear order is not total"); // unreachable
    std::vector<int> pi(second.size());
    for (size_t q = 0; q < second.size(); ++q)
        pi[q] = ord.pos[second[q]] + 1;
    return Permutation(std::move(pi));
}

// --- split graphs ---

VertexOrdering split_ordering(const Graph& g, const SplitPartition& part) {
    std::vector<bool> seen(g.n, false);
    for (int v : part.clique) {
        if (v < 0 || v >= g.n || seen[v])
            throw input_error("invalid split partition: bad clique vertex " + std::to_string(v));
        seen[v] = true;
    }
    for (int v : part.independent) {
        if (v < 0 || v >= g.n || seen[v])
            throw input_error("invalid split partition: bad independent vertex " +
                              std::to_string(v));
        seen[v] = true;
    }
    for (int v = 0; v < g.n; ++v)
        if (!seen[v])
            throw input_error("split partition misses vertex " + std::to_string(v));
    for (size_t a = 0; a < part.clique.size(); ++a)
        for (size_t b = a + 1; b < part.clique.size(); ++b)
            if (!g.has_edge(part.clique[a], part.clique[b]))
                throw input_error("split partition: non-adjacent clique pair (" +
                                  std::to_string(part.clique[a]) + "," +
                                  std::to_string(part.clique[b]) + ")");
    for (size_t a = 0; a < part.independent.size(); ++a)
        for (size_t b = a + 1; b < part.independent.size(); ++b)
            if (g.has_edge(part.independent[a], part.independent[b]))
                throw input_error("split partition: adjacent independent pair (" +
                                  std::to_string(part.independent[a]) + "," +
                                  std::to_string(part.independent[b]) + ")");
    std::vector<int> ord(part.independent);
    std::sort(ord.begin(), ord.end());
    std::vector<int> k(part.clique);
    std::sort(k.begin(), k.end());
    ord.insert(ord.end(), k.begin(), k.end());
    return VertexOrdering(std::move(ord));
}

} // namespace ordercert
