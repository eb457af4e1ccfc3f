#include "ordercert/recognition.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace ordercert {

std::string_view to_string(ClassId cls) {
    switch (cls) {
    case ClassId::IntervalGraph: return "interval";
    case ClassId::ProperIntervalGraph: return "proper-interval";
    case ClassId::ComparabilityGraph: return "comparability";
    case ClassId::CoComparabilityGraph: return "co-comparability";
    case ClassId::PermutationGraph: return "permutation";
    case ClassId::ChordalGraph: return "chordal";
    case ClassId::SplitGraph: return "split";
    case ClassId::AtFreeGraph: return "at-free";
    }
    return "?";
}

std::optional<ClassId> class_from_string(std::string_view name) {
    for (int c = 0; c < kNumClasses; ++c) {
        auto id = static_cast<ClassId>(c);
        if (name == to_string(id))
            return id;
    }
    return std::nullopt;
}

std::vector<ConditionId> conditions_for(ClassId cls) {
    switch (cls) {
    case ClassId::IntervalGraph: return {ConditionId::Interval};
    case ClassId::ProperIntervalGraph: return {ConditionId::ProperInterval};
    case ClassId::ComparabilityGraph: return {ConditionId::Comparability};
    case ClassId::CoComparabilityGraph: return {ConditionId::CoComparability};
    case ClassId::PermutationGraph:
        return {ConditionId::Comparability, ConditionId::CoComparability};
    case ClassId::ChordalGraph: return {ConditionId::Peo};
    case ClassId::SplitGraph: return {ConditionId::SimpleSplit};
    case ClassId::AtFreeGraph: return {};
    }
    return {};
}

std::optional<int> guard_override() {
    if (const char* env = std::getenv("ORDERCERT_MAX_N")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            return static_cast<int>(v);
    }
    return std::nullopt;
}

int search_guard() { return guard_override().value_or(16); }

namespace {

bool extend(const Graph& g, const std::vector<ConditionId>& conds, std::vector<int>& prefix,
            std::vector<bool>& used) {
    if (static_cast<int>(prefix.size()) == g.n)
        return true;
    for (int v = 0; v < g.n; ++v) {
        if (used[v])
            continue;
        bool ok = true;
        for (ConditionId c : conds)
            if (!extension_admissible(g, prefix, v, c)) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        used[v] = true;
        prefix.push_back(v);
        if (extend(g, conds, prefix, used))
            return true;
        prefix.pop_back();
        used[v] = false;
    }
    return false;
}

} // namespace

std::optional<VertexOrdering> find_ordering(const Graph& g, const std::vector<ConditionId>& conds,
                                            int max_n) {
    if (g.n > max_n)
        throw size_guard_error("find_ordering", g.n, max_n);
    std::vector<int> prefix;
    prefix.reserve(g.n);
    std::vector<bool> used(g.n, false);
    if (!extend(g, conds, prefix, used))
        return std::nullopt;
    return VertexOrdering(std::move(prefix));
}

std::optional<VertexOrdering> recognize_chordal_fast(const Graph& g) {
    const int n = g.n;
    std::vector<int> weight(n, 0), visit;
    std::vector<bool> chosen(n, false);
    visit.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!chosen[v] && (best < 0 || weight[v] > weight[best]))
                best = v;
        chosen[best] = true;
        visit.push_back(best);
        for (int u = static_cast<int>(g.adj[best].find_first()); u >= 0;
             u = static_cast<int>(g.adj[best].find_next(u)))
            ++weight[u];
    }
    VertexOrdering peo(std::vector<int>(visit.rbegin(), visit.rend()));
    if (!check_ordering_fast(g, peo, ConditionId::Peo))
        return std::nullopt;
    return peo;
}

std::optional<SplitPartition> recognize_split_fast(const Graph& g) {
    const int n = g.n;
    std::vector<int> verts(n);
    std::iota(verts.begin(), verts.end(), 0);
    std::stable_sort(verts.begin(), verts.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    // Hammer-Simeone: with d_1 >= ... >= d_n and m = max{i : d_i >= i-1},
    // G is split iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i.
    long m = 0;
    for (int i = 1; i <= n; ++i)
        if (g.degree(verts[i - 1]) >= i - 1)
            m = i;
    long head = 0, tail = 0;
    for (long i = 0; i < n; ++i)
        (i < m ? head : tail) += g.degree(verts[i]);
    if (head != m * (m - 1) + tail)
        return std::nullopt;
    SplitPartition part;
    part.clique.assign(verts.begin(), verts.begin() + m);
    part.independent.assign(verts.begin() + m, verts.end());
    // an edgeless graph yields m = 1; the lone "clique" vertex is isolated
    // and belongs with the independent side
    if (part.clique.size() == 1 && g.degree(part.clique.front()) == 0) {
        part.independent.push_back(part.clique.front());
        part.clique.clear();
    }
    std::sort(part.clique.begin(), part.clique.end());
    std::sort(part.independent.begin(), part.independent.end());
    if (!is_clique(g, part.clique) || !is_independent(g, part.independent))
        throw std::logic_error("split partition failed validation"); // unreachable
    return part;
}

namespace {

// Component labels of G - N[v]; removed vertices get -1.
std::vector<int> components_minus_closed_nbhd(const Graph& g, int v) {
    std::vector<int> label(g.n, -1);
    Bitset removed = g.adj[v];
    removed.set(v);
    int next = 0;
    for (int s = 0; s < g.n; ++s) {
        if (removed.test(s) || label[s] >= 0)
            continue;
        std::vector<int> stack{s};
        label[s] = next;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w = static_cast<int>(g.adj[u].find_first()); w >= 0;
                 w = static_cast<int>(g.adj[u].find_next(w))) {
                if (!removed.test(w) && label[w] < 0) {
                    label[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return label;
}

} // namespace

bool is_asteroidal_triple(const Graph& g, int a, int b, int c) {
    if (a == b || a == c || b == c)
        return false;
    if (g.has_edge(a, b) || g.has_edge(a, c) || g.has_edge(b, c))
        return false;
    auto la = components_minus_closed_nbhd(g, a);
    auto lb = components_minus_closed_nbhd(g, b);
    auto lc = components_minus_closed_nbhd(g, c);
    return la[b] >= 0 && la[b] == la[c] && lb[a] >= 0 && lb[a] == lb[c] && lc[a] >= 0 &&
           lc[a] == lc[b];
}

std::optional<AsteroidalTriple> find_asteroidal_triple(const Graph& g) {
    const int n = g.n;
    std::vector<std::vector<int>> label(n);
    for (int v = 0; v < n; ++v)
        label[v] = components_minus_closed_nbhd(g, v);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (g.has_edge(a, b))
                continue;
            for (int c = b + 1; c < n; ++c) {
                if (g.has_edge(a, c) || g.has_edge(b, c))
                    continue;
                if (label[a][b] == label[a][c] && label[b][a] == label[b][c] &&
                    label[c][a] == label[c][b] && label[a][b] >= 0 && label[b][a] >= 0 &&
                    label[c][a] >= 0)
                    return AsteroidalTriple{a, b, c};
            }
        }
    return std::nullopt;
}

Recognition recognize(const Graph& g, ClassId cls, int max_n) {
    Recognition res;
    res.cls = cls;

    if (cls == ClassId::AtFreeGraph) {
        res.method = "at-search";
        if (auto at = find_asteroidal_triple(g)) {
            res.member = false;
            res.obstruction = at;
        } else {
            res.member = true;
        }
        return res;
    }

    if (cls == ClassId::ChordalGraph) {
        res.method = "mcs";
        if (auto peo = recognize_chordal_fast(g)) {
            res.member = true;
            res.ordering = std::move(peo);
        }
        return res;
    }

    if (cls == ClassId::SplitGraph) {
        res.method = "degree-sequence";
        if (auto part = recognize_split_fast(g)) {
            // I first, then K, both in index order: satisfies SimpleSplit.
            std::vector<int> ord(part->independent);
            ord.insert(ord.end(), part->clique.begin(), part->clique.end());
            VertexOrdering vo(std::move(ord));
            if (!check_ordering_fast(g, vo, ConditionId::SimpleSplit))
                throw std::logic_error("split ordering failed validation"); // unreachable
            res.member = true;
            res.ordering = std::move(vo);
            res.partition = std::move(part);
        }
        return res;
    }

    res.method = "exhaustive-search";
    if (auto ord = find_ordering(g, conditions_for(cls), max_n)) {
        res.member = true;
        res.ordering = std::move(ord);
    }
    return res;
}

} // namespace ordercert
