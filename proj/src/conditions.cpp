#include "ordercert/conditions.hpp"

namespace ordercert {

std::string_view to_string(ConditionId c) {
    switch (c) {
    case ConditionId::Interval: return "interval";
    case ConditionId::ProperInterval: return "proper-interval";
    case ConditionId::Comparability: return "comparability";
    case ConditionId::CoComparability: return "co-comparability";
    case ConditionId::Peo: return "peo";
    case ConditionId::SplitEq: return "split-eq";
    case ConditionId::SimpleSplit: return "simple-split";
    }
    return "?";
}

std::optional<ConditionId> condition_from_string(std::string_view name) {
    for (int c = 0; c < kNumConditions; ++c) {
        auto id = static_cast<ConditionId>(c);
        if (name == to_string(id))
            return id;
    }
    return std::nullopt;
}

bool triple_satisfied(const Graph& g, int a, int b, int c, ConditionId cond) {
    switch (cond) {
    case ConditionId::Interval:
        return !g.has_edge(a, c) || g.has_edge(a, b);
    case ConditionId::ProperInterval:
        return !g.has_edge(a, c) || (g.has_edge(a, b) && g.has_edge(b, c));
    case ConditionId::Comparability:
        return !(g.has_edge(a, b) && g.has_edge(b, c)) || g.has_edge(a, c);
    case ConditionId::CoComparability:
        return !g.has_edge(a, c) || g.has_edge(a, b) || g.has_edge(b, c);
    case ConditionId::Peo:
        return !(g.has_edge(a, b) && g.has_edge(a, c)) || g.has_edge(b, c);
    case ConditionId::SplitEq:
        return !g.has_edge(a, b) || g.has_edge(b, c) || g.has_edge(a, c);
    case ConditionId::SimpleSplit:
        return !g.has_edge(a, b) || g.has_edge(b, c);
    }
    return true;
}

Verdict check_ordering(const Graph& g, const VertexOrdering& ord, ConditionId cond) {
    if (ord.size() != g.n)
        throw input_error("ordering length " + std::to_string(ord.size()) +
                          " does not match vertex count " + std::to_string(g.n));
    const int n = g.n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (!triple_satisfied(g, ord.order[i], ord.order[j], ord.order[k], cond))
                    return Verdict{false, TripleWitness{i, j, k, cond}};
    return Verdict{true, std::nullopt};
}

namespace {

// Adjacency re-indexed to ordering positions: row i holds the positions of
// the neighbours of the vertex at position i.
std::vector<Bitset> position_adjacency(const Graph& g, const VertexOrdering& ord) {
    std::vector<Bitset> padj(g.n, Bitset(g.n));
    for (int i = 0; i < g.n; ++i) {
        const Bitset& nbrs = g.adj[ord.order[i]];
        for (int v = static_cast<int>(nbrs.find_first()); v >= 0;
             v = static_cast<int>(nbrs.find_next(v)))
            padj[i].set(ord.pos[v]);
    }
    return padj;
}

Bitset suffix_mask(int n, int from) { // bits from..n-1
    Bitset m(n);
    for (int i = from; i < n; ++i)
        m.set(i);
    return m;
}

int max_set(const Bitset& b) {
    int best = -1;
    for (int v = static_cast<int>(b.find_first()); v >= 0; v = static_cast<int>(b.find_next(v)))
        best = v;
    return best;
}

} // namespace

bool check_ordering_fast(const Graph& g, const VertexOrdering& ord, ConditionId cond) {
    if (ord.size() != g.n)
        throw input_error("ordering length does not match vertex count");
    const int n = g.n;
    auto padj = position_adjacency(g, ord);

    auto right_contiguous = [&](void) {
        // right neighbourhood of each position must be the block i+1..r(i)
        for (int i = 0; i < n; ++i) {
            Bitset right = padj[i] & suffix_mask(n, i + 1);
            int r = max_set(right);
            if (r >= 0 && static_cast<int>(right.count()) != r - i)
                return false;
        }
        return true;
    };
    auto left_contiguous = [&](void) {
        for (int k = 0; k < n; ++k) {
            Bitset left = padj[k];
            left &= ~suffix_mask(n, k);
            int l = static_cast<int>(left.find_first());
            if (l >= 0 && static_cast<int>(left.count()) != k - l)
                return false;
        }
        return true;
    };

    switch (cond) {
    case ConditionId::Interval:
        return right_contiguous();
    case ConditionId::ProperInterval:
        return right_contiguous() && left_contiguous();
    case ConditionId::Comparability:
        for (int j = 0; j < n; ++j) {
            Bitset right = padj[j] & suffix_mask(n, j + 1);
            if (right.none())
                continue;
            Bitset left = padj[j];
            left &= ~suffix_mask(n, j);
            for (int i = static_cast<int>(left.find_first()); i >= 0;
                 i = static_cast<int>(left.find_next(i)))
                if (!right.is_subset_of(padj[i]))
                    return false;
        }
        return true;
    case ConditionId::CoComparability:
        for (int i = 0; i < n; ++i) {
            Bitset right = padj[i] & suffix_mask(n, i + 1);
            for (int k = static_cast<int>(right.find_first()); k >= 0;
                 k = static_cast<int>(right.find_next(k))) {
                Bitset between = suffix_mask(n, i + 1);
                between &= ~suffix_mask(n, k);
                if (!between.is_subset_of(padj[i] | padj[k]))
                    return false;
            }
        }
        return true;
    case ConditionId::Peo:
        for (int i = 0; i < n; ++i) {
            Bitset right = padj[i] & suffix_mask(n, i + 1);
            for (int j = static_cast<int>(right.find_first()); j >= 0;
                 j = static_cast<int>(right.find_next(j))) {
                Bitset later = right & suffix_mask(n, j + 1);
                if (!later.is_subset_of(padj[j]))
                    return false;
            }
        }
        return true;
    case ConditionId::SplitEq:
        for (int i = 0; i < n; ++i) {
            Bitset right = padj[i] & suffix_mask(n, i + 1);
            for (int j = static_cast<int>(right.find_first()); j >= 0;
                 j = static_cast<int>(right.find_next(j)))
                if (!suffix_mask(n, j + 1).is_subset_of(padj[i] | padj[j]))
                    return false;
        }
        return true;
    case ConditionId::SimpleSplit:
        for (int j = 0; j < n; ++j) {
            Bitset left = padj[j];
            left &= ~suffix_mask(n, j);
            if (left.any() && !suffix_mask(n, j + 1).is_subset_of(padj[j]))
                return false;
        }
        return true;
    }
    return true;
}

bool prefix_admissible(const Graph& g, std::span<const int> prefix, ConditionId cond) {
    const int p = static_cast<int>(prefix.size());
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            for (int k = j + 1; k < p; ++k)
                if (!triple_satisfied(g, prefix[i], prefix[j], prefix[k], cond))
                    return false;
    return true;
}

bool extension_admissible(const Graph& g, std::span<const int> prefix, int v, ConditionId cond) {
    const int p = static_cast<int>(prefix.size());
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            if (!triple_satisfied(g, prefix[i], prefix[j], v, cond))
                return false;
    return true;
}

} // namespace ordercert
