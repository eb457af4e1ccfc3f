// Test-only reference oracles, kept independent of the library's fast
// paths: plain triple scans and full n! enumeration.
#pragma once

#include "ordercert/conditions.hpp"
#include "ordercert/generators.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

using ordercert::ConditionId;
using ordercert::Graph;
using ordercert::VertexOrdering;

inline bool triple_ok(const Graph& g, int a, int b, int c, ConditionId cond) {
    const bool ab = g.has_edge(a, b), ac = g.has_edge(a, c), bc = g.has_edge(b, c);
    switch (cond) {
    case ConditionId::Interval: return !ac || ab;
    case ConditionId::ProperInterval: return !ac || (ab && bc);
    case ConditionId::Comparability: return !(ab && bc) || ac;
    case ConditionId::CoComparability: return !ac || ab || bc;
    case ConditionId::Peo: return !(ab && ac) || bc;
    case ConditionId::SplitEq: return !ab || bc || ac;
    case ConditionId::SimpleSplit: return !ab || bc;
    }
    return true;
}

inline bool ordering_ok(const Graph& g, const std::vector<int>& ord,
                        const std::vector<ConditionId>& conds) {
    const int n = static_cast<int>(ord.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (ConditionId c : conds)
                    if (!triple_ok(g, ord[i], ord[j], ord[k], c))
                        return false;
    return true;
}

// Full n! scan; returns the lexicographically first satisfying ordering.
inline std::optional<std::vector<int>> exists_ordering(const Graph& g,
                                                       const std::vector<ConditionId>& conds) {
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (ordering_ok(g, perm, conds))
            return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

inline int width_of(const Graph& g, const std::vector<int>& ord) {
    std::vector<int> pos(ord.size());
    for (size_t i = 0; i < ord.size(); ++i)
        pos[ord[i]] = static_cast<int>(i);
    int w = 0;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v))
                w = std::max(w, std::abs(pos[u] - pos[v]));
    return w;
}

// Minimum width over all n! orderings.
inline int min_bandwidth(const Graph& g) {
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    int best = g.n;
    do {
        best = std::min(best, width_of(g, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return g.n == 0 ? 0 : best;
}

inline bool isomorphic(const Graph& g, const Graph& h) {
    if (g.n != h.n)
        return false;
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < g.n && ok; ++u)
            for (int v = u + 1; v < g.n && ok; ++v)
                if (g.has_edge(u, v) != h.has_edge(perm[u], perm[v]))
                    ok = false;
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline Graph path(int n) { return ordercert::gen({ordercert::Family::Path, n}); }
inline Graph cycle(int n) { return ordercert::gen({ordercert::Family::Cycle, n}); }
inline Graph complete(int n) { return ordercert::gen({ordercert::Family::Complete, n}); }

} // namespace oracle
