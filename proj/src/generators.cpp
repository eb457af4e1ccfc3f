#include "ordercert/generators.hpp"

#include "ordercert/representations.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <random>
#include <set>

namespace ordercert {

namespace {

std::optional<std::vector<long>> parse_ints(std::string_view s) {
    std::vector<long> out;
    while (!s.empty()) {
        long v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc())
            return std::nullopt;
        out.push_back(v);
        s.remove_prefix(p - s.data());
        if (!s.empty()) {
            if (s.front() != ',')
                return std::nullopt;
            s.remove_prefix(1);
        }
    }
    return out;
}

} // namespace

std::optional<FamilySpec> parse_family_spec(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        return std::nullopt;
    std::string_view name = text.substr(0, colon);
    auto ints = parse_ints(text.substr(colon + 1));
    if (!ints || ints->empty())
        return std::nullopt;
    const auto& p = *ints;
    FamilySpec spec{};
    auto one = [&](Family f) -> std::optional<FamilySpec> {
        if (p.size() != 1)
            return std::nullopt;
        spec.family = f;
        spec.a = static_cast<int>(p[0]);
        return spec;
    };
    auto seeded = [&](Family f) -> std::optional<FamilySpec> {
        if (p.size() > 2)
            return std::nullopt;
        spec.family = f;
        spec.a = static_cast<int>(p[0]);
        spec.seed = p.size() == 2 ? static_cast<std::uint64_t>(p[1]) : 0;
        return spec;
    };
    if (name == "path")
        return one(Family::Path);
    if (name == "cycle")
        return one(Family::Cycle);
    if (name == "complete")
        return one(Family::Complete);
    if (name == "complete-bipartite") {
        if (p.size() != 2)
            return std::nullopt;
        spec.family = Family::CompleteBipartite;
        spec.a = static_cast<int>(p[0]);
        spec.b = static_cast<int>(p[1]);
        return spec;
    }
    if (name == "complete-binary-tree")
        return one(Family::CompleteBinaryTree);
    if (name == "split-extremal")
        return one(Family::SplitExtremal);
    if (name == "random-interval")
        return seeded(Family::RandomInterval);
    if (name == "random-split")
        return seeded(Family::RandomSplit);
    return std::nullopt;
}

namespace {

Graph split_extremal(int delta) {
    if (delta < 2)
        throw input_error("split-extremal needs max degree >= 2");
    // clique of floor(delta/2) vertices; each clique vertex owns a block of
    // delta - |K| + 1 pendant independent vertices
    const int k = delta / 2;
    const int per = delta - k + 1;
    Graph g(k + k * per);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            g.add_edge(a, b);
    for (int a = 0; a < k; ++a)
        for (int t = 0; t < per; ++t)
            g.add_edge(a, k + a * per + t);
    if (max_degree(g) != delta)
        throw std::logic_error("split-extremal degree mismatch");
    return g;
}

Graph random_interval_graph(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(0, std::max(1, 4 * n));
    IntervalModel model;
    for (int v = 0; v < n; ++v) {
        int a = coord(rng), b = coord(rng);
        model.intervals.push_back({Rational(std::min(a, b)), Rational(std::max(a, b))});
    }
    return intersection_graph_of_intervals(model);
}

Graph random_split_graph(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    int k = std::uniform_int_distribution<int>(0, n)(rng);
    Graph g(n);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            g.add_edge(a, b);
    for (int a = 0; a < k; ++a)
        for (int i = k; i < n; ++i)
            if (rng() & 1)
                g.add_edge(a, i);
    return g;
}

} // namespace

Graph gen(const FamilySpec& spec) {
    switch (spec.family) {
    case Family::Path: {
        if (spec.a < 0)
            throw input_error("path needs n >= 0");
        Graph g(spec.a);
        for (int v = 0; v + 1 < spec.a; ++v)
            g.add_edge(v, v + 1);
        return g;
    }
    case Family::Cycle: {
        if (spec.a < 3)
            throw input_error("cycle needs n >= 3");
        Graph g(spec.a);
        for (int v = 0; v < spec.a; ++v)
            g.add_edge(v, (v + 1) % spec.a);
        return g;
    }
    case Family::Complete: {
        if (spec.a < 0)
            throw input_error("complete needs n >= 0");
        Graph g(spec.a);
        for (int a = 0; a < spec.a; ++a)
            for (int b = a + 1; b < spec.a; ++b)
                g.add_edge(a, b);
        return g;
    }
    case Family::CompleteBipartite: {
        if (spec.a < 0 || spec.b < 0)
            throw input_error("complete-bipartite needs sizes >= 0");
        Graph g(spec.a + spec.b);
        for (int a = 0; a < spec.a; ++a)
            for (int b = 0; b < spec.b; ++b)
                g.add_edge(a, spec.a + b);
        return g;
    }
    case Family::CompleteBinaryTree: {
        if (spec.a < 0)
            throw input_error("complete-binary-tree needs n >= 0");
        Graph g(spec.a);
        for (int v = 0; v < spec.a; ++v)
            for (int c : {2 * v + 1, 2 * v + 2})
                if (c < spec.a)
                    g.add_edge(v, c);
        return g;
    }
    case Family::SplitExtremal:
        return split_extremal(spec.a);
    case Family::RandomInterval:
        return random_interval_graph(spec.a, spec.seed);
    case Family::RandomSplit:
        return random_split_graph(spec.a, spec.seed);
    }
    throw input_error("unknown family");
}

namespace {

constexpr int kEnumGuard = 7;

int pair_index(int i, int j) { return j * (j - 1) / 2 + i; } // i < j

Graph graph_from_mask(int n, std::uint32_t mask) {
    Graph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((mask >> pair_index(i, j)) & 1)
                g.add_edge(i, j);
    return g;
}

} // namespace

void for_each_labelled_graph(int n, const std::function<void(const Graph&)>& fn) {
    if (n > kEnumGuard)
        throw size_guard_error("for_each_labelled_graph", n, kEnumGuard);
    if (n < 0)
        throw input_error("negative vertex count");
    const std::uint32_t total = 1u << (n * (n - 1) / 2);
    for (std::uint32_t mask = 0; mask < total; ++mask)
        fn(graph_from_mask(n, mask));
}

std::vector<Graph> canonical_graphs(int n) {
    if (n > kEnumGuard)
        throw size_guard_error("canonical_graphs", n, kEnumGuard);
    if (n <= 0)
        return {};
    // grow one vertex at a time, keeping the minimum-over-relabellings mask
    std::set<std::uint32_t> canon{0u}; // the 1-vertex graph
    for (int k = 2; k <= n; ++k) {
        // pair-index relabelling table per permutation of k vertices
        std::vector<std::vector<int>> remap;
        std::vector<int> perm(k);
        for (int i = 0; i < k; ++i)
            perm[i] = i;
        do {
            std::vector<int> table(k * (k - 1) / 2);
            for (int j = 1; j < k; ++j)
                for (int i = 0; i < j; ++i) {
                    int pi = perm[i], pj = perm[j];
                    table[pair_index(i, j)] =
                        pair_index(std::min(pi, pj), std::max(pi, pj));
                }
            remap.push_back(std::move(table));
        } while (std::next_permutation(perm.begin(), perm.end()));

        std::set<std::uint32_t> next;
        for (std::uint32_t base : canon) {
            for (std::uint32_t nbhd = 0; nbhd < (1u << (k - 1)); ++nbhd) {
                std::uint32_t mask = base;
                for (int i = 0; i < k - 1; ++i)
                    if ((nbhd >> i) & 1)
                        mask |= 1u << pair_index(i, k - 1);
                std::uint32_t best = ~0u;
                for (const auto& table : remap) {
                    std::uint32_t m = 0;
                    for (std::uint32_t rest = mask; rest;) {
                        int bit = std::countr_zero(rest);
                        rest &= rest - 1;
                        m |= 1u << table[bit];
                    }
                    best = std::min(best, m);
                    if (best == 0)
                        break;
                }
                next.insert(best);
            }
        }
        canon = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(canon.size());
    for (std::uint32_t mask : canon)
        out.push_back(graph_from_mask(n, mask));
    return out;
}

} // namespace ordercert
