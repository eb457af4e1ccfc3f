#pragma once

#include "ordercert/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

namespace ordercert {

enum class Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    CompleteBinaryTree,
    SplitExtremal,
    RandomInterval,
    RandomSplit,
};

struct FamilySpec {
    Family family;
    int a = 0;
    int b = 0;
    std::uint64_t seed = 0;
};

// Textual specs: "path:4", "cycle:5", "complete:3", "complete-bipartite:3,3",
// "complete-binary-tree:7", "split-extremal:4", "random-interval:8,42",
// "random-split:8,42" (trailing number = seed, default 0).
std::optional<FamilySpec> parse_family_spec(std::string_view text);

Graph gen(const FamilySpec& spec);

// Streams all 2^(n choose 2) labelled graphs on n vertices (n <= 7).
void for_each_labelled_graph(int n, const std::function<void(const Graph&)>& fn);

// One representative per isomorphism class, brute-force canonical form
// grown vertex by vertex (n <= 7).
std::vector<Graph> canonical_graphs(int n);

} // namespace ordercert
