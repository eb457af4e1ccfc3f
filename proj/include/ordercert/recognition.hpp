#pragma once

#include "ordercert/conditions.hpp"

#include <optional>
#include <vector>

namespace ordercert {

enum class ClassId {
    IntervalGraph,
    ProperIntervalGraph,
    ComparabilityGraph,
    CoComparabilityGraph,
    PermutationGraph,
    ChordalGraph,
    SplitGraph,
    AtFreeGraph,
};

constexpr int kNumClasses = 8;

std::string_view to_string(ClassId cls);
std::optional<ClassId> class_from_string(std::string_view name);

// Condition set characterising the class; empty only for AtFreeGraph,
// which is recognised by asteroidal-triple search instead.
std::vector<ConditionId> conditions_for(ClassId cls);

struct AsteroidalTriple {
    int a, b, c;
};

struct SplitPartition {
    std::vector<int> clique;      // K
    std::vector<int> independent; // I
};

// Default instance-size guard for the exhaustive ordering search.
// ORDERCERT_MAX_N, when set, overrides every guard in the library.
int search_guard();
std::optional<int> guard_override(); // value of ORDERCERT_MAX_N, if set

// Exhaustive backtracking with prefix pruning; candidates tried in
// increasing vertex index, so the result is the lexicographically first
// satisfying ordering. nullopt means no ordering on g satisfies all conds.
std::optional<VertexOrdering> find_ordering(const Graph& g, const std::vector<ConditionId>& conds,
                                            int max_n = search_guard());

// Maximum cardinality search; returns a validated perfect elimination
// ordering iff g is chordal.
std::optional<VertexOrdering> recognize_chordal_fast(const Graph& g);

// Degree-sequence split test (Hammer-Simeone); the returned partition is
// re-validated through the clique/independent predicates.
std::optional<SplitPartition> recognize_split_fast(const Graph& g);

bool is_asteroidal_triple(const Graph& g, int a, int b, int c);
std::optional<AsteroidalTriple> find_asteroidal_triple(const Graph& g); // lexicographically least

struct Recognition {
    ClassId cls;
    bool member = false;
    std::optional<VertexOrdering> ordering;  // positive witness (condition classes)
    std::optional<SplitPartition> partition; // split graphs
    std::optional<AsteroidalTriple> obstruction; // negative witness for at-free
    std::string method; // "exhaustive-search", "mcs", "degree-sequence", "at-search"
};

Recognition recognize(const Graph& g, ClassId cls, int max_n = search_guard());

} // namespace ordercert
