#pragma once

#include "ordercert/graph.hpp"

#include <optional>
#include <string_view>

namespace ordercert {

// The seven ordering conditions, each a universally quantified implication
// over position triples i < j < k of an ordering (v_0,...,v_{n-1}):
//
//   Interval:        v_i v_k in E  =>  v_i v_j in E
//   ProperInterval:  v_i v_k in E  =>  v_i v_j in E  and  v_j v_k in E
//   Comparability:   v_i v_j in E  and  v_j v_k in E  =>  v_i v_k in E
//   CoComparability: v_i v_k in E  =>  v_i v_j in E  or   v_j v_k in E
//   Peo:             v_i v_j in E  and  v_i v_k in E  =>  v_j v_k in E
//   SplitEq:         v_i v_j in E  =>  v_j v_k in E  or   v_i v_k in E
//   SimpleSplit:     v_i v_j in E  =>  v_j v_k in E
enum class ConditionId {
    Interval,
    ProperInterval,
    Comparability,
    CoComparability,
    Peo,
    SplitEq,
    SimpleSplit,
};

constexpr int kNumConditions = 7;

std::string_view to_string(ConditionId c);
std::optional<ConditionId> condition_from_string(std::string_view name);

struct TripleWitness {
    int i, j, k; // positions, i < j < k
    ConditionId cond;
};

struct Verdict {
    bool holds = true;
    std::optional<TripleWitness> witness; // present iff !holds; lexicographically least
};

// Precondition of an operation failed; carries the violating triple.
class condition_error : public input_error {
public:
    condition_error(const std::string& what, TripleWitness w)
        : input_error(what + " [condition " + std::string(to_string(w.cond)) +
                      " violated at positions (" + std::to_string(w.i) + "," +
                      std::to_string(w.j) + "," + std::to_string(w.k) + ")]"),
          witness(w) {}
    TripleWitness witness;
};

// Evaluate the implication on the vertices a,b,c sitting at positions i<j<k.
bool triple_satisfied(const Graph& g, int a, int b, int c, ConditionId cond);

// Reference checker: scans triples in lexicographic position order and
// reports the first violation.
Verdict check_ordering(const Graph& g, const VertexOrdering& ord, ConditionId cond);

// Bitset formulation of the same predicate (no witness). Agrees with
// check_ordering; the triple scan stays the reference oracle in tests.
bool check_ordering_fast(const Graph& g, const VertexOrdering& ord, ConditionId cond);

// True iff no violating triple lies wholly inside the prefix. Monotone:
// once false, no extension to a full satisfying ordering exists.
bool prefix_admissible(const Graph& g, std::span<const int> prefix, ConditionId cond);

// Incremental form for backtracking: assuming `prefix` itself was
// admissible, checks only the triples whose last element is v (appended
// at position prefix.size()).
bool extension_admissible(const Graph& g, std::span<const int> prefix, int v, ConditionId cond);

} // namespace ordercert
