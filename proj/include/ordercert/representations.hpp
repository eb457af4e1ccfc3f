#pragma once

#include "ordercert/recognition.hpp"

#include <boost/rational.hpp>

#include <vector>

namespace ordercert {

using Rational = boost::rational<long long>;

// Closed interval per vertex, rational endpoints.
struct IntervalModel {
    std::vector<std::pair<Rational, Rational>> intervals;
    int size() const { return static_cast<int>(intervals.size()); }
};

// Antisymmetric arc set over 0..n-1.
struct Orientation {
    int n = 0;
    std::vector<Bitset> out;

    Orientation() = default;
    explicit Orientation(int n_) : n(n_), out(n_, Bitset(n_)) {}
    bool has_arc(int u, int v) const { return out[u].test(v); }
    void add_arc(int u, int v) { out[u].set(v); }
    long arc_count() const;
};

bool is_transitive(const Orientation& o);

// Piecewise-linear curves over a shared breakpoint grid 0 = x_0 < ... < x_m = 1.
struct FunctionDiagram {
    std::vector<Rational> grid;                 // breakpoints, first 0, last 1
    std::vector<std::vector<Rational>> curves;  // one value per breakpoint per curve
    int size() const { return static_cast<int>(curves.size()); }
};

// Permutation of 1..n with inverse position map (1-based values, as the
// inversion-graph convention needs).
struct Permutation {
    std::vector<int> pi;  // pi[p] = value at position p (0-based positions)
    std::vector<int> inv; // inv[value-1] = 0-based position of value

    Permutation() = default;
    explicit Permutation(std::vector<int> pi_); // throws input_error if not a bijection of 1..n
    int size() const { return static_cast<int>(pi.size()); }
};

// --- interval graphs (vertex at position i gets [i+1, r], 1-based) ---

// Requires the ordering to satisfy the Interval condition; throws
// condition_error carrying the violating triple otherwise.
IntervalModel interval_model_from_ordering(const Graph& g, const VertexOrdering& ord);

// Spread endpoints onto distinct integers preserving all closed-interval
// overlap relations (left endpoints win ties against coincident rights).
IntervalModel canonicalise_intervals(const IntervalModel& model);

// Sort by left endpoint after canonicalisation; satisfies the Interval
// condition on the model's intersection graph.
VertexOrdering ordering_from_intervals(const IntervalModel& model);

Graph intersection_graph_of_intervals(const IntervalModel& model);

// --- chordal graphs ---

// Subtrees given as vertex sets of the host tree; each must induce a
// connected subgraph (else input_error). Host must be a tree.
Graph intersection_graph_of_subtrees(const Graph& tree,
                                     const std::vector<std::vector<int>>& subtrees);

// --- comparability / co-comparability ---

enum class OrientMode { Edges, NonEdges };

// Edges mode: orient every edge from earlier to later position (requires
// Comparability). NonEdges mode: orient every non-edge likewise (requires
// CoComparability); the result is a transitive orientation of the
// complement. Transitivity is re-validated before returning.
Orientation orientation_from_ordering(const Graph& g, const VertexOrdering& ord, OrientMode mode);

// --- permutation graphs ---

// Inversion graph: v_i ~ v_j iff (i-j)(pi^-1(i)-pi^-1(j)) < 0 (1-based labels).
Graph permutation_graph(const Permutation& pi);

// Curve i: segment from (0, i) to (1, position of i in pi), 1-based values.
FunctionDiagram linear_diagram_from_permutation(const Permutation& pi);

Graph intersection_graph_of_diagram(const FunctionDiagram& d);

// Order curves by value at x=0; ties by first differing breakpoint value,
// then index. Satisfies CoComparability on the diagram's intersection graph.
VertexOrdering ordering_from_diagram(const FunctionDiagram& d);

// Recover a permutation whose inversion graph is g, given an ordering
// satisfying both the Comparability and CoComparability conditions.
Permutation permutation_from_ordering(const Graph& g, const VertexOrdering& ord);

// --- split graphs ---

// I first then K, each in index order; satisfies SimpleSplit. Throws
// input_error naming an offending pair if (K, I) is not a split partition.
VertexOrdering split_ordering(const Graph& g, const SplitPartition& part);

} // namespace ordercert
