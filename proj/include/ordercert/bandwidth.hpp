#pragma once

#include "ordercert/recognition.hpp"

#include <optional>

namespace ordercert {

struct LowerBounds {
    int degree = 0;   // ceil(max degree / 2)
    int diameter = 0; // max over components of ceil((n'-1)/d')
    int clique = 0;   // max clique size - 1
    int best() const;
};

struct BandwidthResult {
    int value = 0;
    VertexOrdering ordering;
    LowerBounds bounds;
};

int ordering_width(const Graph& g, const VertexOrdering& ord);
LowerBounds lower_bounds(const Graph& g);

int bandwidth_guard(); // default 14, per connected component; ORDERCERT_MAX_N overrides

// Provably minimum width with a deterministic witness: iterative deepening
// over the width, feasibility search trying vertices in increasing index.
// Disconnected graphs are solved per component and concatenated.
BandwidthResult exact_bandwidth(const Graph& g, int max_component = bandwidth_guard());

struct BoundedOrdering {
    VertexOrdering ordering;
    int width = 0;
    int guarantee = 0; // the class-specific upper bound the width is measured against
};

// Interval ordering: width <= max degree.
BoundedOrdering interval_bandwidth_ordering(const Graph& g);
// Co-comparability ordering: width <= 2*max degree - 1 (needs >= 1 edge).
BoundedOrdering cocomp_bandwidth_ordering(const Graph& g);
// Split ordering, isolated vertices first: width <= max degree * (max degree + 2).
BoundedOrdering split_bandwidth_ordering(const Graph& g);

// Tree whose non-spine vertices are all leaves hanging off the spine path.
struct Caterpillar {
    Graph tree;
    std::vector<int> spine;
    std::vector<std::vector<int>> leaves; // parallel to spine
};

void validate_caterpillar(const Caterpillar& c); // throws input_error
std::optional<Caterpillar> caterpillar_from_tree(const Graph& tree);

// Spine order with each spine vertex's leaves immediately after it; width
// on the caterpillar's own tree is at most its max degree.
VertexOrdering caterpillar_ordering(const Caterpillar& c);

// Requires t to span g with every edge of g at tree-distance <= 4 in t and
// distance exactly 4 only between two leaves; throws input_error naming the
// violating edge otherwise. Width measured on g; guarantee 3*max degree.
BoundedOrdering atfree_bandwidth_ordering(const Graph& g, const Caterpillar& t);

int caterpillar_guard(); // default 10; ORDERCERT_MAX_N overrides

// Exhaustive search over spanning trees, first caterpillar with the
// distance property wins; honest nullopt after full enumeration.
std::optional<Caterpillar> find_spanning_caterpillar(const Graph& g,
                                                     int max_n = caterpillar_guard());

} // namespace ordercert
