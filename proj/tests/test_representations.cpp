#include "oracle.hpp"
#include "ordercert/generators.hpp"
#include "ordercert/representations.hpp"

#include <doctest.h>

using namespace ordercert;

TEST_CASE("interval model from ordering") {
    Graph p3 = oracle::path(3);
    IntervalModel m = interval_model_from_ordering(p3, VertexOrdering::identity(3));
    CHECK(m.intervals[0] == std::pair{Rational(1), Rational(2)});
    CHECK(m.intervals[1] == std::pair{Rational(2), Rational(3)});
    CHECK(m.intervals[2] == std::pair{Rational(3), Rational(3)});
    CHECK(intersection_graph_of_intervals(m) == p3);

    Graph k3 = oracle::complete(3);
    IntervalModel mk = interval_model_from_ordering(k3, VertexOrdering::identity(3));
    CHECK(mk.intervals[0] == std::pair{Rational(1), Rational(3)});
    CHECK(mk.intervals[2] == std::pair{Rational(3), Rational(3)});

    Graph edgeless(3);
    IntervalModel me = interval_model_from_ordering(edgeless, VertexOrdering::identity(3));
    CHECK(intersection_graph_of_intervals(me).edge_count() == 0);

    CHECK_THROWS_AS(
        interval_model_from_ordering(oracle::cycle(4), VertexOrdering::identity(4)),
        condition_error);
}

TEST_CASE("ordering from intervals") {
    IntervalModel m;
    m.intervals = {{Rational(0), Rational(2)},
                   {Rational(1), Rational(3)},
                   {Rational(5, 2), Rational(4)}};
    VertexOrdering ord = ordering_from_intervals(m);
    CHECK(ord.order == std::vector<int>{0, 1, 2});
    Graph g = intersection_graph_of_intervals(m);
    CHECK(oracle::isomorphic(g, oracle::path(3)));
    CHECK(check_ordering(g, ord, ConditionId::Interval).holds);

    IntervalModel nested;
    nested.intervals = {{Rational(0), Rational(10)}, {Rational(1), Rational(2)}};
    CHECK(ordering_from_intervals(nested).order == std::vector<int>{0, 1});

    IntervalModel ties;
    ties.intervals = {{Rational(0), Rational(1)}, {Rational(0), Rational(2)}};
    for (const auto& model :
         {ties, IntervalModel{{ties.intervals[1], ties.intervals[0]}}}) {
        VertexOrdering t = ordering_from_intervals(model);
        CHECK(check_ordering(intersection_graph_of_intervals(model), t,
                             ConditionId::Interval)
                  .holds);
    }
}

TEST_CASE("canonicalisation preserves touching intersections") {
    IntervalModel touch;
    touch.intervals = {{Rational(0), Rational(1)},
                       {Rational(1), Rational(2)},
                       {Rational(3), Rational(3)}};
    IntervalModel canon = canonicalise_intervals(touch);
    CHECK(intersection_graph_of_intervals(canon) == intersection_graph_of_intervals(touch));
    // all endpoints distinct after the spread
    std::vector<Rational> pts;
    for (auto [l, r] : canon.intervals) {
        pts.push_back(l);
        pts.push_back(r);
    }
    std::sort(pts.begin(), pts.end());
    CHECK(std::adjacent_find(pts.begin(), pts.end()) == pts.end());
}

TEST_CASE("interval round-trips on every interval graph up to 6 vertices") {
    for (const Graph& g : canonical_graphs(6)) {
        auto ord = find_ordering(g, {ConditionId::Interval});
        if (!ord)
            continue;
        IntervalModel m = interval_model_from_ordering(g, *ord);
        CHECK(intersection_graph_of_intervals(m) == g);
        VertexOrdering back = ordering_from_intervals(m);
        CHECK(check_ordering(g, back, ConditionId::Interval).holds);
    }
}

TEST_CASE("subtree intersection graphs") {
    Graph path3 = oracle::path(3); // host a-b-c
    Graph got = intersection_graph_of_subtrees(path3, {{0}, {0, 1}, {1, 2}});
    CHECK(got == oracle::path(3));

    CHECK_THROWS_AS(intersection_graph_of_subtrees(path3, {{0, 2}}), input_error);
    CHECK_THROWS_AS(intersection_graph_of_subtrees(oracle::cycle(3), {{0}}), input_error);

    // generated subtree families are always chordal
    Graph host = from_edge_list(7, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}, {5, 6}});
    std::vector<std::vector<int>> subtrees = {{0, 1, 2}, {1, 3}, {3, 4, 5}, {5, 6}, {1, 2, 3, 5}};
    Graph ig = intersection_graph_of_subtrees(host, subtrees);
    CHECK(recognize_chordal_fast(ig).has_value());
}

TEST_CASE("orientations") {
    Graph k3 = oracle::complete(3);
    Orientation total = orientation_from_ordering(k3, VertexOrdering::identity(3),
                                                  OrientMode::Edges);
    CHECK(total.has_arc(0, 1));
    CHECK(total.has_arc(0, 2));
    CHECK(total.has_arc(1, 2));
    CHECK(is_transitive(total));

    Graph c4 = oracle::cycle(4);
    VertexOrdering cert({0, 2, 1, 3});
    Orientation edges = orientation_from_ordering(c4, cert, OrientMode::Edges);
    CHECK(edges.arc_count() == 4);
    CHECK(is_transitive(edges));
    Orientation nonedges = orientation_from_ordering(c4, cert, OrientMode::NonEdges);
    CHECK(nonedges.arc_count() == 2); // transitive orientation of 2K2
    CHECK(is_transitive(nonedges));

    CHECK_THROWS_AS(
        orientation_from_ordering(c4, VertexOrdering::identity(4), OrientMode::Edges),
        condition_error);
}

TEST_CASE("permutation graphs and linear diagrams") {
    CHECK(permutation_graph(Permutation({1, 2, 3})).edge_count() == 0);
    CHECK(permutation_graph(Permutation({4, 3, 2, 1})) == oracle::complete(4));
    Graph p = permutation_graph(Permutation({3, 1, 2}));
    CHECK(p.has_edge(0, 2));
    CHECK(p.has_edge(1, 2));
    CHECK_FALSE(p.has_edge(0, 1));
    CHECK_THROWS_AS(Permutation({1, 1, 3}), input_error);

    FunctionDiagram d = linear_diagram_from_permutation(Permutation({3, 1, 2}));
    CHECK(intersection_graph_of_diagram(d) == p);
    VertexOrdering ord = ordering_from_diagram(d);
    CHECK(ord.order == std::vector<int>{0, 1, 2});
    CHECK(check_ordering(p, ord, ConditionId::CoComparability).holds);

    // identity: parallel segments, edgeless
    FunctionDiagram par = linear_diagram_from_permutation(Permutation({1, 2, 3, 4}));
    CHECK(intersection_graph_of_diagram(par).edge_count() == 0);
}

TEST_CASE("diagram curve intersections are exact") {
    FunctionDiagram d;
    d.grid = {Rational(0), Rational(1, 2), Rational(1)};
    d.curves = {{Rational(0), Rational(1), Rational(0)},
                {Rational(1), Rational(1), Rational(2)},   // touches curve 0 at x=1/2
                {Rational(3), Rational(3), Rational(3)}};  // parallel, above everything
    Graph g = intersection_graph_of_diagram(d);
    CHECK(g.has_edge(0, 1));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK_FALSE(g.has_edge(1, 2));
    VertexOrdering ord = ordering_from_diagram(d);
    CHECK(check_ordering(g, ord, ConditionId::CoComparability).holds);

    FunctionDiagram bad;
    bad.grid = {Rational(0), Rational(2)};
    bad.curves = {{Rational(0), Rational(0)}};
    CHECK_THROWS_AS(intersection_graph_of_diagram(bad), input_error);
}

TEST_CASE("diagram/permutation coherence, exhaustive up to size 6") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> pi(n);
        std::iota(pi.begin(), pi.end(), 1);
        do {
            Permutation perm{std::vector<int>(pi)};
            Graph inv = permutation_graph(perm);
            CHECK(intersection_graph_of_diagram(linear_diagram_from_permutation(perm)) ==
                  inv);
        } while (std::next_permutation(pi.begin(), pi.end()));
    }
}

TEST_CASE("permutation recovered from a certifying ordering") {
    Graph c4 = oracle::cycle(4);
    VertexOrdering cert({0, 2, 1, 3});
    Permutation pi = permutation_from_ordering(c4, cert);
    Graph byposition = permutation_graph(pi);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            CHECK(byposition.has_edge(i, j) == c4.has_edge(cert.order[i], cert.order[j]));
}

TEST_CASE("split orderings") {
    Graph paw = from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    VertexOrdering ord = split_ordering(paw, SplitPartition{{0, 1, 2}, {3}});
    CHECK(ord.order == std::vector<int>{3, 0, 1, 2});
    CHECK(check_ordering(paw, ord, ConditionId::SimpleSplit).holds);
    CHECK(check_ordering(paw, ord, ConditionId::SplitEq).holds);
    CHECK(check_ordering(paw, ord, ConditionId::Peo).holds);

    Graph edgeless(3);
    CHECK(split_ordering(edgeless, SplitPartition{{}, {0, 1, 2}}).order ==
          std::vector<int>{0, 1, 2});
    Graph k4 = oracle::complete(4);
    CHECK(split_ordering(k4, SplitPartition{{0, 1, 2, 3}, {}}).order ==
          std::vector<int>{0, 1, 2, 3});

    CHECK_THROWS_AS(split_ordering(paw, SplitPartition{{0, 3}, {1, 2}}), input_error);
    CHECK_THROWS_AS(split_ordering(paw, SplitPartition{{0, 1}, {2}}), input_error);
}
