#include "oracle.hpp"
#include "ordercert/generators.hpp"
#include "ordercert/recognition.hpp"

#include <doctest.h>

using namespace ordercert;

TEST_CASE("family spec parsing") {
    auto p = parse_family_spec("path:4");
    REQUIRE(p.has_value());
    CHECK(p->family == Family::Path);
    CHECK(p->a == 4);

    auto kb = parse_family_spec("complete-bipartite:3,5");
    REQUIRE(kb.has_value());
    CHECK(kb->a == 3);
    CHECK(kb->b == 5);

    auto ri = parse_family_spec("random-interval:8,42");
    REQUIRE(ri.has_value());
    CHECK(ri->a == 8);
    CHECK(ri->seed == 42);

    CHECK_FALSE(parse_family_spec("unknown:3").has_value());
    CHECK_FALSE(parse_family_spec("path").has_value());
    CHECK_FALSE(parse_family_spec("path:x").has_value());
}

TEST_CASE("deterministic families") {
    CHECK(gen({Family::Path, 4}) == oracle::path(4));
    CHECK(gen({Family::Cycle, 5}) == oracle::cycle(5));
    CHECK(gen({Family::Complete, 6}) == oracle::complete(6));
    CHECK_THROWS_AS(gen({Family::Cycle, 2}), input_error);

    Graph k23 = gen({Family::CompleteBipartite, 2, 3});
    CHECK(k23.n == 5);
    CHECK(k23.edge_count() == 6);
    CHECK_FALSE(k23.has_edge(0, 1));
    CHECK(k23.has_edge(0, 2));

    Graph bt = gen({Family::CompleteBinaryTree, 7});
    CHECK(bt.edge_count() == 6);
    CHECK(bt.has_edge(0, 1));
    CHECK(bt.has_edge(0, 2));
    CHECK(bt.has_edge(1, 3));
    CHECK(max_degree(bt) == 3);
}

TEST_CASE("split extremal family") {
    Graph g = gen({Family::SplitExtremal, 4});
    CHECK(g.n == 8);
    CHECK(max_degree(g) == 4);
    CHECK(diameter(g) == 3);
    auto part = recognize_split_fast(g);
    REQUIRE(part.has_value());
    CHECK(part->clique.size() == 2);
    CHECK(part->independent.size() == 6);

    for (int d = 2; d <= 10; d += 2) {
        Graph h = gen({Family::SplitExtremal, d});
        CHECK(max_degree(h) == d);
        CHECK(recognize_split_fast(h).has_value());
    }
}

TEST_CASE("random families land in their class and are seed-stable") {
    for (std::uint64_t seed : {std::uint64_t{1}, std::uint64_t{7}, std::uint64_t{42}}) {
        Graph gi = gen({Family::RandomInterval, 9, 0, seed});
        CHECK(recognize(gi, ClassId::IntervalGraph).member);
        CHECK(gen({Family::RandomInterval, 9, 0, seed}) == gi);

        Graph gs = gen({Family::RandomSplit, 9, 0, seed});
        CHECK(recognize_split_fast(gs).has_value());
        CHECK(gen({Family::RandomSplit, 9, 0, seed}) == gs);
    }
    CHECK_FALSE(gen({Family::RandomInterval, 9, 0, 1}) ==
                gen({Family::RandomInterval, 9, 0, 2}));
}

TEST_CASE("labelled enumeration counts") {
    int count = 0;
    for_each_labelled_graph(3, [&](const Graph& g) {
        CHECK(g.n == 3);
        ++count;
    });
    CHECK(count == 8);
    count = 0;
    for_each_labelled_graph(4, [&](const Graph&) { ++count; });
    CHECK(count == 64);
    CHECK_THROWS_AS(for_each_labelled_graph(8, [](const Graph&) {}), size_guard_error);
}

TEST_CASE("canonical enumeration counts match the classic sequence") {
    CHECK(canonical_graphs(0).empty());
    const int want[] = {0, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 1; n <= 7; ++n)
        CHECK(canonical_graphs(n).size() == static_cast<std::size_t>(want[n]));

    // pairwise non-isomorphic at n = 4
    auto reps = canonical_graphs(4);
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j)
            CHECK_FALSE(oracle::isomorphic(reps[i], reps[j]));
}
