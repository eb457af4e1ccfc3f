#include "oracle.hpp"
#include "ordercert/certificate.hpp"
#include "ordercert/generators.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

using namespace ordercert;
using nlohmann::json;

TEST_CASE("graph digest is stable and edge-sensitive") {
    Graph p4 = oracle::path(4);
    CHECK(graph_digest(p4) == graph_digest(oracle::path(4)));
    CHECK(graph_digest(p4) != graph_digest(oracle::cycle(4)));
    CHECK(graph_digest(Graph(4)) != graph_digest(Graph(5)));
    CHECK(graph_digest(p4).starts_with("fnv1a64:"));
}

TEST_CASE("rationals serialise as p/q strings") {
    IntervalModel m;
    m.intervals = {{Rational(1, 2), Rational(3)}};
    json j = to_json(m);
    CHECK(j["type"] == "interval-model");
    CHECK(j["intervals"][0][0] == "1/2");
    CHECK(j["intervals"][0][1] == "3/1");
}

TEST_CASE("positive certificates round-trip through verification") {
    struct Case {
        Graph g;
        ClassId cls;
    };
    const std::vector<Case> cases = {
        {oracle::path(4), ClassId::IntervalGraph},
        {oracle::path(4), ClassId::ProperIntervalGraph},
        {oracle::cycle(4), ClassId::PermutationGraph},
        {oracle::cycle(6), ClassId::ComparabilityGraph},
        {oracle::complete(4), ClassId::SplitGraph},
        {from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}), ClassId::ChordalGraph},
        {oracle::cycle(5), ClassId::AtFreeGraph},
    };
    for (const auto& [g, cls] : cases) {
        Recognition rec = recognize(g, cls);
        REQUIRE(rec.member);
        json cert = certificate_for(g, rec);
        CHECK(cert["schema"] == kSchemaVersion);
        CHECK(cert["verdict"] == "member");
        CHECK(verify_certificate(g, cert));
        // a different graph with the same size fails the digest check
        Graph other = complement(g);
        if (other != g)
            CHECK_FALSE(verify_certificate(other, cert));
    }
}

TEST_CASE("negative certificates round-trip and carry obstructions") {
    Graph c5 = oracle::cycle(5);
    Recognition rec = recognize(c5, ClassId::ChordalGraph);
    REQUIRE_FALSE(rec.member);
    json cert = certificate_for(c5, rec);
    CHECK(cert["verdict"] == "non-member");
    CHECK(verify_certificate(c5, cert));

    Graph c6 = oracle::cycle(6);
    Recognition at = recognize(c6, ClassId::AtFreeGraph);
    REQUIRE_FALSE(at.member);
    json atcert = certificate_for(c6, at);
    CHECK(atcert["obstruction"]["type"] == "asteroidal-triple");
    CHECK(atcert["obstruction"]["vertices"] == json({0, 2, 4}));
    CHECK(verify_certificate(c6, atcert));
}

TEST_CASE("tampered certificates are rejected") {
    Graph c4 = oracle::cycle(4);
    Recognition rec = recognize(c4, ClassId::PermutationGraph);
    json cert = certificate_for(c4, rec);
    REQUIRE(verify_certificate(c4, cert));

    json bad_schema = cert;
    bad_schema["schema"] = "ordercert/0";
    CHECK_FALSE(verify_certificate(c4, bad_schema));

    json bad_order = cert;
    bad_order["ordering"] = {0, 1, 2, 3}; // identity does not certify C4
    CHECK_FALSE(verify_certificate(c4, bad_order));

    json bad_rep = cert;
    bad_rep["representation"]["pi"] = {1, 2, 3, 4};
    CHECK_FALSE(verify_certificate(c4, bad_rep));

    json flipped = cert;
    flipped["verdict"] = "non-member";
    CHECK_FALSE(verify_certificate(c4, flipped));
}

TEST_CASE("certificates verify for every class over all graphs up to 5 vertices") {
    const std::vector<ClassId> classes = {
        ClassId::IntervalGraph,      ClassId::ProperIntervalGraph,
        ClassId::ComparabilityGraph, ClassId::CoComparabilityGraph,
        ClassId::PermutationGraph,   ClassId::ChordalGraph,
        ClassId::SplitGraph,         ClassId::AtFreeGraph};
    for (const Graph& g : canonical_graphs(5))
        for (ClassId cls : classes) {
            Recognition rec = recognize(g, cls);
            CHECK(verify_certificate(g, certificate_for(g, rec)));
        }
}

TEST_CASE("bandwidth reports") {
    Graph k33 = gen({Family::CompleteBipartite, 3, 3});
    BandwidthResult res = exact_bandwidth(k33);
    json exact = exact_bandwidth_report(k33, res);
    CHECK(exact["mode"] == "exact");
    CHECK(exact["value"] == 4);
    CHECK(exact["lower_bounds"]["diameter"] == 3);
    CHECK(exact["graph"]["digest"] == graph_digest(k33));

    Graph p4 = oracle::path(4);
    json bound = bound_bandwidth_report(p4, ClassId::IntervalGraph,
                                        interval_bandwidth_ordering(p4));
    CHECK(bound["mode"] == "bound");
    CHECK(bound["class"] == "interval");
    CHECK(bound["width"] == 1);
    CHECK(bound["guarantee"] == 2);
}
