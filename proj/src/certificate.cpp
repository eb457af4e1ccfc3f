#include "ordercert/certificate.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace ordercert {

using nlohmann::json;

std::string graph_digest(const Graph& g) {
    const std::string text = emit_edge_list(g);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    std::ostringstream out;
    out << "fnv1a64:" << std::hex << h;
    return out.str();
}

namespace {

std::string rational_str(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
        throw input_error("malformed rational: " + s);
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

json graph_header(const Graph& g) {
    return json{{"n", g.n}, {"digest", graph_digest(g)}};
}

} // namespace

json to_json(const IntervalModel& model) {
    json intervals = json::array();
    for (const auto& [l, r] : model.intervals)
        intervals.push_back({rational_str(l), rational_str(r)});
    return json{{"type", "interval-model"}, {"intervals", intervals}};
}

json to_json(const Orientation& o, OrientMode mode) {
    json arcs = json::array();
    for (int u = 0; u < o.n; ++u)
        for (int v = static_cast<int>(o.out[u].find_first()); v >= 0;
             v = static_cast<int>(o.out[u].find_next(v)))
            arcs.push_back({u, v});
    return json{{"type", "orientation"},
                {"mode", mode == OrientMode::Edges ? "edges" : "non-edges"},
                {"arcs", arcs}};
}

json to_json(const FunctionDiagram& d) {
    json grid = json::array();
    for (const auto& x : d.grid)
        grid.push_back(rational_str(x));
    json curves = json::array();
    for (const auto& c : d.curves) {
        json vals = json::array();
        for (const auto& y : c)
            vals.push_back(rational_str(y));
        curves.push_back(vals);
    }
    return json{{"type", "linear-diagram"}, {"grid", grid}, {"curves", curves}};
}

json to_json(const LowerBounds& lb) {
    return json{{"degree", lb.degree}, {"diameter", lb.diameter}, {"clique", lb.clique}};
}

namespace {

json representation_for(const Graph& g, const Recognition& rec) {
    if (!rec.member || !rec.ordering)
        return nullptr;
    const VertexOrdering& ord = *rec.ordering;
    switch (rec.cls) {
    case ClassId::IntervalGraph:
    case ClassId::ProperIntervalGraph:
        return to_json(interval_model_from_ordering(g, ord));
    case ClassId::ComparabilityGraph:
        return to_json(orientation_from_ordering(g, ord, OrientMode::Edges), OrientMode::Edges);
    case ClassId::CoComparabilityGraph:
        return to_json(orientation_from_ordering(g, ord, OrientMode::NonEdges),
                       OrientMode::NonEdges);
    case ClassId::PermutationGraph: {
        Permutation pi = permutation_from_ordering(g, ord);
        json rep = to_json(linear_diagram_from_permutation(pi));
        rep["type"] = "permutation";
        rep["pi"] = pi.pi; // over ordering positions: label of v is pos(v)+1
        return rep;
    }
    case ClassId::SplitGraph:
        if (rec.partition)
            return json{{"type", "split-partition"},
                        {"clique", rec.partition->clique},
                        {"independent", rec.partition->independent}};
        return nullptr;
    case ClassId::ChordalGraph:
    case ClassId::AtFreeGraph:
        return nullptr;
    }
    return nullptr;
}

} // namespace

json certificate_for(const Graph& g, const Recognition& rec) {
    json conds = json::array();
    for (ConditionId c : conditions_for(rec.cls))
        conds.push_back(std::string(to_string(c)));
    json cert{{"schema", kSchemaVersion},
              {"graph", graph_header(g)},
              {"class", std::string(to_string(rec.cls))},
              {"verdict", rec.member ? "member" : "non-member"},
              {"method", rec.method},
              {"conditions", conds}};
    if (rec.ordering)
        cert["ordering"] = rec.ordering->order;
    if (rec.obstruction)
        cert["obstruction"] = json{{"type", "asteroidal-triple"},
                                   {"vertices", {rec.obstruction->a, rec.obstruction->b,
                                                 rec.obstruction->c}}};
    if (json rep = representation_for(g, rec); !rep.is_null())
        cert["representation"] = rep;
    return cert;
}

namespace {

bool verify_representation(const Graph& g, const VertexOrdering& ord, const json& rep) {
    const std::string type = rep.at("type");
    if (type == "interval-model") {
        IntervalModel model;
        for (const auto& iv : rep.at("intervals"))
            model.intervals.push_back(
                {parse_rational(iv.at(0)), parse_rational(iv.at(1))});
        return intersection_graph_of_intervals(model) == g;
    }
    if (type == "orientation") {
        const bool edges_mode = rep.at("mode") == "edges";
        const Graph& oriented = edges_mode ? g : complement(g);
        Orientation o(g.n);
        long arcs = 0;
        for (const auto& arc : rep.at("arcs")) {
            int u = arc.at(0), v = arc.at(1);
            if (!oriented.has_edge(u, v) || o.has_arc(v, u))
                return false;
            o.add_arc(u, v);
            ++arcs;
        }
        return arcs == oriented.edge_count() && is_transitive(o);
    }
    if (type == "permutation") {
        Permutation pi(rep.at("pi").get<std::vector<int>>());
        Graph byposition = permutation_graph(pi);
        if (byposition.n != g.n)
            return false;
        for (int i = 0; i < g.n; ++i)
            for (int j = i + 1; j < g.n; ++j)
                if (byposition.has_edge(i, j) != g.has_edge(ord.order[i], ord.order[j]))
                    return false;
        return true;
    }
    if (type == "split-partition") {
        auto k = rep.at("clique").get<std::vector<int>>();
        auto i = rep.at("independent").get<std::vector<int>>();
        if (static_cast<int>(k.size() + i.size()) != g.n)
            return false;
        try {
            split_ordering(g, SplitPartition{k, i});
        } catch (const input_error&) {
            return false;
        }
        return true;
    }
    return false;
}

} // namespace

bool verify_certificate(const Graph& g, const json& cert) {
    if (cert.at("schema") != kSchemaVersion)
        return false;
    if (cert.at("graph").at("digest") != graph_digest(g))
        return false;
    auto cls = class_from_string(cert.at("class").get<std::string>());
    if (!cls)
        return false;
    const bool member = cert.at("verdict") == "member";

    if (member) {
        if (*cls == ClassId::AtFreeGraph)
            return !find_asteroidal_triple(g).has_value();
        if (!cert.contains("ordering"))
            return false;
        VertexOrdering ord(cert.at("ordering").get<std::vector<int>>());
        if (ord.size() != g.n)
            return false;
        for (ConditionId c : conditions_for(*cls))
            if (!check_ordering(g, ord, c).holds)
                return false;
        if (cert.contains("representation") &&
            !verify_representation(g, ord, cert.at("representation")))
            return false;
        return true;
    }
    if (*cls == ClassId::AtFreeGraph) {
        if (!cert.contains("obstruction"))
            return false;
        auto v = cert.at("obstruction").at("vertices");
        return is_asteroidal_triple(g, v.at(0), v.at(1), v.at(2));
    }
    // negative condition-class certificates carry an exhaustion claim;
    // reproduce it by re-running recognition
    return !recognize(g, *cls).member;
}

json exact_bandwidth_report(const Graph& g, const BandwidthResult& res) {
    return json{{"schema", kSchemaVersion},
                {"graph", graph_header(g)},
                {"mode", "exact"},
                {"value", res.value},
                {"ordering", res.ordering.order},
                {"lower_bounds", to_json(res.bounds)}};
}

json bound_bandwidth_report(const Graph& g, ClassId cls, const BoundedOrdering& bo) {
    return json{{"schema", kSchemaVersion},
                {"graph", graph_header(g)},
                {"mode", "bound"},
                {"class", std::string(to_string(cls))},
                {"width", bo.width},
                {"guarantee", bo.guarantee},
                {"ordering", bo.ordering.order},
                {"lower_bounds", to_json(lower_bounds(g))}};
}

} // namespace ordercert
