#include "ordercert/certificate.hpp"
#include "ordercert/generators.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;
using namespace ordercert;

namespace {

constexpr int kExitMember = 0;
constexpr int kExitNonMember = 1;
constexpr int kExitError = 2;

Graph load_graph(const std::string& input, const std::string& format) {
    if (auto spec = parse_family_spec(input))
        return gen(*spec);
    std::ifstream in(input);
    if (!in)
        throw input_error("cannot open input: " + input);
    std::stringstream buf;
    buf << in.rdbuf();
    if (format == "graph6")
        return parse_graph6(buf.str());
    return parse_edge_list(buf.str());
}

int cmd_recognize(const std::string& input, const std::string& format,
                  const std::string& cls_name) {
    auto cls = class_from_string(cls_name);
    if (!cls)
        throw input_error("unknown class: " + cls_name);
    Graph g = load_graph(input, format);
    Recognition rec = recognize(g, *cls);
    std::cout << certificate_for(g, rec).dump(2) << '\n';
    return rec.member ? kExitMember : kExitNonMember;
}

int cmd_check(const std::string& input, const std::string& format,
              const std::string& ordering_text, const std::string& conds_text) {
    Graph g = load_graph(input, format);
    std::vector<int> order;
    {
        std::istringstream os(ordering_text);
        int v;
        while (os >> v)
            order.push_back(v);
    }
    VertexOrdering ord(std::move(order));
    if (ord.size() != g.n)
        throw input_error("ordering does not list all vertices");

    std::vector<ConditionId> conds;
    if (conds_text == "all") {
        for (int c = 0; c < kNumConditions; ++c)
            conds.push_back(static_cast<ConditionId>(c));
    } else {
        std::istringstream cs(conds_text);
        std::string name;
        while (std::getline(cs, name, ',')) {
            auto c = condition_from_string(name);
            if (!c)
                throw input_error("unknown condition: " + name);
            conds.push_back(*c);
        }
    }

    bool all_hold = true;
    json results = json::array();
    for (ConditionId c : conds) {
        Verdict v = check_ordering(g, ord, c);
        json entry{{"condition", std::string(to_string(c))}, {"holds", v.holds}};
        if (v.witness)
            entry["witness"] = {v.witness->i, v.witness->j, v.witness->k};
        results.push_back(entry);
        all_hold = all_hold && v.holds;
    }
    json out{{"schema", kSchemaVersion},
             {"graph", json{{"n", g.n}, {"digest", graph_digest(g)}}},
             {"ordering", ord.order},
             {"results", results}};
    std::cout << out.dump(2) << '\n';
    return all_hold ? kExitMember : kExitNonMember;
}

int cmd_bandwidth(const std::string& input, const std::string& format, bool exact,
                  const std::string& bound_class) {
    Graph g = load_graph(input, format);
    if (exact) {
        std::cout << exact_bandwidth_report(g, exact_bandwidth(g)).dump(2) << '\n';
        return kExitMember;
    }
    auto cls = class_from_string(bound_class);
    if (!cls)
        throw input_error("unknown class: " + bound_class);
    try {
        BoundedOrdering bo;
        switch (*cls) {
        case ClassId::IntervalGraph: bo = interval_bandwidth_ordering(g); break;
        case ClassId::CoComparabilityGraph: bo = cocomp_bandwidth_ordering(g); break;
        case ClassId::SplitGraph: bo = split_bandwidth_ordering(g); break;
        default:
            throw input_error("no bandwidth bound for class: " + bound_class +
                              " (use interval, co-comparability, or split)");
        }
        std::cout << bound_bandwidth_report(g, *cls, bo).dump(2) << '\n';
        return kExitMember;
    } catch (const input_error& e) {
        // non-membership refutation for the requested bound class
        Recognition rec = recognize(g, *cls);
        if (!rec.member) {
            std::cout << certificate_for(g, rec).dump(2) << '\n';
            return kExitNonMember;
        }
        throw;
    }
}

int cmd_repr(const std::string& input, const std::string& format, const std::string& cls_name) {
    auto cls = class_from_string(cls_name);
    if (!cls)
        throw input_error("unknown class: " + cls_name);
    Graph g = load_graph(input, format);
    Recognition rec = recognize(g, *cls);
    json cert = certificate_for(g, rec);
    if (rec.member && *cls == ClassId::AtFreeGraph && g.n > 0 &&
        components(g).size() == 1 && g.n <= caterpillar_guard()) {
        if (auto t = find_spanning_caterpillar(g)) {
            cert["representation"] = json{{"type", "spanning-caterpillar"},
                                          {"spine", t->spine},
                                          {"leaves", t->leaves},
                                          {"tree", emit_edge_list(t->tree)}};
        }
    }
    std::cout << cert.dump(2) << '\n';
    return rec.member ? kExitMember : kExitNonMember;
}

int cmd_gen(const std::string& spec_text, const std::string& format,
            std::optional<std::uint64_t> seed) {
    auto spec = parse_family_spec(spec_text);
    if (!spec)
        throw input_error("unrecognised family spec: " + spec_text);
    if (seed)
        spec->seed = *seed;
    Graph g = gen(*spec);
    if (format == "graph6")
        std::cout << emit_graph6(g) << '\n';
    else
        std::cout << emit_edge_list(g);
    return kExitMember;
}

int cmd_verify(const std::string& input, const std::string& format,
               const std::string& cert_path) {
    Graph g = load_graph(input, format);
    std::ifstream in(cert_path);
    if (!in)
        throw input_error("cannot open certificate: " + cert_path);
    json cert = json::parse(in);
    bool ok = verify_certificate(g, cert);
    std::cout << json{{"verified", ok}}.dump(2) << '\n';
    return ok ? kExitMember : kExitNonMember;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certifying graph-class recognition and bandwidth toolkit"};
    app.require_subcommand(1);

    std::string input, format = "edgelist", cls_name, conds = "all", ordering_text;
    std::string cert_path, spec_text;
    bool exact = false;
    std::string bound_class;
    int max_n = 0;
    std::optional<std::uint64_t> seed;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "input format: edgelist or graph6")
            ->check(CLI::IsMember({"edgelist", "graph6"}));
        sub->add_option("--max-n", max_n, "override instance-size guards");
    };

    auto* rec = app.add_subcommand("recognize", "decide class membership, emit a certificate");
    rec->add_option("input", input, "graph file or family spec")->required();
    rec->add_option("--class", cls_name, "graph class")->required();
    add_common(rec);

    auto* chk = app.add_subcommand("check", "evaluate ordering conditions");
    chk->add_option("input", input, "graph file or family spec")->required();
    chk->add_option("ordering", ordering_text, "vertex ordering, space separated")->required();
    chk->add_option("--cond", conds, "condition names (comma separated) or 'all'");
    add_common(chk);

    auto* bw = app.add_subcommand("bandwidth", "exact bandwidth or class bound orderings");
    bw->add_option("input", input, "graph file or family spec")->required();
    bw->add_flag("--exact", exact, "exact branch-and-bound solve");
    bw->add_option("--bound", bound_class, "bound mode for the named class");
    add_common(bw);

    auto* rp = app.add_subcommand("repr", "build the certifying representation");
    rp->add_option("input", input, "graph file or family spec")->required();
    rp->add_option("--class", cls_name, "graph class")->required();
    add_common(rp);

    auto* gn = app.add_subcommand("gen", "generate a graph family member");
    gn->add_option("spec", spec_text, "family spec, e.g. cycle:5")->required();
    gn->add_option("--format", format, "output format: edgelist or graph6")
        ->check(CLI::IsMember({"edgelist", "graph6"}));
    gn->add_option("--seed", seed, "seed for random families");

    auto* vf = app.add_subcommand("verify", "re-validate a certificate against a graph");
    vf->add_option("input", input, "graph file or family spec")->required();
    vf->add_option("--certificate", cert_path, "certificate JSON file")->required();
    add_common(vf);

    CLI11_PARSE(app, argc, argv);

    try {
        if (max_n > 0)
            setenv("ORDERCERT_MAX_N", std::to_string(max_n).c_str(), 1);
        if (rec->parsed())
            return cmd_recognize(input, format, cls_name);
        if (chk->parsed())
            return cmd_check(input, format, ordering_text, conds);
        if (bw->parsed()) {
            if (exact == !bound_class.empty())
                throw input_error("bandwidth needs exactly one of --exact or --bound CLASS");
            return cmd_bandwidth(input, format, exact, bound_class);
        }
        if (rp->parsed())
            return cmd_repr(input, format, cls_name);
        if (gn->parsed())
            return cmd_gen(spec_text, format, seed);
        if (vf->parsed())
            return cmd_verify(input, format, cert_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
