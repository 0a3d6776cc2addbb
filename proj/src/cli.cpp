#include "mediakit/cli.hpp"

#include <ostream>

#include <CLI11.hpp>

#include "mediakit/convert.hpp"
#include "mediakit/errors.hpp"
#include "mediakit/families.hpp"
#include "mediakit/fixtures.hpp"
#include "mediakit/iso.hpp"
#include "mediakit/json_io.hpp"
#include "mediakit/medium.hpp"

namespace mediakit::cli {

namespace {

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int check_graph_cmd(const std::string& file, std::ostream& out) {
    Graph g = graph_from_json(load_json_file(file));
    MediaticReport rep = is_mediatic(g);
    emit(out, mediatic_report_to_json(rep));
    return rep.mediatic ? 0 : 1;
}

int check_medium_cmd(const std::string& file, int bounded, std::ostream& out) {
    TokenSystem sys = token_system_from_json(load_json_file(file));
    MediumReport rep = check_medium(sys);
    if (bounded > 0) {
        MediumReport b = check_axioms_bounded(sys, bounded);
        emit(out, json{{"graph_route", medium_report_to_json(rep)},
                       {"bounded_route", medium_report_to_json(b)},
                       {"agree", rep.is_medium == b.is_medium}});
    } else {
        emit(out, medium_report_to_json(rep));
    }
    return rep.is_medium ? 0 : 1;
}

int convert_cmd(const std::string& direction, const std::string& file, std::ostream& out) {
    if (direction == "m2g") {
        TokenSystem sys = token_system_from_json(load_json_file(file));
        MediumReport rep = check_medium(sys);
        if (!rep.is_medium) {
            emit(out, medium_report_to_json(rep));
            return 1;
        }
        emit(out, graph_to_json(medium_to_graph(sys, MediumCheck::Skip)));
        return 0;
    }
    Graph g = graph_from_json(load_json_file(file));
    MediaticReport rep = is_mediatic(g);
    if (!rep.mediatic) {
        emit(out, mediatic_report_to_json(rep));
        return 1;
    }
    emit(out, token_system_to_json(graph_to_medium(g)));
    return 0;
}

int iso_graphs_cmd(const std::string& file_a, const std::string& file_b, int max_vertices,
                   std::ostream& out) {
    Graph a = graph_from_json(load_json_file(file_a));
    Graph b = graph_from_json(load_json_file(file_b));
    std::optional<GraphIso> iso = find_graph_iso(a, b, IsoOptions{max_vertices});
    if (!iso) {
        emit(out, json{{"isomorphic", false}});
        return 1;
    }
    emit(out, json{{"isomorphic", true}, {"phi", iso->phi}});
    return 0;
}

int iso_media_cmd(const std::string& file_a, const std::string& file_b, int max_vertices,
                  std::ostream& out) {
    TokenSystem a = token_system_from_json(load_json_file(file_a));
    TokenSystem b = token_system_from_json(load_json_file(file_b));
    for (const TokenSystem* sys : {&a, &b}) {
        MediumReport rep = check_medium(*sys);
        if (!rep.is_medium) {
            emit(out, medium_report_to_json(rep));
            return 1;
        }
    }
    std::optional<MediaIso> iso = media_isomorphic(a, b, IsoOptions{max_vertices});
    if (!iso) {
        emit(out, json{{"isomorphic", false}});
        return 1;
    }
    emit(out, json{{"isomorphic", true}, {"alpha", iso->alpha}, {"beta", iso->beta}});
    return 0;
}

int gen_family_cmd(const std::string& kind, int n, bool to_medium, bool to_graph,
                   std::ostream& out) {
    RelationFamily fam = enumerate_family(family_kind_from_name(kind), n);
    if (to_medium || to_graph) {
        TokenSystem sys = family_to_medium(fam);
        if (to_graph)
            emit(out, graph_to_json(medium_to_graph(sys, MediumCheck::Require)));
        else
            emit(out, token_system_to_json(sys));
    } else {
        emit(out, family_to_json(fam));
    }
    return 0;
}

int circuits_cmd(const std::string& file, int max_len, bool minimal_only, std::ostream& out) {
    Graph g = graph_from_json(load_json_file(file));
    std::vector<Circuit> circuits = circuits_upto(g, max_len);
    if (minimal_only) {
        std::vector<Circuit> keep;
        for (const Circuit& c : circuits)
            if (is_minimal_circuit(g, c)) keep.push_back(c);
        circuits.swap(keep);
    }
    emit(out, json{{"count", circuits.size()}, {"circuits", circuits}});
    return 0;
}

int content_cmd(const std::string& file, const std::string& state, std::ostream& out) {
    TokenSystem sys = token_system_from_json(load_json_file(file));
    MediumReport rep = check_medium(sys);
    if (!rep.is_medium) {
        emit(out, medium_report_to_json(rep));
        return 1;
    }
    emit(out, json{{"state", state}, {"tokens", state_content(sys, state)}});
    return 0;
}

int export_dot_cmd(const std::string& file, std::ostream& out) {
    Graph g = graph_from_json(load_json_file(file));
    out << graph_to_dot(g);
    return 0;
}

int gen_fixture_cmd(unsigned seed, int target, std::ostream& out) {
    emit(out, graph_to_json(fixtures::random_partial_cube(seed, target)));
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"media theory toolkit: token systems, mediatic graphs and their bijection"};
    app.require_subcommand(1);
    int code = 0;

    auto* check = app.add_subcommand("check", "Validate a graph or token system");
    check->require_subcommand(1);

    std::string file, file_b, direction, state, kind;
    int bounded = 0, max_vertices = 12, max_len = 6, n = 2, target = 10;
    unsigned seed = fixtures::kPartialCubeSeed;
    bool minimal_only = false, to_medium = false, to_graph = false;

    auto* check_graph = check->add_subcommand("graph", "Mediatic-ness of a graph file");
    check_graph->add_option("file", file, "graph JSON file")->required();
    check_graph->callback([&] { code = check_graph_cmd(file, out); });

    auto* check_medium_sub = check->add_subcommand("medium", "Medium-ness of a token system file");
    check_medium_sub->add_option("file", file, "token system JSON file")->required();
    check_medium_sub->add_option("--bounded", bounded,
                                 "also run the bounded-enumeration route at this length");
    check_medium_sub->callback([&] { code = check_medium_cmd(file, bounded, out); });

    auto* convert = app.add_subcommand("convert", "Convert between medium and graph");
    convert->add_option("direction", direction, "m2g or g2m")
        ->required()
        ->check(CLI::IsMember({"m2g", "g2m"}));
    convert->add_option("file", file, "input JSON file")->required();
    convert->callback([&] { code = convert_cmd(direction, file, out); });

    auto* iso = app.add_subcommand("iso", "Isomorphism of graphs or media");
    iso->require_subcommand(1);
    auto* iso_graphs = iso->add_subcommand("graphs", "Graph isomorphism");
    iso_graphs->add_option("a", file, "first graph JSON file")->required();
    iso_graphs->add_option("b", file_b, "second graph JSON file")->required();
    iso_graphs->add_option("--max-vertices", max_vertices, "search size cap");
    iso_graphs->callback([&] { code = iso_graphs_cmd(file, file_b, max_vertices, out); });
    auto* iso_media = iso->add_subcommand("media", "Media isomorphism");
    iso_media->add_option("a", file, "first token system JSON file")->required();
    iso_media->add_option("b", file_b, "second token system JSON file")->required();
    iso_media->add_option("--max-vertices", max_vertices, "search size cap");
    iso_media->callback([&] { code = iso_media_cmd(file, file_b, max_vertices, out); });

    auto* gen_family = app.add_subcommand("gen-family", "Enumerate a relation family");
    gen_family->add_option("--kind", kind, "partial-order, interval-order, semiorder or biorder")
        ->required();
    gen_family->add_option("--n", n, "ground set size (1..4)")->required();
    auto* opt_medium = gen_family->add_flag("--to-medium", to_medium, "emit the family medium");
    auto* opt_graph = gen_family->add_flag("--to-graph", to_graph, "emit the family graph");
    opt_medium->excludes(opt_graph);
    gen_family->callback([&] { code = gen_family_cmd(kind, n, to_medium, to_graph, out); });

    auto* circuits = app.add_subcommand("circuits", "Enumerate circuits of a graph");
    circuits->add_option("file", file, "graph JSON file")->required();
    circuits->add_option("--max-len", max_len, "maximum circuit length")->required();
    circuits->add_flag("--minimal-only", minimal_only, "keep only minimal circuits");
    circuits->callback([&] { code = circuits_cmd(file, max_len, minimal_only, out); });

    auto* content = app.add_subcommand("content", "Content of a state in a medium");
    content->add_option("file", file, "token system JSON file")->required();
    content->add_option("--state", state, "state id")->required();
    content->callback([&] { code = content_cmd(file, state, out); });

    auto* export_cmd = app.add_subcommand("export", "Export a graph");
    export_cmd->require_subcommand(1);
    auto* export_dot = export_cmd->add_subcommand("dot", "DOT with likeness-class annotations");
    export_dot->add_option("file", file, "graph JSON file")->required();
    export_dot->callback([&] { code = export_dot_cmd(file, out); });

    auto* gen_fixture = app.add_subcommand("gen-fixture", "Random partial-cube graph");
    gen_fixture->add_option("--seed", seed, "generator seed");
    gen_fixture->add_option("--target", target, "hypercube sample size");
    gen_fixture->callback([&] { code = gen_fixture_cmd(seed, target, out); });

    std::vector<const char*> argv{"mediakit"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return code;
}

}  // namespace mediakit::cli
