#include "mediakit/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "mediakit/errors.hpp"

namespace mediakit {

namespace {

const json& require_field(const json& j, const char* field) {
    if (!j.is_object()) throw InputError("expected a JSON object");
    auto it = j.find(field);
    if (it == j.end()) throw InputError(std::string("missing field \"") + field + "\"");
    return *it;
}

std::vector<std::string> string_array(const json& j, const char* field) {
    const json& arr = require_field(j, field);
    if (!arr.is_array()) throw InputError(std::string("field \"") + field + "\" must be an array");
    std::vector<std::string> out;
    for (const json& v : arr) {
        if (!v.is_string())
            throw InputError(std::string("field \"") + field + "\" must contain strings only");
        out.push_back(v.get<std::string>());
    }
    return out;
}

std::pair<std::string, std::string> string_pair(const json& v, const char* field) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string())
        throw InputError(std::string("field \"") + field +
                         "\" must contain two-string pairs");
    return {v[0].get<std::string>(), v[1].get<std::string>()};
}

}  // namespace

TokenSystem token_system_from_json(const json& j) {
    std::vector<std::string> states = string_array(j, "states");

    const json& toks = require_field(j, "tokens");
    if (!toks.is_array()) throw InputError("field \"tokens\" must be an array");
    std::vector<TokenSpec> specs;
    for (const json& t : toks) {
        TokenSpec spec;
        const json& id = require_field(t, "id");
        if (!id.is_string()) throw InputError("field \"id\" must be a string");
        spec.id = id.get<std::string>();
        const json& moves = require_field(t, "moves");
        if (!moves.is_array()) throw InputError("field \"moves\" must be an array");
        for (const json& mv : moves) spec.moves.push_back(string_pair(mv, "moves"));
        specs.push_back(std::move(spec));
    }

    std::map<std::string, std::string> declared;
    if (j.contains("reverses")) {
        const json& rev = j["reverses"];
        if (!rev.is_object()) throw InputError("field \"reverses\" must be an object");
        for (const auto& [k, v] : rev.items()) {
            if (!v.is_string()) throw InputError("field \"reverses\" must map ids to ids");
            declared[k] = v.get<std::string>();
        }
        return TokenSystem(std::move(states), std::move(specs), &declared);
    }
    return TokenSystem(std::move(states), std::move(specs));
}

Graph graph_from_json(const json& j) {
    std::vector<std::string> vertices = string_array(j, "vertices");
    const json& edges = require_field(j, "edges");
    if (!edges.is_array()) throw InputError("field \"edges\" must be an array");
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const json& e : edges) pairs.push_back(string_pair(e, "edges"));
    return Graph(std::move(vertices), std::move(pairs));
}

RelationFamily family_from_json(const json& j) {
    RelationFamily fam;
    fam.ground = string_array(j, "ground");
    for (const std::string& g : fam.ground)
        if (g.size() != 1)
            throw InputError("field \"ground\" must contain single-character elements");

    if (j.contains("kind")) {
        const json& kind = j["kind"];
        if (!kind.is_string()) throw InputError("field \"kind\" must be a string");
        fam.kind = family_kind_from_name(kind.get<std::string>());
    }

    const json& members = require_field(j, "members");
    if (!members.is_array()) throw InputError("field \"members\" must be an array");
    for (const json& mem : members) {
        if (!mem.is_array())
            throw InputError("field \"members\" must contain arrays of pair keys");
        Relation r;
        for (const json& p : mem) {
            if (!p.is_string() || p.get<std::string>().size() != 2)
                throw InputError("field \"members\" must contain two-character pair keys");
            std::string key = p.get<std::string>();
            r.pairs.insert({std::string(1, key[0]), std::string(1, key[1])});
        }
        fam.members.push_back(std::move(r));
    }
    return fam;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

json token_system_to_json(const TokenSystem& sys) {
    json j;
    j["states"] = sys.states();
    json toks = json::array();
    json reverses = json::object();
    for (int t = 0; t < sys.token_count(); ++t) {
        json tok;
        tok["id"] = sys.token_id(t);
        json moves = json::array();
        for (const auto& [a, b] : sys.moves(t))
            moves.push_back(json::array({sys.state_name(a), sys.state_name(b)}));
        tok["moves"] = std::move(moves);
        toks.push_back(std::move(tok));
        if (sys.reverse_index(t) >= 0)
            reverses[sys.token_id(t)] = sys.token_id(sys.reverse_index(t));
    }
    j["tokens"] = std::move(toks);
    j["reverses"] = std::move(reverses);
    return j;
}

json graph_to_json(const Graph& g) {
    json j;
    j["vertices"] = g.vertices();
    json edges = json::array();
    for (const auto& [a, b] : g.edges())
        edges.push_back(json::array({g.vertex_name(a), g.vertex_name(b)}));
    j["edges"] = std::move(edges);
    return j;
}

json family_to_json(const RelationFamily& f) {
    json j;
    j["kind"] = family_kind_name(f.kind);
    j["ground"] = f.ground;
    std::vector<int> order(f.members.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        const Relation& a = f.members[x];
        const Relation& b = f.members[y];
        if (a.pairs.size() != b.pairs.size()) return a.pairs.size() < b.pairs.size();
        return a.pairs < b.pairs;
    });
    json members = json::array();
    for (int i : order) {
        json mem = json::array();
        for (const auto& [a, b] : f.members[i].pairs) mem.push_back(a + b);
        members.push_back(std::move(mem));
    }
    j["members"] = std::move(members);
    return j;
}

namespace {

json pair_witness(const PairWitness& w) {
    return json{{"from", w.from}, {"to", w.to}};
}

json message_witness(const MessageWitness& w) {
    return json{{"start", w.start}, {"message", w.msg}};
}

json arc_to_json(const Arc& a) {
    return json::array({a.source, a.target});
}

}  // namespace

json mediatic_report_to_json(const MediaticReport& rep) {
    json j;
    j["mediatic"] = rep.mediatic;
    j["g1_connected"] = rep.g1_connected;
    j["g2_bipartite"] = rep.g2_bipartite;
    j["g3_like_transitive"] = rep.g3_like_transitive;
    if (rep.component_witness)
        j["component_witness"] =
            json::array({rep.component_witness->first, rep.component_witness->second});
    if (rep.odd_cycle) j["odd_cycle"] = *rep.odd_cycle;
    if (rep.non_transitive)
        j["non_transitive"] = json::array({arc_to_json((*rep.non_transitive)[0]),
                                           arc_to_json((*rep.non_transitive)[1]),
                                           arc_to_json((*rep.non_transitive)[2])});
    return j;
}

json medium_report_to_json(const MediumReport& rep) {
    json j;
    j["is_medium"] = rep.is_medium;
    j["axiom_ma"] = rep.axiom_ma;
    j["axiom_mb"] = rep.axiom_mb;
    j["m1"] = rep.m1;
    j["m2"] = rep.m2;
    j["m3"] = rep.m3;
    j["m4"] = rep.m4;
    if (rep.ma_witness) j["ma_witness"] = pair_witness(*rep.ma_witness);
    if (rep.mb_witness) j["mb_witness"] = message_witness(*rep.mb_witness);
    if (rep.m1_witness) j["m1_witness"] = *rep.m1_witness;
    if (rep.m2_witness) j["m2_witness"] = pair_witness(*rep.m2_witness);
    if (rep.m3_witness) j["m3_witness"] = message_witness(*rep.m3_witness);
    if (rep.m4_witness) {
        j["m4_witness"] = json{{"state", rep.m4_witness->state},
                               {"token_a", rep.m4_witness->token_a},
                               {"token_b", rep.m4_witness->token_b},
                               {"a", message_witness(rep.m4_witness->a)},
                               {"b", message_witness(rep.m4_witness->b)}};
    }
    if (rep.graph) j["graph"] = mediatic_report_to_json(*rep.graph);
    if (rep.tokens_match_classes) j["tokens_match_classes"] = *rep.tokens_match_classes;
    if (rep.token_class_witness) j["token_class_witness"] = *rep.token_class_witness;
    j["max_len"] = rep.max_len;
    j["budget"] = rep.budget;
    return j;
}

json round_trip_to_json(const RoundTripReport& rep) {
    return json{{"ok", rep.ok}, {"diffs", rep.diffs}};
}

json classification_to_json(const CircuitClassification& c) {
    json j;
    j["is_return"] = c.is_return;
    j["is_orderly"] = c.is_orderly;
    j["is_regular"] = c.is_regular;
    j["split"] = c.split ? json(*c.split) : json(nullptr);
    json pairs = json::array();
    for (const auto& [a, b] : c.opposite_pairs) pairs.push_back(json::array({a, b}));
    j["opposite_pairs"] = std::move(pairs);
    return j;
}

json theta_report_to_json(const ThetaReport& rep) {
    json j;
    j["cond_i"] = rep.cond_i;
    j["cond_ii"] = rep.cond_ii;
    j["cond_iii"] = rep.cond_iii;
    j["cond_iv"] = rep.cond_iv;
    j["holds"] = rep.holds;
    if (rep.orderly_witness) j["orderly_witness"] = *rep.orderly_witness;
    return j;
}

json opposite_report_to_json(const OppositeReport& rep) {
    return json{{"opposite_reverses", rep.opposite_reverses},
                {"regular", rep.regular},
                {"rotations_orderly", rep.rotations_orderly},
                {"holds", rep.holds}};
}

json wellgraded_report_to_json(const WellgradedReport& rep) {
    json j;
    j["wellgraded"] = rep.wellgraded;
    if (rep.witness) j["witness"] = json::array({rep.witness->first, rep.witness->second});
    return j;
}

std::string graph_to_dot(const Graph& g) {
    static const char* kPalette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                                     "#66a61e", "#e6ab02", "#a6761d", "#666666"};
    constexpr int kPaletteSize = 8;

    std::vector<int> edge_class;
    MediaticReport rep = is_mediatic(g);
    if (rep.mediatic) {
        LikePartitionResult part = like_partition(g);
        for (const auto& [a, b] : g.edges()) {
            // Label each edge by the class of its lexicographic orientation.
            int arc = g.arc_index(a, b);
            edge_class.push_back(part.partition->class_of_arc[arc]);
        }
    }

    std::ostringstream out;
    out << "graph G {\n";
    for (const std::string& v : g.vertices()) out << "  \"" << v << "\";\n";
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        out << "  \"" << g.vertex_name(edges[i].first) << "\" -- \""
            << g.vertex_name(edges[i].second) << "\"";
        if (!edge_class.empty()) {
            int k = edge_class[i];
            out << " [label=\"" << k << "\", color=\"" << kPalette[k % kPaletteSize] << "\"]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace mediakit
