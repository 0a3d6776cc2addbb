// Acceptance battery for the library: each criterion prints one PASS/FAIL
// line; the process exits nonzero if any criterion fails. The checks lean on
// the independent reference implementations in oracle.cpp so that library
// results are confirmed, not echoed.

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "helpers.hpp"
#include "mutants.hpp"
#include "oracle.hpp"

#include "mediakit/convert.hpp"
#include "mediakit/families.hpp"
#include "mediakit/fixtures.hpp"
#include "mediakit/graph.hpp"
#include "mediakit/iso.hpp"
#include "mediakit/medium.hpp"
#include "mediakit/token_system.hpp"

using namespace mediakit;
namespace fx = mediakit::fixtures;

namespace {

struct Checker {
    int failures = 0;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        ++failures;
        if (notes.size() < 6) notes.push_back(what);
    }
};

// The media under test: the medium induced by every mediatic corpus graph
// plus the two hand-built ones.
std::vector<std::pair<std::string, TokenSystem>> fixture_media() {
    std::vector<std::pair<std::string, TokenSystem>> out;
    for (const auto& [name, g] : fx::graph_corpus(true)) out.emplace_back(name, graph_to_medium(g));
    out.emplace_back("q3_hand", fx::q3_medium());
    out.emplace_back("k2_hand", fx::k2_medium());
    return out;
}

// A hexagon with one long chord: the 2x3 grid, whose outer 6-cycle is an
// even circuit that is not minimal.
Graph domino() {
    return Graph({"0", "1", "2", "3", "4", "5"},
                 {{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "0"},
                  {"0", "3"}});
}

Graph two_disjoint_edges() {
    return Graph({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
}

std::set<std::string> to_set(const std::vector<std::string>& v) {
    return std::set<std::string>(v.begin(), v.end());
}

std::set<std::string> set_minus(const std::set<std::string>& a, const std::set<std::string>& b) {
    std::set<std::string> out;
    for (const auto& x : a)
        if (!b.count(x)) out.insert(x);
    return out;
}

std::set<std::string> set_union(const std::set<std::string>& a, const std::set<std::string>& b) {
    std::set<std::string> out = a;
    out.insert(b.begin(), b.end());
    return out;
}

std::set<std::string> sym_diff(const std::set<std::string>& a, const std::set<std::string>& b) {
    return set_union(set_minus(a, b), set_minus(b, a));
}

// The unique token carrying one arc of a medium.
std::string arc_token(const TokenSystem& sys, int from, int to) {
    int found = -1, count = 0;
    for (auto [tok, tgt] : sys.moved_from(from))
        if (tgt == to) {
            found = tok;
            ++count;
        }
    if (count != 1) throw InternalError("medium arc not served by exactly one token");
    return sys.token_id(found);
}

// --- criterion 1 ------------------------------------------------------------

void round_trips(Checker& ck) {
    for (const auto& [name, g] : fx::graph_corpus(true)) {
        RoundTripReport rep = verify_round_trip(g);
        ck.require(rep.ok, name + ": graph round trip failed" +
                               (rep.diffs.empty() ? "" : (": " + rep.diffs.front())));
    }
    for (const auto& [name, sys] : fixture_media()) {
        RoundTripReport rep = verify_round_trip(sys);
        ck.require(rep.ok, name + ": medium round trip failed" +
                               (rep.diffs.empty() ? "" : (": " + rep.diffs.front())));
    }
}

// --- criterion 2 ------------------------------------------------------------

void axiom_equivalence(Checker& ck) {
    std::vector<std::pair<std::string, TokenSystem>> systems = fixture_media();
    std::vector<std::pair<std::string, TokenSystem>> mutants = testkit::invalid_systems();
    ck.require(mutants.size() >= 20, "fewer than 20 mutated invalid systems");
    for (const auto& [name, sys] : mutants) {
        ck.require(!check_medium(sys).is_medium, name + ": mutant accepted as a medium");
        systems.push_back({name, sys});
    }

    for (const auto& [name, sys] : systems) {
        MediumReport a = check_medium(sys);
        ck.require((a.axiom_ma && a.axiom_mb) == a.is_medium,
                   name + ": pair-axiom verdict disagrees with the overall verdict");
        ck.require((a.m1 && a.m2 && a.m3 && a.m4) == a.is_medium,
                   name + ": quad-axiom verdict disagrees with the overall verdict");

        MediumReport b = check_axioms_bounded(sys, 2 * sys.state_count());
        ck.require(b.is_medium == a.is_medium,
                   name + ": bounded route disagrees with the graph route");
        ck.require((b.axiom_ma && b.axiom_mb) == b.is_medium,
                   name + ": bounded pair-axiom verdict inconsistent");
        ck.require((b.m1 && b.m2 && b.m3 && b.m4) == b.is_medium,
                   name + ": bounded quad-axiom verdict inconsistent");
    }
}

// --- criterion 3 ------------------------------------------------------------

void content_laws(Checker& ck) {
    for (const auto& [name, sys] : fixture_media()) {
        int tokens = sys.token_count();
        ck.require(tokens % 2 == 0, name + ": odd token count");

        std::vector<std::set<std::string>> content;
        for (int s = 0; s < sys.state_count(); ++s) {
            content.push_back(to_set(state_content(sys, sys.state_name(s))));
            ck.require(static_cast<int>(content.back().size()) == tokens / 2,
                       name + "/" + sys.state_name(s) + ": content size is not half the tokens");
        }

        for (int s = 0; s < sys.state_count(); ++s)
            for (int v = 0; v < sys.state_count(); ++v) {
                if (s == v) continue;
                Message m = concise_message(sys, sys.state_name(s), sys.state_name(v));
                std::set<std::string> cm = to_set(m);
                std::set<std::string> cm_rev = to_set(reverse_message(sys, m));
                ck.require(set_minus(content[v], content[s]) == cm,
                           name + ": content difference is not the message content at " +
                               sys.state_name(s) + " -> " + sys.state_name(v));
                ck.require(sym_diff(content[s], content[v]) == set_union(cm, cm_rev),
                           name + ": content symmetric difference mismatch at " +
                               sys.state_name(s) + " -> " + sys.state_name(v));
            }
    }
}

// --- criterion 4 ------------------------------------------------------------

void shortest_path_correspondence(Checker& ck) {
    for (const auto& [name, sys] : fixture_media()) {
        Graph g = medium_to_graph(sys, MediumCheck::Skip);
        for (int s = 0; s < g.vertex_count(); ++s)
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (s == v) continue;
                Message m = concise_message(sys, g.vertex_name(s), g.vertex_name(v));
                ck.require(static_cast<int>(m.size()) == g.distances().at(s, v),
                           name + ": concise message is not geodesic for " + g.vertex_name(s) +
                               " -> " + g.vertex_name(v));

                std::vector<std::vector<int>> paths = testkit::all_shortest_paths(g, s, v);
                ck.require(!paths.empty(), name + ": no shortest path found");
                for (const std::vector<int>& path : paths) {
                    std::vector<int> seq;
                    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                        int from = sys.state_index(g.vertex_name(path[i]));
                        int to = sys.state_index(g.vertex_name(path[i + 1]));
                        seq.push_back(sys.token_index(arc_token(sys, from, to)));
                    }
                    ck.require(testkit::concise_oracle(sys, sys.state_index(g.vertex_name(s)), seq),
                               name + ": a shortest path fails to lift to a concise message");
                }
            }
    }
}

// --- criterion 5 ------------------------------------------------------------

void theta_battery(Checker& ck) {
    int holding = 0, converse = 0;
    for (const auto& [name, sys] :
         {std::pair{std::string("q3"), fx::q3_medium()},
          {std::string("c6"), graph_to_medium(fx::c6())}}) {
        int n = sys.state_count();
        int configs = 0;
        for (int s = 0; s < n; ++s)
            for (int nn = 0; nn < n; ++nn)
                for (int q = 0; q < n; ++q)
                    for (int w = 0; w < n; ++w) {
                        std::set<int> distinct{s, nn, q, w};
                        if (distinct.size() != 4) continue;
                        // tau carries N to S and mu carries W to Q; in a
                        // medium each exists exactly when the arc does.
                        ThetaConfig cfg;
                        cfg.s = sys.state_name(s);
                        cfg.n = sys.state_name(nn);
                        cfg.q = sys.state_name(q);
                        cfg.w = sys.state_name(w);
                        try {
                            cfg.tau = arc_token(sys, nn, s);
                            cfg.mu = arc_token(sys, w, q);
                        } catch (const InternalError&) {
                            continue;  // no such arc: not a theta configuration
                        }
                        cfg.q_msg = concise_message(sys, cfg.s, cfg.q);
                        cfg.q_prime = concise_message(sys, cfg.n, cfg.q);
                        cfg.w_msg = concise_message(sys, cfg.n, cfg.w);
                        cfg.w_prime = concise_message(sys, cfg.s, cfg.w);
                        ++configs;

                        ThetaReport rep = check_theta(sys, cfg);

                        int lq = static_cast<int>(cfg.q_msg.size());
                        int lw = static_cast<int>(cfg.w_msg.size());
                        int lq2 = static_cast<int>(cfg.q_prime.size());
                        int lw2 = static_cast<int>(cfg.w_prime.size());
                        std::string tau_rev = *reverse_of(sys, cfg.tau);

                        bool i = (lq + lw != lq2 + lw2) && cfg.mu != tau_rev;
                        bool ii = cfg.tau == cfg.mu;
                        bool iii = to_set(cfg.q_msg) == to_set(cfg.w_msg) && lq == lw;
                        bool iv = (lq + lw + 2 == lq2 + lw2);
                        ck.require(rep.cond_i == i && rep.cond_ii == ii && rep.cond_iii == iii &&
                                       rep.cond_iv == iv,
                                   name + ": a condition disagrees with its direct evaluation");
                        ck.require(rep.cond_i == rep.cond_ii && rep.cond_ii == rep.cond_iii &&
                                       rep.cond_iii == rep.cond_iv && rep.holds == rep.cond_i,
                                   name + ": the four conditions are not identical");

                        Message circuit(cfg.q_msg);
                        circuit.push_back(*reverse_of(sys, cfg.mu));
                        Message w_rev = reverse_message(sys, cfg.w_msg);
                        circuit.insert(circuit.end(), w_rev.begin(), w_rev.end());
                        circuit.push_back(cfg.tau);

                        if (rep.holds) {
                            ++holding;
                            ck.require(rep.orderly_witness.has_value(),
                                       name + ": holding instance without a witness");
                            if (rep.orderly_witness)
                                ck.require(*rep.orderly_witness == circuit,
                                           name + ": witness is not the documented circuit");
                            CircuitClassification cls = classify_circuit(sys, cfg.s, circuit);
                            ck.require(cls.is_return && cls.is_orderly,
                                       name + ": witness circuit is not an orderly return");
                        } else if (cfg.tau != cfg.mu) {
                            // The converse direction genuinely fails: some
                            // circuits are orderly although the conditions are
                            // false.
                            CircuitClassification cls = classify_circuit(sys, cfg.s, circuit);
                            if (cls.is_return && cls.is_orderly) ++converse;
                        }
                    }
        ck.require(configs > 0, name + ": no theta configurations enumerated");
    }
    ck.require(holding > 0, "no configuration satisfied the conditions");
    ck.require(converse > 0, "no orderly circuit found among failing configurations");
}

// --- criterion 6 ------------------------------------------------------------

// Literal orderliness of one rotation: some split yields two concise
// messages from the start to one common other state, different as sequences.
bool orderly_by_hand(const TokenSystem& sys, const std::string& start, const Message& m) {
    for (std::size_t k = 1; k < m.size(); ++k) {
        Message head(m.begin(), m.begin() + k);
        Message tail(m.begin() + k, m.end());
        Message back = reverse_message(sys, tail);
        if (!message_stats(sys, start, head).concise) continue;
        if (!message_stats(sys, start, back).concise) continue;
        if (apply(sys, start, head) != apply(sys, start, back)) continue;
        if (head != back) return true;
    }
    return false;
}

void regular_return_battery(Checker& ck) {
    std::vector<std::pair<std::string, Graph>> graphs = fx::graph_corpus(true);
    graphs.emplace_back("domino", domino());

    int minimal_seen = 0, nonminimal_seen = 0;
    for (const auto& [name, g] : graphs) {
        TokenSystem sys = graph_to_medium(g);
        for (const Circuit& c : circuits_upto(g, 8)) {
            ck.require(c.size() % 2 == 0, name + ": odd circuit in a bipartite graph");
            Message m = testkit::circuit_message(sys, c);
            CircuitClassification cls = classify_circuit(sys, c[0], m);
            bool minimal = is_minimal_circuit(g, c);
            (minimal ? minimal_seen : nonminimal_seen)++;

            ck.require(cls.is_return, name + ": circuit message is not a return");

            // The three opposite-token conditions, evaluated directly.
            std::size_t half = m.size() / 2;
            bool opposites_reverse = true;
            for (std::size_t i = 0; i < half; ++i)
                if (reverse_of(sys, m[i]) != std::optional<std::string>(m[i + half]))
                    opposites_reverse = false;
            bool windows_regular = cls.is_regular;
            bool rotations_orderly = true;
            std::string at = c[0];
            for (std::size_t r = 0; r < m.size() && rotations_orderly; ++r) {
                Message rot(m.begin() + r, m.end());
                rot.insert(rot.end(), m.begin(), m.begin() + r);
                if (!orderly_by_hand(sys, at, rot)) rotations_orderly = false;
                at = apply(sys, at, {m[r]});
            }

            ck.require(opposites_reverse == minimal,
                       name + ": opposite tokens disagree with minimality");
            ck.require(windows_regular == minimal, name + ": regularity disagrees with minimality");
            ck.require(rotations_orderly == minimal,
                       name + ": rotation orderliness disagrees with minimality");

            if (minimal)
                ck.require(cls.is_orderly, name + ": minimal circuit lifted to a non-orderly message");
            if (cls.is_orderly) {
                OppositeReport opp = check_opposite(sys, c[0], m);
                ck.require(opp.opposite_reverses == opposites_reverse &&
                               opp.regular == windows_regular &&
                               opp.rotations_orderly == rotations_orderly &&
                               opp.holds == minimal,
                           name + ": reported conditions disagree with their direct evaluation");
            }
        }
    }
    ck.require(minimal_seen > 0, "no minimal even circuits found");
    ck.require(nonminimal_seen > 0, "no non-minimal even circuits found");
}

// --- criterion 7 ------------------------------------------------------------

void negative_profiles(Checker& ck) {
    {
        Graph g = two_disjoint_edges();
        MediaticReport rep = is_mediatic(g);
        ck.require(!rep.mediatic && !rep.g1_connected && rep.g2_bipartite &&
                       rep.g3_like_transitive,
                   "two components: expected exactly the connectivity condition to fail");
        ck.require(rep.component_witness.has_value(), "two components: no witness");
        if (rep.component_witness)
            ck.require(g.distance(rep.component_witness->first, rep.component_witness->second) ==
                           DistanceTable::kInf,
                       "two components: witness pair is actually connected");
    }
    {
        Graph g = fx::c5();
        MediaticReport rep = is_mediatic(g);
        ck.require(!rep.mediatic && rep.g1_connected && !rep.g2_bipartite &&
                       rep.g3_like_transitive,
                   "pentagon: expected exactly the bipartite condition to fail");
        ck.require(rep.odd_cycle.has_value(), "pentagon: no odd cycle witness");
        if (rep.odd_cycle) {
            const std::vector<std::string>& cyc = *rep.odd_cycle;
            ck.require(cyc.size() % 2 == 1 && cyc.size() >= 3, "pentagon: witness cycle not odd");
            ck.require(std::set<std::string>(cyc.begin(), cyc.end()).size() == cyc.size(),
                       "pentagon: witness cycle repeats a vertex");
            for (std::size_t i = 0; i < cyc.size(); ++i)
                ck.require(g.has_edge(g.vertex_index(cyc[i]),
                                      g.vertex_index(cyc[(i + 1) % cyc.size()])),
                           "pentagon: witness cycle uses a non-edge");
        }
    }
    {
        Graph g = fx::k23();
        MediaticReport rep = is_mediatic(g);
        ck.require(!rep.mediatic && rep.g1_connected && rep.g2_bipartite &&
                       !rep.g3_like_transitive,
                   "k23: expected exactly the transitivity condition to fail");
        ck.require(rep.non_transitive.has_value(), "k23: no transitivity witness");
        if (rep.non_transitive) {
            const auto& [a, b, c] = *rep.non_transitive;
            ck.require(like_related(g, a, b), "k23: first witness pair not like-related");
            ck.require(like_related(g, b, c), "k23: second witness pair not like-related");
            ck.require(!like_related(g, a, c), "k23: witness endpoints are like-related");
        }
    }
}

// --- criterion 8 ------------------------------------------------------------

void family_battery(Checker& ck) {
    for (FamilyKind kind : {FamilyKind::PartialOrder, FamilyKind::IntervalOrder,
                            FamilyKind::Semiorder, FamilyKind::Biorder}) {
        for (int n = 1; n <= 3; ++n) {
            RelationFamily fam = enumerate_family(kind, n);
            std::string tag = family_kind_name(kind) + "/n=" + std::to_string(n);
            ck.require(static_cast<long long>(fam.members.size()) ==
                           testkit::count_family_oracle(kind, n),
                       tag + ": enumerated count differs from the brute-force count");
            ck.require(is_wellgraded(fam).wellgraded, tag + ": family is not well graded");
            if (fam.members.size() >= 2) {
                TokenSystem sys = family_to_medium(fam);
                ck.require(check_medium(sys).is_medium, tag + ": family medium rejected");
                ck.require(is_mediatic(medium_to_graph(sys, MediumCheck::Skip)).mediatic,
                           tag + ": family graph is not mediatic");
            }
        }
    }
}

// --- criterion 9 ------------------------------------------------------------

void isomorphism_battery(Checker& ck) {
    std::mt19937 rng(2024);
    for (const auto& [name, sys] : fixture_media()) {
        for (int trial = 0; trial < 10; ++trial) {
            TokenSystem other = testkit::relabel_medium(sys, rng);
            std::optional<MediaIso> iso = media_isomorphic(sys, other, IsoOptions{16});
            ck.require(iso.has_value(), name + ": relabeled medium not recognized");
            if (iso)
                ck.require(testkit::verify_media_iso(sys, other, *iso),
                           name + ": certificate fails verification");
        }
    }
    ck.require(!media_isomorphic(graph_to_medium(fx::q3()), graph_to_medium(fx::c8()),
                                 IsoOptions{16})
                    .has_value(),
               "cube and octagon media reported isomorphic");
    ck.require(!media_isomorphic(fx::q3_medium(), graph_to_medium(fx::c8()), IsoOptions{16})
                    .has_value(),
               "hand-built cube medium and octagon medium reported isomorphic");
}

struct Entry {
    const char* what;
    void (*fn)(Checker&);
};

const Entry kCriteria[] = {
    {"graph and medium round trips are exact across the corpus", &round_trips},
    {"pair, quad and bounded axiom verdicts agree on media and on 20+ invalid mutants",
     &axiom_equivalence},
    {"state contents obey the half-size and difference laws", &content_laws},
    {"concise messages are geodesic and every shortest path lifts", &shortest_path_correspondence},
    {"the four theta conditions coincide, witnesses are orderly, converse fails",
     &theta_battery},
    {"even circuits satisfy the opposite-token conditions exactly when minimal",
     &regular_return_battery},
    {"negative graphs each fail exactly one condition with a checkable witness",
     &negative_profiles},
    {"family enumeration matches the oracle and yields well-graded media", &family_battery},
    {"relabeled media are certified isomorphic, structurally different media are not",
     &isomorphism_battery},
};

}  // namespace

int main() {
    int failed = 0;
    for (std::size_t i = 0; i < std::size(kCriteria); ++i) {
        Checker ck;
        std::string thrown;
        try {
            kCriteria[i].fn(ck);
        } catch (const std::exception& e) {
            thrown = e.what();
        }
        bool ok = thrown.empty() && ck.failures == 0;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": "
                  << kCriteria[i].what << "\n";
        if (!ok) {
            ++failed;
            if (!thrown.empty()) std::cerr << "  unexpected exception: " << thrown << "\n";
            for (const std::string& note : ck.notes) std::cerr << "  " << note << "\n";
            if (ck.failures > static_cast<int>(ck.notes.size()))
                std::cerr << "  ... and " << ck.failures - static_cast<int>(ck.notes.size())
                          << " further failures\n";
        }
    }
    return failed == 0 ? 0 : 1;
}
