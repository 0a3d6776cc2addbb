#include "mediakit/medium.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>

#include "mediakit/convert.hpp"
#include "mediakit/errors.hpp"

namespace mediakit {

long long default_enum_budget() {
    static const long long value = [] {
        if (const char* env = std::getenv("MEDIA_KIT_MAX_ENUM")) {
            char* end = nullptr;
            long long v = std::strtoll(env, &end, 10);
            if (end && *end == '\0' && v > 0) return v;
            throw InputError("MEDIA_KIT_MAX_ENUM must be a positive integer");
        }
        return 20'000'000LL;
    }();
    return value;
}

namespace {

// Bounded evaluation of the message axioms. Every search honours max_len,
// and each uses a pruning that provably never changes the verdict:
//  - the pair axioms only ever need concise (resp. consistent vertex-simple)
//    messages, because any witness shortens to one;
//  - the return axiom only needs closed walks whose interior states are
//    distinct: a non-vacuous return always contains a non-vacuous return of
//    that shape, since vacuousness is per-reverse-pair count balance and
//    counts split across a loop excision;
//  - the joint-consistency axiom needs messages no longer than twice the
//    state count, because each half of a violating pair shortens around the
//    step that carries the clashing token.
struct AxiomEngine {
    const TokenSystem& sys;
    int max_len;
    long long budget;

    int n_states;
    int n_tokens;

    bool ma = true;
    std::optional<PairWitness> ma_witness;
    bool mb = true;
    std::optional<MessageWitness> mb_witness;
    bool m2 = true;
    std::optional<PairWitness> m2_witness;
    bool m3 = true;
    std::optional<MessageWitness> m3_witness;
    bool m4 = true;
    std::optional<JointWitness> m4_witness;

    AxiomEngine(const TokenSystem& s, int len, long long b)
        : sys(s), max_len(len), budget(b), n_states(s.state_count()), n_tokens(s.token_count()) {
        if (max_len < 2) throw InputError("enumeration bound must be at least 2");
        if (n_tokens > 64)
            throw InputError("bounded axiom enumeration supports at most 64 tokens");
    }

    void spend() {
        if (--budget < 0)
            throw BudgetError("axiom enumeration exceeded its node budget; "
                              "raise MEDIA_KIT_MAX_ENUM to continue");
    }

    bool has_reverse_conflict(std::uint64_t used, int tok) const {
        int r = sys.reverse_index(tok);
        return r >= 0 && (used >> r) & 1;
    }

    // --- concise reachability (pair axiom on concise messages) ---

    void run_concise() {
        std::vector<char> reach(n_states * n_states, 0);
        IndexMessage path;
        std::function<void(int, int, std::uint64_t)> dfs = [&](int start, int cur,
                                                               std::uint64_t used) {
            if (static_cast<int>(path.size()) >= max_len) return;
            for (const auto& [tok, next] : sys.moved_from(cur)) {
                if ((used >> tok) & 1 || has_reverse_conflict(used, tok)) continue;
                spend();
                reach[start * n_states + next] = 1;
                path.push_back(tok);
                dfs(start, next, used | (1ULL << tok));
                path.pop_back();
            }
        };
        for (int s = 0; s < n_states; ++s) dfs(s, s, 0);
        for (int s = 0; s < n_states && ma; ++s)
            for (int v = 0; v < n_states; ++v)
                if (s != v && !reach[s * n_states + v]) {
                    ma = false;
                    ma_witness = PairWitness{sys.state_name(s), sys.state_name(v)};
                    break;
                }
    }

    // --- consistent vertex-simple reachability (pair axiom, repeats allowed) ---

    void run_consistent_simple() {
        std::vector<char> reach(n_states * n_states, 0);
        std::vector<char> on_path(n_states, 0);
        std::function<void(int, int, std::uint64_t, int)> dfs =
            [&](int start, int cur, std::uint64_t used, int depth) {
                if (depth >= max_len) return;
                for (const auto& [tok, next] : sys.moved_from(cur)) {
                    if (on_path[next] || has_reverse_conflict(used, tok)) continue;
                    spend();
                    reach[start * n_states + next] = 1;
                    on_path[next] = 1;
                    dfs(start, next, used | (1ULL << tok), depth + 1);
                    on_path[next] = 0;
                }
            };
        for (int s = 0; s < n_states; ++s) {
            on_path.assign(n_states, 0);
            on_path[s] = 1;
            dfs(s, s, 0, 0);
        }
        for (int s = 0; s < n_states && m2; ++s)
            for (int v = 0; v < n_states; ++v)
                if (s != v && !reach[s * n_states + v]) {
                    m2 = false;
                    m2_witness = PairWitness{sys.state_name(s), sys.state_name(v)};
                    break;
                }
    }

    // --- returns with distinct interior states (return axiom) ---

    void run_returns() {
        IndexMessage msg;
        std::vector<char> on_path(n_states, 0);
        std::function<void(int, int)> dfs = [&](int start, int cur) {
            for (const auto& [tok, next] : sys.moved_from(cur)) {
                if (static_cast<int>(msg.size()) + 1 > max_len) return;
                spend();
                if (next == start) {
                    if (msg.empty()) continue;  // a token never fixes its own source
                    msg.push_back(tok);
                    if (!vacuous_indexed(sys, msg) && mb) {
                        mb = false;
                        mb_witness = MessageWitness{sys.state_name(start), to_message(sys, msg)};
                    }
                    msg.pop_back();
                    continue;
                }
                if (next < start || on_path[next]) continue;
                msg.push_back(tok);
                on_path[next] = 1;
                dfs(start, next);
                on_path[next] = 0;
                msg.pop_back();
            }
        };
        for (int s = 0; s < n_states && mb; ++s) {
            msg.clear();
            on_path.assign(n_states, 0);
            on_path[s] = 1;
            dfs(s, s);
        }
    }

    // --- vacuous vertex-simple messages must not move the state ---

    void run_vacuous_effective() {
        if (!mb) {
            // When some return is non-vacuous the biconditional already
            // fails; reuse that witness.
            m3 = false;
            m3_witness = mb_witness;
            return;
        }
        IndexMessage msg;
        std::vector<char> on_path(n_states, 0);
        bool done = false;
        std::function<void(int, int)> dfs = [&](int start, int cur) {
            if (done || static_cast<int>(msg.size()) >= max_len) return;
            for (const auto& [tok, next] : sys.moved_from(cur)) {
                if (done) return;
                if (next == start || on_path[next]) continue;
                spend();
                msg.push_back(tok);
                if (vacuous_indexed(sys, msg)) {
                    m3 = false;
                    m3_witness = MessageWitness{sys.state_name(start), to_message(sys, msg)};
                    done = true;
                }
                on_path[next] = 1;
                dfs(start, next);
                on_path[next] = 0;
                msg.pop_back();
            }
        };
        for (int s = 0; s < n_states && !done; ++s) {
            msg.clear();
            on_path.assign(n_states, 0);
            on_path[s] = 1;
            dfs(s, s);
        }
    }

    // --- joint consistency of consistent messages meeting at a state ---

    void run_joint() {
        // seen[w] accumulates every token carried by some consistent
        // stepwise-effective message that produces w.
        std::vector<std::uint64_t> seen(n_states, 0);
        std::function<void(int, int, std::uint64_t, int)> dfs =
            [&](int start, int cur, std::uint64_t used, int depth) {
                if (depth >= max_len) return;
                for (const auto& [tok, next] : sys.moved_from(cur)) {
                    if (has_reverse_conflict(used, tok)) continue;
                    spend();
                    std::uint64_t now = used | (1ULL << tok);
                    seen[next] |= now;
                    dfs(start, next, now, depth + 1);
                }
            };
        for (int s = 0; s < n_states; ++s) dfs(s, s, 0, 0);

        for (int w = 0; w < n_states && m4; ++w)
            for (int t = 0; t < n_tokens; ++t) {
                int r = sys.reverse_index(t);
                if (r <= t) continue;  // each pair once; reverseless never clash
                if (((seen[w] >> t) & 1) && ((seen[w] >> r) & 1)) {
                    m4 = false;
                    m4_witness = JointWitness{sys.state_name(w), sys.token_id(t), sys.token_id(r),
                                              find_carrier(w, t), find_carrier(w, r)};
                    break;
                }
            }
    }

    // First consistent stepwise-effective message producing state w that
    // carries token want; only called after run_joint saw one.
    MessageWitness find_carrier(int w, int want) {
        MessageWitness out;
        IndexMessage msg;
        bool done = false;
        std::function<void(int, int, std::uint64_t, int)> dfs =
            [&](int start, int cur, std::uint64_t used, int depth) {
                if (done || depth >= max_len) return;
                for (const auto& [tok, next] : sys.moved_from(cur)) {
                    if (done) return;
                    if (has_reverse_conflict(used, tok)) continue;
                    spend();
                    std::uint64_t now = used | (1ULL << tok);
                    msg.push_back(tok);
                    if (next == w && ((now >> want) & 1)) {
                        out = MessageWitness{sys.state_name(start), to_message(sys, msg)};
                        done = true;
                    } else {
                        dfs(start, next, now, depth + 1);
                    }
                    msg.pop_back();
                }
            };
        for (int s = 0; s < n_states && !done; ++s) dfs(s, s, 0, 0);
        if (!done) throw InternalError("joint-consistency witness vanished on re-scan");
        return out;
    }

    void run() {
        run_concise();
        run_returns();
        run_consistent_simple();
        run_vacuous_effective();
        run_joint();
    }
};

}  // namespace

MediumReport check_axioms_bounded(const TokenSystem& sys, int max_len, long long budget) {
    if (budget < 0) budget = default_enum_budget();
    MediumReport rep;
    rep.max_len = max_len;
    rep.budget = budget;

    rep.m1 = true;
    for (int t = 0; t < sys.token_count(); ++t)
        if (sys.reverse_index(t) < 0) {
            rep.m1 = false;
            rep.m1_witness = sys.token_id(t);
            break;
        }

    AxiomEngine engine(sys, max_len, budget);
    engine.run();
    rep.axiom_ma = engine.ma;
    rep.ma_witness = engine.ma_witness;
    rep.axiom_mb = engine.mb;
    rep.mb_witness = engine.mb_witness;
    rep.m2 = engine.m2;
    rep.m2_witness = engine.m2_witness;
    rep.m3 = engine.m3;
    rep.m3_witness = engine.m3_witness;
    rep.m4 = engine.m4;
    rep.m4_witness = engine.m4_witness;

    rep.is_medium = rep.axiom_ma && rep.axiom_mb;
    return rep;
}

MediumReport check_medium(const TokenSystem& sys) {
    MediumReport rep;
    rep.max_len = std::min(2 * sys.state_count(), 12);
    rep.budget = default_enum_budget();

    rep.m1 = true;
    for (int t = 0; t < sys.token_count(); ++t)
        if (sys.reverse_index(t) < 0) {
            rep.m1 = false;
            rep.m1_witness = sys.token_id(t);
            break;
        }

    Graph g = medium_to_graph(sys, MediumCheck::Skip);
    rep.graph = is_mediatic(g);

    bool tokens_ok = false;
    if (rep.graph->mediatic) {
        tokens_ok = true;
        LikePartitionResult part = like_partition(g);
        const LikePartition& classes = *part.partition;
        // Each token must act exactly as the token of its own arc class.
        for (int t = 0; t < sys.token_count() && tokens_ok; ++t) {
            const auto& mv = sys.moves(t);
            int cls = classes.class_of_arc[g.arc_index(mv[0].first, mv[0].second)];
            std::vector<std::pair<int, int>> class_action;
            for (const Arc& a : classes.classes[cls])
                class_action.emplace_back(g.vertex_index(a.source), g.vertex_index(a.target));
            std::sort(class_action.begin(), class_action.end());
            if (class_action != mv) {
                tokens_ok = false;
                rep.token_class_witness = sys.token_id(t);
            }
        }
        if (tokens_ok &&
            static_cast<int>(classes.classes.size()) != sys.token_count()) {
            tokens_ok = false;
            rep.token_class_witness = "token count differs from likeness class count";
        }
    }
    rep.tokens_match_classes = tokens_ok;

    rep.is_medium = rep.m1 && rep.graph->mediatic && tokens_ok;
    if (rep.is_medium) {
        rep.axiom_ma = rep.axiom_mb = rep.m2 = rep.m3 = rep.m4 = true;
        return rep;
    }

    AxiomEngine engine(sys, rep.max_len, rep.budget);
    engine.run();
    rep.axiom_ma = engine.ma;
    rep.ma_witness = engine.ma_witness;
    rep.axiom_mb = engine.mb;
    rep.mb_witness = engine.mb_witness;
    rep.m2 = engine.m2;
    rep.m2_witness = engine.m2_witness;
    rep.m3 = engine.m3;
    rep.m3_witness = engine.m3_witness;
    rep.m4 = engine.m4;
    rep.m4_witness = engine.m4_witness;
    return rep;
}

std::vector<std::string> state_content(const TokenSystem& sys, const std::string& state) {
    if (!check_medium(sys).is_medium)
        throw PreconditionError("state_content requires a medium");
    Graph g = medium_to_graph(sys, MediumCheck::Skip);
    int s = sys.state_index(state);
    const auto& d = g.distances();

    std::vector<std::string> content;
    for (int t = 0; t < sys.token_count(); ++t) {
        int r = sys.reverse_index(t);
        // Exactly one of each reverse pair belongs: the one whose arcs point
        // toward the state (strictly shrinking the distance).
        const auto& [a, b] = sys.moves(t)[0];
        if (d.at(s, b) < d.at(s, a)) {
            content.push_back(sys.token_id(t));
        } else if (r < 0) {
            throw InternalError("medium token without reverse in content scan");
        }
    }
    std::sort(content.begin(), content.end());
    return content;
}

namespace {

// Conciseness of an index message at a start, on a validated medium.
bool concise_at(const TokenSystem& sys, int start, const IndexMessage& m) {
    if (m.empty()) return false;
    std::set<int> used;
    int cur = start;
    for (int t : m) {
        int next = sys.apply_token(t, cur);
        if (next == cur) return false;
        cur = next;
        if (!used.insert(t).second) return false;
        int r = sys.reverse_index(t);
        if (r >= 0 && used.count(r)) return false;
    }
    return true;
}

CircuitClassification classify_indexed(const TokenSystem& sys, int start, const IndexMessage& m) {
    CircuitClassification out;
    int len = static_cast<int>(m.size());

    int cur = start;
    for (int t : m) {
        int next = sys.apply_token(t, cur);
        if (next == cur)
            throw PreconditionError("message is not stepwise effective for the state");
        cur = next;
    }
    out.is_return = (cur == start);

    if (len % 2 == 0) {
        int half = len / 2;
        for (int i = 0; i < half; ++i) out.opposite_pairs.emplace_back(i, i + half);
    }

    for (int k = 1; k < len && !out.is_orderly; ++k) {
        IndexMessage q(m.begin(), m.begin() + k);
        IndexMessage n;
        for (int i = len - 1; i >= k; --i) {
            int r = sys.reverse_index(m[i]);
            if (r < 0) throw PreconditionError("token without reverse in a medium message");
            n.push_back(r);
        }
        if (q == n) continue;  // the two concise halves must differ
        if (!concise_at(sys, start, q) || !concise_at(sys, start, n)) continue;
        int vq = apply_indexed(sys, start, q);
        int vn = apply_indexed(sys, start, n);
        if (vq != vn || vq == start) continue;
        out.is_orderly = true;
        out.split = k;
    }

    if (out.is_orderly && len % 2 == 0) {
        int half = len / 2;
        bool regular = true;
        int st = start;
        for (int i = 0; i < half && regular; ++i) {
            IndexMessage window(m.begin() + i, m.begin() + i + half);
            if (!concise_at(sys, st, window)) regular = false;
            st = sys.apply_token(m[i], st);
        }
        out.is_regular = regular;
    }
    return out;
}

void require_medium(const TokenSystem& sys, const char* op) {
    if (!check_medium(sys).is_medium)
        throw PreconditionError(std::string(op) + " requires a medium");
}

}  // namespace

CircuitClassification classify_circuit(const TokenSystem& sys, const std::string& state,
                                       const Message& m) {
    if (m.empty()) throw InputError("message must be nonempty");
    require_medium(sys, "classify_circuit");
    return classify_indexed(sys, sys.state_index(state), to_indices(sys, m));
}

ThetaReport check_theta(const TokenSystem& sys, const ThetaConfig& cfg) {
    require_medium(sys, "check_theta");

    int S = sys.state_index(cfg.s);
    int N = sys.state_index(cfg.n);
    int Q = sys.state_index(cfg.q);
    int W = sys.state_index(cfg.w);
    if (S == N || S == Q || S == W || N == Q || N == W || Q == W)
        throw PreconditionError("theta configuration needs four distinct states");

    int tau = sys.token_index(cfg.tau);
    int mu = sys.token_index(cfg.mu);
    if (sys.apply_token(tau, N) != S)
        throw PreconditionError("tau must carry N to S");
    if (sys.apply_token(mu, W) != Q)
        throw PreconditionError("mu must carry W to Q");

    auto check_msg = [&](const Message& msg, int from, int to, const char* which) {
        IndexMessage idx = to_indices(sys, msg);
        if (!concise_at(sys, from, idx))
            throw PreconditionError(std::string(which) + " must be concise for its start state");
        if (apply_indexed(sys, from, idx) != to)
            throw PreconditionError(std::string(which) + " must produce the required state");
        return idx;
    };
    IndexMessage q_msg = check_msg(cfg.q_msg, S, Q, "q");
    IndexMessage q_prime = check_msg(cfg.q_prime, N, Q, "q'");
    IndexMessage w_msg = check_msg(cfg.w_msg, N, W, "w");
    IndexMessage w_prime = check_msg(cfg.w_prime, S, W, "w'");

    int lq = static_cast<int>(q_msg.size());
    int lw = static_cast<int>(w_msg.size());
    int lq2 = static_cast<int>(q_prime.size());
    int lw2 = static_cast<int>(w_prime.size());

    ThetaReport rep;
    int tau_rev = sys.reverse_index(tau);
    int mu_rev = sys.reverse_index(mu);
    if (tau_rev < 0 || mu_rev < 0)
        throw InternalError("medium token without reverse in theta evaluation");

    rep.cond_i = (lq + lw != lq2 + lw2) && mu != tau_rev;
    rep.cond_ii = (tau == mu);
    std::set<int> cq(q_msg.begin(), q_msg.end());
    std::set<int> cw(w_msg.begin(), w_msg.end());
    rep.cond_iii = (cq == cw) && lq == lw;
    rep.cond_iv = (lq + lw + 2 == lq2 + lw2);

    if (rep.cond_i != rep.cond_ii || rep.cond_ii != rep.cond_iii || rep.cond_iii != rep.cond_iv)
        throw InternalError("theta conditions disagree on a verified medium");
    rep.holds = rep.cond_ii;

    if (rep.holds) {
        IndexMessage circuit(q_msg);
        circuit.push_back(mu_rev);
        for (auto it = w_msg.rbegin(); it != w_msg.rend(); ++it) {
            int r = sys.reverse_index(*it);
            if (r < 0) throw InternalError("medium token without reverse in theta witness");
            circuit.push_back(r);
        }
        circuit.push_back(tau);

        IndexMessage q_mu(q_msg);
        q_mu.push_back(mu_rev);
        if (apply_indexed(sys, S, q_mu) != W)
            throw InternalError("theta witness does not pass through W as required");
        CircuitClassification cls = classify_indexed(sys, S, circuit);
        if (!cls.is_return || !cls.is_orderly)
            throw InternalError("theta witness failed orderliness verification");
        rep.orderly_witness = to_message(sys, circuit);
    }
    return rep;
}

OppositeReport check_opposite(const TokenSystem& sys, const std::string& state, const Message& m) {
    if (m.empty()) throw InputError("message must be nonempty");
    require_medium(sys, "check_opposite");
    int start = sys.state_index(state);
    IndexMessage idx = to_indices(sys, m);

    CircuitClassification cls = classify_indexed(sys, start, idx);
    if (!cls.is_return || !cls.is_orderly)
        throw PreconditionError("check_opposite requires an orderly return");

    int len = static_cast<int>(idx.size());
    int half = len / 2;

    OppositeReport rep;
    rep.opposite_reverses = true;
    for (int i = 0; i < half; ++i)
        if (sys.reverse_index(idx[i]) != idx[i + half]) {
            rep.opposite_reverses = false;
            break;
        }

    rep.regular = cls.is_regular;

    rep.rotations_orderly = true;
    int st = start;
    for (int i = 0; i < len && rep.rotations_orderly; ++i) {
        if (i > 0) {
            IndexMessage rot(idx.begin() + i, idx.end());
            rot.insert(rot.end(), idx.begin(), idx.begin() + i);
            if (!classify_indexed(sys, st, rot).is_orderly) rep.rotations_orderly = false;
        }
        st = sys.apply_token(idx[i], st);
    }

    if (rep.opposite_reverses != rep.regular || rep.regular != rep.rotations_orderly)
        throw InternalError("opposite-token conditions disagree on a verified medium");
    rep.holds = rep.regular;
    return rep;
}

}  // namespace mediakit
