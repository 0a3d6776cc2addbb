#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mediakit/errors.hpp"
#include "mediakit/graph.hpp"
#include "mediakit/token_system.hpp"

namespace mediakit {

struct NotMediaticError : PreconditionError {
    NotMediaticError(const std::string& msg, MediaticReport rep)
        : PreconditionError(msg), report(std::move(rep)) {}
    MediaticReport report;
};

// An ordered state pair with no connecting message of the required kind.
struct PairWitness {
    std::string from, to;
};

// A message at a start state, used for return/vacuousness witnesses.
struct MessageWitness {
    std::string start;
    Message msg;
};

// Two consistent stepwise-effective messages that produce the same state
// yet carry a token and its reverse.
struct JointWitness {
    std::string state;             // common produced state
    std::string token_a, token_b;  // the clashing mutual reverses
    MessageWitness a, b;
};

// Axiom evaluations of one token system. Two routes fill this: the
// polynomial graph route (check_medium) and bounded enumeration
// (check_axioms_bounded). is_medium always matches both conjunctions.
struct MediumReport {
    bool is_medium = false;

    bool axiom_ma = false;  // concise message between any two distinct states
    std::optional<PairWitness> ma_witness;
    bool axiom_mb = false;  // every return is vacuous
    std::optional<MessageWitness> mb_witness;

    bool m1 = false;  // every token has a reverse
    std::optional<std::string> m1_witness;  // a token without one
    bool m2 = false;  // consistent message between any two distinct states
    std::optional<PairWitness> m2_witness;
    bool m3 = false;  // stepwise effective: ineffective iff vacuous
    std::optional<MessageWitness> m3_witness;  // non-vacuous return or effective vacuous message
    bool m4 = false;  // messages meeting at a state are jointly consistent
    std::optional<JointWitness> m4_witness;

    // Graph-route diagnostics (set by check_medium only).
    std::optional<MediaticReport> graph;
    std::optional<bool> tokens_match_classes;
    std::optional<std::string> token_class_witness;  // offending token id

    // Enumeration parameters actually used.
    int max_len = 0;
    long long budget = 0;
};

// Decides medium-ness via the graph route: (1) every token has a unique
// reverse, (2) build the adjacency graph, (3) test it mediatic, (4) verify
// the tokens act exactly as the induced likeness-class tokens. Axiom fields
// are all-true on success and otherwise filled by the bounded evaluators at
// max_len = min(2 * states, 12).
MediumReport check_medium(const TokenSystem& sys);

// Bounded-enumeration route: evaluates every axiom over messages of length
// <= max_len (searches are pruned in verdict-preserving ways; see the
// implementation notes). Agrees with check_medium when max_len >= 2 * states.
// budget < 0 picks the default (MEDIA_KIT_MAX_ENUM or 20M nodes).
MediumReport check_axioms_bounded(const TokenSystem& sys, int max_len, long long budget = -1);

// Tokens occurring in some concise message producing the given state:
// exactly one of each reverse pair, chosen by the shorter-distance side.
std::vector<std::string> state_content(const TokenSystem& sys, const std::string& state);

struct CircuitClassification {
    bool is_return = false;
    bool is_orderly = false;
    bool is_regular = false;
    // Split position k with m = q . reverse(n), q = m[0..k), both concise
    // from the start, producing the same other state, q != n as sequences.
    std::optional<int> split = std::nullopt;
    // (i, i+n) index pairs, 0-based, set for even-length messages.
    std::vector<std::pair<int, int>> opposite_pairs;
};

// Classifies a stepwise-effective message on a medium.
CircuitClassification classify_circuit(const TokenSystem& sys, const std::string& state,
                                       const Message& m);

// The four-states/two-tokens configuration of the equivalence theorem.
struct ThetaConfig {
    std::string s, n, q, w;   // four distinct states
    std::string tau, mu;      // N tau = S, W mu = Q
    Message q_msg;            // concise S -> Q
    Message q_prime;          // concise N -> Q
    Message w_msg;            // concise N -> W
    Message w_prime;          // concise S -> W
};

struct ThetaReport {
    bool cond_i = false;    // length sums differ and mu != reverse(tau)
    bool cond_ii = false;   // tau == mu
    bool cond_iii = false;  // same content and length of q and w
    bool cond_iv = false;   // len q + len w + 2 == len q' + len w'
    bool holds = false;     // the common value of the four conditions
    std::optional<Message> orderly_witness;  // q . mu~ . w~ . tau, verified orderly
};

// Evaluates the four equivalent conditions; they must agree on a medium
// (InternalError otherwise) and, when true, the witness circuit is built
// and verified to be orderly with S q mu~ = S tau~ w = W.
ThetaReport check_theta(const TokenSystem& sys, const ThetaConfig& cfg);

struct OppositeReport {
    bool opposite_reverses = false;   // each opposite pair mutually reverse
    bool regular = false;             // first n half-length windows all concise
    bool rotations_orderly = false;   // every rotation is an orderly return
    bool holds = false;               // the common value
};

// Evaluates the three equivalent conditions on an orderly return
// (PreconditionError when m is not one; InternalError if they disagree).
OppositeReport check_opposite(const TokenSystem& sys, const std::string& state, const Message& m);

// Default node budget for bounded enumerations; MEDIA_KIT_MAX_ENUM overrides.
long long default_enum_budget();

}  // namespace mediakit
