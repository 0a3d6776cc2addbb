#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mediakit {

// A message: token ids applied left to right (the first id acts first).
using Message = std::vector<std::string>;

// Construction input for one token: an id plus the set of moved pairs
// (source, target), source != target. States not listed are fixed points.
struct TokenSpec {
    std::string id;
    std::vector<std::pair<std::string, std::string>> moves;
};

// A finite token system: at least two states, at least one token, every
// token a non-identity total map given sparsely by its moved pairs.
// Immutable after construction; all views are index-based with state and
// token ids held in lexicographic order. The reverse pairing is computed
// at load by transpose-matching the move sets and cached.
class TokenSystem {
public:
    TokenSystem(std::vector<std::string> states, std::vector<TokenSpec> tokens,
                const std::map<std::string, std::string>* declared_reverses = nullptr);

    int state_count() const { return static_cast<int>(states_.size()); }
    int token_count() const { return static_cast<int>(token_ids_.size()); }

    const std::vector<std::string>& states() const { return states_; }
    const std::string& state_name(int s) const { return states_[s]; }
    int state_index(const std::string& name) const;  // InputError if unknown

    const std::string& token_id(int t) const { return token_ids_[t]; }
    int token_index(const std::string& id) const;    // InputError if unknown

    // Moved pairs of token t as state indices, sorted by source.
    const std::vector<std::pair<int, int>>& moves(int t) const { return moves_[t]; }

    // (token, target) pairs for every token that moves state s, sorted by token.
    const std::vector<std::pair<int, int>>& moved_from(int s) const { return moved_from_[s]; }

    // Image of state s under token t (s itself when t fixes s).
    int apply_token(int t, int s) const;

    // Index of the reverse of token t, or -1 when no reverse exists.
    // A token whose move set is its own transpose has no reverse.
    int reverse_index(int t) const { return reverse_[t]; }

private:
    std::vector<std::string> states_;
    std::vector<std::string> token_ids_;
    std::vector<std::vector<std::pair<int, int>>> moves_;       // per token
    std::vector<std::vector<std::pair<int, int>>> moved_from_;  // per state
    std::vector<int> reverse_;
    std::map<std::string, int> state_lookup_;
    std::map<std::string, int> token_lookup_;
};

// Attributes of one message evaluated at one start state.
struct MessageStats {
    int length = 0;
    std::vector<std::string> content;  // distinct token ids, sorted
    bool effective = false;            // final state differs from the start
    bool stepwise_effective = false;   // every step changes the state
    bool consistent = false;           // no token together with its reverse
    bool concise = false;              // stepwise effective + consistent + no repeats
    bool vacuous = false;              // tokens pair off into mutual reverses
    bool is_return = false;            // stepwise effective and back at the start
};

// Applies a nonempty message to a state and returns the resulting state.
std::string apply(const TokenSystem& sys, const std::string& state, const Message& m);

// The unique token whose move set is the transpose of t's, if any.
std::optional<std::string> reverse_of(const TokenSystem& sys, const std::string& token);

// Evaluates all message attributes for a nonempty message at a state.
MessageStats message_stats(const TokenSystem& sys, const std::string& state, const Message& m);

// The reverse message: reversed order, each token replaced by its reverse.
// Every token of m must have one.
Message reverse_message(const TokenSystem& sys, const Message& m);

// --- index-level helpers shared by the heavier modules ---

// Message as token indices; empty allowed internally.
using IndexMessage = std::vector<int>;

int apply_indexed(const TokenSystem& sys, int state, const IndexMessage& m);
Message to_message(const TokenSystem& sys, const IndexMessage& m);
IndexMessage to_indices(const TokenSystem& sys, const Message& m);

// Vacuousness by token counts: every used token has a reverse and occurs
// exactly as often as its reverse does.
bool vacuous_indexed(const TokenSystem& sys, const IndexMessage& m);

}  // namespace mediakit
