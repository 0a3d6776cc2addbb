#include "mediakit/token_system.hpp"

#include <algorithm>
#include <set>

#include "mediakit/errors.hpp"

namespace mediakit {

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

TokenSystem::TokenSystem(std::vector<std::string> states, std::vector<TokenSpec> tokens,
                         const std::map<std::string, std::string>* declared_reverses) {
    if (states.size() < 2) throw InputError("token system needs at least 2 states");
    if (tokens.empty()) throw InputError("token system needs at least 1 token");

    std::sort(states.begin(), states.end());
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i].empty()) throw InputError("state names must be nonempty");
        if (i > 0 && states[i] == states[i - 1])
            throw InputError("duplicate state name " + quoted(states[i]));
    }
    states_ = std::move(states);
    for (int i = 0; i < state_count(); ++i) state_lookup_[states_[i]] = i;

    std::sort(tokens.begin(), tokens.end(),
              [](const TokenSpec& a, const TokenSpec& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i].id.empty()) throw InputError("token ids must be nonempty");
        if (i > 0 && tokens[i].id == tokens[i - 1].id)
            throw InputError("duplicate token id " + quoted(tokens[i].id));
    }

    moved_from_.resize(state_count());
    for (const TokenSpec& spec : tokens) {
        std::vector<std::pair<int, int>> mv;
        for (const auto& [from, to] : spec.moves) {
            auto fi = state_lookup_.find(from);
            auto ti = state_lookup_.find(to);
            if (fi == state_lookup_.end() || ti == state_lookup_.end())
                throw InputError("token " + quoted(spec.id) + " moves unknown state");
            if (fi->second == ti->second)
                throw InputError("token " + quoted(spec.id) + " lists a fixed point as a move");
            mv.emplace_back(fi->second, ti->second);
        }
        if (mv.empty())
            throw InputError("token " + quoted(spec.id) + " is the identity map");
        std::sort(mv.begin(), mv.end());
        for (std::size_t i = 1; i < mv.size(); ++i)
            if (mv[i].first == mv[i - 1].first)
                throw InputError("token " + quoted(spec.id) + " moves state " +
                                 quoted(states_[mv[i].first]) + " twice");
        int t = static_cast<int>(token_ids_.size());
        token_ids_.push_back(spec.id);
        token_lookup_[spec.id] = t;
        for (const auto& [from, to] : mv) moved_from_[from].emplace_back(t, to);
        moves_.push_back(std::move(mv));
    }
    for (auto& lst : moved_from_) std::sort(lst.begin(), lst.end());

    // Reverse pairing by transpose matching. Two tokens with one action would
    // make the pairing ambiguous, so that is rejected outright.
    std::map<std::vector<std::pair<int, int>>, int> by_action;
    for (int t = 0; t < token_count(); ++t) {
        auto [it, fresh] = by_action.emplace(moves_[t], t);
        if (!fresh)
            throw MalformedSystemError("tokens " + quoted(token_ids_[it->second]) + " and " +
                                       quoted(token_ids_[t]) +
                                       " share one action; reverse uniqueness violated");
    }
    reverse_.assign(token_count(), -1);
    for (int t = 0; t < token_count(); ++t) {
        std::vector<std::pair<int, int>> transpose;
        transpose.reserve(moves_[t].size());
        for (const auto& [from, to] : moves_[t]) transpose.emplace_back(to, from);
        std::sort(transpose.begin(), transpose.end());
        auto it = by_action.find(transpose);
        if (it != by_action.end() && it->second != t) reverse_[t] = it->second;
    }

    if (declared_reverses) {
        for (const auto& [a, b] : *declared_reverses) {
            auto ai = token_lookup_.find(a);
            auto bi = token_lookup_.find(b);
            if (ai == token_lookup_.end() || bi == token_lookup_.end())
                throw InputError("reverses entry names unknown token " + quoted(a) + " or " +
                                 quoted(b));
            if (reverse_[ai->second] != bi->second)
                throw InputError("reverses entry " + quoted(a) + " -> " + quoted(b) +
                                 " contradicts the computed pairing");
        }
    }
}

int TokenSystem::state_index(const std::string& name) const {
    auto it = state_lookup_.find(name);
    if (it == state_lookup_.end()) throw InputError("unknown state " + quoted(name));
    return it->second;
}

int TokenSystem::token_index(const std::string& id) const {
    auto it = token_lookup_.find(id);
    if (it == token_lookup_.end()) throw InputError("unknown token " + quoted(id));
    return it->second;
}

int TokenSystem::apply_token(int t, int s) const {
    const auto& mv = moves_[t];
    auto it = std::lower_bound(mv.begin(), mv.end(), std::make_pair(s, 0));
    if (it != mv.end() && it->first == s) return it->second;
    return s;
}

int apply_indexed(const TokenSystem& sys, int state, const IndexMessage& m) {
    for (int t : m) state = sys.apply_token(t, state);
    return state;
}

Message to_message(const TokenSystem& sys, const IndexMessage& m) {
    Message out;
    out.reserve(m.size());
    for (int t : m) out.push_back(sys.token_id(t));
    return out;
}

IndexMessage to_indices(const TokenSystem& sys, const Message& m) {
    IndexMessage out;
    out.reserve(m.size());
    for (const std::string& id : m) out.push_back(sys.token_index(id));
    return out;
}

bool vacuous_indexed(const TokenSystem& sys, const IndexMessage& m) {
    if (m.size() % 2 != 0) return false;
    std::vector<int> count(sys.token_count(), 0);
    for (int t : m) ++count[t];
    for (int t : m) {
        int r = sys.reverse_index(t);
        if (r < 0 || count[t] != count[r]) return false;
    }
    return true;
}

std::string apply(const TokenSystem& sys, const std::string& state, const Message& m) {
    if (m.empty()) throw InputError("message must be nonempty");
    return sys.state_name(apply_indexed(sys, sys.state_index(state), to_indices(sys, m)));
}

std::optional<std::string> reverse_of(const TokenSystem& sys, const std::string& token) {
    int r = sys.reverse_index(sys.token_index(token));
    if (r < 0) return std::nullopt;
    return sys.token_id(r);
}

MessageStats message_stats(const TokenSystem& sys, const std::string& state, const Message& m) {
    if (m.empty()) throw InputError("message must be nonempty");
    IndexMessage idx = to_indices(sys, m);
    int start = sys.state_index(state);

    MessageStats st;
    st.length = static_cast<int>(idx.size());

    std::set<int> used(idx.begin(), idx.end());
    for (int t : used) st.content.push_back(sys.token_id(t));
    std::sort(st.content.begin(), st.content.end());

    st.stepwise_effective = true;
    int cur = start;
    for (int t : idx) {
        int next = sys.apply_token(t, cur);
        if (next == cur) st.stepwise_effective = false;
        cur = next;
    }
    st.effective = (cur != start);
    st.is_return = st.stepwise_effective && cur == start;

    st.consistent = true;
    for (int t : used) {
        int r = sys.reverse_index(t);
        if (r >= 0 && used.count(r)) { st.consistent = false; break; }
    }
    st.concise = st.stepwise_effective && st.consistent && used.size() == idx.size();
    st.vacuous = vacuous_indexed(sys, idx);
    return st;
}

Message reverse_message(const TokenSystem& sys, const Message& m) {
    if (m.empty()) throw InputError("message must be nonempty");
    IndexMessage idx = to_indices(sys, m);
    Message out;
    out.reserve(idx.size());
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
        int r = sys.reverse_index(*it);
        if (r < 0)
            throw MalformedSystemError("token " + sys.token_id(*it) +
                                       " has no reverse; message cannot be reversed");
        out.push_back(sys.token_id(r));
    }
    return out;
}

}  // namespace mediakit
