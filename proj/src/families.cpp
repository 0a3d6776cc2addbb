#include "mediakit/families.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "mediakit/errors.hpp"

namespace mediakit {

std::string family_kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::PartialOrder: return "partial-order";
        case FamilyKind::IntervalOrder: return "interval-order";
        case FamilyKind::Semiorder: return "semiorder";
        case FamilyKind::Biorder: return "biorder";
        case FamilyKind::Custom: return "custom";
    }
    throw InternalError("unhandled family kind");
}

FamilyKind family_kind_from_name(const std::string& name) {
    if (name == "partial-order") return FamilyKind::PartialOrder;
    if (name == "interval-order") return FamilyKind::IntervalOrder;
    if (name == "semiorder") return FamilyKind::Semiorder;
    if (name == "biorder") return FamilyKind::Biorder;
    if (name == "custom") return FamilyKind::Custom;
    throw InputError("unknown family kind: " + name);
}

std::string member_name(const Relation& r) {
    std::string out = "{";
    bool first = true;
    for (const auto& [a, b] : r.pairs) {
        if (!first) out += ",";
        first = false;
        out += a + b;
    }
    return out + "}";
}

namespace {

bool canonical_less(const Relation& x, const Relation& y) {
    if (x.pairs.size() != y.pairs.size()) return x.pairs.size() < y.pairs.size();
    return x.pairs < y.pairs;
}

// Predicates over a relation encoded as a bitmask on n x n ordered pairs.
struct MaskPredicates {
    int n;
    bool has(unsigned mask, int i, int j) const { return (mask >> (i * n + j)) & 1u; }

    bool irreflexive(unsigned mask) const {
        for (int i = 0; i < n; ++i)
            if (has(mask, i, i)) return false;
        return true;
    }
    bool transitive(unsigned mask) const {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    if (has(mask, i, j) && has(mask, j, k) && !has(mask, i, k)) return false;
        return true;
    }
    // a K b and c K d imply a K d or c K b.
    bool ferrers(unsigned mask) const {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (!has(mask, a, b)) continue;
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < n; ++d)
                        if (has(mask, c, d) && !has(mask, a, d) && !has(mask, c, b))
                            return false;
            }
        return true;
    }
    // a K b and b K c imply a K d or d K c.
    bool semitransitive(unsigned mask) const {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (!has(mask, a, b)) continue;
                for (int c = 0; c < n; ++c) {
                    if (!has(mask, b, c)) continue;
                    for (int d = 0; d < n; ++d)
                        if (!has(mask, a, d) && !has(mask, d, c)) return false;
                }
            }
        return true;
    }
};

std::size_t sym_diff_size(const Relation& x, const Relation& y) {
    std::size_t common = 0;
    for (const auto& p : x.pairs) common += y.pairs.count(p);
    return x.pairs.size() + y.pairs.size() - 2 * common;
}

}  // namespace

RelationFamily enumerate_family(FamilyKind kind, int n) {
    if (kind == FamilyKind::Custom)
        throw InputError("custom families are loaded from explicit member lists, not generated");
    if (n < 1 || n > 4) throw InputError("family ground size must be between 1 and 4");

    const std::vector<std::string> letters{"a", "b", "c", "d"};
    RelationFamily fam;
    fam.kind = kind;
    fam.ground.assign(letters.begin(), letters.begin() + n);

    MaskPredicates pred{n};
    unsigned top = 1u << (n * n);
    for (unsigned mask = 0; mask < top; ++mask) {
        bool keep = false;
        switch (kind) {
            case FamilyKind::PartialOrder:
                keep = pred.irreflexive(mask) && pred.transitive(mask);
                break;
            case FamilyKind::IntervalOrder:
                keep = pred.irreflexive(mask) && pred.ferrers(mask);
                break;
            case FamilyKind::Semiorder:
                keep = pred.irreflexive(mask) && pred.ferrers(mask) && pred.semitransitive(mask);
                break;
            case FamilyKind::Biorder:
                keep = pred.ferrers(mask);
                break;
            case FamilyKind::Custom:
                break;
        }
        if (!keep) continue;
        Relation r;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (pred.has(mask, i, j)) r.pairs.insert({letters[i], letters[j]});
        fam.members.push_back(std::move(r));
    }
    std::sort(fam.members.begin(), fam.members.end(), canonical_less);
    return fam;
}

WellgradedReport is_wellgraded(const RelationFamily& f) {
    if (f.members.empty()) throw InputError("family needs at least one member");
    std::set<std::string> ground(f.ground.begin(), f.ground.end());
    for (const Relation& r : f.members)
        for (const auto& [a, b] : r.pairs)
            if (!ground.count(a) || !ground.count(b))
                throw InputError("member pair " + a + b + " uses an element outside the ground set");

    int m = static_cast<int>(f.members.size());
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return canonical_less(f.members[x], f.members[y]); });
    for (int i = 0; i + 1 < m; ++i)
        if (f.members[order[i]].pairs == f.members[order[i + 1]].pairs)
            throw InputError("family repeats the member " + member_name(f.members[order[i]]));

    std::vector<std::vector<int>> diff(m, std::vector<int>(m, 0));
    std::vector<std::vector<int>> adj(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            diff[i][j] = diff[j][i] = static_cast<int>(sym_diff_size(f.members[i], f.members[j]));
            if (diff[i][j] == 1) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }

    WellgradedReport rep;
    rep.wellgraded = true;
    std::vector<int> dist(m);
    for (int oi = 0; oi < m && rep.wellgraded; ++oi) {
        int i = order[oi];
        dist.assign(m, -1);
        dist[i] = 0;
        std::queue<int> q;
        q.push(i);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v])
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
        }
        for (int oj = oi + 1; oj < m; ++oj) {
            int j = order[oj];
            if (dist[j] != diff[i][j]) {
                rep.wellgraded = false;
                rep.witness = {member_name(f.members[i]), member_name(f.members[j])};
                break;
            }
        }
    }
    return rep;
}

TokenSystem family_to_medium(const RelationFamily& f) {
    WellgradedReport wg = is_wellgraded(f);
    if (!wg.wellgraded)
        throw PreconditionError("family is not well graded: distance between " +
                                wg.witness->first + " and " + wg.witness->second +
                                " exceeds their symmetric difference");
    if (f.members.size() < 2)
        throw PreconditionError("family medium needs at least two members");

    std::map<std::set<std::pair<std::string, std::string>>, std::string> name_of;
    std::vector<std::string> states;
    for (const Relation& r : f.members) {
        states.push_back(member_name(r));
        name_of.emplace(r.pairs, states.back());
    }

    // Pairs that occur in some member and are missing from another.
    std::set<std::pair<std::string, std::string>> varying;
    for (const Relation& r : f.members)
        for (const auto& p : r.pairs)
            for (const Relation& other : f.members)
                if (!other.pairs.count(p)) {
                    varying.insert(p);
                    break;
                }

    std::vector<TokenSpec> tokens;
    std::map<std::string, std::string> reverses;
    for (const auto& p : varying) {
        std::string pkey = p.first + p.second;
        TokenSpec add{"add_" + pkey, {}};
        TokenSpec remove{"remove_" + pkey, {}};
        for (const Relation& r : f.members) {
            if (r.pairs.count(p)) continue;
            auto bigger = r.pairs;
            bigger.insert(p);
            auto it = name_of.find(bigger);
            if (it == name_of.end()) continue;
            add.moves.emplace_back(name_of.at(r.pairs), it->second);
            remove.moves.emplace_back(it->second, name_of.at(r.pairs));
        }
        if (add.moves.empty())
            throw InternalError("well-graded family has a varying pair with no single step");
        reverses[add.id] = remove.id;
        reverses[remove.id] = add.id;
        tokens.push_back(std::move(add));
        tokens.push_back(std::move(remove));
    }
    return TokenSystem(states, tokens, &reverses);
}

}  // namespace mediakit
