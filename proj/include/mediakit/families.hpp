#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mediakit/token_system.hpp"

namespace mediakit {

// A binary relation over a shared ground set of single-character elements.
// The pair (a, b) is written with the two-character key "ab".
struct Relation {
    std::set<std::pair<std::string, std::string>> pairs;
};

enum class FamilyKind { PartialOrder, IntervalOrder, Semiorder, Biorder, Custom };

std::string family_kind_name(FamilyKind kind);
FamilyKind family_kind_from_name(const std::string& name);  // InputError if unknown

// A family of relations over one ground set. Members are held in canonical
// order: fewer pairs first, then lexicographic by pair keys.
struct RelationFamily {
    FamilyKind kind = FamilyKind::Custom;
    std::vector<std::string> ground;  // sorted single-character element ids
    std::vector<Relation> members;
};

// Canonical member label, e.g. "{}", "{ab}", "{ab,cb}" (keys sorted).
std::string member_name(const Relation& r);

// All relations on the first n of a, b, c, d satisfying the kind's
// predicate: partial-order = irreflexive + transitive; biorder = Ferrers;
// interval-order = irreflexive + Ferrers; semiorder = interval-order +
// semitransitive. Exhaustive over the 2^(n^2) candidates; 1 <= n <= 4.
RelationFamily enumerate_family(FamilyKind kind, int n);

struct WellgradedReport {
    bool wellgraded = false;
    // Member pair whose stepping-graph distance differs from the size of
    // their symmetric difference, first in canonical order.
    std::optional<std::pair<std::string, std::string>> witness;
};

// A family is well graded when any two members are joined by a chain of
// members stepping one pair at a time, with as many steps as the size of
// their symmetric difference.
WellgradedReport is_wellgraded(const RelationFamily& f);

// Casts a well-graded family with >= 2 members as a token system: one state
// per member, tokens add_<key> / remove_<key> per pair occurring in some
// member and missing from another. The result passes check_medium.
TokenSystem family_to_medium(const RelationFamily& f);

}  // namespace mediakit
