#include "mediakit/fixtures.hpp"

#include <algorithm>
#include <bitset>
#include <random>
#include <set>

#include "mediakit/errors.hpp"

namespace mediakit::fixtures {

namespace {

using Edges = std::vector<std::pair<std::string, std::string>>;

Graph cycle(int n) {
    std::vector<std::string> verts;
    Edges edges;
    for (int i = 0; i < n; ++i) {
        verts.push_back(std::to_string(i));
        edges.emplace_back(std::to_string(i), std::to_string((i + 1) % n));
    }
    return Graph(std::move(verts), std::move(edges));
}

// Subset of {1..d} as a brace-wrapped digit string: {}, {1}, {13}, ...
std::string subset_name(unsigned mask, int d) {
    std::string s = "{";
    for (int i = 0; i < d; ++i)
        if (mask & (1u << i)) s += static_cast<char>('1' + i);
    return s + "}";
}

Graph hypercube(int d) {
    std::vector<std::string> verts;
    Edges edges;
    for (unsigned m = 0; m < (1u << d); ++m) {
        verts.push_back(subset_name(m, d));
        for (int i = 0; i < d; ++i)
            if (!(m & (1u << i))) edges.emplace_back(subset_name(m, d), subset_name(m | (1u << i), d));
    }
    return Graph(std::move(verts), std::move(edges));
}

int popcount(unsigned x) { return static_cast<int>(std::bitset<32>(x).count()); }

}  // namespace

Graph k2() { return Graph({"0", "1"}, {{"0", "1"}}); }

Graph p3() { return Graph({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}}); }

Graph k13() { return Graph({"0", "1", "2", "3"}, {{"0", "1"}, {"0", "2"}, {"0", "3"}}); }

Graph c4() { return cycle(4); }
Graph c5() { return cycle(5); }
Graph c6() { return cycle(6); }
Graph c8() { return cycle(8); }

Graph k23() {
    return Graph({"a0", "a1", "b0", "b1", "b2"},
                 {{"a0", "b0"}, {"a0", "b1"}, {"a0", "b2"},
                  {"a1", "b0"}, {"a1", "b1"}, {"a1", "b2"}});
}

Graph q3() { return hypercube(3); }
Graph q4() { return hypercube(4); }

Graph tree15() {
    std::vector<std::string> verts;
    Edges edges;
    auto name = [](int i) {
        std::string s = std::to_string(i);
        return s.size() == 1 ? "0" + s : s;
    };
    for (int i = 0; i < 15; ++i) verts.push_back(name(i));
    for (int i = 0; i < 7; ++i) {
        edges.emplace_back(name(i), name(2 * i + 1));
        edges.emplace_back(name(i), name(2 * i + 2));
    }
    return Graph(std::move(verts), std::move(edges));
}

Graph random_partial_cube(unsigned seed, int target) {
    constexpr int d = 4;
    if (target < 2 || target > (1 << d))
        throw InputError("partial cube target size out of range");
    std::mt19937 rng(seed);

    std::vector<unsigned> verts(1 << d);
    for (unsigned m = 0; m < (1u << d); ++m) verts[m] = m;

    auto build = [&](const std::vector<unsigned>& vs) {
        std::vector<std::string> names;
        Edges edges;
        std::set<unsigned> present(vs.begin(), vs.end());
        for (unsigned m : vs) {
            names.push_back(subset_name(m, d));
            for (int i = 0; i < d; ++i) {
                unsigned w = m ^ (1u << i);
                if (w > m && present.count(w))
                    edges.emplace_back(subset_name(m, d), subset_name(w, d));
            }
        }
        return Graph(std::move(names), std::move(edges));
    };

    // Largest component of the induced subgraph, as hypercube masks
    // (ties broken toward the component with the least mask).
    auto largest_component = [&](const std::vector<unsigned>& vs) {
        Graph g = build(vs);
        const auto& dist = g.distances();
        std::vector<char> used(g.vertex_count(), 0);
        std::vector<unsigned> best;
        for (int s = 0; s < g.vertex_count(); ++s) {
            if (used[s]) continue;
            std::vector<unsigned> comp;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (DistanceTable::finite(dist.at(s, v))) {
                    used[v] = 1;
                    const std::string& nm = g.vertex_name(v);
                    unsigned mask = 0;
                    for (char ch : nm)
                        if (ch >= '1' && ch <= '9') mask |= 1u << (ch - '1');
                    comp.push_back(mask);
                }
            if (comp.size() > best.size()) best = comp;
        }
        std::sort(best.begin(), best.end());
        return best;
    };

    auto isometric = [&](const std::vector<unsigned>& vs) {
        Graph g = build(vs);
        const auto& dist = g.distances();
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                int di = g.distance(subset_name(vs[i], d), subset_name(vs[j], d));
                if (di != popcount(vs[i] ^ vs[j])) return false;
            }
        (void)dist;
        return true;
    };

    while (static_cast<int>(verts.size()) > target) {
        std::vector<unsigned> order(verts);
        std::shuffle(order.begin(), order.end(), rng);
        bool removed = false;
        for (unsigned victim : order) {
            std::vector<unsigned> rest;
            for (unsigned m : verts)
                if (m != victim) rest.push_back(m);
            std::vector<unsigned> comp = largest_component(rest);
            if (static_cast<int>(comp.size()) >= target && isometric(comp)) {
                verts = std::move(comp);
                removed = true;
                break;
            }
        }
        if (!removed)
            throw InternalError("partial cube generation stalled before reaching target size");
    }
    return build(verts);
}

Graph pc10() { return random_partial_cube(kPartialCubeSeed, 10); }

TokenSystem k2_medium() {
    return TokenSystem({"0", "1"}, {TokenSpec{"t01", {{"0", "1"}}},
                                    TokenSpec{"t10", {{"1", "0"}}}});
}

TokenSystem q3_medium() {
    constexpr int d = 3;
    std::vector<std::string> states;
    for (unsigned m = 0; m < (1u << d); ++m) states.push_back(subset_name(m, d));
    std::vector<TokenSpec> tokens;
    for (int i = 0; i < d; ++i) {
        TokenSpec add{"add" + std::to_string(i + 1), {}};
        TokenSpec rem{"remove" + std::to_string(i + 1), {}};
        for (unsigned m = 0; m < (1u << d); ++m)
            if (!(m & (1u << i))) {
                add.moves.emplace_back(subset_name(m, d), subset_name(m | (1u << i), d));
                rem.moves.emplace_back(subset_name(m | (1u << i), d), subset_name(m, d));
            }
        tokens.push_back(std::move(add));
        tokens.push_back(std::move(rem));
    }
    return TokenSystem(std::move(states), std::move(tokens));
}

std::vector<std::pair<std::string, Graph>> graph_corpus(bool mediatic_only) {
    std::vector<std::pair<std::string, Graph>> out;
    out.emplace_back("k2", k2());
    out.emplace_back("p3", p3());
    out.emplace_back("k13", k13());
    out.emplace_back("c4", c4());
    if (!mediatic_only) out.emplace_back("c5", c5());
    out.emplace_back("c6", c6());
    out.emplace_back("c8", c8());
    if (!mediatic_only) out.emplace_back("k23", k23());
    out.emplace_back("q3", q3());
    out.emplace_back("q4", q4());
    out.emplace_back("pc10", pc10());
    out.emplace_back("tree15", tree15());
    return out;
}

}  // namespace mediakit::fixtures
