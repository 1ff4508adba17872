#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "clusterfan/errors.hpp"
#include "clusterfan/seed.hpp"

namespace clusterfan {

struct EnumerateLimits {
    std::size_t max_seeds = 0;  // 0 = unbounded
    int max_depth = -1;         // -1 = unbounded
    int jobs = 1;
};

enum class Truncation { none, max_seeds, max_depth };

inline const char* to_string(Truncation t) {
    switch (t) {
        case Truncation::max_seeds: return "max_seeds";
        case Truncation::max_depth: return "max_depth";
        default: return "none";
    }
}

struct EnumerateStats {
    std::size_t seed_count = 0;
    std::size_t edge_count = 0;
    std::size_t mutations_performed = 0;
    std::size_t certificates_checked = 0;
    int depth_reached = 0;
    Truncation truncated = Truncation::none;
};

struct GraphEdge {
    std::size_t a, b;  // seed indices, a < b
    VertexId vertex;   // the mutated vertex
    friend auto operator<=>(const GraphEdge&, const GraphEdge&) = default;
};

// The exchange graph: all seeds reachable from the initial seed by
// mutations, deduplicated by their canonical key, together with the mutation
// adjacencies and the registry of distinct cluster variables keyed by label.
class ExchangeGraph {
public:
    int n = 0;
    std::vector<Seed> seeds;
    std::vector<SeedKey> keys;
    std::vector<int> depth;
    std::vector<GraphEdge> edges;
    EnumerateStats stats;

    // label (flattened) -> variable; the labeling is injective (distinct
    // labels for distinct polynomials) and functional, enforced on insert.
    const std::map<std::vector<long long>, VarPtr>& variable_registry() const { return vars_; }

    // Registers a variable under its label; rejects any collision in which
    // the same label arrives with a different polynomial.
    void register_variable(const VarPtr& v) {
        auto [it, inserted] = vars_.emplace(v->label().flat(), v);
        if (!inserted && !(it->second->poly() == v->poly()))
            throw LabelCollision("two cluster variables share the label " +
                                 to_string(v->label()) + " but differ:\n  " +
                                 to_string(it->second->poly()) + "\n  " + to_string(v->poly()));
    }

    std::size_t index_of(const SeedKey& k) const { return key_index_.at(k); }
    bool has_key(const SeedKey& k) const { return key_index_.count(k) > 0; }

    std::size_t insert_seed(Seed s, SeedKey k, int d) {
        const std::size_t idx = seeds.size();
        key_index_.emplace(k, idx);
        for (const auto& v : s.vars) register_variable(v);
        seeds.push_back(std::move(s));
        keys.push_back(std::move(k));
        depth.push_back(d);
        return idx;
    }

private:
    std::map<SeedKey, std::size_t> key_index_;
    std::map<std::vector<long long>, VarPtr> vars_;
};

namespace detail {

// Seeds that collide on a key must be the same seed: identical variable
// polynomials and the same quiver under the vertex bijection matching labels.
inline void check_seed_agreement(const Seed& a, const Seed& b) {
    const auto& va = a.quiver.vertices();
    const auto& vb = b.quiver.vertices();
    if (va.size() != vb.size())
        throw LabelCollision("colliding seeds have different vertex counts");

    std::map<std::vector<long long>, VertexId> by_label;
    for (std::size_t k = 0; k < vb.size(); ++k) {
        if (!by_label.emplace(b.vars[k]->label().flat(), vb[k]).second)
            throw LabelCollision("seed carries two variables with the same label");
    }
    std::map<VertexId, VertexId> phi;
    for (std::size_t k = 0; k < va.size(); ++k) {
        auto it = by_label.find(a.vars[k]->label().flat());
        if (it == by_label.end())
            throw LabelCollision("colliding seeds do not share their label sets");
        if (!(a.vars[k]->poly() == b.var_at(it->second).poly()))
            throw LabelCollision("colliding seeds disagree on the polynomial of label " +
                                 to_string(a.vars[k]->label()));
        if (a.quiver.is_frozen(va[k]) != b.quiver.is_frozen(it->second))
            throw LabelCollision("label bijection does not respect frozen flags");
        phi[va[k]] = it->second;
    }
    for (std::size_t p = 0; p < va.size(); ++p)
        for (std::size_t r = p + 1; r < va.size(); ++r)
            if (a.quiver.weight(va[p], va[r]) != b.quiver.weight(phi[va[p]], phi[va[r]]))
                throw LabelCollision("colliding seeds have non-isomorphic quivers (weight at " +
                                     to_string(va[p]) + " -> " + to_string(va[r]) + ")");
}

}  // namespace detail

// Breadth-first closure of the initial seed under all mutations at mutable
// vertices, deduplicated by seed key.  The frontier is expanded level by
// level; within a level the expansion may be spread over worker threads but
// candidates are merged in a fixed order, so results are independent of the
// scheduling.  Hitting a limit sets the truncation flag and stops cleanly.
inline ExchangeGraph enumerate(int n, EnumerateLimits limits = {}) {
    ExchangeGraph g;
    g.n = n;

    Seed s0 = initial_seed(n);
    SeedKey k0 = seed_key(s0);
    g.insert_seed(std::move(s0), std::move(k0), 0);

    struct Candidate {
        std::size_t from;
        VertexId vertex;
        Seed seed;
        SeedKey key;
    };

    std::set<GraphEdge> edge_set;
    std::vector<std::size_t> frontier{0};
    int level = 0;
    std::size_t mutations = 0;

    const auto mutable_vs = g.seeds[0].quiver.mutable_vertices();

    while (!frontier.empty() && g.stats.truncated == Truncation::none) {
        if (limits.max_depth >= 0 && level >= limits.max_depth) {
            g.stats.truncated = Truncation::max_depth;
            break;
        }
        ++level;

        // Expand the whole frontier (parallelizable: seeds are immutable).
        std::vector<std::vector<Candidate>> buckets(frontier.size());
        auto expand = [&](std::size_t lo, std::size_t hi) {
            for (std::size_t f = lo; f < hi; ++f) {
                const Seed& s = g.seeds[frontier[f]];
                for (const auto& v : mutable_vs) {
                    auto mutated = mutate_seed(s, v);  // certificate verified inside
                    SeedKey nk = seed_key(mutated.first);
                    buckets[f].push_back({frontier[f], v, std::move(mutated.first), std::move(nk)});
                }
            }
        };
        const int jobs = std::max(1, limits.jobs);
        if (jobs == 1 || frontier.size() == 1) {
            expand(0, frontier.size());
        } else {
            std::vector<std::thread> pool;
            const std::size_t chunk = (frontier.size() + jobs - 1) / jobs;
            for (std::size_t lo = 0; lo < frontier.size(); lo += chunk)
                pool.emplace_back(expand, lo, std::min(lo + chunk, frontier.size()));
            for (auto& t : pool) t.join();
        }

        // Deterministic merge in (frontier position, vertex) order.
        std::vector<std::size_t> next;
        for (auto& bucket : buckets)
            for (auto& c : bucket) {
                ++mutations;
                g.stats.certificates_checked += 1;  // mutate_seed verified it
                if (g.has_key(c.key)) {
                    const std::size_t to = g.index_of(c.key);
                    detail::check_seed_agreement(c.seed, g.seeds[to]);
                    if (to != c.from)
                        edge_set.insert({std::min(c.from, to), std::max(c.from, to), c.vertex});
                } else if (limits.max_seeds > 0 && g.seeds.size() >= limits.max_seeds) {
                    g.stats.truncated = Truncation::max_seeds;
                } else {
                    const std::size_t to = g.insert_seed(std::move(c.seed), c.key, level);
                    edge_set.insert({std::min(c.from, to), std::max(c.from, to), c.vertex});
                    next.push_back(to);
                }
            }
        if (g.stats.truncated != Truncation::none) break;
        frontier = std::move(next);
    }

    g.stats.depth_reached = *std::max_element(g.depth.begin(), g.depth.end());
    g.edges.assign(edge_set.begin(), edge_set.end());
    g.stats.seed_count = g.seeds.size();
    g.stats.edge_count = g.edges.size();
    g.stats.mutations_performed = mutations;
    return g;
}

// All distinct cluster variables of the graph, sorted by lex order of their
// labels.  Frozen and mutable variables are both included; the mutable ones
// are exactly those whose label is not a frozen one-column array.
inline std::vector<VarPtr> cluster_variables(const ExchangeGraph& g) {
    std::vector<VarPtr> out;
    out.reserve(g.variable_registry().size());
    for (const auto& [label, v] : g.variable_registry()) out.push_back(v);
    std::sort(out.begin(), out.end(), [](const VarPtr& a, const VarPtr& b) {
        return lex_compare(a->label(), b->label()) == std::strong_ordering::less;
    });
    return out;
}

inline std::vector<VarPtr> mutable_variables(const ExchangeGraph& g) {
    std::set<std::vector<long long>> frozen;
    for (const auto& a : frozen_arrays(g.n)) frozen.insert(a.flat());
    std::vector<VarPtr> out;
    for (const auto& v : cluster_variables(g))
        if (!frozen.count(v->label().flat())) out.push_back(v);
    return out;
}

}  // namespace clusterfan
