#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "clusterfan/errors.hpp"

namespace clusterfan {

// Vertex label.  Grid quivers use (i, j) with i, j >= 1 and i + j <= n + 1;
// ad-hoc quivers may use any distinct pairs.
struct VertexId {
    int i = 0, j = 0;
    friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

inline std::string to_string(const VertexId& v) {
    return "(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")";
}

// A skew-symmetric quiver with frozen and mutable vertices.  w(u, v) > 0
// means w(u,v) arrows from u to v; w(v, u) = -w(u, v) is implied.  Arrows
// between two frozen vertices are never stored or created: they enter no
// exchange relation.
class Quiver {
public:
    Quiver() = default;

    void add_vertex(VertexId v, bool frozen) {
        if (index_.count(v)) throw OutOfRange("Quiver: duplicate vertex " + to_string(v));
        index_[v] = vertices_.size();
        vertices_.push_back(v);
        frozen_.push_back(frozen);
    }

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    const std::vector<VertexId>& vertices() const { return vertices_; }

    bool has_vertex(VertexId v) const { return index_.count(v) > 0; }

    bool is_frozen(VertexId v) const { return frozen_[pos(v)]; }

    std::vector<VertexId> mutable_vertices() const {
        std::vector<VertexId> out;
        for (std::size_t k = 0; k < vertices_.size(); ++k)
            if (!frozen_[k]) out.push_back(vertices_[k]);
        return out;
    }

    int weight(VertexId u, VertexId v) const {
        const std::size_t pu = pos(u), pv = pos(v);
        if (pu == pv) return 0;
        auto it = w_.find(pu < pv ? std::make_pair(pu, pv) : std::make_pair(pv, pu));
        if (it == w_.end()) return 0;
        return pu < pv ? it->second : -it->second;
    }

    void set_weight(VertexId u, VertexId v, int w) {
        const std::size_t pu = pos(u), pv = pos(v);
        if (pu == pv) throw OutOfRange("Quiver: no loops allowed");
        if (frozen_[pu] && frozen_[pv] && w != 0)
            throw OutOfRange("Quiver: arrows between frozen vertices are not stored");
        const auto key = pu < pv ? std::make_pair(pu, pv) : std::make_pair(pv, pu);
        const int stored = pu < pv ? w : -w;
        if (stored == 0)
            w_.erase(key);
        else
            w_[key] = stored;
    }

    void add_weight(VertexId u, VertexId v, int delta) { set_weight(u, v, weight(u, v) + delta); }

    // Vertices u with w(u, v) > 0, together with the multiplicities.
    std::vector<std::pair<VertexId, int>> in_neighbors(VertexId v) const {
        std::vector<std::pair<VertexId, int>> out;
        for (const auto& u : vertices_) {
            const int w = weight(u, v);
            if (w > 0) out.emplace_back(u, w);
        }
        return out;
    }

    std::vector<std::pair<VertexId, int>> out_neighbors(VertexId v) const {
        std::vector<std::pair<VertexId, int>> out;
        for (const auto& u : vertices_) {
            const int w = weight(v, u);
            if (w > 0) out.emplace_back(u, w);
        }
        return out;
    }

    // All arcs in their positive direction: (u, v, w) with w = w(u, v) > 0.
    std::vector<std::tuple<VertexId, VertexId, int>> arcs() const {
        std::vector<std::tuple<VertexId, VertexId, int>> out;
        for (const auto& [key, w] : w_) {
            if (w > 0)
                out.emplace_back(vertices_[key.first], vertices_[key.second], w);
            else
                out.emplace_back(vertices_[key.second], vertices_[key.first], -w);
        }
        return out;
    }

    friend bool operator==(const Quiver& a, const Quiver& b) {
        return a.vertices_ == b.vertices_ && a.frozen_ == b.frozen_ && a.w_ == b.w_;
    }

private:
    std::size_t pos(VertexId v) const {
        auto it = index_.find(v);
        if (it == index_.end()) throw OutOfRange("Quiver: unknown vertex " + to_string(v));
        return it->second;
    }

    std::vector<VertexId> vertices_;
    std::vector<bool> frozen_;
    std::map<VertexId, std::size_t> index_;
    std::map<std::pair<std::size_t, std::size_t>, int> w_;  // key.first < key.second
};

// Mutation at a mutable vertex v:
//  (i)   all weights incident to v are negated;
//  (ii)  for v' -> v with multiplicity alpha > 0 and v -> v'' with beta > 0,
//        w(v', v'') gains alpha * beta, skipped when v' and v'' are both frozen;
//  (iii) all other weights are unchanged.
// Skew-symmetry is preserved and mutate_quiver(mutate_quiver(q, v), v) == q.
inline Quiver mutate_quiver(const Quiver& q, VertexId v) {
    if (!q.has_vertex(v)) throw OutOfRange("mutate_quiver: unknown vertex " + to_string(v));
    if (q.is_frozen(v)) throw FrozenVertex("mutate_quiver: vertex " + to_string(v) + " is frozen");
    Quiver r = q;
    const auto in = q.in_neighbors(v);
    const auto out = q.out_neighbors(v);
    for (const auto& [vp, alpha] : in)
        for (const auto& [vpp, beta] : out) {
            if (q.is_frozen(vp) && q.is_frozen(vpp)) continue;
            r.add_weight(vp, vpp, alpha * beta);
        }
    for (const auto& [u, alpha] : in) r.set_weight(u, v, -alpha);
    for (const auto& [u, beta] : out) r.set_weight(v, u, -beta);
    return r;
}

// The initial quiver Q(n): the triangular grid {(i, j) : i, j >= 1, i+j <= n+1}
// with every unit triangle a directed 3-cycle (East (i,j)->(i+1,j), Southwest
// (i,j+1)->(i,j), Northwest (i+1,j)->(i,j+1)).  The left side (1, j) and the
// hypotenuse i + j = n + 1 are frozen; arrows between frozen vertices are
// dropped.
inline Quiver initial_quiver(int n) {
    if (n < 3) throw OutOfRange("initial_quiver: need n >= 3");
    Quiver q;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; i + j <= n + 1; ++j)
            q.add_vertex({i, j}, i == 1 || i + j == n + 1);
    auto try_arc = [&](VertexId a, VertexId b) {
        if (!q.has_vertex(a) || !q.has_vertex(b)) return;
        if (q.is_frozen(a) && q.is_frozen(b)) return;
        q.set_weight(a, b, 1);
    };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; i + j <= n + 1; ++j) {
            try_arc({i, j}, {i + 1, j});      // East
            try_arc({i, j + 1}, {i, j});      // Southwest
            try_arc({i + 1, j}, {i, j + 1});  // Northwest
        }

    // Orientation self-check: the exchange at a mutable probe vertex must read
    // In(v) = {(i,j+1), (i+1,j-1), (i-1,j)} and Out(v) = {(i,j-1), (i+1,j), (i-1,j+1)}.
    const VertexId probe = n >= 4 ? VertexId{2, 2} : VertexId{2, 1};
    auto ids = [](std::vector<std::pair<VertexId, int>> xs) {
        std::vector<VertexId> v;
        for (auto& [u, w] : xs) v.push_back(u);
        std::sort(v.begin(), v.end());
        return v;
    };
    auto expect = [&](std::vector<VertexId> xs) {
        std::erase_if(xs, [&](VertexId u) { return !q.has_vertex(u); });
        std::sort(xs.begin(), xs.end());
        return xs;
    };
    const int pi = probe.i, pj = probe.j;
    if (ids(q.in_neighbors(probe)) !=
            expect({{pi, pj + 1}, {pi + 1, pj - 1}, {pi - 1, pj}}) ||
        ids(q.out_neighbors(probe)) !=
            expect({{pi, pj - 1}, {pi + 1, pj}, {pi - 1, pj + 1}}))
        throw Error("initial_quiver: orientation self-check failed");
    return q;
}

// Graphviz rendering for documentation.
inline std::string to_dot(const Quiver& q) {
    std::string s = "digraph quiver {\n";
    for (const auto& v : q.vertices()) {
        s += "  \"" + to_string(v) + "\"";
        if (q.is_frozen(v)) s += " [shape=box]";
        s += ";\n";
    }
    for (const auto& [u, v, w] : q.arcs()) {
        s += "  \"" + to_string(u) + "\" -> \"" + to_string(v) + "\"";
        if (w > 1) s += " [label=\"" + std::to_string(w) + "\"]";
        s += ";\n";
    }
    return s + "}\n";
}

}  // namespace clusterfan
