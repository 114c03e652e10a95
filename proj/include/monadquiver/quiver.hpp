#pragma once

// Finite acyclic quivers and monad quivers: an assignment of an algebra to
// every vertex and an algebra morphism to every edge. A quiver whose listed
// edges contain no parallel pair is treated as generating a poset (the
// reachability order); all parallel paths between two vertices must then
// compose to the same algebra morphism, and a canonical morphism is stored
// per closure pair. Quivers with parallel edges are read as free categories
// (paths are distinct morphisms) and only support the pointwise operations.

#include "monadquiver/algebra.hpp"
#include "monadquiver/report.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mq {

struct QuiverEdge {
    std::string name;
    std::size_t src = 0;
    std::size_t dst = 0;
};

class Quiver {
public:
    Quiver(std::vector<std::string> vertices, std::vector<QuiverEdge> edges)
        : vertices_(std::move(vertices)), edges_(std::move(edges)) {
        const std::size_t n = vertices_.size();
        std::set<std::string> seen;
        for (const auto& v : vertices_) require(seen.insert(v).second, "Quiver: duplicate vertex name " + v);
        std::set<std::string> seen_edges;
        for (const auto& e : edges_) {
            require(e.src < n && e.dst < n, "Quiver: edge endpoint out of range");
            require(e.src != e.dst, "Quiver: self-loop " + e.name + " makes the quiver cyclic");
            require(seen_edges.insert(e.name).second, "Quiver: duplicate edge name " + e.name);
        }
        compute_closure();
    }

    [[nodiscard]] std::size_t vertex_count() const { return vertices_.size(); }
    [[nodiscard]] const std::vector<std::string>& vertices() const { return vertices_; }
    [[nodiscard]] const std::vector<QuiverEdge>& edges() const { return edges_; }
    [[nodiscard]] const std::string& vertex_name(std::size_t i) const { return vertices_.at(i); }

    [[nodiscard]] std::size_t vertex_index(const std::string& name) const {
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (vertices_[i] == name) return i;
        throw std::invalid_argument("Quiver: unknown vertex " + name);
    }

    [[nodiscard]] std::optional<std::size_t> edge_index(const std::string& name) const {
        for (std::size_t i = 0; i < edges_.size(); ++i)
            if (edges_[i].name == name) return i;
        return std::nullopt;
    }

    [[nodiscard]] bool is_acyclic() const { return acyclic_; }
    [[nodiscard]] bool is_poset() const { return poset_; }

    // strict reachability x < y (at least one edge on the path)
    [[nodiscard]] bool less(std::size_t x, std::size_t y) const { return reach_[x][y]; }
    [[nodiscard]] bool leq(std::size_t x, std::size_t y) const { return x == y || reach_[x][y]; }

    // all strictly related ordered pairs, sorted
    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> closure_pairs() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t x = 0; x < vertices_.size(); ++x)
            for (std::size_t y = 0; y < vertices_.size(); ++y)
                if (reach_[x][y]) out.emplace_back(x, y);
        return out;
    }

    // all directed paths x -> y as sequences of edge indices (empty for x == y
    // is not included; identity paths are handled by callers)
    [[nodiscard]] std::vector<std::vector<std::size_t>> paths(std::size_t x, std::size_t y) const {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> cur;
        walk(x, y, cur, out);
        return out;
    }

    // shortest path, ties broken by lexicographically smallest edge sequence
    [[nodiscard]] std::vector<std::size_t> canonical_path(std::size_t x, std::size_t y) const {
        auto all = paths(x, y);
        require(!all.empty(), "Quiver: no path between the requested vertices");
        auto best = all.front();
        for (const auto& p : all)
            if (p.size() < best.size() || (p.size() == best.size() && p < best)) best = p;
        return best;
    }

    // vertices of the undirected connected component containing x
    [[nodiscard]] std::vector<std::size_t> component_of(std::size_t x) const {
        std::vector<bool> in(vertices_.size(), false);
        std::vector<std::size_t> stack{x};
        in[x] = true;
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            for (const auto& e : edges_) {
                if (e.src == v && !in[e.dst]) { in[e.dst] = true; stack.push_back(e.dst); }
                if (e.dst == v && !in[e.src]) { in[e.src] = true; stack.push_back(e.src); }
            }
        }
        std::vector<std::size_t> comp;
        for (std::size_t v = 0; v < vertices_.size(); ++v)
            if (in[v]) comp.push_back(v);
        return comp;
    }

private:
    void compute_closure() {
        const std::size_t n = vertices_.size();
        reach_.assign(n, std::vector<bool>(n, false));
        for (const auto& e : edges_) reach_[e.src][e.dst] = true;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (reach_[i][k] && reach_[k][j]) reach_[i][j] = true;
        acyclic_ = true;
        for (std::size_t i = 0; i < n; ++i)
            if (reach_[i][i]) acyclic_ = false;
        std::set<std::pair<std::size_t, std::size_t>> pairs;
        bool parallel = false;
        for (const auto& e : edges_)
            if (!pairs.insert({e.src, e.dst}).second) parallel = true;
        poset_ = acyclic_ && !parallel;
    }

    void walk(std::size_t at, std::size_t goal, std::vector<std::size_t>& cur,
              std::vector<std::vector<std::size_t>>& out) const {
        if (at == goal && !cur.empty()) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            if (edges_[i].src != at) continue;
            cur.push_back(i);
            walk(edges_[i].dst, goal, cur, out);
            cur.pop_back();
        }
    }

    std::vector<std::string> vertices_;
    std::vector<QuiverEdge> edges_;
    std::vector<std::vector<bool>> reach_;
    bool acyclic_ = true;
    bool poset_ = true;
};

class MonadQuiver {
public:
    MonadQuiver(Quiver quiver, std::vector<FDAlgebra> vertex_algebras,
                std::vector<AlgebraMorphism> edge_morphisms)
        : quiver_(std::move(quiver)),
          vertex_algebras_(std::move(vertex_algebras)),
          edge_morphisms_(std::move(edge_morphisms)) {
        require(vertex_algebras_.size() == quiver_.vertex_count(),
                "MonadQuiver: one algebra per vertex required");
        require(edge_morphisms_.size() == quiver_.edges().size(),
                "MonadQuiver: one morphism per edge required");
        for (std::size_t i = 0; i < edge_morphisms_.size(); ++i) {
            const auto& e = quiver_.edges()[i];
            require(edge_morphisms_[i].source() == vertex_algebras_[e.src],
                    "MonadQuiver: edge " + e.name + " morphism source does not match its vertex algebra");
            require(edge_morphisms_[i].target() == vertex_algebras_[e.dst],
                    "MonadQuiver: edge " + e.name + " morphism target does not match its vertex algebra");
        }
        if (quiver_.is_poset()) build_closure_morphisms();
    }

    [[nodiscard]] const Quiver& quiver() const { return quiver_; }
    [[nodiscard]] const FDAlgebra& algebra_at(std::size_t v) const { return vertex_algebras_.at(v); }
    [[nodiscard]] const AlgebraMorphism& edge_morphism(std::size_t e) const { return edge_morphisms_.at(e); }
    [[nodiscard]] const Field& field() const { return vertex_algebras_.front().field(); }

    [[nodiscard]] AlgebraMorphism path_morphism(const std::vector<std::size_t>& path) const {
        require(!path.empty(), "path_morphism: empty path");
        AlgebraMorphism acc = edge_morphisms_[path.front()];
        for (std::size_t i = 1; i < path.size(); ++i) acc = compose(edge_morphisms_[path[i]], acc);
        return acc;
    }

    // the canonical morphism of a strictly related poset pair x < y
    [[nodiscard]] const AlgebraMorphism& closure_morphism(std::size_t x, std::size_t y) const {
        const auto it = closure_.find({x, y});
        require(it != closure_.end(), "closure_morphism: vertices are not strictly related");
        return it->second;
    }

    bool operator==(const MonadQuiver& o) const {
        return quiver_.vertices() == o.quiver_.vertices() && edges_equal(o) &&
               vertex_algebras_ == o.vertex_algebras_ && edge_morphisms_ == o.edge_morphisms_;
    }

private:
    [[nodiscard]] bool edges_equal(const MonadQuiver& o) const {
        if (quiver_.edges().size() != o.quiver_.edges().size()) return false;
        for (std::size_t i = 0; i < quiver_.edges().size(); ++i) {
            const auto& a = quiver_.edges()[i];
            const auto& b = o.quiver_.edges()[i];
            if (a.name != b.name || a.src != b.src || a.dst != b.dst) return false;
        }
        return true;
    }

    void build_closure_morphisms() {
        for (const auto& [x, y] : quiver_.closure_pairs())
            closure_.emplace(std::make_pair(x, y), path_morphism(quiver_.canonical_path(x, y)));
    }

    Quiver quiver_;
    std::vector<FDAlgebra> vertex_algebras_;
    std::vector<AlgebraMorphism> edge_morphisms_;
    std::map<std::pair<std::size_t, std::size_t>, AlgebraMorphism> closure_;
};

// Poset axioms, validity of every vertex algebra and edge morphism,
// path-independence of composite morphisms, and per-edge flatness flags.
inline CheckReport validate_monad_quiver(const MonadQuiver& u) {
    CheckReport rep;
    const auto& q = u.quiver();
    if (!q.is_acyclic()) {
        rep.fail({"cycle", {}}, "quiver has a directed cycle");
        return rep;
    }
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        auto r = validate_algebra(u.algebra_at(v));
        if (!r.pass) {
            r.witnesses.front().fields.emplace_back("vertex", q.vertex_name(v));
            rep.merge(r);
            return rep;
        }
        require(u.algebra_at(v).field() == u.field(), "validate_monad_quiver: mixed fields");
    }
    for (std::size_t e = 0; e < q.edges().size(); ++e) {
        auto r = validate_morphism(u.edge_morphism(e));
        if (!r.pass) {
            r.witnesses.front().fields.emplace_back("edge", q.edges()[e].name);
            rep.merge(r);
            return rep;
        }
    }
    if (q.is_poset()) {
        for (const auto& [x, y] : q.closure_pairs()) {
            const auto all = q.paths(x, y);
            const auto ref = u.path_morphism(all.front());
            for (std::size_t i = 1; i < all.size(); ++i) {
                if (u.path_morphism(all[i]).matrix() != ref.matrix()) {
                    auto path_name = [&](const std::vector<std::size_t>& p) {
                        std::string s;
                        for (auto ei : p) s += (s.empty() ? "" : ";") + q.edges()[ei].name;
                        return s;
                    };
                    rep.fail({"path-pair",
                              {{"from", q.vertex_name(x)},
                               {"to", q.vertex_name(y)},
                               {"path1", path_name(all.front())},
                               {"path2", path_name(all[i])}}},
                             "parallel paths compose to different morphisms");
                    return rep;
                }
            }
        }
    }
    for (std::size_t e = 0; e < q.edges().size(); ++e)
        rep.stats["flat:" + q.edges()[e].name] = is_flat_morphism(u.edge_morphism(e)) ? 1 : 0;
    return rep;
}

// flat on every closure morphism (poset) or every listed edge (free reading)
inline bool is_flat_monad_quiver(const MonadQuiver& u) {
    if (u.quiver().is_poset()) {
        for (const auto& [x, y] : u.quiver().closure_pairs())
            if (!is_flat_morphism(u.closure_morphism(x, y))) return false;
        return true;
    }
    for (std::size_t e = 0; e < u.quiver().edges().size(); ++e)
        if (!is_flat_morphism(u.edge_morphism(e))) return false;
    return true;
}

}  // namespace mq
