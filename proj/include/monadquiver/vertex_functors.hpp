#pragma once

// The extension, evaluation and coextension functors attached to a vertex of
// a poset quiver, their hom transpositions, and the projective generator
// machinery: every module is covered by a direct sum of vertex extensions of
// free modules, and maps out of such extensions lift along pointwise
// epimorphisms by one exact linear solve at the vertex.

#include "monadquiver/quiver_module.hpp"

namespace mq {

inline QuiverModule zero_quiver_module(const MonadQuiver& u) {
    const auto& q = u.quiver();
    std::vector<ModuleObject> vms;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) vms.push_back(zero_module(u.algebra_at(v)));
    std::vector<LinearMap> listed;
    for (std::size_t e = 0; e < q.edges().size(); ++e) listed.emplace_back(u.field(), 0, 0);
    return QuiverModule::build(u, vms, std::move(listed));
}

// ex_x(m): the extension of m along every closure morphism out of x, zero at
// vertices not above x; composite structure maps are the canonical
// comparison isomorphisms.
inline QuiverModule ex_functor(const MonadQuiver& u, std::size_t x, const ModuleObject& mod) {
    const auto& q = u.quiver();
    require(q.is_poset(), "ex_functor: quiver must be a poset");
    require(x < q.vertex_count(), "ex_functor: vertex out of range");
    require(mod.algebra() == u.algebra_at(x), "ex_functor: module is not over the vertex algebra");
    const Field f = u.field();

    std::vector<ModuleObject> vms;
    for (std::size_t y = 0; y < q.vertex_count(); ++y) {
        if (y == x)
            vms.push_back(mod);
        else if (q.less(x, y))
            vms.push_back(extend_scalars(u.closure_morphism(x, y), mod).module);
        else
            vms.push_back(zero_module(u.algebra_at(y)));
    }

    std::map<std::pair<std::size_t, std::size_t>, LinearMap> closure;
    for (const auto& [y, z] : q.closure_pairs()) {
        const AlgebraMorphism& step = u.closure_morphism(y, z);
        if (!q.leq(x, y)) {
            // source is zero, the unique empty map into the target
            closure.emplace(std::make_pair(y, z),
                            LinearMap(f, vms[z].dim(), extend_scalars(step, vms[y]).module.dim()));
        } else if (y == x) {
            closure.emplace(std::make_pair(y, z), LinearMap::identity(f, vms[z].dim()));
        } else {
            const AlgebraMorphism& chi_xy = u.closure_morphism(x, y);
            const AlgebraMorphism& chi_xz = u.closure_morphism(x, z);
            ExtensionResult ext_xy = extend_scalars(chi_xy, mod);
            ExtensionResult ext_mid = extend_scalars(step, ext_xy.module);
            ExtensionResult ext_xz = extend_scalars(chi_xz, mod);
            closure.emplace(std::make_pair(y, z),
                            composition_iso(chi_xy, step, mod, ext_xy, ext_mid, ext_xz).iso);
        }
    }
    return QuiverModule::from_closure(u, std::move(vms), std::move(closure));
}

inline const ModuleObject& ev_functor(const QuiverModule& m, std::size_t x) { return m.at(x); }

// coe_x(m): the restriction of m along every closure morphism into x, zero
// at vertices not below x; structure maps are identities in restriction form.
inline QuiverModule coe_functor(const MonadQuiver& u, std::size_t x, const ModuleObject& mod) {
    const auto& q = u.quiver();
    require(q.is_poset(), "coe_functor: quiver must be a poset");
    require(x < q.vertex_count(), "coe_functor: vertex out of range");
    require(mod.algebra() == u.algebra_at(x), "coe_functor: module is not over the vertex algebra");
    const Field f = u.field();

    std::vector<ModuleObject> vms;
    for (std::size_t y = 0; y < q.vertex_count(); ++y) {
        if (y == x)
            vms.push_back(mod);
        else if (q.less(y, x))
            vms.push_back(restrict_scalars(u.closure_morphism(y, x), mod));
        else
            vms.push_back(zero_module(u.algebra_at(y)));
    }

    std::map<std::pair<std::size_t, std::size_t>, LinearMap> closure;
    for (const auto& [y, z] : q.closure_pairs()) {
        const AlgebraMorphism& step = u.closure_morphism(y, z);
        const ExtensionResult ext_y = extend_scalars(step, vms[y]);
        if (!q.leq(z, x)) {
            closure.emplace(std::make_pair(y, z), LinearMap(f, 0, ext_y.module.dim()));
        } else {
            // both y < z <= x: the restriction-form map is the identity on the
            // underlying space of mod, transposed into extension form
            const LinearMap id_restr = LinearMap::identity(f, mod.dim());
            closure.emplace(std::make_pair(y, z), transpose_to_extended(step, vms[z], id_restr, ext_y));
        }
    }
    return QuiverModule::from_closure(u, std::move(vms), std::move(closure));
}

// ---- hom transpositions -----------------------------------------------------

// f: m -> P_x over the vertex algebra  ~>  xi^f: ex_x(m) -> P
inline QuiverModuleMorphism ex_transpose_to_quiver(const QuiverModule& ex_mod, std::size_t x,
                                                   const ModuleObject& mod, const QuiverModule& p,
                                                   const LinearMap& f_map) {
    const auto& q = p.quiver();
    require(f_map.rows() == p.at(x).dim() && f_map.cols() == mod.dim(),
            "ex_transpose_to_quiver: component must be dim(P_x) x dim(m)");
    const auto& u = p.monad_quiver();
    std::vector<LinearMap> comps;
    for (std::size_t y = 0; y < q.vertex_count(); ++y) {
        if (y == x) {
            comps.push_back(f_map);
        } else if (q.less(x, y)) {
            const AlgebraMorphism& chi = u.closure_morphism(x, y);
            ExtensionResult ext_m = extend_scalars(chi, mod);
            ExtensionResult ext_px = extend_scalars(chi, p.at(x));
            comps.push_back(p.closure_map(x, y).compose(extend_morphism(chi, f_map, ext_m, ext_px)));
        } else {
            comps.push_back(LinearMap(p.field(), p.at(y).dim(), 0));
        }
    }
    return QuiverModuleMorphism{ex_mod, p, std::move(comps)};
}

inline LinearMap ex_transpose_to_vertex(const QuiverModuleMorphism& xi, std::size_t x) {
    return xi.components.at(x);
}

// g: P_x -> m over the vertex algebra  ~>  P -> coe_x(m)
inline QuiverModuleMorphism coe_transpose_to_quiver(const QuiverModule& p, std::size_t x,
                                                    const ModuleObject& mod, const QuiverModule& coe_mod,
                                                    const LinearMap& g_map) {
    const auto& q = p.quiver();
    require(g_map.rows() == mod.dim() && g_map.cols() == p.at(x).dim(),
            "coe_transpose_to_quiver: component must be dim(m) x dim(P_x)");
    std::vector<LinearMap> comps;
    for (std::size_t y = 0; y < q.vertex_count(); ++y) {
        if (y == x) {
            comps.push_back(g_map);
        } else if (q.less(y, x)) {
            StoredEdge e{"", y, x, p.monad_quiver().closure_morphism(y, x), p.closure_map(y, x)};
            comps.push_back(g_map.compose(p.element_transport(e)));
        } else {
            comps.push_back(LinearMap(p.field(), 0, p.at(y).dim()));
        }
    }
    return QuiverModuleMorphism{p, coe_mod, std::move(comps)};
}

inline LinearMap coe_transpose_to_vertex(const QuiverModuleMorphism& xi, std::size_t x) {
    return xi.components.at(x);
}

// ---- projective covers --------------------------------------------------------

struct ExFreeComponent {
    std::size_t vertex = 0;
    std::size_t rank_n = 0;
    QuiverModule module;  // ex_vertex(free(A_vertex, rank_n))
};

struct ProjectiveCover {
    QuiverModule cover;
    QuiverModuleMorphism epi;
    std::vector<ExFreeComponent> components;
    std::vector<QuiverModuleMorphism> injections;
};

inline ExFreeComponent ex_free(const MonadQuiver& u, std::size_t x, std::size_t n) {
    return ExFreeComponent{x, n, ex_functor(u, x, free_module(u.algebra_at(x), n))};
}

// The canonical epimorphism onto m from the direct sum over vertices of
// ex_x(free(A_x, dim M_x)); the component at x transposes the evaluation
// free(A_x, dim M_x) -> M_x, which is the structure map of M_x itself.
inline ProjectiveCover projective_cover(const QuiverModule& m) {
    const auto& u = m.monad_quiver();
    const auto& q = m.quiver();
    require(q.is_poset(), "projective_cover: quiver must be a poset");

    std::vector<ExFreeComponent> comps;
    std::vector<QuiverModuleMorphism> maps;  // component -> m
    for (std::size_t x = 0; x < q.vertex_count(); ++x) {
        const std::size_t n = m.at(x).dim();
        if (n == 0) continue;
        ExFreeComponent c = ex_free(u, x, n);
        const LinearMap evaluation = m.at(x).action();  // free(A_x, n) -> M_x
        maps.push_back(ex_transpose_to_quiver(c.module, x, free_module(u.algebra_at(x), n), m, evaluation));
        comps.push_back(std::move(c));
    }

    if (comps.empty()) {
        QuiverModule zero = zero_quiver_module(u);
        std::vector<LinearMap> zero_comps;
        for (std::size_t v = 0; v < q.vertex_count(); ++v)
            zero_comps.push_back(LinearMap(m.field(), m.at(v).dim(), 0));
        return ProjectiveCover{zero, QuiverModuleMorphism{zero, m, zero_comps}, {}, {}};
    }

    std::vector<QuiverModule> parts;
    parts.reserve(comps.size());
    for (const auto& c : comps) parts.push_back(c.module);
    QuiverDirectSum ds = direct_sum_quiver(parts);

    std::vector<LinearMap> epi_comps;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        LinearMap acc(m.field(), m.at(v).dim(), ds.module.at(v).dim());
        for (std::size_t i = 0; i < comps.size(); ++i)
            acc = acc + maps[i].components[v].compose(ds.projections[i].components[v]);
        epi_comps.push_back(std::move(acc));
    }
    return ProjectiveCover{ds.module, QuiverModuleMorphism{ds.module, m, epi_comps}, comps, ds.injections};
}

inline bool is_pointwise_epi(const QuiverModuleMorphism& xi) {
    for (std::size_t v = 0; v < xi.components.size(); ++v)
        if (rank(xi.components[v]) != xi.target.at(v).dim()) return false;
    return true;
}

struct LiftResult {
    QuiverModuleMorphism lift;  // g with p o g = f
    bool exact = false;
};

// Lift f: ex_x(free(A_x, n)) -> m through a pointwise epimorphism
// p: P -> m. The lift is found by transposing to the vertex and taking the
// pivot-based solution of one linear system there.
inline LiftResult lifting_check(const QuiverModuleMorphism& p, const ExFreeComponent& source,
                                const QuiverModuleMorphism& f) {
    const std::size_t x = source.vertex;
    const std::size_t n = source.rank_n;
    const auto& u = p.source.monad_quiver();
    const FDAlgebra& ax = u.algebra_at(x);
    require(is_pointwise_epi(p), "lifting_check: p is not a pointwise epimorphism");

    // transpose f to the vertex, then to a linear map k^n -> m_x
    const LinearMap f_x = f.components.at(x);
    const LinearMap v = adjoint_to_linear(ax, n, f.target.at(x), f_x);

    // solve p_x . u0 = v column by column
    const LinearMap& p_x = p.components.at(x);
    LinearMap u0(p.source.field(), p_x.cols(), v.cols());
    for (std::size_t j = 0; j < v.cols(); ++j) {
        const auto rr = rref_solve(p_x, v.column(j));
        require(rr.solution.has_value(), "lifting_check: linear lifting system is inconsistent");
        for (std::size_t i = 0; i < p_x.cols(); ++i) u0.at(i, j) = (*rr.solution)[i];
    }

    const LinearMap g_x = adjoint_to_module(ax, n, p.source.at(x), u0);
    QuiverModuleMorphism g =
        ex_transpose_to_quiver(source.module, x, free_module(ax, n), p.source, g_x);

    bool exact = true;
    for (std::size_t y = 0; y < g.components.size(); ++y)
        if (p.components[y].compose(g.components[y]) != f.components[y]) exact = false;
    return LiftResult{std::move(g), exact};
}

}  // namespace mq
