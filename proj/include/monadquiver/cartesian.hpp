#pragma once

// Cartesian modules: the finite-dimensional hull algorithm and the
// quasi-coherator for rooted posets. The hull of an element starts from its
// generated subobject and sweeps the edges round-robin, enlarging the family
// until the transported image along every edge equals the subspace at the
// far vertex. Dimensions are bounded, every changing sweep strictly grows
// the family, so the sweep count is at most the total dimension plus one.

#include "monadquiver/vertex_functors.hpp"

namespace mq {

// One enlargement step along a single edge y -> z of a flat, cartesian
// instance: generators of S_z missing from the transported image of S_y are
// lifted through the extended free cover of M_z; every free summand touched
// by a lift joins S_y, and S_z becomes the transported image of the enlarged
// S_y. Lifts are the pivot-based solutions of the cover system, so the step
// is deterministic. The result never shrinks any vertex subspace.
inline SubobjectFamily edge_enlarge(const QuiverModule& m, const StoredEdge& e, const SubobjectFamily& s) {
    require(is_flat_morphism(e.morphism),
            "edge_enlarge: edge " + e.label + " is not flat");
    require(e.map.rows() == e.map.cols() && rank(e.map) == e.map.rows(),
            "edge_enlarge: edge structure map of " + e.label + " is not invertible");

    SubobjectFamily out = s;
    const Subspace transported = transport_subspace(m, e, s.vertex_subspaces[e.src]);

    std::vector<Vec> missing;
    for (const auto& gen : s.vertex_subspaces[e.dst].basis())
        if (!transported.contains(gen)) missing.push_back(gen);

    if (missing.empty()) {
        out.vertex_subspaces[e.dst] = transported;  // contains the old S_dst
        return out;
    }

    // free cover of M_src pushed across the edge: free_dst(n) -> M_dst
    const std::size_t n = m.at(e.src).dim();
    const ModuleObject free_src = free_module(e.morphism.source(), n);
    const ExtensionResult ext_free = extend_scalars(e.morphism, free_src);
    const ExtensionResult ext_m = m.extension_along(e);
    const LinearMap cover_ext = extend_morphism(e.morphism, m.at(e.src).action(), ext_free, ext_m);
    const FreeExtensionIso fe = extend_free_check(e.morphism, n);
    const LinearMap cover = e.map.compose(cover_ext).compose(fe.iso_inverse);  // free_dst(n) -> M_dst

    std::vector<bool> touched(n, false);
    for (const auto& gen : missing) {
        const auto rr = rref_solve(cover, gen);
        require(rr.solution.has_value(), "edge_enlarge: cover system is inconsistent");
        const std::size_t n_dst = e.morphism.target().dim();
        for (std::size_t i = 0; i < n_dst; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!(*rr.solution)[i * n + j].is_zero()) touched[j] = true;
    }
    std::vector<Vec> new_gens;
    for (std::size_t j = 0; j < n; ++j)
        if (touched[j]) new_gens.push_back(unit_vec(m.field(), m.at(e.src).dim(), j));
    out.vertex_subspaces[e.src] =
        s.vertex_subspaces[e.src].sum(generated_submodule(m.at(e.src), new_gens));
    out.vertex_subspaces[e.dst] = transport_subspace(m, e, out.vertex_subspaces[e.src]);
    require(out.vertex_subspaces[e.dst].contains(s.vertex_subspaces[e.dst]),
            "edge_enlarge: enlargement failed to cover the previous subspace");
    return out;
}

struct CartesianHull {
    QuiverModule hull;
    std::vector<LinearMap> inclusions;  // per vertex, hull -> m
    SubobjectFamily family;
    std::size_t sweeps = 0;
};

inline void require_hull_preconditions(const QuiverModule& m) {
    require(m.quiver().is_poset(), "cartesian_hull: quiver must be a poset");
    for (const auto& e : m.stored_edges())
        require(is_flat_morphism(e.morphism), "cartesian_hull: monad quiver is not flat on " + e.label);
    const auto cart = is_cartesian(m);
    require(cart.pass, "cartesian_hull: module is not cartesian" +
                           (cart.witnesses.empty() ? std::string()
                                                   : " (" + cart.witnesses.front().to_string() + ")"));
}

// The cartesian subobject generated by one tagged element: the generated
// subobject followed by round-robin edge enlargement to a fixpoint.
inline CartesianHull cartesian_hull(const QuiverModule& m, const TaggedElement& z) {
    require_hull_preconditions(m);
    require(z.vertex < m.quiver().vertex_count(), "cartesian_hull: vertex not in quiver");
    require(z.coords.size() == m.at(z.vertex).dim(), "cartesian_hull: element length mismatch");

    SubobjectFamily s = generated_subobject(m, z);
    const auto edges = m.stored_edges();
    const std::size_t sweep_bound = m.total_dim() + 1;
    std::size_t sweeps = 0;
    bool changed = true;
    while (changed) {
        require(sweeps < sweep_bound + 1, "cartesian_hull: sweep bound exceeded");
        changed = false;
        ++sweeps;
        for (const auto& e : edges) {
            SubobjectFamily next = edge_enlarge(m, e, s);
            if (next != s) {
                s = std::move(next);
                changed = true;
            }
        }
    }

    QuiverSubmodule sub = subfamily_to_module(m, s);
    require(s.vertex_subspaces[z.vertex].contains(z.coords), "cartesian_hull: element escaped the hull");
    const auto cart = is_cartesian(sub.module);
    require(cart.pass, "cartesian_hull: result is not cartesian");
    return CartesianHull{sub.module, sub.inclusions, s, sweeps};
}

struct HullSummand {
    TaggedElement generator;
    CartesianHull hull;
};

// Hulls of a spanning element set whose per-vertex sum reconstructs m.
// Elements already inside the running sum are skipped; the scan stops once
// the sum is full. Over Q the spanning set is the per-vertex basis vectors.
inline std::vector<HullSummand> hull_decomposition(const QuiverModule& m) {
    require_hull_preconditions(m);
    std::vector<HullSummand> out;
    SubobjectFamily running = zero_family(m);
    const std::size_t total = m.total_dim();

    for (const auto& z : elements(m).elements) {
        if (running.total_dim() == total) break;
        if (is_zero_vec(z.coords)) continue;
        if (running.vertex_subspaces[z.vertex].contains(z.coords)) continue;
        CartesianHull h = cartesian_hull(m, z);
        for (std::size_t v = 0; v < running.vertex_subspaces.size(); ++v)
            running.vertex_subspaces[v] =
                running.vertex_subspaces[v].sum(h.family.vertex_subspaces[v]);
        out.push_back(HullSummand{z, std::move(h)});
    }
    require(running.total_dim() == total, "hull_decomposition: spanning hulls do not reconstruct the module");
    return out;
}

// ---- quasi-coherator -----------------------------------------------------------

struct CoheratorResult {
    QuiverModule coherated;          // Q(m), cartesian
    QuiverModuleMorphism counit;     // Q(m) -> m
    std::vector<std::size_t> roots;  // minimum vertex of each component
    std::vector<std::vector<std::size_t>> components;
    // per component, per vertex: block injection/projection of Q(m)
    std::vector<std::vector<LinearMap>> injections;
    std::vector<std::vector<LinearMap>> projections;
};

// Right adjoint to the inclusion of cartesian modules, computed on posets
// whose connected components each have a minimum vertex r: per component,
// Q(m) = ex_r(M_r) with counit given by the structure maps out of the root.
inline CoheratorResult coherator(const QuiverModule& m) {
    const auto& q = m.quiver();
    const auto& u = m.monad_quiver();
    require(q.is_poset(), "coherator: quiver must be a poset");
    for (const auto& e : m.stored_edges())
        require(is_flat_morphism(e.morphism), "coherator: monad quiver is not flat on " + e.label);

    std::vector<bool> seen(q.vertex_count(), false);
    std::vector<std::size_t> roots;
    std::vector<std::vector<std::size_t>> components;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        if (seen[v]) continue;
        auto comp = q.component_of(v);
        for (auto w : comp) seen[w] = true;
        std::size_t root = comp.size();
        for (auto r : comp) {
            bool min = true;
            for (auto w : comp)
                if (!q.leq(r, w)) min = false;
            if (min) {
                root = r;
                break;
            }
        }
        require(root != comp.size(), "unsupported: component without minimum");
        roots.push_back(root);
        components.push_back(std::move(comp));
    }

    std::vector<QuiverModule> parts;
    parts.reserve(roots.size());
    for (auto r : roots) parts.push_back(ex_functor(u, r, m.at(r)));
    QuiverDirectSum ds = direct_sum_quiver(parts);

    std::vector<std::vector<LinearMap>> injections, projections;
    for (std::size_t c = 0; c < parts.size(); ++c) {
        injections.push_back(ds.injections[c].components);
        projections.push_back(ds.projections[c].components);
    }

    std::vector<LinearMap> counit_comps;
    for (std::size_t y = 0; y < q.vertex_count(); ++y)
        counit_comps.push_back(LinearMap(m.field(), m.at(y).dim(), ds.module.at(y).dim()));
    for (std::size_t c = 0; c < roots.size(); ++c) {
        const std::size_t r = roots[c];
        for (auto y : components[c]) {
            const LinearMap eps = (y == r) ? LinearMap::identity(m.field(), m.at(r).dim())
                                           : m.closure_map(r, y);
            counit_comps[y] = eps.compose(projections[c][y]);
        }
    }
    QuiverModuleMorphism counit{ds.module, m, std::move(counit_comps)};

    require(is_cartesian(ds.module).pass, "coherator: result is not cartesian");
    require(validate_quiver_morphism(counit).pass, "coherator: counit is not a morphism");
    return CoheratorResult{std::move(ds.module), std::move(counit),       std::move(roots),
                           std::move(components), std::move(injections), std::move(projections)};
}

struct FactorizationResult {
    QuiverModuleMorphism factorization;  // g : n -> Q(m) with counit o g = f
    bool exact = false;                  // counit o g = f holds entrywise
    bool unique = false;                 // no nonzero g0 with counit o g0 = 0
};

// Universal property at a cartesian module n: every f: n -> m factors
// uniquely through the counit. The factorization is determined at the roots
// and propagated through the cartesian structure of n.
inline FactorizationResult coherator_universal_check(const QuiverModule& n, const QuiverModuleMorphism& f,
                                                     const CoheratorResult& coh) {
    require(is_cartesian(n).pass, "coherator_universal_check: source is not cartesian");
    const auto& q = n.quiver();
    const auto& u = n.monad_quiver();
    const QuiverModule& qm = coh.coherated;

    std::vector<LinearMap> comps;
    for (std::size_t y = 0; y < q.vertex_count(); ++y)
        comps.push_back(LinearMap(n.field(), qm.at(y).dim(), n.at(y).dim()));
    for (std::size_t c = 0; c < coh.roots.size(); ++c) {
        const std::size_t r = coh.roots[c];
        const LinearMap& g_r = f.components.at(r);
        for (auto y : coh.components[c]) {
            if (y == r) {
                comps[y] = coh.injections[c][r].compose(g_r);
                continue;
            }
            const AlgebraMorphism& chi = u.closure_morphism(r, y);
            ExtensionResult ext_n = extend_scalars(chi, n.at(r));
            ExtensionResult ext_m = extend_scalars(chi, f.target.at(r));
            const LinearMap pushed = extend_morphism(chi, g_r, ext_n, ext_m);
            comps[y] = coh.injections[c][y].compose(pushed).compose(inverse(n.closure_map(r, y)));
        }
    }

    QuiverModuleMorphism g{n, qm, comps};
    bool exact = true;
    for (std::size_t y = 0; y < q.vertex_count(); ++y)
        if (coh.counit.components[y].compose(g.components[y]) != f.components[y]) exact = false;

    // uniqueness: the only morphism killed by the counit is zero
    bool unique = true;
    const auto hom = quiver_hom_space_basis(n, qm);
    if (!hom.empty()) {
        std::vector<Vec> cols;
        for (const auto& h : hom) {
            Vec col;
            for (std::size_t y = 0; y < q.vertex_count(); ++y) {
                const LinearMap prod = coh.counit.components[y].compose(h.components[y]);
                for (std::size_t i = 0; i < prod.rows(); ++i)
                    for (std::size_t j = 0; j < prod.cols(); ++j) col.push_back(prod.at(i, j));
            }
            cols.push_back(std::move(col));
        }
        if (cols.front().empty()) {
            unique = hom.empty();
        } else {
            unique = rank(LinearMap::from_columns(n.field(), cols.front().size(), cols)) == hom.size();
        }
    }
    return FactorizationResult{std::move(g), exact, unique};
}

}  // namespace mq
