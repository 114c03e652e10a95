#pragma once

// Independent oracles used to pin expected values: a matrix-identity
// formulation of the algebra laws, exhaustive enumeration of modules and
// submodules over small prime fields, brute-force hom-space enumeration, and
// the short-exact-sequence preservation reading of flatness. These
// deliberately take different routes than the library implementations they
// check.

#include "monadquiver/quiver_module.hpp"
#include "monadquiver/scalar_change.hpp"

#include <vector>

namespace mqtest {

using namespace mq;

// algebra laws as monad-style matrix identities on tensor powers
inline bool algebra_laws_hold_oracle(const FDAlgebra& a) {
    const Field f = a.field();
    const std::size_t n = a.dim();
    const LinearMap mult = a.multiplication_map();
    const LinearMap id_n = LinearMap::identity(f, n);
    if (mult.compose(kronecker(mult, id_n)) != mult.compose(kronecker(id_n, mult))) return false;
    if (mult.compose(kronecker(a.unit_map(), id_n)) != id_n) return false;
    if (mult.compose(kronecker(id_n, a.unit_map())) != id_n) return false;
    return true;
}

// all matrices of M_m(F_p)
inline std::vector<LinearMap> all_matrices(const Field& f, std::size_t rows, std::size_t cols) {
    const std::uint64_t p = f.characteristic();
    std::size_t count = 1;
    for (std::size_t i = 0; i < rows * cols; ++i) count *= p;
    std::vector<LinearMap> out;
    out.reserve(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
        LinearMap m(f, rows, cols);
        std::size_t rest = idx;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                m.at(i, j) = Scalar::residue(f, rest % p);
                rest /= p;
            }
        out.push_back(std::move(m));
    }
    return out;
}

namespace detail {

// depth-first assignment of representing matrices rho(b_i) with early
// constraint checks; constraints fire once every index they mention is set
inline void enumerate_reps(const FDAlgebra& a, std::size_t m, std::vector<LinearMap>& assigned,
                           const std::vector<LinearMap>& candidates, std::vector<ModuleObject>& out) {
    const std::size_t n = a.dim();
    const Field f = a.field();
    const std::size_t next = assigned.size();
    if (next == n) {
        // assemble the action matrix: column (i, j) = rho_i . e_j
        LinearMap action(f, m, n * m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t r = 0; r < m; ++r) action.at(r, i * m + j) = assigned[i].at(r, j);
        out.emplace_back(a, m, std::move(action));
        return;
    }
    for (const auto& cand : candidates) {
        assigned.push_back(cand);
        bool ok = true;
        // unit constraint once its support is assigned
        {
            bool ready = true;
            for (std::size_t i = 0; i < n; ++i)
                if (!a.unit()[i].is_zero() && i > next) ready = false;
            if (ready) {
                LinearMap sum(f, m, m);
                for (std::size_t i = 0; i <= next; ++i)
                    if (!a.unit()[i].is_zero()) sum = sum + assigned[i].scaled(a.unit()[i]);
                if (!sum.is_identity()) ok = false;
            }
        }
        // multiplicativity for every fully assigned pair
        for (std::size_t i = 0; ok && i <= next; ++i)
            for (std::size_t j = 0; ok && j <= next; ++j) {
                bool ready = true;
                const Vec& c = a.mul_basis(i, j);
                for (std::size_t t = 0; t < n; ++t)
                    if (!c[t].is_zero() && t > next) ready = false;
                if (!ready) continue;
                LinearMap rhs(f, m, m);
                for (std::size_t t = 0; t <= next; ++t)
                    if (!c[t].is_zero()) rhs = rhs + assigned[t].scaled(c[t]);
                if (assigned[i].compose(assigned[j]) != rhs) ok = false;
            }
        if (ok) enumerate_reps(a, m, assigned, candidates, out);
        assigned.pop_back();
    }
}

}  // namespace detail

// every module structure on F_p^m over the algebra a
inline std::vector<ModuleObject> enumerate_modules(const FDAlgebra& a, std::size_t m) {
    if (m == 0) return {zero_module(a)};
    const auto candidates = all_matrices(a.field(), m, m);
    std::vector<LinearMap> assigned;
    std::vector<ModuleObject> out;
    detail::enumerate_reps(a, m, assigned, candidates, out);
    return out;
}

// all action-closed subspaces of a module over F_p (ambient dim kept tiny)
inline std::vector<Subspace> enumerate_submodules(const ModuleObject& mod) {
    const Field f = mod.field();
    const std::size_t m = mod.dim();
    std::vector<Vec> vectors = enumerate_vectors(f, m);
    std::vector<Subspace> out;
    const std::size_t subsets = std::size_t{1} << vectors.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::vector<Vec> span;
        for (std::size_t i = 0; i < vectors.size(); ++i)
            if (mask & (std::size_t{1} << i)) span.push_back(vectors[i]);
        Subspace s = Subspace::from_span(f, m, span);
        if (std::find(out.begin(), out.end(), s) != out.end()) continue;
        bool closed = true;
        for (const auto& b : s.basis())
            for (std::size_t i = 0; closed && i < mod.algebra().dim(); ++i)
                if (!s.contains(mod.act(unit_vec(f, mod.algebra().dim(), i), b))) closed = false;
        if (closed) out.push_back(std::move(s));
    }
    return out;
}

// flatness read off as preservation of short exact sequences: for every
// module of underlying dimension <= max_dim and every submodule, extension
// along phi must keep the inclusion injective, match image and kernel in the
// middle, and keep the projection surjective
inline bool flatness_ses_oracle(const AlgebraMorphism& phi, std::size_t max_dim = 2) {
    for (std::size_t m = 1; m <= max_dim; ++m) {
        for (const auto& mod : enumerate_modules(phi.source(), m)) {
            const ExtensionResult ext_m = extend_scalars(phi, mod);
            for (const auto& sub : enumerate_submodules(mod)) {
                if (sub.dim() == 0 || sub.dim() == m) continue;
                const ModuleObject n = submodule_from_subspace(mod, sub);
                const auto quot = quotient_by_subspace(mod, sub);
                const ExtensionResult ext_n = extend_scalars(phi, n);
                const ExtensionResult ext_q = extend_scalars(phi, quot.module);
                const LinearMap incl = extend_morphism(phi, sub.inclusion(), ext_n, ext_m);
                const LinearMap proj = extend_morphism(phi, quot.projection.map(), ext_m, ext_q);
                if (rank(incl) != ext_n.module.dim()) return false;
                if (image(incl) != kernel(proj)) return false;
                if (rank(proj) != ext_q.module.dim()) return false;
            }
        }
    }
    return true;
}

// brute-force equivariant maps m -> n over F_p (dimensions kept tiny)
inline std::vector<LinearMap> enumerate_module_homs(const ModuleObject& m, const ModuleObject& n) {
    std::vector<LinearMap> out;
    for (const auto& cand : all_matrices(m.field(), n.dim(), m.dim()))
        if (ModuleMorphism(m, n, cand).is_equivariant()) out.push_back(cand);
    return out;
}

// brute-force morphisms of quiver modules over F_p (total entry count tiny):
// every tuple of per-vertex matrices, filtered by equivariance and the edge
// squares
inline std::vector<std::vector<LinearMap>> enumerate_quiver_homs(const QuiverModule& m,
                                                                 const QuiverModule& n) {
    const Field f = m.field();
    const std::uint64_t p = f.characteristic();
    const std::size_t nv = m.quiver().vertex_count();
    std::vector<std::size_t> sizes;
    std::size_t total_entries = 0;
    for (std::size_t v = 0; v < nv; ++v) {
        sizes.push_back(n.at(v).dim() * m.at(v).dim());
        total_entries += sizes.back();
    }
    std::size_t count = 1;
    for (std::size_t i = 0; i < total_entries; ++i) count *= p;

    const auto src_edges = m.stored_edges();
    const auto tgt_edges = n.stored_edges();
    std::vector<std::vector<LinearMap>> out;
    for (std::size_t idx = 0; idx < count; ++idx) {
        std::size_t rest = idx;
        std::vector<LinearMap> comps;
        for (std::size_t v = 0; v < nv; ++v) {
            LinearMap c(f, n.at(v).dim(), m.at(v).dim());
            for (std::size_t i = 0; i < c.rows(); ++i)
                for (std::size_t j = 0; j < c.cols(); ++j) {
                    c.at(i, j) = Scalar::residue(f, rest % p);
                    rest /= p;
                }
            comps.push_back(std::move(c));
        }
        bool ok = true;
        for (std::size_t v = 0; ok && v < nv; ++v)
            if (!ModuleMorphism(m.at(v), n.at(v), comps[v]).is_equivariant()) ok = false;
        for (std::size_t i = 0; ok && i < src_edges.size(); ++i) {
            const auto& es = src_edges[i];
            const ExtensionResult ext_src = m.extension_along(es);
            const ExtensionResult ext_tgt = extend_scalars(es.morphism, n.at(es.src));
            const LinearMap lifted = extend_morphism(es.morphism, comps[es.src], ext_src, ext_tgt);
            if (tgt_edges[i].map.compose(lifted) != comps[es.dst].compose(es.map)) ok = false;
        }
        if (ok) out.push_back(std::move(comps));
    }
    return out;
}

}  // namespace mqtest
