#pragma once

// Seeded random instances for property checks: scalars, modules (quotients
// of free modules by generated submodules), equivariant morphisms sampled
// from hom-space bases, and quiver modules assembled from vertex extensions.
// Everything is driven by a caller-owned mt19937_64 so runs reproduce.

#include "monadquiver/vertex_functors.hpp"

#include <random>

namespace mq {

inline Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
    if (f.is_prime_field()) return Scalar::residue(f, rng() % f.characteristic());
    const long long num = static_cast<long long>(rng() % 7) - 3;  // small exact rationals
    const long long den = 1 + static_cast<long long>(rng() % 3);
    return Scalar::from_rational(BigInt(num), BigInt(den));
}

inline Vec random_vec(const Field& f, std::size_t n, std::mt19937_64& rng) {
    Vec v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(f, rng));
    return v;
}

inline LinearMap random_map(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    LinearMap m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_scalar(f, rng);
    return m;
}

// a random quotient of a free module by a generated submodule
inline ModuleObject random_module(const FDAlgebra& a, std::mt19937_64& rng, std::size_t max_rank = 2,
                                  std::size_t max_dim = 64) {
    for (int attempt = 0; attempt < 32; ++attempt) {
        const std::size_t r = 1 + rng() % max_rank;
        const ModuleObject m0 = free_module(a, r);
        std::vector<Vec> relations;
        const std::size_t k = rng() % 3;
        for (std::size_t i = 0; i < k; ++i) relations.push_back(random_vec(a.field(), m0.dim(), rng));
        const Subspace s = generated_submodule(m0, relations);
        auto q = quotient_by_subspace(m0, s);
        if (q.module.dim() <= max_dim) return q.module;
    }
    return zero_module(a);
}

// a random equivariant map m -> n (a combination of a hom-space basis)
inline LinearMap random_module_morphism(const ModuleObject& m, const ModuleObject& n,
                                        std::mt19937_64& rng) {
    const auto basis = hom_space_basis(m, n);
    LinearMap g(m.field(), n.dim(), m.dim());
    for (const auto& b : basis) g = g + b.scaled(random_scalar(m.field(), rng));
    return g;
}

// a random valid quiver module over a poset monad quiver: a direct sum of
// vertex extensions of random modules
inline QuiverModule random_quiver_module(const MonadQuiver& u, std::mt19937_64& rng,
                                         std::size_t parts = 2, std::size_t max_rank = 1,
                                         std::size_t max_dim = 8) {
    const auto& q = u.quiver();
    require(q.is_poset(), "random_quiver_module: quiver must be a poset");
    std::vector<QuiverModule> summands;
    for (std::size_t i = 0; i < parts; ++i) {
        const std::size_t x = rng() % q.vertex_count();
        summands.push_back(ex_functor(u, x, random_module(u.algebra_at(x), rng, max_rank, max_dim)));
    }
    if (summands.size() == 1) return summands.front();
    return direct_sum_quiver(summands).module;
}

// a random cartesian quiver module: extensions from component minima only
inline QuiverModule random_cartesian_module(const MonadQuiver& u, std::mt19937_64& rng,
                                            const std::vector<std::size_t>& roots, std::size_t parts = 1,
                                            std::size_t max_rank = 1, std::size_t max_dim = 8) {
    std::vector<QuiverModule> summands;
    for (std::size_t i = 0; i < parts; ++i)
        for (const auto r : roots)
            summands.push_back(ex_functor(u, r, random_module(u.algebra_at(r), rng, max_rank, max_dim)));
    if (summands.size() == 1) return summands.front();
    return direct_sum_quiver(summands).module;
}

// a random morphism between quiver modules, sampled from the hom space
inline QuiverModuleMorphism random_quiver_morphism(const QuiverModule& m, const QuiverModule& n,
                                                   std::mt19937_64& rng) {
    const auto basis = quiver_hom_space_basis(m, n);
    std::vector<LinearMap> comps;
    for (std::size_t v = 0; v < m.quiver().vertex_count(); ++v)
        comps.push_back(LinearMap(m.field(), n.at(v).dim(), m.at(v).dim()));
    for (const auto& b : basis) {
        const Scalar c = random_scalar(m.field(), rng);
        for (std::size_t v = 0; v < comps.size(); ++v)
            comps[v] = comps[v] + b.components[v].scaled(c);
    }
    return QuiverModuleMorphism{m, n, std::move(comps)};
}

// a random nonzero element of a quiver module, tagged with its vertex
inline TaggedElement random_element(const QuiverModule& m, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        const std::size_t v = rng() % m.quiver().vertex_count();
        if (m.at(v).dim() == 0) continue;
        Vec coords = random_vec(m.field(), m.at(v).dim(), rng);
        if (!is_zero_vec(coords)) return TaggedElement{v, std::move(coords)};
    }
    // all-zero module: the zero element at vertex 0
    return TaggedElement{0, zero_vec(m.field(), m.at(0).dim())};
}

}  // namespace mq
