#pragma once

// Shared test fixtures: the standard algebra and morphism catalog over a
// given field, and a handful of small monad quivers.

#include "monadquiver/monadquiver.hpp"

#include <string>
#include <vector>

namespace mqtest {

using namespace mq;

struct NamedAlgebra {
    std::string name;
    FDAlgebra algebra;
};

struct NamedMorphism {
    std::string name;
    AlgebraMorphism phi;
};

inline std::vector<NamedAlgebra> algebra_catalog(const Field& f) {
    std::vector<NamedAlgebra> out;
    out.push_back({"k", base_field_algebra(f)});
    for (std::size_t n = 2; n <= 4; ++n)
        out.push_back({"tp" + std::to_string(n), truncated_polynomial_algebra(f, n)});
    for (std::size_t n = 2; n <= 4; ++n)
        out.push_back({"c" + std::to_string(n), cyclic_group_algebra(f, n)});
    out.push_back({"m2", full_matrix_algebra(f, 2)});
    out.push_back({"tp2xk", product_algebra(truncated_polynomial_algebra(f, 2), base_field_algebra(f))});
    out.push_back({"c2xc2", product_algebra(cyclic_group_algebra(f, 2), cyclic_group_algebra(f, 2))});
    return out;
}

inline std::vector<NamedMorphism> morphism_catalog(const Field& f) {
    const auto k = base_field_algebra(f);
    const auto tp2 = truncated_polynomial_algebra(f, 2);
    const auto tp3 = truncated_polynomial_algebra(f, 3);
    const auto tp4 = truncated_polynomial_algebra(f, 4);
    const auto c2 = cyclic_group_algebra(f, 2);
    const auto c3 = cyclic_group_algebra(f, 3);
    const auto m2 = full_matrix_algebra(f, 2);
    const auto kxk = product_algebra(k, k);

    std::vector<NamedMorphism> out;
    out.push_back({"id_k", identity_morphism(k)});
    out.push_back({"id_tp2", identity_morphism(tp2)});
    out.push_back({"id_c2", identity_morphism(c2)});
    out.push_back({"id_m2", identity_morphism(m2)});
    out.push_back({"unit_tp2", unit_inclusion(tp2)});
    out.push_back({"unit_tp3", unit_inclusion(tp3)});
    out.push_back({"unit_tp4", unit_inclusion(tp4)});
    out.push_back({"unit_c2", unit_inclusion(c2)});
    out.push_back({"unit_c3", unit_inclusion(c3)});
    out.push_back({"unit_m2", unit_inclusion(m2)});
    out.push_back({"aug_tp2", truncation_augmentation(tp2)});
    out.push_back({"aug_tp3", truncation_augmentation(tp3)});
    out.push_back({"aug_tp4", truncation_augmentation(tp4)});
    out.push_back({"aug_c2", augmentation_cyclic(c2)});
    out.push_back({"aug_c3", augmentation_cyclic(c3)});
    // t -> t^2 embedding and the t -> t truncation quotient
    out.push_back({"sq_tp2_tp4", truncated_polynomial_morphism(tp2, tp4, 2, 4, 2)});
    out.push_back({"quo_tp4_tp2", truncated_polynomial_morphism(tp4, tp2, 4, 2, 1)});
    // diagonal into and projection out of k x k
    out.push_back({"diag_kxk", AlgebraMorphism(k, kxk, LinearMap::from_ints(f, 2, 1, {1, 1}))});
    out.push_back({"proj_kxk", AlgebraMorphism(kxk, k, LinearMap::from_ints(f, 1, 2, {1, 0}))});
    return out;
}

// x -> y along one morphism
inline MonadQuiver chain_quiver(const AlgebraMorphism& phi) {
    Quiver q({"x", "y"}, {{"e", 0, 1}});
    return MonadQuiver(q, {phi.source(), phi.target()}, {phi});
}

// x -> y -> z along two composable morphisms
inline MonadQuiver chain3_quiver(const AlgebraMorphism& phi, const AlgebraMorphism& psi) {
    Quiver q({"x", "y", "z"}, {{"e1", 0, 1}, {"e2", 1, 2}});
    return MonadQuiver(q, {phi.source(), phi.target(), psi.target()}, {phi, psi});
}

// rooted vee: r -> a, r -> b
inline MonadQuiver vee_quiver(const AlgebraMorphism& to_a, const AlgebraMorphism& to_b) {
    Quiver q({"r", "a", "b"}, {{"ea", 0, 1}, {"eb", 0, 2}});
    return MonadQuiver(q, {to_a.source(), to_a.target(), to_b.target()}, {to_a, to_b});
}

// rooted flat diamond over any field: r = k, arms tp2 and c2, top M_2(k),
// with t -> e12 and g -> the swap matrix; both composites from k are the unit
inline MonadQuiver flat_diamond_quiver(const Field& f) {
    const auto k = base_field_algebra(f);
    const auto tp2 = truncated_polynomial_algebra(f, 2);
    const auto c2 = cyclic_group_algebra(f, 2);
    const auto m2 = full_matrix_algebra(f, 2);
    // t -> e12: columns are images of 1 and t in the e11,e12,e21,e22 basis
    AlgebraMorphism arm_a(tp2, m2, LinearMap::from_ints(f, 4, 2, {1, 0, 0, 1, 0, 0, 1, 0}));
    // g -> e12 + e21
    AlgebraMorphism arm_b(c2, m2, LinearMap::from_ints(f, 4, 2, {1, 0, 0, 1, 0, 1, 1, 0}));
    Quiver q({"r", "a", "b", "t"}, {{"ra", 0, 1}, {"rb", 0, 2}, {"at", 1, 3}, {"bt", 2, 3}});
    return MonadQuiver(q, {k, tp2, c2, m2}, {unit_inclusion(tp2), unit_inclusion(c2), arm_a, arm_b});
}

// two minimal vertices mapping into one top vertex: no component minimum
inline MonadQuiver rootless_quiver(const Field& f) {
    const auto k = base_field_algebra(f);
    Quiver q({"a", "b", "c"}, {{"ac", 0, 2}, {"bc", 1, 2}});
    return MonadQuiver(q, {k, k, k}, {identity_morphism(k), identity_morphism(k)});
}

}  // namespace mqtest
