#include <catch2/catch_amalgamated.hpp>

#include "monadquiver/instances.hpp"
#include "support/catalog.hpp"
#include "support/oracles.hpp"

using namespace mq;
using namespace mqtest;

TEST_CASE("restriction of scalars") {
    const Field f2 = Field::prime(2);
    const auto a = truncated_polynomial_algebra(f2, 2);
    const auto k = base_field_algebra(f2);

    SECTION("along the identity nothing changes") {
        const auto m = regular_module(a);
        REQUIRE(restrict_scalars(identity_morphism(a), m) == m);
    }
    SECTION("along the unit of A the underlying space survives") {
        const auto m = regular_module(a);
        const auto r = restrict_scalars(unit_inclusion(a), m);
        REQUIRE(r.dim() == 2);
        REQUIRE(r.algebra() == k);
        REQUIRE(r.action_of(k.unit()).is_identity());
    }
    SECTION("the trivial module restricted along the augmentation has t acting by zero") {
        const auto line_over_k = regular_module(k);
        const auto r = restrict_scalars(truncation_augmentation(a), line_over_k);
        REQUIRE(r.algebra() == a);
        REQUIRE(r.action() == LinearMap::from_ints(f2, 1, 2, {1, 0}));
        REQUIRE(validate_module(r).pass);
    }
}

TEST_CASE("extension of scalars") {
    const Field f2 = Field::prime(2);
    const auto a = truncated_polynomial_algebra(f2, 2);
    const auto k = base_field_algebra(f2);
    const auto aug = truncation_augmentation(a);

    SECTION("extension of the free module along the augmentation is free of rank one") {
        const auto ext = extend_scalars(aug, regular_module(a));
        REQUIRE(ext.module.dim() == 1);
        REQUIRE(validate_module(ext.module).pass);
    }
    SECTION("extension along the unit produces free modules") {
        const auto ext = extend_scalars(unit_inclusion(a), free_module(k, 3));
        REQUIRE(ext.module.dim() == 6);
        REQUIRE(validate_module(ext.module).pass);
        // no relations: the projection is the identity
        REQUIRE(ext.relations.dim() == 0);
        REQUIRE(ext.projection.is_identity());
    }
    SECTION("extension of the simple module along the augmentation, by hand") {
        // the difference map is zero on both basis tensors, so nothing is killed
        const ModuleObject simple(a, 1, LinearMap::from_ints(f2, 1, 2, {1, 0}));
        const auto ext = extend_scalars(aug, simple);
        REQUIRE(ext.module.dim() == 1);
        REQUIRE(ext.relations.dim() == 0);
    }
    SECTION("extension is functorial through the canonical comparison isomorphism") {
        // aug o unit = id_k; the comparison aug^* unit^* M -> id^* M must certify
        const auto m = regular_module(k);
        const auto unit = unit_inclusion(a);
        const auto composite = compose(aug, unit);
        const auto ext_unit = extend_scalars(unit, m);
        const auto ext_aug_of = extend_scalars(aug, ext_unit.module);
        const auto ext_comp = extend_scalars(composite, m);
        const auto iso = composition_iso(unit, aug, m, ext_unit, ext_aug_of, ext_comp);
        REQUIRE(is_invertible(iso.iso));
        REQUIRE(iso.iso.compose(iso.iso_inverse).is_identity());
    }
    SECTION("extension preserves direct sums up to the canonical isomorphism") {
        std::mt19937_64 rng(55);
        for (const auto& [name, phi] : morphism_catalog(f2)) {
            if (phi.source().dim() > 2 || phi.target().dim() > 4) continue;
            const ModuleObject m1 = random_module(phi.source(), rng, 1, 4);
            const ModuleObject m2 = random_module(phi.source(), rng, 1, 4);
            const auto ds = direct_sum({m1, m2});
            const auto ext_sum = extend_scalars(phi, ds.module);
            const auto ext_1 = extend_scalars(phi, m1);
            const auto ext_2 = extend_scalars(phi, m2);
            const LinearMap cmp = extend_morphism(phi, ds.injections[0], ext_1, ext_sum)
                                      .hstack(extend_morphism(phi, ds.injections[1], ext_2, ext_sum));
            REQUIRE(cmp.rows() == ext_sum.module.dim());
            REQUIRE(cmp.cols() == ext_1.module.dim() + ext_2.module.dim());
            REQUIRE(is_invertible(cmp));
        }
    }
}

TEST_CASE("hom transposition across the extension/restriction adjunction") {
    const Field f2 = Field::prime(2);
    const auto a = truncated_polynomial_algebra(f2, 2);
    const auto aug = truncation_augmentation(a);
    const auto m = regular_module(a);
    const auto ext = extend_scalars(aug, m);

    SECTION("the identity on the extension transposes to the adjunction unit") {
        const LinearMap unit = transpose_to_restricted(LinearMap::identity(f2, ext.module.dim()), ext);
        REQUIRE(unit == ext.unit_map);
    }
    SECTION("zero transposes to zero") {
        const auto k_line = regular_module(base_field_algebra(f2));
        REQUIRE(transpose_to_restricted(LinearMap::zero(f2, 1, ext.module.dim()), ext).is_zero());
        REQUIRE(transpose_to_extended(aug, k_line, LinearMap::zero(f2, 1, 2), ext).is_zero());
    }
    SECTION("hom-set sizes on the two sides agree by enumeration") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 6; ++trial) {
            const ModuleObject src = random_module(a, rng, 1, 2);
            const ModuleObject tgt = random_module(base_field_algebra(f2), rng, 2, 2);
            const auto ext_src = extend_scalars(aug, src);
            const auto restricted = restrict_scalars(aug, tgt);
            REQUIRE(enumerate_module_homs(ext_src.module, tgt).size() ==
                    enumerate_module_homs(src, restricted).size());
        }
    }
}

TEST_CASE("triangle identities hold on catalog morphisms") {
    std::mt19937_64 rng(88);
    for (const Field f : {Field::prime(2), Field::prime(3)}) {
        for (const auto& [name, phi] : morphism_catalog(f)) {
            if (phi.source().dim() > 4 || phi.target().dim() > 4) continue;
            INFO(name << " over " << f.name());
            const ModuleObject m = random_module(phi.source(), rng, 1, 6);
            const ModuleObject mp = random_module(phi.target(), rng, 1, 6);
            REQUIRE(triangle_identities_hold(phi, m, mp));
        }
    }
}

TEST_CASE("extension of free modules is canonically free") {
    const Field f3 = Field::prime(3);
    const Field f2 = Field::prime(2);
    const auto tp2_f2 = truncated_polynomial_algebra(f2, 2);

    SECTION("rank one along the augmentation") {
        const auto fe = extend_free_check(truncation_augmentation(tp2_f2), 1);
        REQUIRE(fe.iso.rows() == 1);
    }
    SECTION("rank zero is the isomorphism of zero modules") {
        const auto fe = extend_free_check(truncation_augmentation(tp2_f2), 0);
        REQUIRE(fe.iso.rows() == 0);
        REQUIRE(fe.iso.cols() == 0);
    }
    SECTION("rank three into the matrix algebra") {
        const auto fe = extend_free_check(unit_inclusion(full_matrix_algebra(f3, 2)), 3);
        REQUIRE(fe.iso.rows() == 12);
        REQUIRE(is_invertible(fe.iso));
    }
}

TEST_CASE("flat extensions preserve short exact sequences, non-flat ones break one") {
    const Field f2 = Field::prime(2);
    const auto a = truncated_polynomial_algebra(f2, 2);
    const auto aug = truncation_augmentation(a);

    // the ideal (t) inside A: extension of its inclusion collapses to zero
    const auto reg = regular_module(a);
    const Subspace ideal = generated_submodule(reg, {unit_vec(f2, 2, 1)});
    REQUIRE(ideal.dim() == 1);
    const ModuleObject ideal_mod = submodule_from_subspace(reg, ideal);
    const auto ext_ideal = extend_scalars(aug, ideal_mod);
    const auto ext_reg = extend_scalars(aug, reg);
    const LinearMap ext_incl = extend_morphism(aug, ideal.inclusion(), ext_ideal, ext_reg);
    REQUIRE(ext_ideal.module.dim() == 1);
    REQUIRE(rank(ext_incl) == 0);  // injectivity lost: the sequence does not stay exact

    // a flat morphism keeps every small sequence exact
    const auto tp4 = truncated_polynomial_algebra(f2, 4);
    REQUIRE(flatness_ses_oracle(truncated_polynomial_morphism(a, tp4, 2, 4, 2)));
}
