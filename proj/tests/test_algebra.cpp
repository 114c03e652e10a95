#include <catch2/catch_amalgamated.hpp>

#include "support/catalog.hpp"
#include "support/oracles.hpp"

using namespace mq;
using namespace mqtest;

TEST_CASE("validate_algebra on the stock examples") {
    const Field f2 = Field::prime(2);

    SECTION("truncated polynomial ring is valid") {
        REQUIRE(validate_algebra(truncated_polynomial_algebra(f2, 2)).pass);
    }
    SECTION("breaking t.t in k[t]/(t^3) fails with a triple witness") {
        // set t.t = 1: then (t.t).t^2 = t^2 while t.(t.t^2) = t.0 = 0
        auto a = truncated_polynomial_algebra(f2, 3);
        std::vector<std::vector<Vec>> mul;
        for (std::size_t i = 0; i < 3; ++i) {
            std::vector<Vec> row;
            for (std::size_t j = 0; j < 3; ++j) row.push_back(a.mul_basis(i, j));
            mul.push_back(row);
        }
        mul[1][1] = unit_vec(f2, 3, 0);
        const FDAlgebra broken(f2, mul, a.unit());
        const auto rep = validate_algebra(broken);
        REQUIRE(!rep.pass);
        REQUIRE(rep.witnesses.front().kind == "triple");
        REQUIRE(!algebra_laws_hold_oracle(broken));
    }
    SECTION("one-dimensional algebra") { REQUIRE(validate_algebra(base_field_algebra(f2)).pass); }
}

TEST_CASE("validate_morphism on the stock examples") {
    const Field f2 = Field::prime(2);
    const auto a = truncated_polynomial_algebra(f2, 2);
    const auto k = base_field_algebra(f2);

    REQUIRE(validate_morphism(truncation_augmentation(a)).pass);
    REQUIRE(validate_morphism(identity_morphism(a)).pass);

    // t -> 1 is not multiplicative: phi(t.t) = phi(0) = 0 but phi(t)^2 = 1
    const AlgebraMorphism bad(a, k, LinearMap::from_ints(f2, 1, 2, {1, 1}));
    const auto rep = validate_morphism(bad);
    REQUIRE(!rep.pass);
    REQUIRE(rep.witnesses.front().kind == "pair");
}

TEST_CASE("standard constructors produce valid algebras over every field") {
    for (const Field f : {Field::prime(2), Field::prime(3), Field::rationals()}) {
        for (const auto& [name, a] : algebra_catalog(f)) {
            INFO(name << " over " << f.name());
            REQUIRE(validate_algebra(a).pass);
            REQUIRE(algebra_laws_hold_oracle(a));
        }
    }
    const Field f2 = Field::prime(2);
    const Field f3 = Field::prime(3);
    REQUIRE(truncated_polynomial_algebra(f2, 2).mul_basis(1, 1) == zero_vec(f2, 2));
    REQUIRE(cyclic_group_algebra(Field::rationals(), 2).mul_basis(1, 1) ==
            unit_vec(Field::rationals(), 2, 0));
    // e11 . e12 = e12 in M_2(F_3)
    REQUIRE(full_matrix_algebra(f3, 2).mul_basis(0, 1) == unit_vec(f3, 4, 1));
    REQUIRE(full_matrix_algebra(f3, 2).dim() == 4);
}

TEST_CASE("catalog morphisms validate and compose") {
    for (const Field f : {Field::prime(2), Field::prime(3), Field::rationals()}) {
        for (const auto& [name, phi] : morphism_catalog(f)) {
            INFO(name << " over " << f.name());
            REQUIRE(validate_morphism(phi).pass);
        }
        const auto cat = morphism_catalog(f);
        for (const auto& a : cat)
            for (const auto& b : cat) {
                if (!(a.phi.target() == b.phi.source())) continue;
                REQUIRE(validate_morphism(compose(b.phi, a.phi)).pass);
            }
    }
}

TEST_CASE("flatness decisions") {
    const Field f2 = Field::prime(2);
    const auto tp2 = truncated_polynomial_algebra(f2, 2);

    SECTION("free and identity cases are flat") {
        REQUIRE(is_flat_morphism(unit_inclusion(tp2)));
        REQUIRE(is_flat_morphism(identity_morphism(tp2)));
        REQUIRE(is_flat_morphism(identity_morphism(full_matrix_algebra(f2, 2))));
    }
    SECTION("the augmentation of k[t]/(t^2) is not flat") {
        REQUIRE(!is_flat_morphism(truncation_augmentation(tp2)));
        // the defining short exact sequence breaks: tensoring the ideal (t)
        // into the extension of A kills the inclusion
        const auto aug = truncation_augmentation(tp2);
        REQUIRE(!flatness_ses_oracle(aug));
    }
    SECTION("the square embedding t -> t^2 is flat (free of rank two)") {
        const auto tp4 = truncated_polynomial_algebra(f2, 4);
        REQUIRE(is_flat_morphism(truncated_polynomial_morphism(tp2, tp4, 2, 4, 2)));
        REQUIRE(!is_flat_morphism(truncated_polynomial_morphism(tp4, tp2, 4, 2, 1)));
    }
    SECTION("semisimplicity depends on the characteristic") {
        REQUIRE(!is_flat_morphism(augmentation_cyclic(cyclic_group_algebra(f2, 2))));
        REQUIRE(is_flat_morphism(augmentation_cyclic(cyclic_group_algebra(Field::prime(3), 2))));
        REQUIRE(is_flat_morphism(augmentation_cyclic(cyclic_group_algebra(Field::rationals(), 2))));
    }
    SECTION("projections out of products are flat") {
        const auto k = base_field_algebra(f2);
        const auto kxk = product_algebra(k, k);
        REQUIRE(is_flat_morphism(AlgebraMorphism(kxk, k, LinearMap::from_ints(f2, 1, 2, {1, 0}))));
    }
}

TEST_CASE("flatness agrees with the exactness-preservation oracle over F_2") {
    const Field f2 = Field::prime(2);
    for (const auto& [name, phi] : morphism_catalog(f2)) {
        if (phi.source().dim() > 4) continue;  // oracle enumeration scale
        INFO(name);
        REQUIRE(is_flat_morphism(phi) == flatness_ses_oracle(phi));
    }
}

TEST_CASE("flat morphisms compose to flat morphisms on the catalog") {
    const Field f2 = Field::prime(2);
    const auto cat = morphism_catalog(f2);
    for (const auto& a : cat)
        for (const auto& b : cat) {
            if (!(a.phi.target() == b.phi.source())) continue;
            if (a.phi.source().dim() > 4 || b.phi.target().dim() > 4) continue;
            if (is_flat_morphism(a.phi) && is_flat_morphism(b.phi)) {
                INFO(b.name << " after " << a.name);
                REQUIRE(is_flat_morphism(compose(b.phi, a.phi)));
            }
        }
}

TEST_CASE("single-constant mutations of M_2 are detected") {
    const Field f2 = Field::prime(2);
    const auto m2 = full_matrix_algebra(f2, 2);
    std::size_t rejected = 0, silently_valid = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t t = 0; t < 4; ++t) {
                std::vector<std::vector<Vec>> mul;
                for (std::size_t r = 0; r < 4; ++r) {
                    std::vector<Vec> row;
                    for (std::size_t c = 0; c < 4; ++c) row.push_back(m2.mul_basis(r, c));
                    mul.push_back(row);
                }
                mul[i][j][t] = mul[i][j][t] + Scalar::one(f2);
                const FDAlgebra mutated(f2, mul, m2.unit());
                const auto rep = validate_algebra(mutated);
                REQUIRE(rep.pass == algebra_laws_hold_oracle(mutated));
                if (!rep.pass) {
                    REQUIRE(!rep.witnesses.empty());
                    ++rejected;
                } else {
                    ++silently_valid;
                }
            }
    // every single-constant corruption of M_2(F_2) breaks a law
    REQUIRE(silently_valid == 0);
    REQUIRE(rejected == 64);
}
