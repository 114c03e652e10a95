#include <catch2/catch_amalgamated.hpp>

#include "monadquiver/instances.hpp"
#include "support/catalog.hpp"
#include "support/oracles.hpp"

using namespace mq;
using namespace mqtest;

namespace {
// k as a module over k[t]/(t^2): t acts by the given scalar
ModuleObject scalar_line(const FDAlgebra& tp2, long long t_acts) {
    return ModuleObject(tp2, 1, LinearMap::from_ints(tp2.field(), 1, 2, {1, t_acts}));
}
}  // namespace

TEST_CASE("validate_module on the stock examples") {
    const Field f2 = Field::prime(2);
    const auto a = truncated_polynomial_algebra(f2, 2);

    REQUIRE(validate_module(regular_module(a)).pass);
    REQUIRE(validate_module(scalar_line(a, 0)).pass);

    const auto bad = validate_module(scalar_line(a, 1));  // t^2 = 0 must act by zero
    REQUIRE(!bad.pass);
    REQUIRE(bad.witnesses.front().kind == "associativity");
}

TEST_CASE("free modules") {
    const Field f3 = Field::prime(3);
    const auto a = truncated_polynomial_algebra(Field::prime(2), 2);

    REQUIRE(free_module(a, 1).dim() == 2);
    REQUIRE(free_module(a, 1).action() == a.multiplication_map());
    REQUIRE(free_module(a, 0).dim() == 0);
    const auto big = free_module(full_matrix_algebra(f3, 2), 2);
    REQUIRE(big.dim() == 8);
    REQUIRE(validate_module(big).pass);
}

TEST_CASE("free/forgetful adjoint transposition") {
    const Field f2 = Field::prime(2);
    const auto a = truncated_polynomial_algebra(f2, 2);
    const auto n = regular_module(a);

    SECTION("the element t transposes to right multiplication by t") {
        const LinearMap x = LinearMap::from_ints(f2, 2, 1, {0, 1});  // 1 -> t
        const LinearMap g = adjoint_to_module(a, 1, n, x);
        REQUIRE(g == LinearMap::from_ints(f2, 2, 2, {0, 0, 1, 0}));  // 1 -> t, t -> 0
        REQUIRE(adjoint_to_linear(a, 1, n, g) == x);
    }
    SECTION("zero transposes to zero and back") {
        const LinearMap zero = LinearMap::zero(f2, 2, 1);
        REQUIRE(adjoint_to_module(a, 1, n, zero).is_zero());
        REQUIRE(adjoint_to_linear(a, 1, n, LinearMap::zero(f2, 2, 2)).is_zero());
    }
    SECTION("non-equivariant input to the linear direction is rejected") {
        const LinearMap junk = LinearMap::from_ints(f2, 2, 2, {1, 0, 0, 0});
        REQUIRE_THROWS_AS(adjoint_to_linear(a, 1, n, junk), std::invalid_argument);
    }
    SECTION("roundtrips are exact identities on seeded random instances") {
        std::mt19937_64 rng(271828);
        for (int trial = 0; trial < 50; ++trial) {
            const auto& cat = algebra_catalog(f2);
            const FDAlgebra& alg = cat[rng() % 4].algebra;  // k, tp2..tp4
            const ModuleObject target = random_module(alg, rng);
            const std::size_t r = 1 + rng() % 2;
            const LinearMap x = random_map(f2, target.dim(), r, rng);
            REQUIRE(adjoint_to_linear(alg, r, target, adjoint_to_module(alg, r, target, x)) == x);
        }
    }
}

TEST_CASE("kernels, cokernels and direct sums") {
    const Field f2 = Field::prime(2);
    const auto a = truncated_polynomial_algebra(f2, 2);
    const auto reg = regular_module(a);
    const auto line = scalar_line(a, 0);

    SECTION("the augmentation has kernel (t) and trivial cokernel") {
        const ModuleMorphism quotient(reg, line, LinearMap::from_ints(f2, 1, 2, {1, 0}));
        REQUIRE(quotient.is_equivariant());
        const auto k = kernel_of(quotient);
        REQUIRE(k.module.dim() == 1);
        REQUIRE(k.subspace.basis()[0] == Vec{Scalar::zero(f2), Scalar::one(f2)});
        REQUIRE(validate_module(k.module).pass);
        REQUIRE(cokernel_of(quotient).module.dim() == 0);
    }
    SECTION("kernel of the identity is zero") {
        const ModuleMorphism id(reg, reg, LinearMap::identity(f2, 2));
        REQUIRE(kernel_of(id).module.dim() == 0);
    }
    SECTION("direct sum validates") {
        const auto ds = direct_sum({reg, line});
        REQUIRE(ds.module.dim() == 3);
        REQUIRE(validate_module(ds.module).pass);
        REQUIRE(ds.module.action_of(a.unit()).is_identity());
    }
    SECTION("image of the kernel inclusion equals the kernel of the cokernel projection") {
        std::mt19937_64 rng(5);
        int done = 0;
        while (done < 100) {
            const FDAlgebra alg = (rng() % 2) ? truncated_polynomial_algebra(f2, 2 + rng() % 3)
                                              : cyclic_group_algebra(f2, 2 + rng() % 3);
            const ModuleObject m = random_module(alg, rng);
            const ModuleObject n = random_module(alg, rng);
            const LinearMap g = random_module_morphism(m, n, rng);
            const ModuleMorphism gm(m, n, g);
            const auto k = kernel_of(gm);
            const auto c = cokernel_of(gm);
            REQUIRE(validate_module(k.module).pass);
            REQUIRE(validate_module(c.module).pass);
            REQUIRE(image(k.inclusion.map()) == kernel(g));
            REQUIRE(image(g) == kernel(c.projection.map()));
            ++done;
        }
    }
}

TEST_CASE("generated submodules") {
    const Field f2 = Field::prime(2);
    const auto a = truncated_polynomial_algebra(f2, 2);
    const auto two = direct_sum({regular_module(a), regular_module(a)}).module;

    SECTION("A.(t,0) is one-dimensional") {
        Vec x = zero_vec(f2, 4);
        x[1] = Scalar::one(f2);  // the element (t, 0)
        const Subspace s = generated_submodule(two, {x});
        REQUIRE(s.dim() == 1);
        REQUIRE(s.contains(x));
    }
    SECTION("no generators span nothing") { REQUIRE(generated_submodule(two, {}).dim() == 0); }
    SECTION("the unit generates the whole free module") {
        const auto reg = regular_module(a);
        REQUIRE(generated_submodule(reg, {unit_vec(f2, 2, 0)}).dim() == 2);
    }
}

TEST_CASE("hom counting") {
    const Field f2 = Field::prime(2);
    const Field fq = Field::rationals();
    const auto a = truncated_polynomial_algebra(f2, 2);

    SECTION("elements of a plain space, against enumeration") {
        for (std::size_t d = 0; d <= 3; ++d) {
            const HomCount h = hom_count_base(f2, d);
            REQUIRE(h.finite);
            REQUIRE(h.cardinality == BigInt(1) << d);
            REQUIRE(h.cardinality == BigInt(enumerate_vectors(f2, d).size()));
        }
        REQUIRE(!hom_count_base(fq, 2).finite);
        REQUIRE(hom_count_base(fq, 0).cardinality == 1);
    }
    SECTION("maps out of the free module count the elements of the target") {
        std::mt19937_64 rng(12);
        for (int trial = 0; trial < 10; ++trial) {
            const ModuleObject n = random_module(a, rng);
            const HomCount h = hom_count(free_module(a, 1), n);
            REQUIRE(h.dimension == n.dim());
            REQUIRE(BigInt(enumerate_module_homs(free_module(a, 1), n).size()) == h.cardinality);
        }
    }
    SECTION("hom out of the zero module is a single point") {
        REQUIRE(hom_count(zero_module(a), regular_module(a)).cardinality == 1);
    }
    SECTION("hom solver agrees with brute-force enumeration") {
        std::mt19937_64 rng(77);
        for (int trial = 0; trial < 8; ++trial) {
            const ModuleObject m = random_module(a, rng, 1, 2);
            const ModuleObject n = random_module(a, rng, 1, 2);
            const auto solved = hom_space_basis(m, n);
            const auto brute = enumerate_module_homs(m, n);
            REQUIRE(BigInt(brute.size()) == hom_count_from_dimension(f2, solved.size()).cardinality);
        }
    }
}

TEST_CASE("the free module on a basis covers every module") {
    const Field f3 = Field::prime(3);
    std::mt19937_64 rng(100);
    for (const auto& [name, alg] : algebra_catalog(f3)) {
        if (alg.dim() > 4) continue;
        for (int trial = 0; trial < 5; ++trial) {
            const ModuleObject m = random_module(alg, rng);
            // the evaluation map free(A, dim M) -> M is the structure map itself
            REQUIRE(rank(m.action()) == m.dim());
        }
    }
}

TEST_CASE("hom-count monotonicity under sub and quotient") {
    const Field f2 = Field::prime(2);
    std::mt19937_64 rng(999);
    for (int trial = 0; trial < 30; ++trial) {
        const auto alg = truncated_polynomial_algebra(f2, 2 + rng() % 3);
        const ModuleObject m = random_module(alg, rng);
        const ModuleObject n = random_module(alg, rng);
        const ModuleMorphism g(m, n, random_module_morphism(m, n, rng));
        const auto sub = kernel_of(g);
        const auto quot = cokernel_of(g);
        const auto count_m = hom_count(free_module(alg, 1), m);
        const auto count_n = hom_count(free_module(alg, 1), n);
        REQUIRE(hom_count(free_module(alg, 1), sub.module).cardinality <= count_m.cardinality);
        REQUIRE(hom_count(free_module(alg, 1), quot.module).cardinality <= count_n.cardinality);
    }
}
