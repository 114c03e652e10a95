#include <catch2/catch_amalgamated.hpp>

#include "support/catalog.hpp"

using namespace mq;
using namespace mqtest;

TEST_CASE("quivers and closure") {
    Quiver chain({"x", "y", "z"}, {{"e1", 0, 1}, {"e2", 1, 2}});
    REQUIRE(chain.is_acyclic());
    REQUIRE(chain.is_poset());
    REQUIRE(chain.less(0, 2));
    REQUIRE(!chain.less(2, 0));
    REQUIRE(chain.paths(0, 2).size() == 1);
    REQUIRE(chain.canonical_path(0, 2) == std::vector<std::size_t>{0, 1});

    Quiver parallel({"x", "y"}, {{"e1", 0, 1}, {"e2", 0, 1}});
    REQUIRE(parallel.is_acyclic());
    REQUIRE(!parallel.is_poset());
    REQUIRE(parallel.paths(0, 1).size() == 2);

    Quiver cyclic({"x", "y"}, {{"e1", 0, 1}, {"e2", 1, 0}});
    REQUIRE(!cyclic.is_acyclic());

    REQUIRE_THROWS_AS(Quiver({"x"}, {{"loop", 0, 0}}), std::invalid_argument);
}

TEST_CASE("monad quiver validation") {
    const Field f2 = Field::prime(2);
    const auto k = base_field_algebra(f2);
    const auto tp2 = truncated_polynomial_algebra(f2, 2);

    SECTION("a flat chain validates and reports the flatness flag") {
        const MonadQuiver u = chain_quiver(unit_inclusion(tp2));
        const auto rep = validate_monad_quiver(u);
        REQUIRE(rep.pass);
        REQUIRE(rep.stats.at("flat:e") == 1);
    }
    SECTION("a single vertex with no edges validates") {
        const MonadQuiver u(Quiver({"x"}, {}), {tp2}, {});
        REQUIRE(validate_monad_quiver(u).pass);
    }
    SECTION("a non-flat edge is flagged") {
        const MonadQuiver u = chain_quiver(truncation_augmentation(tp2));
        const auto rep = validate_monad_quiver(u);
        REQUIRE(rep.pass);
        REQUIRE(rep.stats.at("flat:e") == 0);
        REQUIRE(!is_flat_monad_quiver(u));
    }
    SECTION("mismatched parallel composites are rejected with a path witness") {
        // r -> a -> t and r -> b -> t over k[t]/(t^2) everywhere, with one arm
        // ending in t -> t and the other in t -> 0
        const AlgebraMorphism kill_t(tp2, tp2, LinearMap::from_ints(f2, 2, 2, {1, 0, 0, 0}));
        REQUIRE(validate_morphism(kill_t).pass);
        Quiver q({"r", "a", "b", "t"}, {{"ra", 0, 1}, {"rb", 0, 2}, {"at", 1, 3}, {"bt", 2, 3}});
        const MonadQuiver u(q, {tp2, tp2, tp2, tp2},
                            {identity_morphism(tp2), identity_morphism(tp2), identity_morphism(tp2),
                             kill_t});
        const auto rep = validate_monad_quiver(u);
        REQUIRE(!rep.pass);
        REQUIRE(rep.witnesses.front().kind == "path-pair");
    }
    SECTION("cyclic quivers are rejected") {
        Quiver cyc({"x", "y"}, {{"e1", 0, 1}, {"e2", 1, 0}});
        const MonadQuiver u(cyc, {k, k}, {identity_morphism(k), identity_morphism(k)});
        const auto rep = validate_monad_quiver(u);
        REQUIRE(!rep.pass);
        REQUIRE(rep.witnesses.front().kind == "cycle");
    }
    SECTION("the flat diamond validates over all three fields") {
        for (const Field f : {Field::prime(2), Field::prime(3), Field::rationals()}) {
            const MonadQuiver u = flat_diamond_quiver(f);
            REQUIRE(validate_monad_quiver(u).pass);
            REQUIRE(is_flat_monad_quiver(u));
        }
    }
}

TEST_CASE("closure morphisms compose canonical paths") {
    const Field f2 = Field::prime(2);
    const MonadQuiver u = flat_diamond_quiver(f2);
    // both paths r -> t compose to the unit of M_2
    const auto& chi = u.closure_morphism(0, 3);
    REQUIRE(chi.matrix() == full_matrix_algebra(f2, 2).unit_map());
}
