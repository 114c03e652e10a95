#pragma once

// Restriction and extension of scalars along an algebra morphism
// phi: A -> A', forming the adjoint pair between the module categories.
// Extension is materialized as an explicit quotient of A' (x) M by the image
// of the difference map a' (x) a (x) x -> a' phi(a) (x) x - a' (x) (a.x),
// with the quotient basis fixed as the non-pivot standard coordinates of
// A' (x) M under the RREF of the relation subspace. This basis convention is
// normative: serialized edge maps of quiver modules refer to it bit-exactly.

#include "monadquiver/module.hpp"

namespace mq {

struct ExtensionResult {
    ModuleObject module;   // phi^*(M) over the target algebra
    LinearMap projection;  // A' (x) M -> phi^*(M)
    LinearMap section;     // selects the non-pivot standard coordinates
    Subspace relations;    // kernel of the projection, canonical RREF
    LinearMap unit_map;    // underlying map of the adjunction unit M -> phi^*(M)
};

inline ModuleObject restrict_scalars(const AlgebraMorphism& phi, const ModuleObject& m_target) {
    require(m_target.algebra() == phi.target(), "restrict_scalars: module is not over the target algebra");
    const LinearMap action = m_target.action().compose(
        kronecker(phi.matrix(), LinearMap::identity(phi.source().field(), m_target.dim())));
    return ModuleObject(phi.source(), m_target.dim(), action);
}

inline ExtensionResult extend_scalars(const AlgebraMorphism& phi, const ModuleObject& m) {
    require(m.algebra() == phi.source(), "extend_scalars: module is not over the source algebra");
    const Field f = phi.source().field();
    const std::size_t n = phi.source().dim();
    const std::size_t np = phi.target().dim();
    const std::size_t md = m.dim();
    const LinearMap id_np = LinearMap::identity(f, np);
    const LinearMap id_m = LinearMap::identity(f, md);

    // difference of the two coequalizer legs A' (x) A (x) M -> A' (x) M
    const LinearMap leg_mul = kronecker(phi.target().multiplication_map(), id_m)
                                  .compose(kronecker(id_np, kronecker(phi.matrix(), id_m)));
    const LinearMap leg_act = kronecker(id_np, m.action());
    const LinearMap diff = leg_mul - leg_act;

    const Subspace relations = image(diff);
    const LinearMap pi = relations.quotient_projection();
    const LinearMap sigma = relations.quotient_section();

    const LinearMap free_action = kronecker(phi.target().multiplication_map(), id_m);
    const LinearMap ext_action = pi.compose(free_action).compose(kronecker(id_np, sigma));
    // the relation subspace is stable under the free A'-action, so the
    // action descends; certified rather than assumed
    require(pi.compose(free_action) == ext_action.compose(kronecker(id_np, pi)),
            "extend_scalars: action failed to descend to the quotient");

    ModuleObject ext(phi.target(), pi.rows(), ext_action);
    const LinearMap unit_map = pi.compose(kronecker(phi.target().unit_map(), id_m));
    return ExtensionResult{std::move(ext), pi, sigma, relations, unit_map};
}

// functorial action of phi^* on a morphism g: M -> N over the source algebra
inline LinearMap extend_morphism(const AlgebraMorphism& phi, const LinearMap& g,
                                 const ExtensionResult& ext_m, const ExtensionResult& ext_n) {
    const Field f = phi.source().field();
    const std::size_t np = phi.target().dim();
    const LinearMap id_np = LinearMap::identity(f, np);
    const LinearMap lifted = ext_n.projection.compose(kronecker(id_np, g));
    const LinearMap result = lifted.compose(ext_m.section);
    require(result.compose(ext_m.projection) == lifted,
            "extend_morphism: map does not descend (input not equivariant?)");
    return result;
}

// ---- the (phi^*, phi_*) hom transposition ------------------------------------

// h: phi^*(M) -> M' over the target  ~>  M -> phi_* M' over the source
inline LinearMap transpose_to_restricted(const LinearMap& h, const ExtensionResult& ext_m) {
    require(h.cols() == ext_m.module.dim(), "transpose_to_restricted: shape mismatch");
    return h.compose(ext_m.unit_map);
}

// g: M -> phi_* M' over the source  ~>  phi^*(M) -> M' over the target
inline LinearMap transpose_to_extended(const AlgebraMorphism& phi, const ModuleObject& m_prime,
                                       const LinearMap& g, const ExtensionResult& ext_m) {
    const Field f = phi.source().field();
    const std::size_t np = phi.target().dim();
    const LinearMap raw = m_prime.action().compose(kronecker(LinearMap::identity(f, np), g));
    const LinearMap h = raw.compose(ext_m.section);
    require(h.compose(ext_m.projection) == raw,
            "transpose_to_extended: map does not descend (input not equivariant?)");
    return h;
}

struct FreeExtensionIso {
    ExtensionResult extension;  // phi^*(free_source(n))
    LinearMap iso;              // phi^*(free_source(n)) -> free_target(n)
    LinearMap iso_inverse;
};

// The canonical module isomorphism phi^*(A (x) k^n) -> A' (x) k^n,
// a' (x) a (x) v -> a' phi(a) (x) v, certified invertible.
inline FreeExtensionIso extend_free_check(const AlgebraMorphism& phi, std::size_t rank_n) {
    const Field f = phi.source().field();
    const std::size_t np = phi.target().dim();
    const LinearMap id_n = LinearMap::identity(f, rank_n);
    const ModuleObject free_src = free_module(phi.source(), rank_n);
    const ModuleObject free_tgt = free_module(phi.target(), rank_n);
    ExtensionResult ext = extend_scalars(phi, free_src);

    const LinearMap raw = kronecker(phi.target().multiplication_map(), id_n)
                              .compose(kronecker(LinearMap::identity(f, np), kronecker(phi.matrix(), id_n)));
    const LinearMap iso = raw.compose(ext.section);
    require(iso.compose(ext.projection) == raw, "extend_free_check: canonical map does not descend");
    require(ModuleMorphism(ext.module, free_tgt, iso).is_equivariant(),
            "extend_free_check: canonical map is not equivariant");
    require(is_invertible(iso), "extend_free_check: canonical map is not invertible");
    return FreeExtensionIso{std::move(ext), iso, inverse(iso)};
}

struct CompositionIso {
    LinearMap iso;  // psi^*(phi^*(M)) -> (psi o phi)^*(M)
    LinearMap iso_inverse;
};

// Canonical comparison psi^* phi^* M -> (psi phi)^* M,
// a'' (x) [a' (x) x] -> [a'' psi(a') (x) x], certified invertible.
inline CompositionIso composition_iso(const AlgebraMorphism& phi, const AlgebraMorphism& psi,
                                      const ModuleObject& m, const ExtensionResult& ext_phi,
                                      const ExtensionResult& ext_psi_of_phi,
                                      const ExtensionResult& ext_composite) {
    require(phi.target() == psi.source(), "composition_iso: morphisms are not composable");
    const Field f = phi.source().field();
    const std::size_t npp = psi.target().dim();
    const LinearMap id_npp = LinearMap::identity(f, npp);
    const LinearMap id_m = LinearMap::identity(f, m.dim());

    // A'' (x) A' (x) M -> A'' (x) M on representatives
    const LinearMap t_raw = kronecker(psi.target().multiplication_map(), id_m)
                                .compose(kronecker(id_npp, kronecker(psi.matrix(), id_m)));
    const LinearMap c = ext_composite.projection.compose(t_raw)
                            .compose(kronecker(id_npp, ext_phi.section))
                            .compose(ext_psi_of_phi.section);
    require(c.compose(ext_psi_of_phi.projection).compose(kronecker(id_npp, ext_phi.projection)) ==
                ext_composite.projection.compose(t_raw),
            "composition_iso: canonical map does not descend");
    require(ModuleMorphism(ext_psi_of_phi.module, ext_composite.module, c).is_equivariant(),
            "composition_iso: canonical map is not equivariant");
    require(is_invertible(c), "composition_iso: canonical map is not invertible");
    return CompositionIso{c, inverse(c)};
}

// Both triangle identities of the adjunction, exact.
inline bool triangle_identities_hold(const AlgebraMorphism& phi, const ModuleObject& m,
                                     const ModuleObject& m_prime) {
    const ExtensionResult ext_m = extend_scalars(phi, m);

    // counit at m': phi^*(phi_* m') -> m', transpose of the identity
    const ModuleObject restricted = restrict_scalars(phi, m_prime);
    const ExtensionResult ext_restricted = extend_scalars(phi, restricted);
    const LinearMap counit = transpose_to_extended(
        phi, m_prime, LinearMap::identity(phi.source().field(), m_prime.dim()), ext_restricted);

    // triangle 1: counit_{phi^* m} o phi^*(unit_m) = id_{phi^* m}
    const ModuleObject restr_ext = restrict_scalars(phi, ext_m.module);
    const ExtensionResult ext_restr_ext = extend_scalars(phi, restr_ext);
    const LinearMap counit_at_ext = transpose_to_extended(
        phi, ext_m.module, LinearMap::identity(phi.source().field(), ext_m.module.dim()), ext_restr_ext);
    const LinearMap ext_of_unit = extend_morphism(phi, ext_m.unit_map, ext_m, ext_restr_ext);
    if (counit_at_ext.compose(ext_of_unit) != LinearMap::identity(phi.source().field(), ext_m.module.dim()))
        return false;

    // triangle 2: phi_*(counit_{m'}) o unit_{phi_* m'} = id_{phi_* m'}
    const LinearMap unit_restricted = ext_restricted.unit_map;
    return counit.compose(unit_restricted) == LinearMap::identity(phi.source().field(), m_prime.dim());
}

}  // namespace mq
