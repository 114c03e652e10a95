#pragma once

// Eilenberg-Moore categories for the monads A (x) -: module objects with an
// explicit structure map, equivariant morphisms, kernels, cokernels, direct
// sums, the free -| forgetful adjunction, generated submodules and exact
// hom-space computation.

#include "monadquiver/algebra.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace mq {

class ModuleObject {
public:
    // action: A (x) M -> M, a dim x (dim_A * dim) matrix, tensor index left-major
    ModuleObject(FDAlgebra algebra, std::size_t dim, LinearMap action)
        : algebra_(std::move(algebra)), dim_(dim), action_(std::move(action)) {
        require(action_.rows() == dim_ && action_.cols() == algebra_.dim() * dim_,
                "ModuleObject: action must be dim x (dim_A * dim)");
    }

    [[nodiscard]] const FDAlgebra& algebra() const { return algebra_; }
    [[nodiscard]] const Field& field() const { return algebra_.field(); }
    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] const LinearMap& action() const { return action_; }

    // a . x for a coordinate vector a of A and x of M
    [[nodiscard]] Vec act(const Vec& a, const Vec& x) const { return action_.apply(tensor_vec(a, x)); }

    // the matrix of x -> a . x
    [[nodiscard]] LinearMap action_of(const Vec& a) const {
        std::vector<Vec> cols;
        cols.reserve(dim_);
        for (std::size_t j = 0; j < dim_; ++j) cols.push_back(act(a, unit_vec(field(), dim_, j)));
        return LinearMap::from_columns(field(), dim_, cols);
    }

    bool operator==(const ModuleObject& o) const {
        return algebra_ == o.algebra_ && dim_ == o.dim_ && action_ == o.action_;
    }
    bool operator!=(const ModuleObject& o) const { return !(*this == o); }

private:
    FDAlgebra algebra_;
    std::size_t dim_;
    LinearMap action_;
};

// Passes iff the two module laws hold as exact matrix identities:
// associativity f o (mult (x) id) = f o (id (x) f) and unit f o (eta (x) id) = id.
inline CheckReport validate_module(const ModuleObject& m) {
    CheckReport rep;
    const Field f = m.field();
    const std::size_t n = m.algebra().dim();
    const LinearMap id_m = LinearMap::identity(f, m.dim());
    const LinearMap lhs = m.action().compose(kronecker(m.algebra().multiplication_map(), id_m));
    const LinearMap rhs = m.action().compose(kronecker(LinearMap::identity(f, n), m.action()));
    if (lhs != rhs) {
        rep.fail({"associativity", {{"dim", std::to_string(m.dim())}}},
                 "action does not satisfy the associativity law");
        return rep;
    }
    const LinearMap unit_side = m.action().compose(kronecker(m.algebra().unit_map(), id_m));
    if (unit_side != id_m) {
        rep.fail({"unit", {{"dim", std::to_string(m.dim())}}}, "action does not satisfy the unit law");
        return rep;
    }
    return rep;
}

// A (x) k^n with action mult (x) id; n = 0 gives the zero module
inline ModuleObject free_module(const FDAlgebra& a, std::size_t n) {
    const LinearMap action = kronecker(a.multiplication_map(), LinearMap::identity(a.field(), n));
    return ModuleObject(a, a.dim() * n, action);
}

inline ModuleObject regular_module(const FDAlgebra& a) { return free_module(a, 1); }

inline ModuleObject zero_module(const FDAlgebra& a) { return free_module(a, 0); }

class ModuleMorphism {
public:
    ModuleMorphism(ModuleObject source, ModuleObject target, LinearMap map)
        : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
        require(source_.algebra() == target_.algebra(), "ModuleMorphism: algebra mismatch");
        require(map_.rows() == target_.dim() && map_.cols() == source_.dim(),
                "ModuleMorphism: matrix must be dim(target) x dim(source)");
    }

    [[nodiscard]] const ModuleObject& source() const { return source_; }
    [[nodiscard]] const ModuleObject& target() const { return target_; }
    [[nodiscard]] const LinearMap& map() const { return map_; }

    [[nodiscard]] bool is_equivariant() const {
        const std::size_t n = source_.algebra().dim();
        const LinearMap lhs =
            target_.action().compose(kronecker(LinearMap::identity(source_.field(), n), map_));
        const LinearMap rhs = map_.compose(source_.action());
        return lhs == rhs;
    }

private:
    ModuleObject source_, target_;
    LinearMap map_;
};

// ---- free -| forgetful adjunction (hom transposition) -----------------------

// module morphism free(a, v_dim) -> n  ~>  linear map k^v_dim -> n
inline LinearMap adjoint_to_linear(const FDAlgebra& a, std::size_t v_dim, const ModuleObject& n,
                                   const LinearMap& module_map) {
    require(n.algebra() == a, "adjoint_to_linear: algebra mismatch");
    require(module_map.rows() == n.dim() && module_map.cols() == a.dim() * v_dim,
            "adjoint_to_linear: map must be dim(n) x (dim_A * v_dim)");
    {
        const ModuleMorphism g(free_module(a, v_dim), n, module_map);
        require(g.is_equivariant(), "adjoint_to_linear: input is not equivariant");
    }
    return module_map.compose(kronecker(a.unit_map(), LinearMap::identity(a.field(), v_dim)));
}

// linear map k^v_dim -> n  ~>  module morphism free(a, v_dim) -> n
inline LinearMap adjoint_to_module(const FDAlgebra& a, std::size_t v_dim, const ModuleObject& n,
                                   const LinearMap& linear_map) {
    require(n.algebra() == a, "adjoint_to_module: algebra mismatch");
    require(linear_map.rows() == n.dim() && linear_map.cols() == v_dim,
            "adjoint_to_module: map must be dim(n) x v_dim");
    return n.action().compose(kronecker(LinearMap::identity(a.field(), a.dim()), linear_map));
}

// ---- kernels, cokernels, direct sums ----------------------------------------

struct KernelResult {
    ModuleObject module;
    ModuleMorphism inclusion;  // kernel -> source
    Subspace subspace;         // inside the source
};

struct CokernelResult {
    ModuleObject module;
    ModuleMorphism projection;  // target -> cokernel
};

// restrict the action of m to an action-closed subspace
inline ModuleObject submodule_from_subspace(const ModuleObject& m, const Subspace& s) {
    require(s.ambient_dim() == m.dim(), "submodule_from_subspace: ambient mismatch");
    const std::size_t n = m.algebra().dim();
    const LinearMap incl = s.inclusion();
    const LinearMap restricted = m.action().compose(kronecker(LinearMap::identity(m.field(), n), incl));
    const LinearMap sub_action = solve_through_mono(incl, restricted);
    return ModuleObject(m.algebra(), s.dim(), sub_action);
}

// quotient of m by an action-closed subspace, against the canonical
// non-pivot quotient basis
inline CokernelResult quotient_by_subspace(const ModuleObject& m, const Subspace& s) {
    require(s.ambient_dim() == m.dim(), "quotient_by_subspace: ambient mismatch");
    const std::size_t n = m.algebra().dim();
    const LinearMap pi = s.quotient_projection();
    const LinearMap sigma = s.quotient_section();
    const LinearMap q_action =
        pi.compose(m.action()).compose(kronecker(LinearMap::identity(m.field(), n), sigma));
    ModuleObject q(m.algebra(), pi.rows(), q_action);
    // well-definedness: the action must descend to the quotient
    require(pi.compose(m.action()) ==
                q_action.compose(kronecker(LinearMap::identity(m.field(), n), pi)),
            "quotient_by_subspace: subspace is not action-closed");
    return CokernelResult{q, ModuleMorphism(m, q, pi)};
}

inline KernelResult kernel_of(const ModuleMorphism& g) {
    const Subspace k = kernel(g.map());
    ModuleObject km = submodule_from_subspace(g.source(), k);
    return KernelResult{km, ModuleMorphism(km, g.source(), k.inclusion()), k};
}

inline CokernelResult cokernel_of(const ModuleMorphism& g) {
    return quotient_by_subspace(g.target(), image(g.map()));
}

struct DirectSumResult {
    ModuleObject module;
    std::vector<LinearMap> injections;
    std::vector<LinearMap> projections;
};

inline DirectSumResult direct_sum(const std::vector<ModuleObject>& parts) {
    require(!parts.empty(), "direct_sum: empty list");
    const FDAlgebra& a = parts.front().algebra();
    const Field f = a.field();
    const std::size_t n = a.dim();
    std::size_t total = 0;
    for (const auto& p : parts) {
        require(p.algebra() == a, "direct_sum: algebra mismatch");
        total += p.dim();
    }
    LinearMap action(f, total, n * total);
    std::vector<LinearMap> injections, projections;
    std::size_t offset = 0;
    for (const auto& p : parts) {
        LinearMap inj(f, total, p.dim());
        LinearMap proj(f, p.dim(), total);
        for (std::size_t j = 0; j < p.dim(); ++j) {
            inj.at(offset + j, j) = Scalar::one(f);
            proj.at(j, offset + j) = Scalar::one(f);
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < p.dim(); ++j)
                for (std::size_t r = 0; r < p.dim(); ++r)
                    action.at(offset + r, i * total + offset + j) = p.action().at(r, i * p.dim() + j);
        injections.push_back(std::move(inj));
        projections.push_back(std::move(proj));
        offset += p.dim();
    }
    return DirectSumResult{ModuleObject(a, total, action), injections, projections};
}

// The smallest action-closed subspace containing the given elements: the
// span of a . x over basis elements a and generators x, returned canonically.
inline Subspace generated_submodule(const ModuleObject& m, const std::vector<Vec>& generators) {
    for (const auto& x : generators)
        require(x.size() == m.dim(), "generated_submodule: element length mismatch");
    std::vector<Vec> span;
    const std::size_t n = m.algebra().dim();
    for (const auto& x : generators)
        for (std::size_t i = 0; i < n; ++i) span.push_back(m.act(unit_vec(m.field(), n, i), x));
    return Subspace::from_span(m.field(), m.dim(), span);
}

// module morphism a -> m sending 1 to x, i.e. the adjoint transpose of x
inline LinearMap element_to_free_map(const ModuleObject& m, const Vec& x) {
    return adjoint_to_module(m.algebra(), 1, m, LinearMap::from_columns(m.field(), m.dim(), {x}));
}

// ---- hom spaces -------------------------------------------------------------

struct HomCount {
    Field field;
    std::size_t dimension = 0;
    bool finite = true;
    BigInt cardinality = 1;
};

inline HomCount hom_count_from_dimension(const Field& f, std::size_t dim) {
    HomCount h{f, dim, true, 1};
    if (f.is_prime_field()) {
        for (std::size_t i = 0; i < dim; ++i) h.cardinality *= f.characteristic();
    } else if (dim > 0) {
        h.finite = false;
        h.cardinality = 0;
    }
    return h;
}

// basis of the space of equivariant maps m -> n, solved as the kernel of one
// linear system in the matrix entries
inline std::vector<LinearMap> hom_space_basis(const ModuleObject& m, const ModuleObject& n) {
    require(m.algebra() == n.algebra(), "hom_space_basis: algebra mismatch");
    const Field f = m.field();
    const std::size_t na = m.algebra().dim();
    const std::size_t rows_g = n.dim(), cols_g = m.dim();
    const std::size_t unknowns = rows_g * cols_g;
    auto var = [&](std::size_t r, std::size_t c) { return r * cols_g + c; };

    std::vector<Vec> eqs;
    // f_n o (id_A (x) G) = G o f_m, one equation per entry of an
    // n.dim x (dim_A * m.dim) matrix
    for (std::size_t r = 0; r < rows_g; ++r)
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t c = 0; c < cols_g; ++c) {
                Vec row = zero_vec(f, unknowns);
                // lhs entry: sum_t n.action(r, i*rows_g + t) * G(t, c)
                for (std::size_t t = 0; t < rows_g; ++t)
                    row[var(t, c)] += n.action().at(r, i * rows_g + t);
                // rhs entry: sum_t G(r, t) * m.action(t, i*cols_g + c)
                for (std::size_t t = 0; t < cols_g; ++t)
                    row[var(r, t)] -= m.action().at(t, i * cols_g + c);
                eqs.push_back(std::move(row));
            }

    std::vector<Vec> sols;
    if (eqs.empty()) {
        for (std::size_t v = 0; v < unknowns; ++v) sols.push_back(unit_vec(f, unknowns, v));
    } else {
        sols = Subspace::kernel_basis(LinearMap::from_rows(f, eqs));
    }
    std::vector<LinearMap> basis;
    basis.reserve(sols.size());
    for (const auto& s : sols) {
        LinearMap g(f, rows_g, cols_g);
        for (std::size_t r = 0; r < rows_g; ++r)
            for (std::size_t c = 0; c < cols_g; ++c) g.at(r, c) = s[var(r, c)];
        basis.push_back(std::move(g));
    }
    return basis;
}

inline HomCount hom_count(const ModuleObject& m, const ModuleObject& n) {
    return hom_count_from_dimension(m.field(), hom_space_basis(m, n).size());
}

// |C(k, V)| for a plain vector space V of the given dimension
inline HomCount hom_count_base(const Field& f, std::size_t dim) {
    return hom_count_from_dimension(f, dim);
}

}  // namespace mq
