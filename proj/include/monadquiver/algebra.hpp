#pragma once

// Finite-dimensional unital associative algebras given by structure
// constants, and unital algebra homomorphisms. An algebra A plays the role
// of the monad A (x) - on finite-dimensional vector spaces: its
// multiplication is the monad multiplication and its unit the monad unit.

#include "monadquiver/linalg.hpp"
#include "monadquiver/report.hpp"

#include <string>
#include <vector>

namespace mq {

class FDAlgebra {
public:
    // mul[i][j] = coordinates of basis_i * basis_j; unit = coordinates of 1
    FDAlgebra(const Field& f, std::vector<std::vector<Vec>> mul, Vec unit)
        : field_(f), dim_(unit.size()), mul_(std::move(mul)), unit_(std::move(unit)) {
        require(dim_ > 0, "FDAlgebra: dimension must be positive");
        require(mul_.size() == dim_, "FDAlgebra: structure-constant table needs dim rows");
        for (const auto& row : mul_) {
            require(row.size() == dim_, "FDAlgebra: structure-constant table needs dim^2 entries");
            for (const auto& c : row)
                require(c.size() == dim_, "FDAlgebra: structure constants must have length dim");
        }
    }

    [[nodiscard]] const Field& field() const { return field_; }
    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] const Vec& unit() const { return unit_; }
    [[nodiscard]] const Vec& mul_basis(std::size_t i, std::size_t j) const { return mul_[i][j]; }

    // product of arbitrary coordinate vectors
    [[nodiscard]] Vec multiply(const Vec& a, const Vec& b) const {
        require(a.size() == dim_ && b.size() == dim_, "FDAlgebra::multiply: dimension mismatch");
        Vec r = zero_vec(field_, dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (b[j].is_zero()) continue;
                const Scalar c = a[i] * b[j];
                for (std::size_t t = 0; t < dim_; ++t) r[t] += c * mul_[i][j][t];
            }
        }
        return r;
    }

    // multiplication A (x) A -> A as a matrix (left-major tensor columns)
    [[nodiscard]] LinearMap multiplication_map() const {
        LinearMap m(field_, dim_, dim_ * dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t t = 0; t < dim_; ++t) m.at(t, i * dim_ + j) = mul_[i][j][t];
        return m;
    }

    // unit k -> A as a dim x 1 matrix
    [[nodiscard]] LinearMap unit_map() const {
        return LinearMap::from_columns(field_, dim_, {unit_});
    }

    // right multiplication by a: x -> x * a
    [[nodiscard]] LinearMap right_multiplication(const Vec& a) const {
        std::vector<Vec> cols;
        cols.reserve(dim_);
        for (std::size_t i = 0; i < dim_; ++i) cols.push_back(multiply(unit_vec(field_, dim_, i), a));
        return LinearMap::from_columns(field_, dim_, cols);
    }

    // left multiplication by a: x -> a * x
    [[nodiscard]] LinearMap left_multiplication(const Vec& a) const {
        std::vector<Vec> cols;
        cols.reserve(dim_);
        for (std::size_t i = 0; i < dim_; ++i) cols.push_back(multiply(a, unit_vec(field_, dim_, i)));
        return LinearMap::from_columns(field_, dim_, cols);
    }

    bool operator==(const FDAlgebra& o) const {
        return field_ == o.field_ && dim_ == o.dim_ && mul_ == o.mul_ && unit_ == o.unit_;
    }
    bool operator!=(const FDAlgebra& o) const { return !(*this == o); }

private:
    Field field_;
    std::size_t dim_;
    std::vector<std::vector<Vec>> mul_;
    Vec unit_;
};

// Passes iff (b_i b_j) b_k = b_i (b_j b_k) for all basis triples and the
// unit is a two-sided identity on every basis element. The first violation
// is reported as a witness.
inline CheckReport validate_algebra(const FDAlgebra& a) {
    CheckReport rep;
    const std::size_t n = a.dim();
    rep.stats["dim"] = static_cast<std::int64_t>(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Vec bj = unit_vec(a.field(), n, j);
        if (a.multiply(a.unit(), bj) != bj) {
            rep.fail({"unit-left", {{"basis", std::to_string(j)}}}, "unit is not a left identity");
            return rep;
        }
        if (a.multiply(bj, a.unit()) != bj) {
            rep.fail({"unit-right", {{"basis", std::to_string(j)}}}, "unit is not a right identity");
            return rep;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vec left = a.multiply(a.mul_basis(i, j), unit_vec(a.field(), n, k));
                const Vec right = a.multiply(unit_vec(a.field(), n, i), a.mul_basis(j, k));
                if (left != right) {
                    rep.fail({"triple",
                              {{"i", std::to_string(i)}, {"j", std::to_string(j)}, {"k", std::to_string(k)}}},
                             "associativity fails");
                    return rep;
                }
            }
    return rep;
}

class AlgebraMorphism {
public:
    AlgebraMorphism(FDAlgebra source, FDAlgebra target, LinearMap matrix)
        : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
        require(source_.field() == target_.field(), "AlgebraMorphism: field mismatch");
        require(matrix_.rows() == target_.dim() && matrix_.cols() == source_.dim(),
                "AlgebraMorphism: matrix must be dim(target) x dim(source)");
    }

    [[nodiscard]] const FDAlgebra& source() const { return source_; }
    [[nodiscard]] const FDAlgebra& target() const { return target_; }
    [[nodiscard]] const LinearMap& matrix() const { return matrix_; }
    [[nodiscard]] Vec apply(const Vec& a) const { return matrix_.apply(a); }

    bool operator==(const AlgebraMorphism& o) const {
        return source_ == o.source_ && target_ == o.target_ && matrix_ == o.matrix_;
    }

private:
    FDAlgebra source_, target_;
    LinearMap matrix_;
};

inline CheckReport validate_morphism(const AlgebraMorphism& phi) {
    CheckReport rep;
    const auto& a = phi.source();
    const auto& b = phi.target();
    if (phi.apply(a.unit()) != b.unit()) {
        rep.fail({"unit", {}}, "morphism does not preserve the unit");
        return rep;
    }
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec lhs = phi.apply(a.mul_basis(i, j));
            const Vec rhs = b.multiply(phi.apply(unit_vec(a.field(), n, i)), phi.apply(unit_vec(a.field(), n, j)));
            if (lhs != rhs) {
                rep.fail({"pair", {{"i", std::to_string(i)}, {"j", std::to_string(j)}}},
                         "morphism is not multiplicative");
                return rep;
            }
        }
    return rep;
}

inline AlgebraMorphism identity_morphism(const FDAlgebra& a) {
    return AlgebraMorphism(a, a, LinearMap::identity(a.field(), a.dim()));
}

inline AlgebraMorphism compose(const AlgebraMorphism& psi, const AlgebraMorphism& phi) {
    require(phi.target() == psi.source(), "compose: morphisms are not composable");
    return AlgebraMorphism(phi.source(), psi.target(), psi.matrix().compose(phi.matrix()));
}

// ---- standard constructors -------------------------------------------------

// k itself as a one-dimensional algebra
inline FDAlgebra base_field_algebra(const Field& f) {
    return FDAlgebra(f, {{{Scalar::one(f)}}}, {Scalar::one(f)});
}

// k[t]/(t^n), basis 1, t, ..., t^(n-1)
inline FDAlgebra truncated_polynomial_algebra(const Field& f, std::size_t n) {
    require(n > 0, "truncated_polynomial_algebra: n must be positive");
    std::vector<std::vector<Vec>> mul(n, std::vector<Vec>(n, zero_vec(f, n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i + j < n) mul[i][j][i + j] = Scalar::one(f);
    return FDAlgebra(f, std::move(mul), unit_vec(f, n, 0));
}

// group algebra k[C_n], basis 1, g, ..., g^(n-1)
inline FDAlgebra cyclic_group_algebra(const Field& f, std::size_t n) {
    require(n > 0, "cyclic_group_algebra: n must be positive");
    std::vector<std::vector<Vec>> mul(n, std::vector<Vec>(n, zero_vec(f, n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mul[i][j][(i + j) % n] = Scalar::one(f);
    return FDAlgebra(f, std::move(mul), unit_vec(f, n, 0));
}

// M_n(k), basis e_{ab} with index a*n + b; e_{ab} e_{cd} = delta_{bc} e_{ad}
inline FDAlgebra full_matrix_algebra(const Field& f, std::size_t n) {
    require(n > 0, "full_matrix_algebra: n must be positive");
    const std::size_t d = n * n;
    std::vector<std::vector<Vec>> mul(d, std::vector<Vec>(d, zero_vec(f, d)));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t e = 0; e < n; ++e)
                    if (b == c) mul[a * n + b][c * n + e][a * n + e] = Scalar::one(f);
    Vec unit = zero_vec(f, d);
    for (std::size_t a = 0; a < n; ++a) unit[a * n + a] = Scalar::one(f);
    return FDAlgebra(f, std::move(mul), std::move(unit));
}

// componentwise product A x B
inline FDAlgebra product_algebra(const FDAlgebra& a, const FDAlgebra& b) {
    require(a.field() == b.field(), "product_algebra: field mismatch");
    const Field f = a.field();
    const std::size_t n = a.dim(), m = b.dim(), d = n + m;
    std::vector<std::vector<Vec>> mul(d, std::vector<Vec>(d, zero_vec(f, d)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < n; ++t) mul[i][j][t] = a.mul_basis(i, j)[t];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t t = 0; t < m; ++t) mul[n + i][n + j][n + t] = b.mul_basis(i, j)[t];
    Vec unit = zero_vec(f, d);
    for (std::size_t t = 0; t < n; ++t) unit[t] = a.unit()[t];
    for (std::size_t t = 0; t < m; ++t) unit[n + t] = b.unit()[t];
    return FDAlgebra(f, std::move(mul), std::move(unit));
}

// the unique unital morphism k -> A
inline AlgebraMorphism unit_inclusion(const FDAlgebra& a) {
    return AlgebraMorphism(base_field_algebra(a.field()), a, a.unit_map());
}

// k[t]/(t^n) -> k[t]/(t^m), t -> t^e (requires m <= n*e so that t^(ne) = 0)
inline AlgebraMorphism truncated_polynomial_morphism(const FDAlgebra& source, const FDAlgebra& target,
                                                     std::size_t n, std::size_t m, std::size_t e) {
    LinearMap mat(source.field(), m, n);
    for (std::size_t i = 0; i < n; ++i)
        if (i * e < m) mat.at(i * e, i) = Scalar::one(source.field());
    return AlgebraMorphism(source, target, mat);
}

// augmentation k[t]/(t^n) -> k, t -> 0 (also k[C_n] -> k, g -> 1 when
// given the group-algebra basis: both send basis_0-coefficient patterns;
// use augmentation_cyclic for the group algebra)
inline AlgebraMorphism truncation_augmentation(const FDAlgebra& truncated_poly) {
    LinearMap mat(truncated_poly.field(), 1, truncated_poly.dim());
    mat.at(0, 0) = Scalar::one(truncated_poly.field());
    return AlgebraMorphism(truncated_poly, base_field_algebra(truncated_poly.field()), mat);
}

// k[C_n] -> k, g -> 1
inline AlgebraMorphism augmentation_cyclic(const FDAlgebra& group_algebra) {
    LinearMap mat(group_algebra.field(), 1, group_algebra.dim());
    for (std::size_t j = 0; j < group_algebra.dim(); ++j) mat.at(0, j) = Scalar::one(group_algebra.field());
    return AlgebraMorphism(group_algebra, base_field_algebra(group_algebra.field()), mat);
}

// ---- flatness ---------------------------------------------------------------

// Decides whether the target of phi, viewed as a right module over the
// source via phi, is projective; in finite dimension this is equivalent to
// flatness, i.e. exactness of extension of scalars along phi. The test sets
// up the evaluation surjection from the free right module on a basis of the
// target and solves one exact linear system for a module-linear section.
inline bool is_flat_morphism(const AlgebraMorphism& phi) {
    const auto& a = phi.source();
    const auto& b = phi.target();
    const Field f = a.field();
    const std::size_t n = a.dim();  // source dimension
    const std::size_t d = b.dim();  // target dimension = number of free generators

    // right action of basis_j of A on M = target: m -> m * phi(b_j)
    std::vector<LinearMap> act_m;
    act_m.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        act_m.push_back(b.right_multiplication(phi.apply(unit_vec(f, n, j))));

    // free module F = A^(d); coordinates (i, l) -> i*n + l for generator i, basis_l of A
    // right action of basis_j on F is blockwise right multiplication in A
    std::vector<LinearMap> act_f;
    act_f.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        act_f.push_back(kronecker(LinearMap::identity(f, d), a.right_multiplication(unit_vec(f, n, j))));

    // evaluation F -> M, generator_i (x) a -> basis_i * phi(a)
    LinearMap ev(f, d, d * n);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t l = 0; l < n; ++l) {
            const Vec val = b.multiply(unit_vec(f, d, i), phi.apply(unit_vec(f, n, l)));
            for (std::size_t r = 0; r < d; ++r) ev.at(r, i * n + l) = val[r];
        }

    // unknown section s: M -> F, a (d*n) x d matrix S with
    //   ev . S = id_M   and   S . act_m[j] = act_f[j] . S  for all j
    const std::size_t rows_s = d * n, cols_s = d;
    const std::size_t unknowns = rows_s * cols_s;
    auto var = [&](std::size_t r, std::size_t c) { return r * cols_s + c; };

    std::vector<Vec> eqs;
    Vec rhs;
    // ev . S = id
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            Vec row = zero_vec(f, unknowns);
            for (std::size_t t = 0; t < rows_s; ++t) row[var(t, c)] = ev.at(r, t);
            eqs.push_back(std::move(row));
            rhs.push_back(r == c ? Scalar::one(f) : Scalar::zero(f));
        }
    // linearity over each basis element
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t r = 0; r < rows_s; ++r)
            for (std::size_t c = 0; c < d; ++c) {
                Vec row = zero_vec(f, unknowns);
                for (std::size_t t = 0; t < d; ++t) row[var(r, t)] += act_m[j].at(t, c);
                for (std::size_t t = 0; t < rows_s; ++t) row[var(t, c)] -= act_f[j].at(r, t);
                eqs.push_back(std::move(row));
                rhs.push_back(Scalar::zero(f));
            }

    const auto result = rref_solve(LinearMap::from_rows(f, eqs), rhs);
    return result.solution.has_value();
}

}  // namespace mq
