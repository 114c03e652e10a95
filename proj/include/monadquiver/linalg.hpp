#pragma once

// Exact linear algebra over Q or F_p: matrices as morphisms of
// finite-dimensional vector spaces, reduced row echelon forms, and canonical
// subspaces. A LinearMap of shape rows x cols is a morphism k^cols -> k^rows
// acting on column vectors. Dimension-0 spaces are first class; maps to or
// from them are the unique empty matrices.
//
// Tensor convention (used project-wide): the basis of V (x) W is ordered
// left-major, i.e. (v_i (x) w_j) has index i * dim(W) + j.

#include "monadquiver/field.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <vector>

namespace mq {

using Vec = std::vector<Scalar>;

inline Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

inline Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
    Vec v = zero_vec(f, n);
    v.at(i) = Scalar::one(f);
    return v;
}

inline Vec add_vec(const Vec& a, const Vec& b) {
    require(a.size() == b.size(), "add_vec: length mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline Vec scale_vec(const Scalar& c, const Vec& a) {
    Vec r = a;
    for (auto& x : r) x *= c;
    return r;
}

inline bool is_zero_vec(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const Scalar& x) { return x.is_zero(); });
}

// v (x) w in left-major order
inline Vec tensor_vec(const Vec& v, const Vec& w) {
    Vec r;
    r.reserve(v.size() * w.size());
    for (const auto& vi : v)
        for (const auto& wj : w) r.push_back(vi * wj);
    return r;
}

class LinearMap {
public:
    LinearMap(const Field& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

    static LinearMap identity(const Field& f, std::size_t n) {
        LinearMap m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
        return m;
    }

    static LinearMap zero(const Field& f, std::size_t rows, std::size_t cols) { return LinearMap(f, rows, cols); }

    static LinearMap from_rows(const Field& f, const std::vector<Vec>& rows) {
        const std::size_t c = rows.empty() ? 0 : rows.front().size();
        LinearMap m(f, rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            require(rows[i].size() == c, "LinearMap::from_rows: ragged rows");
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    static LinearMap from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& cols) {
        LinearMap m(f, rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            require(cols[j].size() == rows, "LinearMap::from_columns: bad column length");
            for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
        }
        return m;
    }

    // integer initializer for tests and fixtures, row-major
    static LinearMap from_ints(const Field& f, std::size_t rows, std::size_t cols,
                               const std::vector<long long>& entries) {
        require(entries.size() == rows * cols, "LinearMap::from_ints: entry count mismatch");
        LinearMap m(f, rows, cols);
        for (std::size_t i = 0; i < entries.size(); ++i) m.a_[i] = Scalar::from_int(f, entries[i]);
        return m;
    }

    [[nodiscard]] const Field& field() const { return field_; }
    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) {
        require(i < rows_ && j < cols_, "LinearMap: index out of range");
        return a_[i * cols_ + j];
    }
    [[nodiscard]] const Scalar& at(std::size_t i, std::size_t j) const {
        require(i < rows_ && j < cols_, "LinearMap: index out of range");
        return a_[i * cols_ + j];
    }
    Scalar& operator()(std::size_t i, std::size_t j) { return at(i, j); }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return at(i, j); }

    [[nodiscard]] Vec row(std::size_t i) const {
        Vec r(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
              a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
        return r;
    }
    [[nodiscard]] Vec column(std::size_t j) const {
        Vec c;
        c.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
        return c;
    }

    [[nodiscard]] Vec apply(const Vec& v) const {
        require(v.size() == cols_, "LinearMap::apply: dimension mismatch");
        Vec r = zero_vec(field_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            Scalar acc = Scalar::zero(field_);
            for (std::size_t j = 0; j < cols_; ++j) acc += at(i, j) * v[j];
            r[i] = acc;
        }
        return r;
    }

    // composition (*this) o other
    [[nodiscard]] LinearMap compose(const LinearMap& other) const {
        require(field_ == other.field_, "LinearMap::compose: field mismatch");
        require(cols_ == other.rows_, "LinearMap::compose: dimension mismatch");
        LinearMap r(field_, rows_, other.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Scalar& aik = at(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < other.cols_; ++j) r.at(i, j) += aik * other.at(k, j);
            }
        return r;
    }

    LinearMap operator*(const LinearMap& other) const { return compose(other); }

    LinearMap operator+(const LinearMap& o) const {
        require(field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_, "LinearMap: shape mismatch in +");
        LinearMap r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }

    LinearMap operator-(const LinearMap& o) const {
        require(field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_, "LinearMap: shape mismatch in -");
        LinearMap r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
        return r;
    }

    [[nodiscard]] LinearMap scaled(const Scalar& c) const {
        LinearMap r = *this;
        for (auto& x : r.a_) x *= c;
        return r;
    }

    bool operator==(const LinearMap& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const LinearMap& o) const { return !(*this == o); }

    [[nodiscard]] bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(), [](const Scalar& x) { return x.is_zero(); });
    }

    [[nodiscard]] bool is_identity() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                if (i == j && !at(i, j).is_one()) return false;
                if (i != j && !at(i, j).is_zero()) return false;
            }
        return true;
    }

    [[nodiscard]] LinearMap transpose() const {
        LinearMap r(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    // stack on top of each other: [this; below]
    [[nodiscard]] LinearMap vstack(const LinearMap& below) const {
        require(field_ == below.field_ && cols_ == below.cols_, "vstack: shape mismatch");
        LinearMap r(field_, rows_ + below.rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t i = 0; i < below.rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = below.at(i, j);
        return r;
    }

    // side by side: [this | right]
    [[nodiscard]] LinearMap hstack(const LinearMap& right) const {
        require(field_ == right.field_ && rows_ == right.rows_, "hstack: shape mismatch");
        LinearMap r(field_, rows_, cols_ + right.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
            for (std::size_t j = 0; j < right.cols_; ++j) r.at(i, cols_ + j) = right.at(i, j);
        }
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, const LinearMap& m) {
        os << "[";
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? "; " : "");
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m.at(i, j).to_string();
        }
        return os << "]";
    }

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;  // row-major
};

// (a (x) b) on left-major tensor bases; dimensions multiply
inline LinearMap kronecker(const LinearMap& a, const LinearMap& b) {
    require(a.field() == b.field(), "kronecker: field mismatch");
    LinearMap r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ia = 0; ia < a.rows(); ++ia)
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            const Scalar& s = a.at(ia, ja);
            if (s.is_zero()) continue;
            for (std::size_t ib = 0; ib < b.rows(); ++ib)
                for (std::size_t jb = 0; jb < b.cols(); ++jb)
                    r.at(ia * b.rows() + ib, ja * b.cols() + jb) = s * b.at(ib, jb);
        }
    return r;
}

struct RrefResult {
    LinearMap echelon;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
    // pivot-based solution with all free variables zero; absent when inconsistent
    std::optional<Vec> solution;
};

// Unique reduced row-echelon form; when rhs is given, solves m x = rhs.
inline RrefResult rref_solve(const LinearMap& m, const std::optional<Vec>& rhs = std::nullopt) {
    if (rhs) require(rhs->size() == m.rows(), "rref_solve: rhs length must equal rows");
    const Field f = m.field();
    LinearMap work = rhs ? m.hstack(LinearMap::from_columns(f, m.rows(), {*rhs})) : m;

    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    const std::size_t limit_cols = m.cols();  // rhs column is never a pivot candidate
    for (std::size_t c = 0; c < limit_cols && r < work.rows(); ++c) {
        std::size_t sel = r;
        while (sel < work.rows() && work.at(sel, c).is_zero()) ++sel;
        if (sel == work.rows()) continue;
        if (sel != r)
            for (std::size_t j = 0; j < work.cols(); ++j) std::swap(work.at(r, j), work.at(sel, j));
        const Scalar inv = work.at(r, c).inverse();
        for (std::size_t j = 0; j < work.cols(); ++j) work.at(r, j) *= inv;
        for (std::size_t i = 0; i < work.rows(); ++i) {
            if (i == r || work.at(i, c).is_zero()) continue;
            const Scalar factor = work.at(i, c);
            for (std::size_t j = 0; j < work.cols(); ++j)
                work.at(i, j) -= factor * work.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }

    RrefResult res{LinearMap(f, m.rows(), m.cols()), r, pivots, std::nullopt};
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) res.echelon.at(i, j) = work.at(i, j);

    if (rhs) {
        bool consistent = true;
        for (std::size_t i = r; i < work.rows(); ++i)
            if (!work.at(i, m.cols()).is_zero()) consistent = false;
        if (consistent) {
            Vec x = zero_vec(f, m.cols());
            for (std::size_t i = 0; i < r; ++i) x[pivots[i]] = work.at(i, m.cols());
            res.solution = std::move(x);
        }
    }
    return res;
}

// A subspace of k^n in canonical form: basis rows in RREF with strictly
// increasing pivots. Two equal subspaces have identical representations.
class Subspace {
public:
    Subspace(const Field& f, std::size_t ambient) : field_(f), ambient_(ambient) {}

    static Subspace zero_subspace(const Field& f, std::size_t ambient) { return Subspace(f, ambient); }

    static Subspace full(const Field& f, std::size_t ambient) {
        return from_span(f, ambient, [&] {
            std::vector<Vec> rows;
            for (std::size_t i = 0; i < ambient; ++i) rows.push_back(unit_vec(f, ambient, i));
            return rows;
        }());
    }

    static Subspace from_span(const Field& f, std::size_t ambient, const std::vector<Vec>& vectors) {
        for (const auto& v : vectors) require(v.size() == ambient, "Subspace::from_span: ambient mismatch");
        if (vectors.empty()) return Subspace(f, ambient);
        const auto rr = rref_solve(LinearMap::from_rows(f, vectors));
        Subspace s(f, ambient);
        for (std::size_t i = 0; i < rr.rank; ++i) s.basis_.push_back(rr.echelon.row(i));
        s.pivots_ = rr.pivot_cols;
        return s;
    }

    [[nodiscard]] const Field& field() const { return field_; }
    [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
    [[nodiscard]] std::size_t dim() const { return basis_.size(); }
    [[nodiscard]] const std::vector<Vec>& basis() const { return basis_; }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool operator==(const Subspace& o) const {
        return field_ == o.field_ && ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    [[nodiscard]] bool contains(const Vec& v) const {
        require(v.size() == ambient_, "Subspace::contains: ambient mismatch");
        Vec w = v;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            const Scalar c = w[pivots_[i]];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < ambient_; ++j) w[j] -= c * basis_[i][j];
        }
        return is_zero_vec(w);
    }

    [[nodiscard]] bool contains(const Subspace& o) const {
        require(ambient_ == o.ambient_, "Subspace::contains: ambient mismatch");
        return std::all_of(o.basis_.begin(), o.basis_.end(), [&](const Vec& v) { return contains(v); });
    }

    [[nodiscard]] Subspace sum(const Subspace& o) const {
        require(field_ == o.field_ && ambient_ == o.ambient_, "Subspace::sum: ambient mismatch");
        std::vector<Vec> all = basis_;
        all.insert(all.end(), o.basis_.begin(), o.basis_.end());
        return from_span(field_, ambient_, all);
    }

    [[nodiscard]] Subspace intersect(const Subspace& o) const {
        require(field_ == o.field_ && ambient_ == o.ambient_, "Subspace::intersect: ambient mismatch");
        if (dim() == 0 || o.dim() == 0) return zero_subspace(field_, ambient_);
        // v = c . basis(this) lies in o  iff  proj_o(basis^T c) = 0
        const LinearMap basis_t = LinearMap::from_columns(field_, ambient_, basis_);
        const LinearMap sys = o.quotient_projection().compose(basis_t);
        const auto coeff_kernel = kernel_basis(sys);
        std::vector<Vec> vecs;
        vecs.reserve(coeff_kernel.size());
        for (const auto& c : coeff_kernel) vecs.push_back(basis_t.apply(c));
        return from_span(field_, ambient_, vecs);
    }

    // The canonical surjection k^ambient -> k^(ambient - dim) whose kernel is
    // this subspace. The quotient basis is the classes of the non-pivot
    // standard coordinates, in increasing order.
    [[nodiscard]] LinearMap quotient_projection() const {
        std::vector<std::size_t> free_cols = non_pivot_columns();
        LinearMap pi(field_, free_cols.size(), ambient_);
        for (std::size_t t = 0; t < free_cols.size(); ++t) pi.at(t, free_cols[t]) = Scalar::one(field_);
        for (std::size_t r = 0; r < basis_.size(); ++r)
            for (std::size_t t = 0; t < free_cols.size(); ++t)
                pi.at(t, pivots_[r]) = -basis_[r][free_cols[t]];
        return pi;
    }

    // Section of quotient_projection selecting the non-pivot standard coordinates.
    [[nodiscard]] LinearMap quotient_section() const {
        std::vector<std::size_t> free_cols = non_pivot_columns();
        LinearMap sigma(field_, ambient_, free_cols.size());
        for (std::size_t t = 0; t < free_cols.size(); ++t) sigma.at(free_cols[t], t) = Scalar::one(field_);
        return sigma;
    }

    // columns = basis vectors; the inclusion k^dim -> k^ambient
    [[nodiscard]] LinearMap inclusion() const { return LinearMap::from_columns(field_, ambient_, basis_); }

    [[nodiscard]] std::vector<std::size_t> non_pivot_columns() const {
        std::vector<std::size_t> free_cols;
        std::size_t next = 0;
        for (std::size_t c = 0; c < ambient_; ++c) {
            if (next < pivots_.size() && pivots_[next] == c)
                ++next;
            else
                free_cols.push_back(c);
        }
        return free_cols;
    }

    static std::vector<Vec> kernel_basis(const LinearMap& m);

private:
    Field field_;
    std::size_t ambient_;
    std::vector<Vec> basis_;            // RREF rows
    std::vector<std::size_t> pivots_;   // strictly increasing
};

inline std::vector<Vec> Subspace::kernel_basis(const LinearMap& m) {
    const auto rr = rref_solve(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : rr.pivot_cols) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec v = zero_vec(m.field(), m.cols());
        v[c] = Scalar::one(m.field());
        for (std::size_t i = 0; i < rr.rank; ++i) v[rr.pivot_cols[i]] = -rr.echelon.at(i, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Subspace image(const LinearMap& m) {
    std::vector<Vec> cols;
    cols.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
    return Subspace::from_span(m.field(), m.rows(), cols);
}

inline Subspace kernel(const LinearMap& m) {
    return Subspace::from_span(m.field(), m.cols(), Subspace::kernel_basis(m));
}

inline std::size_t rank(const LinearMap& m) { return rref_solve(m).rank; }

inline bool is_invertible(const LinearMap& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

inline LinearMap inverse(const LinearMap& m) {
    require(m.rows() == m.cols(), "inverse: matrix not square");
    const Field f = m.field();
    LinearMap aug = m.hstack(LinearMap::identity(f, m.rows()));
    const auto rr = rref_solve(aug);
    require(rr.rank >= m.rows() && (m.rows() == 0 || rr.pivot_cols[m.rows() - 1] < m.rows()),
            "inverse: matrix is singular");
    LinearMap inv(f, m.rows(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) inv.at(i, j) = rr.echelon.at(i, m.rows() + j);
    return inv;
}

// Solve x . epi = rhs for a surjective epi (factor rhs through the quotient).
inline LinearMap solve_through_epi(const LinearMap& epi, const LinearMap& rhs);

// Solve mono . x = rhs column-by-column; mono must be injective and the
// system consistent (rhs columns inside the image).
inline LinearMap solve_through_mono(const LinearMap& mono, const LinearMap& rhs) {
    require(mono.rows() == rhs.rows(), "solve_through_mono: shape mismatch");
    LinearMap x(mono.field(), mono.cols(), rhs.cols());
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
        const auto rr = rref_solve(mono, rhs.column(j));
        require(rr.rank == mono.cols(), "solve_through_mono: map is not injective");
        require(rr.solution.has_value(), "solve_through_mono: inconsistent system");
        for (std::size_t i = 0; i < mono.cols(); ++i) x.at(i, j) = (*rr.solution)[i];
    }
    return x;
}

inline LinearMap solve_through_epi(const LinearMap& epi, const LinearMap& rhs) {
    require(epi.cols() == rhs.cols(), "solve_through_epi: shape mismatch");
    return solve_through_mono(epi.transpose(), rhs.transpose()).transpose();
}

}  // namespace mq
