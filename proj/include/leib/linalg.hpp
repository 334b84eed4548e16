#ifndef LEIB_LINALG_HPP
#define LEIB_LINALG_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "leib/field.hpp"

namespace leib {

using Vec = std::vector<Scalar>;

Vec zero_vec(const FieldSpec &f, std::size_t n);
Vec unit_vec(const FieldSpec &f, std::size_t n, std::size_t i);
bool vec_is_zero(const Vec &v);
Vec vec_add(const Vec &a, const Vec &b);
Vec vec_sub(const Vec &a, const Vec &b);
Vec vec_scale(const Scalar &c, const Vec &v);
bool vec_eq(const Vec &a, const Vec &b);
std::string vec_str(const Vec &v);

/// Dense matrix over an exact field.
class Matrix {
  public:
    Matrix(const FieldSpec &f, std::size_t rows, std::size_t cols);
    static Matrix identity(const FieldSpec &f, std::size_t n);
    static Matrix from_rows(const FieldSpec &f, const std::vector<Vec> &rows, std::size_t cols);
    static Matrix from_columns(const FieldSpec &f, const std::vector<Vec> &cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec &field() const { return field_; }

    const Scalar &at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    Scalar &at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec column(std::size_t c) const;

    Matrix operator*(const Matrix &o) const;
    Matrix operator+(const Matrix &o) const;
    Matrix operator-(const Matrix &o) const;
    bool operator==(const Matrix &o) const;

    /// Matrix times column vector.
    Vec apply(const Vec &v) const;

    Matrix transpose() const;
    Matrix pow(std::size_t k) const; // square only

  private:
    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> e_;
};

/// Result of Gauss-Jordan elimination: the reduced matrix with its pivot
/// columns. Over Q the forward pass runs fraction-free (Bareiss) on an
/// integer-scaled copy before normalizing, which keeps intermediate entries
/// from blowing up.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

Echelon rref(const Matrix &m);

/// Exact determinant. Q goes through fraction-free elimination on the
/// integer-scaled matrix; GF(p) through ordinary Gaussian elimination.
Scalar det(const Matrix &m); // square only

/// Subspace of F^n held as a reduced-row-echelon basis with strictly
/// increasing pivots. The representation is canonical: two subspaces are
/// equal iff their basis rows are equal.
class Subspace {
  public:
    /// The zero subspace of the zero-dimensional space over Q; placeholder
    /// value for report structs.
    Subspace() : field_(FieldSpec::rationals()), ambient_(0) {}

    static Subspace zero(const FieldSpec &f, std::size_t ambient);
    static Subspace full(const FieldSpec &f, std::size_t ambient);
    static Subspace span(const FieldSpec &f, std::size_t ambient, const std::vector<Vec> &gens);

    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient() const { return ambient_; }
    const FieldSpec &field() const { return field_; }
    const std::vector<Vec> &basis() const { return rows_; }
    const std::vector<std::size_t> &pivots() const { return pivots_; }
    bool is_zero() const { return rows_.empty(); }
    bool is_full() const { return rows_.size() == ambient_; }

    bool contains_vector(const Vec &v) const;
    bool contains(const Subspace &o) const;
    bool operator==(const Subspace &o) const;
    bool operator!=(const Subspace &o) const { return !(*this == o); }

    Subspace sum(const Subspace &o) const;
    Subspace intersect(const Subspace &o) const; // Zassenhaus

    /// Remainder of v after eliminating this subspace's pivot coordinates;
    /// zero iff v lies in the subspace.
    Vec reduce(const Vec &v) const;

    /// Coefficients of v in this basis; precondition v in the subspace.
    Vec coords_of(const Vec &v) const;

    /// Complement U' with this + U' = W (direct): the rows of W whose pivot
    /// is not a pivot of this subspace. Requires this inside W; for W = F^n
    /// this picks standard basis vectors at non-pivot positions.
    Subspace complement_in(const Subspace &w) const;

  private:
    Subspace(const FieldSpec &f, std::size_t ambient) : field_(f), ambient_(ambient) {}
    FieldSpec field_;
    std::size_t ambient_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix &m);
Subspace image(const Matrix &m); // column space, lives in F^rows

/// One solution of A x = b, or nullopt if inconsistent.
std::optional<Vec> solve(const Matrix &a, const Vec &b);

/// Fitting decomposition of F^d relative to a d x d endomorphism:
/// L0 = ker f^d, L1 = im f^d; f is nilpotent on L0 and invertible on L1.
std::pair<Subspace, Subspace> fitting_decomposition(const Matrix &f);

/// det(f) == 0, decided through the kernel.
bool has_zero_eigenvalue(const Matrix &f);

/// Stacks matrices vertically (same column count).
Matrix vstack(const std::vector<Matrix> &ms);

// ---- finite-field enumeration -------------------------------------------
// All functions below require a prime field and throw FieldError for Q.

/// All p^n coordinate vectors, zero first, coordinate 0 most significant.
std::vector<Vec> all_vectors(const FieldSpec &f, std::size_t n);

/// One representative per punctured line: nonzero vectors whose first nonzero
/// coordinate is 1, in the all_vectors order.
std::vector<Vec> projective_vectors(const FieldSpec &f, std::size_t n);

/// Number of subspaces of F_p^n (sum of Gaussian binomials).
BigInt subspace_count(std::int64_t p, std::size_t n);

/// Every subspace of F_p^n: dimension ascending, pivot sets lexicographic,
/// free RREF entries in odometer order. Reproducible counterexamples depend
/// on this order. Throws BudgetError when the total exceeds the budget.
std::vector<Subspace> all_subspaces(const FieldSpec &f, std::size_t n, std::uint64_t budget);

} // namespace leib

#endif
