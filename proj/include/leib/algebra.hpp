#ifndef LEIB_ALGEBRA_HPP
#define LEIB_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "leib/linalg.hpp"

namespace leib {

/// One product table entry: e_i * e_j = sum of terms c * e_k.
struct ProductTerm {
    std::size_t k;
    Scalar c;
};
struct ProductEntry {
    std::size_t i, j;
    std::vector<ProductTerm> terms;
};

/// First basis triple violating the Leibniz identity, with both sides of
/// [e_i,[e_j,e_k]] = [[e_i,e_j],e_k] - [[e_i,e_k],e_j].
struct LeibnizViolation {
    std::size_t i, j, k;
    Vec lhs, rhs;
};

struct QuotientResult;

/// Finite-dimensional algebra given by structure constants c[i][j] (the
/// coordinate vector of e_i * e_j). Immutable after construction; whether it
/// actually satisfies the Leibniz identity is decided by check_leibniz().
class LeibnizAlgebra {
  public:
    /// Assembles the tensor; omitted products default to zero. No identity
    /// check happens here. Throws on out-of-range indices or field mismatch.
    static LeibnizAlgebra make(const FieldSpec &f, std::vector<std::string> basis_names,
                               const std::vector<ProductEntry> &entries);

    /// n-dimensional algebra with all products zero.
    static LeibnizAlgebra zero(const FieldSpec &f, std::size_t n);

    static LeibnizAlgebra from_tensor(const FieldSpec &f, std::vector<std::string> basis_names,
                                      std::vector<Vec> tensor);

    std::size_t dim() const { return n_; }
    const FieldSpec &field() const { return field_; }
    const std::vector<std::string> &basis_names() const { return names_; }

    /// Structure vector c[i][j] of e_i * e_j.
    const Vec &product(std::size_t i, std::size_t j) const { return c_[i * n_ + j]; }

    bool operator==(const LeibnizAlgebra &o) const;

    /// Bilinear product of coordinate vectors.
    Vec mult(const Vec &x, const Vec &y) const;

    /// Matrix of y |-> y * x (column j = e_j * x).
    Matrix right_op(const Vec &x) const;
    /// Matrix of y |-> x * y (column j = x * e_j).
    Matrix left_op(const Vec &x) const;

    /// Checks the identity on all n^3 basis triples; by trilinearity this
    /// decides it for the whole algebra. Returns the first violation.
    std::optional<LeibnizViolation> check_leibniz() const;
    /// All violating triples (verbose diagnostics).
    std::vector<LeibnizViolation> leibniz_violations() const;

    /// [x,x] = 0 for all x, decided via e_i^2 = 0 and polarization.
    bool is_lie() const;

    /// span{ u * v : u in U-basis, v in V-basis }, canonicalized.
    Subspace product_space(const Subspace &u, const Subspace &v) const;

    /// Smallest product-closed subspace containing the generators.
    Subspace generated_subalgebra(const std::vector<Vec> &gens) const;

    bool is_subalgebra(const Subspace &u) const;
    bool is_ideal(const Subspace &u) const;

    /// Smallest ideal containing the generators.
    Subspace ideal_closure(const std::vector<Vec> &gens) const;

    /// Quotient by an ideal, on the echelon-completion complement basis.
    /// Throws PreconditionError if J is not an ideal.
    QuotientResult quotient(const Subspace &j) const;

    /// The algebra structure induced on a subalgebra, in its canonical basis.
    /// Throws PreconditionError if U is not closed under the product.
    LeibnizAlgebra restrict_to(const Subspace &u) const;

    Subspace full_space() const { return Subspace::full(field_, n_); }
    Subspace zero_space() const { return Subspace::zero(field_, n_); }
    Vec unit(std::size_t i) const { return unit_vec(field_, n_, i); }

    /// Pretty name of a coordinate vector in this algebra's basis names.
    std::string element_str(const Vec &v) const;

  private:
    LeibnizAlgebra(const FieldSpec &f, std::size_t n) : field_(f), n_(n) {}

    Vec mult_basis_vec(std::size_t i, const Vec &v) const; // e_i * v
    Vec mult_vec_basis(const Vec &v, std::size_t k) const; // v * e_k

    FieldSpec field_;
    std::size_t n_;
    std::vector<std::string> names_;
    std::vector<Vec> c_; // n*n entries, c_[i*n+j] = e_i * e_j
};

struct QuotientResult {
    LeibnizAlgebra algebra;
    Matrix projection; // (dim L/J) x (dim L), maps coordinates onto quotient coordinates
};

/// Default basis names e1..en.
std::vector<std::string> default_names(std::size_t n);

} // namespace leib

#endif
