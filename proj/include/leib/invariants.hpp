#ifndef LEIB_INVARIANTS_HPP
#define LEIB_INVARIANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "leib/algebra.hpp"

namespace leib {

enum class SeriesKind { LowerCentral, Derived };

/// Lower central series L^1 = L, L^{k+1} = [L^k, L], or derived series
/// L^(0) = L, L^(k+1) = [L^(k), L^(k)]. Terms run until the series hits 0 or
/// repeats; the final term is included either way.
struct SeriesReport {
    SeriesKind kind;
    std::vector<Subspace> terms;
    bool reaches_zero;
    /// Nilpotency class resp. derived length when reaches_zero.
    std::optional<std::size_t> class_or_length;
};

SeriesReport series(const LeibnizAlgebra &l, SeriesKind kind);
bool is_nilpotent(const LeibnizAlgebra &l);
bool is_solvable(const LeibnizAlgebra &l);

/// Whether the subspace (assumed product-closed) is nilpotent as an algebra,
/// computed inside the ambient algebra without a basis change.
bool subspace_is_nilpotent(const LeibnizAlgebra &l, const Subspace &u);
bool subspace_is_solvable(const LeibnizAlgebra &l, const Subspace &u);

/// I = span{x^2}: generated by e_i^2 and (e_i + e_j)^2, which span all
/// squares in every characteristic.
Subspace leibniz_kernel(const LeibnizAlgebra &l);

/// Z(L) = {z : zx = xz = 0 for all x}.
Subspace center(const LeibnizAlgebra &l);

/// C(x) = {a : ax = xa = 0} = ker R_x meet ker L_x.
Subspace centralizer(const LeibnizAlgebra &l, const Vec &x);

/// Left centraliser {a : ax = 0} = ker R_x.
Subspace left_centralizer(const LeibnizAlgebra &l, const Vec &x);

bool is_zero_algebra(const LeibnizAlgebra &l);
/// All pairwise products of U's basis vanish.
bool is_zero_subalgebra(const LeibnizAlgebra &l, const Subspace &u);

/// L^2 is nilpotent.
bool is_completely_solvable(const LeibnizAlgebra &l);

/// L^2 = [L, L].
Subspace derived_subalgebra(const LeibnizAlgebra &l);

struct NilradicalReport {
    Subspace space;
    bool certified;     // result proven maximal, not just a nilpotent ideal
    std::string method; // which path produced it
};

/// Largest nilpotent ideal.
///
/// A linear candidate comes first: x must satisfy tr(R_x|_W) = 0 and
/// tr(R_x R_{e_j}|_W) = 0 on every graded piece W of the derived series;
/// every element of the nilradical does, so the candidate contains N. If the
/// candidate verifies as a nilpotent ideal it equals N. Otherwise, over a
/// finite field within budget, the exact answer is assembled as the sum of
/// all nilpotent single-generator ideal closures; over Q the result falls
/// back to a verified lower bound flagged uncertified.
NilradicalReport nilradical_report(const LeibnizAlgebra &l,
                                   std::uint64_t element_budget = 1u << 20,
                                   std::uint64_t subspace_budget = 200000);
Subspace nilradical(const LeibnizAlgebra &l);

struct RadicalReport {
    Subspace space;
    bool certified;
    std::string method;
};

/// Largest solvable ideal; exact by ideal enumeration over small finite
/// fields, lower bound flagged uncertified otherwise.
RadicalReport solvable_radical_report(const LeibnizAlgebra &l,
                                      std::uint64_t subspace_budget = 200000);
Subspace solvable_radical(const LeibnizAlgebra &l);

/// Matrix of the action induced by R_x on the section big/small
/// (both terms of a filtration with [big, L] inside big and small an ideal).
Matrix induced_right_action(const LeibnizAlgebra &l, const Subspace &big,
                            const Subspace &small, const Vec &x);

} // namespace leib

#endif
