#ifndef LEIB_TESTS_ORACLES_HPP
#define LEIB_TESTS_ORACLES_HPP

// Brute-force reference implementations used only by tests. These stay
// independent of the production code paths they certify.

#include "leib/invariants.hpp"

namespace leibtest {

using namespace leib;

/// Largest nilpotent ideal by scanning every subspace of F_p^n.
inline Subspace nilradical_oracle(const LeibnizAlgebra &l, std::uint64_t budget = 2000000) {
    Subspace best = l.zero_space();
    for (const Subspace &u : all_subspaces(l.field(), l.dim(), budget)) {
        if (!l.is_ideal(u)) continue;
        if (!l.is_subalgebra(u)) continue;
        if (!subspace_is_nilpotent(l, u)) continue;
        if (u.dim() > best.dim()) best = u;
    }
    // the maximum must absorb every nilpotent ideal
    for (const Subspace &u : all_subspaces(l.field(), l.dim(), budget)) {
        if (l.is_ideal(u) && l.is_subalgebra(u) && subspace_is_nilpotent(l, u) &&
            !best.contains(u))
            throw Error("nilradical oracle: nilpotent ideals have no unique maximum");
    }
    return best;
}

/// Largest solvable ideal by subspace scan.
inline Subspace solvable_radical_oracle(const LeibnizAlgebra &l, std::uint64_t budget = 2000000) {
    Subspace best = l.zero_space();
    for (const Subspace &u : all_subspaces(l.field(), l.dim(), budget)) {
        if (!l.is_ideal(u)) continue;
        if (!subspace_is_solvable(l, u)) continue;
        if (u.dim() > best.dim()) best = u;
    }
    for (const Subspace &u : all_subspaces(l.field(), l.dim(), budget)) {
        if (l.is_ideal(u) && subspace_is_solvable(l, u) && !best.contains(u))
            throw Error("radical oracle: solvable ideals have no unique maximum");
    }
    return best;
}

/// Centraliser of x by scanning all p^n elements.
inline std::vector<Vec> centralizer_oracle(const LeibnizAlgebra &l, const Vec &x) {
    std::vector<Vec> out;
    for (const Vec &v : all_vectors(l.field(), l.dim()))
        if (vec_is_zero(l.mult(v, x)) && vec_is_zero(l.mult(x, v))) out.push_back(v);
    return out;
}

} // namespace leibtest

#endif
