#ifndef LEIB_THEOREMS_HPP
#define LEIB_THEOREMS_HPP

#include <optional>

#include "leib/ct.hpp"

namespace leib {

enum class LemmaSBranch { ZeroAlgebra, InvertibleAction, Violation };

struct LemmaSReport {
    LemmaSBranch branch;
    bool action_invertible = false; // R_x restricted to A has trivial kernel
    bool image_full = false;        // Ax = A
    std::string detail;
};

/// Dichotomy check for L = A + Fx with A a zero ideal and x^2 in A: either L
/// is a zero algebra, or R_x acts invertibly on A and Ax = A. The CT
/// hypothesis is verified (exhaustively over finite fields, randomized over
/// Q); unmet preconditions throw PreconditionError. A Violation branch on a
/// valid input means the dichotomy itself failed on the instance.
LemmaSReport lemma_s_check(const LeibnizAlgebra &l, const Subspace &a, const Vec &x,
                           std::uint64_t ct_budget = 1000000);

struct SolvCertificate {
    bool ok = false;
    std::string failure;
    Subspace nilrad;
    std::size_t derived_length = 0;
    std::vector<Subspace> chain;         // A_n ... A_0
    bool chain_zero_subalgebras = false; // every A_i is a zero subalgebra
    bool chain_sums_match = false;       // L^(i) = A_n + ... + A_i, direct
    bool n_equals_last_derived = false;  // N = L^(n)
    bool splits_over_n = false;          // L = N + (A_{n-1} + ... + A_0), direct
    bool clause3 = false;                // every x outside N: R_x|_N invertible, Nx = N
    std::uint64_t clause3_points = 0;
    std::optional<Vec> clause3_witness;
};

/// Builds and verifies the full solvable-CT decomposition certificate over a
/// finite field. Zero-subalgebra complements are searched greedily first,
/// then exhaustively (complements of U in W enumerate as matrices, budget
/// applies). Throws PreconditionError when L is not solvable or not CT.
SolvCertificate solv_decomposition(const LeibnizAlgebra &l,
                                   std::uint64_t complement_budget = 200000);

struct CodimReport {
    std::size_t codim;
    bool within_bound; // codim <= 2; informational outside the closed-field hypothesis
};

/// dim L - dim N for solvable L.
CodimReport codim_report(const LeibnizAlgebra &l);

struct TransporterReport {
    bool found = false;
    Vec n;
    bool verified = false; // transported subspace equals the target exactly
};

/// Finds n in N with (1 + L_n)(A0) = A0p for two zero-subalgebra complements
/// of the nilradical in a completely solvable CT algebra. The certificate
/// re-verifies the transported subspace independently of the solver.
TransporterReport complement_transporter(const LeibnizAlgebra &l, const Subspace &a0,
                                         const Subspace &a0p);

struct ThetaReport {
    bool is_homomorphism;
    std::optional<std::pair<std::size_t, std::size_t>> witness; // basis pair (i, j)
    Vec lhs, rhs; // theta(e_i e_j) vs theta(e_i) theta(e_j) at the witness
};

/// Whether theta = 1 + L_n is multiplicative; bilinearity makes basis pairs
/// decisive.
ThetaReport theta_automorphism_test(const LeibnizAlgebra &l, const Vec &n);

enum class MainClass { Solvable, Sl2Like, Other };

struct MainTheoremReport {
    MainClass cls;
    bool is_lie = false;
    bool perfect = false; // L^2 = L
    bool simple = false;  // only ideals 0 and L
    std::string caveat;
};

/// Observational classification over GF(p), p not 2 or 3: solvable, or
/// sl2-like (dim 3, Lie, perfect, simple), or other. "Other" does not
/// falsify anything because the field is not algebraically closed; the
/// report says so. Throws PreconditionError when L is not CT.
MainTheoremReport main_theorem_check(const LeibnizAlgebra &l, std::uint64_t budget = 1000000);

} // namespace leib

#endif
