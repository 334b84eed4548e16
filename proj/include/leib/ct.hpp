#ifndef LEIB_CT_HPP
#define LEIB_CT_HPP

#include <optional>

#include "leib/algebra.hpp"

namespace leib {

/// A violation of the transitivity law: x in C(y), y in C(z), but x not in
/// C(z). Witnesses re-verify against the raw definition.
struct CtWitness {
    Vec x, y, z;
};

enum class CtStatus { Ct, NotCt, Unfalsified };

struct CtVerdict {
    CtStatus status;
    std::optional<CtWitness> witness;
    std::uint64_t samples = 0; // randomized verdicts only
    std::uint64_t seed = 0;
    bool ok() const { return status == CtStatus::Ct; }
};

/// The witness triple checks out against the raw definition.
bool ct_witness_reverifies(const LeibnizAlgebra &l, const CtWitness &w);

/// Production CT decision over a finite field: every centraliser C(x) of a
/// nonzero x must be a zero algebra, tested on basis pairs of C(x). One
/// representative per line suffices since C(tx) = C(x).
/// Throws BudgetError when p^dim exceeds the budget.
CtVerdict is_ct_exhaustive(const LeibnizAlgebra &l, std::uint64_t budget = 1000000);

/// Independent oracle using the raw transitivity law on element triples
/// (middle element nonzero), pruned to y, z running over centraliser
/// members. Kept separate from is_ct_exhaustive so their agreement is a
/// testable statement, not an assumption.
CtVerdict is_ct_via_definition(const LeibnizAlgebra &l, std::uint64_t budget = 1000000);

/// Randomized falsification over Q: basis vectors and all sign patterns
/// first, then seeded samples with coordinates in {-3..3}. Deterministic for
/// a fixed seed. Returns NotCt with a witness, or Unfalsified.
CtVerdict is_ct_randomized(const LeibnizAlgebra &l, std::uint64_t samples = 1000,
                           std::uint64_t seed = 0);

/// Dispatches on the field: exhaustive when finite and within budget,
/// randomized otherwise.
CtVerdict is_ct_auto(const LeibnizAlgebra &l, std::uint64_t budget = 1000000,
                     std::uint64_t samples = 1000, std::uint64_t seed = 0);

struct AAlgebraReport {
    bool ok;
    std::optional<Subspace> counterexample; // nilpotent subalgebra, not zero
    std::uint64_t subalgebras = 0;
};

/// Every nilpotent subalgebra is a zero algebra, by subspace enumeration.
AAlgebraReport is_a_algebra_exhaustive(const LeibnizAlgebra &l,
                                       std::uint64_t budget = 200000);

struct CensusReport {
    std::int64_t p = 0;
    std::size_t dim = 0;
    std::uint64_t tables = 0; // p^(dim^3) candidates scanned
    std::uint64_t leibniz_valid = 0;
    std::uint64_t ct = 0;
    std::uint64_t not_ct = 0;
    std::uint64_t cross_check_disagreements = 0; // is_ct_via_definition vs production
    std::optional<std::vector<Vec>> first_ct_tensor;
    std::optional<std::vector<Vec>> first_not_ct_tensor;
    std::optional<CtWitness> first_not_ct_witness;
};

/// Scans every structure tensor over GF(p) in dimension dim, filters by
/// check_leibniz and classifies the valid tables. Every ct-flagged table is
/// cross-validated with is_ct_via_definition. GF(2) in dimension 3 runs on a
/// bit-packed enumerator; the candidate count must stay within budget.
CensusReport ct_census(std::int64_t p, std::size_t dim, std::uint64_t budget = 1u << 28,
                       unsigned jobs = 1);

/// Materializes the structure tensors of every Leibniz-valid table over
/// GF(p) in dimension dim (the census filter without classification).
std::vector<LeibnizAlgebra> leibniz_valid_tables(std::int64_t p, std::size_t dim,
                                                 std::uint64_t budget = 1u << 28,
                                                 unsigned jobs = 1);

struct ModuleEigenReport {
    bool ok;                          // both sides of the biconditional agree
    bool action_invertible_forall;    // every x outside N acts invertibly on N
    bool centralisers_inside_forall;  // C(n) inside N for all nonzero n in N
    std::optional<Vec> action_witness;      // x outside N with singular action
    std::optional<Vec> centraliser_witness; // n with C(n) not inside N
    bool sampled = false;                   // Q: spot-checked, not exhaustive
};

/// Instance check of the module-action biconditional for a zero ideal N.
/// Throws PreconditionError unless N is a zero ideal.
ModuleEigenReport module_eigen_check(const LeibnizAlgebra &l, const Subspace &n,
                                     std::uint64_t seed = 0, std::uint64_t samples = 200);

struct LiftCtReport {
    enum class Outcome { Ok, HypothesisFailed, ConclusionFailed } outcome;
    std::string failed_hypothesis;
    std::optional<Vec> hypothesis_witness;
    std::optional<CtVerdict> conclusion; // the verified CT check of L itself
};

/// Checks the lifting hypotheses (N zero ideal, L/N CT, centralisers of
/// nonzero module elements inside N) and, when they hold, independently
/// verifies the lifted conclusion that L is CT.
LiftCtReport lift_ct_check(const LeibnizAlgebra &l, const Subspace &n,
                           std::uint64_t budget = 1000000);

struct FactorCtReport {
    bool ok;
    std::uint64_t ideals_checked = 0;
    std::optional<Subspace> counterexample_ideal;
    std::optional<CtWitness> quotient_witness;
};

/// For a solvable CT algebra over a finite field, every quotient by an ideal
/// must again be CT; scans all ideals. Throws PreconditionError when L is
/// not solvable or not CT.
FactorCtReport factor_ct_check(const LeibnizAlgebra &l, std::uint64_t budget = 200000);

} // namespace leib

#endif
