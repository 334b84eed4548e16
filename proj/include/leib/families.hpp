#ifndef LEIB_FAMILIES_HPP
#define LEIB_FAMILIES_HPP

#include <optional>

#include "leib/algebra.hpp"

namespace leib {

/// Cyclic algebra data: basis a, a^2, ..., a^n with
/// a^n * a = alpha_2 a^2 + ... + alpha_n a^n. The companion polynomial is
/// p(x) = x^n - alpha_n x^{n-1} - ... - alpha_2 x; x divides it with
/// multiplicity 1 exactly when alpha_2 != 0.
struct CyclicSpec {
    FieldSpec field;
    std::size_t n;              // >= 2
    std::vector<Scalar> alphas; // alpha_2 .. alpha_n
};

/// Builds the cyclic table: a^i * a = a^{i+1} (i < n), a^n * a as above and
/// a^i * a^j = 0 for j >= 2. The constructor verifies the Leibniz identity.
LeibnizAlgebra cyclic_algebra(const CyclicSpec &spec);

/// b = a^n - alpha_n a^{n-1} - ... - alpha_2 a in cyclic coordinates.
Vec cyclic_b_element(const CyclicSpec &spec);

struct CyclicCtReport {
    bool is_ct = false; // alpha_2 != 0
    std::optional<Vec> b;
    bool b_squared_zero = false;
    bool rb_invertible_on_l2 = false;
    bool direct_sum = false;          // L = L^2 + Fb, direct
    bool centraliser_table_ok = false; // C(m + t b) is L^2 / Fb / 0 by case
    std::uint64_t table_points = 0;
    std::string table_witness; // first failing point, if any
};

/// Decides CT for a cyclic algebra from alpha_2 and certifies the supporting
/// structure on the instance. Finite fields check the centraliser table at
/// every element; Q uses the deterministic small-coordinate prefix plus
/// seeded samples.
CyclicCtReport cyclic_ct_criterion(const CyclicSpec &spec, std::uint64_t seed = 0,
                                   std::uint64_t samples = 200);

/// The (p+2)-dimensional Lie algebra over GF(p) with basis e, f, x1..xp:
/// [e,f] = e, the module F^p acted on by the cyclic-shift matrix (for e) and
/// diag(0..p-1) (for f) as row vectors, module products zero. The
/// constructor asserts the Leibniz identity and antisymmetry.
LeibnizAlgebra jac_example(std::int64_t p);

/// Centraliser of a nonzero element of jac_example(p) as predicted by the
/// classical four-case table, keyed on (alpha, beta, x). The x1 case of that
/// table disagrees with the computed centraliser: module vectors centralize
/// each other, so C(x1) = Ff + F^p (see the family tests).
Subspace jac_table_centralizer(const LeibnizAlgebra &jac, const Vec &elem);

/// sl2 basis (e, h, f): [e,f] = h, [h,e] = 2e, [h,f] = -2f, antisymmetric.
LeibnizAlgebra sl2(const FieldSpec &f);

enum class SemidirectSign { LieType, NullLeft };

struct SemidirectResult {
    std::optional<LeibnizAlgebra> algebra;
    std::optional<LeibnizViolation> rejection; // incompatible actions
};

/// N = F^m (zero algebra, basis n1..nm) extended by a complement b1..bk with
/// zero products; the right action of b_j on N is the given m x m matrix
/// (row convention), the left action is its negative (LieType) or zero
/// (NullLeft). Rejected with the violating triple when the Leibniz identity
/// fails, e.g. for non-commuting actions.
SemidirectResult semidirect_zero_module(const FieldSpec &f, std::size_t m,
                                        const std::vector<Matrix> &actions, SemidirectSign sign);

enum class RandomKind { Raw, LeibnizValid, SolvableCtCandidate };

/// Deterministic per seed. Raw draws an arbitrary tensor; LeibnizValid
/// rejection-samples (with a density schedule) until check_leibniz passes,
/// throwing BudgetError when the attempt budget runs out;
/// SolvableCtCandidate builds a semidirect product with one random
/// invertible diagonal action, which is CT.
LeibnizAlgebra random_algebra(std::uint64_t seed, std::size_t dim, const FieldSpec &f,
                              RandomKind kind, std::uint64_t budget = 20000);

/// Transports the structure tensor along an invertible matrix whose columns
/// are the new basis vectors. Throws PreconditionError if singular.
LeibnizAlgebra change_basis(const LeibnizAlgebra &l, const Matrix &p);

/// Deterministic pseudo-random stream used by the generators and samplers;
/// raw mersenne output only, so streams are identical across platforms.
struct Rng {
    std::uint64_t s[4];
    explicit Rng(std::uint64_t seed);
    std::uint64_t next();
    std::uint64_t below(std::uint64_t bound); // 0..bound-1
    long long int_in(long long lo, long long hi); // inclusive
    Scalar scalar(const FieldSpec &f, long long lo = -3, long long hi = 3);
    Scalar nonzero_scalar(const FieldSpec &f, long long lo = -3, long long hi = 3);
    Vec vec(const FieldSpec &f, std::size_t n, long long lo = -3, long long hi = 3);
};

} // namespace leib

#endif
