#include "leib/ct.hpp"

#include <cstdint>
#include <thread>

#include "leib/families.hpp"
#include "leib/invariants.hpp"

namespace leib {

namespace {

std::uint64_t pow_u64_capped(std::int64_t p, std::size_t n, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (v > cap / static_cast<std::uint64_t>(p)) return cap + 1;
        v *= static_cast<std::uint64_t>(p);
    }
    return v;
}

void require_finite(const LeibnizAlgebra &l, const char *what) {
    if (!l.field().is_prime_field())
        throw PreconditionError(std::string(what) + " needs a finite field");
}

// Zero-algebra test of C(x) on basis pairs; fills the raw-law witness
// (u, x, v) on failure.
bool centraliser_is_zero_algebra(const LeibnizAlgebra &l, const Vec &x, const Subspace &c,
                                 std::optional<CtWitness> &witness) {
    for (const Vec &u : c.basis())
        for (const Vec &v : c.basis()) {
            if (vec_is_zero(l.mult(u, v))) continue;
            witness = CtWitness{u, x, v};
            return false;
        }
    return true;
}

// Members of a subspace as ambient vectors, all p^dim(U) of them.
std::vector<Vec> subspace_members(const Subspace &u) {
    std::vector<Vec> out;
    const FieldSpec &f = u.field();
    for (const Vec &coef : all_vectors(f, u.dim())) {
        Vec v = zero_vec(f, u.ambient());
        for (std::size_t s = 0; s < u.dim(); ++s)
            v = vec_add(v, vec_scale(coef[s], u.basis()[s]));
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

bool ct_witness_reverifies(const LeibnizAlgebra &l, const CtWitness &w) {
    bool x_in_cy = vec_is_zero(l.mult(w.x, w.y)) && vec_is_zero(l.mult(w.y, w.x));
    bool y_in_cz = vec_is_zero(l.mult(w.y, w.z)) && vec_is_zero(l.mult(w.z, w.y));
    bool x_in_cz = vec_is_zero(l.mult(w.x, w.z)) && vec_is_zero(l.mult(w.z, w.x));
    return x_in_cy && y_in_cz && !x_in_cz && !vec_is_zero(w.y);
}

CtVerdict is_ct_exhaustive(const LeibnizAlgebra &l, std::uint64_t budget) {
    require_finite(l, "exhaustive CT check");
    if (pow_u64_capped(l.field().prime(), l.dim(), budget) > budget)
        throw BudgetError("element enumeration exceeds budget");
    for (const Vec &x : projective_vectors(l.field(), l.dim())) {
        Subspace c = centralizer(l, x);
        std::optional<CtWitness> w;
        if (!centraliser_is_zero_algebra(l, x, c, w)) return CtVerdict{CtStatus::NotCt, w};
    }
    return CtVerdict{CtStatus::Ct, std::nullopt};
}

CtVerdict is_ct_via_definition(const LeibnizAlgebra &l, std::uint64_t budget) {
    require_finite(l, "raw CT check");
    if (pow_u64_capped(l.field().prime(), l.dim(), budget) > budget)
        throw BudgetError("element enumeration exceeds budget");
    // x in C(y), y in C(z) => x in C(z), for all triples with y != 0. Both x
    // and z range over members of C(y): x by the first premise, z by the
    // second via symmetric membership. The pair count per y is |C(y)|^2, so
    // the total work gets its own cap.
    std::uint64_t pair_budget = std::max<std::uint64_t>(budget, 1000000);
    std::uint64_t pairs = 0;
    for (const Vec &y : projective_vectors(l.field(), l.dim())) {
        auto members = subspace_members(centralizer(l, y));
        pairs += static_cast<std::uint64_t>(members.size()) * members.size();
        if (pairs > pair_budget)
            throw BudgetError("triple enumeration exceeds budget");
        for (const Vec &x : members)
            for (const Vec &z : members) {
                if (vec_is_zero(l.mult(x, z)) && vec_is_zero(l.mult(z, x))) continue;
                return CtVerdict{CtStatus::NotCt, CtWitness{x, y, z}};
            }
    }
    return CtVerdict{CtStatus::Ct, std::nullopt};
}

CtVerdict is_ct_randomized(const LeibnizAlgebra &l, std::uint64_t samples, std::uint64_t seed) {
    if (!l.field().is_rationals())
        throw PreconditionError("randomized CT check is for Q; use the exhaustive check");
    const FieldSpec &f = l.field();
    std::size_t n = l.dim();
    std::vector<Vec> prefix;
    for (std::size_t i = 0; i < n; ++i) prefix.push_back(l.unit(i));
    if (n <= 10) { // all sign patterns
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
            Vec v(n, Scalar::one(f));
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::uint64_t(1) << i)) v[i] = -v[i];
            prefix.push_back(std::move(v));
        }
    }
    Rng rng(seed);
    std::uint64_t checked = 0;
    for (std::uint64_t t = 0; checked < samples; ++t) {
        Vec x;
        if (t < prefix.size()) x = prefix[t];
        else x = rng.vec(f, n);
        if (vec_is_zero(x)) continue;
        ++checked;
        Subspace c = centralizer(l, x);
        std::optional<CtWitness> w;
        if (!centraliser_is_zero_algebra(l, x, c, w)) {
            CtVerdict v{CtStatus::NotCt, w};
            v.samples = checked;
            v.seed = seed;
            return v;
        }
    }
    CtVerdict v{CtStatus::Unfalsified, std::nullopt};
    v.samples = samples;
    v.seed = seed;
    return v;
}

CtVerdict is_ct_auto(const LeibnizAlgebra &l, std::uint64_t budget, std::uint64_t samples,
                     std::uint64_t seed) {
    if (l.field().is_prime_field()) return is_ct_exhaustive(l, budget);
    return is_ct_randomized(l, samples, seed);
}

AAlgebraReport is_a_algebra_exhaustive(const LeibnizAlgebra &l, std::uint64_t budget) {
    require_finite(l, "A-algebra check");
    AAlgebraReport rep{true, std::nullopt, 0};
    for (const Subspace &u : all_subspaces(l.field(), l.dim(), budget)) {
        if (!l.is_subalgebra(u)) continue;
        ++rep.subalgebras;
        if (!subspace_is_nilpotent(l, u)) continue;
        if (!is_zero_subalgebra(l, u)) {
            rep.ok = false;
            rep.counterexample = u;
            return rep;
        }
    }
    return rep;
}

// ---- census ---------------------------------------------------------------

namespace {

struct CensusAccum {
    std::uint64_t valid = 0, ct = 0, not_ct = 0, disagreements = 0;
    std::optional<std::vector<Vec>> first_ct, first_not_ct;
    std::optional<CtWitness> first_witness;
};

void classify_table(const LeibnizAlgebra &cand, CensusAccum &acc) {
    ++acc.valid;
    CtVerdict v = is_ct_exhaustive(cand);
    CtVerdict cross = is_ct_via_definition(cand);
    if (v.ok() != cross.ok()) ++acc.disagreements;
    if (v.ok()) {
        ++acc.ct;
        if (!acc.first_ct) {
            std::vector<Vec> tensor;
            for (std::size_t i = 0; i < cand.dim(); ++i)
                for (std::size_t j = 0; j < cand.dim(); ++j)
                    tensor.push_back(cand.product(i, j));
            acc.first_ct = std::move(tensor);
        }
    } else {
        ++acc.not_ct;
        if (!acc.first_not_ct) {
            std::vector<Vec> tensor;
            for (std::size_t i = 0; i < cand.dim(); ++i)
                for (std::size_t j = 0; j < cand.dim(); ++j)
                    tensor.push_back(cand.product(i, j));
            acc.first_not_ct = std::move(tensor);
            acc.first_witness = v.witness;
        }
    }
}

// Generic odometer over all p^(n^3) tensors on [lo, hi) indices; visit gets
// each Leibniz-valid table.
template <typename Visit>
void scan_tables_generic(std::int64_t p, std::size_t n, std::uint64_t lo, std::uint64_t hi,
                         Visit &&visit) {
    FieldSpec f = FieldSpec::gf(p);
    std::size_t slots = n * n * n;
    std::vector<std::int64_t> digits(slots, 0);
    std::uint64_t idx = lo;
    for (std::size_t s = slots, rest = 0; s-- > 0; ++rest) {
        std::uint64_t pw = 1;
        for (std::size_t r = 0; r < rest; ++r) pw *= static_cast<std::uint64_t>(p);
        digits[s] = static_cast<std::int64_t>((lo / pw) % static_cast<std::uint64_t>(p));
    }
    std::vector<Scalar> residues;
    for (std::int64_t r = 0; r < p; ++r) residues.push_back(Scalar::residue(f, r));
    for (; idx < hi; ++idx) {
        std::vector<Vec> tensor;
        tensor.reserve(n * n);
        for (std::size_t ij = 0; ij < n * n; ++ij) {
            Vec v;
            v.reserve(n);
            for (std::size_t k = 0; k < n; ++k)
                v.push_back(residues[digits[ij * n + k]]);
            tensor.push_back(std::move(v));
        }
        LeibnizAlgebra cand = LeibnizAlgebra::from_tensor(f, default_names(n), std::move(tensor));
        if (!cand.check_leibniz()) visit(cand);
        for (std::size_t s = slots; s-- > 0;) {
            if (++digits[s] < p) break;
            digits[s] = 0;
        }
    }
}

// Bit-packed GF(2) dim-3 scan: a table is three 3x3 matrices R_k (the right
// multiplications by e_k), entry (r,c) of R at bit r*3+c; the identity reads
// sum_m c[j][k]_m R_m = R_k R_j - R_j R_k with c[j][k]_m = bit (m*3+j) of
// R_k.
struct Gf2Dim3Tables {
    std::vector<std::uint16_t> mul;
    Gf2Dim3Tables() : mul(512 * 512) {
        for (int a = 0; a < 512; ++a)
            for (int b = 0; b < 512; ++b) {
                std::uint16_t out = 0;
                for (int r = 0; r < 3; ++r)
                    for (int c = 0; c < 3; ++c) {
                        int bit = 0;
                        for (int t = 0; t < 3; ++t)
                            bit ^= ((a >> (r * 3 + t)) & 1) & ((b >> (t * 3 + c)) & 1);
                        if (bit) out |= std::uint16_t(1) << (r * 3 + c);
                    }
                mul[static_cast<std::size_t>(a) * 512 + b] = out;
            }
    }
};

template <typename Visit>
void scan_tables_gf2_dim3(int r0_lo, int r0_hi, Visit &&visit) {
    static const Gf2Dim3Tables tables;
    const std::uint16_t *mul = tables.mul.data();
    FieldSpec f = FieldSpec::gf(2);
    std::uint16_t r[3];
    for (int r0 = r0_lo; r0 < r0_hi; ++r0) {
        r[0] = static_cast<std::uint16_t>(r0);
        for (int r1 = 0; r1 < 512; ++r1) {
            r[1] = static_cast<std::uint16_t>(r1);
            for (int r2 = 0; r2 < 512; ++r2) {
                r[2] = static_cast<std::uint16_t>(r2);
                bool ok = true;
                for (int k = 0; k < 3 && ok; ++k)
                    for (int j = 0; j < 3 && ok; ++j) {
                        std::uint16_t rhs =
                            mul[static_cast<std::size_t>(r[k]) * 512 + r[j]] ^
                            mul[static_cast<std::size_t>(r[j]) * 512 + r[k]];
                        std::uint16_t lhs = 0;
                        for (int m = 0; m < 3; ++m)
                            if ((r[k] >> (m * 3 + j)) & 1) lhs ^= r[m];
                        if (lhs != rhs) ok = false;
                    }
                if (!ok) continue;
                // materialize: c[i][j] = column i of R_j
                std::vector<Vec> tensor(9, zero_vec(f, 3));
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j)
                        for (int m = 0; m < 3; ++m)
                            if ((r[j] >> (m * 3 + i)) & 1)
                                tensor[static_cast<std::size_t>(i) * 3 + j][m] =
                                    Scalar::one(f);
                visit(LeibnizAlgebra::from_tensor(f, default_names(3), tensor));
            }
        }
    }
}

template <typename Visit>
void scan_valid_tables(std::int64_t p, std::size_t dim, std::uint64_t budget, unsigned jobs,
                       Visit &&visit) {
    std::uint64_t slots_count = 1;
    for (std::size_t i = 0; i < dim * dim * dim; ++i) {
        if (slots_count > budget / static_cast<std::uint64_t>(p))
            throw BudgetError("census table count exceeds budget");
        slots_count *= static_cast<std::uint64_t>(p);
    }
    if (jobs <= 1) {
        if (p == 2 && dim == 3) scan_tables_gf2_dim3(0, 512, visit);
        else scan_tables_generic(p, dim, 0, slots_count, visit);
        return;
    }
    // partition in enumeration order; collect per-block, merge in order
    std::vector<std::vector<LeibnizAlgebra>> found(jobs);
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < jobs; ++t) {
        workers.emplace_back([&, t]() {
            auto sink = [&found, t](const LeibnizAlgebra &a) { found[t].push_back(a); };
            if (p == 2 && dim == 3) {
                int lo = static_cast<int>(512 * t / jobs), hi = static_cast<int>(512 * (t + 1) / jobs);
                scan_tables_gf2_dim3(lo, hi, sink);
            } else {
                std::uint64_t lo = slots_count * t / jobs, hi = slots_count * (t + 1) / jobs;
                scan_tables_generic(p, dim, lo, hi, sink);
            }
        });
    }
    for (auto &w : workers) w.join();
    for (auto &block : found)
        for (const LeibnizAlgebra &a : block) visit(a);
}

} // namespace

CensusReport ct_census(std::int64_t p, std::size_t dim, std::uint64_t budget, unsigned jobs) {
    CensusReport rep;
    rep.p = p;
    rep.dim = dim;
    rep.tables = 1;
    for (std::size_t i = 0; i < dim * dim * dim; ++i)
        rep.tables *= static_cast<std::uint64_t>(p);
    CensusAccum acc;
    scan_valid_tables(p, dim, budget, jobs,
                      [&acc](const LeibnizAlgebra &cand) { classify_table(cand, acc); });
    rep.leibniz_valid = acc.valid;
    rep.ct = acc.ct;
    rep.not_ct = acc.not_ct;
    rep.cross_check_disagreements = acc.disagreements;
    rep.first_ct_tensor = std::move(acc.first_ct);
    rep.first_not_ct_tensor = std::move(acc.first_not_ct);
    rep.first_not_ct_witness = std::move(acc.first_witness);
    return rep;
}

std::vector<LeibnizAlgebra> leibniz_valid_tables(std::int64_t p, std::size_t dim,
                                                 std::uint64_t budget, unsigned jobs) {
    std::vector<LeibnizAlgebra> out;
    scan_valid_tables(p, dim, budget, jobs,
                      [&out](const LeibnizAlgebra &cand) { out.push_back(cand); });
    return out;
}

// ---- module action and lifting --------------------------------------------

ModuleEigenReport module_eigen_check(const LeibnizAlgebra &l, const Subspace &n,
                                     std::uint64_t seed, std::uint64_t samples) {
    if (!l.is_ideal(n) || !is_zero_subalgebra(l, n))
        throw PreconditionError("module_eigen_check needs a zero ideal");
    ModuleEigenReport rep{};
    rep.action_invertible_forall = true;
    rep.centralisers_inside_forall = true;
    const FieldSpec &f = l.field();

    auto check_action = [&](const Vec &x) {
        if (n.contains_vector(x)) return;
        Matrix act = induced_right_action(l, n, l.zero_space(), x);
        if (has_zero_eigenvalue(act) && rep.action_invertible_forall) {
            rep.action_invertible_forall = false;
            rep.action_witness = x;
        }
    };

    if (f.is_prime_field()) {
        // the action of x on the zero ideal N depends only on x mod N and
        // scales with x, so coset representatives against a complement cover
        // every case
        Subspace comp = n.complement_in(l.full_space());
        for (const Vec &coef : projective_vectors(f, comp.dim())) {
            Vec x = zero_vec(f, l.dim());
            for (std::size_t s = 0; s < comp.dim(); ++s)
                x = vec_add(x, vec_scale(coef[s], comp.basis()[s]));
            check_action(x);
        }
        for (const Vec &coef : projective_vectors(f, n.dim())) {
            Vec nv = zero_vec(f, l.dim());
            for (std::size_t s = 0; s < n.dim(); ++s)
                nv = vec_add(nv, vec_scale(coef[s], n.basis()[s]));
            if (!n.contains(centralizer(l, nv)) && rep.centralisers_inside_forall) {
                rep.centralisers_inside_forall = false;
                rep.centraliser_witness = nv;
            }
        }
    } else {
        rep.sampled = true;
        Rng rng(seed);
        std::vector<Vec> xs;
        for (std::size_t i = 0; i < l.dim(); ++i) xs.push_back(l.unit(i));
        while (xs.size() < samples) xs.push_back(rng.vec(f, l.dim()));
        for (const Vec &x : xs) check_action(x);
        std::vector<Vec> coefs;
        for (std::size_t s = 0; s < n.dim(); ++s) coefs.push_back(unit_vec(f, n.dim(), s));
        while (coefs.size() < samples / 2 + 1) coefs.push_back(rng.vec(f, n.dim()));
        for (const Vec &coef : coefs) {
            Vec nv = zero_vec(f, l.dim());
            for (std::size_t s = 0; s < n.dim(); ++s)
                nv = vec_add(nv, vec_scale(coef[s], n.basis()[s]));
            if (vec_is_zero(nv)) continue;
            if (!n.contains(centralizer(l, nv)) && rep.centralisers_inside_forall) {
                rep.centralisers_inside_forall = false;
                rep.centraliser_witness = nv;
            }
        }
    }
    rep.ok = (rep.action_invertible_forall == rep.centralisers_inside_forall);
    return rep;
}

namespace {

LiftCtReport lift_ctcheck_impl(const LeibnizAlgebra &l, const Subspace &n,
                               std::uint64_t budget) {
    LiftCtReport rep{};
    if (!l.is_ideal(n) || !is_zero_subalgebra(l, n)) {
        rep.outcome = LiftCtReport::Outcome::HypothesisFailed;
        rep.failed_hypothesis = "N is not a zero ideal";
        return rep;
    }
    QuotientResult q = l.quotient(n);
    CtVerdict quotient_ct = is_ct_exhaustive(q.algebra, budget);
    if (!quotient_ct.ok()) {
        rep.outcome = LiftCtReport::Outcome::HypothesisFailed;
        rep.failed_hypothesis = "L/N is not CT";
        if (quotient_ct.witness) rep.hypothesis_witness = quotient_ct.witness->y;
        return rep;
    }
    const FieldSpec &f = l.field();
    for (const Vec &coef : projective_vectors(f, n.dim())) {
        Vec nv = zero_vec(f, l.dim());
        for (std::size_t s = 0; s < n.dim(); ++s)
            nv = vec_add(nv, vec_scale(coef[s], n.basis()[s]));
        if (!n.contains(centralizer(l, nv))) {
            rep.outcome = LiftCtReport::Outcome::HypothesisFailed;
            rep.failed_hypothesis = "C_L(n) is not inside N";
            rep.hypothesis_witness = nv;
            return rep;
        }
    }
    CtVerdict conclusion = is_ct_exhaustive(l, budget);
    rep.conclusion = conclusion;
    rep.outcome = conclusion.ok() ? LiftCtReport::Outcome::Ok
                                  : LiftCtReport::Outcome::ConclusionFailed;
    return rep;
}

} // namespace

LiftCtReport lift_ct_check(const LeibnizAlgebra &l, const Subspace &n, std::uint64_t budget) {
    require_finite(l, "lift_ct_check");
    return lift_ctcheck_impl(l, n, budget);
}

FactorCtReport factor_ct_check(const LeibnizAlgebra &l, std::uint64_t budget) {
    require_finite(l, "factor_ct_check");
    if (subspace_count(l.field().prime(), l.dim()) > BigInt(budget))
        throw BudgetError("ideal enumeration exceeds budget");
    if (!is_solvable(l)) throw PreconditionError("factor_ct_check needs a solvable algebra");
    CtVerdict self = is_ct_exhaustive(l);
    if (!self.ok()) throw PreconditionError("factor_ct_check needs a CT algebra");
    FactorCtReport rep{true, 0, std::nullopt, std::nullopt};
    for (const Subspace &j : all_subspaces(l.field(), l.dim(), budget)) {
        if (!l.is_ideal(j)) continue;
        ++rep.ideals_checked;
        CtVerdict v = is_ct_exhaustive(l.quotient(j).algebra);
        if (!v.ok()) {
            rep.ok = false;
            rep.counterexample_ideal = j;
            rep.quotient_witness = v.witness;
            return rep;
        }
    }
    return rep;
}

} // namespace leib
