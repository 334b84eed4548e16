#include "leib/theorems.hpp"

#include "leib/invariants.hpp"

namespace leib {

namespace {

void require_ct(const LeibnizAlgebra &l, const char *what, std::uint64_t budget) {
    if (l.field().is_prime_field()) {
        CtVerdict v = is_ct_exhaustive(l, budget);
        if (!v.ok()) {
            std::string msg = std::string(what) + ": algebra is not CT";
            if (v.witness)
                msg += " (witness x = " + l.element_str(v.witness->y) +
                       ", offending pair " + l.element_str(v.witness->x) + ", " +
                       l.element_str(v.witness->z) + ")";
            throw PreconditionError(msg);
        }
    } else {
        CtVerdict v = is_ct_randomized(l);
        if (v.status == CtStatus::NotCt)
            throw PreconditionError(std::string(what) + ": algebra is not CT (randomized witness)");
    }
}

} // namespace

LemmaSReport lemma_s_check(const LeibnizAlgebra &l, const Subspace &a, const Vec &x,
                           std::uint64_t ct_budget) {
    if (a.ambient() != l.dim()) throw ShapeError("ambient dimension mismatch");
    if (!l.is_ideal(a)) throw PreconditionError("A is not an ideal");
    if (!is_zero_subalgebra(l, a)) throw PreconditionError("A is not a zero algebra");
    if (a.contains_vector(x) || a.dim() + 1 != l.dim())
        throw PreconditionError("L is not A + Fx");
    if (!a.contains_vector(l.mult(x, x))) throw PreconditionError("x^2 is not in A");
    require_ct(l, "lemma_s_check", ct_budget);

    LemmaSReport rep{};
    if (is_zero_algebra(l)) {
        rep.branch = LemmaSBranch::ZeroAlgebra;
        return rep;
    }
    Matrix act = induced_right_action(l, a, l.zero_space(), x);
    rep.action_invertible = !has_zero_eigenvalue(act);
    rep.image_full = l.product_space(a, Subspace::span(l.field(), l.dim(), {x})) == a;
    if (rep.action_invertible && rep.image_full) {
        rep.branch = LemmaSBranch::InvertibleAction;
    } else {
        rep.branch = LemmaSBranch::Violation;
        rep.detail = rep.action_invertible ? "Ax != A" : "R_x|_A has a zero eigenvalue";
    }
    return rep;
}

namespace {

// Zero-subalgebra complement of U in W: greedy echelon complement first,
// then exhaustive search over all complements (coset representatives
// parametrized by matrices over U's basis).
std::optional<Subspace> zero_complement(const LeibnizAlgebra &l, const Subspace &u,
                                        const Subspace &w, std::uint64_t budget) {
    Subspace greedy = u.complement_in(w);
    if (is_zero_subalgebra(l, greedy)) return greedy;
    const FieldSpec &f = l.field();
    if (!f.is_prime_field()) return std::nullopt;
    std::int64_t p = f.prime();
    std::size_t k = u.dim(), m = greedy.dim();
    std::uint64_t candidates = 1;
    for (std::size_t i = 0; i < k * m; ++i) {
        if (candidates > budget / static_cast<std::uint64_t>(p))
            throw BudgetError("complement search exceeds budget");
        candidates *= static_cast<std::uint64_t>(p);
    }
    std::vector<std::int64_t> digits(k * m, 0);
    for (std::uint64_t t = 0; t < candidates; ++t) {
        std::vector<Vec> rows;
        for (std::size_t s = 0; s < m; ++s) {
            Vec v = greedy.basis()[s];
            for (std::size_t q = 0; q < k; ++q)
                v = vec_add(v, vec_scale(Scalar::residue(f, digits[s * k + q]), u.basis()[q]));
            rows.push_back(std::move(v));
        }
        Subspace cand = Subspace::span(f, l.dim(), rows);
        if (cand.dim() == m && is_zero_subalgebra(l, cand)) return cand;
        for (std::size_t s = digits.size(); s-- > 0;) {
            if (++digits[s] < p) break;
            digits[s] = 0;
        }
    }
    return std::nullopt;
}

} // namespace

SolvCertificate solv_decomposition(const LeibnizAlgebra &l, std::uint64_t complement_budget) {
    if (!l.field().is_prime_field())
        throw PreconditionError("solv_decomposition needs a finite field");
    SeriesReport der = series(l, SeriesKind::Derived);
    if (!der.reaches_zero) throw PreconditionError("solv_decomposition needs a solvable algebra");
    require_ct(l, "solv_decomposition", 1u << 24);

    SolvCertificate cert{};
    cert.nilrad = nilradical(l);
    cert.derived_length = *der.class_or_length;
    if (cert.derived_length == 0) { // zero-dimensional algebra
        cert.ok = true;
        cert.chain_zero_subalgebras = cert.chain_sums_match = true;
        cert.n_equals_last_derived = cert.splits_over_n = cert.clause3 = true;
        return cert;
    }
    std::size_t n = cert.derived_length - 1;

    // A_n = L^(n); A_i is a zero-subalgebra complement of L^(i+1) in L^(i).
    cert.chain.push_back(der.terms[n]);
    for (std::size_t i = n; i-- > 0;) {
        auto comp = zero_complement(l, der.terms[i + 1], der.terms[i], complement_budget);
        if (!comp) {
            cert.failure = "no zero-subalgebra complement at level " + std::to_string(i);
            return cert;
        }
        cert.chain.push_back(*comp);
    }

    cert.chain_zero_subalgebras = true;
    for (const Subspace &a : cert.chain)
        if (!is_zero_subalgebra(l, a)) cert.chain_zero_subalgebras = false;

    cert.chain_sums_match = true;
    for (std::size_t i = 0; i <= n; ++i) {
        // chain[t] = A_{n-t}, so L^(i) = chain[0] + ... + chain[n-i]
        Subspace sum = Subspace::zero(l.field(), l.dim());
        std::size_t dims = 0;
        for (std::size_t t = 0; t + i <= n; ++t) {
            sum = sum.sum(cert.chain[t]);
            dims += cert.chain[t].dim();
        }
        if (!(sum == der.terms[i] && dims == der.terms[i].dim()))
            cert.chain_sums_match = false;
    }

    cert.n_equals_last_derived = (cert.nilrad == der.terms[n]);

    Subspace rest = Subspace::zero(l.field(), l.dim());
    std::size_t rest_dims = 0;
    for (std::size_t t = 1; t < cert.chain.size(); ++t) {
        rest = rest.sum(cert.chain[t]);
        rest_dims += cert.chain[t].dim();
    }
    cert.splits_over_n =
        (cert.nilrad.sum(rest) == l.full_space() && cert.nilrad.dim() + rest_dims == l.dim());

    cert.clause3 = true;
    for (const Vec &x : all_vectors(l.field(), l.dim())) {
        if (vec_is_zero(x) || cert.nilrad.contains_vector(x)) continue;
        ++cert.clause3_points;
        Matrix act = induced_right_action(l, cert.nilrad, l.zero_space(), x);
        bool inv = !has_zero_eigenvalue(act);
        bool img = l.product_space(cert.nilrad, Subspace::span(l.field(), l.dim(), {x})) ==
                   cert.nilrad;
        if (!(inv && img)) {
            cert.clause3 = false;
            if (!cert.clause3_witness) cert.clause3_witness = x;
        }
    }

    cert.ok = cert.chain_zero_subalgebras && cert.chain_sums_match &&
              cert.n_equals_last_derived && cert.splits_over_n && cert.clause3;
    if (!cert.ok && cert.failure.empty()) {
        if (!cert.chain_zero_subalgebras) cert.failure = "chain member is not a zero subalgebra";
        else if (!cert.chain_sums_match) cert.failure = "chain sums do not rebuild the derived series";
        else if (!cert.n_equals_last_derived) cert.failure = "nilradical differs from the last derived term";
        else if (!cert.splits_over_n) cert.failure = "L does not split over the nilradical";
        else cert.failure = "action clause failed at x = " +
                            (cert.clause3_witness ? l.element_str(*cert.clause3_witness)
                                                  : std::string("?"));
    }
    return cert;
}

CodimReport codim_report(const LeibnizAlgebra &l) {
    if (!is_solvable(l)) throw PreconditionError("codim_report needs a solvable algebra");
    Subspace n = nilradical(l);
    std::size_t codim = l.dim() - n.dim();
    return CodimReport{codim, codim <= 2};
}

TransporterReport complement_transporter(const LeibnizAlgebra &l, const Subspace &a0,
                                         const Subspace &a0p) {
    if (!is_completely_solvable(l))
        throw PreconditionError("complement_transporter needs a completely solvable algebra");
    require_ct(l, "complement_transporter", 1u << 24);
    Subspace nil = nilradical(l);
    for (const Subspace *s : {&a0, &a0p}) {
        if (!is_zero_subalgebra(l, *s))
            throw PreconditionError("complement is not a zero subalgebra");
        if (!(nil.sum(*s) == l.full_space() && nil.dim() + s->dim() == l.dim()))
            throw PreconditionError("subspace does not complement the nilradical");
    }

    const FieldSpec &f = l.field();
    std::size_t dim = l.dim(), k = nil.dim();
    if (a0.dim() == 0) { // both complements are zero; the identity transports
        TransporterReport rep{};
        rep.found = true;
        rep.n = zero_vec(f, dim);
        rep.verified = (a0 == a0p);
        return rep;
    }
    // For each basis vector a_j of A0 require a_j + n a_j in A0p; n a_j is
    // linear in n, so reduce everything mod A0p and solve for n's
    // coordinates in N.
    Matrix nbasis = Matrix::from_columns(f, nil.basis(), dim);
    std::vector<Matrix> rows;
    Vec rhs_all;
    for (const Vec &aj : a0.basis()) {
        Matrix s = l.right_op(aj) * nbasis; // n-coords -> n * a_j
        Matrix reduced(f, dim, k);
        for (std::size_t c = 0; c < k; ++c) {
            Vec col = a0p.reduce(s.column(c));
            for (std::size_t r = 0; r < dim; ++r) reduced.at(r, c) = col[r];
        }
        rows.push_back(reduced);
        Vec rr = a0p.reduce(aj);
        for (const Scalar &v : rr) rhs_all.push_back(-v);
    }
    auto t = solve(vstack(rows), rhs_all);
    TransporterReport rep{};
    if (!t) return rep;
    rep.found = true;
    rep.n = nbasis.apply(*t);
    // independent verification of the transported subspace
    std::vector<Vec> image;
    for (const Vec &aj : a0.basis()) image.push_back(vec_add(aj, l.mult(rep.n, aj)));
    rep.verified = (Subspace::span(f, dim, image) == a0p) && nil.contains_vector(rep.n);
    return rep;
}

ThetaReport theta_automorphism_test(const LeibnizAlgebra &l, const Vec &n) {
    Matrix theta = Matrix::identity(l.field(), l.dim()) + l.left_op(n);
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t j = 0; j < l.dim(); ++j) {
            Vec lhs = theta.apply(l.product(i, j));
            Vec rhs = l.mult(theta.apply(l.unit(i)), theta.apply(l.unit(j)));
            if (!vec_eq(lhs, rhs))
                return ThetaReport{false, std::make_pair(i, j), lhs, rhs};
        }
    return ThetaReport{true, std::nullopt, {}, {}};
}

MainTheoremReport main_theorem_check(const LeibnizAlgebra &l, std::uint64_t budget) {
    if (!l.field().is_prime_field())
        throw PreconditionError("main_theorem_check needs a finite field");
    std::int64_t p = l.field().prime();
    if (p == 2 || p == 3)
        throw PreconditionError("main_theorem_check needs characteristic other than 2 and 3");
    require_ct(l, "main_theorem_check", budget);

    MainTheoremReport rep{};
    rep.caveat = "observational: the ground field is finite, not algebraically closed";
    rep.is_lie = l.is_lie();
    rep.perfect = derived_subalgebra(l) == l.full_space();
    std::uint64_t ideals = 0;
    for (const Subspace &u : all_subspaces(l.field(), l.dim(), budget))
        if (l.is_ideal(u)) ++ideals;
    rep.simple = (ideals == 2) && l.dim() > 0;
    if (is_solvable(l)) {
        rep.cls = MainClass::Solvable;
    } else if (l.dim() == 3 && rep.is_lie && rep.perfect && rep.simple) {
        rep.cls = MainClass::Sl2Like;
    } else {
        rep.cls = MainClass::Other;
    }
    return rep;
}

} // namespace leib
