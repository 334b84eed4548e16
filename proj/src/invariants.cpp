#include "leib/invariants.hpp"

namespace leib {

SeriesReport series(const LeibnizAlgebra &l, SeriesKind kind) {
    SeriesReport rep;
    rep.kind = kind;
    Subspace full = l.full_space();
    rep.terms.push_back(full);
    for (;;) {
        const Subspace &cur = rep.terms.back();
        if (cur.is_zero()) break;
        Subspace next = (kind == SeriesKind::LowerCentral) ? l.product_space(cur, full)
                                                           : l.product_space(cur, cur);
        if (next == cur) {
            rep.reaches_zero = false;
            rep.class_or_length = std::nullopt;
            return rep;
        }
        rep.terms.push_back(std::move(next));
    }
    rep.reaches_zero = true;
    rep.class_or_length = rep.terms.size() - 1;
    return rep;
}

bool is_nilpotent(const LeibnizAlgebra &l) {
    return series(l, SeriesKind::LowerCentral).reaches_zero;
}

bool is_solvable(const LeibnizAlgebra &l) { return series(l, SeriesKind::Derived).reaches_zero; }

bool subspace_is_nilpotent(const LeibnizAlgebra &l, const Subspace &u) {
    Subspace cur = u;
    for (;;) {
        if (cur.is_zero()) return true;
        Subspace next = l.product_space(cur, u);
        if (next == cur) return false;
        cur = std::move(next);
    }
}

bool subspace_is_solvable(const LeibnizAlgebra &l, const Subspace &u) {
    Subspace cur = u;
    for (;;) {
        if (cur.is_zero()) return true;
        Subspace next = l.product_space(cur, cur);
        if (next == cur) return false;
        cur = std::move(next);
    }
}

Subspace leibniz_kernel(const LeibnizAlgebra &l) {
    std::vector<Vec> gens;
    std::size_t n = l.dim();
    for (std::size_t i = 0; i < n; ++i) gens.push_back(l.product(i, i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec sq = vec_add(vec_add(l.product(i, i), l.product(i, j)),
                             vec_add(l.product(j, i), l.product(j, j)));
            gens.push_back(std::move(sq));
        }
    return Subspace::span(l.field(), n, gens);
}

Subspace center(const LeibnizAlgebra &l) {
    std::size_t n = l.dim();
    if (n == 0) return l.zero_space();
    std::vector<Matrix> stack;
    for (std::size_t i = 0; i < n; ++i) {
        stack.push_back(l.right_op(l.unit(i))); // z*e_i = 0
        stack.push_back(l.left_op(l.unit(i)));  // e_i*z = 0
    }
    return kernel(vstack(stack));
}

Subspace centralizer(const LeibnizAlgebra &l, const Vec &x) {
    return kernel(vstack({l.right_op(x), l.left_op(x)}));
}

Subspace left_centralizer(const LeibnizAlgebra &l, const Vec &x) { return kernel(l.right_op(x)); }

bool is_zero_algebra(const LeibnizAlgebra &l) {
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t j = 0; j < l.dim(); ++j)
            if (!vec_is_zero(l.product(i, j))) return false;
    return true;
}

bool is_zero_subalgebra(const LeibnizAlgebra &l, const Subspace &u) {
    for (const Vec &a : u.basis())
        for (const Vec &b : u.basis())
            if (!vec_is_zero(l.mult(a, b))) return false;
    return true;
}

Subspace derived_subalgebra(const LeibnizAlgebra &l) {
    return l.product_space(l.full_space(), l.full_space());
}

bool is_completely_solvable(const LeibnizAlgebra &l) {
    return subspace_is_nilpotent(l, derived_subalgebra(l));
}

Matrix induced_right_action(const LeibnizAlgebra &l, const Subspace &big, const Subspace &small,
                            const Vec &x) {
    Subspace sec = small.complement_in(big);
    std::size_t k = sec.dim();
    Matrix m(l.field(), k, k);
    for (std::size_t s = 0; s < k; ++s) {
        Vec w = small.reduce(l.mult(sec.basis()[s], x));
        Vec coords = sec.coords_of(w);
        for (std::size_t r = 0; r < k; ++r) m.at(r, s) = coords[r];
    }
    return m;
}

namespace {

Scalar trace(const Matrix &m) {
    Scalar t = Scalar::zero(m.field());
    for (std::size_t i = 0; i < m.rows(); ++i) t = t + m.at(i, i);
    return t;
}

// Linear candidate containing the nilradical: on each graded piece W of the
// derived series, x in N forces R_x|_W nilpotent and R_x R_y|_W nilpotent for
// every y, hence zero traces. Both trace conditions are linear in x.
Subspace trace_candidate(const LeibnizAlgebra &l) {
    std::size_t n = l.dim();
    const FieldSpec &f = l.field();
    SeriesReport der = series(l, SeriesKind::Derived);
    std::vector<std::pair<Subspace, Subspace>> sections; // (big, small)
    for (std::size_t i = 0; i + 1 < der.terms.size(); ++i)
        sections.emplace_back(der.terms[i], der.terms[i + 1]);
    if (!der.reaches_zero && !der.terms.back().is_zero())
        sections.emplace_back(der.terms.back(), Subspace::zero(f, n));

    std::vector<Vec> rows;
    for (const auto &[big, small] : sections) {
        if (big.dim() == small.dim()) continue;
        std::vector<Matrix> acts;
        for (std::size_t t = 0; t < n; ++t)
            acts.push_back(induced_right_action(l, big, small, l.unit(t)));
        // tr(R_x|_W) = 0
        Vec row = zero_vec(f, n);
        for (std::size_t t = 0; t < n; ++t) row[t] = trace(acts[t]);
        rows.push_back(std::move(row));
        // tr(R_x R_{e_j}|_W) = 0 for each j
        for (std::size_t j = 0; j < n; ++j) {
            Vec r2 = zero_vec(f, n);
            for (std::size_t t = 0; t < n; ++t) r2[t] = trace(acts[t] * acts[j]);
            rows.push_back(std::move(r2));
        }
    }
    if (rows.empty()) return l.full_space();
    return kernel(Matrix::from_rows(f, rows, n));
}

bool is_nilpotent_ideal(const LeibnizAlgebra &l, const Subspace &u) {
    return l.is_ideal(u) && l.is_subalgebra(u) && subspace_is_nilpotent(l, u);
}

std::uint64_t pow_u64_capped(std::int64_t p, std::size_t n, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (v > cap / static_cast<std::uint64_t>(p)) return cap + 1;
        v *= static_cast<std::uint64_t>(p);
    }
    return v;
}

} // namespace

NilradicalReport nilradical_report(const LeibnizAlgebra &l, std::uint64_t element_budget,
                                   std::uint64_t subspace_budget) {
    const FieldSpec &f = l.field();
    std::size_t n = l.dim();
    if (n == 0) return {l.full_space(), true, "trivial"};
    if (is_nilpotent(l)) return {l.full_space(), true, "nilpotent"};

    Subspace cand = trace_candidate(l);
    bool cand_ok = is_nilpotent_ideal(l, cand);
    if (cand_ok) {
        // contains N by the trace argument and is a nilpotent ideal, so it
        // is N, over any field.
        return {cand, true, "trace candidate"};
    }

    if (f.is_prime_field() &&
        pow_u64_capped(f.prime(), n, element_budget) <= element_budget) {
        // N is the sum of all nilpotent single-generator ideal closures.
        Subspace acc = l.zero_space();
        for (const Vec &x : projective_vectors(f, n)) {
            if (acc.contains_vector(x)) continue;
            Subspace clo = l.ideal_closure({x});
            if (acc.contains(clo)) continue;
            if (subspace_is_nilpotent(l, clo)) acc = acc.sum(clo);
        }
        if (!is_nilpotent_ideal(l, acc))
            throw Error("internal error: closure scan produced a non-nilpotent ideal");
        return {acc, true, "element-closure scan"};
    }

    if (f.is_prime_field() && subspace_count(f.prime(), n) <= BigInt(subspace_budget)) {
        Subspace acc = l.zero_space();
        for (const Subspace &u : all_subspaces(f, n, subspace_budget))
            if (is_nilpotent_ideal(l, u)) acc = acc.sum(u);
        if (!is_nilpotent_ideal(l, acc))
            throw Error("internal error: subspace scan produced a non-nilpotent ideal");
        return {acc, true, "subspace enumeration"};
    }

    // Verified lower bound only (Q or out of budget): sum the nilpotent
    // ideals we can name.
    std::vector<Subspace> pool;
    pool.push_back(leibniz_kernel(l)); // always an abelian ideal
    pool.push_back(center(l));
    if (l.is_ideal(cand) && l.is_subalgebra(cand)) pool.push_back(cand);
    Subspace acc = l.zero_space();
    for (const Subspace &u : pool)
        if (is_nilpotent_ideal(l, u)) acc = acc.sum(u);
    if (!is_nilpotent_ideal(l, acc)) acc = l.zero_space();
    return {acc, false, "lower bound (uncertified)"};
}

Subspace nilradical(const LeibnizAlgebra &l) { return nilradical_report(l).space; }

RadicalReport solvable_radical_report(const LeibnizAlgebra &l, std::uint64_t subspace_budget) {
    const FieldSpec &f = l.field();
    std::size_t n = l.dim();
    if (is_solvable(l)) return {l.full_space(), true, "solvable"};
    if (f.is_prime_field() && subspace_count(f.prime(), n) <= BigInt(subspace_budget)) {
        Subspace acc = l.zero_space();
        for (const Subspace &u : all_subspaces(f, n, subspace_budget))
            if (l.is_ideal(u) && subspace_is_solvable(l, u)) acc = acc.sum(u);
        if (!(l.is_ideal(acc) && subspace_is_solvable(l, acc)))
            throw Error("internal error: sum of solvable ideals not solvable");
        return {acc, true, "ideal enumeration"};
    }
    // Lower bound from known solvable ideals.
    std::vector<Subspace> pool{leibniz_kernel(l), center(l), nilradical_report(l).space};
    Subspace acc = l.zero_space();
    for (const Subspace &u : pool)
        if (l.is_ideal(u) && l.is_subalgebra(u) && subspace_is_solvable(l, u)) acc = acc.sum(u);
    if (!(l.is_ideal(acc) && subspace_is_solvable(l, acc))) acc = l.zero_space();
    return {acc, false, "lower bound (uncertified)"};
}

Subspace solvable_radical(const LeibnizAlgebra &l) { return solvable_radical_report(l).space; }

} // namespace leib
