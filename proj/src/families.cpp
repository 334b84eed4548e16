#include "leib/families.hpp"

#include "leib/invariants.hpp"

namespace leib {

namespace {

std::uint64_t splitmix64(std::uint64_t &x) {
    x += 0x9E3779B97f4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

} // namespace

Rng::Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto &w : s) w = splitmix64(x);
}

std::uint64_t Rng::next() {
    std::uint64_t result = rotl(s[1] * 5, 7) * 9;
    std::uint64_t t = s[1] << 17;
    s[2] ^= s[0];
    s[3] ^= s[1];
    s[1] ^= s[2];
    s[0] ^= s[3];
    s[2] ^= t;
    s[3] = rotl(s[3], 45);
    return result;
}

std::uint64_t Rng::below(std::uint64_t bound) { return next() % bound; }

long long Rng::int_in(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Scalar Rng::scalar(const FieldSpec &f, long long lo, long long hi) {
    if (f.is_prime_field()) return Scalar::residue(f, static_cast<std::int64_t>(below(f.prime())));
    return Scalar::of_int(f, int_in(lo, hi));
}

Scalar Rng::nonzero_scalar(const FieldSpec &f, long long lo, long long hi) {
    for (;;) {
        Scalar s = scalar(f, lo, hi);
        if (!s.is_zero()) return s;
    }
}

Vec Rng::vec(const FieldSpec &f, std::size_t n, long long lo, long long hi) {
    Vec v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(scalar(f, lo, hi));
    return v;
}

LeibnizAlgebra cyclic_algebra(const CyclicSpec &spec) {
    if (spec.n < 2) throw PreconditionError("cyclic algebra needs dimension >= 2");
    if (spec.alphas.size() != spec.n - 1)
        throw PreconditionError("cyclic algebra needs alpha_2..alpha_n");
    const FieldSpec &f = spec.field;
    for (const Scalar &a : spec.alphas)
        if (a.field() != f) throw FieldError("alpha in wrong field");
    std::size_t n = spec.n;
    std::vector<std::string> names;
    names.push_back("a");
    for (std::size_t i = 2; i <= n; ++i) names.push_back("a" + std::to_string(i));
    std::vector<Vec> tensor(n * n, zero_vec(f, n));
    for (std::size_t i = 0; i + 1 < n; ++i) tensor[i * n + 0] = unit_vec(f, n, i + 1);
    Vec top = zero_vec(f, n);
    for (std::size_t t = 0; t < spec.alphas.size(); ++t) top[t + 1] = spec.alphas[t];
    tensor[(n - 1) * n + 0] = std::move(top);
    LeibnizAlgebra l = LeibnizAlgebra::from_tensor(f, std::move(names), std::move(tensor));
    if (auto v = l.check_leibniz())
        throw Error("internal error: cyclic table violates the Leibniz identity");
    return l;
}

Vec cyclic_b_element(const CyclicSpec &spec) {
    Vec b = zero_vec(spec.field, spec.n);
    b[spec.n - 1] = Scalar::one(spec.field);
    for (std::size_t t = 0; t < spec.alphas.size(); ++t) b[t] = b[t] - spec.alphas[t];
    return b;
}

namespace {

// C(m + t b) must be L^2, Fb or 0 by the (t, m) case.
bool table_point_ok(const LeibnizAlgebra &l, const Subspace &l2, const Subspace &fb,
                    const Vec &m, const Scalar &t, std::string *witness) {
    bool m_zero = vec_is_zero(m);
    bool t_zero = t.is_zero();
    if (m_zero && t_zero) return true;
    Vec x = vec_add(m, vec_scale(t, fb.basis()[0]));
    Subspace c = centralizer(l, x);
    bool ok;
    if (t_zero) ok = (c == l2);
    else if (m_zero) ok = (c == fb);
    else ok = c.is_zero();
    if (!ok && witness && witness->empty())
        *witness = "x = " + l.element_str(x) + ", C(x) dim " + std::to_string(c.dim());
    return ok;
}

} // namespace

CyclicCtReport cyclic_ct_criterion(const CyclicSpec &spec, std::uint64_t seed,
                                   std::uint64_t samples) {
    CyclicCtReport rep;
    rep.is_ct = !spec.alphas.empty() && !spec.alphas[0].is_zero();
    if (!rep.is_ct) return rep;

    LeibnizAlgebra l = cyclic_algebra(spec);
    const FieldSpec &f = spec.field;
    std::size_t n = spec.n;
    Vec b = cyclic_b_element(spec);
    rep.b = b;
    rep.b_squared_zero = vec_is_zero(l.mult(b, b));

    Subspace l2 = derived_subalgebra(l);
    Matrix rb = induced_right_action(l, l2, l.zero_space(), b);
    rep.rb_invertible_on_l2 = !has_zero_eigenvalue(rb);

    Subspace fb = Subspace::span(f, n, {b});
    rep.direct_sum = (l2.sum(fb) == l.full_space()) && l2.intersect(fb).is_zero();

    bool ok = true;
    if (f.is_prime_field()) {
        for (const Scalar &t : field_elements(f)) {
            for (const Vec &mc : all_vectors(f, l2.dim())) {
                Vec m = zero_vec(f, n);
                for (std::size_t s = 0; s < l2.dim(); ++s)
                    m = vec_add(m, vec_scale(mc[s], l2.basis()[s]));
                ++rep.table_points;
                ok = table_point_ok(l, l2, fb, m, t, &rep.table_witness) && ok;
            }
        }
    } else {
        Rng rng(seed);
        // deterministic prefix: basis vectors of L^2 and small multiples of b
        std::vector<std::pair<Vec, Scalar>> points;
        for (const Vec &u : l2.basis()) {
            points.push_back({u, Scalar::zero(f)});
            points.push_back({u, Scalar::one(f)});
            points.push_back({u, -Scalar::one(f)});
        }
        points.push_back({zero_vec(f, n), Scalar::one(f)});
        points.push_back({zero_vec(f, n), Scalar::of_int(f, 2)});
        while (points.size() < samples) {
            Vec mc = rng.vec(f, l2.dim());
            Vec m = zero_vec(f, n);
            for (std::size_t s = 0; s < l2.dim(); ++s)
                m = vec_add(m, vec_scale(mc[s], l2.basis()[s]));
            points.push_back({m, rng.scalar(f)});
        }
        for (const auto &[m, t] : points) {
            ++rep.table_points;
            ok = table_point_ok(l, l2, fb, m, t, &rep.table_witness) && ok;
        }
    }
    rep.centraliser_table_ok = ok;
    return rep;
}

LeibnizAlgebra jac_example(std::int64_t p) {
    FieldSpec f = FieldSpec::gf(p);
    if (p > 13) throw PreconditionError("jac example limited to p <= 13");
    std::size_t n = static_cast<std::size_t>(p) + 2;
    std::vector<std::string> names{"e", "f"};
    for (std::int64_t i = 1; i <= p; ++i) names.push_back("x" + std::to_string(i));
    std::vector<Vec> tensor(n * n, zero_vec(f, n));
    Scalar one = Scalar::one(f);
    tensor[0 * n + 1] = unit_vec(f, n, 0);               // [e,f] = e
    tensor[1 * n + 0] = vec_scale(-one, unit_vec(f, n, 0)); // [f,e] = -e
    for (std::size_t i = 0; i < static_cast<std::size_t>(p); ++i) {
        std::size_t vi = 2 + i;
        std::size_t shifted = 2 + ((i + 1) % static_cast<std::size_t>(p));
        tensor[vi * n + 0] = unit_vec(f, n, shifted);                     // [x_i, e]
        tensor[0 * n + vi] = vec_scale(-one, unit_vec(f, n, shifted));    // [e, x_i]
        Scalar iv = Scalar::of_int(f, static_cast<long long>(i));
        tensor[vi * n + 1] = vec_scale(iv, unit_vec(f, n, vi));           // [x_i, f]
        tensor[1 * n + vi] = vec_scale(-iv, unit_vec(f, n, vi));          // [f, x_i]
    }
    LeibnizAlgebra l = LeibnizAlgebra::from_tensor(f, std::move(names), std::move(tensor));
    if (l.check_leibniz() || !l.is_lie())
        throw Error("internal error: jac table is not a Lie algebra");
    return l;
}

Subspace jac_table_centralizer(const LeibnizAlgebra &jac, const Vec &elem) {
    std::size_t n = jac.dim();
    if (elem.size() != n) throw ShapeError("element dimension mismatch");
    if (vec_is_zero(elem)) throw PreconditionError("centraliser table needs a nonzero element");
    const FieldSpec &f = jac.field();
    const Scalar &alpha = elem[0], &beta = elem[1];
    Vec x1 = unit_vec(f, n, 2);
    if (alpha.is_zero() && beta.is_zero()) {
        bool on_x1_line = true;
        for (std::size_t i = 3; i < n; ++i)
            if (!elem[i].is_zero()) on_x1_line = false;
        if (on_x1_line) return Subspace::span(f, n, {unit_vec(f, n, 1), x1});
        std::vector<Vec> module;
        for (std::size_t i = 2; i < n; ++i) module.push_back(unit_vec(f, n, i));
        return Subspace::span(f, n, module);
    }
    if (!alpha.is_zero()) return Subspace::span(f, n, {elem});
    return Subspace::span(f, n, {elem, x1});
}

LeibnizAlgebra sl2(const FieldSpec &f) {
    Scalar one = Scalar::one(f), two = Scalar::of_int(f, 2);
    LeibnizAlgebra l = LeibnizAlgebra::make(
        f, {"e", "h", "f"},
        {{0, 2, {{1, one}}},
         {2, 0, {{1, -one}}},
         {1, 0, {{0, two}}},
         {0, 1, {{0, -two}}},
         {1, 2, {{2, -two}}},
         {2, 1, {{2, two}}}});
    if (l.check_leibniz() || !l.is_lie())
        throw Error("internal error: sl2 table is not a Lie algebra");
    return l;
}

SemidirectResult semidirect_zero_module(const FieldSpec &f, std::size_t m,
                                        const std::vector<Matrix> &actions,
                                        SemidirectSign sign) {
    std::size_t k = actions.size();
    for (const Matrix &a : actions) {
        if (a.rows() != m || a.cols() != m) throw ShapeError("action matrix must be m x m");
        if (a.field() != f) throw FieldError("action matrix in wrong field");
    }
    std::size_t n = m + k;
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= m; ++i) names.push_back("n" + std::to_string(i));
    for (std::size_t j = 1; j <= k; ++j) names.push_back("b" + std::to_string(j));
    std::vector<Vec> tensor(n * n, zero_vec(f, n));
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < m; ++i) {
            Vec img = zero_vec(f, n); // [n_i, b_j] = row i of the action
            for (std::size_t t = 0; t < m; ++t) img[t] = actions[j].at(i, t);
            tensor[i * n + (m + j)] = img;
            if (sign == SemidirectSign::LieType)
                tensor[(m + j) * n + i] = vec_scale(-Scalar::one(f), img);
        }
    }
    LeibnizAlgebra l = LeibnizAlgebra::from_tensor(f, std::move(names), std::move(tensor));
    if (auto v = l.check_leibniz()) return SemidirectResult{std::nullopt, v};
    return SemidirectResult{std::move(l), std::nullopt};
}

LeibnizAlgebra change_basis(const LeibnizAlgebra &l, const Matrix &p) {
    std::size_t n = l.dim();
    if (p.rows() != n || p.cols() != n) throw ShapeError("basis matrix must be n x n");
    if (kernel(p).dim() > 0) throw PreconditionError("basis change matrix is singular");
    std::vector<Vec> tensor;
    tensor.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec w = l.mult(p.column(i), p.column(j));
            auto coords = solve(p, w);
            tensor.push_back(*coords);
        }
    return LeibnizAlgebra::from_tensor(l.field(), default_names(n), std::move(tensor));
}

LeibnizAlgebra random_algebra(std::uint64_t seed, std::size_t dim, const FieldSpec &f,
                              RandomKind kind, std::uint64_t budget) {
    if (dim > 6) throw PreconditionError("random algebras limited to dimension <= 6");
    Rng rng(seed);
    switch (kind) {
    case RandomKind::Raw: {
        std::vector<Vec> tensor;
        for (std::size_t i = 0; i < dim * dim; ++i) tensor.push_back(rng.vec(f, dim));
        return LeibnizAlgebra::from_tensor(f, default_names(dim), std::move(tensor));
    }
    case RandomKind::LeibnizValid: {
        // density schedule: start dense, go sparse as attempts accumulate
        for (std::uint64_t attempt = 0; attempt < budget; ++attempt) {
            std::size_t pairs = dim * dim;
            std::size_t phase = budget < 8 ? 4 : static_cast<std::size_t>(attempt / (budget / 8));
            std::size_t populated = pairs >> std::min<std::size_t>(phase, 6);
            if (populated == 0) populated = 1;
            std::vector<Vec> tensor(dim * dim, zero_vec(f, dim));
            for (std::size_t t = 0; t < populated; ++t) {
                std::size_t slot = static_cast<std::size_t>(rng.below(pairs));
                tensor[slot] = rng.vec(f, dim);
            }
            LeibnizAlgebra cand =
                LeibnizAlgebra::from_tensor(f, default_names(dim), std::move(tensor));
            if (!cand.check_leibniz()) return cand;
        }
        throw BudgetError("rejection sampling budget exceeded");
    }
    case RandomKind::SolvableCtCandidate: {
        if (dim < 2) return LeibnizAlgebra::zero(f, dim);
        std::size_t m = dim - 1;
        Matrix action(f, m, m);
        for (std::size_t i = 0; i < m; ++i) action.at(i, i) = rng.nonzero_scalar(f);
        SemidirectSign sign = (rng.next() & 1) ? SemidirectSign::LieType
                                               : SemidirectSign::NullLeft;
        SemidirectResult r = semidirect_zero_module(f, m, {action}, sign);
        if (!r.algebra) throw Error("internal error: diagonal semidirect table rejected");
        return *r.algebra;
    }
    }
    throw Error("unreachable");
}

} // namespace leib
