#include <doctest.h>

#include "helpers.hpp"
#include "leib/ct.hpp"
#include "leib/families.hpp"
#include "leib/invariants.hpp"
#include "oracles.hpp"

using namespace leib;
using leibtest::example2;

namespace {

Vec vec(const FieldSpec &f, std::vector<long long> entries) {
    Vec v;
    for (long long e : entries) v.push_back(Scalar::of_int(f, e));
    return v;
}

CyclicSpec spec_of(const FieldSpec &f, std::vector<long long> alphas) {
    CyclicSpec s{f, alphas.size() + 1, {}};
    for (long long a : alphas) s.alphas.push_back(Scalar::of_int(f, a));
    return s;
}

} // namespace

TEST_CASE("cyclic algebra tables") {
    FieldSpec q = FieldSpec::rationals();
    // (Q, 2, alpha2 = 1) is the two-dimensional solvable cyclic algebra
    CHECK(cyclic_algebra(spec_of(q, {1})) == example2(q));
    // nilpotent cyclic over GF(3)
    FieldSpec g3 = FieldSpec::gf(3);
    LeibnizAlgebra nil = cyclic_algebra(spec_of(g3, {0}));
    CHECK(is_nilpotent(nil));
    CHECK_FALSE(is_ct_exhaustive(nil).ok());
    // a 4-dimensional instance passes the constructor's identity assertion
    FieldSpec g5 = FieldSpec::gf(5);
    LeibnizAlgebra big = cyclic_algebra(spec_of(g5, {1, 0, 2}));
    CHECK(big.dim() == 4);
    CHECK_FALSE(big.check_leibniz().has_value());
    // kernel of a cyclic algebra is span{a^2..a^n} = L^2
    CHECK(leibniz_kernel(big) == derived_subalgebra(big));
    CHECK(leibniz_kernel(big).dim() == 3);
    CHECK_THROWS_AS(cyclic_algebra(CyclicSpec{q, 1, {}}), PreconditionError);
}

TEST_CASE("cyclic CT criterion") {
    FieldSpec g3 = FieldSpec::gf(3);
    CyclicCtReport r = cyclic_ct_criterion(spec_of(g3, {1}));
    CHECK(r.is_ct);
    REQUIRE(r.b.has_value());
    CHECK(vec_eq(*r.b, vec(g3, {-1, 1}))); // b = a2 - a
    CHECK(r.b_squared_zero);
    CHECK(r.rb_invertible_on_l2);
    CHECK(r.direct_sum);
    CHECK(r.centraliser_table_ok);

    CHECK_FALSE(cyclic_ct_criterion(spec_of(g3, {0})).is_ct);
    CHECK_FALSE(cyclic_ct_criterion(spec_of(FieldSpec::gf(5), {0, 1, 1})).is_ct);

    // (Q, 3, (2, 0)): b = a3 - 2a
    FieldSpec q = FieldSpec::rationals();
    CyclicCtReport rq = cyclic_ct_criterion(spec_of(q, {2, 0}));
    CHECK(rq.is_ct);
    REQUIRE(rq.b.has_value());
    CHECK(vec_eq(*rq.b, vec(q, {-2, 0, 1})));
    CHECK(rq.b_squared_zero);
    CHECK(rq.rb_invertible_on_l2);
    CHECK(rq.centraliser_table_ok);
}

TEST_CASE("cyclic CT algebras: Ix = I but xI = 0") {
    for (auto [p, alphas] : std::vector<std::pair<std::int64_t, std::vector<long long>>>{
             {3, {1}}, {5, {1, 2}}, {5, {3, 0, 1}}}) {
        FieldSpec f = FieldSpec::gf(p);
        CyclicSpec s = spec_of(f, alphas);
        LeibnizAlgebra l = cyclic_algebra(s);
        Subspace i = leibniz_kernel(l);
        Subspace fa = Subspace::span(f, l.dim(), {l.unit(0)});
        Subspace fb = Subspace::span(f, l.dim(), {cyclic_b_element(s)});
        CHECK(l.product_space(i, fa) == i);
        CHECK(l.product_space(fa, i).is_zero());
        CHECK(l.product_space(i, fb) == i);
        CHECK(l.product_space(fb, i).is_zero());
    }
}

TEST_CASE("cyclic criterion agrees with both exhaustive checks on GF(3), n in {2,3}") {
    FieldSpec g3 = FieldSpec::gf(3);
    for (long long a2 = 0; a2 < 3; ++a2) {
        CyclicSpec s = spec_of(g3, {a2});
        bool crit = cyclic_ct_criterion(s).is_ct;
        LeibnizAlgebra l = cyclic_algebra(s);
        CHECK(crit == is_ct_exhaustive(l).ok());
        CHECK(crit == is_ct_via_definition(l).ok());
        CHECK(crit == is_a_algebra_exhaustive(l).ok);
    }
    for (long long a2 = 0; a2 < 3; ++a2)
        for (long long a3 = 0; a3 < 3; ++a3) {
            CyclicSpec s = spec_of(g3, {a2, a3});
            bool crit = cyclic_ct_criterion(s).is_ct;
            LeibnizAlgebra l = cyclic_algebra(s);
            CHECK(crit == is_ct_exhaustive(l).ok());
            CHECK(crit == is_ct_via_definition(l).ok());
            CHECK(crit == is_a_algebra_exhaustive(l).ok);
        }
}

TEST_CASE("both CT routes agree on semidirect instances over GF(2) and GF(3)") {
    leib::Rng rng(29);
    for (int t = 0; t < 30; ++t) {
        FieldSpec f = (t % 2) ? FieldSpec::gf(2) : FieldSpec::gf(3);
        std::size_t m = 1 + rng.below(2);
        Matrix action(f, m, m);
        for (std::size_t i = 0; i < m; ++i) action.at(i, i) = rng.scalar(f);
        auto sr = semidirect_zero_module(f, m, {action},
                                         rng.next() & 1 ? SemidirectSign::LieType
                                                        : SemidirectSign::NullLeft);
        REQUIRE(sr.algebra.has_value());
        CHECK(is_ct_exhaustive(*sr.algebra).ok() == is_ct_via_definition(*sr.algebra).ok());
    }
}

TEST_CASE("jac example structure") {
    LeibnizAlgebra j3 = jac_example(3);
    CHECK(j3.dim() == 5);
    CHECK(j3.is_lie());
    CHECK_FALSE(j3.check_leibniz().has_value());
    FieldSpec g3 = j3.field();
    // transcription: [e, f] = e
    CHECK(vec_eq(j3.mult(j3.unit(0), j3.unit(1)), j3.unit(0)));
    // [x1, e] = x2, [x1, f] = 0, [x2, f] = x2
    CHECK(vec_eq(j3.mult(j3.unit(2), j3.unit(0)), j3.unit(3)));
    CHECK(vec_is_zero(j3.mult(j3.unit(2), j3.unit(1))));
    CHECK(vec_eq(j3.mult(j3.unit(3), j3.unit(1)), j3.unit(3)));
    // derived series L > Fe + F^3 > F^3 > 0
    SeriesReport der = series(j3, SeriesKind::Derived);
    REQUIRE(der.terms.size() == 4);
    CHECK(der.terms[1].dim() == 4);
    CHECK(der.terms[2].dim() == 3);
    CHECK(der.class_or_length == 3);
    // nilradical is the module
    std::vector<Vec> module{j3.unit(2), j3.unit(3), j3.unit(4)};
    Subspace f3 = Subspace::span(g3, 5, module);
    CHECK(nilradical(j3) == f3);
    CHECK(nilradical_report(j3).certified);
    // restricting to the module gives a zero algebra
    CHECK(is_zero_algebra(j3.restrict_to(f3)));
    CHECK_FALSE(is_completely_solvable(j3));

    CHECK(jac_example(2).dim() == 4);
    CHECK_THROWS_AS(jac_example(17), PreconditionError);
    CHECK_THROWS_AS(jac_example(4), FieldError);

    // jac(5): dim 7, C(f) = Ff + Fx1
    LeibnizAlgebra j5 = jac_example(5);
    CHECK(j5.dim() == 7);
    CHECK(centralizer(j5, j5.unit(1)) ==
          Subspace::span(j5.field(), 7, {j5.unit(1), j5.unit(2)}));
}

TEST_CASE("jac centraliser: the four-case table and the computed correction") {
    // The classical four-case table holds everywhere except on the x1 line,
    // where the computed centraliser is Ff + F^p (module vectors centralize
    // each other, so C(x1) contains the whole module). That centraliser is
    // not a zero algebra, so the algebra is not CT.
    for (std::int64_t p : {2, 3}) {
        LeibnizAlgebra j = jac_example(p);
        const FieldSpec f = j.field();
        std::size_t n = j.dim();
        std::size_t mismatches = 0, points = 0;
        for (const Vec &x : projective_vectors(f, n)) {
            ++points;
            Subspace computed = centralizer(j, x);
            Subspace predicted = jac_table_centralizer(j, x);
            if (computed != predicted) {
                ++mismatches;
                // every mismatch is an x1-line case
                CHECK(x[0].is_zero());
                CHECK(x[1].is_zero());
                bool x1_line = true;
                for (std::size_t i = 3; i < n; ++i)
                    if (!x[i].is_zero()) x1_line = false;
                CHECK(x1_line);
                // computed = Ff + module
                std::vector<Vec> gens{j.unit(1)};
                for (std::size_t i = 2; i < n; ++i) gens.push_back(j.unit(i));
                CHECK(computed == Subspace::span(f, n, gens));
            }
        }
        CHECK(mismatches == 1); // exactly the projective x1 point
        CHECK_FALSE(is_ct_exhaustive(j).ok());
        CHECK_FALSE(is_ct_via_definition(j).ok());
    }
}

TEST_CASE("sl2") {
    FieldSpec g5 = FieldSpec::gf(5);
    LeibnizAlgebra l = sl2(g5);
    CHECK(l.is_lie());
    CHECK_FALSE(l.check_leibniz().has_value());
    CHECK(is_ct_exhaustive(l).ok());
    // C(e) = Fe
    CHECK(centralizer(l, l.unit(0)) == Subspace::span(g5, 3, {l.unit(0)}));
    // C(h) = Fh over GF(7)
    LeibnizAlgebra l7 = sl2(FieldSpec::gf(7));
    CHECK(centralizer(l7, l7.unit(1)) == Subspace::span(l7.field(), 3, {l7.unit(1)}));
    // unfalsified over Q
    CHECK(is_ct_randomized(sl2(FieldSpec::rationals())).status == CtStatus::Unfalsified);
    // simple over GF(5): radical is zero
    RadicalReport rad = solvable_radical_report(l);
    CHECK(rad.space.is_zero());
    CHECK(rad.certified);
    // over Q the radical of a non-solvable algebra is an uncertified bound
    RadicalReport radq = solvable_radical_report(sl2(FieldSpec::rationals()));
    CHECK(radq.space.is_zero());
    CHECK_FALSE(radq.certified);
    // characteristic 2 degenerates but still builds as a Lie table
    LeibnizAlgebra l2 = sl2(FieldSpec::gf(2));
    CHECK(l2.dim() == 3);
    CHECK(l2.is_lie());
    CHECK_FALSE(l2.check_leibniz().has_value());
}

TEST_CASE("semidirect zero-module products") {
    FieldSpec g5 = FieldSpec::gf(5);
    SemidirectResult r = semidirect_zero_module(g5, 2, {Matrix::identity(g5, 2)},
                                                SemidirectSign::LieType);
    REQUIRE(r.algebra.has_value());
    const LeibnizAlgebra &l = *r.algebra;
    CHECK(l.dim() == 3);
    CHECK(l.is_lie());
    // [n_i, c] = n_i, [c, n_i] = -n_i with c the complement generator
    CHECK(vec_eq(l.mult(l.unit(0), l.unit(2)), l.unit(0)));
    CHECK(vec_eq(l.mult(l.unit(2), l.unit(0)), vec_scale(-Scalar::one(g5), l.unit(0))));
    CHECK(is_ct_exhaustive(l).ok());

    // non-commuting actions are rejected with a violating triple
    Matrix a(g5, 2, 2), b(g5, 2, 2);
    a.at(0, 1) = Scalar::one(g5);
    b.at(0, 0) = Scalar::one(g5);
    b.at(1, 1) = Scalar::of_int(g5, 2);
    SemidirectResult bad = semidirect_zero_module(g5, 2, {a, b}, SemidirectSign::LieType);
    CHECK_FALSE(bad.algebra.has_value());
    REQUIRE(bad.rejection.has_value());

    // m=1, action (1), null_left is Example 2 after a change of basis
    SemidirectResult one = semidirect_zero_module(g5, 1, {Matrix::identity(g5, 1)},
                                                  SemidirectSign::NullLeft);
    REQUIRE(one.algebra.has_value());
    Matrix p(g5, 2, 2); // a = n + b, a^2 = n
    p.at(0, 0) = Scalar::one(g5);
    p.at(1, 0) = Scalar::one(g5);
    p.at(0, 1) = Scalar::one(g5);
    LeibnizAlgebra transformed = change_basis(*one.algebra, p);
    LeibnizAlgebra ex2 = example2(g5);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(vec_eq(transformed.product(i, j), ex2.product(i, j)));
}

TEST_CASE("random generators") {
    FieldSpec g3 = FieldSpec::gf(3);
    // deterministic per seed
    LeibnizAlgebra a = random_algebra(1, 2, g3, RandomKind::LeibnizValid);
    LeibnizAlgebra b = random_algebra(1, 2, g3, RandomKind::LeibnizValid);
    CHECK(a == b);
    CHECK_FALSE(a.check_leibniz().has_value());
    LeibnizAlgebra c = random_algebra(2, 2, g3, RandomKind::Raw);
    CHECK(c.dim() == 2);

    // the solvable CT candidate really is CT
    FieldSpec g5 = FieldSpec::gf(5);
    LeibnizAlgebra d = random_algebra(7, 4, g5, RandomKind::SolvableCtCandidate);
    CHECK_FALSE(d.check_leibniz().has_value());
    CHECK(is_solvable(d));
    CHECK(is_ct_exhaustive(d).ok());

    // one-dimensional raw table e*e = e shows up as a violation downstream
    FieldSpec q = FieldSpec::rationals();
    LeibnizAlgebra bad = LeibnizAlgebra::make(q, {"e1"}, {{0, 0, {{0, Scalar::one(q)}}}});
    CHECK(bad.check_leibniz().has_value());
}

TEST_CASE("change_basis preserves validity and invariants") {
    FieldSpec g5 = FieldSpec::gf(5);
    LeibnizAlgebra l = cyclic_algebra(spec_of(g5, {1, 2}));
    leib::Rng rng(3);
    for (int t = 0; t < 10; ++t) {
        Matrix p(g5, 3, 3);
        do {
            for (std::size_t r = 0; r < 3; ++r)
                for (std::size_t c = 0; c < 3; ++c) p.at(r, c) = rng.scalar(g5);
        } while (kernel(p).dim() > 0);
        LeibnizAlgebra moved = change_basis(l, p);
        CHECK_FALSE(moved.check_leibniz().has_value());
        CHECK(nilradical(moved).dim() == nilradical(l).dim());
        CHECK(is_ct_exhaustive(moved).ok() == is_ct_exhaustive(l).ok());
    }
    Matrix sing(g5, 3, 3);
    CHECK_THROWS_AS(change_basis(l, sing), PreconditionError);
}
