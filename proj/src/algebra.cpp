#include "leib/algebra.hpp"

namespace leib {

std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
    return names;
}

LeibnizAlgebra LeibnizAlgebra::zero(const FieldSpec &f, std::size_t n) {
    LeibnizAlgebra a(f, n);
    a.names_ = default_names(n);
    a.c_.assign(n * n, zero_vec(f, n));
    return a;
}

LeibnizAlgebra LeibnizAlgebra::make(const FieldSpec &f, std::vector<std::string> basis_names,
                                    const std::vector<ProductEntry> &entries) {
    std::size_t n = basis_names.size();
    LeibnizAlgebra a = zero(f, n);
    a.names_ = std::move(basis_names);
    for (const ProductEntry &e : entries) {
        if (e.i >= n || e.j >= n)
            throw ShapeError("product index out of range: (" + std::to_string(e.i) + "," +
                             std::to_string(e.j) + ")");
        for (const ProductTerm &t : e.terms) {
            if (t.k >= n)
                throw ShapeError("product target index out of range: " + std::to_string(t.k));
            if (t.c.field() != f)
                throw FieldError("structure constant in wrong field");
            Vec &cv = a.c_[e.i * n + e.j];
            cv[t.k] = cv[t.k] + t.c;
        }
    }
    return a;
}

LeibnizAlgebra LeibnizAlgebra::from_tensor(const FieldSpec &f,
                                           std::vector<std::string> basis_names,
                                           std::vector<Vec> tensor) {
    std::size_t n = basis_names.size();
    if (tensor.size() != n * n) throw ShapeError("tensor must have n*n product vectors");
    for (const Vec &v : tensor) {
        if (v.size() != n) throw ShapeError("product vector length mismatch");
        for (const Scalar &s : v)
            if (s.field() != f) throw FieldError("structure constant in wrong field");
    }
    LeibnizAlgebra a(f, n);
    a.names_ = std::move(basis_names);
    a.c_ = std::move(tensor);
    return a;
}

bool LeibnizAlgebra::operator==(const LeibnizAlgebra &o) const {
    if (field_ != o.field_ || n_ != o.n_) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!vec_eq(c_[i], o.c_[i])) return false;
    return true;
}

Vec LeibnizAlgebra::mult(const Vec &x, const Vec &y) const {
    if (x.size() != n_ || y.size() != n_) throw ShapeError("element dimension mismatch");
    Vec out = zero_vec(field_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (y[j].is_zero()) continue;
            Scalar coef = x[i] * y[j];
            const Vec &cv = product(i, j);
            for (std::size_t k = 0; k < n_; ++k)
                if (!cv[k].is_zero()) out[k] = out[k] + coef * cv[k];
        }
    }
    return out;
}

Vec LeibnizAlgebra::mult_basis_vec(std::size_t i, const Vec &v) const {
    Vec out = zero_vec(field_, n_);
    for (std::size_t m = 0; m < n_; ++m) {
        if (v[m].is_zero()) continue;
        const Vec &cv = product(i, m);
        for (std::size_t k = 0; k < n_; ++k)
            if (!cv[k].is_zero()) out[k] = out[k] + v[m] * cv[k];
    }
    return out;
}

Vec LeibnizAlgebra::mult_vec_basis(const Vec &v, std::size_t k) const {
    Vec out = zero_vec(field_, n_);
    for (std::size_t m = 0; m < n_; ++m) {
        if (v[m].is_zero()) continue;
        const Vec &cv = product(m, k);
        for (std::size_t t = 0; t < n_; ++t)
            if (!cv[t].is_zero()) out[t] = out[t] + v[m] * cv[t];
    }
    return out;
}

Matrix LeibnizAlgebra::right_op(const Vec &x) const {
    if (x.size() != n_) throw ShapeError("element dimension mismatch");
    std::vector<Vec> cols;
    cols.reserve(n_);
    for (std::size_t j = 0; j < n_; ++j) cols.push_back(mult(unit(j), x));
    return Matrix::from_columns(field_, cols, n_);
}

Matrix LeibnizAlgebra::left_op(const Vec &x) const {
    if (x.size() != n_) throw ShapeError("element dimension mismatch");
    std::vector<Vec> cols;
    cols.reserve(n_);
    for (std::size_t j = 0; j < n_; ++j) cols.push_back(mult(x, unit(j)));
    return Matrix::from_columns(field_, cols, n_);
}

std::optional<LeibnizViolation> LeibnizAlgebra::check_leibniz() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k) {
                Vec lhs = mult_basis_vec(i, product(j, k));
                Vec rhs = vec_sub(mult_vec_basis(product(i, j), k),
                                  mult_vec_basis(product(i, k), j));
                if (!vec_eq(lhs, rhs)) return LeibnizViolation{i, j, k, lhs, rhs};
            }
    return std::nullopt;
}

std::vector<LeibnizViolation> LeibnizAlgebra::leibniz_violations() const {
    std::vector<LeibnizViolation> out;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k) {
                Vec lhs = mult_basis_vec(i, product(j, k));
                Vec rhs = vec_sub(mult_vec_basis(product(i, j), k),
                                  mult_vec_basis(product(i, k), j));
                if (!vec_eq(lhs, rhs)) out.push_back(LeibnizViolation{i, j, k, lhs, rhs});
            }
    return out;
}

bool LeibnizAlgebra::is_lie() const {
    // [x,x] = 0 is quadratic; e_i^2 = 0 together with
    // e_i e_j + e_j e_i = 0 (its polarization) decides it in any characteristic.
    for (std::size_t i = 0; i < n_; ++i)
        if (!vec_is_zero(product(i, i))) return false;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (!vec_is_zero(vec_add(product(i, j), product(j, i)))) return false;
    return true;
}

Subspace LeibnizAlgebra::product_space(const Subspace &u, const Subspace &v) const {
    if (u.ambient() != n_ || v.ambient() != n_) throw ShapeError("ambient dimension mismatch");
    std::vector<Vec> gens;
    for (const Vec &a : u.basis())
        for (const Vec &b : v.basis()) gens.push_back(mult(a, b));
    return Subspace::span(field_, n_, gens);
}

Subspace LeibnizAlgebra::generated_subalgebra(const std::vector<Vec> &gens) const {
    Subspace v = Subspace::span(field_, n_, gens);
    for (;;) {
        Subspace next = v.sum(product_space(v, v));
        if (next == v) return v;
        v = next;
    }
}

bool LeibnizAlgebra::is_subalgebra(const Subspace &u) const {
    return u.contains(product_space(u, u));
}

bool LeibnizAlgebra::is_ideal(const Subspace &u) const {
    Subspace l = full_space();
    return u.contains(product_space(u, l)) && u.contains(product_space(l, u));
}

Subspace LeibnizAlgebra::ideal_closure(const std::vector<Vec> &gens) const {
    Subspace v = Subspace::span(field_, n_, gens);
    Subspace l = full_space();
    for (;;) {
        Subspace next = v.sum(product_space(v, l)).sum(product_space(l, v));
        if (next == v) return v;
        v = next;
    }
}

QuotientResult LeibnizAlgebra::quotient(const Subspace &j) const {
    if (j.ambient() != n_) throw ShapeError("ambient dimension mismatch");
    if (!is_ideal(j)) throw PreconditionError("quotient: subspace is not an ideal");
    Subspace comp = j.complement_in(full_space());
    // comp's rows are standard basis vectors at J's non-pivot positions, so
    // quotient coordinates can be read off after reducing mod J.
    std::size_t m = comp.dim();
    std::vector<std::size_t> pos = comp.pivots();
    std::vector<std::string> names;
    for (std::size_t t = 0; t < m; ++t) names.push_back(names_[pos[t]]);

    Matrix proj(field_, m, n_);
    for (std::size_t cidx = 0; cidx < n_; ++cidx) {
        Vec red = j.reduce(unit(cidx));
        for (std::size_t t = 0; t < m; ++t) proj.at(t, cidx) = red[pos[t]];
    }

    std::vector<Vec> tensor;
    tensor.reserve(m * m);
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < m; ++t) {
            Vec w = j.reduce(mult(comp.basis()[s], comp.basis()[t]));
            Vec q = zero_vec(field_, m);
            for (std::size_t u = 0; u < m; ++u) q[u] = w[pos[u]];
            tensor.push_back(std::move(q));
        }
    return QuotientResult{from_tensor(field_, std::move(names), std::move(tensor)), proj};
}

LeibnizAlgebra LeibnizAlgebra::restrict_to(const Subspace &u) const {
    if (u.ambient() != n_) throw ShapeError("ambient dimension mismatch");
    if (!is_subalgebra(u))
        throw PreconditionError("restrict: subspace is not closed under the product");
    std::size_t k = u.dim();
    std::vector<std::string> names;
    if (u.is_full()) {
        names = names_;
    } else {
        for (std::size_t i = 1; i <= k; ++i) names.push_back("u" + std::to_string(i));
    }
    std::vector<Vec> tensor;
    tensor.reserve(k * k);
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t t = 0; t < k; ++t)
            tensor.push_back(u.coords_of(mult(u.basis()[s], u.basis()[t])));
    return from_tensor(field_, std::move(names), std::move(tensor));
}

std::string LeibnizAlgebra::element_str(const Vec &v) const {
    std::string out;
    for (std::size_t i = 0; i < n_; ++i) {
        if (v[i].is_zero()) continue;
        std::string coef = v[i].str();
        if (!out.empty()) out += " + ";
        if (coef == "1") out += names_[i];
        else out += coef + "*" + names_[i];
    }
    return out.empty() ? "0" : out;
}

} // namespace leib
