#include "leib/linalg.hpp"

#include <algorithm>

namespace leib {

Vec zero_vec(const FieldSpec &f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

Vec unit_vec(const FieldSpec &f, std::size_t n, std::size_t i) {
    Vec v = zero_vec(f, n);
    v.at(i) = Scalar::one(f);
    return v;
}

bool vec_is_zero(const Vec &v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar &s) { return s.is_zero(); });
}

Vec vec_add(const Vec &a, const Vec &b) {
    if (a.size() != b.size()) throw ShapeError("vector length mismatch");
    Vec out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
    return out;
}

Vec vec_sub(const Vec &a, const Vec &b) {
    if (a.size() != b.size()) throw ShapeError("vector length mismatch");
    Vec out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
    return out;
}

Vec vec_scale(const Scalar &c, const Vec &v) {
    Vec out;
    out.reserve(v.size());
    for (const Scalar &s : v) out.push_back(c * s);
    return out;
}

bool vec_eq(const Vec &a, const Vec &b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

std::string vec_str(const Vec &v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

Matrix::Matrix(const FieldSpec &f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldSpec &f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const FieldSpec &f, const std::vector<Vec> &rows, std::size_t cols) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw ShapeError("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(const FieldSpec &f, const std::vector<Vec> &cols, std::size_t rows) {
    Matrix m(f, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw ShapeError("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

Vec Matrix::row(std::size_t r) const {
    Vec v;
    v.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v.push_back(at(r, c));
    return v;
}

Vec Matrix::column(std::size_t c) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
}

Matrix Matrix::operator*(const Matrix &o) const {
    if (field_ != o.field_) throw FieldError("field mismatch in matrix product");
    if (cols_ != o.rows_) throw ShapeError("inner dimension mismatch");
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar &aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                out.at(i, j) = out.at(i, j) + aik * o.at(k, j);
        }
    return out;
}

Matrix Matrix::operator+(const Matrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("shape mismatch");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + o.e_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("shape mismatch");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - o.e_[i];
    return out;
}

bool Matrix::operator==(const Matrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

Vec Matrix::apply(const Vec &v) const {
    if (v.size() != cols_) throw ShapeError("vector length mismatch");
    Vec out = zero_vec(field_, rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c].is_zero()) continue;
        for (std::size_t r = 0; r < rows_; ++r)
            out[r] = out[r] + at(r, c) * v[c];
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
}

Matrix Matrix::pow(std::size_t k) const {
    if (rows_ != cols_) throw ShapeError("pow of non-square matrix");
    Matrix acc = identity(field_, rows_);
    for (std::size_t i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

namespace {

// Plain Gauss-Jordan; used directly over GF(p) and as the normalization pass
// over Q after the fraction-free forward step.
Echelon gauss_jordan(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pr = r;
        while (pr < m.rows() && m.at(pr, c).is_zero()) ++pr;
        if (pr == m.rows()) continue;
        if (pr != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(pr, j));
        Scalar inv = m.at(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar factor = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - factor * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return Echelon{std::move(m), std::move(pivots)};
}

// Integer row images of a rational matrix (each row scaled by the lcm of its
// denominators). Row scaling preserves row space, kernel and pivot structure.
std::vector<std::vector<BigInt>> integer_rows(const Matrix &m, std::vector<BigInt> *scales) {
    std::vector<std::vector<BigInt>> rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        BigInt l{1};
        for (std::size_t c = 0; c < m.cols(); ++c)
            l = boost::multiprecision::lcm(l, m.at(r, c).rat_value().den);
        if (scales) scales->push_back(l);
        rows[r].reserve(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rat &v = m.at(r, c).rat_value();
            rows[r].push_back(v.num * (l / v.den));
        }
    }
    return rows;
}

// Fraction-free (Bareiss) forward elimination. Returns row echelon integer
// rows; exact divisions by the previous pivot keep entry growth polynomial.
void bareiss_forward(std::vector<std::vector<BigInt>> &a, std::size_t cols,
                     std::vector<std::size_t> *pivots, int *swap_sign) {
    BigInt prev{1};
    std::size_t r = 0;
    if (swap_sign) *swap_sign = 1;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t pr = r;
        while (pr < a.size() && a[pr][c] == 0) ++pr;
        if (pr == a.size()) continue;
        if (pr != r) {
            std::swap(a[pr], a[r]);
            if (swap_sign) *swap_sign = -*swap_sign;
        }
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        if (pivots) pivots->push_back(c);
        ++r;
    }
}

Echelon rref_rational(const Matrix &m) {
    auto rows = integer_rows(m, nullptr);
    std::vector<std::size_t> pivots;
    bareiss_forward(rows, m.cols(), &pivots, nullptr);
    // Normalize: back-substitute the echelon form into full RREF.
    const FieldSpec f = m.field();
    Matrix red(f, m.rows(), m.cols());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            red.at(r, c) = Scalar::rational(Rat(rows[r][c], BigInt(1)));
    for (std::size_t r = pivots.size(); r-- > 0;) {
        std::size_t pc = pivots[r];
        Scalar inv = red.at(r, pc).inverse();
        for (std::size_t j = pc; j < m.cols(); ++j) red.at(r, j) = red.at(r, j) * inv;
        for (std::size_t i = 0; i < r; ++i) {
            Scalar factor = red.at(i, pc);
            if (factor.is_zero()) continue;
            for (std::size_t j = pc; j < m.cols(); ++j)
                red.at(i, j) = red.at(i, j) - factor * red.at(r, j);
        }
    }
    return Echelon{std::move(red), std::move(pivots)};
}

} // namespace

Echelon rref(const Matrix &m) {
    if (m.field().is_rationals()) return rref_rational(m);
    return gauss_jordan(m);
}

Scalar det(const Matrix &m) {
    if (m.rows() != m.cols()) throw ShapeError("determinant of non-square matrix");
    const FieldSpec f = m.field();
    if (m.rows() == 0) return Scalar::one(f);
    if (f.is_rationals()) {
        std::vector<BigInt> scales;
        auto rows = integer_rows(m, &scales);
        std::vector<std::size_t> pivots;
        int sign = 1;
        bareiss_forward(rows, m.cols(), &pivots, &sign);
        if (pivots.size() < m.rows()) return Scalar::zero(f);
        BigInt d = rows.back().back(); // Bareiss: last pivot is det of the integer matrix
        if (sign < 0) d = -d;
        BigInt denom{1};
        for (const BigInt &s : scales) denom *= s;
        return Scalar::rational(Rat(std::move(d), std::move(denom)));
    }
    Matrix a = m;
    Scalar acc = Scalar::one(f);
    for (std::size_t c = 0; c < a.cols(); ++c) {
        std::size_t pr = c;
        while (pr < a.rows() && a.at(pr, c).is_zero()) ++pr;
        if (pr == a.rows()) return Scalar::zero(f);
        if (pr != c) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(c, j), a.at(pr, j));
            acc = -acc;
        }
        acc = acc * a.at(c, c);
        Scalar inv = a.at(c, c).inverse();
        for (std::size_t i = c + 1; i < a.rows(); ++i) {
            if (a.at(i, c).is_zero()) continue;
            Scalar factor = a.at(i, c) * inv;
            for (std::size_t j = c; j < a.cols(); ++j)
                a.at(i, j) = a.at(i, j) - factor * a.at(c, j);
        }
    }
    return acc;
}

Subspace Subspace::zero(const FieldSpec &f, std::size_t ambient) { return Subspace(f, ambient); }

Subspace Subspace::full(const FieldSpec &f, std::size_t ambient) {
    Subspace s(f, ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        s.rows_.push_back(unit_vec(f, ambient, i));
        s.pivots_.push_back(i);
    }
    return s;
}

Subspace Subspace::span(const FieldSpec &f, std::size_t ambient, const std::vector<Vec> &gens) {
    for (const Vec &g : gens)
        if (g.size() != ambient) throw ShapeError("generator length mismatch");
    Echelon e = rref(Matrix::from_rows(f, gens, ambient));
    Subspace s(f, ambient);
    for (std::size_t r = 0; r < e.rank(); ++r) s.rows_.push_back(e.reduced.row(r));
    s.pivots_ = e.pivots;
    return s;
}

Vec Subspace::reduce(const Vec &v) const {
    if (v.size() != ambient_) throw ShapeError("vector length mismatch");
    Vec w = v;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar &c = w[pivots_[r]];
        if (c.is_zero()) continue;
        Scalar factor = c; // pivot entries are 1
        for (std::size_t j = 0; j < ambient_; ++j) w[j] = w[j] - factor * rows_[r][j];
    }
    return w;
}

bool Subspace::contains_vector(const Vec &v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace &o) const {
    if (o.ambient_ != ambient_) throw ShapeError("ambient mismatch");
    for (const Vec &r : o.rows_)
        if (!contains_vector(r)) return false;
    return true;
}

bool Subspace::operator==(const Subspace &o) const {
    if (ambient_ != o.ambient_ || field_ != o.field_ || rows_.size() != o.rows_.size())
        return false;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (!vec_eq(rows_[i], o.rows_[i])) return false;
    return true;
}

Vec Subspace::coords_of(const Vec &v) const {
    // RREF basis: the coefficient of row r is just v at the pivot position,
    // provided v lies in the subspace.
    if (!contains_vector(v)) throw PreconditionError("vector not in subspace");
    Vec out;
    out.reserve(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) out.push_back(v[pivots_[r]]);
    return out;
}

Subspace Subspace::sum(const Subspace &o) const {
    if (ambient_ != o.ambient_ || field_ != o.field_)
        throw ShapeError("subspace sum: ambient/field mismatch");
    std::vector<Vec> gens = rows_;
    gens.insert(gens.end(), o.rows_.begin(), o.rows_.end());
    return span(field_, ambient_, gens);
}

Subspace Subspace::intersect(const Subspace &o) const {
    if (ambient_ != o.ambient_ || field_ != o.field_)
        throw ShapeError("subspace intersect: ambient/field mismatch");
    // Zassenhaus: reduce [U|U; V|0]; rows with zero left half carry the
    // intersection in their right half.
    std::size_t n = ambient_;
    std::vector<Vec> block;
    for (const Vec &u : rows_) {
        Vec row = u;
        row.insert(row.end(), u.begin(), u.end());
        block.push_back(std::move(row));
    }
    for (const Vec &v : o.rows_) {
        Vec row = v;
        Vec z = zero_vec(field_, n);
        row.insert(row.end(), z.begin(), z.end());
        block.push_back(std::move(row));
    }
    Echelon e = rref(Matrix::from_rows(field_, block, 2 * n));
    std::vector<Vec> gens;
    for (std::size_t r = 0; r < e.rank(); ++r) {
        Vec full = e.reduced.row(r);
        bool left_zero = true;
        for (std::size_t c = 0; c < n && left_zero; ++c)
            if (!full[c].is_zero()) left_zero = false;
        if (left_zero) gens.push_back(Vec(full.begin() + static_cast<long>(n), full.end()));
    }
    return span(field_, n, gens);
}

Subspace Subspace::complement_in(const Subspace &w) const {
    if (!w.contains(*this))
        throw PreconditionError("complement_in: subspace not contained in the given space");
    std::vector<Vec> gens;
    for (std::size_t r = 0; r < w.rows_.size(); ++r) {
        bool is_pivot_here =
            std::find(pivots_.begin(), pivots_.end(), w.pivots_[r]) != pivots_.end();
        if (!is_pivot_here) gens.push_back(w.rows_[r]);
    }
    return span(field_, ambient_, gens);
}

Subspace kernel(const Matrix &m) {
    Echelon e = rref(m);
    const FieldSpec f = m.field();
    std::size_t n = m.cols();
    std::vector<Vec> gens;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        Vec v = zero_vec(f, n);
        v[c] = Scalar::one(f);
        for (std::size_t r = 0; r < e.rank(); ++r)
            v[e.pivots[r]] = -e.reduced.at(r, c);
        gens.push_back(std::move(v));
    }
    return Subspace::span(f, n, gens);
}

Subspace image(const Matrix &m) {
    std::vector<Vec> cols;
    for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
    return Subspace::span(m.field(), m.rows(), cols);
}

std::optional<Vec> solve(const Matrix &a, const Vec &b) {
    if (b.size() != a.rows()) throw ShapeError("rhs length mismatch");
    const FieldSpec f = a.field();
    Matrix aug(f, a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    Echelon e = rref(aug);
    for (std::size_t p : e.pivots)
        if (p == a.cols()) return std::nullopt;
    Vec x = zero_vec(f, a.cols());
    for (std::size_t r = 0; r < e.rank(); ++r) x[e.pivots[r]] = e.reduced.at(r, a.cols());
    return x;
}

std::pair<Subspace, Subspace> fitting_decomposition(const Matrix &f) {
    if (f.rows() != f.cols()) throw ShapeError("fitting decomposition of non-square matrix");
    Matrix g = f.pow(f.rows()); // exponent = ambient dimension, always sufficient
    return {kernel(g), image(g)};
}

bool has_zero_eigenvalue(const Matrix &f) {
    if (f.rows() != f.cols()) throw ShapeError("eigenvalue test of non-square matrix");
    return kernel(f).dim() > 0;
}

Matrix vstack(const std::vector<Matrix> &ms) {
    if (ms.empty()) throw ShapeError("vstack of nothing");
    std::size_t cols = ms.front().cols();
    std::size_t rows = 0;
    for (const Matrix &m : ms) {
        if (m.cols() != cols) throw ShapeError("vstack column mismatch");
        rows += m.rows();
    }
    Matrix out(ms.front().field(), rows, cols);
    std::size_t r0 = 0;
    for (const Matrix &m : ms) {
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < cols; ++c) out.at(r0 + r, c) = m.at(r, c);
        r0 += m.rows();
    }
    return out;
}

std::vector<Vec> all_vectors(const FieldSpec &f, std::size_t n) {
    std::int64_t p = f.prime();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(p);
    std::vector<Vec> out;
    out.reserve(total);
    std::vector<std::int64_t> digits(n, 0);
    for (std::uint64_t t = 0; t < total; ++t) {
        Vec v;
        v.reserve(n);
        for (std::size_t j = 0; j < n; ++j) v.push_back(Scalar::residue(f, digits[j]));
        out.push_back(std::move(v));
        for (std::size_t j = n; j-- > 0;) {
            if (++digits[j] < p) break;
            digits[j] = 0;
        }
    }
    return out;
}

std::vector<Vec> projective_vectors(const FieldSpec &f, std::size_t n) {
    std::vector<Vec> out;
    for (Vec &v : all_vectors(f, n)) {
        std::size_t lead = n;
        for (std::size_t j = 0; j < n; ++j)
            if (!v[j].is_zero()) { lead = j; break; }
        if (lead == n) continue;
        if (v[lead].is_one()) out.push_back(std::move(v));
    }
    return out;
}

BigInt subspace_count(std::int64_t p, std::size_t n) {
    BigInt total{0};
    BigInt q{p};
    for (std::size_t k = 0; k <= n; ++k) {
        BigInt num{1}, den{1};
        for (std::size_t i = 0; i < k; ++i) {
            num *= boost::multiprecision::pow(q, static_cast<unsigned>(n - i)) - 1;
            den *= boost::multiprecision::pow(q, static_cast<unsigned>(i + 1)) - 1;
        }
        total += num / den;
    }
    return total;
}

namespace {

bool next_combination(std::vector<std::size_t> &piv, std::size_t n) {
    std::size_t k = piv.size();
    for (std::size_t i = k; i-- > 0;) {
        if (piv[i] < n - k + i) {
            ++piv[i];
            for (std::size_t j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

std::vector<Subspace> all_subspaces(const FieldSpec &f, std::size_t n, std::uint64_t budget) {
    std::int64_t p = f.prime();
    if (subspace_count(p, n) > BigInt(budget))
        throw BudgetError("subspace enumeration over " + f.name() + "^" + std::to_string(n) +
                          " exceeds budget " + std::to_string(budget));
    std::vector<Subspace> out;
    out.push_back(Subspace::zero(f, n));
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::size_t> piv(k);
        for (std::size_t i = 0; i < k; ++i) piv[i] = i;
        do {
            // free slots: (row r, col c) with c > piv[r] and c not a pivot
            std::vector<std::pair<std::size_t, std::size_t>> free_slots;
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = piv[r] + 1; c < n; ++c)
                    if (std::find(piv.begin(), piv.end(), c) == piv.end())
                        free_slots.emplace_back(r, c);
            std::vector<std::int64_t> digits(free_slots.size(), 0);
            for (;;) {
                std::vector<Vec> rows(k, zero_vec(f, n));
                for (std::size_t r = 0; r < k; ++r) rows[r][piv[r]] = Scalar::one(f);
                for (std::size_t s = 0; s < free_slots.size(); ++s)
                    rows[free_slots[s].first][free_slots[s].second] =
                        Scalar::residue(f, digits[s]);
                out.push_back(Subspace::span(f, n, rows));
                bool carried = true;
                for (std::size_t s = free_slots.size(); s-- > 0;) {
                    if (++digits[s] < p) { carried = false; break; }
                    digits[s] = 0;
                }
                if (carried) break;
            }
        } while (next_combination(piv, n));
    }
    return out;
}

} // namespace leib
