#include "agc/poly_matrix.hpp"

#include <sstream>

#include "agc/errors.hpp"

namespace agc {

PolyMatrix::PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
    entries_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Poly(1);
    return m;
}

PolyMatrix PolyMatrix::from_rows(const std::vector<std::vector<Poly>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
    PolyMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
            throw DimensionError("ragged rows in matrix literal");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

PolyMatrix PolyMatrix::from_rows(std::initializer_list<std::initializer_list<Poly>> rows) {
    std::vector<std::vector<Poly>> copy;
    for (const auto& row : rows) copy.emplace_back(row);
    return from_rows(copy);
}

Poly& PolyMatrix::at(int i, int j) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw DimensionError("matrix index out of range");
    return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j)];
}

const Poly& PolyMatrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw DimensionError("matrix index out of range");
    return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j)];
}

bool PolyMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

std::optional<int> PolyMatrix::degree() const {
    std::optional<int> d;
    for (const auto& e : entries_)
        if (auto ed = e.degree(); ed && (!d || *ed > *d)) d = ed;
    return d;
}

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix m = *this;
    for (auto& e : m.entries_) e = -e;
    return m;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix addition shape mismatch");
    PolyMatrix m = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] += rhs.entries_[i];
    return m;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix subtraction shape mismatch");
    PolyMatrix m = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] -= rhs.entries_[i];
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionError("matrix product shape mismatch");
    PolyMatrix m(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Poly& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < rhs.cols_; ++j) m.at(i, j) += a * rhs.at(k, j);
        }
    return m;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

PolyMatrix PolyMatrix::row_range(int begin, int end) const {
    if (begin < 0 || end < begin || end > rows_) throw DimensionError("row range out of bounds");
    PolyMatrix m(end - begin, cols_);
    for (int i = begin; i < end; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i - begin, j) = at(i, j);
    return m;
}

PolyMatrix PolyMatrix::col_range(int begin, int end) const {
    if (begin < 0 || end < begin || end > cols_) throw DimensionError("column range out of bounds");
    PolyMatrix m(rows_, end - begin);
    for (int i = 0; i < rows_; ++i)
        for (int j = begin; j < end; ++j) m.at(i, j - begin) = at(i, j);
    return m;
}

void PolyMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void PolyMatrix::add_scaled_row(int target, int source, const Poly& factor) {
    if (factor.is_zero()) return;
    for (int j = 0; j < cols_; ++j) at(target, j) += factor * at(source, j);
}

void PolyMatrix::scale_row(int i, const Rational& factor) {
    for (int j = 0; j < cols_; ++j) at(i, j) *= factor;
}

std::string PolyMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " [");
        for (int j = 0; j < cols_; ++j) {
            os << at(i, j).str();
            if (j + 1 < cols_) os << ", ";
        }
        os << "]";
        if (i + 1 < rows_) os << ";";
    }
    os << "]";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const PolyMatrix& m) {
    return os << m.str();
}

PolyMatrix vstack(const PolyMatrix& top, const PolyMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw DimensionError("vstack column mismatch");
    PolyMatrix m(top.rows() + bottom.rows(), top.cols());
    for (int i = 0; i < top.rows(); ++i)
        for (int j = 0; j < top.cols(); ++j) m.at(i, j) = top.at(i, j);
    for (int i = 0; i < bottom.rows(); ++i)
        for (int j = 0; j < bottom.cols(); ++j) m.at(top.rows() + i, j) = bottom.at(i, j);
    return m;
}

PolyMatrix hstack(const PolyMatrix& left, const PolyMatrix& right) {
    if (left.rows() != right.rows()) throw DimensionError("hstack row mismatch");
    PolyMatrix m(left.rows(), left.cols() + right.cols());
    for (int i = 0; i < left.rows(); ++i) {
        for (int j = 0; j < left.cols(); ++j) m.at(i, j) = left.at(i, j);
        for (int j = 0; j < right.cols(); ++j) m.at(i, left.cols() + j) = right.at(i, j);
    }
    return m;
}

Poly det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
    const int n = m.rows();
    if (n == 0) return Poly(1);

    // Bareiss: every division below is exact in Q[s].
    PolyMatrix a = m;
    Poly prev_pivot(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k).is_zero()) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (!a.at(i, k).is_zero()) {
                    swap = i;
                    break;
                }
            if (swap < 0) return Poly();
            a.swap_rows(k, swap);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Poly num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                auto [q, r] = poly_divmod(num, prev_pivot);
                if (!r.is_zero()) throw std::logic_error("Bareiss division was not exact");
                a.at(i, j) = std::move(q);
            }
        prev_pivot = a.at(k, k);
    }
    Poly d = a.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

bool is_unimodular(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("unimodularity of a non-square matrix");
    Poly d = det(m);
    return !d.is_zero() && d.is_constant();
}

namespace {

// Row degree (max entry degree) of row i; nullopt for a zero row.
std::optional<int> row_degree(const PolyMatrix& m, int i) {
    std::optional<int> d;
    for (int j = 0; j < m.cols(); ++j)
        if (auto ed = m.at(i, j).degree(); ed && (!d || *ed > *d)) d = ed;
    return d;
}

// Left nullvector of a rational matrix via exact Gaussian elimination;
// empty vector when L has full row rank.
std::vector<Rational> left_nullvector(const std::vector<std::vector<Rational>>& L) {
    const int n = static_cast<int>(L.size());
    if (n == 0) return {};
    const int m = static_cast<int>(L.front().size());
    // Row-reduce L augmented with an identity recording the combinations;
    // a row whose L-part reduces to zero yields the nullvector.
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        a[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(m + n), Rational(0));
        for (int j = 0; j < m; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = L[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(m + i)] = Rational(1);
    }
    int pivot_row = 0;
    for (int col = 0; col < m && pivot_row < n; ++col) {
        int sel = -1;
        for (int i = pivot_row; i < n; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(a[static_cast<std::size_t>(sel)], a[static_cast<std::size_t>(pivot_row)]);
        for (int i = 0; i < n; ++i) {
            if (i == pivot_row) continue;
            const Rational f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] / a[static_cast<std::size_t>(pivot_row)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int j = 0; j < m + n; ++j)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= f * a[static_cast<std::size_t>(pivot_row)][static_cast<std::size_t>(j)];
        }
        ++pivot_row;
    }
    for (int i = pivot_row; i < n; ++i) {
        // Left part is zero: the recorded combination is a left nullvector.
        std::vector<Rational> v(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(m + j)];
        return v;
    }
    return {};
}

} // namespace

bool rational_properness(const PolyMatrix& P, const PolyMatrix& Q) {
    if (P.rows() != P.cols()) throw DimensionError("properness requires square P");
    if (P.rows() != Q.rows()) throw DimensionError("properness requires matching row counts");
    if (det(P).is_zero()) throw SingularError("properness of a singular matrix");

    PolyMatrix p = P, q = Q;
    const int n = p.rows();
    for (;;) {
        std::vector<int> rdeg(static_cast<std::size_t>(n));
        std::vector<std::vector<Rational>> lead(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
        for (int i = 0; i < n; ++i) {
            auto d = row_degree(p, i);
            if (!d) throw std::logic_error("nonsingular matrix acquired a zero row");
            rdeg[static_cast<std::size_t>(i)] = *d;
            for (int j = 0; j < n; ++j) lead[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = p.at(i, j).coeff(*d);
        }
        std::vector<Rational> v = left_nullvector(lead);
        if (v.empty()) {
            // Row-reduced: P^{-1} Q is proper iff every row degree of Q is
            // bounded by the matching row degree of P.
            for (int i = 0; i < n; ++i) {
                auto dq = row_degree(q, i);
                if (dq && *dq > rdeg[static_cast<std::size_t>(i)]) return false;
            }
            return true;
        }
        // Combine rows to knock the highest-degree row participating in the
        // dependency below its current degree; this is a unimodular step.
        int k = -1;
        for (int i = 0; i < n; ++i)
            if (v[static_cast<std::size_t>(i)] != 0 && (k < 0 || rdeg[static_cast<std::size_t>(i)] > rdeg[static_cast<std::size_t>(k)])) k = i;
        PolyMatrix new_row_p(1, p.cols());
        PolyMatrix new_row_q(1, q.cols());
        for (int i = 0; i < n; ++i) {
            const Rational& vi = v[static_cast<std::size_t>(i)];
            if (vi == 0) continue;
            Poly shift = Poly::monomial(rdeg[static_cast<std::size_t>(k)] - rdeg[static_cast<std::size_t>(i)], vi);
            for (int j = 0; j < p.cols(); ++j) new_row_p.at(0, j) += shift * p.at(i, j);
            for (int j = 0; j < q.cols(); ++j) new_row_q.at(0, j) += shift * q.at(i, j);
        }
        for (int j = 0; j < p.cols(); ++j) p.at(k, j) = new_row_p.at(0, j);
        for (int j = 0; j < q.cols(); ++j) q.at(k, j) = new_row_q.at(0, j);
    }
}

} // namespace agc
