#pragma once

#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "agc/poly.hpp"

namespace agc {

/// Dense matrix of Poly entries, row-major. Zero-row and zero-column
/// matrices are legal and show up naturally (unconstrained behaviours,
/// empty certificate blocks), so every operation must tolerate them.
class PolyMatrix {
  public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(int rows, int cols);

    static PolyMatrix identity(int n);
    static PolyMatrix from_rows(const std::vector<std::vector<Poly>>& rows);
    static PolyMatrix from_rows(std::initializer_list<std::initializer_list<Poly>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Poly& at(int i, int j);
    const Poly& at(int i, int j) const;

    bool is_zero() const;
    /// Largest entry degree; nullopt when every entry is zero.
    std::optional<int> degree() const;

    PolyMatrix operator-() const;
    PolyMatrix operator+(const PolyMatrix& rhs) const;
    PolyMatrix operator-(const PolyMatrix& rhs) const;
    PolyMatrix operator*(const PolyMatrix& rhs) const;
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

    /// Rows [begin, end) as a new matrix.
    PolyMatrix row_range(int begin, int end) const;
    /// Columns [begin, end) as a new matrix.
    PolyMatrix col_range(int begin, int end) const;

    void swap_rows(int a, int b);
    /// row[target] += factor * row[source]
    void add_scaled_row(int target, int source, const Poly& factor);
    void scale_row(int i, const Rational& factor);

    std::string str() const;

  private:
    int rows_, cols_;
    std::vector<Poly> entries_;
};

std::ostream& operator<<(std::ostream& os, const PolyMatrix& m);

PolyMatrix vstack(const PolyMatrix& top, const PolyMatrix& bottom);
PolyMatrix hstack(const PolyMatrix& left, const PolyMatrix& right);

/// Exact determinant via fraction-free (Bareiss) elimination.
Poly det(const PolyMatrix& m);

/// True iff det(m) is a nonzero constant, i.e. m is invertible over the
/// polynomial ring itself.
bool is_unimodular(const PolyMatrix& m);

/// True iff P^{-1} Q is a proper rational matrix: after reducing each entry,
/// no numerator degree exceeds its denominator degree. P must be square and
/// nonsingular (SingularError otherwise). Decided by bringing P to
/// row-reduced form with unimodular row operations applied jointly to Q and
/// comparing row degrees.
bool rational_properness(const PolyMatrix& P, const PolyMatrix& Q);

} // namespace agc
