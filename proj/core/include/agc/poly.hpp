#pragma once

#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "agc/rational.hpp"

namespace agc {

/// Univariate polynomial over the rationals, stored as coefficients in
/// ascending degree order. Always canonical: the highest stored coefficient
/// is nonzero, and the zero polynomial has no coefficients at all. The
/// degree of the zero polynomial is std::nullopt rather than a numeric
/// sentinel, so nothing can silently do arithmetic on it.
class Poly {
  public:
    Poly() = default;
    Poly(int constant) : Poly(Rational(constant)) {}
    Poly(Rational constant);
    Poly(std::initializer_list<Rational> ascending_coeffs);

    static Poly from_coeffs(std::vector<Rational> ascending_coeffs);
    /// coeff * s^degree
    static Poly monomial(int degree, Rational coeff = Rational(1));
    /// The indeterminate s.
    static Poly variable() { return monomial(1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    std::optional<int> degree() const;

    /// Coefficient of s^i; zero beyond the stored range.
    const Rational& coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading_coeff() const; // pre: not zero

    Poly monic() const; // pre: not zero
    Poly derivative() const;
    Rational eval(const Rational& at) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rational& scalar);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend Poly operator*(Poly lhs, const Rational& scalar) { return lhs *= scalar; }
    friend Poly operator*(const Rational& scalar, Poly rhs) { return rhs *= scalar; }
    friend bool operator==(const Poly& lhs, const Poly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }
    friend bool operator!=(const Poly& lhs, const Poly& rhs) { return !(lhs == rhs); }

    /// Human-readable form like "s^2 - 3/2*s + 1"; "0" for the zero polynomial.
    std::string str() const;

  private:
    void trim();

    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Euclidean division: a = b*q + r with deg(r) < deg(b). Throws on b = 0.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

/// Monic gcd; divides both inputs exactly. Throws if both inputs are zero.
Poly poly_gcd(const Poly& a, const Poly& b);

} // namespace agc
