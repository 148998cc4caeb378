#include "agc/poly.hpp"

#include <cctype>
#include <sstream>

namespace agc {

Rational parse_rational(std::string_view text) {
    auto bad = [&] { throw ParseError("invalid rational literal: '" + std::string(text) + "'"); };
    std::size_t i = 0;
    auto digits = [&](std::size_t start) {
        std::size_t n = 0;
        while (start + n < text.size() && std::isdigit(static_cast<unsigned char>(text[start + n]))) ++n;
        return n;
    };
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t num_len = digits(i);
    if (num_len == 0) bad();
    i += num_len;
    if (i < text.size()) {
        if (text[i] != '/') bad();
        ++i;
        std::size_t den_len = digits(i);
        if (den_len == 0 || i + den_len != text.size()) bad();
        bool den_zero = true;
        for (std::size_t k = 0; k < den_len; ++k)
            if (text[i + k] != '0') den_zero = false;
        if (den_zero) bad();
    }
    std::string normalized(text[0] == '+' ? text.substr(1) : text);
    Rational q;
    if (q.set_str(normalized, 10) != 0) bad();
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

Poly::Poly(Rational constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

Poly::Poly(std::initializer_list<Rational> ascending_coeffs) : coeffs_(ascending_coeffs) {
    trim();
}

Poly Poly::from_coeffs(std::vector<Rational> ascending_coeffs) {
    Poly p;
    p.coeffs_ = std::move(ascending_coeffs);
    p.trim();
    return p;
}

Poly Poly::monomial(int degree, Rational coeff) {
    Poly p;
    if (coeff != 0) {
        p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
        p.coeffs_.back() = std::move(coeff);
    }
    return p;
}

std::optional<int> Poly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
}

const Rational& Poly::coeff(int i) const {
    static const Rational zero(0);
    if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) return zero;
    return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Poly::leading_coeff() const {
    if (coeffs_.empty()) throw Error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Poly Poly::monic() const {
    Poly p = *this;
    p *= Rational(1) / leading_coeff();
    return p;
}

Poly Poly::derivative() const {
    Poly d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d.coeffs_.push_back(Rational(static_cast<long>(i)) * coeffs_[i]);
    d.trim();
    return d;
}

Rational Poly::eval(const Rational& at) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return Poly();
    Poly out;
    out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return out; // product of nonzero polynomials never needs trimming over a field
}

Poly& Poly::operator*=(const Poly& rhs) {
    *this = *this * rhs;
    return *this;
}

Poly& Poly::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << to_string(mag);
        } else {
            if (mag != 1) os << to_string(mag) << "*";
            os << "s";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << p.str();
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    Poly q;
    Poly r = a;
    const int db = *b.degree();
    const Rational& lb = b.leading_coeff();
    while (!r.is_zero() && *r.degree() >= db) {
        const int shift = *r.degree() - db;
        Rational c = r.leading_coeff() / lb;
        Poly term = Poly::monomial(shift, c);
        q += term;
        r -= term * b;
    }
    return {q, r};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw Error("gcd of two zero polynomials");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

} // namespace agc
