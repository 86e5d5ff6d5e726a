#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "polyrank/rational.hpp"

namespace polyrank {

// Degree of a polynomial: a nonnegative integer, or negative infinity for
// the zero polynomial.  Negative infinity compares below every finite value
// and is absorbing under addition.
class Degree {
public:
    static Degree neg_inf() { return Degree(0, false); }
    static Degree of(int v) { return Degree(v, true); }

    bool is_finite() const { return finite_; }
    int value() const; // requires finite

    Degree operator+(const Degree& o) const {
        if (!finite_ || !o.finite_) return neg_inf();
        return of(v_ + o.v_);
    }
    Degree operator+(int k) const { return finite_ ? of(v_ + k) : neg_inf(); }

    friend bool operator==(const Degree& a, const Degree& b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.v_ == b.v_);
    }
    friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
        if (a.finite_ != b.finite_)
            return a.finite_ ? std::strong_ordering::greater : std::strong_ordering::less;
        if (!a.finite_) return std::strong_ordering::equal;
        return a.v_ <=> b.v_;
    }
    friend bool operator==(const Degree& a, int b) { return a.finite_ && a.v_ == b; }

    std::string to_string() const;

private:
    Degree(int v, bool finite) : v_(v), finite_(finite) {}
    int v_;
    bool finite_;
};

// Univariate polynomial with rational coefficients, stored as an ascending
// coefficient list with no trailing zeros (so the zero polynomial is the
// empty list).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> ascending_coeffs);

    static Poly zero() { return Poly(); }
    static Poly one() { return constant(Rational(1)); }
    static Poly constant(const Rational& c);
    // c * x^k
    static Poly monomial(int k, const Rational& c = Rational(1));

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    Degree degree() const {
        return c_.empty() ? Degree::neg_inf() : Degree::of(static_cast<int>(c_.size()) - 1);
    }
    // Coefficient of x^k; zero beyond the stored range.
    const Rational& coeff(int k) const;
    const Rational& leading() const; // requires nonzero
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const Rational& c) const;
    Poly shifted(int k) const; // multiply by x^k, k >= 0
    Poly monic() const;        // requires nonzero

    Rational eval(const Rational& x) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    std::string to_display() const;

private:
    std::vector<Rational> c_;
    void normalize();
};

// Euclidean division a = q*b + r with deg r < deg b.  b must be nonzero.
std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b);

// Monic greatest common divisor; gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

// x^grade * p(1/x) for grade >= deg p.
Poly poly_reverse(const Poly& p, int grade);

// Total order used for canonical sorting: by degree, then by coefficients
// from the highest power down.
std::strong_ordering poly_order(const Poly& a, const Poly& b);

} // namespace polyrank
