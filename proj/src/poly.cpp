#include "polyrank/poly.hpp"

#include <algorithm>

#include "polyrank/errors.hpp"

namespace polyrank {

int Degree::value() const {
    ensure(finite_, "degree of the zero polynomial has no finite value");
    return v_;
}

std::string Degree::to_string() const {
    return finite_ ? std::to_string(v_) : std::string("-inf");
}

Poly::Poly(std::vector<Rational> ascending_coeffs) : c_(std::move(ascending_coeffs)) {
    normalize();
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Rational& c) {
    Poly p;
    if (!c.is_zero()) p.c_ = {c};
    return p;
}

Poly Poly::monomial(int k, const Rational& c) {
    require(k >= 0, "monomial exponent must be nonnegative");
    Poly p;
    if (!c.is_zero()) {
        p.c_.assign(static_cast<size_t>(k) + 1, Rational(0));
        p.c_.back() = c;
    }
    return p;
}

const Rational& Poly::coeff(int k) const {
    static const Rational kZero(0);
    if (k < 0 || static_cast<size_t>(k) >= c_.size()) return kZero;
    return c_[static_cast<size_t>(k)];
}

const Rational& Poly::leading() const {
    ensure(!c_.empty(), "leading coefficient of the zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            out[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Poly(std::move(out));
}

Poly Poly::scaled(const Rational& c) const {
    if (c.is_zero()) return Poly::zero();
    Poly r = *this;
    for (auto& x : r.c_) x *= c;
    return r;
}

Poly Poly::shifted(int k) const {
    require(k >= 0, "shift exponent must be nonnegative");
    if (is_zero() || k == 0) return *this;
    Poly r;
    r.c_.assign(static_cast<size_t>(k), Rational(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

Poly Poly::monic() const {
    ensure(!is_zero(), "cannot normalize the zero polynomial to monic");
    return scaled(leading().reciprocal());
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b) {
    require(!b.is_zero(), "polynomial division by zero");
    Poly q;
    Poly r = a;
    const int db = b.degree().value();
    const Rational lb_inv = b.leading().reciprocal();
    while (!r.is_zero() && r.degree().value() >= db) {
        int k = r.degree().value() - db;
        Rational c = r.leading() * lb_inv;
        Poly t = Poly::monomial(k, c);
        q += t;
        r -= t * b;
    }
    return {q, r};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_divrem(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? Poly::zero() : x.monic();
}

Poly poly_reverse(const Poly& p, int grade) {
    require(grade >= 0, "grade must be nonnegative");
    if (p.is_zero()) return Poly::zero();
    require(p.degree().value() <= grade, "grade smaller than polynomial degree");
    std::vector<Rational> out(static_cast<size_t>(grade) + 1, Rational(0));
    for (int k = 0; k <= p.degree().value(); ++k)
        out[static_cast<size_t>(grade - k)] = p.coeff(k);
    return Poly(std::move(out));
}

std::strong_ordering poly_order(const Poly& a, const Poly& b) {
    if (auto c = a.degree() <=> b.degree(); c != std::strong_ordering::equal) return c;
    if (a.is_zero()) return std::strong_ordering::equal;
    for (int k = a.degree().value(); k >= 0; --k) {
        if (auto c = a.coeff(k) <=> b.coeff(k); c != std::strong_ordering::equal) return c;
    }
    return std::strong_ordering::equal;
}

std::string Poly::to_display() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree().value(); k >= 0; --k) {
        const Rational& c = coeff(k);
        if (c.is_zero()) continue;
        Rational mag = c.abs();
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        bool unit = mag.is_one();
        if (k == 0) {
            out += mag.to_string();
        } else {
            if (!unit) out += mag.to_string();
            out += "\xce\xbb"; // lambda
            if (k != 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

} // namespace polyrank
