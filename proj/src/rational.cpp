#include "polyrank/rational.hpp"

#include <cctype>
#include <ostream>

#include "polyrank/errors.hpp"

namespace polyrank {

Rational::Rational(long num, long den) : v_(static_cast<signed long>(num), static_cast<signed long>(den)) {
    require(den != 0, "rational denominator must be nonzero");
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    // shape: -?digits(/digits)?   (sign only on the numerator)
    size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    size_t num_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    require(i > num_begin, "invalid rational literal '" + s + "'");
    if (i < s.size()) {
        require(s[i] == '/', "invalid rational literal '" + s + "'");
        ++i;
        size_t den_begin = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        require(i > den_begin && i == s.size(), "invalid rational literal '" + s + "'");
        mpz_class den(s.substr(den_begin));
        require(sgn(den) != 0, "zero denominator in rational literal '" + s + "'");
        mpz_class num(s.substr(0, den_begin - 1));
        return Rational(mpq_class(num, den));
    }
    return Rational(mpq_class(mpz_class(s)));
}

std::string Rational::to_string() const {
    return v_.get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    ensure(!o.is_zero(), "rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::reciprocal() const {
    ensure(!is_zero(), "reciprocal of zero");
    return Rational(mpq_class(1) / v_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

} // namespace polyrank
