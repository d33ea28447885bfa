#include "spbw/rational.hpp"

#include <ostream>

namespace spbw {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0)
        throw Error("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(text);
            mpq_class v(n);
            return Rational(std::move(v));
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (den == 0)
            throw Error("rational with zero denominator: " + text);
        mpq_class v(num, den);
        v.canonicalize();
        return Rational(std::move(v));
    } catch (const std::invalid_argument&) {
        throw Error("bad rational literal: " + text);
    }
}

Rational Rational::inverse() const {
    if (is_zero())
        throw Error("inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }
Rational& Rational::operator+=(const Rational& o) { v_ += o.v_; return *this; }
Rational& Rational::operator-=(const Rational& o) { v_ -= o.v_; return *this; }
Rational& Rational::operator*=(const Rational& o) { v_ *= o.v_; return *this; }
Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw Error("division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace spbw
