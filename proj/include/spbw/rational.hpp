#ifndef SPBW_RATIONAL_HPP
#define SPBW_RATIONAL_HPP

#include <gmpxx.h>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace spbw {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResourceLimit : Error {
    using Error::Error;
};

// a well-posed computation with a negative mathematical answer that is not
// reported through a result value (no inverse, stability not decided, ...)
struct MathError : Error {
    using Error::Error;
};

// Exact rational scalar, always in canonical form (reduced, positive denominator).
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den);

    // Accepts "p", "-p", "p/q".
    static Rational parse(const std::string& text);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational inverse() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

} // namespace spbw

#endif
