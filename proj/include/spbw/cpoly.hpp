#ifndef SPBW_CPOLY_HPP
#define SPBW_CPOLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spbw/exponent.hpp"
#include "spbw/rational.hpp"

namespace spbw {

// Element of the coefficient ring: a commutative polynomial with exact
// rational coefficients in generators t_1..t_m (m = 0 gives plain QQ).
// Canonical form: terms sorted descending under deglex on the generators,
// no zero coefficients, no duplicate exponents; zero is the empty sum.
class CPoly {
  public:
    using Term = std::pair<Exp, Rational>;

    CPoly() : nvars_(0) {}
    explicit CPoly(size_t nvars) : nvars_(nvars) {}

    static CPoly constant(size_t nvars, Rational c);
    static CPoly generator(size_t nvars, size_t k, Rational c = Rational(1));
    static CPoly monomial(size_t nvars, Exp e, Rational c);
    static CPoly from_terms(size_t nvars, std::vector<Term> terms);

    size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    // total degree; -1 for the zero polynomial
    int degree() const;

    const std::vector<Term>& terms() const { return terms_; }
    // leading term under the internal deglex order; requires nonzero
    const Exp& lead_exp() const;
    const Rational& lead_coeff() const;
    Rational constant_value() const; // requires is_constant()

    CPoly operator-() const;
    friend CPoly operator+(const CPoly& a, const CPoly& b);
    friend CPoly operator-(const CPoly& a, const CPoly& b);
    friend CPoly operator*(const CPoly& a, const CPoly& b);
    CPoly& operator+=(const CPoly& o) { return *this = *this + o; }
    CPoly& operator-=(const CPoly& o) { return *this = *this - o; }
    CPoly& operator*=(const CPoly& o) { return *this = *this * o; }

    CPoly scaled(const Rational& c) const;

    friend bool operator==(const CPoly& a, const CPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const CPoly& a, const CPoly& b) { return !(a == b); }
    // total order for use as a map key / deterministic sorting
    friend bool operator<(const CPoly& a, const CPoly& b);

    // substitute images[k] for generator t_k (ring homomorphism over QQ)
    CPoly substitute(const std::vector<CPoly>& images) const;

    std::string str(const std::vector<std::string>& names) const;

  private:
    void normalize();

    size_t nvars_;
    std::vector<Term> terms_;
};

// deglex on coefficient-generator exponents (natural precedence), used for
// the canonical term order inside CPoly
int cexp_compare(const Exp& a, const Exp& b);

} // namespace spbw

#endif
