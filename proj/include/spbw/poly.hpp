#ifndef SPBW_POLY_HPP
#define SPBW_POLY_HPP

#include <memory>
#include <string>

#include "spbw/presentation.hpp"

namespace spbw {

// lm/lc/lt of a polynomial; zero carries the (0,0,0) sentinel.
struct LeadingData {
    bool zero = true;
    Exp lm;
    CPoly lc;
};

// Element of A in canonical PBW normal form: terms sorted strictly
// descending under the presentation's monomial order, coefficients on the
// left. Immutable value type.
class NCPoly {
  public:
    NCPoly() = default;
    explicit NCPoly(std::shared_ptr<const Presentation> pres) : pres_(std::move(pres)) {}

    static NCPoly zero(std::shared_ptr<const Presentation> pres) { return NCPoly(std::move(pres)); }
    static NCPoly one(std::shared_ptr<const Presentation> pres);
    static NCPoly coeff(std::shared_ptr<const Presentation> pres, CPoly c);
    static NCPoly monomial(std::shared_ptr<const Presentation> pres, Exp e, CPoly c);
    static NCPoly variable(std::shared_ptr<const Presentation> pres, size_t i);
    static NCPoly from_terms(std::shared_ptr<const Presentation> pres, TermList terms);

    const std::shared_ptr<const Presentation>& pres() const { return pres_; }
    const TermList& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const; // -1 for zero

    LeadingData leading_data() const;
    const Exp& lm_exp() const;  // requires nonzero
    const CPoly& lc() const;    // requires nonzero

    NCPoly operator-() const;
    friend NCPoly operator+(const NCPoly& a, const NCPoly& b);
    friend NCPoly operator-(const NCPoly& a, const NCPoly& b);
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    NCPoly& operator+=(const NCPoly& o) { return *this = *this + o; }
    NCPoly& operator-=(const NCPoly& o) { return *this = *this - o; }

    // left coefficient action r*f
    NCPoly left_scale(const CPoly& r) const;

    friend bool operator==(const NCPoly& a, const NCPoly& b);
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    // canonical rendering: terms descending, coefficient first, variables in
    // declared order with ^ exponents, e.g. (3*x2)*D1 + (3*x1*x2)
    std::string str() const;

  private:
    std::shared_ptr<const Presentation> pres_;
    TermList terms_;
};

void require_same_presentation(const NCPoly& a, const NCPoly& b);

} // namespace spbw

#endif
