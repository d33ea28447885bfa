#ifndef SPBW_ORDER_HPP
#define SPBW_ORDER_HPP

#include <string>
#include <vector>

#include "spbw/exponent.hpp"

namespace spbw {

enum class OrderKind { Deglex, Degrevlex };

// Degree-compatible monomial order on Mon(A) with an explicit variable
// precedence permutation (precedence[0] is the strongest variable index).
// Plain lex is not constructible: only degree-compatible kinds exist.
class MonomialOrder {
  public:
    MonomialOrder() : kind_(OrderKind::Deglex) {}
    MonomialOrder(OrderKind kind, std::vector<int> precedence);

    static MonomialOrder deglex(size_t nvars);

    OrderKind kind() const { return kind_; }
    const std::vector<int>& precedence() const { return precedence_; }
    size_t nvars() const { return precedence_.size(); }

    // -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Exp& a, const Exp& b) const;
    bool less(const Exp& a, const Exp& b) const { return compare(a, b) < 0; }

    std::string str(const std::vector<std::string>& names) const;

  private:
    OrderKind kind_;
    std::vector<int> precedence_;
};

// TOP:    monomial first, larger component index wins ties (e_m > ... > e_1).
// TOPREV: monomial first, smaller component index wins ties (e_1 > ... > e_m).
// PosElim is an internal elimination scheme (component index first, lowest
// strongest); used for coefficient-ring syzygy extraction, never exposed in
// input files.
enum class ModuleScheme { TOP, TOPREV, PosElim };

class ModuleOrder {
  public:
    ModuleOrder() : scheme_(ModuleScheme::TOPREV) {}
    ModuleOrder(MonomialOrder base, ModuleScheme scheme)
        : base_(std::move(base)), scheme_(scheme) {}

    const MonomialOrder& base() const { return base_; }
    ModuleScheme scheme() const { return scheme_; }

    int compare(const Exp& a, int ia, const Exp& b, int ib) const;
    bool less(const Exp& a, int ia, const Exp& b, int ib) const {
        return compare(a, ia, b, ib) < 0;
    }

  private:
    MonomialOrder base_;
    ModuleScheme scheme_;
};

} // namespace spbw

#endif
