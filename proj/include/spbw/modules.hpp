#ifndef SPBW_MODULES_HPP
#define SPBW_MODULES_HPP

#include <optional>
#include <vector>

#include "spbw/groebner.hpp"
#include "spbw/poly.hpp"

namespace spbw {

// Element of A^m as one flat tagged term list (coefficient, exponent,
// component index), sorted descending under the active module order.
class ModVec {
  public:
    struct Term {
        Exp e;
        size_t idx; // 0-based component (printed as e1..em)
        CPoly c;
        friend bool operator==(const Term& a, const Term& b) {
            return a.e == b.e && a.idx == b.idx && a.c == b.c;
        }
    };

    ModVec() : m_(0) {}
    ModVec(std::shared_ptr<const Presentation> pres, size_t m,
           ModuleScheme scheme = ModuleScheme::TOPREV);

    static ModVec unit(std::shared_ptr<const Presentation> pres, size_t m, size_t idx,
                       ModuleScheme scheme = ModuleScheme::TOPREV);
    static ModVec from_components(std::vector<NCPoly> comps,
                                  ModuleScheme scheme = ModuleScheme::TOPREV);
    static ModVec from_terms(std::shared_ptr<const Presentation> pres, size_t m,
                             std::vector<Term> terms, ModuleScheme scheme);

    const std::shared_ptr<const Presentation>& pres() const { return pres_; }
    size_t m() const { return m_; }
    ModuleScheme scheme() const { return scheme_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;

    const Term& lt() const; // requires nonzero
    NCPoly component(size_t idx) const;

    ModVec operator-() const;
    friend ModVec operator+(const ModVec& a, const ModVec& b);
    friend ModVec operator-(const ModVec& a, const ModVec& b);
    ModVec& operator+=(const ModVec& o) { return *this = *this + o; }
    ModVec& operator-=(const ModVec& o) { return *this = *this - o; }

    friend ModVec operator*(const NCPoly& f, const ModVec& v); // left action

    friend bool operator==(const ModVec& a, const ModVec& b);
    friend bool operator!=(const ModVec& a, const ModVec& b) { return !(a == b); }

    std::string str() const; // linear combination of e1..em

  private:
    void canonicalize();

    std::shared_ptr<const Presentation> pres_;
    size_t m_;
    ModuleScheme scheme_;
    std::vector<Term> terms_;
};

struct ModDivisionResult {
    std::vector<NCPoly> quotients;
    ModVec remainder;
    std::vector<std::string> trace;
};

ModDivisionResult mod_divide(const ModVec& v, const std::vector<ModVec>& divisors,
                             const DivisionOptions& opt = {});

std::optional<ModVec> mod_reduce_once(const ModVec& v, const std::vector<ModVec>& F);

// X_F is zero (empty result) unless all leading indices agree.
struct ModBFData {
    bool nonzero = false;
    size_t index = 0;
    Exp xf_exp;
    std::vector<Exp> gammas;
    std::vector<CPoly> scaled_lcs;
    std::vector<std::vector<CPoly>> generators;
};

ModBFData mod_bf_set(const std::vector<ModVec>& F);

struct ModBuchbergerResult {
    std::vector<ModVec> basis;
    std::vector<std::vector<NCPoly>> certificates;
    size_t rounds = 0;
    std::vector<std::string> trace;
};

ModBuchbergerResult mod_buchberger(const std::vector<ModVec>& gens,
                                   const BuchbergerOptions& opt = {});

struct ModMembershipResult {
    bool member = false;
    std::vector<NCPoly> certificate;
};

ModMembershipResult mod_is_member(const ModVec& v, const std::vector<ModVec>& G);

} // namespace spbw

#endif
