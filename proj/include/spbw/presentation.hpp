#ifndef SPBW_PRESENTATION_HPP
#define SPBW_PRESENTATION_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spbw/coeffring.hpp"
#include "spbw/order.hpp"

namespace spbw {

// sigma_i given by generator images; bijectivity is certified by
// user-supplied inverse images, checked on both composites.
struct TwistMap {
    std::vector<CPoly> images;         // image of t_k under sigma_i
    std::vector<CPoly> inverse_images; // image of t_k under sigma_i^{-1}
};

struct SkewDerivation {
    std::vector<CPoly> images; // delta_i(t_k)
};

// d_ij = c0 + sum_k cvar[k] * x_k, the degree <= 1 tail of x_j x_i.
struct LinearTail {
    CPoly c0;
    std::vector<CPoly> cvar;
    bool is_zero() const;
};

// normal-form term list: (exponent, coefficient), descending, canonical
using TermList = std::vector<std::pair<Exp, CPoly>>;

struct PresentationSpec {
    std::shared_ptr<const CoeffRing> ring;
    std::vector<std::string> vars;
    std::optional<MonomialOrder> order;               // default: deglex, declaration precedence
    std::map<size_t, TwistMap> sigma;                 // default: identity
    std::map<size_t, SkewDerivation> delta;           // default: zero
    std::map<std::pair<size_t, size_t>, std::pair<CPoly, LinearTail>> relations; // (i,j), i<j
};

struct ValidationReport {
    bool ok = false;
    bool quasi_commutative = false;
    std::vector<std::string> issues;
    std::string str() const;
};

// A bijective skew PBW extension sigma(R)<x_1..x_n>: immutable once built,
// with memoized structure data. x_i r = sigma_i(r) x_i + delta_i(r) and
// x_j x_i = c_ij x_i x_j + d_ij for i < j.
class Presentation : public std::enable_shared_from_this<Presentation> {
  public:
    // Validates the axioms; returns (presentation, report). The presentation
    // is null when validation fails. The report lists each failed axiom.
    static std::pair<std::shared_ptr<const Presentation>, ValidationReport>
    build(PresentationSpec spec);

    const std::shared_ptr<const CoeffRing>& ring() const { return ring_; }
    size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& var_names() const { return vars_; }
    const MonomialOrder& order() const { return order_; }
    bool quasi_commutative() const { return quasi_commutative_; }

    const CPoly& c(size_t i, size_t j) const;      // i < j
    const LinearTail& d(size_t i, size_t j) const; // i < j

    CPoly sigma(size_t i, const CPoly& r) const;
    CPoly sigma_inv(size_t i, const CPoly& r) const;
    CPoly delta(size_t i, const CPoly& r) const;

    // sigma^alpha = sigma_1^{a1} ... sigma_n^{an}, rightmost factor applied first
    CPoly sigma_alpha(const Exp& alpha, const CPoly& r) const;

    // x^alpha x^beta = c_{alpha,beta} x^{alpha+beta} + p_{alpha,beta};
    // computed by multiplying in the engine and splitting the top term; memoized.
    std::pair<CPoly, TermList> structure_constants(const Exp& alpha, const Exp& beta) const;

    // same c_ij and sigma_i, all delta_i and d_ij zeroed
    std::shared_ptr<const Presentation> associated_quasicommutative() const;

    // --- multiplication kernels (used by the poly layer) ---
    TermList mono_times_var(const Exp& alpha, size_t i) const; // x^alpha * x_i, memoized
    TermList mono_times_coeff(const Exp& alpha, const CPoly& c) const; // x^alpha * c
    TermList mul_terms(const TermList& f, const TermList& g) const;

    TermList canonicalize(TermList terms) const;

  private:
    Presentation() = default;

    TermList terms_times_var(const TermList& f, size_t i) const;
    TermList terms_times_coeff_right(const TermList& f, const CPoly& c) const;

    std::shared_ptr<const CoeffRing> ring_;
    std::vector<std::string> vars_;
    MonomialOrder order_;
    std::vector<TwistMap> sigma_;
    std::vector<SkewDerivation> delta_;
    std::vector<std::vector<CPoly>> c_;      // c_[i][j], i < j
    std::vector<std::vector<LinearTail>> d_; // d_[i][j], i < j
    bool quasi_commutative_ = false;

    mutable std::mutex cache_mu_;
    mutable std::map<std::pair<Exp, size_t>, TermList> mono_var_cache_;
    mutable std::map<std::pair<Exp, Exp>, std::pair<CPoly, TermList>> struct_cache_;
};

} // namespace spbw

#endif
