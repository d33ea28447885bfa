#ifndef SPBW_COEFFRING_HPP
#define SPBW_COEFFRING_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "spbw/cpoly.hpp"

namespace spbw {

class Presentation;

// The left Groebner soluble coefficient ring: QQ (no generators) or
// QQ[t1..tm]. Left-ideal membership comes with certificates, and syzygy
// modules come with finite generating sets, which is all the skew engine
// needs from its scalars.
//
// Certificate policy (documented, deterministic):
//  * over QQ, divide_member solves the linear equation with the leftmost
//    usable pivot: the first generator absorbs the target, later ones get 0;
//  * over QQ[t1..tm], when the target and every generator are monomials and
//    each generator's monomial divides the target's, the certificate is the
//    spread form b_j = lam_j * t^(mu - beta_j) whose rational multipliers
//    follow the arithmetic progression lam_j = -(deg + j - m - 1)/2 for
//    j = 2..m, the first generator absorbing the balance;
//  * any other instance over QQ[t1..tm] goes through a certificate-tracked
//    Groebner basis of the generators (the ring self-hosts on the
//    trivial-twist instance of the skew engine) followed by division.
//  * syzygy generators over QQ are the pivot-pair tuples (1/w_p) e_p -
//    (1/w_j) e_j; over QQ[t1..tm] they are read off a position-tagged module
//    Groebner basis of the rows (r_i, e_i).
class CoeffRing : public std::enable_shared_from_this<CoeffRing> {
  public:
    static std::shared_ptr<const CoeffRing> rationals();
    static std::shared_ptr<const CoeffRing> polynomials(std::vector<std::string> generators);

    size_t generator_count() const { return gens_.size(); }
    const std::vector<std::string>& generator_names() const { return gens_; }
    bool is_field() const { return gens_.empty(); }

    CPoly zero() const { return CPoly(gens_.size()); }
    CPoly one() const { return CPoly::constant(gens_.size(), Rational(1)); }
    CPoly constant(Rational c) const { return CPoly::constant(gens_.size(), std::move(c)); }
    CPoly generator(size_t k) const { return CPoly::generator(gens_.size(), k); }

    // Certificate (b_1..b_m) with a = sum b_i * gens_i, or nullopt when a is
    // not in the left ideal of gens. Throws on an empty generator list.
    std::optional<std::vector<CPoly>> divide_member(const CPoly& a,
                                                    const std::vector<CPoly>& gens) const;

    // Finite generating set of Syz[gens]: every tuple annihilates gens
    // exactly. Deterministic for fixed input.
    std::vector<std::vector<CPoly>> syzygy_generators(const std::vector<CPoly>& gens) const;

    // r^{-1} when r is a unit (nonzero rational; degree-0 nonzero polynomial).
    std::optional<CPoly> unit_inverse(const CPoly& r) const;

    std::string str() const;

  private:
    explicit CoeffRing(std::vector<std::string> gens) : gens_(std::move(gens)) {}

    // trivial-twist presentation backing the self-hosted paths
    std::shared_ptr<const Presentation> twist() const;

    std::optional<std::vector<CPoly>> divide_member_field(const CPoly& a,
                                                          const std::vector<CPoly>& gens) const;
    std::optional<std::vector<CPoly>> spread_certificate(const CPoly& a,
                                                         const std::vector<CPoly>& gens) const;

    std::vector<std::string> gens_;
    mutable std::shared_ptr<const Presentation> twist_;
    mutable std::mutex twist_mu_;
};

} // namespace spbw

#endif
