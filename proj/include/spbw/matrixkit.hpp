#ifndef SPBW_MATRIXKIT_HPP
#define SPBW_MATRIXKIT_HPP

#include <optional>
#include <vector>

#include "spbw/modules.hpp"

namespace spbw {

// Rectangular matrix over A, using the column convention for homomorphism
// matrices: F in M_{r x s} represents f: A^s -> A^r acting by
// f(a) = (a^T F^T)^T, i.e. unknowns multiply from the left.
class MatrixOverA {
  public:
    MatrixOverA() : rows_(0), cols_(0) {}
    MatrixOverA(std::shared_ptr<const Presentation> pres, size_t rows, size_t cols);

    static MatrixOverA identity(std::shared_ptr<const Presentation> pres, size_t n);
    static MatrixOverA from_rows(std::shared_ptr<const Presentation> pres,
                                 std::vector<std::vector<NCPoly>> rows);

    const std::shared_ptr<const Presentation>& pres() const { return pres_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    const NCPoly& at(size_t i, size_t j) const;
    NCPoly& at(size_t i, size_t j);

    MatrixOverA transpose() const;
    friend MatrixOverA operator*(const MatrixOverA& a, const MatrixOverA& b);
    friend MatrixOverA operator-(const MatrixOverA& a, const MatrixOverA& b);
    bool is_identity() const;
    bool is_zero() const;
    friend bool operator==(const MatrixOverA& a, const MatrixOverA& b);

    // true when every entry is a constant scalar
    bool is_scalar() const;

    std::string str() const; // [[...], [...]] rows

  private:
    std::shared_ptr<const Presentation> pres_;
    size_t rows_, cols_;
    std::vector<NCPoly> entries_; // row-major
};

// F^T F^T == F^T entrywise; requires F square.
bool is_idempotent_transpose(const MatrixOverA& F);

// X with X F = I_s for F of size r x s, r >= s, via certificate-tracked
// module Groebner bases of the rows of F; nullopt when some e_i is not in
// the left row module.
std::optional<MatrixOverA> left_inverse(const MatrixOverA& F);

struct UnimodularResult {
    bool unimodular = false;
    std::vector<NCPoly> certificate; // row (b_1..b_r) with sum b_i v_i = 1
};

// 1 in the left ideal of the entries; realized through the ideal engine so
// it cross-checks left_inverse on one-column inputs.
UnimodularResult is_unimodular_column(const MatrixOverA& v);

struct IdempotentDiagonalization {
    MatrixOverA u;         // U F U^{-1} = diag(0_{s-r}, I_r)
    MatrixOverA u_inverse;
    size_t rank = 0;
};

// Constructive diagonalization of an idempotent matrix with entries in the
// coefficient field (zero variables): the local-ring elimination matrices
// plus a final permutation conjugation into the canonical block order.
IdempotentDiagonalization idempotent_diagonalize_division(const MatrixOverA& F);

// Verifies U G1^T = [I_s; 0] and that U^T is invertible (left inverse checked
// on both composites), then returns the last r-s columns of U^T as the free
// basis of M = ker(g1). G1 is s x r; the trivial split r == s yields an
// empty basis.
std::vector<std::vector<NCPoly>> extract_free_basis(const MatrixOverA& G1, const MatrixOverA& U);

// v unimodular with a unit entry: U = product of elementary row operations
// (swap, unit scaling, eliminations) with U v = e_1.
// Throws Error("stability not decided") when no entry is a unit of A.
MatrixOverA complete_unimodular_unit_entry(const MatrixOverA& v);

} // namespace spbw

#endif
