#include "spbw/matrixkit.hpp"

#include <algorithm>

namespace spbw {

MatrixOverA::MatrixOverA(std::shared_ptr<const Presentation> pres, size_t rows, size_t cols)
    : pres_(std::move(pres)), rows_(rows), cols_(cols),
      entries_(rows * cols, NCPoly::zero(pres_)) {
    if (!rows || !cols) throw Error("matrix must be nonempty");
}

MatrixOverA MatrixOverA::identity(std::shared_ptr<const Presentation> pres, size_t n) {
    MatrixOverA m(pres, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = NCPoly::one(pres);
    return m;
}

MatrixOverA MatrixOverA::from_rows(std::shared_ptr<const Presentation> pres,
                                   std::vector<std::vector<NCPoly>> rows) {
    if (rows.empty() || rows.front().empty()) throw Error("matrix must be nonempty");
    MatrixOverA m(pres, rows.size(), rows.front().size());
    for (size_t i = 0; i < m.rows_; ++i) {
        if (rows[i].size() != m.cols_) throw Error("matrix rows must have equal length");
        for (size_t j = 0; j < m.cols_; ++j) {
            require_same_presentation(rows[i][j], NCPoly::zero(pres));
            m.at(i, j) = std::move(rows[i][j]);
        }
    }
    return m;
}

const NCPoly& MatrixOverA::at(size_t i, size_t j) const {
    if (i >= rows_ || j >= cols_) throw Error("matrix index out of range");
    return entries_[i * cols_ + j];
}

NCPoly& MatrixOverA::at(size_t i, size_t j) {
    if (i >= rows_ || j >= cols_) throw Error("matrix index out of range");
    return entries_[i * cols_ + j];
}

MatrixOverA MatrixOverA::transpose() const {
    MatrixOverA t(pres_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

MatrixOverA operator*(const MatrixOverA& a, const MatrixOverA& b) {
    if (a.pres_ != b.pres_) throw Error("matrix presentations differ");
    if (a.cols_ != b.rows_) throw Error("matrix shape mismatch in product");
    MatrixOverA r(a.pres_, a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t j = 0; j < b.cols_; ++j) {
            NCPoly acc = NCPoly::zero(a.pres_);
            for (size_t k = 0; k < a.cols_; ++k) acc += a.at(i, k) * b.at(k, j);
            r.at(i, j) = std::move(acc);
        }
    return r;
}

MatrixOverA operator-(const MatrixOverA& a, const MatrixOverA& b) {
    if (a.pres_ != b.pres_ || a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error("matrix shape mismatch");
    MatrixOverA r(a.pres_, a.rows_, a.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
    return r;
}

bool MatrixOverA::is_identity() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            const NCPoly& e = at(i, j);
            if (i == j) {
                if (e.terms().size() != 1 || !exp_is_zero(e.lm_exp()) || !e.lc().is_one())
                    return false;
            } else if (!e.is_zero()) {
                return false;
            }
        }
    return true;
}

bool MatrixOverA::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const NCPoly& e) { return e.is_zero(); });
}

bool operator==(const MatrixOverA& a, const MatrixOverA& b) {
    return a.pres_ == b.pres_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
}

bool MatrixOverA::is_scalar() const {
    for (const auto& e : entries_) {
        if (e.is_zero()) continue;
        if (e.terms().size() != 1 || !exp_is_zero(e.lm_exp()) || !e.lc().is_constant())
            return false;
    }
    return true;
}

std::string MatrixOverA::str() const {
    std::string s = "[";
    for (size_t i = 0; i < rows_; ++i) {
        s += i ? ", [" : "[";
        for (size_t j = 0; j < cols_; ++j) {
            if (j) s += ", ";
            s += at(i, j).str();
        }
        s += "]";
    }
    return s + "]";
}

bool is_idempotent_transpose(const MatrixOverA& F) {
    if (F.rows() != F.cols()) throw Error("idempotence check needs a square matrix");
    MatrixOverA ft = F.transpose();
    return (ft * ft) == ft;
}

std::optional<MatrixOverA> left_inverse(const MatrixOverA& F) {
    const size_t r = F.rows(), s = F.cols();
    if (r < s) throw Error("left inverse needs r >= s");
    const auto& pres = F.pres();

    // rows of F generate the relevant left submodule of A^s
    std::vector<ModVec> rows;
    std::vector<size_t> row_of;
    for (size_t i = 0; i < r; ++i) {
        std::vector<NCPoly> comps;
        for (size_t j = 0; j < s; ++j) comps.push_back(F.at(i, j));
        ModVec v = ModVec::from_components(comps);
        if (v.is_zero()) continue; // zero rows contribute nothing
        rows.push_back(std::move(v));
        row_of.push_back(i);
    }
    if (rows.empty()) return std::nullopt;

    BuchbergerOptions opt;
    opt.track = true;
    ModBuchbergerResult gb = mod_buchberger(rows, opt);

    MatrixOverA X(pres, s, r);
    for (size_t i = 0; i < s; ++i) {
        ModVec ei = ModVec::unit(pres, s, i);
        ModDivisionResult div = mod_divide(ei, gb.basis);
        if (!div.remainder.is_zero()) return std::nullopt;
        for (size_t k = 0; k < gb.basis.size(); ++k) {
            if (div.quotients[k].is_zero()) continue;
            for (size_t t = 0; t < rows.size(); ++t) {
                NCPoly contrib = div.quotients[k] * gb.certificates[k][t];
                if (!contrib.is_zero()) X.at(i, row_of[t]) += contrib;
            }
        }
    }
    if (!(X * F).is_identity())
        throw Error("internal: left inverse certificate failed verification");
    return X;
}

UnimodularResult is_unimodular_column(const MatrixOverA& v) {
    if (v.cols() != 1) throw Error("unimodularity check needs a column");
    const auto& pres = v.pres();
    UnimodularResult out;

    std::vector<NCPoly> entries;
    std::vector<size_t> at;
    for (size_t i = 0; i < v.rows(); ++i)
        if (!v.at(i, 0).is_zero()) {
            entries.push_back(v.at(i, 0));
            at.push_back(i);
        }
    if (entries.empty()) throw Error("unimodularity check needs a nonzero column");

    BuchbergerOptions opt;
    opt.track = true;
    BuchbergerResult gb = buchberger(entries, opt);
    MembershipResult mem = is_member(NCPoly::one(pres), gb.basis);
    out.unimodular = mem.member;
    out.certificate.assign(v.rows(), NCPoly::zero(pres));
    if (!mem.member) return out;
    for (size_t k = 0; k < gb.basis.size(); ++k) {
        if (mem.certificate[k].is_zero()) continue;
        for (size_t t = 0; t < entries.size(); ++t) {
            NCPoly contrib = mem.certificate[k] * gb.certificates[k][t];
            if (!contrib.is_zero()) out.certificate[at[t]] += contrib;
        }
    }
    // exactness check: sum b_i v_i = 1
    NCPoly acc = NCPoly::zero(pres);
    for (size_t i = 0; i < v.rows(); ++i) acc += out.certificate[i] * v.at(i, 0);
    if (acc != NCPoly::one(pres))
        throw Error("internal: unimodularity certificate failed verification");
    return out;
}

namespace {

Rational scalar_of(const NCPoly& e) {
    if (e.is_zero()) return Rational(0);
    if (e.terms().size() != 1 || !exp_is_zero(e.lm_exp()) || !e.lc().is_constant())
        throw Error("matrix entry is not a scalar");
    return e.lc().constant_value();
}

std::vector<std::vector<Rational>> scalar_matrix(const MatrixOverA& F) {
    std::vector<std::vector<Rational>> m(F.rows(), std::vector<Rational>(F.cols()));
    for (size_t i = 0; i < F.rows(); ++i)
        for (size_t j = 0; j < F.cols(); ++j) m[i][j] = scalar_of(F.at(i, j));
    return m;
}

std::vector<std::vector<Rational>> qmul(const std::vector<std::vector<Rational>>& a,
                                        const std::vector<std::vector<Rational>>& b) {
    size_t n = a.size(), p = b[0].size(), k2 = b.size();
    std::vector<std::vector<Rational>> r(n, std::vector<Rational>(p, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < p; ++j) {
            Rational acc(0);
            for (size_t k = 0; k < k2; ++k) acc += a[i][k] * b[k][j];
            r[i][j] = acc;
        }
    return r;
}

MatrixOverA lift_scalar(const std::shared_ptr<const Presentation>& pres,
                        const std::vector<std::vector<Rational>>& m) {
    MatrixOverA out(pres, m.size(), m[0].size());
    const size_t gens = pres->ring()->generator_count();
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[0].size(); ++j)
            out.at(i, j) = NCPoly::coeff(pres, CPoly::constant(gens, m[i][j]));
    return out;
}

} // namespace

IdempotentDiagonalization idempotent_diagonalize_division(const MatrixOverA& Fmat) {
    if (Fmat.rows() != Fmat.cols()) throw Error("diagonalization needs a square matrix");
    if (!Fmat.is_scalar())
        throw Error("diagonalization needs entries in the coefficient field");
    const size_t s = Fmat.rows();
    auto F = scalar_matrix(Fmat);
    // idempotence
    auto F2 = qmul(F, F);
    if (F2 != F) throw MathError("matrix is not idempotent");

    auto ident = [&](size_t n) {
        std::vector<std::vector<Rational>> I(n, std::vector<Rational>(n, Rational(0)));
        for (size_t i = 0; i < n; ++i) I[i][i] = Rational(1);
        return I;
    };

    std::vector<std::vector<Rational>> U = ident(s), Uinv = ident(s);
    std::vector<int> diag; // collected 0/1 diagonal in processing order
    auto cur = F;
    // peel the leading entry with the local-ring elimination matrices
    for (size_t off = 0; off < s; ++off) {
        size_t n = s - off;
        if (n == 1) {
            diag.push_back(cur[0][0].is_zero() ? 0 : 1);
            break;
        }
        std::vector<std::vector<Rational>> G = ident(n), Ginv = ident(n);
        bool one;
        if (!cur[0][0].is_zero()) {
            // f11 invertible: G conjugates to diag(1, F')
            one = true;
            Rational inv = cur[0][0].inverse();
            for (size_t j = 1; j < n; ++j) G[0][j] = inv * cur[0][j];
            for (size_t i = 1; i < n; ++i) G[i][0] = -(cur[i][0] * inv);
            Ginv[0][0] = cur[0][0];
            for (size_t j = 1; j < n; ++j) Ginv[0][j] = -cur[0][j];
            for (size_t i = 1; i < n; ++i) {
                Ginv[i][0] = cur[i][0];
                for (size_t j = 1; j < n; ++j) {
                    Ginv[i][j] = -(cur[i][0] * inv * cur[0][j]);
                    if (i == j) Ginv[i][j] += Rational(1);
                }
            }
        } else {
            // f11 = 0, so 1 - f11 invertible: H conjugates to diag(0, F'')
            one = false;
            Rational inv = (Rational(1) - cur[0][0]).inverse();
            for (size_t j = 1; j < n; ++j) G[0][j] = -(inv * cur[0][j]);
            for (size_t i = 1; i < n; ++i) {
                G[i][0] = cur[i][0];
                for (size_t j = 1; j < n; ++j) {
                    G[i][j] = -(cur[i][0] * inv * cur[0][j]);
                    if (i == j) G[i][j] += Rational(1);
                }
            }
            Ginv[0][0] = Rational(1) - cur[0][0];
            for (size_t j = 1; j < n; ++j) Ginv[0][j] = inv * cur[0][j];
            for (size_t i = 1; i < n; ++i) Ginv[i][0] = -cur[i][0];
        }
        auto conj = qmul(qmul(G, cur), Ginv);
        diag.push_back(one ? 1 : 0);
        // embed G into the full size and accumulate
        auto Gfull = ident(s), Ginvfull = ident(s);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Gfull[off + i][off + j] = G[i][j];
                Ginvfull[off + i][off + j] = Ginv[i][j];
            }
        U = qmul(Gfull, U);
        Uinv = qmul(Uinv, Ginvfull);
        // shrink to the trailing block
        std::vector<std::vector<Rational>> next(n - 1, std::vector<Rational>(n - 1));
        for (size_t i = 1; i < n; ++i)
            for (size_t j = 1; j < n; ++j) next[i - 1][j - 1] = conj[i][j];
        cur = std::move(next);
    }

    // permutation conjugation into block-diag(0_{s-r}, I_r)
    size_t rank = 0;
    for (int dgt : diag) rank += static_cast<size_t>(dgt);
    std::vector<size_t> target(s);
    size_t zpos = 0, opos = s - rank;
    for (size_t k = 0; k < s; ++k)
        target[k] = diag[k] ? opos++ : zpos++;
    auto P = ident(s);
    for (size_t k = 0; k < s; ++k) {
        for (size_t j = 0; j < s; ++j) P[target[k]][j] = (j == k) ? Rational(1) : Rational(0);
    }
    auto Pinv = ident(s);
    for (size_t k = 0; k < s; ++k)
        for (size_t j = 0; j < s; ++j) Pinv[k][j] = (target[j] == k) ? Rational(1) : Rational(0);
    U = qmul(P, U);
    Uinv = qmul(Uinv, Pinv);

    // final exact verification
    auto check = qmul(qmul(U, F), Uinv);
    for (size_t i = 0; i < s; ++i)
        for (size_t j = 0; j < s; ++j) {
            Rational want = (i == j && i >= s - rank) ? Rational(1) : Rational(0);
            if (check[i][j] != want)
                throw Error("internal: idempotent diagonalization failed verification");
        }

    IdempotentDiagonalization out;
    out.u = lift_scalar(Fmat.pres(), U);
    out.u_inverse = lift_scalar(Fmat.pres(), Uinv);
    out.rank = rank;
    return out;
}

std::vector<std::vector<NCPoly>> extract_free_basis(const MatrixOverA& G1,
                                                    const MatrixOverA& U) {
    const size_t s = G1.rows(), r = G1.cols();
    if (U.rows() != r || U.cols() != r) throw Error("U must be r x r");
    if (r < s) throw Error("splitting needs r >= s");

    MatrixOverA ut = U.transpose();
    auto v = left_inverse(ut);
    if (!v) throw Error("U is not invertible");
    if (!(ut * *v).is_identity()) throw Error("U is not invertible");

    MatrixOverA prod = U * G1.transpose(); // r x s, must be [I_s; 0]
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < s; ++j) {
            const NCPoly& e = prod.at(i, j);
            if (i == j) {
                if (e.terms().size() != 1 || !exp_is_zero(e.lm_exp()) || !e.lc().is_one())
                    throw Error("U G1^T is not [I_s; 0]");
            } else if (!e.is_zero()) {
                throw Error("U G1^T is not [I_s; 0]");
            }
        }

    std::vector<std::vector<NCPoly>> basis;
    for (size_t j = s; j < r; ++j) {
        std::vector<NCPoly> col;
        col.reserve(r);
        for (size_t i = 0; i < r; ++i) col.push_back(ut.at(i, j));
        basis.push_back(std::move(col));
    }
    return basis;
}

MatrixOverA complete_unimodular_unit_entry(const MatrixOverA& v) {
    if (v.cols() != 1) throw Error("completion needs a column");
    const size_t r = v.rows();
    const auto& pres = v.pres();
    const auto& ring = pres->ring();

    size_t k = r;
    CPoly unit;
    for (size_t i = 0; i < r; ++i) {
        const NCPoly& e = v.at(i, 0);
        if (e.is_zero() || e.terms().size() != 1 || !exp_is_zero(e.lm_exp())) continue;
        if (auto inv = ring->unit_inverse(e.lc())) {
            k = i;
            unit = *inv;
            break;
        }
    }
    if (k == r) throw MathError("stability not decided");

    // swap row k to the top, scale it to 1, eliminate the rest
    MatrixOverA U = MatrixOverA::identity(pres, r);
    if (k != 0) {
        std::swap(U.at(0, 0), U.at(k, 0));
        std::swap(U.at(0, k), U.at(k, k));
    }
    // after the swap row 0 picks out v_k; normalize and eliminate
    MatrixOverA scale = MatrixOverA::identity(pres, r);
    scale.at(0, 0) = NCPoly::coeff(pres, unit);
    U = scale * U;
    MatrixOverA elim = MatrixOverA::identity(pres, r);
    for (size_t i = 0; i < r; ++i) {
        if (i == 0) continue;
        size_t src = (i == k) ? 0 : i; // original row index mapped by the swap
        elim.at(i, 0) = -v.at(src, 0);
    }
    U = elim * U;

    // exact check: U v = e_1
    MatrixOverA uv = U * v;
    for (size_t i = 0; i < r; ++i) {
        const NCPoly& e = uv.at(i, 0);
        if (i == 0) {
            if (e != NCPoly::one(pres)) throw Error("internal: completion failed verification");
        } else if (!e.is_zero()) {
            throw Error("internal: completion failed verification");
        }
    }
    return U;
}

} // namespace spbw
