#include "spbw/order.hpp"

#include <algorithm>

#include "spbw/rational.hpp"

namespace spbw {

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<int> precedence)
    : kind_(kind), precedence_(std::move(precedence)) {
    std::vector<bool> seen(precedence_.size(), false);
    for (int i : precedence_) {
        if (i < 0 || static_cast<size_t>(i) >= precedence_.size() || seen[i])
            throw Error("monomial order precedence is not a permutation");
        seen[i] = true;
    }
}

MonomialOrder MonomialOrder::deglex(size_t nvars) {
    std::vector<int> prec(nvars);
    for (size_t i = 0; i < nvars; ++i) prec[i] = static_cast<int>(i);
    return MonomialOrder(OrderKind::Deglex, std::move(prec));
}

int MonomialOrder::compare(const Exp& a, const Exp& b) const {
    if (a.size() != b.size() || a.size() != precedence_.size())
        throw Error("exponent dimension mismatch in order comparison");
    uint32_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    if (kind_ == OrderKind::Deglex) {
        for (int i : precedence_) {
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
    }
    // degrevlex: with equal degree, the last differing position in precedence
    // order decides, smaller exponent wins.
    for (auto it = precedence_.rbegin(); it != precedence_.rend(); ++it) {
        if (a[*it] != b[*it]) return a[*it] < b[*it] ? 1 : -1;
    }
    return 0;
}

std::string MonomialOrder::str(const std::vector<std::string>& names) const {
    std::string s = kind_ == OrderKind::Deglex ? "deglex" : "degrevlex";
    for (size_t k = 0; k < precedence_.size(); ++k) {
        s += k == 0 ? " " : " > ";
        s += names[precedence_[k]];
    }
    return s;
}

int ModuleOrder::compare(const Exp& a, int ia, const Exp& b, int ib) const {
    if (scheme_ == ModuleScheme::PosElim) {
        if (ia != ib) return ia < ib ? 1 : -1;
        return base_.compare(a, b);
    }
    int c = base_.compare(a, b);
    if (c != 0) return c;
    if (ia == ib) return 0;
    if (scheme_ == ModuleScheme::TOP) return ia > ib ? 1 : -1;
    return ia < ib ? 1 : -1; // TOPREV
}

} // namespace spbw
