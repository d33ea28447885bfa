#ifndef SPBW_EXPONENT_HPP
#define SPBW_EXPONENT_HPP

#include <cstdint>
#include <numeric>
#include <vector>

namespace spbw {

// alpha in N^n; componentwise arithmetic, divisibility and lcm.
using Exp = std::vector<uint32_t>;

inline uint32_t total_degree(const Exp& a) {
    return std::accumulate(a.begin(), a.end(), uint32_t{0});
}

inline Exp exp_add(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// b - a, requires a | b
inline Exp exp_sub(const Exp& b, const Exp& a) {
    Exp r(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

inline bool exp_divides(const Exp& a, const Exp& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exp exp_lcm(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
    return r;
}

inline bool exp_is_zero(const Exp& a) {
    for (uint32_t x : a)
        if (x) return false;
    return true;
}

inline Exp exp_unit(size_t n, size_t i) {
    Exp r(n, 0);
    r[i] = 1;
    return r;
}

} // namespace spbw

#endif
