#ifndef SECANT_HODGE_COMBINATORICS_HPP
#define SECANT_HODGE_COMBINATORICS_HPP

#include <cstdint>
#include <stdexcept>

namespace secant_hodge {

using Count = std::int64_t;

// Checked arithmetic; every dimension in the library goes through these.
inline Count checked_add(Count a, Count b) {
    Count r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("multiplicity overflow (add)");
    return r;
}

inline Count checked_mul(Count a, Count b) {
    Count r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("multiplicity overflow (mul)");
    return r;
}

// C(n, k); zero outside 0 <= k <= n.
inline Count binomial(Count n, Count k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Count r = 1;
    for (Count i = 1; i <= k; ++i) {
        // r * (n - k + i) is divisible by i after the multiplication
        r = checked_mul(r, n - k + i) / i;
    }
    return r;
}

// Number of multisets of size k from n symbols.
inline Count multichoose(Count n, Count k) {
    if (k < 0 || n < 0) return 0;
    if (k == 0) return 1;
    return binomial(n + k - 1, k);
}

} // namespace secant_hodge

#endif
