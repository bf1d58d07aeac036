#ifndef SECANT_HODGE_SCHUR_HPP
#define SECANT_HODGE_SCHUR_HPP

#include "secant_hodge/hodge_structure.hpp"

namespace secant_hodge {

// Hook shape (arm, 1^leg): first row of length arm, then leg rows of length 1.
struct HookPartition {
    int arm = 1;
    int leg = 0;
    int size() const { return arm + leg; }
    bool valid() const { return arm >= 1 && leg >= 0; }
    bool operator==(const HookPartition&) const = default;
};

/*
 * S_(a,1^b)(H^1(C)) for a genus-g curve.
 *
 * The alphabet is {1..2g}; letters 1..g are (1,0) classes and g+1..2g are
 * (0,1) classes, so a tableau with p small letters contributes to (p, q).
 * In a semistandard hook filling the small letters always occupy a sub-hook
 * mu containing the corner, and the large letters fill the detached row and
 * column remainders; counting the fillings of each piece gives the bigraded
 * count exactly without listing tableaux one by one.
 */
HodgeStructure schur_hook(const HookPartition& hook, int g);

// Same table by listing every semistandard tableau; exponential, for checks.
HodgeStructure schur_hook_by_listing(const HookPartition& hook, int g);

// Number of semistandard tableaux of shape (a,1^b) on an n-letter alphabet:
// C(n+a-1, a+b) * C(a+b-1, b).
Count hook_dimension(const HookPartition& hook, Count n);

} // namespace secant_hodge

#endif
