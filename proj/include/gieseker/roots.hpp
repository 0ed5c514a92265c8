#ifndef GIESEKER_ROOTS_HPP
#define GIESEKER_ROOTS_HPP

#include <optional>
#include <vector>

#include "gieseker/polynomial.hpp"

namespace gieseker {

/// One isolated real root of a polynomial.  `poly` is the primitive
/// square-free integer part of the input; it has exactly one real root in
/// [lo, hi].  Rational roots carry `exact` and a degenerate interval
/// lo == hi == *exact.  For irrational roots the root lies strictly inside
/// (lo, hi) and poly changes sign across the interval.
struct IsolatedRoot {
    Polynomial poly;
    Rational lo;
    Rational hi;
    std::optional<Rational> exact;
    bool simple = true; // multiplicity-free in the original input polynomial
};

/// Isolate the distinct real roots of f in [lo, hi] with Sturm sequences.
/// Roots at lo or hi are reported with degenerate intervals.  Throws
/// IdenticallyZero for f == 0 and RangeError unless lo < hi.
std::vector<IsolatedRoot> sturm_isolate(const Polynomial& f, const Rational& lo,
                                        const Rational& hi);

/// The unique rational with smallest denominator in the closed interval
/// [lo, hi] (ties among integers resolved toward zero).
Rational simplest_rational_in(const Rational& lo, const Rational& hi);

/// Halve the isolating interval (no-op for exact roots).
IsolatedRoot refined(IsolatedRoot r);

/// Refine until the interval width is at most `width`.
IsolatedRoot refined_below(IsolatedRoot r, const Rational& width);

/// Refine until pt lies outside [lo, hi].  pt must not be the root itself.
IsolatedRoot refined_to_exclude(IsolatedRoot r, const Rational& pt);

/// Exact equality of the underlying algebraic numbers (via gcd on the
/// isolating intervals' intersection).
bool same_root(const IsolatedRoot& a, const IsolatedRoot& b);

/// Total order on roots: -1, 0, +1.  May refine both arguments.
int compare_roots(IsolatedRoot& a, IsolatedRoot& b);

} // namespace gieseker

#endif
