#include "gieseker/roots.hpp"

#include <algorithm>

namespace gieseker {

namespace {

Rational floor_of(const Rational& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
    return Rational(q);
}

Rational ceil_of(const Rational& x) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
    return Rational(q);
}

Rational midpoint(const Rational& a, const Rational& b) {
    return (a + b) / Rational(2);
}

/// Sturm chain of a square-free polynomial, each member primitive integer
/// with the same sign function as the rational remainder it replaces.
std::vector<Polynomial> sturm_chain(const Polynomial& sf) {
    std::vector<Polynomial> chain;
    chain.push_back(primitive_part(sf));
    Polynomial d = sf.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(primitive_part(d));
    while (chain.back().degree() > 0) {
        Polynomial rem = divmod(chain[chain.size() - 2], chain.back()).second;
        if (rem.is_zero()) break;
        chain.push_back(primitive_part(-rem));
    }
    return chain;
}

int sign_variations(const std::vector<Polynomial>& chain, const Rational& x) {
    int count = 0;
    int prev = 0;
    for (const Polynomial& p : chain) {
        int s = eval_sign(p, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

/// Number of roots in the open interval (a, b); requires non-root endpoints.
int roots_between(const std::vector<Polynomial>& chain, const Rational& a, const Rational& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

bool is_multiple_at(const Polynomial& multiple_locus, const Rational& r) {
    return !multiple_locus.is_zero() && eval_sign(multiple_locus, r) == 0;
}

bool is_multiple_in(const Polynomial& multiple_locus, const Rational& a, const Rational& b) {
    if (multiple_locus.degree() < 1) return false;
    // multiple_locus divides sf, so inside an isolating interval of sf it has
    // at most the isolated root, necessarily simple: sign change decides.
    return eval_sign(multiple_locus, a) * eval_sign(multiple_locus, b) < 0;
}

/// Decide rationality of the unique root of sf in (a, b), where sf changes
/// sign across the interval.  The interval is narrowed by sign bisection
/// until it contains at most one rational with denominator up to |lc(sf)|;
/// the simplest rational inside is then the only possible rational root.
IsolatedRoot settle_interval(const Polynomial& sf, const Polynomial& multiple_locus,
                             Rational a, Rational b) {
    Integer lead = abs(sf.leading().numerator());
    Rational gap = Rational(1) / Rational(lead * lead + 1);
    int sa = eval_sign(sf, a);
    while (b - a >= gap) {
        Rational m = midpoint(a, b);
        int sm = eval_sign(sf, m);
        if (sm == 0) {
            return IsolatedRoot{sf, m, m, m, !is_multiple_at(multiple_locus, m)};
        }
        if (sm == sa) a = m; else b = m;
    }
    Rational candidate = simplest_rational_in(a, b);
    if (eval_sign(sf, candidate) == 0) {
        return IsolatedRoot{sf, candidate, candidate, candidate,
                            !is_multiple_at(multiple_locus, candidate)};
    }
    return IsolatedRoot{sf, a, b, std::nullopt, !is_multiple_in(multiple_locus, a, b)};
}

} // namespace

Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
    require(lo <= hi, ErrorCode::Internal, "simplest_rational_in: empty interval");
    if (lo == hi) return lo;
    Rational up = ceil_of(lo);
    if (up <= hi) {
        // an integer fits; take the one nearest zero
        if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
        return lo.sign() > 0 ? up : floor_of(hi);
    }
    Rational n = floor_of(lo);
    Rational inner = simplest_rational_in(Rational(1) / (hi - n), Rational(1) / (lo - n));
    return n + Rational(1) / inner;
}

std::vector<IsolatedRoot> sturm_isolate(const Polynomial& f, const Rational& lo,
                                        const Rational& hi) {
    require(!f.is_zero(), ErrorCode::IdenticallyZero, "sturm_isolate: zero polynomial");
    require(lo < hi, ErrorCode::RangeError, "sturm_isolate: need lo < hi");

    std::vector<IsolatedRoot> out;
    Polynomial p = primitive_part(f);
    if (p.degree() == 0) return out;

    Polynomial g = poly_gcd(p, p.derivative());
    Polynomial sf = primitive_part(divmod(p, g).first);
    Polynomial multiple_locus =
        g.degree() > 0 ? primitive_part(poly_gcd(sf, g)) : Polynomial(f.var());

    // Roots at the interval endpoints get degenerate intervals; divide them
    // out so the Sturm endpoints are never zeros of the polynomial.
    Polynomial inner = sf;
    bool shaved = false;
    for (const Rational& end : {lo, hi}) {
        if (eval_sign(inner, end) == 0) {
            out.push_back(IsolatedRoot{sf, end, end, end,
                                       !is_multiple_at(multiple_locus, end)});
            Polynomial linear(f.var(), {-end, Rational(1)});
            inner = divmod(inner, linear).first;
            shaved = true;
        }
    }
    if (inner.degree() < 1) {
        std::sort(out.begin(), out.end(),
                  [](const IsolatedRoot& x, const IsolatedRoot& y) { return x.lo < y.lo; });
        return out;
    }

    std::vector<Polynomial> chain = sturm_chain(inner);

    // Keep the working span strictly inside any endpoint roots of sf, so
    // every isolating interval below contains exactly one root of sf itself.
    Rational a0 = lo, b0 = hi;
    if (shaved) {
        Rational w = (hi - lo) / Rational(4);
        for (;;) {
            Rational la = lo + w, lb = hi - w;
            if (eval_sign(inner, la) != 0 && eval_sign(inner, lb) != 0 &&
                roots_between(chain, lo, la) == 0 && roots_between(chain, lb, hi) == 0)
                { a0 = la; b0 = lb; break; }
            w = w / Rational(2);
        }
    }

    // Bisection worklist of (a, b) with inner(a), inner(b) != 0.
    struct Span { Rational a, b; int count; };
    std::vector<Span> work;
    work.push_back({a0, b0, roots_between(chain, a0, b0)});
    while (!work.empty()) {
        Span s = work.back();
        work.pop_back();
        if (s.count <= 0) continue;
        if (s.count == 1) {
            out.push_back(settle_interval(sf, multiple_locus, s.a, s.b));
            continue;
        }
        Rational m = midpoint(s.a, s.b);
        if (eval_sign(inner, m) != 0) {
            int left = roots_between(chain, s.a, m);
            work.push_back({s.a, m, left});
            work.push_back({m, s.b, s.count - left});
            continue;
        }
        // Midpoint hit a rational root; carve out a closed neighbourhood of m
        // containing no other root before recursing on the two sides.
        out.push_back(IsolatedRoot{sf, m, m, m, !is_multiple_at(multiple_locus, m)});
        Rational w = (s.b - s.a) / Rational(4);
        for (;;) {
            Rational ml = m - w, mr = m + w;
            if (eval_sign(inner, ml) != 0 && eval_sign(inner, mr) != 0 &&
                roots_between(chain, ml, mr) == 1) {
                work.push_back({s.a, ml, roots_between(chain, s.a, ml)});
                work.push_back({mr, s.b, roots_between(chain, mr, s.b)});
                break;
            }
            w = w / Rational(2);
        }
    }

    std::sort(out.begin(), out.end(),
              [](const IsolatedRoot& x, const IsolatedRoot& y) { return x.lo < y.lo; });
    return out;
}

IsolatedRoot refined(IsolatedRoot r) {
    if (r.exact) return r;
    Rational m = midpoint(r.lo, r.hi);
    // the isolated root is irrational here, so the midpoint is never a root
    if (eval_sign(r.poly, m) == eval_sign(r.poly, r.lo)) r.lo = m; else r.hi = m;
    return r;
}

IsolatedRoot refined_below(IsolatedRoot r, const Rational& width) {
    while (!r.exact && r.hi - r.lo > width) r = refined(std::move(r));
    return r;
}

IsolatedRoot refined_to_exclude(IsolatedRoot r, const Rational& pt) {
    if (r.exact) {
        require(*r.exact != pt, ErrorCode::Internal, "refined_to_exclude: pt is the root");
        return r;
    }
    while (r.lo <= pt && pt <= r.hi) r = refined(std::move(r));
    return r;
}

bool same_root(const IsolatedRoot& a, const IsolatedRoot& b) {
    if (a.exact && b.exact) return *a.exact == *b.exact;
    if (a.exact) return b.lo <= *a.exact && *a.exact <= b.hi && eval_sign(b.poly, *a.exact) == 0;
    if (b.exact) return a.lo <= *b.exact && *b.exact <= a.hi && eval_sign(a.poly, *b.exact) == 0;
    Polynomial g = poly_gcd(a.poly, b.poly);
    if (g.degree() < 1) return false;
    Rational lo = std::max(a.lo, b.lo);
    Rational hi = std::min(a.hi, b.hi);
    if (lo >= hi) return false;
    // Interval endpoints are non-roots of a.poly or b.poly, hence of g.
    std::vector<Polynomial> chain = sturm_chain(primitive_part(g));
    return roots_between(chain, lo, hi) > 0;
}

int compare_roots(IsolatedRoot& a, IsolatedRoot& b) {
    if (same_root(a, b)) return 0;
    for (;;) {
        if (a.hi <= b.lo) return -1;
        if (b.hi <= a.lo) return 1;
        if (a.exact) {
            b = refined_to_exclude(std::move(b), *a.exact);
            continue;
        }
        if (b.exact) {
            a = refined_to_exclude(std::move(a), *b.exact);
            continue;
        }
        a = refined(std::move(a));
        b = refined(std::move(b));
    }
}

} // namespace gieseker
