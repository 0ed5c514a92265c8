#ifndef GIESEKER_QUADEXT_HPP
#define GIESEKER_QUADEXT_HPP

#include "gieseker/polynomial.hpp"

namespace gieseker {

/// Element a + b*sqrt(D) of the real quadratic field Q(sqrt(D)), with D a
/// positive non-square integer.  Supports exact ring arithmetic and exact
/// sign determination, which is all the at-wall comparisons need.
class QuadExt {
public:
    QuadExt(Rational a, Rational b, Integer d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

    static QuadExt rational(const Rational& a, const Integer& d) { return QuadExt(a, Rational(0), d); }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    const Integer& radicand() const { return d_; }

    int sign() const;
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
    friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator*(const Rational& s, const QuadExt& x) {
        return QuadExt(s * x.a_, s * x.b_, x.d_);
    }

private:
    Rational a_, b_;
    Integer d_;
};

/// Exact sign of f at a + b*sqrt(D) via Horner in Q(sqrt(D)).
int eval_sign(const Polynomial& f, const QuadExt& at);

} // namespace gieseker

#endif
