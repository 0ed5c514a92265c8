#ifndef GIESEKER_POLYNOMIAL_HPP
#define GIESEKER_POLYNOMIAL_HPP

#include <iosfwd>
#include <vector>

#include "gieseker/rational.hpp"

namespace gieseker {

enum class Ordering { Less, Equal, Greater };

Ordering reverse(Ordering o);
const char* to_string(Ordering o);

/// Variable tag carried by a polynomial: m (Hilbert variable), t (segment
/// parameter), k (twist variable in the uniformity expansion).
enum class Var : unsigned char { m, t, k };

const char* to_string(Var v);

/// Dense univariate polynomial over Q, canonical form: no trailing zero
/// coefficients.  The zero polynomial has an empty coefficient vector and
/// degree() == kZeroDegree, which compares below every true degree.
class Polynomial {
public:
    static constexpr int kZeroDegree = -1;

    Polynomial() : var_(Var::m) {}
    explicit Polynomial(Var v) : var_(v) {}
    Polynomial(Var v, std::vector<Rational> ascending_coeffs);

    static Polynomial constant(Var v, const Rational& c);
    static Polynomial monomial(Var v, int degree, const Rational& c);

    Var var() const { return var_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of var^k; zero outside the stored range.
    const Rational& coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

    Rational eval(const Rational& x) const;
    Polynomial derivative() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& p);
    Polynomial& operator*=(const Rational& s) { return *this = s * *this; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    void trim();

    Var var_;
    std::vector<Rational> coeffs_; // coeffs_[k] multiplies var^k
};

/// Order of p(x) versus q(x) for all sufficiently large x, as lexicographic
/// comparison of coefficients from the top degree down.
Ordering eventual_compare(const Polynomial& p, const Polynomial& q);

/// Exact sign of f(at): -1, 0 or +1.
int eval_sign(const Polynomial& f, const Rational& at);

/// Quotient and remainder of a by b over Q; b must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd over Q (the zero polynomial if both inputs are zero).
Polynomial poly_gcd(Polynomial a, Polynomial b);

/// Rescale by the smallest positive rational making all coefficients integral
/// and coprime.  Preserves roots and the sign function.
Polynomial primitive_part(const Polynomial& f);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

} // namespace gieseker

#endif
