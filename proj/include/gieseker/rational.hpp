#ifndef GIESEKER_RATIONAL_HPP
#define GIESEKER_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "gieseker/errors.hpp"

namespace gieseker {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with positive denominator.
/// Serializes as "p/q", or just "p" when the denominator is 1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) { canonical(); }
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& n, const Integer& d) : v_(n, d) { canonical(); }
    explicit Rational(const mpq_class& q) : v_(q) { canonical(); }

    static Rational parse(std::string_view s) {
        if (s.empty()) fail(ErrorCode::ValueError, "empty rational literal");
        mpq_class q;
        if (q.set_str(std::string(s), 10) != 0)
            fail(ErrorCode::ValueError, "bad rational literal '" + std::string(s) + "'");
        if (q.get_den() == 0)
            fail(ErrorCode::ValueError, "zero denominator in '" + std::string(s) + "'");
        return Rational(q);
    }

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    std::string str() const { return v_.get_str(); }
    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    /// For display only; never used in any decision.
    double approx() const { return v_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) fail(ErrorCode::Internal, "rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend Rational abs(const Rational& a) { return Rational(mpq_class(abs(a.v_))); }

private:
    void canonical() { v_.canonicalize(); }

    mpq_class v_;
};

inline Rational factorial(int n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace gieseker

#endif
