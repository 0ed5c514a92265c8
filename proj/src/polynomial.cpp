#include "gieseker/polynomial.hpp"

#include <ostream>

namespace gieseker {

Ordering reverse(Ordering o) {
    switch (o) {
        case Ordering::Less: return Ordering::Greater;
        case Ordering::Greater: return Ordering::Less;
        default: return Ordering::Equal;
    }
}

const char* to_string(Ordering o) {
    switch (o) {
        case Ordering::Less: return "less";
        case Ordering::Equal: return "equal";
        default: return "greater";
    }
}

const char* to_string(Var v) {
    switch (v) {
        case Var::m: return "m";
        case Var::t: return "t";
        default: return "k";
    }
}

Polynomial::Polynomial(Var v, std::vector<Rational> ascending_coeffs)
    : var_(v), coeffs_(std::move(ascending_coeffs)) {
    trim();
}

Polynomial Polynomial::constant(Var v, const Rational& c) {
    return Polynomial(v, {c});
}

Polynomial Polynomial::monomial(Var v, int degree, const Rational& c) {
    if (c.is_zero()) return Polynomial(v);
    std::vector<Rational> cs(static_cast<size_t>(degree) + 1);
    cs.back() = c;
    return Polynomial(v, std::move(cs));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& Polynomial::coeff(int k) const {
    static const Rational zero;
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<size_t>(k)];
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (degree() < 1) return Polynomial(var_);
    std::vector<Rational> out(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k)
        out[k - 1] = Rational(static_cast<long>(k)) * coeffs_[k];
    return Polynomial(var_, std::move(out));
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> out(coeffs_.size());
    for (size_t k = 0; k < coeffs_.size(); ++k) out[k] = -coeffs_[k];
    return Polynomial(var_, std::move(out));
}

namespace {
void check_same_var(const Polynomial& a, const Polynomial& b) {
    require(a.var() == b.var(), ErrorCode::Internal,
            "mixed polynomial variables");
}
} // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_var(*this, o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same_var(*this, o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_var(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.var());
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(a.var(), std::move(out));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
    std::vector<Rational> out(p.coeffs_.size());
    for (size_t k = 0; k < p.coeffs_.size(); ++k) out[k] = s * p.coeffs_[k];
    return Polynomial(p.var(), std::move(out));
}

Ordering eventual_compare(const Polynomial& p, const Polynomial& q) {
    check_same_var(p, q);
    int top = std::max(p.degree(), q.degree());
    for (int k = top; k >= 0; --k) {
        const Rational& a = p.coeff(k);
        const Rational& b = q.coeff(k);
        if (a < b) return Ordering::Less;
        if (a > b) return Ordering::Greater;
    }
    return Ordering::Equal;
}

int eval_sign(const Polynomial& f, const Rational& at) {
    return f.eval(at).sign();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    check_same_var(a, b);
    require(!b.is_zero(), ErrorCode::Internal, "polynomial division by zero");
    Polynomial rem = a;
    Polynomial quot(a.var());
    const Rational lead = b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Rational c = rem.leading() / lead;
        Polynomial term = Polynomial::monomial(a.var(), shift, c);
        quot += term;
        rem -= term * b;
    }
    return {quot, rem};
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return (Rational(1) / a.leading()) * a; // monic
}

Polynomial primitive_part(const Polynomial& f) {
    if (f.is_zero()) return f;
    Integer den_lcm = 1;
    for (const Rational& c : f.coeffs())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    Integer num_gcd = 0;
    for (const Rational& c : f.coeffs()) {
        Integer scaled = c.numerator() * (den_lcm / c.denominator());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    return Rational(den_lcm, num_gcd) * f;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational& c = p.coeff(k);
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        Rational a = abs(c);
        bool unit = (a == Rational(1));
        if (k == 0 || !unit) os << a.str();
        if (k > 0) {
            if (!unit) os << "*";
            os << to_string(p.var());
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace gieseker
