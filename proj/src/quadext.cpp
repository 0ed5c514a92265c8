#include "gieseker/quadext.hpp"

namespace gieseker {

namespace {
void check_same_field(const QuadExt& x, const QuadExt& y) {
    require(x.radicand() == y.radicand(), ErrorCode::Internal,
            "mixed quadratic fields");
}
} // namespace

int QuadExt::sign() const {
    int sa = a_.sign();
    int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 against b^2 D; equality would force
    // sqrt(D) rational, impossible for a non-square D with b != 0
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * Rational(d_);
    require(lhs != rhs, ErrorCode::Internal, "radicand is a perfect square");
    return lhs > rhs ? sa : sb;
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    check_same_field(x, y);
    return QuadExt(x.a_ + y.a_, x.b_ + y.b_, x.d_);
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    check_same_field(x, y);
    return QuadExt(x.a_ - y.a_, x.b_ - y.b_, x.d_);
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    check_same_field(x, y);
    return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * Rational(x.d_),
                   x.a_ * y.b_ + x.b_ * y.a_, x.d_);
}

int eval_sign(const Polynomial& f, const QuadExt& at) {
    QuadExt acc = QuadExt::rational(Rational(0), at.radicand());
    for (int k = f.degree(); k >= 0; --k)
        acc = acc * at + QuadExt::rational(f.coeff(k), at.radicand());
    return acc.sign();
}

} // namespace gieseker
