#include "gieseker/sheaf.hpp"

#include <algorithm>

namespace gieseker {

StabilityParameter StabilityParameter::make(std::vector<Rational> sigma) {
    require(!sigma.empty(), ErrorCode::ZeroParameter, "empty stability parameter");
    bool any_positive = false;
    for (const Rational& s : sigma) {
        require(s.sign() >= 0, ErrorCode::ValueError,
                "stability parameter entries must be nonnegative");
        if (s.sign() > 0) any_positive = true;
    }
    require(any_positive, ErrorCode::ZeroParameter,
            "stability parameter must not be the zero vector");
    return StabilityParameter(std::move(sigma));
}

bool StabilityParameter::positive() const {
    return std::all_of(sigma_.begin(), sigma_.end(),
                       [](const Rational& s) { return s.sign() > 0; });
}

const char* to_string(VerdictTag tag) {
    switch (tag) {
        case VerdictTag::Stable: return "stable";
        case VerdictTag::StrictlySemistable: return "strictly-semistable";
        default: return "unstable";
    }
}

void SheafClass::validate() const {
    require(d >= 0, ErrorCode::ValueError, name + ": negative dimension");
    require(!hilbert.empty(), ErrorCode::ValueError, name + ": no Hilbert polynomials");
    require(rank.sign() > 0, ErrorCode::ValueError, name + ": rank must be positive");
    bool top_degree_seen = false;
    for (const Polynomial& p : hilbert) {
        require(p.var() == Var::m, ErrorCode::Internal, name + ": hilbert variable tag");
        require(p.degree() <= d, ErrorCode::ValueError,
                name + ": Hilbert polynomial degree exceeds d");
        if (p.degree() == d) {
            top_degree_seen = true;
            require(p.leading().sign() >= 0, ErrorCode::ValueError,
                    name + ": negative degree-d coefficient");
        }
    }
    require(top_degree_seen, ErrorCode::ValueError,
            name + ": no Hilbert polynomial of degree d");
    if (twisted_hilbert) {
        require(twisted_hilbert->size() == hilbert.size(), ErrorCode::LengthMismatch,
                name + ": twisted Hilbert polynomial count");
        for (const Polynomial& p : *twisted_hilbert) {
            require(p.var() == Var::k, ErrorCode::Internal, name + ": twist variable tag");
            require(p.degree() <= d, ErrorCode::ValueError,
                    name + ": twisted Hilbert polynomial degree exceeds d");
        }
    }
}

Polynomial multi_hilbert(const SheafClass& E, const StabilityParameter& sigma) {
    require(sigma.size() == E.j0(), ErrorCode::LengthMismatch,
            E.name + ": sigma length does not match the number of polarizations");
    Polynomial sum(Var::m);
    for (size_t j = 0; j < sigma.size(); ++j)
        sum += sigma[j] * E.hilbert[j];
    return sum;
}

Rational alpha_coefficient(const SheafClass& E, const StabilityParameter& sigma, int i) {
    return factorial(i) * multi_hilbert(E, sigma).coeff(i);
}

Polynomial reduced_multi_hilbert(const SheafClass& E, const StabilityParameter& sigma) {
    Polynomial p = multi_hilbert(E, sigma);
    Rational r = factorial(E.d) * p.coeff(E.d);
    require(r.sign() > 0, ErrorCode::DegenerateLeading,
            E.name + ": leading alpha-coefficient vanishes for this sigma");
    return (Rational(1) / r) * p;
}

Ordering compare_reduced(const SheafClass& F, const SheafClass& E,
                         const StabilityParameter& sigma) {
    require(F.j0() == E.j0(), ErrorCode::LengthMismatch,
            "sheaf classes with different polarization counts");
    require(F.d == E.d, ErrorCode::LengthMismatch,
            "sheaf classes with different dimensions");
    return eventual_compare(reduced_multi_hilbert(F, sigma),
                            reduced_multi_hilbert(E, sigma));
}

Verdict stability_verdict(const SheafClass& E, const std::vector<SheafClass>& candidates,
                          const StabilityParameter& sigma) {
    std::vector<std::string> greater, equal;
    for (const SheafClass& F : candidates) {
        switch (compare_reduced(F, E, sigma)) {
            case Ordering::Greater: greater.push_back(F.name); break;
            case Ordering::Equal: equal.push_back(F.name); break;
            case Ordering::Less: break;
        }
    }
    std::sort(greater.begin(), greater.end());
    std::sort(equal.begin(), equal.end());
    if (!greater.empty()) return Verdict{VerdictTag::Unstable, std::move(greater)};
    if (!equal.empty()) return Verdict{VerdictTag::StrictlySemistable, std::move(equal)};
    return Verdict{VerdictTag::Stable, {}};
}

} // namespace gieseker
