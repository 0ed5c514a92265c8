#ifndef GIESEKER_SHEAF_HPP
#define GIESEKER_SHEAF_HPP

#include <optional>
#include <string>
#include <vector>

#include "gieseker/polynomial.hpp"

namespace gieseker {

/// Weight vector over the polarizations: componentwise nonnegative rationals,
/// not all zero.  Positive means every entry is strictly positive.
class StabilityParameter {
public:
    static StabilityParameter make(std::vector<Rational> sigma);

    size_t size() const { return sigma_.size(); }
    const Rational& operator[](size_t j) const { return sigma_[j]; }
    const std::vector<Rational>& entries() const { return sigma_; }
    bool positive() const;

private:
    explicit StabilityParameter(std::vector<Rational> sigma) : sigma_(std::move(sigma)) {}
    std::vector<Rational> sigma_;
};

/// Numerical type of a sheaf: its dimension d, a rank, one Hilbert polynomial
/// per polarization (in m), and optionally one twisted Hilbert polynomial per
/// polarization (in k).
struct SheafClass {
    std::string name;
    int d = 0;
    Rational rank;
    std::vector<Polynomial> hilbert;
    std::optional<std::vector<Polynomial>> twisted_hilbert;

    size_t j0() const { return hilbert.size(); }

    /// Checks: degrees at most d with at least one exactly d, nonnegative
    /// degree-d coefficients, positive rank, matching twist shape.
    void validate() const;
};

enum class VerdictTag { Stable, StrictlySemistable, Unstable };

const char* to_string(VerdictTag tag);

struct Verdict {
    VerdictTag tag = VerdictTag::Stable;
    std::vector<std::string> witnesses; // sorted by name

    friend bool operator==(const Verdict& a, const Verdict& b) {
        return a.tag == b.tag && a.witnesses == b.witnesses;
    }
    friend bool operator!=(const Verdict& a, const Verdict& b) { return !(a == b); }
};

/// Sum over j of sigma_j * hilbert[j], a polynomial in m.
Polynomial multi_hilbert(const SheafClass& E, const StabilityParameter& sigma);

/// Coefficient alpha_i in the expansion sum_i alpha_i m^i / i! of the
/// multi-Hilbert polynomial; alpha_i = i! * (coefficient of m^i).
Rational alpha_coefficient(const SheafClass& E, const StabilityParameter& sigma, int i);

/// Multi-Hilbert polynomial divided by alpha_d; leading coefficient 1/d!.
/// Throws DegenerateLeading when alpha_d vanishes.
Polynomial reduced_multi_hilbert(const SheafClass& E, const StabilityParameter& sigma);

/// Eventual order of the reduced multi-Hilbert polynomials of F and E.
Ordering compare_reduced(const SheafClass& F, const SheafClass& E,
                         const StabilityParameter& sigma);

/// Verdict of E against the finite candidate set: Unstable if any candidate
/// compares Greater, else StrictlySemistable if any compares Equal, else
/// Stable.  Witnesses list every candidate achieving the governing
/// comparison, sorted by name.
Verdict stability_verdict(const SheafClass& E, const std::vector<SheafClass>& candidates,
                          const StabilityParameter& sigma);

} // namespace gieseker

#endif
