#ifndef GIESEKER_SEGMENT_HPP
#define GIESEKER_SEGMENT_HPP

#include <optional>
#include <utility>

#include "gieseker/roots.hpp"
#include "gieseker/sheaf.hpp"

namespace gieseker {

/// A t-linear path sigma(t) = (1-t)*from + t*to of stability parameters,
/// normalized so that sum_j volumes[j] * sigma_j(t) == 1 for all t in [0,1].
struct StabilitySegment {
    StabilityParameter from;
    StabilityParameter to;
    std::vector<Rational> volumes;
    int d = 0;

    bool constant() const { return from.entries() == to.entries(); }
};

/// Checks lengths, positivity of the volumes and the normalization at both
/// endpoints (linearity carries it to all t).
StabilitySegment validate_segment(const StabilityParameter& from, const StabilityParameter& to,
                                  std::vector<Rational> volumes, int d);

/// sigma(t) for a rational t in [0, 1].
StabilityParameter parameter_at(const StabilitySegment& seg, const Rational& t);

/// The comparison polynomials c_i(t) = r_E(t) * alpha_i(F, t) - r_F(t) * alpha_i(E, t)
/// for i = 0..d (returned ascending; c_d is identically zero).  p_F > p_E at t
/// exactly when the first nonzero c_i(t), scanning from i = d-1 down, is
/// positive.  Each c_i has degree at most 2 in t.
std::vector<Polynomial> wall_polynomials(const SheafClass& F, const SheafClass& E,
                                         const StabilitySegment& seg);

/// A parameter value where some candidate's governing comparison sign
/// changes.  `triggering` lists (candidate name, index of the top comparison
/// polynomial vanishing there); `endpoint` marks walls at t = 0 or t = 1.
struct Wall {
    IsolatedRoot location;
    std::vector<std::pair<std::string, int>> triggering;
    bool endpoint = false;
};

/// All walls on the segment, sorted by t, with pairwise disjoint isolating
/// intervals; interior irrational walls have intervals strictly inside (0,1).
std::vector<Wall> find_walls(const SheafClass& E, const std::vector<SheafClass>& candidates,
                             const StabilitySegment& seg);

struct WallInfo {
    Wall wall;
    std::vector<std::pair<std::string, Ordering>> orderings; // at the wall, by name
    Verdict verdict;                                         // at the wall, exact
};

struct Chamber {
    std::optional<size_t> left_wall;  // index into walls; empty = segment start
    std::optional<size_t> right_wall; // index into walls; empty = segment end
    Rational sample;
    std::vector<std::pair<std::string, Ordering>> orderings;
    Verdict verdict;
};

struct ChamberReport {
    std::vector<WallInfo> walls;
    std::vector<Chamber> chambers; // ordered, alternating with walls, covering [0,1]
};

ChamberReport chamber_decomposition(const SheafClass& E,
                                    const std::vector<SheafClass>& candidates,
                                    const StabilitySegment& seg);

struct FlipEvent {
    Wall wall;
    std::optional<Verdict> before; // empty for a wall at t = 0
    Verdict at;
    std::optional<Verdict> after;  // empty for a wall at t = 1
    std::vector<std::string> flipped; // candidates whose comparison changes
};

struct FlipSchedule {
    std::vector<FlipEvent> events; // strictly increasing in t
};

FlipSchedule flip_schedule(const SheafClass& E, const std::vector<SheafClass>& candidates,
                           const StabilitySegment& seg);

/// Per-sheaf expansion of the reduced twisted multi-Hilbert sum in k, with
/// coefficients in Q[t], and the uniformity verdict: coefficient of k^d must
/// be the constant 1/d!, coefficients of k^{d-1}..k^1 must not depend on t,
/// and the coefficient of k^0 must be linear in t.
struct UniformityReport {
    bool uniform = true;
    // per sheaf: coefficient polynomials in t, ascending in the k-power
    std::vector<std::pair<std::string, std::vector<Polynomial>>> coefficients;
    std::vector<std::pair<std::string, int>> offending; // (name, k-power)
};

UniformityReport uniformity_check(const std::vector<SheafClass>& family,
                                  const StabilitySegment& seg);

/// Dense-grid cross-check: recomputes the verdict at t = k/n from scratch and
/// compares against the chamber/wall classification; also verifies that
/// adjacent grid points with differing verdicts bracket exactly one wall.
struct GridCheck {
    int n = 0;
    bool consistent = true;
    std::vector<Rational> mismatches;
    bool brackets_ok = true;
    std::vector<std::pair<Rational, Rational>> bad_gaps;

    bool ok() const { return consistent && brackets_ok; }
};

GridCheck grid_check(const SheafClass& E, const std::vector<SheafClass>& candidates,
                     const StabilitySegment& seg, const ChamberReport& report, int n);

} // namespace gieseker

#endif
