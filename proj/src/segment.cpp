#include "gieseker/segment.hpp"

#include <algorithm>
#include <map>

#include "gieseker/quadext.hpp"

namespace gieseker {

namespace {

Rational midpoint(const Rational& a, const Rational& b) {
    return (a + b) / Rational(2);
}

/// sigma_j as a linear polynomial in t.
Polynomial sigma_poly(const StabilitySegment& seg, size_t j) {
    return Polynomial(Var::t, {seg.from[j], seg.to[j] - seg.from[j]});
}

/// alpha_i of the multi-Hilbert polynomial along the segment, linear in t.
Polynomial alpha_poly(const SheafClass& E, const StabilitySegment& seg, int i) {
    Polynomial sum(Var::t);
    for (size_t j = 0; j < E.j0(); ++j)
        sum += E.hilbert[j].coeff(i) * sigma_poly(seg, j);
    return factorial(i) * sum;
}

void check_positive_leading(const SheafClass& E, const StabilitySegment& seg) {
    Polynomial r = alpha_poly(E, seg, seg.d);
    require(eval_sign(r, Rational(0)) > 0 && eval_sign(r, Rational(1)) > 0,
            ErrorCode::DegenerateLeading,
            E.name + ": leading alpha-coefficient vanishes on the segment");
}

struct CandidateData {
    const SheafClass* sheaf = nullptr;
    std::vector<Polynomial> c; // ascending, size d+1, c[d] identically zero
    int top = -1;              // largest i with c_i nonzero; -1 when proportional
};

CandidateData candidate_data(const SheafClass& F, const SheafClass& E,
                             const StabilitySegment& seg) {
    CandidateData cd;
    cd.sheaf = &F;
    cd.c = wall_polynomials(F, E, seg);
    for (int i = static_cast<int>(cd.c.size()) - 1; i >= 0; --i) {
        if (!cd.c[static_cast<size_t>(i)].is_zero()) { cd.top = i; break; }
    }
    return cd;
}

Ordering ordering_from_sign(int s) {
    if (s > 0) return Ordering::Greater;
    if (s < 0) return Ordering::Less;
    return Ordering::Equal;
}

int governing_sign_at_rational(const CandidateData& cd, const Rational& t) {
    for (int i = cd.top; i >= 0; --i) {
        int s = eval_sign(cd.c[static_cast<size_t>(i)], t);
        if (s != 0) return s;
    }
    return 0;
}

/// The root of an isolated irrational quadratic as an element of Q(sqrt(D)).
QuadExt quadratic_root_value(const IsolatedRoot& root) {
    const Polynomial& f = root.poly;
    require(f.degree() == 2, ErrorCode::Internal,
            "irrational wall of unexpected degree");
    Rational a = f.coeff(2), b = f.coeff(1), c = f.coeff(0);
    Rational disc = b * b - Rational(4) * a * c;
    require(disc.is_integer() && disc.sign() > 0, ErrorCode::Internal,
            "wall quadratic with non-integral or nonpositive discriminant");
    Integer d = disc.numerator();
    require(mpz_perfect_square_p(d.get_mpz_t()) == 0, ErrorCode::Internal,
            "irrational wall with square discriminant");
    Rational half = Rational(1) / (Rational(2) * a);
    for (int branch : {1, -1}) {
        QuadExt value(-b * half, Rational(branch) * half, d);
        QuadExt above_lo = value - QuadExt::rational(root.lo, d);
        QuadExt below_hi = QuadExt::rational(root.hi, d) - value;
        if (above_lo.sign() >= 0 && below_hi.sign() >= 0) return value;
    }
    fail(ErrorCode::Internal, "quadratic root branch selection failed");
}

int governing_sign_at_root(const CandidateData& cd, const IsolatedRoot& root) {
    if (root.exact) return governing_sign_at_rational(cd, *root.exact);
    QuadExt value = quadratic_root_value(root);
    for (int i = cd.top; i >= 0; --i) {
        int s = eval_sign(cd.c[static_cast<size_t>(i)], value);
        if (s != 0) return s;
    }
    return 0;
}

Verdict verdict_from_orderings(const std::vector<std::pair<std::string, Ordering>>& orderings) {
    std::vector<std::string> greater, equal;
    for (const auto& [name, o] : orderings) {
        if (o == Ordering::Greater) greater.push_back(name);
        else if (o == Ordering::Equal) equal.push_back(name);
    }
    std::sort(greater.begin(), greater.end());
    std::sort(equal.begin(), equal.end());
    if (!greater.empty()) return Verdict{VerdictTag::Unstable, std::move(greater)};
    if (!equal.empty()) return Verdict{VerdictTag::StrictlySemistable, std::move(equal)};
    return Verdict{VerdictTag::Stable, {}};
}

struct WallSeed {
    IsolatedRoot root;
    std::string name;
    int index;
};

struct Analysis {
    std::vector<CandidateData> data;
    std::vector<Wall> walls;
};

Analysis analyze(const SheafClass& E, const std::vector<SheafClass>& candidates,
                 const StabilitySegment& seg) {
    Analysis an;
    for (const SheafClass& F : candidates)
        an.data.push_back(candidate_data(F, E, seg));

    const Rational zero(0), one(1);
    std::vector<WallSeed> seeds;
    for (const CandidateData& cd : an.data) {
        if (cd.top < 0) continue; // numerically proportional: never a wall
        const Polynomial& governing = cd.c[static_cast<size_t>(cd.top)];
        if (governing.degree() < 1) continue;
        std::vector<IsolatedRoot> roots = sturm_isolate(governing, zero, one);
        for (size_t k = 0; k < roots.size(); ++k) {
            const IsolatedRoot& r = roots[k];
            bool at_zero = r.exact && *r.exact == zero;
            bool at_one = r.exact && *r.exact == one;
            int s_at = governing_sign_at_root(cd, r);
            int s_left = 0, s_right = 0;
            if (!at_zero) {
                Rational point;
                if (!r.exact) {
                    point = r.lo;
                } else {
                    Rational prev = k == 0 ? zero
                                           : (roots[k - 1].exact ? *roots[k - 1].exact
                                                                 : roots[k - 1].hi);
                    point = midpoint(prev, *r.exact);
                }
                s_left = eval_sign(governing, point);
            }
            if (!at_one) {
                Rational point;
                if (!r.exact) {
                    point = r.hi;
                } else {
                    Rational next = k + 1 == roots.size()
                                        ? one
                                        : (roots[k + 1].exact ? *roots[k + 1].exact
                                                              : roots[k + 1].lo);
                    point = midpoint(*r.exact, next);
                }
                s_right = eval_sign(governing, point);
            }
            bool wall;
            if (at_zero) wall = s_at != s_right;
            else if (at_one) wall = s_left != s_at;
            else wall = !(s_left == s_at && s_at == s_right);
            if (wall) seeds.push_back(WallSeed{r, cd.sheaf->name, cd.top});
        }
    }

    // Merge seeds that locate the same algebraic number.
    for (WallSeed& seed : seeds) {
        bool merged = false;
        for (Wall& w : an.walls) {
            if (same_root(w.location, seed.root)) {
                w.triggering.emplace_back(seed.name, seed.index);
                merged = true;
                break;
            }
        }
        if (!merged) {
            Wall w;
            w.location = seed.root;
            w.triggering.emplace_back(seed.name, seed.index);
            w.endpoint = seed.root.exact && (*seed.root.exact == zero || *seed.root.exact == one);
            an.walls.push_back(std::move(w));
        }
    }
    for (Wall& w : an.walls) std::sort(w.triggering.begin(), w.triggering.end());

    // insertion sort: compare_roots refines its arguments, which std::sort
    // comparators must not do
    for (size_t i = 1; i < an.walls.size(); ++i) {
        for (size_t j = i;
             j > 0 && compare_roots(an.walls[j].location, an.walls[j - 1].location) < 0; --j)
            std::swap(an.walls[j], an.walls[j - 1]);
    }

    // Keep interior isolating intervals strictly inside (0,1) and strictly
    // separated from each other, so chambers always have sampling room.
    for (Wall& w : an.walls) {
        while (!w.location.exact && (w.location.lo <= zero || w.location.hi >= one))
            w.location = refined(std::move(w.location));
    }
    for (size_t i = 0; i + 1 < an.walls.size(); ++i) {
        IsolatedRoot& a = an.walls[i].location;
        IsolatedRoot& b = an.walls[i + 1].location;
        while (!(a.hi < b.lo)) {
            if (!a.exact) a = refined(std::move(a));
            if (!b.exact) b = refined(std::move(b));
        }
    }
    return an;
}

Rational chamber_sample(const Rational& lo, const Rational& hi) {
    Rational pad = (hi - lo) / Rational(4);
    return simplest_rational_in(lo + pad, hi - pad);
}

} // namespace

StabilitySegment validate_segment(const StabilityParameter& from, const StabilityParameter& to,
                                  std::vector<Rational> volumes, int d) {
    require(from.size() == to.size() && from.size() == volumes.size(),
            ErrorCode::LengthMismatch, "segment endpoints and volumes must share length");
    require(d >= 0, ErrorCode::ValueError, "negative dimension");
    for (const Rational& v : volumes)
        require(v.sign() > 0, ErrorCode::ValueError, "volumes must be positive");
    for (const StabilityParameter* sp : {&from, &to}) {
        Rational sum;
        for (size_t j = 0; j < volumes.size(); ++j) sum += volumes[j] * (*sp)[j];
        require(sum == Rational(1), ErrorCode::NotNormalized,
                "segment endpoint not normalized: sum vol_j * sigma_j = " + sum.str());
    }
    return StabilitySegment{from, to, std::move(volumes), d};
}

StabilityParameter parameter_at(const StabilitySegment& seg, const Rational& t) {
    require(t.sign() >= 0 && t <= Rational(1), ErrorCode::RangeError,
            "segment parameter outside [0,1]");
    std::vector<Rational> sigma(seg.from.size());
    for (size_t j = 0; j < sigma.size(); ++j)
        sigma[j] = (Rational(1) - t) * seg.from[j] + t * seg.to[j];
    return StabilityParameter::make(std::move(sigma));
}

std::vector<Polynomial> wall_polynomials(const SheafClass& F, const SheafClass& E,
                                         const StabilitySegment& seg) {
    require(F.j0() == E.j0(), ErrorCode::LengthMismatch,
            "sheaf classes with different polarization counts");
    require(F.d == E.d && E.d == seg.d, ErrorCode::LengthMismatch,
            "sheaf classes and segment with different dimensions");
    require(F.j0() == seg.from.size(), ErrorCode::LengthMismatch,
            "segment length does not match the sheaf classes");
    check_positive_leading(E, seg);
    check_positive_leading(F, seg);

    Polynomial r_e = alpha_poly(E, seg, seg.d);
    Polynomial r_f = alpha_poly(F, seg, seg.d);
    std::vector<Polynomial> c(static_cast<size_t>(seg.d) + 1, Polynomial(Var::t));
    for (int i = 0; i <= seg.d; ++i)
        c[static_cast<size_t>(i)] = r_e * alpha_poly(F, seg, i) - r_f * alpha_poly(E, seg, i);
    return c;
}

std::vector<Wall> find_walls(const SheafClass& E, const std::vector<SheafClass>& candidates,
                             const StabilitySegment& seg) {
    return analyze(E, candidates, seg).walls;
}

ChamberReport chamber_decomposition(const SheafClass& E,
                                    const std::vector<SheafClass>& candidates,
                                    const StabilitySegment& seg) {
    Analysis an = analyze(E, candidates, seg);
    ChamberReport report;

    for (const Wall& w : an.walls) {
        WallInfo info;
        info.wall = w;
        for (const CandidateData& cd : an.data)
            info.orderings.emplace_back(cd.sheaf->name,
                                        ordering_from_sign(governing_sign_at_root(cd, w.location)));
        std::sort(info.orderings.begin(), info.orderings.end());
        info.verdict = verdict_from_orderings(info.orderings);
        report.walls.push_back(std::move(info));
    }

    // Chambers between consecutive cut points; walls at the endpoints do not
    // open chambers of their own.
    const Rational zero(0), one(1);
    struct Cut { std::optional<size_t> wall; Rational bound; };
    std::vector<Cut> cuts;
    if (an.walls.empty() || !(an.walls.front().endpoint && *an.walls.front().location.exact == zero))
        cuts.push_back({std::nullopt, zero});
    for (size_t i = 0; i < an.walls.size(); ++i) cuts.push_back({i, Rational(0)});
    bool wall_at_one = !an.walls.empty() && an.walls.back().endpoint &&
                       *an.walls.back().location.exact == one;
    if (!wall_at_one) cuts.push_back({std::nullopt, one});

    for (size_t c = 0; c + 1 < cuts.size(); ++c) {
        const Cut& lc = cuts[c];
        const Cut& rc = cuts[c + 1];
        Rational lo = lc.wall ? (an.walls[*lc.wall].location.exact
                                     ? *an.walls[*lc.wall].location.exact
                                     : an.walls[*lc.wall].location.hi)
                              : zero;
        Rational hi = rc.wall ? (an.walls[*rc.wall].location.exact
                                     ? *an.walls[*rc.wall].location.exact
                                     : an.walls[*rc.wall].location.lo)
                              : one;
        Chamber chamber;
        chamber.left_wall = lc.wall;
        chamber.right_wall = rc.wall;
        chamber.sample = chamber_sample(lo, hi);
        StabilityParameter sigma = parameter_at(seg, chamber.sample);
        for (const SheafClass& F : candidates)
            chamber.orderings.emplace_back(F.name, compare_reduced(F, E, sigma));
        std::sort(chamber.orderings.begin(), chamber.orderings.end());
        chamber.verdict = stability_verdict(E, candidates, sigma);
        report.chambers.push_back(std::move(chamber));
    }
    return report;
}

FlipSchedule flip_schedule(const SheafClass& E, const std::vector<SheafClass>& candidates,
                           const StabilitySegment& seg) {
    ChamberReport report = chamber_decomposition(E, candidates, seg);
    FlipSchedule schedule;
    for (size_t w = 0; w < report.walls.size(); ++w) {
        FlipEvent event;
        event.wall = report.walls[w].wall;
        event.at = report.walls[w].verdict;
        const Chamber* left = nullptr;
        const Chamber* right = nullptr;
        for (const Chamber& ch : report.chambers) {
            if (ch.right_wall && *ch.right_wall == w) left = &ch;
            if (ch.left_wall && *ch.left_wall == w) right = &ch;
        }
        if (left) event.before = left->verdict;
        if (right) event.after = right->verdict;
        const auto& from = left ? left->orderings : report.walls[w].orderings;
        const auto& to = right ? right->orderings : report.walls[w].orderings;
        for (size_t i = 0; i < from.size(); ++i)
            if (from[i].second != to[i].second) event.flipped.push_back(from[i].first);
        schedule.events.push_back(std::move(event));
    }
    return schedule;
}

UniformityReport uniformity_check(const std::vector<SheafClass>& family,
                                  const StabilitySegment& seg) {
    UniformityReport report;
    for (const SheafClass& E : family) {
        require(E.twisted_hilbert.has_value(), ErrorCode::MissingTwistData,
                E.name + ": uniformity check needs twisted Hilbert polynomials");
        require(E.rank.sign() > 0, ErrorCode::ValueError, E.name + ": rank must be positive");
        const std::vector<Polynomial>& tw = *E.twisted_hilbert;
        require(tw.size() == seg.from.size(), ErrorCode::LengthMismatch,
                E.name + ": twisted Hilbert polynomial count");

        Rational inv_rank = Rational(1) / E.rank;
        std::vector<Polynomial> coeffs; // index = k-power, values in Q[t]
        for (int i = 0; i <= seg.d; ++i) {
            Polynomial a(Var::t);
            for (size_t j = 0; j < tw.size(); ++j)
                a += tw[j].coeff(i) * sigma_poly(seg, j);
            coeffs.push_back(inv_rank * a);
        }

        Rational lead = Rational(1) / factorial(seg.d);
        if (coeffs.back() != Polynomial::constant(Var::t, lead))
            report.offending.emplace_back(E.name, seg.d);
        for (int i = seg.d - 1; i >= 1; --i)
            if (coeffs[static_cast<size_t>(i)].degree() > 0)
                report.offending.emplace_back(E.name, i);
        if (coeffs.front().degree() > 1)
            report.offending.emplace_back(E.name, 0);

        report.coefficients.emplace_back(E.name, std::move(coeffs));
    }
    report.uniform = report.offending.empty();
    return report;
}

GridCheck grid_check(const SheafClass& E, const std::vector<SheafClass>& candidates,
                     const StabilitySegment& seg, const ChamberReport& report, int n) {
    require(n >= 1, ErrorCode::ValueError, "grid size must be positive");
    GridCheck check;
    check.n = n;

    // Refine private copies of the wall intervals until no interval contains
    // a grid point, so every grid point lands cleanly in one chamber.
    const Rational step = Rational(1, n);
    std::vector<IsolatedRoot> roots;
    for (const WallInfo& w : report.walls) {
        IsolatedRoot r = refined_below(w.wall.location, step / Rational(2));
        if (!r.exact) {
            for (;;) {
                Integer k;
                // smallest multiple of 1/n that is >= lo
                mpz_cdiv_q(k.get_mpz_t(), (r.lo * Rational(n)).numerator().get_mpz_t(),
                           (r.lo * Rational(n)).denominator().get_mpz_t());
                Rational grid_point = Rational(k) * step;
                if (grid_point > r.hi) break;
                r = refined_to_exclude(std::move(r), grid_point);
            }
        }
        roots.push_back(std::move(r));
    }

    auto expected_verdict = [&](const Rational& g) -> const Verdict& {
        for (size_t w = 0; w < roots.size(); ++w)
            if (roots[w].exact && *roots[w].exact == g) return report.walls[w].verdict;
        // count walls strictly below g
        size_t below = 0;
        for (const IsolatedRoot& r : roots)
            if ((r.exact && *r.exact < g) || (!r.exact && r.hi < g)) ++below;
        // chamber index: walls at t=0 do not open a chamber
        size_t idx = below;
        if (!report.walls.empty() && report.walls.front().wall.endpoint &&
            *report.walls.front().wall.location.exact == Rational(0))
            idx -= 1;
        return report.chambers[idx].verdict;
    };

    std::vector<Verdict> grid_verdicts;
    grid_verdicts.reserve(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        Rational g = Rational(k, n);
        Verdict actual = stability_verdict(E, candidates, parameter_at(seg, g));
        if (actual != expected_verdict(g)) {
            check.consistent = false;
            check.mismatches.push_back(g);
        }
        grid_verdicts.push_back(std::move(actual));
    }

    for (int k = 0; k < n; ++k) {
        if (grid_verdicts[static_cast<size_t>(k)] == grid_verdicts[static_cast<size_t>(k) + 1])
            continue;
        Rational a = Rational(k, n), b = Rational(k + 1, n);
        size_t inside = 0;
        for (const IsolatedRoot& r : roots) {
            if (r.exact ? (a <= *r.exact && *r.exact <= b) : (a < r.lo && r.hi < b)) ++inside;
        }
        if (inside != 1) {
            check.brackets_ok = false;
            check.bad_gaps.emplace_back(a, b);
        }
    }
    return check;
}

} // namespace gieseker
