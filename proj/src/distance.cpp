#include "geolab/distance.hpp"
#include "geolab/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace geolab {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct MissEval {
    enum class Status { valid, no_cross, left_domain } status =
        Status::no_cross;
    double miss = 0.0;
    double s = 0.0;
    double vx = 0.0, vtheta = 0.0;
};

MissEval eval_miss(const ProfileMetric& m, Point p, double alpha,
                   double dtheta, double x_q, double budget,
                   const GeodesicOptions& go) {
    MissEval e;
    const ThetaCrossing c = integrate_to_theta(m, p, alpha, dtheta, budget, go);
    if (c.crossed) {
        e.status = MissEval::Status::valid;
        e.miss = c.x - x_q;
        e.s = c.s;
        e.vx = c.vx;
        e.vtheta = c.vtheta;
    } else if (c.left_domain) {
        e.status = MissEval::Status::left_domain;
    }
    return e;
}

double path_budget(const ProfileMetric& m, Point p, double x_q, double dtheta,
                   const DistanceOptions& opts) {
    const double fiber_scale =
        std::sqrt(std::min(m.fiber(p.x), m.fiber(x_q)));
    const double upper = std::abs(x_q - p.x) + dtheta * fiber_scale;
    return opts.budget_factor * upper + opts.budget_pad;
}

struct SweepPoint {
    double alpha;
    MissEval eval;
};

// Secant iteration on the fine integrator, kept inside [lo, hi] with
// bisection fallback when an iterate leaves the bracket or fails to cross.
std::optional<DistanceCandidate> refine_root(
    const ProfileMetric& m, Point p, double x_q, double dtheta, double budget,
    const DistanceOptions& opts, double lo, double hi) {
    const GeodesicOptions fine{opts.step, opts.domain_limit, 1 << 20};

    MissEval elo = eval_miss(m, p, lo, dtheta, x_q, budget, fine);
    MissEval ehi = eval_miss(m, p, hi, dtheta, x_q, budget, fine);

    // Re-establish the bracket on the fine integrator if needed.
    for (int i = 0; i < 12 && (elo.status != MissEval::Status::valid ||
                               ehi.status != MissEval::Status::valid ||
                               elo.miss * ehi.miss > 0.0);
         ++i) {
        const double mid = 0.5 * (lo + hi);
        MissEval em = eval_miss(m, p, mid, dtheta, x_q, budget, fine);
        if (em.status != MissEval::Status::valid) return std::nullopt;
        if (elo.status == MissEval::Status::valid && elo.miss * em.miss <= 0.0) {
            hi = mid;
            ehi = em;
        } else {
            lo = mid;
            elo = em;
        }
        if (elo.status == MissEval::Status::valid &&
            ehi.status == MissEval::Status::valid && elo.miss * ehi.miss <= 0.0) {
            break;
        }
    }
    if (elo.status != MissEval::Status::valid ||
        ehi.status != MissEval::Status::valid || elo.miss * ehi.miss > 0.0) {
        return std::nullopt;
    }

    double a0 = lo, a1 = hi;
    MissEval e0 = elo, e1 = ehi;
    for (int it = 0; it < 80; ++it) {
        if (std::abs(e1.miss) < opts.miss_tol) break;
        double next;
        if (e1.miss != e0.miss) {
            next = a1 - e1.miss * (a1 - a0) / (e1.miss - e0.miss);
        } else {
            next = 0.5 * (lo + hi);
        }
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        MissEval en = eval_miss(m, p, next, dtheta, x_q, budget, fine);
        if (en.status != MissEval::Status::valid) {
            // Shrink towards the valid side and continue.
            if (std::abs(next - a1) < 1e-15) break;
            hi = (next > a1) ? next : hi;
            lo = (next < a1) ? next : lo;
            next = 0.5 * (a1 + next);
            en = eval_miss(m, p, next, dtheta, x_q, budget, fine);
            if (en.status != MissEval::Status::valid) return std::nullopt;
        }
        // Maintain the enclosing bracket for the fallback.
        if (en.miss * elo.miss <= 0.0) {
            hi = next;
        } else {
            lo = next;
            elo = en;
        }
        a0 = a1;
        e0 = e1;
        a1 = next;
        e1 = en;
        if (std::abs(a1 - a0) < 1e-15) break;
    }
    if (std::abs(e1.miss) > std::max(opts.miss_tol * 100.0, 1e-7)) {
        return std::nullopt;
    }

    DistanceCandidate cand;
    cand.length = e1.s;
    cand.angle = a1;
    cand.arrival_vx = e1.vx;
    cand.arrival_vtheta = e1.vtheta;
    return cand;
}

// Roots of the miss function for one winding class (positive dtheta).
std::vector<DistanceCandidate> solve_class(const ProfileMetric& m, Point p,
                                           double x_q, double dtheta,
                                           const DistanceOptions& opts,
                                           std::optional<double> hint) {
    const double budget = path_budget(m, p, x_q, dtheta, opts);
    const GeodesicOptions coarse{opts.sweep_step, opts.domain_limit, 1 << 20};
    std::vector<DistanceCandidate> out;

    if (hint) {
        const double lo = std::max(1e-6, *hint - 0.03);
        const double hi = std::min(std::numbers::pi - 1e-6, *hint + 0.03);
        if (auto c = refine_root(m, p, x_q, dtheta, budget, opts, lo, hi)) {
            out.push_back(*c);
            return out;
        }
    }

    const int n = opts.fast_mode ? std::max(8, opts.sweep_angles / 2)
                                 : opts.sweep_angles;
    std::vector<double> angles;
    angles.reserve(n + 12);
    // Geometric guard ladder near both boundaries: roots of shallow
    // outward-winding geodesics sit at very small angles.
    for (double a : {2e-4, 1e-3, 5e-3, 2e-2, 6e-2}) {
        angles.push_back(a);
        angles.push_back(std::numbers::pi - a);
    }
    for (int i = 1; i <= n; ++i) {
        angles.push_back(std::numbers::pi * i / (n + 1));
    }
    std::sort(angles.begin(), angles.end());

    std::vector<SweepPoint> sweep;
    sweep.reserve(angles.size() + 16);
    for (double a : angles) {
        sweep.push_back({a, eval_miss(m, p, a, dtheta, x_q, budget, coarse)});
    }

    // Subdivide across validity edges so brackets hiding next to the
    // no-cross region are recovered.
    for (int depth = 0; depth < opts.sweep_max_depth; ++depth) {
        bool grew = false;
        for (std::size_t i = 0; i + 1 < sweep.size(); ++i) {
            const bool va = sweep[i].eval.status == MissEval::Status::valid;
            const bool vb = sweep[i + 1].eval.status == MissEval::Status::valid;
            if (va == vb) continue;
            if (sweep[i + 1].alpha - sweep[i].alpha < 2e-3) continue;
            const double mid = 0.5 * (sweep[i].alpha + sweep[i + 1].alpha);
            sweep.insert(sweep.begin() + i + 1,
                         {mid, eval_miss(m, p, mid, dtheta, x_q, budget, coarse)});
            grew = true;
            ++i;
        }
        if (!grew) break;
    }

    for (std::size_t i = 0; i + 1 < sweep.size(); ++i) {
        const auto& a = sweep[i];
        const auto& b = sweep[i + 1];
        if (a.eval.status != MissEval::Status::valid ||
            b.eval.status != MissEval::Status::valid) {
            continue;
        }
        if (a.eval.miss * b.eval.miss > 0.0) continue;
        if (auto c = refine_root(m, p, x_q, dtheta, budget, opts, a.alpha,
                                 b.alpha)) {
            out.push_back(*c);
            if (opts.fast_mode) break;
        }
    }
    return out;
}

} // namespace

std::vector<DistanceCandidate> solve_winding_class(const ProfileMetric& m,
                                                   Point p, double x_q,
                                                   double dtheta_abs,
                                                   const DistanceOptions& opts,
                                                   std::optional<double> hint_angle) {
    return solve_class(m, p, x_q, dtheta_abs, opts, hint_angle);
}

std::vector<DistanceCandidate> distance_candidates(const ProfileMetric& m,
                                                   Point p, Point q,
                                                   const DistanceOptions& opts) {
    if (std::abs(p.x) > opts.domain_limit || std::abs(q.x) > opts.domain_limit) {
        throw DomainError("distance: endpoint outside the working domain");
    }
    std::vector<DistanceCandidate> all;

    const double dpr = std::remainder(q.theta - p.theta, kTwoPi);
    for (int w = -opts.winding_max; w <= opts.winding_max; ++w) {
        const double dth = dpr + kTwoPi * w;
        if (std::abs(dth) < 1e-12) {
            DistanceCandidate c;
            c.length = std::abs(q.x - p.x);
            c.winding = w;
            c.angle = (q.x >= p.x) ? 0.0 : std::numbers::pi;
            c.arrival_vx = (q.x >= p.x) ? 1.0 : -1.0;
            all.push_back(c);
            continue;
        }
        const bool mirrored = dth < 0.0;
        auto roots = solve_class(m, p, q.x, std::abs(dth), opts, std::nullopt);
        for (auto& r : roots) {
            r.winding = w;
            r.mirrored = mirrored;
            if (mirrored) r.arrival_vtheta = -r.arrival_vtheta;
            all.push_back(r);
        }
    }

    std::sort(all.begin(), all.end(),
              [](const auto& a, const auto& b) { return a.length < b.length; });

    // Drop duplicate roots (same class, same angle found twice).
    std::vector<DistanceCandidate> dedup;
    for (const auto& c : all) {
        bool dup = false;
        for (const auto& d : dedup) {
            if (c.winding == d.winding && c.mirrored == d.mirrored &&
                std::abs(c.length - d.length) < 1e-9 &&
                std::abs(c.angle - d.angle) < 1e-5) {
                dup = true;
                break;
            }
        }
        if (!dup) dedup.push_back(c);
    }
    return dedup;
}

DistanceResult distance(const ProfileMetric& m, Point p, Point q,
                        const DistanceOptions& opts) {
    // Coincident endpoints (theta compared on the circle).
    if (p.x == q.x && std::abs(std::remainder(q.theta - p.theta, kTwoPi)) < 1e-14) {
        return {0.0, 0, 1, false};
    }
    auto cands = distance_candidates(m, p, q, opts);
    if (cands.empty()) {
        std::ostringstream msg;
        msg << "distance: shooting failed to bracket for p=(" << p.x << ","
            << p.theta << ") q=(" << q.x << "," << q.theta << ")";
        throw ConvergenceError(msg.str());
    }
    DistanceResult res;
    res.value = cands.front().length;
    res.winding = cands.front().winding;
    int count = 0;
    for (const auto& c : cands) {
        if (c.length <= res.value * (1.0 + opts.near_cut_rel)) ++count;
    }
    res.minimizer_count = count;
    res.near_cut = count >= 2;
    return res;
}

DistanceResult distance(const WarpedMetric& m, Point p, Point q,
                        const DistanceOptions& opts) {
    return distance(ProfileMetric::from_warped(m), p, q, opts);
}

std::optional<double> loop_injectivity_bound(const ProfileMetric& m, Point p,
                                             const DistanceOptions& opts) {
    auto roots = solve_class(m, p, p.x, kTwoPi, opts, std::nullopt);
    if (roots.empty()) return std::nullopt;
    double best = roots.front().length;
    for (const auto& r : roots) best = std::min(best, r.length);
    return 0.5 * best;
}

std::optional<double> loop_injectivity_bound(const WarpedMetric& m, Point p,
                                             const DistanceOptions& opts) {
    return loop_injectivity_bound(ProfileMetric::from_warped(m), p, opts);
}

} // namespace geolab
