#include "topent/oracles.hpp"

#include <algorithm>
#include <cmath>

namespace topent {

namespace {

constexpr long long kBreakpointGuard = 10'000'000;
constexpr double kRootTol = 1e-13;
constexpr double kTouchTol = 1e-12;

// Monotone refinement state: pts holds the domain endpoints plus all
// interior breakpoints of f^m, vals the images f^m(pts).
struct Refinement {
    int m = 1;
    std::vector<double> pts;
    std::vector<double> vals;
};

Refinement initial_refinement(const ModalMap& map) {
    Refinement r;
    r.pts.push_back(map.domain().lo);
    for (double c : map.critical_points()) r.pts.push_back(c);
    r.pts.push_back(map.domain().hi);
    for (double x : r.pts) r.vals.push_back(map.step(x));
    return r;
}

// Root of f^m(x) = c inside (u,v), where f^m is monotone there.
double bisect_crossing(const ModalMap& map, int m, double u, double v, double fu,
                       double c) {
    const bool increasing = fu < c;
    while (v - u > kRootTol) {
        const double mid = 0.5 * (u + v);
        const double g = map.iterate(mid, m) - c;
        if ((g < 0.0) == increasing)
            u = mid;
        else
            v = mid;
    }
    return 0.5 * (u + v);
}

// One refinement step: breakpoints of f^{m+1} are those of f^m plus
// the transversal solutions of f^m(x) = c_j within each monotone lap.
void refine(const ModalMap& map, Refinement& r) {
    const auto& crit = map.critical_points();
    std::vector<double> pts_new;
    std::vector<double> vals_new;
    pts_new.reserve(r.pts.size() * 2);
    vals_new.reserve(r.pts.size() * 2);

    for (std::size_t i = 0; i + 1 < r.pts.size(); ++i) {
        const double u = r.pts[i], v = r.pts[i + 1];
        const double fu = r.vals[i], fv = r.vals[i + 1];
        pts_new.push_back(u);
        vals_new.push_back(map.step(fu));

        const double lo = std::min(fu, fv), hi = std::max(fu, fv);
        std::vector<std::pair<double, double>> roots;  // (x, f^{m+1}(x))
        for (double c : crit) {
            // Touches within tolerance are tangencies, not crossings.
            if (c > lo + kTouchTol && c < hi - kTouchTol)
                roots.emplace_back(bisect_crossing(map, r.m, u, v, fu, c), map.step(c));
        }
        std::sort(roots.begin(), roots.end());
        for (auto& [x, val] : roots) {
            // A root this close to a lap end is below the resolution of
            // the bisection; treat it like the tangency case above.
            if (x - u < 1e-14 || v - x < 1e-14) continue;
            pts_new.push_back(x);
            vals_new.push_back(val);
        }
    }
    pts_new.push_back(r.pts.back());
    vals_new.push_back(map.step(r.vals.back()));

    if (static_cast<long long>(pts_new.size()) > kBreakpointGuard)
        throw SizeError("lap refinement exceeds the breakpoint guard");

    r.pts = std::move(pts_new);
    r.vals = std::move(vals_new);
    ++r.m;
}

}  // namespace

LapDecomposition brute_force_laps(const ModalMap& map, int n) {
    if (n < 1) throw DomainError("iterate index must be >= 1");
    Refinement r = initial_refinement(map);
    while (r.m < n) refine(map, r);
    LapDecomposition out;
    out.n = n;
    out.breakpoints.assign(r.pts.begin() + 1, r.pts.end() - 1);
    out.lap_count = static_cast<long long>(out.breakpoints.size()) + 1;
    return out;
}

std::vector<long long> brute_force_lap_sequence(const ModalMap& map, int n) {
    Refinement r = initial_refinement(map);
    std::vector<long long> out;
    out.reserve(n);
    out.push_back(static_cast<long long>(r.pts.size()) - 1);
    while (r.m < n) {
        refine(map, r);
        out.push_back(static_cast<long long>(r.pts.size()) - 1);
    }
    return out;
}

long long periodic_point_count(const ModalMap& map, int n) {
    Refinement r = initial_refinement(map);
    while (r.m < n) refine(map, r);

    const double tol = 1e-9;
    std::vector<double> roots;
    // Fixed points sitting on breakpoints or endpoints.
    std::vector<double> g(r.pts.size());
    for (std::size_t i = 0; i < r.pts.size(); ++i) {
        g[i] = r.vals[i] - r.pts[i];
        if (std::abs(g[i]) < tol) roots.push_back(r.pts[i]);
    }
    // At most one transversal crossing per monotone lap.
    for (std::size_t i = 0; i + 1 < r.pts.size(); ++i) {
        if ((g[i] < -tol && g[i + 1] > tol) || (g[i] > tol && g[i + 1] < -tol)) {
            double u = r.pts[i], v = r.pts[i + 1];
            const bool rising = g[i] < 0.0;
            while (v - u > kRootTol) {
                const double mid = 0.5 * (u + v);
                const double gm = map.iterate(mid, n) - mid;
                if ((gm < 0.0) == rising)
                    u = mid;
                else
                    v = mid;
            }
            roots.push_back(0.5 * (u + v));
        }
    }
    std::sort(roots.begin(), roots.end());
    long long count = 0;
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (i == 0 || roots[i] - roots[i - 1] > tol) ++count;
    return count;
}

double spectral_radius(const std::vector<std::vector<double>>& m, double tol) {
    const std::size_t dim = m.size();
    for (const auto& row : m) {
        if (row.size() != dim) throw DomainError("matrix must be square");
        for (double e : row)
            if (e < 0.0) throw DomainError("matrix must be non-negative");
    }
    if (dim == 0) return 0.0;

    std::vector<double> v(dim, 1.0), w(dim);
    double estimate = 0.0;
    for (int iter = 0; iter < 100000; ++iter) {
        double norm = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < dim; ++j) s += m[i][j] * v[j];
            w[i] = s;
            norm = std::max(norm, s);
        }
        if (norm == 0.0) return 0.0;  // nilpotent action on the iterate
        if (iter > 0 && std::abs(norm - estimate) < tol * std::max(1.0, norm))
            return norm;
        estimate = norm;
        for (std::size_t i = 0; i < dim; ++i) v[i] = w[i] / norm;
    }
    throw ConvergenceError("power iteration did not converge");
}

std::vector<std::vector<double>> full_tent_matrix() { return {{1.0, 1.0}, {1.0, 1.0}}; }

std::vector<std::vector<double>> fibonacci_matrix() { return {{0.0, 1.0}, {1.0, 1.0}}; }

}  // namespace topent
