#include "topent/interval_map.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace topent {

namespace {

double logistic_eval(double a, double x) { return a * x * (1.0 - x); }

double tent_eval(double a, double x) { return a * (0.5 - std::abs(x - 0.5)); }

double cubic_eval(const std::vector<double>& p, double x) {
    const double alpha = p[0], beta = p[1], sigma1 = p[2];
    return ((alpha * x + beta) * x + (-sigma1 - alpha)) * x - beta;
}

constexpr double kAnchorTol = 1e-12;
constexpr double kRangeTol = 1e-9;

}  // namespace

std::string cubic_invalid_reason(const CubicParams& p) {
    if (p.sigma1 != 1 && p.sigma1 != -1) return "sigma1 must be +1 or -1";
    if (p.alpha > 0.0) {
        if (p.sigma1 != -1) return "positive shape requires sigma1 = -1";
        if (!(p.alpha > 1.0)) return "positive shape requires alpha > 1";
        if (p.alpha > 4.0 + kRangeTol) return "positive shape requires alpha <= 4";
        const double bound = 2.0 * std::sqrt(p.alpha) - p.alpha;
        if (std::abs(p.beta) > bound + kRangeTol) return "|beta| exceeds 2 sqrt(alpha) - alpha";
    } else if (p.alpha < 0.0) {
        if (p.sigma1 != 1) return "negative shape requires sigma1 = +1";
        if (!(p.alpha < -1.0)) return "negative shape requires alpha < -1";
        if (p.alpha < -4.0 - kRangeTol) return "negative shape requires alpha >= -4";
        const double bound = 2.0 * std::sqrt(-p.alpha) - (-p.alpha);
        // Strict bound, except that |beta| equal to the bound (the
        // Chebyshev-conjugate corner at alpha = -4) is admissible.
        if (std::abs(p.beta) > bound + 1e-12)
            return "|beta| must be below 2 sqrt(|alpha|) - |alpha|";
    } else {
        return "alpha must be nonzero";
    }
    const double disc = p.beta * p.beta + 3.0 * p.alpha * (p.sigma1 + p.alpha);
    if (!(disc > 0.0)) return "degenerate critical points (non-positive discriminant)";
    return {};
}

std::string quartic_invalid_reason(const QuarticParams& p) {
    if (p.lambda < 0.0 || p.lambda > 4.0) return "lambda outside [0,4]";
    if (p.mu < 0.0 || p.mu > 4.0) return "mu outside [0,4]";
    return {};
}

std::pair<double, double> critical_points_cubic(const CubicParams& p) {
    // f'(x) = 3 alpha x^2 + 2 beta x + (-sigma1 - alpha)
    const double disc = p.beta * p.beta + 3.0 * p.alpha * (p.sigma1 + p.alpha);
    if (!(disc > 0.0))
        throw DegenerateMapError("cubic critical points are not real and distinct");
    const double root = std::sqrt(disc);
    double c1 = (-p.beta - root) / (3.0 * p.alpha);
    double c2 = (-p.beta + root) / (3.0 * p.alpha);
    if (c1 > c2) std::swap(c1, c2);
    return {c1, c2};
}

std::vector<double> critical_points_quartic(const QuarticParams& p) {
    if (p.lambda <= 2.0 + 1e-9) {
        if (p.lambda < 2.0 - 1e-9) return {0.5};
        return {0.5};  // tangency collapses
    }
    // q_lambda(x) = 1/2  =>  x = 1/2 -+ sqrt(lambda^2 - 2 lambda) / (2 lambda)
    const double d = std::sqrt(p.lambda * p.lambda - 2.0 * p.lambda) / (2.0 * p.lambda);
    return {0.5 - d, 0.5, 0.5 + d};
}

double exact_sawtooth_entropy(const SawtoothParams& p) {
    return std::max(0.0, std::log(p.a) + std::log(p.b));
}

ModalMap::ModalMap(MapFamily family, std::vector<double> params, Interval domain,
                   std::vector<double> critical, Shape shape)
    : family_(family),
      params_(std::move(params)),
      domain_(domain),
      critical_(std::move(critical)),
      shape_(shape) {
    validate();
}

ModalMap ModalMap::logistic(double a) {
    if (a < 0.0 || a > 4.0) throw DomainError("logistic parameter must lie in [0,4]");
    return ModalMap(MapFamily::Logistic, {a}, {0.0, 1.0}, {0.5}, Shape::Positive);
}

ModalMap ModalMap::tent(double a) {
    if (a < 0.0 || a > 2.0) throw DomainError("tent parameter must lie in [0,2]");
    return ModalMap(MapFamily::Tent, {a}, {0.0, 1.0}, {0.5}, Shape::Positive);
}

ModalMap ModalMap::sawtooth(const SawtoothParams& p) {
    if (p.a < 0.0 || p.a > 2.0 || p.b < 0.0 || p.b > 2.0)
        throw DomainError("sawtooth parameters must lie in [0,2]");
    std::vector<double> crit;
    if (p.a > 1.0 + 1e-9) {
        // T_a(x) = 1/2 on both branches; the corner at 1/2 is a turning
        // point of the composition in between.
        crit = {1.0 / (2.0 * p.a), 0.5, 1.0 - 1.0 / (2.0 * p.a)};
    } else {
        crit = {0.5};
    }
    return ModalMap(MapFamily::SawtoothComposition, {p.a, p.b}, {0.0, 1.0},
                    std::move(crit), Shape::Positive);
}

ModalMap ModalMap::cubic(const CubicParams& p) {
    const std::string reason = cubic_invalid_reason(p);
    if (!reason.empty()) {
        if (reason.find("degenerate") != std::string::npos) throw DegenerateMapError(reason);
        throw DomainError("cubic: " + reason);
    }
    auto [c1, c2] = critical_points_cubic(p);
    const Shape shape = p.alpha > 0.0 ? Shape::Positive : Shape::Negative;
    return ModalMap(MapFamily::Cubic, {p.alpha, p.beta, static_cast<double>(p.sigma1)},
                    {-1.0, 1.0}, {c1, c2}, shape);
}

ModalMap ModalMap::quartic(const QuarticParams& p) {
    const std::string reason = quartic_invalid_reason(p);
    if (!reason.empty()) throw DomainError("quartic: " + reason);
    return ModalMap(MapFamily::QuarticComposition, {p.lambda, p.mu}, {0.0, 1.0},
                    critical_points_quartic(p), Shape::Positive);
}

double ModalMap::eval_raw(double x) const {
    switch (family_) {
        case MapFamily::Logistic:
            return logistic_eval(params_[0], x);
        case MapFamily::Tent:
            return tent_eval(params_[0], x);
        case MapFamily::SawtoothComposition:
            return tent_eval(params_[1], tent_eval(params_[0], x));
        case MapFamily::Cubic:
            return cubic_eval(params_, x);
        case MapFamily::QuarticComposition:
            return logistic_eval(params_[1], logistic_eval(params_[0], x));
    }
    return 0.0;  // unreachable
}

double ModalMap::operator()(double x) const {
    if (!domain_.contains(x))
        throw DomainError("evaluation point outside the map domain");
    return eval_raw(x);
}

double ModalMap::step(double x) const {
    double y = domain_.clamp(eval_raw(x));
    for (double c : critical_)
        if (std::abs(y - c) < kCriticalTol) return c;
    return y;
}

double ModalMap::iterate(double x, int n) const {
    for (int k = 0; k < n; ++k) x = step(x);
    return x;
}

void ModalMap::validate() const {
    if (!(domain_.lo < domain_.hi)) throw DomainError("empty domain");
    for (std::size_t i = 0; i < critical_.size(); ++i) {
        if (!(critical_[i] > domain_.lo && critical_[i] < domain_.hi))
            throw DegenerateMapError("critical point on or outside the boundary");
        if (i > 0 && !(critical_[i - 1] < critical_[i]))
            throw DegenerateMapError("critical points not strictly increasing");
    }
    // Boundary anchoring: both endpoints map onto endpoints.
    for (double e : {domain_.lo, domain_.hi}) {
        const double fe = eval_raw(e);
        const double d = std::min(std::abs(fe - domain_.lo), std::abs(fe - domain_.hi));
        if (d > kAnchorTol) throw DegenerateMapError("map is not boundary anchored");
    }
    // f(I) within I: extrema of the families occur only at endpoints
    // and critical points.
    std::vector<double> witness = critical_;
    witness.push_back(domain_.lo);
    witness.push_back(domain_.hi);
    for (double x : witness) {
        const double fx = eval_raw(x);
        if (!domain_.contains(fx, kRangeTol))
            throw DomainError("map does not send its domain into itself");
    }
}

}  // namespace topent
