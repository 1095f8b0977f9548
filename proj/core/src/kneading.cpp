#include "topent/kneading.hpp"

#include <cmath>

namespace topent {

namespace {
constexpr double kCritTol = 1e-12;
}

double UnimodalFactor::operator()(double x) const {
    return kind == Kind::Logistic ? param * x * (1.0 - x)
                                  : param * (0.5 - std::abs(x - 0.5));
}

Ditinerary ditinerary(const UnimodalFactor& f1, const UnimodalFactor& f2, double x0,
                      int start_track, int n_sym) {
    Ditinerary out;
    out.start_track = start_track;
    out.symbols.reserve(n_sym);
    double x = x0;
    for (int j = 0; j < n_sym; ++j) {
        const int track = (start_track - 1 + j) % 2 + 1;
        const UnimodalFactor& f = (track == 1) ? f1 : f2;
        const double c = f.critical_point();
        Side side = Side::C;
        if (std::abs(x - c) >= kCritTol) side = x < c ? Side::L : Side::R;
        out.symbols.push_back({side, track});
        x = f(x);
    }
    return out;
}

Ordering compare(const Ditinerary& sigma, const Ditinerary& tau) {
    if (sigma.start_track != tau.start_track ||
        sigma.symbols.size() != tau.symbols.size())
        throw std::invalid_argument("d'itineraries are not comparable in length or track");

    int orientation = 1;
    for (std::size_t j = 0; j < sigma.symbols.size(); ++j) {
        const Side a = sigma.symbols[j].side;
        const Side b = tau.symbols[j].side;
        if (a == b) {
            if (a == Side::C) {
                if (j == 0) continue;  // both start at the critical point
                return Ordering::Equal;
            }
            if (a == Side::R) orientation = -orientation;
            continue;
        }
        const bool less = static_cast<int>(a) < static_cast<int>(b);
        return (less == (orientation > 0)) ? Ordering::Less : Ordering::Greater;
    }
    return Ordering::Equal;
}

namespace {

bool le(Ordering o) { return o == Ordering::Less || o == Ordering::Equal; }
bool ge(Ordering o) { return o == Ordering::Greater || o == Ordering::Equal; }

struct Probe {
    Ordering cmp1;
    Ordering cmp2;
};

Probe probe_isentrope(double h_star, double t, int n_sym, const Ditinerary& target_c1,
                      const Ditinerary& target_c2) {
    const double log_a = (1.0 - t) * (h_star - std::log(2.0)) + t * std::log(2.0);
    const double a = std::exp(log_a);
    const double b = std::exp(h_star - log_a);
    const UnimodalFactor f1{UnimodalFactor::Kind::Tent, a};
    const UnimodalFactor f2{UnimodalFactor::Kind::Tent, b};
    const Ditinerary s1 = ditinerary(f1, f2, 0.5, 1, n_sym);
    const Ditinerary s2 = ditinerary(f1, f2, 0.5, 2, n_sym);
    return {compare(s1, target_c1), compare(s2, target_c2)};
}

}  // namespace

InnerOutcome inner_search(double h_star, const Ditinerary& target_c1,
                          const Ditinerary& target_c2, int max_iter) {
    const int n_sym = static_cast<int>(target_c1.symbols.size());
    double t_lo = 0.0, t_hi = 1.0;

    for (int iter = 0; iter < max_iter; ++iter) {
        double t;
        if (iter == 0)
            t = 0.0;
        else if (iter == 1)
            t = 1.0;
        else
            t = 0.5 * (t_lo + t_hi);

        const Probe p = probe_isentrope(h_star, t, n_sym, target_c1, target_c2);
        if (p.cmp1 == Ordering::Incomparable || p.cmp2 == Ordering::Incomparable)
            return InnerOutcome::Inconclusive;

        if (p.cmp1 == Ordering::Equal && p.cmp2 == Ordering::Equal)
            return InnerOutcome::EqualFound;
        if (le(p.cmp1) && le(p.cmp2)) return InnerOutcome::LowerBoundFound;
        if (ge(p.cmp1) && ge(p.cmp2)) return InnerOutcome::UpperBoundFound;

        // Strictly mixed comparisons bracket the comparable pair.
        if (p.cmp1 == Ordering::Less && p.cmp2 == Ordering::Greater)
            t_lo = t;
        else
            t_hi = t;
        if (t_hi - t_lo < 1e-15) return InnerOutcome::Inconclusive;
    }
    return InnerOutcome::Inconclusive;
}

EntropyEstimate radulescu_entropy(const UnimodalFactor& f1, const UnimodalFactor& f2,
                                  const KneadingOptions& opts, BisectionState* trace) {
    const Ditinerary target_c1 = ditinerary(f1, f2, f1.critical_point(), 1, opts.n_sym);
    const Ditinerary target_c2 = ditinerary(f1, f2, f2.critical_point(), 2, opts.n_sym);

    double h0 = 0.0;
    double h1 = std::log(4.1);
    int iterations = 0;
    bool inconclusive = false;

    while (h1 - h0 >= opts.epsilon) {
        const double h = 0.5 * (h0 + h1);
        ++iterations;
        const InnerOutcome out = inner_search(h, target_c1, target_c2, opts.inner_max_iter);
        if (trace) trace->history.emplace_back(h, out);
        if (out == InnerOutcome::LowerBoundFound) {
            h0 = h;
        } else if (out == InnerOutcome::UpperBoundFound) {
            h1 = h;
        } else if (out == InnerOutcome::EqualFound) {
            h0 = h1 = h;
            break;
        } else {
            inconclusive = true;
            break;
        }
    }
    if (trace) {
        trace->h0 = h0;
        trace->h1 = h1;
    }
    return {0.5 * (h0 + h1), iterations,
            inconclusive ? Termination::MaxIterations : Termination::Converged, h1 - h0};
}

EntropyEstimate radulescu_entropy(const QuarticParams& p, double epsilon) {
    const std::string reason = quartic_invalid_reason(p);
    if (!reason.empty()) throw DomainError("quartic: " + reason);
    KneadingOptions opts;
    opts.epsilon = epsilon;
    return radulescu_entropy({UnimodalFactor::Kind::Logistic, p.lambda},
                             {UnimodalFactor::Kind::Logistic, p.mu}, opts);
}

EntropyEstimate radulescu_entropy(const SawtoothParams& p, double epsilon) {
    KneadingOptions opts;
    opts.epsilon = epsilon;
    return radulescu_entropy({UnimodalFactor::Kind::Tent, p.a},
                             {UnimodalFactor::Kind::Tent, p.b}, opts);
}

}  // namespace topent
