#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace topent {

// Errors ---------------------------------------------------------------

// A point or parameter lies outside the map's domain of validity.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Parameters produce a map without the required critical structure
// (e.g. a cubic whose critical points coalesce or leave the reals).
struct DegenerateMapError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Types ----------------------------------------------------------------

struct Interval {
    double lo;
    double hi;

    bool contains(double x, double tol = 0.0) const {
        return x >= lo - tol && x <= hi + tol;
    }
    double clamp(double x) const {
        if (x < lo) return lo;
        if (x > hi) return hi;
        return x;
    }
    double length() const { return hi - lo; }
};

enum class MapFamily { Logistic, Tent, SawtoothComposition, Cubic, QuarticComposition };

// Positive: increasing on the first lap; Negative: decreasing there.
enum class Shape { Positive, Negative };

// f(x) = alpha x^3 + beta x^2 + (-sigma1 - alpha) x - beta on [-1,1],
// boundary anchored with f(-1) = sigma1, f(1) = -sigma1.
struct CubicParams {
    double alpha;
    double beta;
    int sigma1;  // +1 or -1
};

// f = q_mu o q_lambda on [0,1], q_a(x) = a x (1-x).
struct QuarticParams {
    double lambda;
    double mu;
};

// S = T_b o T_a on [0,1], T_a(x) = a (1/2 - |x - 1/2|).
struct SawtoothParams {
    double a;
    double b;
};

// Parameter validation helpers. Return an empty string when valid,
// otherwise a human-readable reason (used by the sweep to mark cells
// Skipped without throwing).
std::string cubic_invalid_reason(const CubicParams& p);
std::string quartic_invalid_reason(const QuarticParams& p);

// Critical points of the cubic family, c1 < c2.
// Throws DegenerateMapError when the discriminant of f' is not
// strictly positive.
std::pair<double, double> critical_points_cubic(const CubicParams& p);

// Interior turning points of q_mu o q_lambda, sorted ascending.
// {1/2} when lambda <= 2 (the tangency |lambda - 2| < 1e-9 collapses),
// otherwise the three points {x-, 1/2, x+} with q_lambda(x+-) = 1/2.
std::vector<double> critical_points_quartic(const QuarticParams& p);

// max(0, log a + log b): the sawtooth composition has constant
// absolute slope ab.
double exact_sawtooth_entropy(const SawtoothParams& p);

// An l-modal boundary-anchored interval map. Immutable after
// construction; construction validates boundary anchoring, f(I) <= I
// on the endpoint/critical witness set, and the family parameter
// ranges.
class ModalMap {
public:
    static ModalMap logistic(double a);
    static ModalMap tent(double a);
    static ModalMap sawtooth(const SawtoothParams& p);
    static ModalMap cubic(const CubicParams& p);
    static ModalMap quartic(const QuarticParams& p);

    // f(x). Throws DomainError when x lies outside the domain.
    double operator()(double x) const;

    // f^n(x), clamping rounding excursions back into the domain and
    // snapping values within 1e-12 of a critical point onto it.
    double iterate(double x, int n) const;

    // Unchecked single application, clamped to the domain.
    double step(double x) const;

    MapFamily family() const { return family_; }
    const std::vector<double>& params() const { return params_; }
    const Interval& domain() const { return domain_; }
    const std::vector<double>& critical_points() const { return critical_; }
    int modality() const { return static_cast<int>(critical_.size()); }
    Shape shape() const { return shape_; }

    // Tolerance for classifying a point as lying on a critical point.
    static constexpr double kCriticalTol = 1e-12;

private:
    ModalMap(MapFamily family, std::vector<double> params, Interval domain,
             std::vector<double> critical, Shape shape);

    double eval_raw(double x) const;
    void validate() const;

    MapFamily family_;
    std::vector<double> params_;
    Interval domain_;
    std::vector<double> critical_;
    Shape shape_;
};

}  // namespace topent
