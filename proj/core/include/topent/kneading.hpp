#pragma once

#include <vector>

#include "topent/interval_map.hpp"
#include "topent/lap_entropy.hpp"

namespace topent {

// A unimodal factor map on [0,1] with critical point 1/2. Candidates
// produced by the isentrope search may carry tent slopes above 2, so
// this is deliberately looser than ModalMap (no into-itself check);
// the formulas extend continuously outside [0,1].
struct UnimodalFactor {
    enum class Kind { Logistic, Tent };
    Kind kind;
    double param;

    double critical_point() const { return 0.5; }
    double operator()(double x) const;
};

enum class Side { L, C, R };

// One entry of a d'itinerary: the side of the factor's critical point,
// tagged with which factor's partition the diorbit point lies in.
struct DSymbol {
    Side side;
    int track;  // 1 or 2
    bool operator==(const DSymbol& o) const { return side == o.side && track == o.track; }
};

struct Ditinerary {
    std::vector<DSymbol> symbols;
    int start_track;
};

enum class Ordering { Less, Equal, Greater, Incomparable };

// d'itinerary of x0 under (f1, f2): the diorbit applies the factors
// alternately starting with the factor of start_track, and each point
// is classified against the critical point of the factor whose
// partition it lies in. Landing within 1e-12 of the critical point
// yields C.
Ditinerary ditinerary(const UnimodalFactor& f1, const UnimodalFactor& f2, double x0,
                      int start_track, int n_sym);

// Signed-lexicographic kneading order. L < C < R under positive
// orientation; an R in the common prefix (the decreasing branch of a
// factor) flips the orientation. A shared C at index >= 1 ends the
// comparison as Equal; a shared C at index 0 is the trivial "both
// sequences start at the critical point" entry and is skipped.
Ordering compare(const Ditinerary& sigma, const Ditinerary& tau);

enum class InnerOutcome { LowerBoundFound, UpperBoundFound, EqualFound, Inconclusive };

// Search the sawtooth isentrope {log a + log b = h*} for a map whose
// critical d'itineraries are comparable with the targets. Candidates
// are parameterised by t in [0,1] along the curve, with t = 0 the left
// boundary (e^{h* - log 2}, 2) and t = 1 the right boundary.
InnerOutcome inner_search(double h_star, const Ditinerary& target_c1,
                          const Ditinerary& target_c2, int max_iter = 100);

struct BisectionState {
    double h0 = 0.0;
    double h1 = 0.0;
    std::vector<std::pair<double, InnerOutcome>> history;
};

struct KneadingOptions {
    double epsilon = 1e-4;
    int n_sym = 1024;
    int inner_max_iter = 100;
};

// Radulescu's nested bisection for the composition f2 o f1 of two
// unimodal boundary-anchored factors.
EntropyEstimate radulescu_entropy(const UnimodalFactor& f1, const UnimodalFactor& f2,
                                  const KneadingOptions& opts = {},
                                  BisectionState* trace = nullptr);

EntropyEstimate radulescu_entropy(const QuarticParams& p, double epsilon = 1e-4);
EntropyEstimate radulescu_entropy(const SawtoothParams& p, double epsilon = 1e-4);

}  // namespace topent
