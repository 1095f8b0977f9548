#pragma once

#include <optional>
#include <vector>

#include "topent/interval_map.hpp"

namespace topent {

enum class GridFamily { Quartic, CubicPositive, CubicNegative };
enum class Algorithm { Lap, Kneading };
enum class CellStatus { Ok, Failed, Skipped };

// Axis range [lo, hi], inclusive at both lattice endpoints.
struct AxisRange {
    double lo;
    double hi;
};

struct GridSpec {
    GridFamily family = GridFamily::Quartic;
    int resolution = 151;  // lattice points per axis
    Algorithm algorithm = Algorithm::Lap;
    double epsilon = 1e-4;
    int n_max = 2000;
    // Zoom overrides; defaults are the full family rectangles
    // ([0,4]^2 for the quartic square, alpha x beta bounding boxes for
    // the cubics).
    std::optional<AxisRange> range1;
    std::optional<AxisRange> range2;
};

struct GridCell {
    double param1;
    double param2;
    bool valid;  // invalid cells become Skipped results
};

struct GridResult {
    double param1;
    double param2;
    double coord1;  // (lambda,mu) for quartic, critical values (p1,p2) for cubics
    double coord2;
    double entropy;  // NaN on Failed/Skipped
    int iterations;
    CellStatus status;
};

struct SweepSummary {
    long long cells = 0;
    long long ok = 0;
    long long failed = 0;
    long long skipped = 0;
    double seconds = 0.0;
};

// Default bounding rectangle of a family's parameter region.
std::pair<AxisRange, AxisRange> default_ranges(GridFamily family);

// Row-major lattice over the (possibly overridden) bounding rectangle;
// cells outside the valid cubic region are flagged invalid.
std::vector<GridCell> enumerate_cells(const GridSpec& spec);

// Evaluate one cell (exposed for tests).
GridResult evaluate_cell(const GridSpec& spec, const GridCell& cell);

// Run the whole grid across `workers` threads. Output order is
// row-major by parameters regardless of the worker count.
std::vector<GridResult> run_sweep(const GridSpec& spec, int workers,
                                  SweepSummary* summary = nullptr);

}  // namespace topent
