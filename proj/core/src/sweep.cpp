#include "topent/sweep.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

#include "topent/kneading.hpp"
#include "topent/lap_entropy.hpp"

namespace topent {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

int cell_sigma1(GridFamily family) { return family == GridFamily::CubicPositive ? -1 : 1; }

void validate_spec(const GridSpec& spec) {
    if (spec.resolution < 2) throw DomainError("grid resolution must be >= 2");
    if (spec.algorithm == Algorithm::Kneading && spec.family != GridFamily::Quartic)
        throw DomainError("the kneading algorithm applies to the quartic family only");
    if (!(spec.epsilon > 0.0)) throw DomainError("epsilon must be positive");
    if (spec.n_max < 2) throw DomainError("n_max must be >= 2");
}

}  // namespace

std::pair<AxisRange, AxisRange> default_ranges(GridFamily family) {
    switch (family) {
        case GridFamily::Quartic:
            return {{0.0, 4.0}, {0.0, 4.0}};
        case GridFamily::CubicPositive:
            return {{1.0, 4.0}, {-1.0, 1.0}};
        case GridFamily::CubicNegative:
            return {{-4.0, -1.0}, {-1.0, 1.0}};
    }
    return {{0.0, 1.0}, {0.0, 1.0}};
}

std::vector<GridCell> enumerate_cells(const GridSpec& spec) {
    validate_spec(spec);
    auto [d1, d2] = default_ranges(spec.family);
    const AxisRange r1 = spec.range1.value_or(d1);
    const AxisRange r2 = spec.range2.value_or(d2);
    const int res = spec.resolution;

    std::vector<GridCell> cells;
    cells.reserve(static_cast<std::size_t>(res) * res);
    for (int i = 0; i < res; ++i) {
        const double p1 = r1.lo + (r1.hi - r1.lo) * i / (res - 1);
        for (int j = 0; j < res; ++j) {
            const double p2 = r2.lo + (r2.hi - r2.lo) * j / (res - 1);
            bool valid = true;
            if (spec.family != GridFamily::Quartic) {
                const CubicParams p{p1, p2, cell_sigma1(spec.family)};
                valid = cubic_invalid_reason(p).empty();
            } else {
                valid = quartic_invalid_reason({p1, p2}).empty();
            }
            cells.push_back({p1, p2, valid});
        }
    }
    return cells;
}

GridResult evaluate_cell(const GridSpec& spec, const GridCell& cell) {
    validate_spec(spec);
    GridResult out{cell.param1, cell.param2, kNan, kNan, kNan, 0, CellStatus::Skipped};

    if (spec.family == GridFamily::Quartic) {
        out.coord1 = cell.param1;
        out.coord2 = cell.param2;
    } else {
        try {
            const CubicParams p{cell.param1, cell.param2, cell_sigma1(spec.family)};
            auto [c1, c2] = critical_points_cubic(p);
            const ModalMap probe = ModalMap::cubic(p);
            out.coord1 = probe(c1);
            out.coord2 = probe(c2);
        } catch (const std::exception&) {
            // degenerate or out-of-range cell: no derived coordinates
        }
    }
    if (!cell.valid) return out;

    try {
        if (spec.algorithm == Algorithm::Kneading) {
            KneadingOptions opts;
            opts.epsilon = spec.epsilon;
            EntropyEstimate est =
                radulescu_entropy(QuarticParams{cell.param1, cell.param2}, spec.epsilon);
            if (est.termination != Termination::Converged) {
                // One retry with a coarser symbolic comparison.
                opts.n_sym = 128;
                est = radulescu_entropy({UnimodalFactor::Kind::Logistic, cell.param1},
                                        {UnimodalFactor::Kind::Logistic, cell.param2}, opts);
            }
            out.iterations = est.iterations;
            if (est.termination == Termination::Converged) {
                out.entropy = est.value;
                out.status = CellStatus::Ok;
            } else {
                out.status = CellStatus::Failed;
            }
        } else {
            const ModalMap map =
                spec.family == GridFamily::Quartic
                    ? ModalMap::quartic({cell.param1, cell.param2})
                    : ModalMap::cubic({cell.param1, cell.param2, cell_sigma1(spec.family)});
            const EntropyEstimate est = lap_entropy(map, spec.epsilon, spec.n_max);
            out.iterations = est.iterations;
            if (est.termination == Termination::Converged) {
                out.entropy = est.value;
                out.status = CellStatus::Ok;
            } else {
                out.status = CellStatus::Failed;
            }
        }
    } catch (const std::exception&) {
        out.status = CellStatus::Failed;
        out.entropy = kNan;
    }
    return out;
}

std::vector<GridResult> run_sweep(const GridSpec& spec, int workers, SweepSummary* summary) {
    validate_spec(spec);
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<GridCell> cells = enumerate_cells(spec);
    std::vector<GridResult> results(cells.size());

    workers = std::max(1, workers);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= cells.size()) break;
            results[idx] = evaluate_cell(spec, cells[idx]);
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    if (summary) {
        *summary = {};
        summary->cells = static_cast<long long>(results.size());
        for (const auto& r : results) {
            if (r.status == CellStatus::Ok) ++summary->ok;
            else if (r.status == CellStatus::Failed) ++summary->failed;
            else ++summary->skipped;
        }
        summary->seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    return results;
}

}  // namespace topent
