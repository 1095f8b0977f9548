#pragma once

#include <vector>

#include "topent/interval_map.hpp"

namespace topent {

// Refinement would exceed the breakpoint guard.
struct SizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Power iteration failed to settle.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All interior turning points of f^n, found by pulling critical values
// back through the monotone laps of the previous iterate.
struct LapDecomposition {
    int n;
    std::vector<double> breakpoints;  // sorted, interior
    long long lap_count;              // breakpoints.size() + 1
};

// Exact lap count of f^n by per-lap bisection root finding.
// Guard: at most 10^7 breakpoints.
LapDecomposition brute_force_laps(const ModalMap& map, int n);

// l(f^1), ..., l(f^n) from the same refinement, one pass.
std::vector<long long> brute_force_lap_sequence(const ModalMap& map, int n);

// Number of solutions of f^n(x) = x, located as sign changes of
// f^n(x) - x on the monotone laps of f^n.
long long periodic_point_count(const ModalMap& map, int n);

// Dominant eigenvalue of a non-negative matrix by power iteration.
double spectral_radius(const std::vector<std::vector<double>>& m, double tol = 1e-10);

// Built-in Markov transition matrices.
std::vector<std::vector<double>> full_tent_matrix();   // [[1,1],[1,1]]
std::vector<std::vector<double>> fibonacci_matrix();   // [[0,1],[1,1]]

}  // namespace topent
