#pragma once

#include <vector>

#include "topent/interval_map.hpp"

namespace topent {

// Internal inconsistency between the lap-number recurrences; signals a
// symbol or orbit computation bug rather than bad input.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Lap counts grow like e^{h n}; long double keeps them exact up to
// 2^64 and in range up to n_max = 5000 at the maximal growth rate.
using LapCount = long double;

enum class Polarity { Min, Max };

// A cell of the critical partition
//   I_1 = [lo, c_1), C_1 = {c_1}, I_2 = (c_1, c_2), ..., I_{l+1} = (c_l, hi].
// Lap(j) is I_j (1 <= j <= l+1), Crit(j) is {c_j} (1 <= j <= l).
struct Address {
    bool crit;
    int index;  // 1-based

    // Total left-to-right rank: I_1 < C_1 < I_2 < C_2 < ...
    int rank() const { return crit ? 2 * index - 1 : 2 * (index - 1); }
    bool operator==(const Address& o) const { return crit == o.crit && index == o.index; }
};

struct MinMaxSymbol {
    Polarity polarity;
    Address address;
    bool operator==(const MinMaxSymbol& o) const {
        return polarity == o.polarity && address == o.address;
    }
};

// The bad-symbol set B_i: maxima at or left of C_i plus minima at or
// right of C_i. These turning points produce no new crossings of the
// critical line y = c_i in the next iterate.
bool is_bad_symbol(const MinMaxSymbol& w, int i);
std::vector<MinMaxSymbol> bad_symbols(int i, int l);

// Partition cell of x (with the on-critical tolerance of ModalMap).
Address classify(const ModalMap& map, double x);

// Min-max symbol sequences of the critical orbits: result[i][n-1] is
// omega_{i+1}^{(n)} for n = 1..n_steps.
std::vector<std::vector<MinMaxSymbol>> minmax_sequences(const ModalMap& map, int n_steps);

enum class Termination { Converged, MaxIterations };

struct EntropyEstimate {
    double value;         // nats
    int iterations;       // n at termination
    Termination termination;
    double last_delta;    // |h_n - h_{n-1}| at the last step
};

// Running state of the lap-number recursion. Owns the critical orbits
// and the full s-histories; advance() performs one step of the update
// chain (bad sets, S_i, S, s_i, s, lap number) and checks that the two
// lap-number formulas agree.
class MinMaxState {
public:
    explicit MinMaxState(const ModalMap& map);

    void advance();
    int steps() const { return n_; }

    int modality() const { return l_; }
    LapCount lap_number(int n) const { return laps_.at(n - 1); }    // l(f^n)
    LapCount s_total(int n) const { return s_total_.at(n); }        // s^(n)
    LapCount s_i(int i, int n) const { return s_hist_.at(i - 1).at(n); }
    LapCount big_s_i(int i) const { return big_s_.at(i - 1); }      // S_i at current n
    LapCount big_s_total() const { return big_s_sum_; }             // S^(n) at current n
    const std::vector<std::vector<MinMaxSymbol>>& symbols() const { return symbols_; }

private:
    MinMaxSymbol next_symbol(int i);

    const ModalMap map_;
    int l_;
    int n_ = 0;
    std::vector<double> orbit_;                        // f^n(c_i)
    std::vector<MinMaxSymbol> prev_;                   // omega_i^(n) (pseudo Crit(i) at n=0)
    std::vector<std::vector<MinMaxSymbol>> symbols_;   // [i][n-1]
    std::vector<std::vector<std::vector<int>>> bad_inc_;  // [i][n-1] -> k with omega_k^(n) in B_i
    std::vector<std::vector<LapCount>> s_hist_;        // [i][n] = s_i^(n)
    std::vector<LapCount> s_total_;                    // s^(0..n)
    LapCount cumulative_ = 0;                          // sum_{k<=n} s^(k)
    std::vector<LapCount> big_s_;
    LapCount big_s_sum_ = 0;
    std::vector<LapCount> laps_;                       // l(f^1..f^n)
};

// Lap numbers l(f^1), ..., l(f^n) from the recursion.
std::vector<LapCount> lap_numbers(const ModalMap& map, int n);

// The Amigo-Gimenez estimate: iterate the recursion until consecutive
// values of (1/n) log l(f^n) differ by less than epsilon, or n_max
// steps have run.
EntropyEstimate lap_entropy(const ModalMap& map, double epsilon = 1e-4, int n_max = 2000);

}  // namespace topent
