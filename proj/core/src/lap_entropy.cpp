#include "topent/lap_entropy.hpp"

#include <cmath>

namespace topent {

namespace {

// Values up to 2^53 are exact in long double (and in double); only
// there can integrality be asserted meaningfully.
constexpr LapCount kExactLimit = 9007199254740992.0L;  // 2^53

bool near_integer(LapCount v) { return std::abs(v - std::round(v)) < 0.25L; }

}  // namespace

bool is_bad_symbol(const MinMaxSymbol& w, int i) {
    const int ci_rank = 2 * i - 1;
    return w.polarity == Polarity::Max ? w.address.rank() <= ci_rank
                                       : w.address.rank() >= ci_rank;
}

std::vector<MinMaxSymbol> bad_symbols(int i, int l) {
    std::vector<MinMaxSymbol> out;
    for (int j = 1; j <= i; ++j) {
        out.push_back({Polarity::Max, {false, j}});   // M^{I_j}
        out.push_back({Polarity::Max, {true, j}});    // M^{C_j}
    }
    out.push_back({Polarity::Min, {true, i}});        // m^{C_i}
    for (int j = i + 1; j <= l; ++j) {
        out.push_back({Polarity::Min, {false, j}});   // m^{I_j}
        out.push_back({Polarity::Min, {true, j}});    // m^{C_j}
    }
    out.push_back({Polarity::Min, {false, l + 1}});   // m^{I_{l+1}}
    return out;
}

Address classify(const ModalMap& map, double x) {
    const auto& crit = map.critical_points();
    int below = 0;
    for (std::size_t j = 0; j < crit.size(); ++j) {
        if (std::abs(x - crit[j]) < ModalMap::kCriticalTol)
            return {true, static_cast<int>(j) + 1};
        if (x > crit[j]) below = static_cast<int>(j) + 1;
    }
    return {false, below + 1};
}

MinMaxState::MinMaxState(const ModalMap& map)
    : map_(map), l_(map.modality()) {
    if (l_ < 1) throw DomainError("lap recursion requires at least one critical point");
    orbit_ = map_.critical_points();
    prev_.resize(l_);
    for (int i = 0; i < l_; ++i) prev_[i] = {Polarity::Max, {true, i + 1}};
    symbols_.resize(l_);
    bad_inc_.resize(l_);
    s_hist_.assign(l_, {1.0L});                 // s_i^(0) = 1
    s_total_ = {static_cast<LapCount>(l_)};     // s^(0) = l
    cumulative_ = static_cast<LapCount>(l_);
    big_s_.assign(l_, 0.0L);
}

MinMaxSymbol MinMaxState::next_symbol(int i) {
    // Theorem rule: the polarity of f^{n+1}(c_i) follows from the cell
    // and polarity of f^n(c_i); a negative-shape map swaps the output.
    const MinMaxSymbol& p = prev_[i];
    bool maximum;
    if (p.address.crit) {
        maximum = (p.address.index % 2 == 1);
    } else if (p.address.index % 2 == 0) {
        maximum = (p.polarity == Polarity::Min);
    } else {
        maximum = (p.polarity == Polarity::Max);
    }
    if (map_.shape() == Shape::Negative) maximum = !maximum;

    orbit_[i] = map_.step(orbit_[i]);
    return {maximum ? Polarity::Max : Polarity::Min, classify(map_, orbit_[i])};
}

void MinMaxState::advance() {
    const int n = ++n_;

    for (int i = 0; i < l_; ++i) {
        MinMaxSymbol w = next_symbol(i);
        symbols_[i].push_back(w);
        prev_[i] = w;
    }

    // K_i grows by the step-n pairs only; S_i is re-summed because the
    // weights s_k^(n-j) shift every step.
    LapCount s_sum = 0.0L;
    big_s_sum_ = 0.0L;
    for (int i = 0; i < l_; ++i) {
        std::vector<int> inc;
        for (int k = 0; k < l_; ++k)
            if (is_bad_symbol(symbols_[k][n - 1], i + 1)) inc.push_back(k + 1);
        bad_inc_[i].push_back(std::move(inc));

        LapCount big_s = 0.0L;
        for (int j = 1; j <= n; ++j)
            for (int k : bad_inc_[i][j - 1]) big_s += s_hist_[k - 1][n - j];
        big_s *= 2.0L;
        big_s_[i] = big_s;
        big_s_sum_ += big_s;

        LapCount si = 1.0L + cumulative_ - big_s;
        if (si < 0.0L) {
            if (cumulative_ < kExactLimit && si < -0.5L)
                throw ConsistencyError("negative intersection count s_i");
            si = 0.0L;  // cancellation noise beyond the exact range
        }
        s_hist_[i].push_back(si);
        s_sum += si;
    }
    s_total_.push_back(s_sum);

    const LapCount lap_new = 1.0L + cumulative_;               // 1 + sum_{k<n} s^(k)
    const LapCount lap_alt = (s_sum + big_s_sum_) / static_cast<LapCount>(l_);
    if (lap_new < kExactLimit) {
        if (!near_integer(lap_alt) || std::abs(lap_new - lap_alt) > 0.25L ||
            lap_new < 1.0L)
            throw ConsistencyError("lap-number recurrences disagree");
    } else if (std::abs(lap_new - lap_alt) > 1e-9L * lap_new) {
        throw ConsistencyError("lap-number recurrences disagree");
    }
    laps_.push_back(lap_new);
    cumulative_ += s_sum;
}

std::vector<std::vector<MinMaxSymbol>> minmax_sequences(const ModalMap& map, int n_steps) {
    MinMaxState state(map);
    for (int n = 0; n < n_steps; ++n) state.advance();
    return state.symbols();
}

std::vector<LapCount> lap_numbers(const ModalMap& map, int n) {
    MinMaxState state(map);
    std::vector<LapCount> out;
    out.reserve(n);
    for (int k = 0; k < n; ++k) {
        state.advance();
        out.push_back(state.lap_number(k + 1));
    }
    return out;
}

EntropyEstimate lap_entropy(const ModalMap& map, double epsilon, int n_max) {
    // Two amendments to the plain "stop at the first n with
    // |h_n - h_{n-1}| < epsilon" rule, both needed because h_n carries a
    // log(C)/n bias from the subexponential factor of the lap counts:
    //  - lap counts of low-slope maps double for a few steps before the
    //    true growth rate takes over, so an early sub-epsilon step is
    //    only trusted if the differences stay below epsilon afterwards;
    //  - after the first genuine hit at step N the iteration coasts to
    //    3N, shrinking the bias threefold at negligible extra cost.
    MinMaxState state(map);
    state.advance();
    double h_prev = static_cast<double>(std::log(state.lap_number(1)));

    int hit_n = 0;
    for (int n = 2; n <= n_max; ++n) {
        state.advance();
        const double h = static_cast<double>(std::log(state.lap_number(n))) / n;
        const double delta = std::abs(h - h_prev);
        if (delta < epsilon) {
            if (hit_n == 0) hit_n = n;
            if (n >= 3 * hit_n) return {h, n, Termination::Converged, delta};
        } else {
            hit_n = 0;
        }
        h_prev = h;
    }
    if (hit_n != 0) {
        const double h = static_cast<double>(std::log(state.lap_number(n_max))) / n_max;
        const double h_before =
            static_cast<double>(std::log(state.lap_number(n_max - 1))) / (n_max - 1);
        return {h, n_max, Termination::Converged, std::abs(h - h_before)};
    }
    const double h = static_cast<double>(std::log(state.lap_number(n_max))) / n_max;
    const double h_before =
        static_cast<double>(std::log(state.lap_number(n_max - 1))) / (n_max - 1);
    return {h, n_max, Termination::MaxIterations, std::abs(h - h_before)};
}

}  // namespace topent
