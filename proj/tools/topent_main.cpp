// Command-line front end: single-map entropy, grid sweeps, algorithm
// comparison, and oracle checks. All entropy values are in nats.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "topent/dataset_io.hpp"
#include "topent/kneading.hpp"
#include "topent/lap_entropy.hpp"
#include "topent/oracles.hpp"
#include "topent/sweep.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using namespace topent;

struct FamilyArgs {
    std::string family;
    std::optional<double> a, b, alpha, beta, lambda, mu;
    std::string shape;
};

void add_family_flags(CLI::App* cmd, FamilyArgs& fa) {
    cmd->add_option("--family", fa.family, "map family: logistic|tent|sawtooth|cubic|quartic")
        ->required();
    cmd->add_option("--a", fa.a, "tent/logistic/sawtooth parameter a");
    cmd->add_option("--b", fa.b, "sawtooth parameter b");
    cmd->add_option("--alpha", fa.alpha, "cubic leading coefficient");
    cmd->add_option("--beta", fa.beta, "cubic quadratic coefficient");
    cmd->add_option("--shape", fa.shape, "cubic shape: positive|negative");
    cmd->add_option("--lambda", fa.lambda, "inner logistic parameter");
    cmd->add_option("--mu", fa.mu, "outer logistic parameter");
}

double require(const std::optional<double>& v, const char* name) {
    if (!v) throw DomainError(std::string("missing required parameter --") + name);
    return *v;
}

ModalMap build_map(const FamilyArgs& fa) {
    if (fa.family == "logistic") return ModalMap::logistic(require(fa.a, "a"));
    if (fa.family == "tent") return ModalMap::tent(require(fa.a, "a"));
    if (fa.family == "sawtooth")
        return ModalMap::sawtooth({require(fa.a, "a"), require(fa.b, "b")});
    if (fa.family == "cubic") {
        const double alpha = require(fa.alpha, "alpha");
        int sigma1;
        if (fa.shape == "positive") sigma1 = -1;
        else if (fa.shape == "negative") sigma1 = 1;
        else if (fa.shape.empty()) sigma1 = alpha > 0 ? -1 : 1;
        else throw DomainError("unknown --shape (use positive or negative)");
        return ModalMap::cubic({alpha, require(fa.beta, "beta"), sigma1});
    }
    if (fa.family == "quartic")
        return ModalMap::quartic({require(fa.lambda, "lambda"), require(fa.mu, "mu")});
    throw DomainError("unknown --family " + fa.family);
}

int run_entropy(const FamilyArgs& fa, const std::string& algorithm, double epsilon,
                int n_max) {
    EntropyEstimate est{};
    if (algorithm == "kneading") {
        if (fa.family == "quartic") {
            est = radulescu_entropy(
                QuarticParams{require(fa.lambda, "lambda"), require(fa.mu, "mu")}, epsilon);
        } else if (fa.family == "sawtooth") {
            est = radulescu_entropy(SawtoothParams{require(fa.a, "a"), require(fa.b, "b")},
                                    epsilon);
        } else {
            throw DomainError("the kneading algorithm supports only quartic and sawtooth maps");
        }
    } else if (algorithm == "lap") {
        est = lap_entropy(build_map(fa), epsilon, n_max);
    } else {
        throw DomainError("unknown --algorithm (use lap or kneading)");
    }
    std::cout << "entropy " << format_number(est.value) << "\n"
              << "iterations " << est.iterations << "\n"
              << "termination "
              << (est.termination == Termination::Converged ? "converged" : "max-iterations")
              << "\n";
    return est.termination == Termination::Converged ? 0 : 2;
}

GridFamily parse_grid_family(const std::string& s) {
    if (s == "quartic") return GridFamily::Quartic;
    if (s == "cubic-positive") return GridFamily::CubicPositive;
    if (s == "cubic-negative") return GridFamily::CubicNegative;
    throw DomainError("unknown sweep family " + s +
                      " (use quartic, cubic-positive or cubic-negative)");
}

std::optional<AxisRange> parse_range(const std::string& s) {
    if (s.empty()) return std::nullopt;
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw DomainError("range must be lo:hi");
    return AxisRange{std::stod(s.substr(0, colon)), std::stod(s.substr(colon + 1))};
}

int run_sweep_cmd(const std::string& family, int resolution, const std::string& algorithm,
                  double epsilon, int n_max, int workers, const std::string& output,
                  const std::string& format, const std::string& r_alpha,
                  const std::string& r_beta, const std::string& r_lambda,
                  const std::string& r_mu) {
    GridSpec spec;
    spec.family = parse_grid_family(family);
    spec.resolution = resolution;
    spec.epsilon = epsilon;
    spec.n_max = n_max;
    if (algorithm == "lap") spec.algorithm = Algorithm::Lap;
    else if (algorithm == "kneading") spec.algorithm = Algorithm::Kneading;
    else throw DomainError("unknown --algorithm");

    if (spec.family == GridFamily::Quartic) {
        spec.range1 = parse_range(r_lambda);
        spec.range2 = parse_range(r_mu);
    } else {
        spec.range1 = parse_range(r_alpha);
        spec.range2 = parse_range(r_beta);
    }

    SweepSummary summary;
    const std::vector<GridResult> rows = run_sweep(spec, workers, &summary);

    const RunMeta meta{kVersion, spec.family, spec.algorithm, spec.epsilon, spec.n_max,
                       spec.resolution};
    std::ofstream os(output);
    if (!os) {
        std::cerr << "error: cannot write " << output << "\n";
        return 1;
    }
    if (format == "json") write_json(os, meta, rows);
    else write_csv(os, meta, rows);
    os.close();
    if (!os) {
        std::cerr << "error: cannot write " << output << "\n";
        return 1;
    }

    std::printf("cells=%lld ok=%lld failed=%lld skipped=%lld seconds=%.3f\n", summary.cells,
                summary.ok, summary.failed, summary.skipped, summary.seconds);
    return 0;
}

int run_compare(int samples, unsigned seed, double epsilon, int n_max) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 4.0);

    double max_delta = 0.0;
    double lap_seconds = 0.0, kneading_seconds = 0.0;
    std::printf("lambda mu lap kneading delta lap_iters kneading_iters\n");
    for (int s = 0; s < samples; ++s) {
        const double lambda = uni(rng), mu = uni(rng);

        auto t0 = std::chrono::steady_clock::now();
        const EntropyEstimate lap = lap_entropy(ModalMap::quartic({lambda, mu}), epsilon, n_max);
        auto t1 = std::chrono::steady_clock::now();
        const EntropyEstimate knead = radulescu_entropy(QuarticParams{lambda, mu}, epsilon);
        auto t2 = std::chrono::steady_clock::now();
        lap_seconds += std::chrono::duration<double>(t1 - t0).count();
        kneading_seconds += std::chrono::duration<double>(t2 - t1).count();

        const double delta = std::abs(lap.value - knead.value);
        max_delta = std::max(max_delta, delta);
        std::printf("%s %s %s %s %s %d %d\n", format_number(lambda).c_str(),
                    format_number(mu).c_str(), format_number(lap.value).c_str(),
                    format_number(knead.value).c_str(), format_number(delta).c_str(),
                    lap.iterations, knead.iterations);
    }
    std::printf("max_delta=%s mean_lap_seconds=%s mean_kneading_seconds=%s\n",
                format_number(max_delta).c_str(),
                format_number(samples > 0 ? lap_seconds / samples : 0.0).c_str(),
                format_number(samples > 0 ? kneading_seconds / samples : 0.0).c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Topological entropy of boundary-anchored interval maps (values in nats)"};
    app.require_subcommand(1);

    // entropy
    FamilyArgs ent_args;
    std::string ent_algorithm = "lap";
    double ent_epsilon = 1e-4;
    int ent_nmax = 2000;
    CLI::App* ent = app.add_subcommand("entropy", "entropy of a single map");
    add_family_flags(ent, ent_args);
    ent->add_option("--algorithm", ent_algorithm, "lap|kneading (default lap)");
    ent->add_option("--epsilon", ent_epsilon, "stopping resolution (default 1e-4)");
    ent->add_option("--n-max", ent_nmax, "iteration cap (default 2000)");

    // sweep
    std::string sw_family, sw_algorithm = "lap", sw_output, sw_format = "csv";
    std::string sw_alpha_range, sw_beta_range, sw_lambda_range, sw_mu_range;
    int sw_resolution = 151, sw_nmax = 2000, sw_workers = 1;
    double sw_epsilon = 1e-4;
    CLI::App* sw = app.add_subcommand("sweep", "entropy over a parameter grid");
    sw->add_option("--family", sw_family, "quartic|cubic-positive|cubic-negative")->required();
    sw->add_option("--resolution", sw_resolution, "lattice points per axis (default 151)");
    sw->add_option("--algorithm", sw_algorithm, "lap|kneading (default lap)");
    sw->add_option("--epsilon", sw_epsilon, "stopping resolution");
    sw->add_option("--n-max", sw_nmax, "iteration cap");
    sw->add_option("--workers", sw_workers, "worker threads (default 1)");
    sw->add_option("--output", sw_output, "output file path")->required();
    sw->add_option("--format", sw_format, "csv|json (default csv)");
    sw->add_option("--alpha-range", sw_alpha_range, "cubic alpha zoom, lo:hi");
    sw->add_option("--beta-range", sw_beta_range, "cubic beta zoom, lo:hi");
    sw->add_option("--lambda-range", sw_lambda_range, "quartic lambda zoom, lo:hi");
    sw->add_option("--mu-range", sw_mu_range, "quartic mu zoom, lo:hi");

    // compare
    int cmp_samples = 50;
    unsigned cmp_seed = 20240815;
    double cmp_epsilon = 1e-4;
    int cmp_nmax = 2000;
    CLI::App* cmp = app.add_subcommand("compare", "both algorithms on random quartic samples");
    cmp->add_option("--samples", cmp_samples, "number of samples (default 50)");
    cmp->add_option("--seed", cmp_seed, "RNG seed");
    cmp->add_option("--epsilon", cmp_epsilon, "stopping resolution");
    cmp->add_option("--n-max", cmp_nmax, "lap iteration cap");

    // oracle
    CLI::App* orc = app.add_subcommand("oracle", "ground-truth checks");
    orc->require_subcommand(1);
    FamilyArgs laps_args;
    int laps_n = 1;
    CLI::App* laps = orc->add_subcommand("laps", "brute-force lap count of f^n");
    add_family_flags(laps, laps_args);
    laps->add_option("--n", laps_n, "iterate index")->required();
    FamilyArgs fix_args;
    int fix_n = 1;
    CLI::App* fix = orc->add_subcommand("fixpoints", "solutions of f^n(x) = x");
    add_family_flags(fix, fix_args);
    fix->add_option("--n", fix_n, "iterate index")->required();
    std::string markov_builtin;
    CLI::App* markov = orc->add_subcommand("markov", "spectral radius of a built-in matrix");
    markov->add_option("--builtin", markov_builtin, "full-tent|fibonacci")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (ent->parsed()) return run_entropy(ent_args, ent_algorithm, ent_epsilon, ent_nmax);
        if (sw->parsed())
            return run_sweep_cmd(sw_family, sw_resolution, sw_algorithm, sw_epsilon, sw_nmax,
                                 sw_workers, sw_output, sw_format, sw_alpha_range,
                                 sw_beta_range, sw_lambda_range, sw_mu_range);
        if (cmp->parsed()) return run_compare(cmp_samples, cmp_seed, cmp_epsilon, cmp_nmax);
        if (orc->parsed()) {
            if (laps->parsed()) {
                const ModalMap map = build_map(laps_args);
                const LapDecomposition dec = brute_force_laps(map, laps_n);
                std::cout << "brute_force_laps " << dec.lap_count << "\n";
                std::cout << "lap_recursion "
                          << format_number(static_cast<double>(lap_numbers(map, laps_n).back()))
                          << "\n";
                return 0;
            }
            if (fix->parsed()) {
                const ModalMap map = build_map(fix_args);
                const long long count = periodic_point_count(map, fix_n);
                std::cout << "fixpoints " << count << "\n";
                if (count > 0)
                    std::cout << "growth_rate "
                              << format_number(std::log(static_cast<double>(count)) / fix_n)
                              << "\n";
                return 0;
            }
            if (markov->parsed()) {
                std::vector<std::vector<double>> m;
                if (markov_builtin == "full-tent") m = full_tent_matrix();
                else if (markov_builtin == "fibonacci") m = fibonacci_matrix();
                else throw DomainError("unknown --builtin (use full-tent or fibonacci)");
                std::cout << "spectral_radius " << format_number(spectral_radius(m)) << "\n";
                return 0;
            }
        }
    } catch (const SizeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConsistencyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
