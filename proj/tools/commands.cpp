#include "commands.hpp"

#include <atomic>
#include <fstream>
#include <iostream>
#include <random>
#include <thread>

#include "CLI11.hpp"

#include "geophase/error.hpp"
#include "geophase/oracle.hpp"
#include "geophase/phase_engine.hpp"
#include "geophase/problem_io.hpp"

namespace geophase::cli {
namespace {

constexpr double kParallelThreshold = 1e-6;
constexpr double kParallelDelta = 1e-6;
constexpr double kVerifyTimes[] = {0.3, 1.7, 5.0};

// Writes to the named file, or to fallback when the path is empty.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
            stream_ = &file_;
        }
    }
    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

Problem load(const std::string& path) {
    return to_problem(read_problem_file(path));
}

int input_error(std::ostream& err, const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
}

}  // namespace

int cmd_compute(const ComputeOptions& opts, std::ostream& out, std::ostream& err) {
    PhaseReport report;
    try {
        if (!std::isfinite(opts.t)) throw Error(ErrorKind::InvalidArgument, "time must be finite");
        report = analyze(prepare(load(opts.input)), opts.t);
    } catch (const std::exception& e) {
        return input_error(err, e);
    }
    try {
        Sink sink(opts.output, out);
        sink.get() << report_to_json(report).dump(2) << "\n";
    } catch (const std::exception& e) {
        return input_error(err, e);
    }
    if (!report.all_defined()) {
        for (const auto& w : report.warnings) err << "warning: " << w << "\n";
        return kExitUndefinedPhase;
    }
    return kExitOk;
}

int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err) {
    PhaseSetup setup;
    try {
        if (opts.steps < 2) throw Error(ErrorKind::InvalidArgument, "--steps must be >= 2");
        if (!(opts.t_start < opts.t_end)) {
            throw Error(ErrorKind::InvalidArgument, "--t-start must be below --t-end");
        }
        if (opts.format != "csv" && opts.format != "json") {
            throw Error(ErrorKind::InvalidArgument, "--format must be csv or json");
        }
        setup = prepare(load(opts.input));
    } catch (const std::exception& e) {
        return input_error(err, e);
    }

    const auto steps = static_cast<std::size_t>(opts.steps);
    std::vector<PhaseReport> rows(steps);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < steps; i = next++) {
            const double t = opts.t_start +
                             (opts.t_end - opts.t_start) * static_cast<double>(i) /
                                 static_cast<double>(steps - 1);
            rows[i] = analyze(setup, t);
        }
    };
    const unsigned n_threads =
        std::max(1u, std::min(std::thread::hardware_concurrency(), static_cast<unsigned>(steps)));
    {
        std::vector<std::jthread> pool;
        for (unsigned k = 1; k < n_threads; ++k) pool.emplace_back(worker);
        worker();
    }

    try {
        Sink sink(opts.output, out);
        auto& os = sink.get();
        if (opts.format == "csv") {
            os << sweep_csv_header(setup.dim()) << "\n";
            for (const auto& r : rows) os << sweep_csv_row(r) << "\n";
        } else {
            nlohmann::ordered_json doc = nlohmann::ordered_json::array();
            for (const auto& r : rows) doc.push_back(sweep_row_json(r));
            os << doc.dump(2) << "\n";
        }
    } catch (const std::exception& e) {
        return input_error(err, e);
    }
    return kExitOk;
}

VerifySummary run_verification(const VerifyOptions& opts) {
    VerifySummary summary;
    for (int trial = 0; trial < opts.trials; ++trial) {
        const std::uint64_t seed = opts.seed + static_cast<std::uint64_t>(trial);
        auto check = [&](bool pass, const char* invariant, double value) {
            if (pass) {
                ++summary.passed;
                return;
            }
            ++summary.failed;
            if (!summary.first_failure) summary.first_failure = VerifyFailure{seed, invariant, value};
        };

        const Problem problem = random_instance({opts.dim, opts.dim, seed, 1.0});
        const PhaseSetup setup = prepare(problem);
        const auto& amps = setup.spectrum.amplitudes;
        const double h_norm = problem.hamiltonian_lab.norm();

        const double residual = ancilla_equation_residual(amps, setup.h_prime, setup.frame.k);
        check(residual <= opts.tol * std::max(1.0, h_norm), "ancilla equation residual", residual);

        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
        std::uniform_real_distribution<double> angle(-kPi, kPi);
        RealVector thetas(opts.dim);
        for (auto& th : thetas) th = angle(rng);
        const PhaseSetup rephased = prepare(problem, rephase(setup.spectrum, thetas));

        for (double t : kVerifyTimes) {
            const ComplexMatrix u = evolution(setup, t);
            try {
                const double gamma = total_geometric_phase(t, setup.frame, setup.weights, u, amps);
                const double uhl = uhlmann_trace_phase(t, u, amps, setup.frame.k);
                const double d = circular_distance(gamma, uhl);
                check(d <= opts.tol, "gamma_total vs uhlmann trace", d);

                const ComplexMatrix u2 = evolution(rephased, t);
                const double gamma2 = total_geometric_phase(
                    t, rephased.frame, rephased.weights, u2, rephased.spectrum.amplitudes);
                const double g = circular_distance(gamma, gamma2);
                check(g <= opts.tol, "gauge invariance", g);
            } catch (const Error&) {
                check(false, "phase undefined", 0.0);
            }
            for (Eigen::Index j = 0; j < setup.dim(); ++j) {
                if (setup.weights.q(j) <= kDefaultTolerances.weight_floor) continue;
                const double r = parallel_residual(j, t, kParallelDelta, setup.frame,
                                                   setup.h_prime, amps);
                check(r <= kParallelThreshold, "parallel transport residual", r);
            }
        }
    }
    return summary;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
    if (opts.trials < 1 || opts.dim < 1 || !(opts.tol >= 0.0)) {
        err << "error: verify needs --trials >= 1, --dim >= 1 and --tol >= 0\n";
        return kExitInputError;
    }
    VerifySummary summary;
    try {
        summary = run_verification(opts);
    } catch (const std::exception& e) {
        return input_error(err, e);
    }
    out << "checks passed: " << summary.passed << "\n"
        << "checks failed: " << summary.failed << "\n";
    if (summary.first_failure) {
        const auto& f = *summary.first_failure;
        err << "first failure: seed " << f.seed << ", " << f.invariant << " = " << f.value << "\n";
        return kExitVerifyFailed;
    }
    return kExitOk;
}

int cmd_compare(const CompareOptions& opts, std::ostream& out, std::ostream& err) {
    if (opts.holonomy_steps < kMinHolonomySteps) {
        err << "error: --holonomy-steps must be >= " << kMinHolonomySteps << "\n";
        return kExitInputError;
    }
    if (!(opts.t > 0.0) || !std::isfinite(opts.t)) {
        err << "error: compare needs a finite time > 0\n";
        return kExitInputError;
    }
    std::optional<Problem> problem;
    PhaseReport report;
    try {
        problem = load(opts.input);
        report = analyze(prepare(*problem), opts.t);
    } catch (const std::exception& e) {
        return input_error(err, e);
    }

    std::optional<double> holonomy;
    std::vector<std::string> warnings = report.warnings;
    try {
        holonomy = discrete_uhlmann_holonomy(*problem, {opts.t, opts.holonomy_steps});
    } catch (const Error& e) {
        warnings.emplace_back(e.what());
    }

    using ojson = nlohmann::ordered_json;
    auto value = [](const std::optional<double>& v) { return v ? ojson(*v) : ojson(nullptr); };
    auto distance = [](const std::optional<double>& a, const std::optional<double>& b) {
        return (a && b) ? ojson(circular_distance(*a, *b)) : ojson(nullptr);
    };
    ojson doc = {
        {"t", opts.t},
        {"holonomy_steps", opts.holonomy_steps},
        {"gamma_total", value(report.gamma_total)},
        {"uhlmann", value(report.uhlmann)},
        {"sjoqvist", value(report.sjoqvist)},
        {"holonomy", value(holonomy)},
        {"distances",
         {{"gamma_total_uhlmann", distance(report.gamma_total, report.uhlmann)},
          {"gamma_total_sjoqvist", distance(report.gamma_total, report.sjoqvist)},
          {"gamma_total_holonomy", distance(report.gamma_total, holonomy)},
          {"uhlmann_sjoqvist", distance(report.uhlmann, report.sjoqvist)},
          {"uhlmann_holonomy", distance(report.uhlmann, holonomy)},
          {"sjoqvist_holonomy", distance(report.sjoqvist, holonomy)}}},
        {"warnings", warnings}};
    try {
        Sink sink(opts.output, out);
        sink.get() << doc.dump(2) << "\n";
    } catch (const std::exception& e) {
        return input_error(err, e);
    }
    return (report.all_defined() && holonomy) ? kExitOk : kExitUndefinedPhase;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Geometric phases of mixed states under unitary evolution", "geophase"};
    app.require_subcommand(1);

    ComputeOptions compute;
    auto* c = app.add_subcommand("compute", "phase report at a single time");
    c->add_option("--input", compute.input, "problem file (JSON)")->required();
    c->add_option("--time,-t", compute.t, "evolution time")->required();
    c->add_option("--output", compute.output, "output path (default stdout)");

    SweepOptions sweep;
    auto* s = app.add_subcommand("sweep", "phase table on a uniform time grid");
    s->add_option("--input", sweep.input, "problem file (JSON)")->required();
    s->add_option("--t-start", sweep.t_start, "first grid time")->required();
    s->add_option("--t-end", sweep.t_end, "last grid time")->required();
    s->add_option("--steps", sweep.steps, "number of grid points (>= 2)")->required();
    s->add_option("--format", sweep.format, "csv or json");
    s->add_option("--output", sweep.output, "output path (default stdout)");

    VerifyOptions verify;
    auto* v = app.add_subcommand("verify", "randomized invariant checks");
    v->add_option("--dim", verify.dim, "Hilbert-space dimension");
    v->add_option("--trials", verify.trials, "number of random instances");
    v->add_option("--seed", verify.seed, "base seed");
    v->add_option("--tol", verify.tol, "tolerance for phase identities");

    CompareOptions compare;
    auto* m = app.add_subcommand("compare", "unified, Uhlmann, Sjoqvist and holonomy phases");
    m->add_option("--input", compare.input, "problem file (JSON)")->required();
    m->add_option("--time,-t", compare.t, "evolution time")->required();
    m->add_option("--holonomy-steps", compare.holonomy_steps, "holonomy grid size (>= 256)");
    m->add_option("--output", compare.output, "output path (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kExitInputError;
    }

    try {
        if (c->parsed()) return cmd_compute(compute, out, err);
        if (s->parsed()) return cmd_sweep(sweep, out, err);
        if (v->parsed()) return cmd_verify(verify, out, err);
        return cmd_compare(compare, out, err);
    } catch (const std::exception& e) {
        return input_error(err, e);
    }
}

}  // namespace geophase::cli
