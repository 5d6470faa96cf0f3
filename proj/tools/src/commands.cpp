#include "chaoskit/cli/commands.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <fmt/ostream.h>

#include "chaoskit/bifurcation.hpp"
#include "chaoskit/cli/report_json.hpp"
#include "chaoskit/cli/svg.hpp"
#include "chaoskit/diagnostics.hpp"
#include "chaoskit/econ_ingest.hpp"
#include "chaoskit/errors.hpp"
#include "chaoskit/map_core.hpp"
#include "chaoskit/policy.hpp"

namespace chaoskit::cli {

namespace {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// --r, or --T together with --epsilon.
struct ParamFlags {
    std::optional<double> r;
    std::optional<double> T;
    std::optional<double> epsilon;

    void attach(CLI::App& cmd) {
        auto* r_opt = cmd.add_option("--r", r, "control parameter r = T*epsilon");
        auto* t_opt = cmd.add_option("--T", T, "firm coefficient T");
        auto* e_opt = cmd.add_option("--epsilon", epsilon, "regulation parameter epsilon");
        r_opt->excludes(t_opt)->excludes(e_opt);
        t_opt->needs(e_opt);
        e_opt->needs(t_opt);
    }

    MapParams resolve() const {
        if (r) return MapParams::from_r(*r);
        if (T && epsilon) return make_params(*T, *epsilon);
        throw InputError("give either --r or both --T and --epsilon");
    }
};

/// Destination chosen by --output; "-" or empty means the caller's stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty() && path != "-") {
            file_.open(path, std::ios::binary);
            if (!file_) throw InputError(fmt::format("cannot open '{}' for writing", path));
            stream_ = &file_;
        }
    }
    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

void add_output(CLI::App& cmd, std::string& path) {
    cmd.add_option("--output", path, "output file ('-' for standard output)")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Logistic-map toolkit for innovation-accumulation dynamics", "chaoskit"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "show help for every subcommand");

    std::string output = "-";
    std::function<void()> action;

    // simulate
    ParamFlags sim_params;
    double sim_x0 = kDefaultX0;
    std::size_t sim_burn = 1000;
    std::size_t sim_length = 100;
    auto* simulate = app.add_subcommand("simulate", "iterate the map and write t,x rows as CSV");
    sim_params.attach(*simulate);
    simulate->add_option("--x0", sim_x0, "initial state in (0, 1)")->capture_default_str();
    simulate->add_option("--burn-in", sim_burn, "iterations discarded before recording")->capture_default_str();
    simulate->add_option("--length", sim_length, "number of recorded states")->capture_default_str();
    add_output(*simulate, output);
    simulate->callback([&] {
        action = [&] {
            const auto params = sim_params.resolve();
            const auto orb = orbit(params, sim_x0, sim_burn, sim_length);
            Sink sink(output, out);
            sink.get() << "t,x\n";
            for (std::size_t k = 0; k < orb.states.size(); ++k)
                fmt::print(sink.get(), "{},{:.17g}\n", sim_burn + k, orb.states[k]);
        };
    });

    // cobweb
    ParamFlags cob_params;
    double cob_x0 = kDefaultX0;
    std::size_t cob_steps = 40;
    auto* cobweb = app.add_subcommand("cobweb", "write a cobweb diagram as SVG");
    cob_params.attach(*cobweb);
    cobweb->add_option("--x0", cob_x0, "initial state in (0, 1)")->capture_default_str();
    cobweb->add_option("--steps", cob_steps, "number of iterates drawn")->capture_default_str();
    add_output(*cobweb, output);
    cobweb->callback([&] {
        action = [&] {
            const auto params = cob_params.resolve();
            std::ostringstream doc;
            write_cobweb_svg(doc, params, cob_x0, cob_steps);
            Sink(output, out).get() << doc.str();
        };
    });

    // bifurcate
    double bif_lo = 2.5, bif_hi = 4.0;
    std::size_t bif_steps = kSweepSteps, bif_burn = kSweepBurnIn, bif_samples = kSweepSamples;
    std::string bif_format = "csv";
    auto* bifurcate = app.add_subcommand("bifurcate", "sweep r and write the bifurcation diagram");
    bifurcate->add_option("--r-lo", bif_lo, "lowest r")->capture_default_str();
    bifurcate->add_option("--r-hi", bif_hi, "highest r")->capture_default_str();
    bifurcate->add_option("--steps", bif_steps, "grid points")->capture_default_str();
    bifurcate->add_option("--burn-in", bif_burn, "iterations discarded per grid point")->capture_default_str();
    bifurcate->add_option("--samples", bif_samples, "states recorded per grid point")->capture_default_str();
    bifurcate->add_option("--format", bif_format, "csv or svg")
        ->check(CLI::IsMember({"csv", "svg"}))
        ->capture_default_str();
    add_output(*bifurcate, output);
    bifurcate->callback([&] {
        action = [&] {
            const auto diagram = sweep(bif_lo, bif_hi, bif_steps, bif_burn, bif_samples);
            std::ostringstream doc;
            if (bif_format == "svg") {
                write_bifurcation_svg(doc, diagram);
            } else {
                doc << "r,x\n";
                for (std::size_t k = 0; k < diagram.r_grid.size(); ++k)
                    for (double x : diagram.attractor_samples[k])
                        fmt::print(doc, "{:.17g},{:.17g}\n", diagram.r_grid[k], x);
            }
            Sink(output, out).get() << doc.str();
        };
    });

    // locate
    int loc_index = 1;
    double loc_tol = 1e-5;
    std::optional<double> loc_lo, loc_hi;
    bool loc_all = false;
    auto* locate = app.add_subcommand("locate", "locate period-doubling points by bisection (JSON)");
    auto* index_opt = locate->add_option("--index", loc_index, "doubling index 1, 2 or 3")->capture_default_str();
    auto* all_opt = locate->add_flag("--all", loc_all, "locate all three and report their ratio");
    auto* lo_opt = locate->add_option("--lo", loc_lo, "custom lower bracket end");
    auto* hi_opt = locate->add_option("--hi", loc_hi, "custom upper bracket end");
    locate->add_option("--tol", loc_tol, "bracket width at termination (>= 1e-6)")->capture_default_str();
    all_opt->excludes(index_opt)->excludes(lo_opt)->excludes(hi_opt);
    lo_opt->needs(hi_opt);
    hi_opt->needs(lo_opt);
    add_output(*locate, output);
    locate->callback([&] {
        action = [&] {
            nlohmann::json doc;
            if (loc_all) {
                nlohmann::json points = nlohmann::json::array();
                double r[3];
                for (int k = 1; k <= 3; ++k) {
                    const auto p = locate_doubling(k, loc_tol);
                    r[k - 1] = p.r_located;
                    points.push_back(to_json(p));
                }
                doc["doublings"] = std::move(points);
                doc["feigenbaum_ratio"] = feigenbaum_ratio(r[0], r[1], r[2]);
            } else {
                doc = to_json(loc_lo ? locate_doubling(loc_index, loc_tol, *loc_lo, *loc_hi)
                                     : locate_doubling(loc_index, loc_tol));
            }
            doc["tol"] = loc_tol;
            Sink(output, out).get() << dump(doc);
        };
    });

    // cycle
    ParamFlags cyc_params;
    double cyc_x0 = kDefaultX0, cyc_tol = kCycleTolerance;
    std::size_t cyc_burn = kCycleBurnIn, cyc_max = kCycleMaxPeriod;
    auto* cycle = app.add_subcommand("cycle", "detect the attracting cycle (JSON)");
    cyc_params.attach(*cycle);
    cycle->add_option("--x0", cyc_x0, "initial state in (0, 1)")->capture_default_str();
    cycle->add_option("--burn-in", cyc_burn, "iterations discarded first")->capture_default_str();
    cycle->add_option("--max-period", cyc_max, "longest period tried")->capture_default_str();
    cycle->add_option("--tol", cyc_tol, "recurrence tolerance")->capture_default_str();
    add_output(*cycle, output);
    cycle->callback([&] {
        action = [&] {
            const auto params = cyc_params.resolve();
            auto doc = to_json(detect_cycle(params, cyc_x0, cyc_burn, cyc_max, cyc_tol));
            doc["r"] = params.r();
            Sink(output, out).get() << dump(doc);
        };
    });

    // lyapunov
    ParamFlags lya_params;
    double lya_x0 = kDefaultX0;
    std::size_t lya_burn = kLyapunovBurnIn, lya_iterates = kLyapunovIterates;
    auto* lyap = app.add_subcommand("lyapunov", "estimate the Lyapunov exponent (JSON)");
    lya_params.attach(*lyap);
    lyap->add_option("--x0", lya_x0, "initial state in (0, 1)")->capture_default_str();
    lyap->add_option("--burn-in", lya_burn, "iterations discarded first")->capture_default_str();
    lyap->add_option("--iterates", lya_iterates, "iterates averaged")->capture_default_str();
    add_output(*lyap, output);
    lyap->callback([&] {
        action = [&] {
            const auto params = lya_params.resolve();
            auto doc = to_json(lyapunov(params, lya_x0, lya_burn, lya_iterates));
            doc["r"] = params.r();
            Sink(output, out).get() << dump(doc);
        };
    });

    // liyorke
    ParamFlags ly_params;
    bool ly_threshold = false;
    double ly_lo = 3.5, ly_hi = 4.0, ly_tol = 1e-6;
    auto* liyorke = app.add_subcommand("liyorke", "Li-Yorke certificate, or its threshold with --threshold (JSON)");
    ly_params.attach(*liyorke);
    liyorke->add_flag("--threshold", ly_threshold, "bisect for the r where the certificate first holds");
    liyorke->add_option("--lo", ly_lo, "threshold bracket: certificate fails here")->capture_default_str();
    liyorke->add_option("--hi", ly_hi, "threshold bracket: certificate holds here")->capture_default_str();
    liyorke->add_option("--tol", ly_tol, "threshold bracket width")->capture_default_str();
    add_output(*liyorke, output);
    liyorke->callback([&] {
        action = [&] {
            nlohmann::json doc;
            if (ly_threshold) {
                if (ly_params.r || ly_params.T) throw InputError("--threshold does not take --r, --T or --epsilon");
                doc["threshold"] = liyorke_threshold(ly_lo, ly_hi, ly_tol);
                doc["lo"] = ly_lo;
                doc["hi"] = ly_hi;
                doc["tol"] = ly_tol;
            } else {
                doc = to_json(liyorke_certificate(ly_params.resolve()));
            }
            Sink(output, out).get() << dump(doc);
        };
    });

    // estimate
    std::string est_input;
    bool est_rounded = false;
    auto* estimate = app.add_subcommand("estimate", "build the growth-indicator table from a raw yearly CSV");
    estimate->add_option("--input", est_input, "raw series CSV")->required();
    estimate->add_flag("--rounded", est_rounded, "present values rounded to four decimals");
    add_output(*estimate, output);
    estimate->callback([&] {
        action = [&] {
            std::ifstream in(est_input, std::ios::binary);
            if (!in) throw InputError(fmt::format("cannot open '{}'", est_input));
            const auto table = build_indicators(read_raw_csv(in));
            std::ostringstream doc;
            write_indicator_csv(doc, table, est_rounded ? CsvPrecision::four_decimals : CsvPrecision::full);
            Sink(output, out).get() << doc.str();
        };
    });

    // advise
    double adv_ab = 0.0, adv_n = 0.0;
    std::optional<double> adv_T, adv_eps;
    auto* advise_cmd = app.add_subcommand("advise", "regime and regulation advice for (alpha+beta, n) (JSON)");
    advise_cmd->add_option("--alpha-beta", adv_ab, "alpha + beta")->required();
    advise_cmd->add_option("--n", adv_n, "labour growth rate n")->required();
    advise_cmd->add_option("--T", adv_T, "firm coefficient; must match (alpha+beta)/(1+n)");
    advise_cmd->add_option("--epsilon", adv_eps, "regulation parameter to evaluate");
    add_output(*advise_cmd, output);
    advise_cmd->callback([&] {
        action = [&] { Sink(output, out).get() << dump(to_json(advise(adv_T, adv_eps, adv_ab, adv_n))); };
    });

    std::vector<const char*> argv{"chaoskit"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "chaoskit: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (action) action();
        return kOk;
    } catch (const ConvergenceError& e) {
        err << "chaoskit: convergence failure: " << e.what() << "\n";
        return kConvergenceError;
    } catch (const DomainError& e) {
        err << "chaoskit: domain error: " << e.what() << "\n";
        return kInputError;
    } catch (const BracketError& e) {
        err << "chaoskit: bracket error: " << e.what() << "\n";
        return kInputError;
    } catch (const InputError& e) {
        err << "chaoskit: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace chaoskit::cli
