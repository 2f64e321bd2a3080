#include "cli.hpp"

#include "funcut/chop.hpp"
#include "funcut/construct.hpp"
#include "funcut/expr.hpp"
#include "funcut/io.hpp"
#include "funcut/transform.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

namespace funcut::cli {

namespace {

using nlohmann::ordered_json;

constexpr std::size_t kDefaultMaxSamples = 65537;

struct ConstructOptions {
    std::string expression;
    double eps = 0x1p-52;
    double tol_scale = 1.0;
    bool trig = false;
    bool doublelength = false;
    bool resample = false;
    std::vector<double> interval{-1.0, 1.0};
    std::optional<std::size_t> max_samples;
    std::string coeffs_path;
    std::size_t eval_points = 0;
    std::string eval_path = "eval.csv";
    std::size_t raw_grid = 0;
};

struct ChopOptions {
    std::string path;
    double tol = 0x1p-52;
    bool envelope = false;
};

ordered_json chop_json(const ChopResult &chop) {
    ordered_json j;
    j["cutoff"] = chop.cutoff;
    j["plateauPoint"] = chop.plateau_point ? ordered_json(*chop.plateau_point) : ordered_json(nullptr);
    j["happy"] = chop.happy;
    if (chop.degenerate_tol)
        j["degenerateTol"] = true;
    return j;
}

std::size_t max_samples_default(std::ostream &diag) {
    if (const char *env = std::getenv("FUNCUT_MAX_SAMPLES")) {
        std::size_t v = 0;
        const std::string s(env);
        const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc{} && end == s.data() + s.size())
            return v;
        diag << "warning: ignoring malformed FUNCUT_MAX_SAMPLES='" << s << "'\n";
    }
    return kDefaultMaxSamples;
}

std::string doubled_path(const std::string &path) {
    std::filesystem::path p(path);
    const std::string ext = p.extension().string();
    p.replace_extension();
    return p.string() + ".double" + (ext.empty() ? ".csv" : ext);
}

void write_coeff_file(const std::string &path, const Fun &fun) {
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    io::write_coefficients(os, fun.series.basis(), fun.series.coeffs());
}

int run_construct(const ConstructOptions &opt, std::ostream &out, std::ostream &diag) {
    std::optional<expr::Ast> ast;
    try {
        ast = expr::parse(opt.expression);
    } catch (const expr::ParseError &e) {
        diag << "error: parse error at " << e.what() << '\n';
        return kUsage;
    }
    if (opt.interval.size() != 2) {
        diag << "error: --interval takes two values\n";
        return kUsage;
    }
    const Interval interval{opt.interval[0], opt.interval[1]};
    if (!interval.valid()) {
        diag << "error: interval must be finite with a < b\n";
        return kUsage;
    }
    const expr::Ast &f = *ast;
    const Sampler sampler{[&f](double x) { return expr::eval_ast(f, x); }, interval};

    ConstructConfig config;
    config.tol = opt.eps;
    config.tol_scale = opt.tol_scale;
    config.trig = opt.trig;
    config.doublelength = opt.doublelength;
    config.resample = opt.resample;
    config.max_samples = opt.max_samples ? *opt.max_samples : max_samples_default(diag);
    try {
        config.validate();
    } catch (const std::invalid_argument &e) {
        diag << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        ordered_json j;
        std::optional<Fun> doubled;
        Fun fun = [&] {
            if (opt.raw_grid > 0) {
                const Basis basis = opt.trig ? Basis::Trigonometric : Basis::Chebyshev;
                Fun raw = sample_grid(sampler, basis, opt.raw_grid, config.effective_tol());
                j["length"] = raw.length();
                j["happy"] = raw.diagnostics.happy;
                j["cutoff"] = raw.diagnostics.cutoff;
                j["plateauPoint"] = raw.diagnostics.plateau_point ? ordered_json(*raw.diagnostics.plateau_point)
                                                                  : ordered_json(nullptr);
                j["gridsTried"] = {opt.raw_grid};
                j["perGrid"] = ordered_json::array({chop_json(raw.diagnostics)});
                j["perGrid"][0]["grid"] = opt.raw_grid;
                j["sampleTestFailures"] = 0;
                j["warning"] = nullptr;
                return raw;
            }
            Construction c = construct(sampler, config);
            j["length"] = c.fun.length();
            j["happy"] = c.fun.happy;
            j["cutoff"] = c.fun.diagnostics.cutoff;
            j["plateauPoint"] =
                c.fun.diagnostics.plateau_point ? ordered_json(*c.fun.diagnostics.plateau_point) : ordered_json(nullptr);
            j["gridsTried"] = c.report.grids_tried;
            ordered_json grids = ordered_json::array();
            for (const GridAttempt &g : c.report.per_grid) {
                ordered_json entry;
                entry["grid"] = g.points;
                entry.update(chop_json(g.chop));
                entry["sampleTest"] = g.sample_test_passed ? ordered_json(*g.sample_test_passed) : ordered_json(nullptr);
                grids.push_back(std::move(entry));
            }
            j["perGrid"] = std::move(grids);
            j["sampleTestFailures"] = c.report.sample_test_failures;
            j["warning"] = c.report.warning ? ordered_json(*c.report.warning) : ordered_json(nullptr);
            doubled = std::move(c.doubled);
            return std::move(c.fun);
        }();

        j["basis"] = to_string(fun.series.basis());
        j["interval"] = {interval.a, interval.b};
        j["vscale"] = fun.vscale;
        if (doubled)
            j["doubledLength"] = doubled->length();

        if (!opt.coeffs_path.empty()) {
            write_coeff_file(opt.coeffs_path, fun);
            if (doubled)
                write_coeff_file(doubled_path(opt.coeffs_path), *doubled);
        }
        if (opt.eval_points > 0) {
            std::ofstream os(opt.eval_path);
            if (!os)
                throw std::runtime_error("cannot open '" + opt.eval_path + "' for writing");
            os << "x,error\n";
            const std::size_t n = opt.eval_points;
            for (std::size_t i = 0; i < n; ++i) {
                const double x = n == 1 ? interval.a
                                        : map_from_reference(-1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(n - 1),
                                                             interval);
                const double err = std::abs(fun(x) - expr::eval_ast(f, x));
                os << io::format_double(x) << ',' << io::format_double(err) << '\n';
            }
        }

        out << j.dump(2) << '\n';
        if (opt.raw_grid > 0)
            diag << "length " << fun.length() << " (raw grid, chop cutoff " << fun.diagnostics.cutoff << "), grids";
        else
            diag << "length " << fun.length() << (fun.happy ? " (happy)" : " (unhappy)") << ", grids";
        for (const auto &g : j["gridsTried"])
            diag << ' ' << g.get<std::size_t>();
        diag << '\n';
        if (!j["warning"].is_null())
            diag << "warning: " << j["warning"].get<std::string>() << '\n';
        return kOk;
    } catch (const SamplingError &e) {
        diag << "error: " << e.what() << '\n';
        return kNumeric;
    } catch (const std::invalid_argument &e) {
        diag << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::runtime_error &e) {
        diag << "error: " << e.what() << '\n';
        return kUsage;
    }
}

int run_chop(const ChopOptions &opt, std::ostream &out, std::ostream &diag) {
    std::ifstream is(opt.path);
    if (!is) {
        diag << "error: cannot open '" << opt.path << "'\n";
        return kUsage;
    }
    io::CoefficientFile file;
    try {
        file = io::read_coefficients(is);
    } catch (const io::FormatError &e) {
        diag << "error: " << opt.path << ": " << e.what() << '\n';
        return kUsage;
    }

    ChopResult chop;
    if (file.basis == Basis::Chebyshev) {
        chop = standard_chop(file.coeffs, opt.tol);
    } else {
        const std::vector<double> folded = fold_trig_for_chop(file.coeffs);
        chop = standard_chop(std::span<const double>(folded), opt.tol);
    }

    ordered_json j;
    j["n"] = file.coeffs.size();
    j["basis"] = to_string(file.basis);
    j.update(chop_json(chop));
    if (opt.envelope)
        j["envelope"] = chop.envelope.values;
    out << j.dump(2) << '\n';
    diag << "cutoff " << chop.cutoff << " of " << file.coeffs.size() << (chop.happy ? " (happy)" : " (unhappy)") << '\n';
    return kOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &diag) {
    CLI::App app{"Adaptive Chebyshev and trigonometric approximation with plateau-based chopping", "funcut"};
    app.require_subcommand(1);

    ConstructOptions copt;
    auto *construct_cmd = app.add_subcommand("construct", "Construct a function from an expression in x");
    construct_cmd->add_option("expr", copt.expression, "Expression, e.g. '3*exp(-1./(x+1))-(x+1)'")->required();
    construct_cmd->add_option("--eps", copt.eps, "Relative tolerance in (0,1)");
    construct_cmd->add_option("--tol-scale", copt.tol_scale, "Multiplier applied to eps (global/local scale ratio)");
    construct_cmd->add_flag("--trig", copt.trig, "Periodic (trigonometric) representation");
    construct_cmd->add_flag("--doublelength", copt.doublelength, "Also build the representation at twice the degree");
    construct_cmd->add_flag("--resample", copt.resample, "Re-evaluate every point on each grid");
    construct_cmd->add_option("--interval", copt.interval, "Interval endpoints a b")->expected(2);
    construct_cmd->add_option("--max-samples", copt.max_samples, "Largest grid size (default 65537)");
    construct_cmd->add_option("--coeffs", copt.coeffs_path, "Write coefficients to this CSV file");
    construct_cmd->add_option("--eval", copt.eval_points, "Write N equispaced (x, error) rows");
    construct_cmd->add_option("--eval-out", copt.eval_path, "Destination of --eval rows");
    construct_cmd->add_option("--raw-grid", copt.raw_grid, "Sample one grid of N points, no adaptivity or chop");

    ChopOptions chopt;
    auto *chop_cmd = app.add_subcommand("chop", "Run the chopping algorithm on a coefficient file");
    chop_cmd->add_option("file", chopt.path, "Coefficient CSV")->required();
    chop_cmd->add_option("--tol", chopt.tol, "Relative tolerance");
    chop_cmd->add_flag("--envelope", chopt.envelope, "Include the normalized envelope");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        diag << "error: " << e.what() << '\n';
        return kUsage;
    }

    if (*construct_cmd)
        return run_construct(copt, out, diag);
    return run_chop(chopt, out, diag);
}

} // namespace funcut::cli
