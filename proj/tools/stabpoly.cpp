// Command-line front end: check, construct and suite.

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>

#include "stabpoly/constructions.hpp"
#include "stabpoly/corpus.hpp"
#include "stabpoly/io.hpp"
#include "stabpoly/stability.hpp"
#include "stabpoly/suite.hpp"

using namespace stabpoly;

namespace {

enum Exit : int {
    kPass = 0,
    kWitness = 1,
    kInconclusive = 2,
    kInputError = 3,
    kInvalidParams = 4,
    kUsage = 5,
};

struct Options {
    int lines = 500;
    std::uint64_t seed = kDefaultSeed;
    double tol = kDefaultTol;
    std::string out;
    bool timings = false;

    std::string in;
    std::string with;

    int n = 2;
    int d = 2;
    int m = 2;
    int steps = 3;
    bool with_e = false;
    bool unit = false;
    std::string dir;

    std::string corpus = "corpus";
    std::string filter;
    unsigned threads = 0;
};

SampleConfig sample_config(const Options& o) {
    SampleConfig cfg;
    cfg.num_lines = o.lines;
    cfg.seed = o.seed;
    cfg.tol = o.tol;
    cfg.validate();
    return cfg;
}

// Every report starts with the command and the configuration it ran under.
Json report_header(const std::string& command, const Options& o) {
    Json j;
    j["command"] = command;
    j["config"] = {{"seed", o.seed}, {"tol", o.tol}, {"num_lines", o.lines}};
    return j;
}

int verdict_exit(const Verdict& v) {
    switch (v.tag) {
    case VerdictTag::StableLikely: return v.lines_inconclusive == v.lines_checked && v.lines_checked > 0 ? kInconclusive : kPass;
    case VerdictTag::UnstableWitness: return kWitness;
    case VerdictTag::ZeroPolynomial: return kInconclusive;
    }
    return kInconclusive;
}

int emit(Json report, const Json& payload, const Options& o, int code,
         std::chrono::steady_clock::time_point start) {
    report["result"] = payload;
    report["exit_code"] = code;
    if (o.timings)
        report["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << report.dump(2) << '\n';
    if (!o.out.empty()) write_json(o.out, payload);
    return code;
}

int run_check(const std::string& kind, const Options& o) {
    const auto start = std::chrono::steady_clock::now();
    const SampleConfig cfg = sample_config(o);
    const MultiPoly f = read_poly_file(o.in);
    Json report = report_header("check " + kind, o);
    report["note"] = "StableLikely is sampled evidence, not proof; UnstableWitness is a certificate";

    if (kind == "stable") {
        const Verdict v = test_stable(f, cfg);
        return emit(report, verdict_to_json(v), o, verdict_exit(v), start);
    }
    if (kind == "interlace") {
        if (o.with.empty()) throw std::invalid_argument("check interlace needs --with");
        const MultiPoly g = read_poly_file(o.with);
        if (g.nvars() != f.nvars()) throw DimensionMismatch("interlace inputs differ in variable count");
        const Verdict v = test_interlace(f, g, cfg);
        return emit(report, verdict_to_json(v), o, verdict_exit(v), start);
    }
    if (kind == "hb") {
        const HBReport r = hb_test(f, cfg);
        Json p = {{"agree", r.agree()}, {"split", verdict_to_json(r.split)}, {"direct", verdict_to_json(r.direct)},
                  {"real", poly_to_json(r.real)}, {"imag", poly_to_json(r.imag)}};
        const int code = !r.agree() ? kInconclusive : verdict_exit(r.direct);
        return emit(report, p, o, code, start);
    }
    if (kind == "bilinear") {
        if (f.nvars() != 2) throw DimensionMismatch("bilinear check needs two variables");
        if (!f.is_real(1e-12) || f.degree_in(0) > 1 || f.degree_in(1) > 1)
            throw std::invalid_argument("bilinear check needs a real polynomial a + b x + c y + d x y");
        const BilinearVerdict b = bilinear_exact(f.real_part());
        Json p = {{"verdict", to_string(b)}, {"determinant", bilinear_determinant(f.real_part())}};
        return emit(report, p, o, b == BilinearVerdict::Unstable ? kWitness : kPass, start);
    }
    if (kind == "rayleigh") {
        if (!f.is_real(1e-12) || !is_multiaffine(f))
            throw std::invalid_argument("rayleigh check needs a real multiaffine polynomial");
        const RayleighResult r = rayleigh_check_all(f.real_part(), default_rayleigh_points(f.nvars(), o.seed));
        Json p = {{"min_value", r.min_value}, {"argmin", r.argmin}, {"i", r.i}, {"j", r.j}};
        return emit(report, p, o, r.min_value >= -o.tol ? kPass : kWitness, start);
    }
    if (kind == "coeffs") {
        const CoeffReport r = coeff_necessary(f, cfg);
        Json slices = Json::array(), cells = Json::array();
        for (const auto& s : r.adjacent_interlace)
            if (!s.pass) slices.push_back({{"var", s.var}, {"k", s.k}});
        for (const auto& c : r.grid_inequality)
            if (!c.pass)
                cells.push_back({{"var_p", c.var_p}, {"var_q", c.var_q}, {"sample", c.sample}, {"r", c.r},
                                 {"s", c.s}, {"value", c.value}});
        Json p = {{"pass", r.pass()}, {"top_phase", r.top_phase}, {"grid_applicable", r.grid_applicable},
                  {"failing_slices", slices}, {"failing_cells", cells}};
        return emit(report, p, o, r.pass() ? kPass : kWitness, start);
    }
    throw std::invalid_argument("unknown check kind " + kind);
}

int run_construct(const std::string& family, const Options& o) {
    const auto start = std::chrono::steady_clock::now();
    Json report = report_header("construct " + family, o);
    if (family == "corpus") {
        if (o.dir.empty()) throw std::invalid_argument("construct corpus needs --dir");
        const auto entries = build_corpus();
        write_corpus(o.dir, entries);
        report["result"] = {{"dir", o.dir}, {"members", entries.size()}};
        report["exit_code"] = 0;
        std::cout << report.dump(2) << '\n';
        return kPass;
    }
    Json params;
    if (family == "pencil") {
        if (o.n < 1 || o.n > 8 || o.d < 1 || o.d > 6) throw std::invalid_argument("pencil needs 1 <= n <= 8, 1 <= d <= 6");
        params = {{"n", o.n}, {"d", o.d}, {"with_E", o.with_e}};
    } else if (family == "johnson") {
        if (o.n < 1 || o.n > 5 || o.m < 1 || o.m > 3 || o.d < 1) throw std::invalid_argument("johnson needs 1 <= n <= 5, 1 <= m <= 3, d >= 1");
        params = {{"n", o.n}, {"m", o.m}, {"d", o.d}};
    } else if (family == "recurrence") {
        if (o.d < 1 || o.steps < 1) throw std::invalid_argument("recurrence needs d >= 1 and steps >= 1");
        params = {{"d", o.d}, {"steps", o.steps}, {"unit", o.unit}};
    } else {
        throw std::invalid_argument("unknown family " + family);
    }
    const MultiPoly f = generate_member(family, o.seed, params);
    Json payload = poly_to_json(f);
    report["manifest"] = {{"family", family}, {"seed", o.seed}, {"params", params}};
    return emit(report, payload, o, kPass, start);
}

int run_suite_cmd(const Options& o) {
    const auto start = std::chrono::steady_clock::now();
    SuiteContext ctx;
    ctx.cfg = sample_config(o);
    ctx.corpus = read_corpus(o.corpus);
    const auto results = run_suite(ctx, o.filter, o.threads);
    Json report = report_header("suite", o);
    report["filter"] = o.filter;
    report["corpus_members"] = ctx.corpus.size();
    const Json payload = suite_report(results);
    const int code = payload["failed"].get<int>() == 0 && !results.empty() ? kPass : kWitness;
    return emit(report, payload, o, code, start);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sampled stability tests and certified-stable constructions for multivariate polynomials"};
    app.require_subcommand(1);
    // Global flags may appear after the subcommand too; subcommands inherit this.
    app.fallthrough();
    Options o;
    app.add_option("--lines", o.lines, "Number of sampled lines")->capture_default_str();
    app.add_option("--seed", o.seed, "Sampling seed")->envname("STABPOLY_SEED")->capture_default_str();
    app.add_option("--tol", o.tol, "Upper half-plane tolerance")->capture_default_str();
    app.add_option("--out", o.out, "Write the result JSON here ('-' for standard output)");
    app.add_flag("--timings", o.timings, "Include wall-clock seconds in the report");

    std::string kind, family;
    auto* check = app.add_subcommand("check", "Test a polynomial read from JSON");
    check->add_option("kind", kind, "stable|interlace|hb|bilinear|rayleigh|coeffs")
        ->required()
        ->check(CLI::IsMember({"stable", "interlace", "hb", "bilinear", "rayleigh", "coeffs"}));
    check->add_option("--in", o.in, "Polynomial JSON")->required();
    check->add_option("--with", o.with, "Second polynomial for interlace");

    auto* construct = app.add_subcommand("construct", "Build a certified-stable polynomial");
    construct->add_option("family", family, "pencil|johnson|recurrence|corpus")
        ->required()
        ->check(CLI::IsMember({"pencil", "johnson", "recurrence", "corpus"}));
    construct->add_option("--n", o.n, "Matrix size");
    construct->add_option("--d", o.d, "Number of variables");
    construct->add_option("--m", o.m, "Number of blocks for johnson");
    construct->add_option("--steps", o.steps, "Recurrence steps");
    construct->add_flag("--with-E", o.with_e, "Add a positive semidefinite imaginary part");
    construct->add_flag("--unit", o.unit, "Recurrence with a = 1, b = 0, c = 1");
    construct->add_option("--dir", o.dir, "Output directory for corpus");

    auto* suite = app.add_subcommand("suite", "Run the property suite against a corpus");
    suite->add_option("--corpus", o.corpus, "Corpus directory")->capture_default_str();
    suite->add_option("--filter", o.filter, "Run only properties whose id contains this");
    suite->add_option("--threads", o.threads, "Worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*check) return run_check(kind, o);
        if (*construct) return run_construct(family, o);
        if (*suite) return run_suite_cmd(o);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalidParams;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalidParams;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kUsage;
}
