// Acceptance run: one PASS/FAIL line per criterion, each against its time
// budget. Criterion 10 repeats 1-9 and compares the reports byte for byte.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "stabpoly/corpus.hpp"
#include "stabpoly/suite.hpp"

using namespace stabpoly;

namespace {

struct Criterion {
    int number;
    const char* group;
    const char* title;
    double budget_seconds;
};

const std::vector<Criterion> kCriteria = {
    {1, "hand", "hand-example verdicts", 5.0},
    {2, "closure", "closure suite over the corpus", 600.0},
    {3, "interlacing", "interlacing algebra and recurrence chains", 300.0},
    {4, "determinantal", "pencils and mixed determinant sums", 600.0},
    {5, "bilinear", "exact bilinear criterion vs sampler", 120.0},
    {6, "coefficients", "coefficient inequalities", 180.0},
    {7, "hb", "real/imaginary split agreement", 300.0},
    {8, "rayleigh", "Rayleigh difference", 60.0},
    {9, "operators", "operator suite", 600.0},
};

struct Outcome {
    bool passed = false;
    double seconds = 0.0;
    std::string report;
    std::string first_failure;
};

Outcome run_group(const SuiteContext& ctx, const Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    const std::string prefix = std::string(c.group) + ".";
    std::vector<PropertyResult> results;
    for (auto& r : run_suite(ctx, prefix))
        if (r.id.rfind(prefix, 0) == 0) results.push_back(std::move(r));
    Outcome o;
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.report = suite_report(results).dump();
    o.passed = !results.empty();
    for (const auto& r : results)
        if (!r.passed) {
            o.passed = false;
            if (o.first_failure.empty()) o.first_failure = r.id + ": " + r.detail;
        }
    return o;
}

}  // namespace

int main() {
    SuiteContext ctx;
    ctx.corpus = read_corpus(STABPOLY_CORPUS_DIR);

    int failures = 0;
    std::vector<std::string> reports;
    double total = 0.0;
    for (const auto& c : kCriteria) {
        const Outcome o = run_group(ctx, c);
        const bool ok = o.passed && o.seconds < c.budget_seconds;
        failures += ok ? 0 : 1;
        total += o.seconds;
        reports.push_back(o.report);
        std::printf("%s  criterion %2d  %-45s %8.2f s (budget %.0f s)\n", ok ? "PASS" : "FAIL", c.number, c.title,
                    o.seconds, c.budget_seconds);
        if (!o.first_failure.empty()) std::printf("      first failure: %s\n", o.first_failure.c_str());
        std::fflush(stdout);
    }

    // Determinism: same seeds, same bytes.
    const auto start = std::chrono::steady_clock::now();
    bool identical = true;
    for (std::size_t k = 0; k < kCriteria.size(); ++k)
        if (run_group(ctx, kCriteria[k]).report != reports[k]) {
            identical = false;
            std::printf("      report for criterion %d changed on re-run\n", kCriteria[k].number);
        }
    const double rerun = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = identical && rerun < 2.0 * total + 60.0;
    failures += ok ? 0 : 1;
    std::printf("%s  criterion 10  %-45s %8.2f s (budget: full re-run)\n", ok ? "PASS" : "FAIL",
                "byte-identical reports on re-run", rerun);

    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
