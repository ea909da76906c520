#pragma once

#include <functional>
#include <string>
#include <vector>

#include "stabpoly/corpus.hpp"
#include "stabpoly/stability.hpp"

namespace stabpoly {

struct PropertyResult {
    std::string id;
    bool passed = true;
    int checked = 0;
    int failed = 0;
    /// First failure, empty on success.
    std::string detail;
};

struct SuiteContext {
    std::vector<CorpusEntry> corpus;
    SampleConfig cfg;
};

struct Property {
    /// "<group>.<name>"; groups: poly, uni, hand, closure, interlacing,
    /// determinantal, bilinear, coefficients, hb, rayleigh, operators.
    std::string id;
    std::function<PropertyResult(const SuiteContext&)> run;
};

const std::vector<Property>& suite_properties();

/// Runs every property whose id contains `filter` (all when empty), on up
/// to `threads` worker threads. Results are sorted by id.
std::vector<PropertyResult> run_suite(const SuiteContext& ctx, const std::string& filter = "",
                                      unsigned threads = 0);

/// {"passed": n, "failed": n, "results": [{"id", "passed", "checked",
/// "failed", "detail"}, ...]}.
Json suite_report(const std::vector<PropertyResult>& results);

}  // namespace stabpoly
