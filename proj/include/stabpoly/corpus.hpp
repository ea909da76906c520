#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stabpoly/io.hpp"
#include "stabpoly/poly.hpp"

namespace stabpoly {

/// A certified-stable polynomial together with the recipe that produced it.
struct CorpusEntry {
    std::string family;
    std::uint64_t seed = 0;
    Json params;
    MultiPoly poly;

    std::string id() const { return family + "/" + std::to_string(seed); }
};

/// Regenerates a single entry from its family, seed and params.
MultiPoly generate_member(const std::string& family, std::uint64_t seed, const Json& params);

/// The standard 200-member corpus: hand examples, determinantal pencils,
/// mixed determinant sums, recurrence chain tops and products of positive
/// linear forms. Deterministic.
std::vector<CorpusEntry> build_corpus();

/// Writes <dir>/<family>/<seed>.json per entry plus <dir>/manifest.json.
void write_corpus(const std::string& dir, const std::vector<CorpusEntry>& entries);

/// Loads a corpus written by write_corpus. ParseError when the manifest or
/// any member is missing or malformed.
std::vector<CorpusEntry> read_corpus(const std::string& dir);

}  // namespace stabpoly
