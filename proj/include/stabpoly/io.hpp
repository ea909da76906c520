#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "stabpoly/constructions.hpp"
#include "stabpoly/operators.hpp"
#include "stabpoly/poly.hpp"
#include "stabpoly/stability.hpp"

namespace stabpoly {

using Json = nlohmann::json;

/// Malformed or unreadable input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {"nvars": d, "terms": [{"exp": [...], "re": x, "im": y}, ...]} with terms
/// in graded-lex order.
Json poly_to_json(const MultiPoly& f);

/// Rejects duplicate exponents, wrong exponent lengths, negative exponents,
/// non-finite values and coefficients with |re|, |im| both below 1e-300.
MultiPoly poly_from_json(const Json& j);

Json line_to_json(const AffineLine& line);

/// {"tag", "lines_checked", "lines_inconclusive", "min_margin", "witness"?}.
/// A non-finite margin is written as null.
Json verdict_to_json(const Verdict& v);

Json pencil_to_json(const MatrixPencil& p);
MatrixPencil pencil_from_json(const Json& j);

/// Polynomial JSON plus "block_split".
Json symbol_to_json(const DiffOperatorSymbol& s);
DiffOperatorSymbol symbol_from_json(const Json& j);

/// {"dims": [n1, n2], "grid": [[...], ...]}.
Json diagonal_to_json(const DiagonalOperator& t);
DiagonalOperator diagonal_from_json(const Json& j);

/// Parses a file; ParseError on IO or syntax failure.
Json read_json_file(const std::string& path);

/// Writes j.dump(2) and a trailing newline; "-" means standard output.
void write_json(const std::string& path, const Json& j);

MultiPoly read_poly_file(const std::string& path);

}  // namespace stabpoly
