#pragma once

#include <gtest/gtest.h>

#include <initializer_list>
#include <utility>

#include "stabpoly/poly.hpp"

namespace stabpoly::testing {

using Term = std::pair<ExponentVector, Complex>;

inline MultiPoly P(int nvars, std::initializer_list<Term> terms) {
    MultiPoly f(nvars);
    for (const auto& [e, c] : terms) f.add_term(e, c);
    return f;
}

inline UniPoly U(std::initializer_list<Complex> coeffs) { return UniPoly(std::vector<Complex>(coeffs)); }

inline ::testing::AssertionResult Near(const MultiPoly& f, const MultiPoly& g, double tol = 1e-12) {
    if (f.nvars() != g.nvars())
        return ::testing::AssertionFailure() << "nvars " << f.nvars() << " vs " << g.nvars();
    const double d = max_coeff_distance(f, g);
    if (d <= tol) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << to_string(f) << " vs " << to_string(g) << " (distance " << d << ")";
}

}  // namespace stabpoly::testing
