#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stabpoly/poly.hpp"
#include "stabpoly/stability.hpp"

namespace stabpoly {

/// sum over terms c x^j of f of c (-d)^j g.
MultiPoly apply_neg_partial(const MultiPoly& f, const MultiPoly& g);

/// exp(-Sum_i d_{x_i} d_{y_i}) f for f in 2 * block variables, the x block
/// first. The series terminates on polynomials.
MultiPoly exp_neg_mixed(const MultiPoly& f, int block);
/// Same, with the block taken as half the variable count (which must be even).
MultiPoly exp_neg_mixed(const MultiPoly& f);

/// Symbol f(x, v) in 2d variables of the operator T g = f(x, -d) g acting on
/// polynomials in d variables.
class DiffOperatorSymbol {
public:
    DiffOperatorSymbol(MultiPoly symbol, int block);

    const MultiPoly& symbol() const { return symbol_; }
    int block() const { return block_; }

private:
    MultiPoly symbol_;
    int block_;
};

/// The generating-function symbol of T: f(x, v).
MultiPoly symbol_of(const DiffOperatorSymbol& t);

/// T g: each symbol term c x^a v^b contributes c x^a (-d)^b g.
MultiPoly apply_operator(const DiffOperatorSymbol& t, const MultiPoly& g);

struct PreserverReport {
    Verdict symbol_verdict;
    /// Index into the search set of a stable g whose image is certified
    /// unstable, with that image and its verdict.
    std::optional<std::size_t> counterexample;
    std::optional<MultiPoly> image;
    std::optional<Verdict> image_verdict;
};

/// Tests the symbol for stability. When the symbol is unstable, searches
/// `stable_inputs` (polynomials in block() variables) for one whose image
/// is certified unstable.
PreserverReport preserver_test(const DiffOperatorSymbol& t, const SampleConfig& cfg,
                               const std::vector<MultiPoly>& stable_inputs = {});

/// x^i -> a_i x^i on a finite grid of exponents.
struct DiagonalOperator {
    int nvars = 2;
    std::map<ExponentVector, double> grid;
};

/// Diagonal operator from a dense two-dimensional table a[i][j].
DiagonalOperator diagonal_from_table(const std::vector<std::vector<double>>& table);

MultiPoly apply_diagonal(const DiagonalOperator& t, const MultiPoly& g);

struct DiagonalFactorResult {
    /// seq[k][i] per variable k with a_e = prod_k seq[k][e_k] on success.
    std::optional<std::vector<std::vector<double>>> factors;
    /// Lower corner of the first 2x2 cell violating the multiplicativity
    /// identity, with the two axes involved.
    std::optional<ExponentVector> violating_cell;
    std::optional<std::pair<int, int>> violating_axes;
    std::string diagnostic;
};

/// Checks a_e a_{e + u + w} = a_{e + u} a_{e + w} on every adjacent 2x2 cell
/// (relative tolerance 1e-10) and, on success, returns per-variable
/// sequences seq[0][i] = a(i e_0), seq[k][i] = a(i e_k) / a_0 for k >= 1.
/// The grid must be a full box [0, cap_0] x ... x [0, cap_{d-1}]; zero
/// entries give no factors with a diagnostic.
DiagonalFactorResult diagonal_factor(const DiagonalOperator& t);

/// Physicists' Hermite polynomial H_n.
UniPoly hermite(int n);

/// x^e -> prod_k H_{e_k}(x_k), extended linearly.
MultiPoly hermite_map(const MultiPoly& g);

}  // namespace stabpoly
