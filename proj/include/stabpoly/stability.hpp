#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stabpoly/poly.hpp"
#include "stabpoly/uni.hpp"

namespace stabpoly {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

/// Line sampling for the randomized stability tester. Line 0 is always the
/// diagonal a = 0, b = (1, ..., 1); line k > 0 draws a uniformly from
/// [-shift_scale, shift_scale]^d and b log-uniformly from
/// [dilation_lo, dilation_hi]^d, seeded by derive_seed(seed, k).
struct SampleConfig {
    int num_lines = 500;
    std::uint64_t seed = kDefaultSeed;
    double tol = kDefaultTol;
    double shift_scale = 10.0;
    double dilation_lo = 0.1;
    double dilation_hi = 10.0;

    void validate() const;
};

AffineLine sample_line(const SampleConfig& cfg, int nvars, int index);

enum class VerdictTag { UnstableWitness, StableLikely, ZeroPolynomial };

const char* to_string(VerdictTag tag);

struct Witness {
    AffineLine line;
    Complex root;
};

/// Outcome of a sampled stability test. UnstableWitness is a certificate:
/// the restriction of f to `witness->line` has a root with Im above
/// 10 * tol * scale. StableLikely is evidence only.
struct Verdict {
    VerdictTag tag = VerdictTag::StableLikely;
    std::optional<Witness> witness;
    int lines_checked = 0;
    /// Lines whose root report failed its residual certificate.
    int lines_inconclusive = 0;
    /// Largest normalized Im(root) / (1 + max|root|) seen on any line;
    /// -inf when no line produced a root.
    double min_margin = 0.0;

    bool stable_or_zero() const { return tag != VerdictTag::UnstableWitness; }
};

/// Samples cfg.num_lines lines, restricts f to each and checks the
/// restriction for upper-half-plane roots. Stops at the first certified
/// witness. A restriction that vanishes identically is a witness with root i.
/// Degree-1 inputs are decided exactly (a real line cannot see the zeros of
/// a real linear form with mixed signs) and report lines_checked = 1.
Verdict test_stable(const MultiPoly& f, const SampleConfig& cfg);

/// f + y g with y appended as the last variable.
MultiPoly interlace_form(const MultiPoly& f, const MultiPoly& g);

/// Sampled test of f <-- g, i.e. stability of f + y g.
Verdict test_interlace(const MultiPoly& f, const MultiPoly& g, const SampleConfig& cfg);

struct HBReport {
    MultiPoly real;
    MultiPoly imag;
    /// test_interlace(real, imag), or test_stable(real) when imag == 0.
    Verdict split;
    /// test_stable(f).
    Verdict direct;

    bool agree() const { return split.stable_or_zero() == direct.stable_or_zero(); }
};

HBReport hb_test(const MultiPoly& f, const SampleConfig& cfg);

enum class BilinearVerdict { Stable, Unstable, DegenerateProduct };

const char* to_string(BilinearVerdict v);

/// bc - ad for f = a + b x + c y + d xy.
double bilinear_determinant(const MultiPoly& f);

/// Exact decision for real bilinear f = a + b x + c y + d xy in two variables.
BilinearVerdict bilinear_exact(const MultiPoly& f);

/// d_i f * d_j f - f * d_i d_j f.
MultiPoly rayleigh_polynomial(const MultiPoly& f, int i, int j);

/// Origin, 1 and 10 along each axis, then `count` points with log-uniform
/// coordinates in [1e-3, 10].
std::vector<std::vector<double>> default_rayleigh_points(int nvars, std::uint64_t seed,
                                                         int count = 200);

struct RayleighResult {
    double min_value = 0.0;
    std::vector<double> argmin;
    int i = 0;
    int j = 0;
};

/// Minimum of the Rayleigh difference over `points`. A negative minimum
/// certifies f is not real stable. Requires f real and multiaffine.
RayleighResult rayleigh_check(const MultiPoly& f, int i, int j,
                              const std::vector<std::vector<double>>& points);

/// rayleigh_check minimized over all pairs i < j (and i == j when nvars == 1).
RayleighResult rayleigh_check_all(const MultiPoly& f,
                                  const std::vector<std::vector<double>>& points);

bool is_multiaffine(const MultiPoly& f);

struct SliceInterlace {
    int var = 0;
    int k = 0;
    bool pass = true;
};

struct GridCell {
    int var_p = 0;
    int var_q = 0;
    /// Which seeded specialization of the other variables (0 when d == 2).
    int sample = 0;
    int r = 0;
    int s = 0;
    double value = 0.0;
    bool pass = true;
};

struct CoeffReport {
    std::vector<SliceInterlace> adjacent_interlace;
    std::vector<GridCell> grid_inequality;
    /// False when f has non-real coefficients and the grid was skipped.
    bool grid_applicable = true;
    bool top_phase = true;

    bool pass() const;
};

/// Necessary coefficient conditions for stability:
///  (a) consecutive coefficient slices in each variable interlace;
///  (b) for real f, a_{r,s} a_{r+1,s+1} - a_{r+1,s} a_{r,s+1} <= tol * scale
///      on every bivariate coefficient grid (other variables fixed at five
///      seeded positive points when d > 2);
///  (c) all coefficients of the top form share one argument.
CoeffReport coeff_necessary(const MultiPoly& f, const SampleConfig& cfg);

/// True when all top-form coefficients above 1e-12 of the largest agree in
/// argument within 1e-8 radians.
bool top_phase_aligned(const MultiPoly& f);

/// 200 seeded points in [-10, 10]^d.
std::vector<std::vector<double>> default_wronskian_points(int nvars, std::uint64_t seed,
                                                          int count = 200);

/// max over points of f * d_i g - g * d_i f. A value above tol * scale
/// refutes f <-- g for real stable f, g.
double wronskian_check(const MultiPoly& f, const MultiPoly& g, int i,
                       const std::vector<std::vector<double>>& points);

struct LinearComboResult {
    /// Every sampled alpha f + beta g was StableLikely or zero.
    bool combos_stable = true;
    /// test_interlace(f, g) or test_interlace(g, f) found no witness.
    bool interlace_either = true;
    int combos_checked = 0;
    std::optional<std::pair<double, double>> failing_combo;

    bool pass() const { return combos_stable && interlace_either; }
};

/// 50 seeded (alpha, beta) on the unit circle; cross-validated against the
/// interlacing tests in both orders.
LinearComboResult linear_combo_test(const MultiPoly& f, const MultiPoly& g,
                                    const SampleConfig& cfg);

/// c with ||f - c g||_1 <= tol ||f||_1, c read off g's largest term.
std::optional<Complex> proportionality(const MultiPoly& f, const MultiPoly& g,
                                       double tol = kDefaultTol);

}  // namespace stabpoly
