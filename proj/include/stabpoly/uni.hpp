#pragma once

#include <optional>
#include <span>
#include <vector>

#include "stabpoly/poly.hpp"

namespace stabpoly {

inline constexpr double kDefaultTol = 1e-8;
inline constexpr int kMaxRootDegree = 64;
/// Residual bound above which a root report is flagged unreliable.
inline constexpr double kResidualBound = 1e-8;

struct RootReport {
    std::vector<Complex> roots;
    /// |p(r)| / (||p||_1 (1 + |r|)^deg) per root.
    std::vector<double> residuals;
    /// max Im(root).
    double max_uhp_margin = 0.0;
    bool reliable = true;
};

/// All complex roots of p, from the eigenvalues of a scaled companion matrix,
/// Newton-polished on the original coefficients. Throws for degree < 1 or
/// degree > kMaxRootDegree.
RootReport all_roots(const UniPoly& p);

/// |p(r)| / (||p||_1 (1 + |r|)^deg).
double root_residual(const UniPoly& p, Complex r);

/// Roots with numerical multiple-root clusters resolved.
///
/// A root cluster is replaced by its (real) centroid when its spread is within
/// the perturbation radius predicted for a multiple root under rounding-level
/// backward error and the centroid lies within tol * scale of the real axis.
/// Genuinely off-axis roots are left untouched.
/// `coeff_error[j]`, when given, bounds the absolute error already present in
/// coefficient j of p and widens the predicted radius accordingly.
std::vector<Complex> resolve_clusters(const UniPoly& p, const std::vector<Complex>& roots,
                                      double tol, std::span<const double> coeff_error = {});

enum class U1Status { Member, NonMemberWitness, Boundary, Inconclusive };

struct U1Result {
    U1Status status = U1Status::Member;
    /// Offending root for NonMemberWitness.
    Complex witness{};
    /// 1 + max |root|.
    double scale = 1.0;
    /// max Im(root) / scale after cluster resolution; -inf when p has no roots.
    double margin = 0.0;
};

/// Membership of p in the set of univariate polynomials with no root in the
/// open upper half plane. Real-axis roots count as members.
///
///   NonMemberWitness: some root has Im > tol * scale.
///   Boundary: no witness, but the largest Im lies within a decade below the
///             threshold; callers treat it as a member.
///   Inconclusive: the root report failed its residual certificate.
///
/// Nonzero constants are members. Throws for the zero polynomial.
U1Result in_u1(const UniPoly& p, double tol = kDefaultTol,
               std::span<const double> coeff_error = {});

inline bool accepts_member(const U1Result& r) {
    return r.status == U1Status::Member || r.status == U1Status::Boundary;
}

/// True iff every root satisfies |Im| <= tol * scale. Requires real
/// coefficients up to 1e-12 relative.
bool is_real_rooted(const UniPoly& p, double tol = kDefaultTol);

enum class InterlaceRelation { FArrowG, FArrowNegG, Proportional, None };

const char* to_string(InterlaceRelation r);

/// Classical root interlacing of two real-rooted real polynomials: roots of
/// f and g distinct and alternating with the largest belonging to f, and
/// deg g in {deg f, deg f - 1}. The sign of g's leading coefficient picks
/// FArrowG or FArrowNegG. Proportionality is checked first; shared roots give
/// None. Both inputs are negated together when f has a negative leading
/// coefficient.
InterlaceRelation interlace_classify(const UniPoly& f, const UniPoly& g,
                                     double tol = kDefaultTol);

struct HBSplit {
    UniPoly real;
    UniPoly imag;
    /// p has no roots in the upper half plane (equivalently real <-- imag).
    bool interlaces = false;
    /// Root-level classification of (real, imag) when both are real-rooted
    /// and imag is nonzero.
    std::optional<InterlaceRelation> relation;
};

HBSplit hb_split(const UniPoly& p, double tol = kDefaultTol);

}  // namespace stabpoly
