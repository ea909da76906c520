#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "stabpoly/poly.hpp"

namespace stabpoly {

/// Data for det(S + iE + Sum_k x_k D_k): S symmetric, E positive
/// semidefinite (possibly empty, meaning zero), every D_k positive definite.
struct MatrixPencil {
    Eigen::MatrixXd S;
    Eigen::MatrixXd E;
    std::vector<Eigen::MatrixXd> Ds;

    int n() const { return static_cast<int>(S.rows()); }
    int d() const { return static_cast<int>(Ds.size()); }
    bool has_E() const { return E.size() > 0 && !E.isZero(0.0); }

    /// Symmetry within 1e-12, eig(E) >= -1e-10, eig(D_k) >= 1e-10.
    void validate() const;
};

/// Matrix with polynomial entries, row-major.
using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Exact determinant by Laplace expansion with memoized minors.
MultiPoly symbolic_determinant(const PolyMatrix& m, int nvars);

/// The pencil as a matrix of linear polynomials in d variables.
PolyMatrix pencil_matrix(const MatrixPencil& p);

/// Determinant by symbolic cofactor expansion.
MultiPoly det_pencil_cofactor(const MatrixPencil& p);

/// Determinant by evaluation on a tensor grid of roots of unity (n + 1
/// points per variable) followed by a separable inverse DFT.
MultiPoly det_pencil_interpolate(const MatrixPencil& p);

/// det(S + iE + Sum x_k D_k); cofactor expansion for n <= 4, interpolation
/// for 5 <= n <= 8. Requires n <= 8 and d <= 6. Real when E is zero.
MultiPoly det_pencil_poly(const MatrixPencil& p);

/// S = M + M^T with M uniform in [-1, 1]; D_k = G G^T + 0.1 I; E = H H^T when
/// requested. Deterministic in seed.
MatrixPencil random_pencil(int n, int d, std::uint64_t seed, bool with_E);

/// L = Sum_i x_i D_i + A with D_i positive definite and A symmetric.
struct SymmetricPencil {
    std::vector<Eigen::MatrixXd> Ds;
    Eigen::MatrixXd A;

    int n() const { return static_cast<int>(A.rows()); }
    int d() const { return static_cast<int>(Ds.size()); }
};

/// Sum over ordered partitions S_1 u ... u S_m = {1..n} of
/// prod_k det(L_k[S_k]), with det of an empty principal minor equal to 1.
/// Requires n <= 5, m <= 3.
MultiPoly johnson_sum(const std::vector<SymmetricPencil>& ls);

/// (-1)^n times the coefficient of w_1 ... w_n in prod_k det(I - W L_k),
/// W = diag(w). Equal to johnson_sum.
MultiPoly johnson_by_extraction(const std::vector<SymmetricPencil>& ls);

/// Integer-valued instance: D = G G^T + I, A = M + M^T with small integer G,
/// M, so every downstream product is exact in double precision.
std::vector<SymmetricPencil> random_johnson_instance(int n, int m, int d, std::uint64_t seed);

struct RecurrenceStep {
    std::vector<double> a;
    double b = 0.0;
    double c = 1.0;
};

/// steps[0] defines p_1 = Sum a_k x_k + b (its c is unused); steps[k], k >= 1,
/// defines p_{k+1} = (Sum a_k x_k + b) p_k - c p_{k-1}.
struct RecurrenceSpec {
    int d = 1;
    std::vector<RecurrenceStep> steps;

    void validate() const;
};

/// [p_0 = 1, p_1, ..., p_{steps}].
std::vector<MultiPoly> recurrence_chain(const RecurrenceSpec& spec);

/// Unit constants give a = 1, b = 0, c = 1; otherwise a, c in [0.5, 2] and
/// b in [-1, 1].
RecurrenceSpec random_recurrence(int d, int steps, std::uint64_t seed, bool unit);

/// For bivariate real f whose coefficient matrix has numerical rank one,
/// univariate g(x), h(y) with g h = f within 1e-10 relative.
std::optional<std::pair<MultiPoly, MultiPoly>> separability_check(const MultiPoly& f);

}  // namespace stabpoly
