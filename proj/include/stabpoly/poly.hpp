#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace stabpoly {

using Complex = std::complex<double>;
using ExponentVector = std::vector<int>;

/// Raised when two operands disagree on their ambient variable count, or a
/// vector argument does not match it.
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Graded lexicographic order: total degree first, ties broken
/// lexicographically. This is the canonical term order for equality and
/// serialization.
struct GradedLex {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

int total_degree(const ExponentVector& e);

/// Sparse multivariate polynomial with complex double coefficients.
///
/// Terms are kept canonical: no stored coefficient is (numerically) zero and
/// every exponent vector has length nvars(). The zero polynomial is the empty
/// term map. Variables are indexed from 0.
class MultiPoly {
public:
    using TermMap = std::map<ExponentVector, Complex, GradedLex>;

    MultiPoly() = default;
    explicit MultiPoly(int nvars);

    static MultiPoly constant(int nvars, Complex c);
    static MultiPoly variable(int nvars, int i, Complex c = 1.0);
    static MultiPoly monomial(ExponentVector e, Complex c);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    /// Degree in variable i; -1 for the zero polynomial.
    int degree_in(int i) const;

    Complex coeff(const ExponentVector& e) const;

    /// Accumulates c into the coefficient of x^e, dropping the term if the
    /// sum vanishes.
    void add_term(const ExponentVector& e, Complex c);

    Complex evaluate(std::span<const Complex> point) const;
    double evaluate_real(std::span<const double> point) const;

    /// True when every imaginary part is at most rel_tol times the largest
    /// coefficient magnitude.
    bool is_real(double rel_tol = 0.0) const;
    double norm1() const;
    double max_abs_coeff() const;

    /// Drops terms with magnitude at most rel_tol * max_abs_coeff().
    MultiPoly chopped(double rel_tol) const;

    MultiPoly real_part() const;
    MultiPoly imag_part() const;

    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(Complex c);

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

private:
    int nvars_ = 0;
    TermMap terms_;
};

MultiPoly operator+(const MultiPoly& f, const MultiPoly& g);
MultiPoly operator-(const MultiPoly& f, const MultiPoly& g);
MultiPoly operator-(const MultiPoly& f);
MultiPoly operator*(const MultiPoly& f, const MultiPoly& g);
MultiPoly operator*(Complex c, const MultiPoly& f);
MultiPoly operator*(const MultiPoly& f, Complex c);

MultiPoly add(const MultiPoly& f, const MultiPoly& g);
MultiPoly mul(const MultiPoly& f, const MultiPoly& g);
MultiPoly pow(const MultiPoly& f, int k);

/// Largest coefficient-wise difference |f_e - g_e| over the union of supports.
double max_coeff_distance(const MultiPoly& f, const MultiPoly& g);

MultiPoly partial_derivative(const MultiPoly& f, int i);

/// f(scale_0 x_0 + shift_0, ..., scale_{d-1} x_{d-1} + shift_{d-1}).
/// Scales must be strictly positive and shifts must have Im >= 0.
MultiPoly substitute_affine(const MultiPoly& f, std::span<const Complex> shifts,
                            std::span<const double> scales);

/// Sets x_i := c and drops variable i.
MultiPoly specialize(const MultiPoly& f, int i, Complex c);

/// Substitutes x_j := x_i and drops variable j.
MultiPoly merge_variables(const MultiPoly& f, int i, int j);

/// Appends `count` fresh variables after the existing ones.
MultiPoly extend_variables(const MultiPoly& f, int count = 1);

/// f(x_0, ..., x_i + y, ..., x_{d-1}) with y appended as the last variable.
MultiPoly shift_by_new_variable(const MultiPoly& f, int i);

/// Renames variables: variable k of f becomes variable perm[k] of the result.
MultiPoly permute_variables(const MultiPoly& f, std::span<const int> perm);

/// Sum_k f_k * (-x_i)^(n-k) where f = Sum_k f_k x_i^k and n = deg_i f.
MultiPoly reverse_var(const MultiPoly& f, int i);

/// x^e f(1/x_0, ..., 1/x_{d-1}) with e_i = deg_i f. Requires real coefficients.
MultiPoly full_reverse(const MultiPoly& f);

/// Terms of maximal total degree.
MultiPoly top_form(const MultiPoly& f);

/// f_k in f = Sum_k f_k x_i^k, as a polynomial in the other variables.
MultiPoly coefficient_slice(const MultiPoly& f, int i, int k);

/// Univariate complex polynomial, coefficients lowest degree first. Trailing
/// zero coefficients are trimmed so the leading coefficient is nonzero; the
/// zero polynomial has no coefficients.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Complex> coeffs);

    const std::vector<Complex>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Complex operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    Complex leading() const { return coeffs_.back(); }

    Complex evaluate(Complex x) const;
    Complex derivative_at(Complex x) const;
    double norm1() const;
    bool is_real(double rel_tol = 0.0) const;

    UniPoly real_part() const;
    UniPoly imag_part() const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

private:
    std::vector<Complex> coeffs_;
};

UniPoly operator+(const UniPoly& p, const UniPoly& q);
UniPoly operator*(const UniPoly& p, const UniPoly& q);
UniPoly operator*(Complex c, const UniPoly& p);
UniPoly derivative(const UniPoly& p);

MultiPoly to_multi(const UniPoly& p);
/// Requires f.nvars() == 1 (or 0 for constants).
UniPoly to_uni(const MultiPoly& f);

/// The line t -> a + t b with strictly positive direction b.
struct AffineLine {
    std::vector<double> a;
    std::vector<double> b;

    void validate() const;
};

/// t -> f(a + t b), expanded exactly.
UniPoly restrict_line(const MultiPoly& f, const AffineLine& line);

/// Coefficients of Sum |c| prod_k (|a_k| + t b_k)^{e_k}: the scale against
/// which rounding in restrict_line is measured, coefficient by coefficient.
std::vector<double> restrict_line_magnitude(const MultiPoly& f, const AffineLine& line);

std::string to_string(const MultiPoly& f);

}  // namespace stabpoly
