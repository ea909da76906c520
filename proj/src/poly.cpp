#include "stabpoly/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace stabpoly {

namespace {

// Coefficients with both parts below this are treated as exact zeros.
constexpr double kZeroFloor = 1e-300;

bool negligible(Complex c) {
    return std::abs(c.real()) < kZeroFloor && std::abs(c.imag()) < kZeroFloor;
}

void require_same_nvars(const MultiPoly& f, const MultiPoly& g, const char* op) {
    if (f.nvars() != g.nvars()) {
        throw DimensionMismatch(std::string(op) + ": variable count mismatch (" +
                                std::to_string(f.nvars()) + " vs " +
                                std::to_string(g.nvars()) + ")");
    }
}

void require_index(const MultiPoly& f, int i, const char* op) {
    if (i < 0 || i >= f.nvars()) {
        throw std::out_of_range(std::string(op) + ": variable index " + std::to_string(i) +
                                " out of range for " + std::to_string(f.nvars()) +
                                " variables");
    }
}

ExponentVector erase_index(const ExponentVector& e, int i) {
    ExponentVector out;
    out.reserve(e.size() - 1);
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (static_cast<int>(k) != i) out.push_back(e[k]);
    }
    return out;
}

std::vector<Complex> poly_pow(const std::vector<Complex>& base, int k) {
    std::vector<Complex> out{1.0};
    for (int r = 0; r < k; ++r) {
        std::vector<Complex> next(out.size() + base.size() - 1, 0.0);
        for (std::size_t a = 0; a < out.size(); ++a)
            for (std::size_t b = 0; b < base.size(); ++b) next[a + b] += out[a] * base[b];
        out = std::move(next);
    }
    return out;
}

}  // namespace

bool GradedLex::operator()(const ExponentVector& a, const ExponentVector& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

int total_degree(const ExponentVector& e) { return std::accumulate(e.begin(), e.end(), 0); }

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("MultiPoly: negative variable count");
}

MultiPoly MultiPoly::constant(int nvars, Complex c) {
    MultiPoly f(nvars);
    f.add_term(ExponentVector(static_cast<std::size_t>(nvars), 0), c);
    return f;
}

MultiPoly MultiPoly::variable(int nvars, int i, Complex c) {
    MultiPoly f(nvars);
    require_index(f, i, "variable");
    ExponentVector e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(i)] = 1;
    f.add_term(e, c);
    return f;
}

MultiPoly MultiPoly::monomial(ExponentVector e, Complex c) {
    MultiPoly f(static_cast<int>(e.size()));
    f.add_term(e, c);
    return f;
}

int MultiPoly::degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) deg = std::max(deg, total_degree(e));
    return deg;
}

int MultiPoly::degree_in(int i) const {
    require_index(*this, i, "degree_in");
    int deg = -1;
    for (const auto& [e, c] : terms_) deg = std::max(deg, e[static_cast<std::size_t>(i)]);
    return deg;
}

Complex MultiPoly::coeff(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Complex{} : it->second;
}

void MultiPoly::add_term(const ExponentVector& e, Complex c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw DimensionMismatch("add_term: exponent vector length differs from nvars");
    for (int x : e)
        if (x < 0) throw std::invalid_argument("add_term: negative exponent");
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw std::invalid_argument("add_term: non-finite coefficient");
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) it->second += c;
    if (negligible(it->second)) terms_.erase(it);
}

Complex MultiPoly::evaluate(std::span<const Complex> point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw DimensionMismatch("evaluate: point dimension differs from nvars");
    Complex sum = 0.0;
    for (const auto& [e, c] : terms_) {
        Complex t = c;
        for (std::size_t k = 0; k < e.size(); ++k)
            for (int r = 0; r < e[k]; ++r) t *= point[k];
        sum += t;
    }
    return sum;
}

double MultiPoly::evaluate_real(std::span<const double> point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw DimensionMismatch("evaluate_real: point dimension differs from nvars");
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double t = c.real();
        for (std::size_t k = 0; k < e.size(); ++k)
            for (int r = 0; r < e[k]; ++r) t *= point[k];
        sum += t;
    }
    return sum;
}

bool MultiPoly::is_real(double rel_tol) const {
    const double bound = rel_tol * max_abs_coeff();
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return std::abs(t.second.imag()) <= bound; });
}

double MultiPoly::norm1() const {
    double s = 0.0;
    for (const auto& [e, c] : terms_) s += std::abs(c);
    return s;
}

double MultiPoly::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
    return m;
}

MultiPoly MultiPoly::chopped(double rel_tol) const {
    const double bound = rel_tol * max_abs_coeff();
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        Complex v = c;
        if (std::abs(v.real()) <= bound) v.real(0.0);
        if (std::abs(v.imag()) <= bound) v.imag(0.0);
        out.add_term(e, v);
    }
    return out;
}

MultiPoly MultiPoly::real_part() const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.add_term(e, c.real());
    return out;
}

MultiPoly MultiPoly::imag_part() const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.add_term(e, c.imag());
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    require_same_nvars(*this, other, "add");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    require_same_nvars(*this, other, "subtract");
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(Complex c) {
    if (c == Complex{}) {
        terms_.clear();
        return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= c;
        it = negligible(it->second) ? terms_.erase(it) : std::next(it);
    }
    return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

MultiPoly operator+(const MultiPoly& f, const MultiPoly& g) {
    MultiPoly out = f;
    out += g;
    return out;
}

MultiPoly operator-(const MultiPoly& f, const MultiPoly& g) {
    MultiPoly out = f;
    out -= g;
    return out;
}

MultiPoly operator-(const MultiPoly& f) { return Complex(-1.0) * f; }

MultiPoly operator*(const MultiPoly& f, const MultiPoly& g) {
    require_same_nvars(f, g, "mul");
    MultiPoly out(f.nvars());
    ExponentVector e(static_cast<std::size_t>(f.nvars()));
    for (const auto& [ef, cf] : f.terms()) {
        for (const auto& [eg, cg] : g.terms()) {
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ef[k] + eg[k];
            out.add_term(e, cf * cg);
        }
    }
    return out;
}

MultiPoly operator*(Complex c, const MultiPoly& f) {
    MultiPoly out = f;
    out *= c;
    return out;
}

MultiPoly operator*(const MultiPoly& f, Complex c) { return c * f; }

MultiPoly add(const MultiPoly& f, const MultiPoly& g) { return f + g; }
MultiPoly mul(const MultiPoly& f, const MultiPoly& g) { return f * g; }

MultiPoly pow(const MultiPoly& f, int k) {
    if (k < 0) throw std::invalid_argument("pow: negative exponent");
    MultiPoly out = MultiPoly::constant(f.nvars(), 1.0);
    for (int r = 0; r < k; ++r) out = out * f;
    return out;
}

double max_coeff_distance(const MultiPoly& f, const MultiPoly& g) {
    require_same_nvars(f, g, "max_coeff_distance");
    double m = 0.0;
    for (const auto& [e, c] : f.terms()) m = std::max(m, std::abs(c - g.coeff(e)));
    for (const auto& [e, c] : g.terms()) m = std::max(m, std::abs(c - f.coeff(e)));
    return m;
}

MultiPoly partial_derivative(const MultiPoly& f, int i) {
    require_index(f, i, "partial_derivative");
    const auto k = static_cast<std::size_t>(i);
    MultiPoly out(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        if (e[k] == 0) continue;
        ExponentVector d = e;
        d[k] -= 1;
        out.add_term(d, c * static_cast<double>(e[k]));
    }
    return out;
}

MultiPoly substitute_affine(const MultiPoly& f, std::span<const Complex> shifts,
                            std::span<const double> scales) {
    const auto d = static_cast<std::size_t>(f.nvars());
    if (shifts.size() != d || scales.size() != d)
        throw DimensionMismatch("substitute_affine: vector length differs from nvars");
    for (double s : scales)
        if (!(s > 0.0)) throw std::invalid_argument("substitute_affine: scales must be positive");
    for (Complex s : shifts)
        if (s.imag() < 0.0)
            throw std::invalid_argument("substitute_affine: shifts must have Im >= 0");

    // Expand variable by variable: each pass replaces x_k by scale_k x_k + shift_k.
    MultiPoly cur = f;
    for (std::size_t k = 0; k < d; ++k) {
        if (scales[k] == 1.0 && shifts[k] == Complex{}) continue;
        MultiPoly next(f.nvars());
        const std::vector<Complex> base{shifts[k], scales[k]};
        for (const auto& [e, c] : cur.terms()) {
            const auto expanded = poly_pow(base, e[k]);
            ExponentVector ne = e;
            for (std::size_t r = 0; r < expanded.size(); ++r) {
                ne[k] = static_cast<int>(r);
                next.add_term(ne, c * expanded[r]);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

MultiPoly specialize(const MultiPoly& f, int i, Complex c) {
    require_index(f, i, "specialize");
    const auto k = static_cast<std::size_t>(i);
    MultiPoly out(f.nvars() - 1);
    for (const auto& [e, coef] : f.terms()) {
        Complex t = coef;
        for (int r = 0; r < e[k]; ++r) t *= c;
        out.add_term(erase_index(e, i), t);
    }
    return out;
}

MultiPoly merge_variables(const MultiPoly& f, int i, int j) {
    require_index(f, i, "merge_variables");
    require_index(f, j, "merge_variables");
    if (i == j) throw std::invalid_argument("merge_variables: indices must differ");
    MultiPoly out(f.nvars() - 1);
    for (const auto& [e, c] : f.terms()) {
        ExponentVector m = e;
        m[static_cast<std::size_t>(i)] += e[static_cast<std::size_t>(j)];
        out.add_term(erase_index(m, j), c);
    }
    return out;
}

MultiPoly extend_variables(const MultiPoly& f, int count) {
    if (count < 0) throw std::invalid_argument("extend_variables: negative count");
    MultiPoly out(f.nvars() + count);
    for (const auto& [e, c] : f.terms()) {
        ExponentVector x = e;
        x.resize(e.size() + static_cast<std::size_t>(count), 0);
        out.add_term(x, c);
    }
    return out;
}

MultiPoly shift_by_new_variable(const MultiPoly& f, int i) {
    require_index(f, i, "shift_by_new_variable");
    const auto k = static_cast<std::size_t>(i);
    MultiPoly out(f.nvars() + 1);
    for (const auto& [e, c] : f.terms()) {
        // (x_i + y)^n = Sum_r C(n, r) x_i^(n-r) y^r
        const int n = e[k];
        double binom = 1.0;
        for (int r = 0; r <= n; ++r) {
            ExponentVector x = e;
            x.push_back(r);
            x[k] = n - r;
            out.add_term(x, c * binom);
            binom = binom * (n - r) / (r + 1);
        }
    }
    return out;
}

MultiPoly permute_variables(const MultiPoly& f, std::span<const int> perm) {
    const auto d = static_cast<std::size_t>(f.nvars());
    if (perm.size() != d) throw DimensionMismatch("permute_variables: wrong permutation length");
    std::vector<int> seen(d, 0);
    for (int p : perm) {
        if (p < 0 || static_cast<std::size_t>(p) >= d || seen[static_cast<std::size_t>(p)]++)
            throw std::invalid_argument("permute_variables: not a permutation");
    }
    MultiPoly out(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        ExponentVector x(d);
        for (std::size_t k = 0; k < d; ++k) x[static_cast<std::size_t>(perm[k])] = e[k];
        out.add_term(x, c);
    }
    return out;
}

MultiPoly reverse_var(const MultiPoly& f, int i) {
    require_index(f, i, "reverse_var");
    if (f.is_zero()) return f;
    const auto k = static_cast<std::size_t>(i);
    const int n = f.degree_in(i);
    MultiPoly out(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        ExponentVector x = e;
        x[k] = n - e[k];
        out.add_term(x, (x[k] % 2 == 0) ? c : -c);
    }
    return out;
}

MultiPoly full_reverse(const MultiPoly& f) {
    if (!f.is_real(1e-12)) throw std::invalid_argument("full_reverse: non-real coefficients");
    if (f.is_zero()) return f;
    std::vector<int> top(static_cast<std::size_t>(f.nvars()));
    for (int i = 0; i < f.nvars(); ++i) top[static_cast<std::size_t>(i)] = f.degree_in(i);
    MultiPoly out(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        ExponentVector x = e;
        for (std::size_t k = 0; k < x.size(); ++k) x[k] = top[k] - e[k];
        out.add_term(x, c);
    }
    return out;
}

MultiPoly top_form(const MultiPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("top_form: zero polynomial");
    const int n = f.degree();
    MultiPoly out(f.nvars());
    for (const auto& [e, c] : f.terms())
        if (total_degree(e) == n) out.add_term(e, c);
    return out;
}

MultiPoly coefficient_slice(const MultiPoly& f, int i, int k) {
    require_index(f, i, "coefficient_slice");
    if (k < 0 || k > std::max(0, f.degree_in(i)))
        throw std::out_of_range("coefficient_slice: k out of range");
    MultiPoly out(f.nvars() - 1);
    for (const auto& [e, c] : f.terms())
        if (e[static_cast<std::size_t>(i)] == k) out.add_term(erase_index(e, i), c);
    return out;
}

// ---------------------------------------------------------------------------

UniPoly::UniPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && negligible(coeffs_.back())) coeffs_.pop_back();
}

Complex UniPoly::evaluate(Complex x) const {
    Complex acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Complex UniPoly::derivative_at(Complex x) const {
    Complex acc = 0.0;
    for (std::size_t k = coeffs_.size(); k-- > 1;)
        acc = acc * x + coeffs_[k] * static_cast<double>(k);
    return acc;
}

double UniPoly::norm1() const {
    double s = 0.0;
    for (Complex c : coeffs_) s += std::abs(c);
    return s;
}

bool UniPoly::is_real(double rel_tol) const {
    double m = 0.0;
    for (Complex c : coeffs_) m = std::max(m, std::abs(c));
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [&](Complex c) { return std::abs(c.imag()) <= rel_tol * m; });
}

UniPoly UniPoly::real_part() const {
    std::vector<Complex> out;
    out.reserve(coeffs_.size());
    for (Complex c : coeffs_) out.emplace_back(c.real(), 0.0);
    return UniPoly(std::move(out));
}

UniPoly UniPoly::imag_part() const {
    std::vector<Complex> out;
    out.reserve(coeffs_.size());
    for (Complex c : coeffs_) out.emplace_back(c.imag(), 0.0);
    return UniPoly(std::move(out));
}

UniPoly operator+(const UniPoly& p, const UniPoly& q) {
    std::vector<Complex> out(std::max(p.coeffs().size(), q.coeffs().size()), 0.0);
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) out[k] += p.coeffs()[k];
    for (std::size_t k = 0; k < q.coeffs().size(); ++k) out[k] += q.coeffs()[k];
    return UniPoly(std::move(out));
}

UniPoly operator*(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Complex> out(p.coeffs().size() + q.coeffs().size() - 1, 0.0);
    for (std::size_t a = 0; a < p.coeffs().size(); ++a)
        for (std::size_t b = 0; b < q.coeffs().size(); ++b)
            out[a + b] += p.coeffs()[a] * q.coeffs()[b];
    return UniPoly(std::move(out));
}

UniPoly operator*(Complex c, const UniPoly& p) {
    std::vector<Complex> out = p.coeffs();
    for (Complex& x : out) x *= c;
    return UniPoly(std::move(out));
}

UniPoly derivative(const UniPoly& p) {
    if (p.degree() < 1) return {};
    std::vector<Complex> out(static_cast<std::size_t>(p.degree()));
    for (std::size_t k = 1; k < p.coeffs().size(); ++k)
        out[k - 1] = p.coeffs()[k] * static_cast<double>(k);
    return UniPoly(std::move(out));
}

MultiPoly to_multi(const UniPoly& p) {
    MultiPoly out(1);
    for (std::size_t k = 0; k < p.coeffs().size(); ++k)
        out.add_term({static_cast<int>(k)}, p.coeffs()[k]);
    return out;
}

UniPoly to_uni(const MultiPoly& f) {
    if (f.nvars() > 1) throw DimensionMismatch("to_uni: polynomial has more than one variable");
    if (f.is_zero()) return {};
    std::vector<Complex> c(static_cast<std::size_t>(std::max(f.degree(), 0) + 1), 0.0);
    for (const auto& [e, v] : f.terms()) c[e.empty() ? 0 : static_cast<std::size_t>(e[0])] = v;
    return UniPoly(std::move(c));
}

void AffineLine::validate() const {
    if (a.size() != b.size()) throw DimensionMismatch("AffineLine: a and b differ in length");
    for (double x : b)
        if (!(x > 0.0)) throw std::invalid_argument("AffineLine: direction must be positive");
}

UniPoly restrict_line(const MultiPoly& f, const AffineLine& line) {
    line.validate();
    const auto d = static_cast<std::size_t>(f.nvars());
    if (line.a.size() != d) throw DimensionMismatch("restrict_line: line dimension differs");
    if (f.is_zero()) return {};

    // powers[k][r] = (a_k + t b_k)^r as a coefficient vector in t.
    std::vector<std::vector<std::vector<Complex>>> powers(d);
    for (std::size_t k = 0; k < d; ++k) {
        int top = 0;
        for (const auto& [e, c] : f.terms()) top = std::max(top, e[k]);
        const std::vector<Complex> base{line.a[k], line.b[k]};
        powers[k].push_back({1.0});
        for (int r = 1; r <= top; ++r) {
            const auto& prev = powers[k].back();
            std::vector<Complex> next(prev.size() + 1, 0.0);
            for (std::size_t s = 0; s < prev.size(); ++s) {
                next[s] += prev[s] * base[0];
                next[s + 1] += prev[s] * base[1];
            }
            powers[k].push_back(std::move(next));
        }
    }

    std::vector<Complex> out(static_cast<std::size_t>(f.degree() + 1), 0.0);
    std::vector<Complex> term;
    for (const auto& [e, c] : f.terms()) {
        term.assign(1, c);
        for (std::size_t k = 0; k < d; ++k) {
            if (e[k] == 0) continue;
            const auto& p = powers[k][static_cast<std::size_t>(e[k])];
            std::vector<Complex> next(term.size() + p.size() - 1, 0.0);
            for (std::size_t s = 0; s < term.size(); ++s)
                for (std::size_t r = 0; r < p.size(); ++r) next[s + r] += term[s] * p[r];
            term = std::move(next);
        }
        for (std::size_t s = 0; s < term.size(); ++s) out[s] += term[s];
    }
    return UniPoly(std::move(out));
}

std::vector<double> restrict_line_magnitude(const MultiPoly& f, const AffineLine& line) {
    MultiPoly g(f.nvars());
    for (const auto& [e, c] : f.terms()) g.add_term(e, std::abs(c));
    AffineLine abs_line{line.a, line.b};
    for (double& x : abs_line.a) x = std::abs(x);
    std::vector<double> out;
    for (Complex c : restrict_line(g, abs_line).coeffs()) out.push_back(c.real());
    return out;
}

std::string to_string(const MultiPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    os.precision(12);
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << " + ";
        first = false;
        if (c.imag() == 0.0)
            os << c.real();
        else
            os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            os << "*x" << (k + 1);
            if (e[k] > 1) os << "^" << e[k];
        }
    }
    return os.str();
}

}  // namespace stabpoly
