#include "stabpoly/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "stabpoly/rng.hpp"

namespace stabpoly {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// A restriction whose coefficients all fall below this fraction of the
// expected magnitude is treated as vanishing to rounding.
constexpr double kVanishingRestriction = 1e-13;
constexpr double kEps = std::numeric_limits<double>::epsilon();

double restriction_magnitude(const MultiPoly& f, const AffineLine& line) {
    double reach = 1.0;
    for (std::size_t k = 0; k < line.a.size(); ++k)
        reach = std::max(reach, std::abs(line.a[k]) + line.b[k]);
    return f.norm1() * std::pow(reach, std::max(f.degree(), 0));
}

Complex polish_once(const UniPoly& p, Complex r) {
    const Complex d = p.derivative_at(r);
    if (d == Complex{}) return r;
    const Complex next = r - p.evaluate(r) / d;
    return root_residual(p, next) <= root_residual(p, r) ? next : r;
}

// A point of the open upper half plane where the degree-one polynomial f
// vanishes, if there is one. Real lines never see these zeros for real f
// (every restriction is a real linear polynomial), so they are constructed.
std::optional<std::vector<Complex>> linear_zero(const MultiPoly& f) {
    const auto d = static_cast<std::size_t>(f.nvars());
    const Complex c0 = f.coeff(ExponentVector(d, 0));
    std::vector<Complex> c(d, 0.0);
    std::vector<std::size_t> active;
    for (std::size_t k = 0; k < d; ++k) {
        ExponentVector e(d, 0);
        e[k] = 1;
        c[k] = f.coeff(e);
        if (c[k] != Complex{}) active.push_back(k);
    }
    std::vector<Complex> z(d, Complex(0.0, 1.0));

    // Two coefficients of different argument: c_i UHP + c_j UHP is all of C.
    for (std::size_t u = 1; u < active.size(); ++u) {
        const std::size_t i = active[0], j = active[u];
        const Complex q = c[j] / c[i];
        const double phi = std::arg(q);
        if (std::abs(phi) <= 1e-12) continue;
        const double alpha = phi > 0.0 ? std::numbers::pi - phi / 2.0 : -phi / 2.0;
        const Complex w = std::polar(1.0, alpha);
        Complex rest = c0;
        for (std::size_t k : active)
            if (k != i && k != j) rest += c[k] * z[k];
        const double pull = -(w * q).imag();
        const double s = (1.0 + std::abs((-rest / c[i]).imag())) / pull + 1.0;
        z[j] = s * w;
        z[i] = (-rest - c[j] * z[j]) / c[i];
        return z;
    }

    // Common argument theta: f = e^{i theta} (Sum r_k x_k + c0'), which has
    // an upper zero iff Im c0' < 0.
    const Complex phase = c[active[0]] / std::abs(c[active[0]]);
    const Complex shifted = c0 / phase;
    if (!(shifted.imag() < 0.0)) return std::nullopt;
    double total = 0.0;
    for (std::size_t k : active) total += std::abs(c[k]);
    for (std::size_t k : active) z[k] = -shifted / total;
    return z;
}

void require_real(const MultiPoly& f, const char* op) {
    if (!f.is_real(1e-12)) throw std::invalid_argument(std::string(op) + ": non-real coefficients");
}

}  // namespace

void SampleConfig::validate() const {
    if (num_lines < 1) throw std::invalid_argument("SampleConfig: num_lines must be positive");
    if (!(tol >= 0.0)) throw std::invalid_argument("SampleConfig: tol must be non-negative");
    if (!(shift_scale >= 0.0)) throw std::invalid_argument("SampleConfig: negative shift_scale");
    if (!(dilation_lo > 0.0) || !(dilation_hi >= dilation_lo))
        throw std::invalid_argument("SampleConfig: dilation range must be positive and ordered");
}

AffineLine sample_line(const SampleConfig& cfg, int nvars, int index) {
    const auto d = static_cast<std::size_t>(nvars);
    AffineLine line{std::vector<double>(d, 0.0), std::vector<double>(d, 1.0)};
    if (index == 0) return line;
    Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(index)));
    for (std::size_t k = 0; k < d; ++k) line.a[k] = rng.uniform(-cfg.shift_scale, cfg.shift_scale);
    for (std::size_t k = 0; k < d; ++k) line.b[k] = rng.log_uniform(cfg.dilation_lo, cfg.dilation_hi);
    return line;
}

const char* to_string(VerdictTag tag) {
    switch (tag) {
        case VerdictTag::UnstableWitness: return "UnstableWitness";
        case VerdictTag::StableLikely: return "StableLikely";
        case VerdictTag::ZeroPolynomial: return "ZeroPolynomial";
    }
    return "StableLikely";
}

Verdict test_stable(const MultiPoly& f, const SampleConfig& cfg) {
    cfg.validate();
    Verdict v;
    if (f.is_zero()) {
        v.tag = VerdictTag::ZeroPolynomial;
        return v;
    }
    v.min_margin = -kInf;
    if (f.degree() == 1) {
        if (const auto z = linear_zero(f)) {
            AffineLine line;
            for (Complex x : *z) {
                line.a.push_back(x.real());
                line.b.push_back(x.imag());
            }
            // For real f the restriction vanishes identically (to rounding).
            const UniPoly p = restrict_line(f, line);
            double top = 0.0;
            for (Complex c : p.coeffs()) top = std::max(top, std::abs(c));
            const bool vanishes = top <= kVanishingRestriction * restriction_magnitude(f, line);
            const Complex root = !vanishes && p.degree() == 1 ? -p[0] / p[1] : Complex(0.0, 1.0);
            v.tag = VerdictTag::UnstableWitness;
            v.witness = Witness{line, root};
            v.lines_checked = 1;
            v.min_margin = root.imag() / (1.0 + std::abs(root));
            return v;
        }
    }
    for (int k = 0; k < cfg.num_lines; ++k) {
        const AffineLine line = sample_line(cfg, f.nvars(), k);
        const UniPoly p = restrict_line(f, line);
        v.lines_checked = k + 1;

        if (p.is_zero()) {
            // f vanishes on the whole line, in particular at a + i b.
            v.tag = VerdictTag::UnstableWitness;
            v.witness = Witness{line, Complex(0.0, 1.0)};
            v.min_margin = std::max(v.min_margin, 0.5);
            return v;
        }
        double top = 0.0;
        for (Complex c : p.coeffs()) top = std::max(top, std::abs(c));
        if (top <= kVanishingRestriction * restriction_magnitude(f, line)) {
            ++v.lines_inconclusive;
            continue;
        }
        if (p.degree() == 0) continue;

        // Rounding in the expansion is relative to the magnitude polynomial,
        // not to the (possibly heavily cancelled) coefficients of p.
        std::vector<double> err = restrict_line_magnitude(f, line);
        const double per_coeff = 32.0 * (f.degree() + 1) * kEps;
        for (double& x : err) x *= per_coeff;
        const U1Result r = in_u1(p, cfg.tol, err);
        if (r.status == U1Status::Inconclusive) {
            ++v.lines_inconclusive;
            continue;
        }
        v.min_margin = std::max(v.min_margin, r.margin);
        if (r.status == U1Status::NonMemberWitness) {
            const Complex root = polish_once(p, r.witness);
            if (root.imag() > 10.0 * cfg.tol * r.scale) {
                v.tag = VerdictTag::UnstableWitness;
                v.witness = Witness{line, root};
                return v;
            }
        }
    }
    return v;
}

MultiPoly interlace_form(const MultiPoly& f, const MultiPoly& g) {
    if (f.nvars() != g.nvars()) throw DimensionMismatch("interlace: variable count mismatch");
    MultiPoly out = extend_variables(f);
    const MultiPoly y = MultiPoly::variable(f.nvars() + 1, f.nvars());
    out += y * extend_variables(g);
    return out;
}

Verdict test_interlace(const MultiPoly& f, const MultiPoly& g, const SampleConfig& cfg) {
    if (f.nvars() != g.nvars()) throw DimensionMismatch("test_interlace: variable count mismatch");
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("test_interlace: both inputs zero");
    return test_stable(interlace_form(f, g), cfg);
}

HBReport hb_test(const MultiPoly& f, const SampleConfig& cfg) {
    if (f.is_zero()) throw std::invalid_argument("hb_test: zero polynomial");
    HBReport out{f.real_part(), f.imag_part(), {}, {}};
    out.split = out.imag.is_zero() ? test_stable(out.real, cfg)
                                   : test_interlace(out.real, out.imag, cfg);
    out.direct = test_stable(f, cfg);
    return out;
}

const char* to_string(BilinearVerdict v) {
    switch (v) {
        case BilinearVerdict::Stable: return "Stable";
        case BilinearVerdict::Unstable: return "Unstable";
        case BilinearVerdict::DegenerateProduct: return "DegenerateProduct";
    }
    return "Stable";
}

double bilinear_determinant(const MultiPoly& f) {
    if (f.nvars() != 2) throw DimensionMismatch("bilinear_exact: expected two variables");
    if (f.is_zero()) throw std::invalid_argument("bilinear_exact: zero polynomial");
    if (f.degree_in(0) > 1 || f.degree_in(1) > 1)
        throw std::invalid_argument("bilinear_exact: degree exceeds one in some variable");
    require_real(f, "bilinear_exact");
    const double a = f.coeff({0, 0}).real();
    const double b = f.coeff({1, 0}).real();
    const double c = f.coeff({0, 1}).real();
    const double d = f.coeff({1, 1}).real();
    return b * c - a * d;
}

BilinearVerdict bilinear_exact(const MultiPoly& f) {
    const double det = bilinear_determinant(f);
    if (det > 0.0) return BilinearVerdict::Stable;
    if (det < 0.0) return BilinearVerdict::Unstable;
    return BilinearVerdict::DegenerateProduct;
}

bool is_multiaffine(const MultiPoly& f) {
    for (const auto& [e, c] : f.terms())
        for (int x : e)
            if (x > 1) return false;
    return true;
}

MultiPoly rayleigh_polynomial(const MultiPoly& f, int i, int j) {
    const MultiPoly fi = partial_derivative(f, i);
    const MultiPoly fj = partial_derivative(f, j);
    return fi * fj - f * partial_derivative(fi, j);
}

std::vector<std::vector<double>> default_rayleigh_points(int nvars, std::uint64_t seed, int count) {
    const auto d = static_cast<std::size_t>(nvars);
    std::vector<std::vector<double>> pts;
    pts.emplace_back(d, 0.0);
    for (std::size_t k = 0; k < d; ++k) {
        for (double t : {1.0, 10.0}) {
            std::vector<double> p(d, 0.0);
            p[k] = t;
            pts.push_back(std::move(p));
        }
    }
    Rng rng(seed);
    for (int n = 0; n < count; ++n) {
        std::vector<double> p(d);
        for (double& x : p) x = rng.log_uniform(1e-3, 10.0);
        pts.push_back(std::move(p));
    }
    return pts;
}

RayleighResult rayleigh_check(const MultiPoly& f, int i, int j,
                              const std::vector<std::vector<double>>& points) {
    require_real(f, "rayleigh_check");
    if (!is_multiaffine(f)) throw std::invalid_argument("rayleigh_check: input is not multiaffine");
    const MultiPoly delta = rayleigh_polynomial(f.real_part(), i, j);
    RayleighResult out;
    out.i = i;
    out.j = j;
    out.min_value = kInf;
    for (const auto& p : points) {
        const double v = delta.evaluate_real(p);
        if (v < out.min_value) {
            out.min_value = v;
            out.argmin = p;
        }
    }
    return out;
}

RayleighResult rayleigh_check_all(const MultiPoly& f,
                                  const std::vector<std::vector<double>>& points) {
    RayleighResult best;
    best.min_value = kInf;
    for (int i = 0; i < f.nvars(); ++i) {
        for (int j = (f.nvars() == 1 ? i : i + 1); j < f.nvars(); ++j) {
            const RayleighResult r = rayleigh_check(f, i, j, points);
            if (r.min_value < best.min_value) best = r;
        }
    }
    return best;
}

bool CoeffReport::pass() const {
    const auto ok = [](const auto& v) { return v.pass; };
    return top_phase && std::all_of(adjacent_interlace.begin(), adjacent_interlace.end(), ok) &&
           std::all_of(grid_inequality.begin(), grid_inequality.end(), ok);
}

bool top_phase_aligned(const MultiPoly& f) {
    if (f.is_zero()) return true;
    const MultiPoly top = top_form(f);
    Complex ref{};
    for (const auto& [e, c] : top.terms())
        if (std::abs(c) > std::abs(ref)) ref = c;
    const double floor = 1e-12 * std::abs(ref);
    for (const auto& [e, c] : top.terms()) {
        if (std::abs(c) <= floor) continue;
        if (std::abs(std::arg(c / ref)) > 1e-8) return false;
    }
    return true;
}

namespace {

void grid_cells(const MultiPoly& biv, int p, int q, int sample, double tol,
                std::vector<GridCell>& out) {
    if (biv.is_zero()) return;
    const int np = biv.degree_in(0);
    const int nq = biv.degree_in(1);
    double top = 0.0;
    for (const auto& [e, c] : biv.terms()) top = std::max(top, std::abs(c.real()));
    const double scale = top * top;
    const auto a = [&](int r, int s) { return biv.coeff({r, s}).real(); };
    for (int r = 0; r < np; ++r) {
        for (int s = 0; s < nq; ++s) {
            const double value = a(r, s) * a(r + 1, s + 1) - a(r + 1, s) * a(r, s + 1);
            out.push_back({p, q, sample, r, s, value, value <= tol * scale});
        }
    }
}

}  // namespace

CoeffReport coeff_necessary(const MultiPoly& f, const SampleConfig& cfg) {
    if (f.is_zero()) throw std::invalid_argument("coeff_necessary: zero polynomial");
    CoeffReport report;
    const int d = f.nvars();

    for (int i = 0; i < d; ++i) {
        const int n = f.degree_in(i);
        for (int k = 0; k < n; ++k) {
            const MultiPoly lo = coefficient_slice(f, i, k);
            const MultiPoly hi = coefficient_slice(f, i, k + 1);
            if (lo.is_zero() && hi.is_zero()) continue;
            const Verdict v = test_interlace(lo, hi, cfg);
            report.adjacent_interlace.push_back({i, k, v.stable_or_zero()});
        }
    }

    report.grid_applicable = f.is_real(1e-12);
    if (report.grid_applicable) {
        const MultiPoly fr = f.real_part();
        // The cell expression is symmetric under swapping the two variables,
        // so unordered pairs cover every ordered pair.
        for (int p = 0; p < d; ++p) {
            for (int q = p + 1; q < d; ++q) {
                if (d == 2) {
                    grid_cells(fr, p, q, 0, cfg.tol, report.grid_inequality);
                    continue;
                }
                Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(p * 64 + q)));
                for (int sample = 0; sample < 5; ++sample) {
                    MultiPoly biv = fr;
                    // Specialize from the highest index down so indices stay valid.
                    for (int k = d - 1; k >= 0; --k) {
                        if (k == p || k == q) continue;
                        biv = specialize(biv, k, rng.uniform(0.1, 10.0));
                    }
                    grid_cells(biv, p, q, sample, cfg.tol, report.grid_inequality);
                }
            }
        }
    }

    report.top_phase = top_phase_aligned(f);
    return report;
}

std::vector<std::vector<double>> default_wronskian_points(int nvars, std::uint64_t seed, int count) {
    Rng rng(seed);
    std::vector<std::vector<double>> pts;
    for (int n = 0; n < count; ++n) {
        std::vector<double> p(static_cast<std::size_t>(nvars));
        for (double& x : p) x = rng.uniform(-10.0, 10.0);
        pts.push_back(std::move(p));
    }
    return pts;
}

double wronskian_check(const MultiPoly& f, const MultiPoly& g, int i,
                       const std::vector<std::vector<double>>& points) {
    if (f.nvars() != g.nvars()) throw DimensionMismatch("wronskian_check: variable count mismatch");
    require_real(f, "wronskian_check");
    require_real(g, "wronskian_check");
    const MultiPoly w = f * partial_derivative(g, i) - g * partial_derivative(f, i);
    double best = -kInf;
    for (const auto& p : points) best = std::max(best, w.evaluate_real(p));
    return best;
}

LinearComboResult linear_combo_test(const MultiPoly& f, const MultiPoly& g, const SampleConfig& cfg) {
    if (f.nvars() != g.nvars()) throw DimensionMismatch("linear_combo_test: variable count mismatch");
    LinearComboResult out;
    Rng rng(derive_seed(cfg.seed, 0x11CEULL));
    for (int k = 0; k < 50; ++k) {
        const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const double alpha = std::cos(theta);
        const double beta = std::sin(theta);
        const MultiPoly combo = Complex(alpha) * f + Complex(beta) * g;
        ++out.combos_checked;
        if (!test_stable(combo, cfg).stable_or_zero()) {
            out.combos_stable = false;
            out.failing_combo = {alpha, beta};
            break;
        }
    }
    out.interlace_either =
        test_interlace(f, g, cfg).stable_or_zero() || test_interlace(g, f, cfg).stable_or_zero();
    return out;
}

std::optional<Complex> proportionality(const MultiPoly& f, const MultiPoly& g, double tol) {
    if (f.nvars() != g.nvars()) throw DimensionMismatch("proportionality: variable count mismatch");
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("proportionality: zero input");
    const ExponentVector* lead = nullptr;
    double best = -1.0;
    for (const auto& [e, c] : g.terms()) {
        if (std::abs(c) > best) {
            best = std::abs(c);
            lead = &e;
        }
    }
    const Complex c = f.coeff(*lead) / g.coeff(*lead);
    if ((f - c * g).norm1() <= tol * f.norm1()) return c;
    return std::nullopt;
}

}  // namespace stabpoly
