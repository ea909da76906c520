#include "stabpoly/uni.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace stabpoly {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Taylor coefficients of p at c: p(x) = Sum_k t_k (x - c)^k.
std::vector<Complex> taylor_shift(const UniPoly& p, Complex c) {
    std::vector<Complex> t = p.coeffs();
    const std::size_t n = t.size();
    for (std::size_t k = 0; k + 1 < n; ++k)
        for (std::size_t j = n - 1; j > k; --j) t[j - 1] += c * t[j];
    return t;
}

double abs_eval_bound(const UniPoly& p, double r) {
    double acc = 0.0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * r + std::abs(*it);
    return acc;
}

// Diagonal similarity by powers of two equalizing row and column norms
// (Parlett-Reinsch). Companion matrices of badly scaled polynomials lose
// several digits in their eigenvalues without it.
template <class Matrix>
void balance(Matrix& a) {
    constexpr double radix = 2.0;
    constexpr double sqrdx = radix * radix;
    const Eigen::Index n = a.rows();
    for (bool done = false; !done;) {
        done = true;
        for (Eigen::Index i = 0; i < n; ++i) {
            double c = 0.0, r = 0.0;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(a(j, i));
                r += std::abs(a(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            const double s = c + r;
            double f = 1.0;
            for (double g = r / radix; c < g; c *= sqrdx) f *= radix;
            for (double g = r * radix; c > g; c /= sqrdx) f /= radix;
            if ((c + r) / f < 0.95 * s) {
                done = false;
                a.row(i) /= f;
                a.col(i) *= f;
            }
        }
    }
}

std::vector<Complex> companion_roots(const std::vector<Complex>& monic, bool real) {
    // monic has degree n, leading coefficient 1; the companion matrix has
    // ones on the subdiagonal and -monic[k] in the last column.
    const auto n = static_cast<Eigen::Index>(monic.size() - 1);
    std::vector<Complex> roots;
    roots.reserve(static_cast<std::size_t>(n));
    if (real) {
        Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
        for (Eigen::Index k = 1; k < n; ++k) c(k, k - 1) = 1.0;
        for (Eigen::Index k = 0; k < n; ++k) c(k, n - 1) = -monic[static_cast<std::size_t>(k)].real();
        balance(c);
        Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
        for (Eigen::Index k = 0; k < n; ++k) roots.push_back(es.eigenvalues()(k));
    } else {
        Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
        for (Eigen::Index k = 1; k < n; ++k) c(k, k - 1) = 1.0;
        for (Eigen::Index k = 0; k < n; ++k) c(k, n - 1) = -monic[static_cast<std::size_t>(k)];
        balance(c);
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(c, false);
        for (Eigen::Index k = 0; k < n; ++k) roots.push_back(es.eigenvalues()(k));
    }
    return roots;
}

Complex newton_polish(const UniPoly& p, Complex r) {
    double best = std::abs(p.evaluate(r));
    for (int it = 0; it < 4 && best > 0.0; ++it) {
        const Complex d = p.derivative_at(r);
        if (d == Complex{}) break;
        const Complex next = r - p.evaluate(r) / d;
        const double v = std::abs(p.evaluate(next));
        if (!(v < best)) break;
        best = v;
        r = next;
    }
    return r;
}

}  // namespace

double root_residual(const UniPoly& p, Complex r) {
    const double denom = p.norm1() * std::pow(1.0 + std::abs(r), p.degree());
    return std::abs(p.evaluate(r)) / denom;
}

RootReport all_roots(const UniPoly& p) {
    if (p.degree() < 1) throw std::invalid_argument("all_roots: degree must be at least 1");
    if (p.degree() > kMaxRootDegree)
        throw std::invalid_argument("all_roots: degree exceeds " + std::to_string(kMaxRootDegree));

    RootReport report;
    const auto& c = p.coeffs();

    // Exact zero roots.
    std::size_t low = 0;
    while (c[low] == Complex{}) ++low;
    report.roots.assign(low, Complex{});

    const std::size_t n = c.size() - 1 - low;
    if (n == 1) {
        report.roots.push_back(-c[low] / c[low + 1]);
    } else if (n > 1) {
        // x = s y with s a power of two near (|c_low| / |c_top|)^(1/n).
        const double ratio = std::abs(c[low]) / std::abs(c.back());
        const double s = std::exp2(std::round(std::log2(ratio) / static_cast<double>(n)));
        std::vector<Complex> monic(n + 1);
        double sk = 1.0;
        for (std::size_t k = 0; k <= n; ++k) {
            monic[k] = c[low + k] * sk / (c.back() * std::pow(s, static_cast<double>(n)));
            sk *= s;
        }
        monic[n] = 1.0;
        const bool real = p.is_real();
        for (Complex y : companion_roots(monic, real)) report.roots.push_back(newton_polish(p, y * s));
    }

    report.max_uhp_margin = -std::numeric_limits<double>::infinity();
    for (Complex r : report.roots) {
        const double res = root_residual(p, r);
        report.residuals.push_back(res);
        if (!(res <= kResidualBound)) report.reliable = false;
        report.max_uhp_margin = std::max(report.max_uhp_margin, r.imag());
    }
    return report;
}

std::vector<Complex> resolve_clusters(const UniPoly& p, const std::vector<Complex>& roots,
                                      double tol, std::span<const double> coeff_error) {
    std::vector<Complex> out = roots;
    const std::size_t n = roots.size();
    double scale = 1.0;
    for (Complex r : roots) scale = std::max(scale, 1.0 + std::abs(r));
    const double band = tol * scale;
    const double noise_factor = 64.0 * static_cast<double>(n + 1) * kEps;

    std::vector<bool> settled(n, false);
    for (std::size_t j = 0; j < n; ++j) {
        if (settled[j] || out[j].imag() <= band) continue;

        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return std::abs(roots[a] - roots[j]) < std::abs(roots[b] - roots[j]);
        });

        const std::size_t max_m = std::min<std::size_t>(n, 8);
        for (std::size_t m = 1; m <= max_m; ++m) {
            Complex centroid = 0.0;
            for (std::size_t k = 0; k < m; ++k) centroid += roots[order[k]];
            centroid /= static_cast<double>(m);

            double spread = 0.0;
            for (std::size_t k = 0; k < m; ++k)
                spread = std::max(spread, std::abs(roots[order[k]] - centroid));

            // An m-fold root perturbed by backward error `noise` moves by about
            // (noise / |t_m|)^(1/m).
            const auto t = taylor_shift(p, centroid);
            const double tm = std::abs(t[m]);
            if (tm == 0.0) continue;
            double noise = noise_factor * abs_eval_bound(p, std::abs(centroid));
            double power = 1.0;
            for (double err : coeff_error) {
                noise += err * power;
                power *= std::abs(centroid);
            }
            const double radius = std::pow(noise / tm, 1.0 / static_cast<double>(m));

            const double im_limit = (m == 1) ? std::max(band, 4.0 * radius) : band;
            if (spread <= 4.0 * radius && centroid.imag() <= im_limit) {
                for (std::size_t k = 0; k < m; ++k) {
                    out[order[k]] = Complex(centroid.real(), std::min(centroid.imag(), 0.0));
                    settled[order[k]] = true;
                }
                break;
            }
        }
    }
    return out;
}

U1Result in_u1(const UniPoly& p, double tol, std::span<const double> coeff_error) {
    if (p.is_zero()) throw std::invalid_argument("in_u1: zero polynomial");
    U1Result result;
    if (p.degree() == 0) {
        result.margin = -std::numeric_limits<double>::infinity();
        return result;
    }
    const RootReport report = all_roots(p);
    if (!report.reliable) {
        result.status = U1Status::Inconclusive;
        return result;
    }
    for (Complex r : report.roots) result.scale = std::max(result.scale, 1.0 + std::abs(r));
    const auto roots = resolve_clusters(p, report.roots, tol, coeff_error);

    double max_im = -std::numeric_limits<double>::infinity();
    Complex top{};
    for (Complex r : roots) {
        if (r.imag() > max_im) {
            max_im = r.imag();
            top = r;
        }
    }
    result.margin = max_im / result.scale;
    if (max_im > tol * result.scale) {
        result.status = U1Status::NonMemberWitness;
        result.witness = top;
    } else if (max_im > 0.1 * tol * result.scale) {
        result.status = U1Status::Boundary;
    }
    return result;
}

bool is_real_rooted(const UniPoly& p, double tol) {
    if (p.is_zero()) throw std::invalid_argument("is_real_rooted: zero polynomial");
    if (!p.is_real(1e-12)) throw std::invalid_argument("is_real_rooted: non-real coefficients");
    if (p.degree() == 0) return true;
    const UniPoly q = p.real_part();
    const RootReport report = all_roots(q);
    double scale = 1.0;
    for (Complex r : report.roots) scale = std::max(scale, 1.0 + std::abs(r));
    const auto roots = resolve_clusters(q, report.roots, tol);
    // Nonreal roots of a real polynomial come in conjugate pairs, so it is
    // enough that nothing survives in the upper half plane.
    return std::all_of(roots.begin(), roots.end(),
                       [&](Complex r) { return r.imag() <= tol * scale; });
}

const char* to_string(InterlaceRelation r) {
    switch (r) {
        case InterlaceRelation::FArrowG: return "FArrowG";
        case InterlaceRelation::FArrowNegG: return "FArrowNegG";
        case InterlaceRelation::Proportional: return "Proportional";
        case InterlaceRelation::None: return "None";
    }
    return "None";
}

namespace {

std::vector<double> sorted_real_roots(const UniPoly& p, double tol) {
    if (p.degree() < 1) return {};
    const auto report = all_roots(p);
    auto roots = resolve_clusters(p, report.roots, tol);
    std::vector<double> out;
    for (Complex r : roots) out.push_back(r.real());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

InterlaceRelation interlace_classify(const UniPoly& f_in, const UniPoly& g_in, double tol) {
    if (f_in.is_zero() || g_in.is_zero())
        throw std::invalid_argument("interlace_classify: zero polynomial");
    if (!f_in.is_real(1e-12) || !g_in.is_real(1e-12))
        throw std::invalid_argument("interlace_classify: non-real coefficients");
    if (!is_real_rooted(f_in, tol) || !is_real_rooted(g_in, tol))
        throw std::invalid_argument("interlace_classify: input is not real-rooted");

    const double sign = f_in.leading().real() < 0.0 ? -1.0 : 1.0;
    const UniPoly f = Complex(sign) * f_in.real_part();
    const UniPoly g = Complex(sign) * g_in.real_part();

    // Proportionality: f = c g with c read off g's largest coefficient.
    {
        std::size_t k = 0;
        for (std::size_t j = 0; j < g.coeffs().size(); ++j)
            if (std::abs(g.coeffs()[j]) > std::abs(g.coeffs()[k])) k = j;
        const Complex c = (k < f.coeffs().size() ? f.coeffs()[k] : Complex{}) / g.coeffs()[k];
        const UniPoly diff = f + (-c) * g;
        if (diff.norm1() <= tol * f.norm1()) return InterlaceRelation::Proportional;
    }

    const int n = f.degree();
    const int m = g.degree();
    if (!(m == n || m == n - 1)) return InterlaceRelation::None;

    const auto rf = sorted_real_roots(f, tol);
    const auto rg = sorted_real_roots(g, tol);
    struct Labeled {
        double x;
        bool from_f;
    };
    std::vector<Labeled> all;
    for (double x : rf) all.push_back({x, true});
    for (double x : rg) all.push_back({x, false});
    std::sort(all.begin(), all.end(), [](const Labeled& a, const Labeled& b) { return a.x > b.x; });

    double scale = 1.0;
    for (const auto& l : all) scale = std::max(scale, 1.0 + std::abs(l.x));
    for (std::size_t k = 0; k < all.size(); ++k) {
        if (all[k].from_f != (k % 2 == 0)) return InterlaceRelation::None;
        if (k + 1 < all.size() && all[k].x - all[k + 1].x <= tol * scale) return InterlaceRelation::None;
    }
    return g.leading().real() > 0.0 ? InterlaceRelation::FArrowG : InterlaceRelation::FArrowNegG;
}

HBSplit hb_split(const UniPoly& p, double tol) {
    HBSplit out;
    out.real = p.real_part();
    out.imag = p.imag_part();
    if (p.is_zero()) return out;
    out.interlaces = accepts_member(in_u1(p, tol));
    if (!out.imag.is_zero() && !out.real.is_zero() && is_real_rooted(out.real, tol) &&
        is_real_rooted(out.imag, tol)) {
        out.relation = interlace_classify(out.real, out.imag, tol);
    }
    return out;
}

}  // namespace stabpoly
