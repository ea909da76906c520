#include "stabpoly/constructions.hpp"

#include <cmath>
#include <numbers>
#include <unordered_map>

#include "stabpoly/rng.hpp"

namespace stabpoly {

namespace {

void check_symmetric(const Eigen::MatrixXd& m, const char* what) {
    if (m.rows() != m.cols()) throw std::invalid_argument(std::string(what) + " is not square");
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw std::invalid_argument(std::string(what) + " is not symmetric");
}

double min_eigenvalue(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

Eigen::MatrixXd uniform_matrix(Rng& rng, int rows, int cols, double lo, double hi) {
    Eigen::MatrixXd m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = rng.uniform(lo, hi);
    return m;
}

Eigen::MatrixXd integer_matrix(Rng& rng, int n, int lo, int hi) {
    Eigen::MatrixXd m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = rng.integer(lo, hi);
    return m;
}

// Entry (r, c) of Sum_i x_i D_i + A as a polynomial in nvars >= d variables.
MultiPoly linear_entry(const std::vector<Eigen::MatrixXd>& ds, double a, Complex shift, int r,
                       int c, int nvars) {
    MultiPoly e = MultiPoly::constant(nvars, Complex(a) + shift);
    for (std::size_t i = 0; i < ds.size(); ++i)
        e += MultiPoly::variable(nvars, static_cast<int>(i), ds[i](r, c));
    return e;
}

MultiPoly principal_minor(const SymmetricPencil& l, unsigned mask, int nvars) {
    std::vector<int> idx;
    for (int k = 0; k < l.n(); ++k)
        if (mask & (1u << k)) idx.push_back(k);
    if (idx.empty()) return MultiPoly::constant(nvars, 1.0);
    PolyMatrix m(idx.size(), std::vector<MultiPoly>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < idx.size(); ++c)
            m[r][c] = linear_entry(l.Ds, l.A(idx[r], idx[c]), 0.0, idx[r], idx[c], nvars);
    return symbolic_determinant(m, nvars);
}

void check_johnson(const std::vector<SymmetricPencil>& ls) {
    if (ls.empty() || ls.size() > 3) throw std::invalid_argument("johnson: need 1 <= m <= 3 pencils");
    const int n = ls.front().n();
    const int d = ls.front().d();
    if (n < 1 || n > 5) throw std::invalid_argument("johnson: need 1 <= n <= 5");
    for (const auto& l : ls) {
        if (l.n() != n || l.d() != d) throw DimensionMismatch("johnson: pencils differ in shape");
        check_symmetric(l.A, "A_k");
        for (const auto& dm : l.Ds) {
            check_symmetric(dm, "D_ik");
            if (dm.rows() != n) throw DimensionMismatch("johnson: D_ik has the wrong size");
            if (min_eigenvalue(dm) < 1e-10) throw std::invalid_argument("johnson: D_ik not positive definite");
        }
    }
}

}  // namespace

void MatrixPencil::validate() const {
    const int size = n();
    if (size < 1) throw std::invalid_argument("MatrixPencil: empty S");
    check_symmetric(S, "S");
    if (E.size() > 0) {
        if (E.rows() != size) throw DimensionMismatch("MatrixPencil: E has the wrong size");
        check_symmetric(E, "E");
        if (min_eigenvalue(E) < -1e-10) throw std::invalid_argument("MatrixPencil: E not PSD");
    }
    if (Ds.empty()) throw std::invalid_argument("MatrixPencil: no D matrices");
    for (const auto& dm : Ds) {
        if (dm.rows() != size) throw DimensionMismatch("MatrixPencil: D_k has the wrong size");
        check_symmetric(dm, "D_k");
        if (min_eigenvalue(dm) < 1e-10) throw std::invalid_argument("MatrixPencil: D_k not PD");
    }
}

MultiPoly symbolic_determinant(const PolyMatrix& m, int nvars) {
    const std::size_t n = m.size();
    if (n == 0) return MultiPoly::constant(nvars, 1.0);
    if (n > 20) throw std::invalid_argument("symbolic_determinant: matrix too large");
    for (const auto& row : m)
        if (row.size() != n) throw DimensionMismatch("symbolic_determinant: matrix not square");

    // minors[mask] = det of rows (n - popcount(mask)) .. n-1 restricted to the
    // columns in mask, built from the bottom row up.
    std::unordered_map<unsigned, MultiPoly> minors;
    minors.emplace(0u, MultiPoly::constant(nvars, 1.0));
    for (std::size_t size = 1; size <= n; ++size) {
        const std::size_t row = n - size;
        std::unordered_map<unsigned, MultiPoly> next;
        for (const auto& [mask, sub] : minors) {
            for (std::size_t col = 0; col < n; ++col) {
                if (mask & (1u << col)) continue;
                const unsigned grown = mask | (1u << col);
                // Sign from the position of col among the columns of `grown`.
                int before = 0;
                for (std::size_t k = 0; k < col; ++k)
                    if (grown & (1u << k)) ++before;
                MultiPoly term = m[row][col] * sub;
                if (before % 2 == 1) term *= -1.0;
                auto [it, inserted] = next.try_emplace(grown, std::move(term));
                if (!inserted) it->second += term;
            }
        }
        minors = std::move(next);
    }
    return minors.at((1u << n) - 1u);
}

PolyMatrix pencil_matrix(const MatrixPencil& p) {
    p.validate();
    const int n = p.n();
    PolyMatrix m(static_cast<std::size_t>(n), std::vector<MultiPoly>(static_cast<std::size_t>(n)));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            const Complex shift = p.E.size() > 0 ? Complex(0.0, p.E(r, c)) : Complex{};
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                linear_entry(p.Ds, p.S(r, c), shift, r, c, p.d());
        }
    }
    return m;
}

MultiPoly det_pencil_cofactor(const MatrixPencil& p) {
    MultiPoly det = symbolic_determinant(pencil_matrix(p), p.d());
    return p.has_E() ? det : det.real_part();
}

MultiPoly det_pencil_interpolate(const MatrixPencil& p) {
    p.validate();
    const int n = p.n();
    const int d = p.d();
    const int pts = n + 1;
    std::size_t total = 1;
    for (int k = 0; k < d; ++k) total *= static_cast<std::size_t>(pts);

    std::vector<Complex> omega(static_cast<std::size_t>(pts));
    for (int j = 0; j < pts; ++j)
        omega[static_cast<std::size_t>(j)] = std::polar(1.0, 2.0 * std::numbers::pi * j / pts);

    Eigen::MatrixXcd base = p.S.cast<Complex>();
    if (p.E.size() > 0) base += Complex(0.0, 1.0) * p.E.cast<Complex>();

    // values[flat index], index digits in base `pts`, variable 0 fastest.
    std::vector<Complex> values(total);
    std::vector<int> digit(static_cast<std::size_t>(d), 0);
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rest = flat;
        Eigen::MatrixXcd m = base;
        for (int k = 0; k < d; ++k) {
            digit[static_cast<std::size_t>(k)] = static_cast<int>(rest % static_cast<std::size_t>(pts));
            rest /= static_cast<std::size_t>(pts);
            m += omega[static_cast<std::size_t>(digit[static_cast<std::size_t>(k)])] *
                 p.Ds[static_cast<std::size_t>(k)].cast<Complex>();
        }
        values[flat] = m.partialPivLu().determinant();
    }

    // Inverse DFT along each axis in turn.
    std::size_t stride = 1;
    std::vector<Complex> line(static_cast<std::size_t>(pts));
    for (int k = 0; k < d; ++k) {
        const std::size_t span = stride * static_cast<std::size_t>(pts);
        for (std::size_t block = 0; block < total; block += span) {
            for (std::size_t off = 0; off < stride; ++off) {
                for (int e = 0; e < pts; ++e) {
                    Complex acc = 0.0;
                    for (int j = 0; j < pts; ++j)
                        acc += values[block + off + static_cast<std::size_t>(j) * stride] *
                               std::conj(omega[static_cast<std::size_t>((e * j) % pts)]);
                    line[static_cast<std::size_t>(e)] = acc / static_cast<double>(pts);
                }
                for (int e = 0; e < pts; ++e)
                    values[block + off + static_cast<std::size_t>(e) * stride] = line[static_cast<std::size_t>(e)];
            }
        }
        stride = span;
    }

    MultiPoly out(d);
    ExponentVector ex(static_cast<std::size_t>(d));
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rest = flat;
        for (int k = 0; k < d; ++k) {
            ex[static_cast<std::size_t>(k)] = static_cast<int>(rest % static_cast<std::size_t>(pts));
            rest /= static_cast<std::size_t>(pts);
        }
        if (total_degree(ex) <= n) out.add_term(ex, values[flat]);
    }
    out = out.chopped(1e-13);
    return p.has_E() ? out : out.real_part();
}

MultiPoly det_pencil_poly(const MatrixPencil& p) {
    p.validate();
    if (p.n() > 8) throw std::invalid_argument("det_pencil_poly: n must be at most 8");
    if (p.d() > 6) throw std::invalid_argument("det_pencil_poly: d must be at most 6");
    return p.n() <= 4 ? det_pencil_cofactor(p) : det_pencil_interpolate(p);
}

MatrixPencil random_pencil(int n, int d, std::uint64_t seed, bool with_E) {
    if (n < 1 || n > 8) throw std::invalid_argument("random_pencil: need 1 <= n <= 8");
    if (d < 1) throw std::invalid_argument("random_pencil: need d >= 1");
    Rng rng(seed);
    MatrixPencil p;
    const Eigen::MatrixXd m = uniform_matrix(rng, n, n, -1.0, 1.0);
    p.S = m + m.transpose();
    for (int k = 0; k < d; ++k) {
        const Eigen::MatrixXd g = uniform_matrix(rng, n, n, -1.0, 1.0);
        p.Ds.push_back(g * g.transpose() + 0.1 * Eigen::MatrixXd::Identity(n, n));
    }
    if (with_E) {
        const Eigen::MatrixXd h = uniform_matrix(rng, n, n, -1.0, 1.0);
        p.E = h * h.transpose();
    } else {
        p.E = Eigen::MatrixXd::Zero(n, n);
    }
    return p;
}

MultiPoly johnson_sum(const std::vector<SymmetricPencil>& ls) {
    check_johnson(ls);
    const int n = ls.front().n();
    const int d = ls.front().d();
    const std::size_t m = ls.size();

    std::vector<std::unordered_map<unsigned, MultiPoly>> minors(m);
    const auto minor = [&](std::size_t k, unsigned mask) -> const MultiPoly& {
        auto it = minors[k].find(mask);
        if (it == minors[k].end()) it = minors[k].emplace(mask, principal_minor(ls[k], mask, d)).first;
        return it->second;
    };

    MultiPoly sum(d);
    std::size_t assignments = 1;
    for (int k = 0; k < n; ++k) assignments *= m;
    for (std::size_t code = 0; code < assignments; ++code) {
        std::vector<unsigned> masks(m, 0u);
        std::size_t rest = code;
        for (int idx = 0; idx < n; ++idx) {
            masks[rest % m] |= 1u << idx;
            rest /= m;
        }
        MultiPoly term = MultiPoly::constant(d, 1.0);
        for (std::size_t k = 0; k < m; ++k) term = term * minor(k, masks[k]);
        sum += term;
    }
    return sum;
}

MultiPoly johnson_by_extraction(const std::vector<SymmetricPencil>& ls) {
    check_johnson(ls);
    const int n = ls.front().n();
    const int d = ls.front().d();
    const int nv = d + n;

    MultiPoly product = MultiPoly::constant(nv, 1.0);
    for (const auto& l : ls) {
        PolyMatrix m(static_cast<std::size_t>(n), std::vector<MultiPoly>(static_cast<std::size_t>(n)));
        for (int r = 0; r < n; ++r) {
            const MultiPoly w = MultiPoly::variable(nv, d + r);
            for (int c = 0; c < n; ++c) {
                MultiPoly entry = Complex(-1.0) * (w * linear_entry(l.Ds, l.A(r, c), 0.0, r, c, nv));
                if (r == c) entry += MultiPoly::constant(nv, 1.0);
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = std::move(entry);
            }
        }
        product = product * symbolic_determinant(m, nv);
    }

    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    MultiPoly out(d);
    for (const auto& [e, c] : product.terms()) {
        bool hit = true;
        for (int r = 0; r < n; ++r) hit = hit && e[static_cast<std::size_t>(d + r)] == 1;
        if (!hit) continue;
        out.add_term(ExponentVector(e.begin(), e.begin() + d), sign * c);
    }
    return out;
}

std::vector<SymmetricPencil> random_johnson_instance(int n, int m, int d, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<SymmetricPencil> out;
    for (int k = 0; k < m; ++k) {
        SymmetricPencil l;
        for (int i = 0; i < d; ++i) {
            const Eigen::MatrixXd g = integer_matrix(rng, n, -2, 2);
            l.Ds.push_back(g * g.transpose() + Eigen::MatrixXd::Identity(n, n));
        }
        const Eigen::MatrixXd a = integer_matrix(rng, n, -3, 3);
        l.A = a + a.transpose();
        out.push_back(std::move(l));
    }
    return out;
}

void RecurrenceSpec::validate() const {
    if (d < 1) throw std::invalid_argument("RecurrenceSpec: d must be positive");
    if (steps.empty()) throw std::invalid_argument("RecurrenceSpec: no steps");
    for (std::size_t k = 0; k < steps.size(); ++k) {
        const auto& s = steps[k];
        if (static_cast<int>(s.a.size()) != d) throw DimensionMismatch("RecurrenceSpec: wrong coefficient count");
        for (double a : s.a)
            if (!(a > 0.0)) throw std::invalid_argument("RecurrenceSpec: coefficients a must be positive");
        if (k > 0 && !(s.c > 0.0)) throw std::invalid_argument("RecurrenceSpec: c must be positive");
    }
}

std::vector<MultiPoly> recurrence_chain(const RecurrenceSpec& spec) {
    spec.validate();
    const auto linear = [&](const RecurrenceStep& s) {
        MultiPoly l = MultiPoly::constant(spec.d, s.b);
        for (int k = 0; k < spec.d; ++k) l += MultiPoly::variable(spec.d, k, s.a[static_cast<std::size_t>(k)]);
        return l;
    };
    std::vector<MultiPoly> chain{MultiPoly::constant(spec.d, 1.0), linear(spec.steps.front())};
    for (std::size_t k = 1; k < spec.steps.size(); ++k) {
        const auto& s = spec.steps[k];
        chain.push_back(linear(s) * chain[k] - Complex(s.c) * chain[k - 1]);
    }
    return chain;
}

RecurrenceSpec random_recurrence(int d, int steps, std::uint64_t seed, bool unit) {
    if (steps < 1) throw std::invalid_argument("random_recurrence: need at least one step");
    RecurrenceSpec spec;
    spec.d = d;
    Rng rng(seed);
    for (int k = 0; k < steps; ++k) {
        RecurrenceStep s;
        s.a.assign(static_cast<std::size_t>(d), 1.0);
        if (!unit) {
            for (double& a : s.a) a = rng.uniform(0.5, 2.0);
            s.b = rng.uniform(-1.0, 1.0);
            s.c = rng.uniform(0.5, 2.0);
        }
        spec.steps.push_back(std::move(s));
    }
    spec.validate();
    return spec;
}

std::optional<std::pair<MultiPoly, MultiPoly>> separability_check(const MultiPoly& f) {
    if (f.nvars() != 2) throw DimensionMismatch("separability_check: expected two variables");
    if (!f.is_real(1e-12)) throw std::invalid_argument("separability_check: non-real coefficients");
    if (f.is_zero()) return std::nullopt;

    const int nx = f.degree_in(0);
    const int ny = f.degree_in(1);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(nx + 1, ny + 1);
    for (const auto& [e, c] : f.terms()) a(e[0], e[1]) = c.real();

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (sv.size() > 1 && sv(1) > 1e-10 * sv(0)) return std::nullopt;

    Eigen::VectorXd gx = sv(0) * svd.matrixU().col(0);
    Eigen::VectorXd hy = svd.matrixV().col(0);
    // Put the sign on g so h has a positive leading coefficient.
    Eigen::Index lead = hy.size() - 1;
    while (lead > 0 && std::abs(hy(lead)) <= 1e-14 * hy.cwiseAbs().maxCoeff()) --lead;
    if (hy(lead) < 0.0) {
        hy = -hy;
        gx = -gx;
    }
    if ((a - gx * hy.transpose()).norm() > 1e-10 * a.norm()) return std::nullopt;

    MultiPoly g(1), h(1);
    for (Eigen::Index k = 0; k < gx.size(); ++k) g.add_term({static_cast<int>(k)}, gx(k));
    for (Eigen::Index k = 0; k < hy.size(); ++k) h.add_term({static_cast<int>(k)}, hy(k));
    return std::make_pair(g.chopped(1e-14), h.chopped(1e-14));
}

}  // namespace stabpoly
