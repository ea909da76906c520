#include "stabpoly/operators.hpp"

#include <algorithm>
#include <cmath>

namespace stabpoly {

namespace {

// (-d)^j applied to the monomial c x^e: zero if any j_k > e_k.
void accumulate_neg_derivative(const ExponentVector& e, Complex c, const ExponentVector& j,
                               std::size_t offset, MultiPoly& out, const ExponentVector& extra,
                               Complex scale) {
    ExponentVector r = e;
    Complex coef = c * scale;
    for (std::size_t k = 0; k < j.size(); ++k) {
        const int have = e[offset + k];
        const int take = j[k];
        if (take > have) return;
        for (int t = 0; t < take; ++t) coef *= -static_cast<double>(have - t);
        r[offset + k] = have - take;
    }
    for (std::size_t k = 0; k < extra.size(); ++k) r[k] += extra[k];
    out.add_term(r, coef);
}

bool near(double a, double b) {
    return std::abs(a - b) <= 1e-10 * std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace

MultiPoly apply_neg_partial(const MultiPoly& f, const MultiPoly& g) {
    if (f.nvars() != g.nvars()) throw DimensionMismatch("apply_neg_partial: variable count mismatch");
    MultiPoly out(g.nvars());
    const ExponentVector none(static_cast<std::size_t>(g.nvars()), 0);
    for (const auto& [j, c] : f.terms())
        for (const auto& [e, cg] : g.terms()) accumulate_neg_derivative(e, cg, j, 0, out, none, c);
    return out;
}

MultiPoly exp_neg_mixed(const MultiPoly& f, int block) {
    if (block < 0 || 2 * block != f.nvars())
        throw std::invalid_argument("exp_neg_mixed: variables must split into two equal blocks");
    const auto b = static_cast<std::size_t>(block);
    // L = Sum_i d_{x_i} d_{y_i}; result = Sum_k (-1)^k / k! L^k f.
    // Dividing (rather than multiplying by -1/k) keeps integer inputs exact.
    const auto apply_l = [&](const MultiPoly& p, int k) {
        MultiPoly out(p.nvars());
        for (const auto& [e, c] : p.terms()) {
            for (std::size_t i = 0; i < b; ++i) {
                if (e[i] == 0 || e[b + i] == 0) continue;
                ExponentVector r = e;
                r[i] -= 1;
                r[b + i] -= 1;
                out.add_term(r, c * static_cast<double>(e[i]) * static_cast<double>(e[b + i]) / static_cast<double>(-k));
            }
        }
        return out;
    };
    MultiPoly result = f;
    MultiPoly term = f;
    for (int k = 1; !term.is_zero(); ++k) {
        term = apply_l(term, k);
        result += term;
    }
    return result;
}

MultiPoly exp_neg_mixed(const MultiPoly& f) {
    if (f.nvars() % 2 != 0)
        throw std::invalid_argument("exp_neg_mixed: odd variable count without an explicit split");
    return exp_neg_mixed(f, f.nvars() / 2);
}

DiffOperatorSymbol::DiffOperatorSymbol(MultiPoly symbol, int block)
    : symbol_(std::move(symbol)), block_(block) {
    if (block < 1 || symbol_.nvars() != 2 * block)
        throw std::invalid_argument("DiffOperatorSymbol: symbol must have 2 * block variables");
}

MultiPoly symbol_of(const DiffOperatorSymbol& t) { return t.symbol(); }

MultiPoly apply_operator(const DiffOperatorSymbol& t, const MultiPoly& g) {
    const int d = t.block();
    if (g.nvars() != d) throw DimensionMismatch("apply_operator: input does not match block size");
    MultiPoly out(d);
    for (const auto& [e, c] : t.symbol().terms()) {
        const ExponentVector xpow(e.begin(), e.begin() + d);
        const ExponentVector dpow(e.begin() + d, e.end());
        for (const auto& [eg, cg] : g.terms()) accumulate_neg_derivative(eg, cg, dpow, 0, out, xpow, c);
    }
    return out;
}

PreserverReport preserver_test(const DiffOperatorSymbol& t, const SampleConfig& cfg,
                               const std::vector<MultiPoly>& stable_inputs) {
    PreserverReport report;
    report.symbol_verdict = test_stable(t.symbol(), cfg);
    if (report.symbol_verdict.tag != VerdictTag::UnstableWitness) return report;
    for (std::size_t k = 0; k < stable_inputs.size(); ++k) {
        const MultiPoly& g = stable_inputs[k];
        if (g.nvars() != t.block()) continue;
        MultiPoly image = apply_operator(t, g);
        Verdict v = test_stable(image, cfg);
        if (v.tag == VerdictTag::UnstableWitness) {
            report.counterexample = k;
            report.image = std::move(image);
            report.image_verdict = std::move(v);
            break;
        }
    }
    return report;
}

DiagonalOperator diagonal_from_table(const std::vector<std::vector<double>>& table) {
    DiagonalOperator t;
    t.nvars = 2;
    for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t j = 0; j < table[i].size(); ++j)
            t.grid[{static_cast<int>(i), static_cast<int>(j)}] = table[i][j];
    return t;
}

MultiPoly apply_diagonal(const DiagonalOperator& t, const MultiPoly& g) {
    if (g.nvars() != t.nvars) throw DimensionMismatch("apply_diagonal: variable count mismatch");
    MultiPoly out(g.nvars());
    for (const auto& [e, c] : g.terms()) {
        auto it = t.grid.find(e);
        if (it == t.grid.end()) throw std::out_of_range("apply_diagonal: exponent outside the operator grid");
        out.add_term(e, c * it->second);
    }
    return out;
}

DiagonalFactorResult diagonal_factor(const DiagonalOperator& t) {
    if (t.grid.empty()) throw std::invalid_argument("diagonal_factor: empty grid");
    const auto d = static_cast<std::size_t>(t.nvars);
    std::vector<int> cap(d, 0);
    for (const auto& [e, a] : t.grid) {
        if (e.size() != d) throw DimensionMismatch("diagonal_factor: exponent length differs from nvars");
        for (std::size_t k = 0; k < d; ++k) cap[k] = std::max(cap[k], e[k]);
    }
    std::size_t box = 1;
    for (int c : cap) box *= static_cast<std::size_t>(c + 1);
    if (box != t.grid.size())
        throw std::invalid_argument("diagonal_factor: grid is not a full box of exponents");

    DiagonalFactorResult out;
    for (const auto& [e, a] : t.grid) {
        if (a == 0.0) {
            out.diagnostic = "zero entry in the grid";
            out.violating_cell = e;
            return out;
        }
    }

    const auto at = [&](const ExponentVector& e) { return t.grid.at(e); };
    for (const auto& [e, a] : t.grid) {
        for (std::size_t u = 0; u < d; ++u) {
            if (e[u] >= cap[u]) continue;
            for (std::size_t w = u + 1; w < d; ++w) {
                if (e[w] >= cap[w]) continue;
                ExponentVector eu = e, ew = e, euw = e;
                eu[u] += 1;
                ew[w] += 1;
                euw[u] += 1;
                euw[w] += 1;
                if (!near(a * at(euw), at(eu) * at(ew))) {
                    out.violating_cell = e;
                    out.violating_axes = std::make_pair(static_cast<int>(u), static_cast<int>(w));
                    out.diagnostic = "multiplicativity fails on a 2x2 cell";
                    return out;
                }
            }
        }
    }

    const double a0 = at(ExponentVector(d, 0));
    std::vector<std::vector<double>> seq(d);
    for (std::size_t k = 0; k < d; ++k) {
        for (int i = 0; i <= cap[k]; ++i) {
            ExponentVector e(d, 0);
            e[k] = i;
            seq[k].push_back(k == 0 ? at(e) : at(e) / a0);
        }
    }
    out.factors = std::move(seq);
    return out;
}

UniPoly hermite(int n) {
    if (n < 0) throw std::invalid_argument("hermite: negative degree");
    std::vector<Complex> prev{1.0};
    if (n == 0) return UniPoly(prev);
    std::vector<Complex> cur{0.0, 2.0};
    for (int k = 1; k < n; ++k) {
        // H_{k+1} = 2x H_k - 2k H_{k-1}
        std::vector<Complex> next(cur.size() + 1, 0.0);
        for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += 2.0 * cur[j];
        for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= 2.0 * k * prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return UniPoly(cur);
}

MultiPoly hermite_map(const MultiPoly& g) {
    const auto d = static_cast<std::size_t>(g.nvars());
    std::vector<UniPoly> cache;
    const auto h = [&](int n) -> const UniPoly& {
        while (static_cast<int>(cache.size()) <= n) cache.push_back(hermite(static_cast<int>(cache.size())));
        return cache[static_cast<std::size_t>(n)];
    };
    MultiPoly out(g.nvars());
    for (const auto& [e, c] : g.terms()) {
        MultiPoly term = MultiPoly::constant(g.nvars(), c);
        for (std::size_t k = 0; k < d; ++k) {
            if (e[k] == 0) continue;
            const UniPoly& hk = h(e[k]);
            MultiPoly factor(g.nvars());
            for (int j = 0; j <= hk.degree(); ++j) {
                ExponentVector x(d, 0);
                x[k] = j;
                factor.add_term(x, hk[j]);
            }
            term = term * factor;
        }
        out += term;
    }
    return out;
}

}  // namespace stabpoly
