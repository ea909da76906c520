#include "stabpoly/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "stabpoly/constructions.hpp"
#include "stabpoly/operators.hpp"
#include "stabpoly/rng.hpp"

namespace stabpoly {

namespace {

class Tally {
public:
    explicit Tally(std::string id) { r_.id = std::move(id); }

    void check(bool ok, const std::string& subject) {
        ++r_.checked;
        if (ok) return;
        ++r_.failed;
        if (r_.detail.empty()) r_.detail = subject;
    }

    PropertyResult done() {
        r_.passed = r_.failed == 0 && r_.checked > 0;
        if (r_.checked == 0) r_.detail = "nothing checked";
        return r_;
    }

private:
    PropertyResult r_;
};

bool is_real_member(const CorpusEntry& e) { return e.poly.is_real(1e-12); }

bool interlace_ok(const MultiPoly& f, const MultiPoly& g, const SampleConfig& cfg) {
    return test_interlace(f, g, cfg).stable_or_zero();
}

std::string verdict_note(const std::string& who, const Verdict& v) {
    std::ostringstream os;
    os << who << ": " << to_string(v.tag);
    if (v.witness) os << " root " << v.witness->root.real() << "+" << v.witness->root.imag() << "i";
    return os.str();
}

MultiPoly random_poly(Rng& rng, int nvars, int terms, int maxdeg, bool complex_coeffs) {
    MultiPoly f(nvars);
    for (int t = 0; t < terms; ++t) {
        ExponentVector e(static_cast<std::size_t>(nvars));
        for (auto& x : e) x = rng.integer(0, maxdeg);
        const double re = rng.integer(-3, 3);
        const double im = complex_coeffs ? rng.integer(-3, 3) : 0.0;
        if (re == 0.0 && im == 0.0) continue;
        f += MultiPoly::monomial(e, Complex(re, im));
    }
    return f;
}

// Sum a_i x_i + b with a_i in [0.5, 2] and b in [-1, 1].
MultiPoly positive_linear_form(Rng& rng, int d) {
    MultiPoly ell = MultiPoly::constant(d, rng.uniform(-1.0, 1.0));
    for (int i = 0; i < d; ++i) ell += MultiPoly::variable(d, i, rng.uniform(0.5, 2.0));
    return ell;
}

// For each member, the next member (cyclically) with the same variable
// count; the member itself when there is none.
std::vector<std::size_t> partners(const std::vector<CorpusEntry>& c) {
    std::vector<std::size_t> out(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
        out[k] = k;
        for (std::size_t s = 1; s < c.size(); ++s) {
            const std::size_t j = (k + s) % c.size();
            if (c[j].poly.nvars() == c[k].poly.nvars()) {
                out[k] = j;
                break;
            }
        }
    }
    return out;
}

UniPoly real_rooted_with_gap(Rng& rng, int degree, double gap, std::vector<double>& roots) {
    roots.clear();
    while (static_cast<int>(roots.size()) < degree) {
        const double r = rng.uniform(-5.0, 5.0);
        bool far = true;
        for (double q : roots) far = far && std::abs(q - r) >= gap;
        if (far) roots.push_back(r);
    }
    UniPoly p(std::vector<Complex>{1.0});
    for (double r : roots) p = p * UniPoly(std::vector<Complex>{-r, 1.0});
    return p;
}

// Bivariate g(x) h(y) from two univariate polynomials.
MultiPoly outer(const MultiPoly& g, const MultiPoly& h) {
    const std::vector<int> swap{1, 0};
    return extend_variables(g, 1) * permute_variables(extend_variables(h, 1), swap);
}

// ------------------------------------------------------------------ poly

PropertyResult poly_ring_laws(const SuiteContext& ctx) {
    Tally t("poly.ring_laws");
    Rng rng(derive_seed(ctx.cfg.seed, 101));
    for (int k = 0; k < 50; ++k) {
        const int d = 1 + k % 3;
        const MultiPoly f = random_poly(rng, d, 5, 3, true);
        const MultiPoly g = random_poly(rng, d, 5, 3, true);
        const MultiPoly h = random_poly(rng, d, 5, 3, true);
        const std::string s = "instance " + std::to_string(k);
        t.check((f + g) + h == f + (g + h), s + " add associativity");
        t.check(f + g == g + f, s + " add commutativity");
        t.check((f * g) * h == f * (g * h), s + " mul associativity");
        t.check(f * g == g * f, s + " mul commutativity");
        t.check(f * (g + h) == f * g + f * h, s + " distributivity");
        t.check((f - f).is_zero(), s + " additive inverse");
    }
    return t.done();
}

PropertyResult poly_reverse_twice(const SuiteContext& ctx) {
    Tally t("poly.reverse_twice");
    Rng rng(derive_seed(ctx.cfg.seed, 102));
    for (int k = 0; k < 50; ++k) {
        const int d = 1 + k % 3;
        const MultiPoly f = random_poly(rng, d, 6, 4, true);
        if (f.is_zero()) continue;
        for (int i = 0; i < d; ++i) {
            const int n = f.degree_in(i);
            int m = n;
            for (const auto& [e, c] : f.terms()) m = std::min(m, e[static_cast<std::size_t>(i)]);
            // Slice oracle: (-1)^(n-m) Sum_k f_k x_i^(k-m).
            MultiPoly oracle(d);
            for (int s = m; s <= n; ++s) {
                const MultiPoly slice = coefficient_slice(f, i, s);
                for (const auto& [e, c] : slice.terms()) {
                    ExponentVector full(e.begin(), e.end());
                    full.insert(full.begin() + i, s - m);
                    oracle.add_term(full, ((n - m) % 2 == 0 ? 1.0 : -1.0) * c);
                }
            }
            t.check(reverse_var(reverse_var(f, i), i) == oracle,
                    "instance " + std::to_string(k) + " variable " + std::to_string(i));
        }
    }
    return t.done();
}

PropertyResult poly_full_reverse_involution(const SuiteContext& ctx) {
    Tally t("poly.full_reverse_involution");
    Rng rng(derive_seed(ctx.cfg.seed, 103));
    for (int k = 0; k < 50; ++k) {
        const int d = 1 + k % 3;
        MultiPoly f = random_poly(rng, d, 6, 4, false);
        // A constant term pins the minimum exponent of every variable at 0.
        f += MultiPoly::constant(d, 1.0 + rng.integer(0, 3));
        if (f.coeff(ExponentVector(static_cast<std::size_t>(d), 0)) == 0.0) f += MultiPoly::constant(d, 1.0);
        t.check(full_reverse(full_reverse(f)) == f, "instance " + std::to_string(k));
    }
    return t.done();
}

PropertyResult poly_restrict_line(const SuiteContext& ctx) {
    Tally t("poly.restrict_line");
    Rng rng(derive_seed(ctx.cfg.seed, 104));
    for (int k = 0; k < 30; ++k) {
        const int d = 1 + k % 4;
        const MultiPoly f = random_poly(rng, d, 8, 4, true);
        AffineLine line;
        for (int i = 0; i < d; ++i) {
            line.a.push_back(rng.uniform(-3.0, 3.0));
            line.b.push_back(rng.log_uniform(0.1, 10.0));
        }
        const UniPoly p = restrict_line(f, line);
        for (int s = 0; s < 20; ++s) {
            const double x = rng.uniform(-2.0, 2.0);
            std::vector<Complex> pt;
            double mag = 0.0;
            for (int i = 0; i < d; ++i) pt.push_back(line.a[static_cast<std::size_t>(i)] + x * line.b[static_cast<std::size_t>(i)]);
            for (const auto& [e, c] : f.terms()) {
                double m = std::abs(c);
                // Conditioning of the expanded form: |a| + |x b| per factor.
                for (int i = 0; i < d; ++i) {
                    const auto u = static_cast<std::size_t>(i);
                    m *= std::pow(std::abs(line.a[u]) + std::abs(x * line.b[u]), e[u]);
                }
                mag += m;
            }
            const double err = std::abs(p.evaluate(x) - f.evaluate(pt));
            t.check(err <= 1e-12 * std::max(mag, 1e-300), "instance " + std::to_string(k));
        }
    }
    return t.done();
}

PropertyResult poly_top_form_limit(const SuiteContext& ctx) {
    Tally t("poly.top_form_limit");
    Rng rng(derive_seed(ctx.cfg.seed, 105));
    for (int k = 0; k < 30; ++k) {
        const int d = 1 + k % 3;
        const MultiPoly f = random_poly(rng, d, 6, 3, true);
        if (f.is_zero()) continue;
        const MultiPoly top = top_form(f);
        const int n = f.degree();
        double prev = std::numeric_limits<double>::infinity();
        for (int j = 10; j <= 40; j += 10) {
            const double eps = std::ldexp(1.0, -j);
            const std::vector<double> scales(static_cast<std::size_t>(d), 1.0 / eps);
            const std::vector<Complex> shifts(static_cast<std::size_t>(d), 0.0);
            const MultiPoly scaled = std::pow(eps, n) * substitute_affine(f, shifts, scales);
            const double dist = max_coeff_distance(scaled, top);
            t.check(dist <= eps * f.norm1() && dist <= prev,
                    "instance " + std::to_string(k) + " eps 2^-" + std::to_string(j));
            prev = dist;
        }
    }
    return t.done();
}

PropertyResult poly_json_round_trip(const SuiteContext& ctx) {
    Tally t("poly.json_round_trip");
    for (const auto& e : ctx.corpus) {
        const MultiPoly back = poly_from_json(Json::parse(poly_to_json(e.poly).dump()));
        t.check(back == e.poly, e.id());
    }
    Rng rng(derive_seed(ctx.cfg.seed, 106));
    for (int k = 0; k < 30; ++k) {
        MultiPoly f(1 + k % 3);
        for (int s = 0; s < 5; ++s) {
            ExponentVector ex(static_cast<std::size_t>(f.nvars()));
            for (auto& x : ex) x = rng.integer(0, 5);
            f += MultiPoly::monomial(ex, Complex(rng.uniform(-1e3, 1e3), rng.uniform(-1e-3, 1e-3)));
        }
        t.check(poly_from_json(Json::parse(poly_to_json(f).dump())) == f, "random " + std::to_string(k));
    }
    return t.done();
}

// ------------------------------------------------------------------ uni

PropertyResult uni_roots_recovered(const SuiteContext& ctx) {
    Tally t("uni.roots_recovered");
    Rng rng(derive_seed(ctx.cfg.seed, 201));
    for (int k = 0; k < 50; ++k) {
        std::vector<double> roots;
        const UniPoly p = real_rooted_with_gap(rng, 1 + k % 12, 0.1, roots);
        const RootReport rep = all_roots(p);
        std::vector<double> got;
        for (const Complex& r : rep.roots) got.push_back(r.real());
        double max_im = 0.0;
        for (const Complex& r : rep.roots) max_im = std::max(max_im, std::abs(r.imag()));
        std::sort(roots.begin(), roots.end());
        std::sort(got.begin(), got.end());
        double bound = 0.0;
        for (double r : roots) bound = std::max(bound, std::abs(r));
        bound = 1e-6 * (1.0 + bound);
        bool ok = got.size() == roots.size() && max_im <= bound;
        for (std::size_t i = 0; ok && i < got.size(); ++i) ok = std::abs(got[i] - roots[i]) <= bound;
        t.check(ok, "degree " + std::to_string(roots.size()));
    }
    return t.done();
}

PropertyResult uni_product_membership(const SuiteContext& ctx) {
    Tally t("uni.product_membership");
    Rng rng(derive_seed(ctx.cfg.seed, 202));
    const auto make = [&](bool member) {
        const int deg = rng.integer(1, 4);
        UniPoly p(std::vector<Complex>{1.0});
        const int bad = member ? -1 : rng.integer(0, deg - 1);
        for (int j = 0; j < deg; ++j) {
            double im = 0.0;
            if (j == bad) im = rng.uniform(0.1, 2.0);
            else if (rng.canonical() < 0.5) im = -rng.uniform(0.1, 2.0);
            p = p * UniPoly(std::vector<Complex>{-Complex(rng.uniform(-3.0, 3.0), im), 1.0});
        }
        return p;
    };
    for (int k = 0; k < 100; ++k) {
        const bool mp = k % 2 == 0, mq = (k / 2) % 2 == 0;
        const UniPoly p = make(mp), q = make(mq);
        const bool prod = accepts_member(in_u1(p * q));
        t.check(accepts_member(in_u1(p)) == mp && accepts_member(in_u1(q)) == mq && prod == (mp && mq),
                "pair " + std::to_string(k));
    }
    return t.done();
}

PropertyResult uni_derivative_interlaces(const SuiteContext& ctx) {
    Tally t("uni.derivative_interlaces");
    Rng rng(derive_seed(ctx.cfg.seed, 203));
    for (int k = 0; k < 50; ++k) {
        std::vector<double> roots;
        const UniPoly f = real_rooted_with_gap(rng, 2 + k % 8, 0.1, roots);
        t.check(interlace_classify(f, derivative(f)) == InterlaceRelation::FArrowG,
                "degree " + std::to_string(f.degree()));
    }
    return t.done();
}

PropertyResult uni_hb_round_trip(const SuiteContext& ctx) {
    Tally t("uni.hb_round_trip");
    Rng rng(derive_seed(ctx.cfg.seed, 204));
    for (int k = 0; k < 50; ++k) {
        std::vector<Complex> c;
        for (int j = 0; j <= 1 + k % 6; ++j) c.emplace_back(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
        const UniPoly p(c);
        const HBSplit s = hb_split(p);
        t.check(s.real + Complex(0.0, 1.0) * s.imag == p, "instance " + std::to_string(k));
    }
    return t.done();
}

// ------------------------------------------------------------------ hand examples

PropertyResult hand_stable_examples(const SuiteContext& ctx) {
    Tally t("hand.stable_examples");
    for (int d = 1; d <= 4; ++d) {
        MultiPoly f(d);
        for (int i = 0; i < d; ++i) f += MultiPoly::variable(d, i);
        const Verdict v = test_stable(f, ctx.cfg);
        t.check(v.tag == VerdictTag::StableLikely && !v.witness,
                verdict_note("sum of " + std::to_string(d) + " variables", v));
    }
    const MultiPoly g = MultiPoly::variable(2, 0) * MultiPoly::variable(2, 1) - MultiPoly::constant(2, 1.0);
    const Verdict v = test_stable(g, ctx.cfg);
    t.check(v.tag == VerdictTag::StableLikely && !v.witness, verdict_note("x1 x2 - 1", v));
    return t.done();
}

PropertyResult hand_unstable_examples(const SuiteContext& ctx) {
    Tally t("hand.unstable_examples");
    const MultiPoly a = MultiPoly::variable(2, 0) * MultiPoly::variable(2, 1) + MultiPoly::constant(2, 1.0);
    const MultiPoly b = MultiPoly::variable(1, 0) - MultiPoly::constant(1, Complex(0.0, 1.0));
    for (const auto& [name, f] : {std::pair{"1 + x y", a}, std::pair{"x - i", b}}) {
        const Verdict v = test_stable(f, ctx.cfg);
        t.check(v.tag == VerdictTag::UnstableWitness && v.witness && v.witness->root.imag() > 1e-2,
                verdict_note(name, v));
    }
    return t.done();
}

// ------------------------------------------------------------------ closure

template <class Transform>
PropertyResult closure(const SuiteContext& ctx, const std::string& id, Transform transform) {
    Tally t(id);
    for (std::size_t k = 0; k < ctx.corpus.size(); ++k) {
        const CorpusEntry& e = ctx.corpus[k];
        Rng rng(derive_seed(ctx.cfg.seed, 0x1000 + k));
        for (const auto& [what, g] : transform(e, rng)) {
            const Verdict v = test_stable(g, ctx.cfg);
            t.check(v.stable_or_zero(), verdict_note(e.id() + " " + what, v));
        }
    }
    return t.done();
}

using Images = std::vector<std::pair<std::string, MultiPoly>>;

PropertyResult closure_derivative(const SuiteContext& ctx) {
    return closure(ctx, "closure.derivative", [](const CorpusEntry& e, Rng&) {
        Images out;
        for (int i = 0; i < e.poly.nvars(); ++i)
            out.emplace_back("d/dx" + std::to_string(i), partial_derivative(e.poly, i));
        return out;
    });
}

PropertyResult closure_reverse_var(const SuiteContext& ctx) {
    return closure(ctx, "closure.reverse_var", [](const CorpusEntry& e, Rng&) {
        Images out;
        for (int i = 0; i < e.poly.nvars(); ++i)
            out.emplace_back("reverse x" + std::to_string(i), reverse_var(e.poly, i));
        return out;
    });
}

PropertyResult closure_full_reverse(const SuiteContext& ctx) {
    return closure(ctx, "closure.full_reverse", [](const CorpusEntry& e, Rng&) {
        Images out;
        if (is_real_member(e)) out.emplace_back("full reverse", full_reverse(e.poly.real_part()));
        return out;
    });
}

PropertyResult closure_product(const SuiteContext& ctx) {
    Tally t("closure.product");
    const auto partner = partners(ctx.corpus);
    for (std::size_t i = 0; i < partner.size(); ++i) {
        const std::size_t j = partner[i];
        if (j == i) continue;
        const Verdict v = test_stable(ctx.corpus[i].poly * ctx.corpus[j].poly, ctx.cfg);
        t.check(v.stable_or_zero(), verdict_note(ctx.corpus[i].id() + " * " + ctx.corpus[j].id(), v));
    }
    return t.done();
}

PropertyResult closure_specialize(const SuiteContext& ctx) {
    return closure(ctx, "closure.specialize", [](const CorpusEntry& e, Rng& rng) {
        Images out;
        for (int i = 0; i < e.poly.nvars() && e.poly.nvars() > 1; ++i)
            out.emplace_back("x" + std::to_string(i) + " := real", specialize(e.poly, i, rng.uniform(-5.0, 5.0)));
        return out;
    });
}

PropertyResult closure_substitute_affine(const SuiteContext& ctx) {
    return closure(ctx, "closure.substitute_affine", [](const CorpusEntry& e, Rng& rng) {
        Images out;
        const auto d = static_cast<std::size_t>(e.poly.nvars());
        std::vector<double> scales(d);
        std::vector<Complex> real_shift(d), upper_shift(d);
        for (std::size_t i = 0; i < d; ++i) {
            scales[i] = rng.log_uniform(0.1, 10.0);
            real_shift[i] = rng.uniform(-3.0, 3.0);
            upper_shift[i] = Complex(rng.uniform(-3.0, 3.0), rng.uniform(0.0, 2.0));
        }
        out.emplace_back("real shift", substitute_affine(e.poly, real_shift, scales));
        out.emplace_back("upper shift", substitute_affine(e.poly, upper_shift, scales));
        return out;
    });
}

PropertyResult closure_merge(const SuiteContext& ctx) {
    return closure(ctx, "closure.merge_variables", [](const CorpusEntry& e, Rng&) {
        Images out;
        const int d = e.poly.nvars();
        for (int j = 1; j < d; ++j) out.emplace_back("x" + std::to_string(j) + " := x0", merge_variables(e.poly, 0, j));
        return out;
    });
}

PropertyResult closure_shift_new_variable(const SuiteContext& ctx) {
    return closure(ctx, "closure.shift_new_variable", [](const CorpusEntry& e, Rng&) {
        Images out;
        if (e.poly.nvars() > 0) out.emplace_back("x0 + y", shift_by_new_variable(e.poly, 0));
        return out;
    });
}

PropertyResult closure_top_form(const SuiteContext& ctx) {
    return closure(ctx, "closure.top_form", [](const CorpusEntry& e, Rng&) {
        Images out;
        if (!e.poly.is_zero()) out.emplace_back("top form", top_form(e.poly));
        return out;
    });
}

PropertyResult closure_coefficient_slice(const SuiteContext& ctx) {
    return closure(ctx, "closure.coefficient_slice", [](const CorpusEntry& e, Rng&) {
        Images out;
        if (e.poly.nvars() < 2) return out;
        for (int i = 0; i < e.poly.nvars(); ++i)
            for (int k = 0; k <= e.poly.degree_in(i); ++k)
                out.emplace_back("slice x" + std::to_string(i) + "^" + std::to_string(k),
                                 coefficient_slice(e.poly, i, k));
        return out;
    });
}

// ------------------------------------------------------------------ interlacing

// Members that are not constants, each with a variable it actually depends on.
std::vector<std::pair<std::size_t, int>> nonconstant_members(const std::vector<CorpusEntry>& c) {
    std::vector<std::pair<std::size_t, int>> out;
    for (std::size_t k = 0; k < c.size(); ++k)
        for (int i = 0; i < c[k].poly.nvars(); ++i)
            if (c[k].poly.degree_in(i) > 0) {
                out.emplace_back(k, i);
                break;
            }
    return out;
}

PropertyResult interlacing_derivative(const SuiteContext& ctx) {
    Tally t("interlacing.derivative");
    for (const auto& e : ctx.corpus)
        for (int i = 0; i < e.poly.nvars(); ++i) {
            const Verdict v = test_interlace(e.poly, partial_derivative(e.poly, i), ctx.cfg);
            t.check(v.stable_or_zero(), verdict_note(e.id() + " <-- d/dx" + std::to_string(i), v));
        }
    return t.done();
}

PropertyResult interlacing_directional_derivative(const SuiteContext& ctx) {
    Tally t("interlacing.directional_derivative");
    for (std::size_t k = 0; k < ctx.corpus.size(); ++k) {
        const MultiPoly& f = ctx.corpus[k].poly;
        Rng rng(derive_seed(ctx.cfg.seed, 0x2000 + k));
        const double sign = k % 2 == 0 ? 1.0 : -1.0;
        MultiPoly g(f.nvars());
        for (int i = 0; i < f.nvars(); ++i) g += Complex(sign * rng.uniform(0.1, 2.0)) * partial_derivative(f, i);
        // Same-sign negative weights interlace the other way round.
        const Verdict v = sign > 0 ? test_interlace(f, g, ctx.cfg) : test_interlace(f, -g, ctx.cfg);
        t.check(v.stable_or_zero(), verdict_note(ctx.corpus[k].id(), v));
    }
    return t.done();
}

PropertyResult interlacing_basic(const SuiteContext& ctx) {
    Tally t("interlacing.basic_rules");
    const auto members = nonconstant_members(ctx.corpus);
    const auto partner = partners(ctx.corpus);
    for (std::size_t m = 0; m < members.size(); m += 2) {
        const auto [k, i] = members[m];
        const MultiPoly& g = ctx.corpus[k].poly;
        const MultiPoly dg = partial_derivative(g, i);
        const MultiPoly& f = ctx.corpus[partner[k]].poly;
        Rng rng(derive_seed(ctx.cfg.seed, 0x3000 + k));
        const MultiPoly ell = positive_linear_form(rng, g.nvars());
        const std::string id = ctx.corpus[k].id();

        // (1) f g <-- f h iff g <-- h. With h = dg both sides hold; with
        // h = -dg a witness for g + y h is also one for f g + y f h.
        t.check(interlace_ok(f * g, f * dg, ctx.cfg) && interlace_ok(g, dg, ctx.cfg), id + " rule 1");
        const Verdict bad = test_interlace(g, -dg, ctx.cfg);
        if (bad.witness) {
            const MultiPoly form = interlace_form(f * g, -(f * dg));
            const UniPoly p = restrict_line(form, bad.witness->line);
            const auto mag = restrict_line_magnitude(form, bad.witness->line);
            // The witness point must be a zero of the product form: |p(root)|
            // small against the magnitude polynomial at |root|.
            const Complex r = bad.witness->root;
            double bound = 0.0;
            for (auto it = mag.rbegin(); it != mag.rend(); ++it) bound = bound * std::abs(r) + *it;
            const double value = p.is_zero() ? 0.0 : std::abs(p.evaluate(r));
            t.check(r.imag() > 0.0 && value <= 1e-8 * bound, id + " rule 1 witness transfer");
        }
        // (2) g <-- dg  implies  dg <-- -g.
        t.check(interlace_ok(dg, -g, ctx.cfg), id + " rule 2");
        // (3) g <-- dg and g <-- g  imply  g <-- dg + g.
        t.check(interlace_ok(g, dg + g, ctx.cfg), id + " rule 3");
        // (4) g <-- dg and ell dg <-- dg  imply  g + ell dg <-- dg.
        t.check(interlace_ok(g + ell * dg, dg, ctx.cfg), id + " rule 4");
        // (5) ell g <-- g <-- dg  implies  ell g - dg <-- g.
        t.check(interlace_ok(ell * g - dg, g, ctx.cfg), id + " rule 5");
    }
    return t.done();
}

PropertyResult interlacing_adjacent(const SuiteContext& ctx) {
    Tally t("interlacing.adjacent_coefficients");
    for (const auto& e : ctx.corpus) {
        const int d = e.poly.nvars();
        if (d < 2) continue;
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < e.poly.degree_in(i); ++k) {
                const MultiPoly a = coefficient_slice(e.poly, i, k);
                const MultiPoly b = coefficient_slice(e.poly, i, k + 1);
                if (a.is_zero() && b.is_zero()) continue;
                const Verdict v = test_interlace(a, b, ctx.cfg);
                t.check(v.stable_or_zero(),
                        verdict_note(e.id() + " slices x" + std::to_string(i) + "^" + std::to_string(k), v));
            }
    }
    return t.done();
}

PropertyResult interlacing_recurrence(const SuiteContext& ctx) {
    Tally t("interlacing.recurrence_chains");
    for (int d = 1; d <= 3; ++d)
        for (std::uint64_t s = 0; s < 4; ++s) {
            const auto chain = recurrence_chain(random_recurrence(d, 10, derive_seed(ctx.cfg.seed, 0x4000 + s), s == 0));
            for (std::size_t k = 1; k + 1 < chain.size(); ++k) {
                const Verdict v = test_interlace(chain[k + 1], chain[k], ctx.cfg);
                t.check(v.stable_or_zero(), verdict_note("d " + std::to_string(d) + " seed " + std::to_string(s) +
                                                             " step " + std::to_string(k), v));
            }
        }
    return t.done();
}

PropertyResult interlacing_reflexive(const SuiteContext& ctx) {
    Tally t("interlacing.reflexive");
    const auto members = nonconstant_members(ctx.corpus);
    for (std::size_t m = 0; m < members.size(); m += 4) {
        const auto [k, i] = members[m];
        const MultiPoly& f = ctx.corpus[k].poly;
        Rng rng(derive_seed(ctx.cfg.seed, 0x5000 + k));
        const double c = rng.log_uniform(0.1, 10.0);
        const MultiPoly g = Complex(c) * f;
        const bool both = interlace_ok(f, g, ctx.cfg) && interlace_ok(g, f, ctx.cfg);
        const auto ratio = proportionality(g, f);
        t.check(both && ratio && std::abs(*ratio - c) <= 1e-8 * c, ctx.corpus[k].id() + " proportional pair");

        const MultiPoly h = partial_derivative(f, i);
        const bool one_fails = !interlace_ok(f, h, ctx.cfg) || !interlace_ok(h, f, ctx.cfg);
        t.check(one_fails && !proportionality(f, h), ctx.corpus[k].id() + " derivative pair");
    }
    return t.done();
}

PropertyResult interlacing_linear_combinations(const SuiteContext& ctx) {
    Tally t("interlacing.linear_combinations");
    const auto members = nonconstant_members(ctx.corpus);
    for (std::size_t m = 0; m < members.size(); m += 10) {
        const auto [k, i] = members[m];
        const MultiPoly& f = ctx.corpus[k].poly;
        const LinearComboResult r = linear_combo_test(f, partial_derivative(f, i), ctx.cfg);
        t.check(r.pass(), ctx.corpus[k].id());
    }
    return t.done();
}

// ------------------------------------------------------------------ determinantal

PropertyResult determinantal_pencils(const SuiteContext& ctx) {
    Tally t("determinantal.pencils");
    for (int k = 0; k < 200; ++k) {
        const int n = 1 + k % 4, d = 1 + (k / 4) % 3;
        const bool with_e = k % 2 == 1;
        const MatrixPencil p = random_pencil(n, d, derive_seed(ctx.cfg.seed, 0x6000 + static_cast<std::uint64_t>(k)), with_e);
        const MultiPoly f = det_pencil_poly(p);
        const Verdict v = test_stable(f, ctx.cfg);
        const std::string id = "pencil " + std::to_string(k);
        t.check(v.tag == VerdictTag::StableLikely, verdict_note(id, v));
        if (!with_e) t.check(coeff_necessary(f, ctx.cfg).pass(), id + " coefficient conditions");
    }
    return t.done();
}

PropertyResult determinantal_cofactor_vs_interpolation(const SuiteContext& ctx) {
    Tally t("determinantal.cofactor_vs_interpolation");
    for (int k = 0; k < 40; ++k) {
        const int n = 1 + k % 4, d = 1 + (k / 4) % 3;
        const MatrixPencil p = random_pencil(n, d, derive_seed(ctx.cfg.seed, 0x6800 + static_cast<std::uint64_t>(k)), k % 2 == 1);
        const MultiPoly a = det_pencil_cofactor(p);
        const MultiPoly b = det_pencil_interpolate(p);
        t.check(max_coeff_distance(a, b) <= 1e-9 * std::max(1.0, a.max_abs_coeff()), "pencil " + std::to_string(k));
    }
    return t.done();
}

PropertyResult determinantal_reversal_example(const SuiteContext& ctx) {
    Tally t("determinantal.reversal_example");
    Rng rng(derive_seed(ctx.cfg.seed, 0x6900));
    for (int k = 0; k < 30; ++k) {
        const int n = 1 + k % 3;
        Eigen::MatrixXd a(n, n);
        do {
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) a(i, j) = a(j, i) = rng.integer(-3, 3);
        } while (std::abs(a.determinant()) < 0.5);
        // |X + A| and |-I + X A| with X = diag(x).
        PolyMatrix m(static_cast<std::size_t>(n), std::vector<MultiPoly>(static_cast<std::size_t>(n), MultiPoly(n)));
        PolyMatrix r = m;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
                m[ui][uj] = MultiPoly::constant(n, a(i, j));
                r[ui][uj] = MultiPoly::variable(n, i, a(i, j));
                if (i == j) {
                    m[ui][uj] += MultiPoly::variable(n, i);
                    r[ui][uj] -= MultiPoly::constant(n, 1.0);
                }
            }
        MultiPoly rev = symbolic_determinant(m, n);
        for (int i = 0; i < n; ++i) rev = reverse_var(rev, i);
        const MultiPoly target = symbolic_determinant(r, n);
        t.check(rev == target || rev == -target, "n " + std::to_string(n) + " instance " + std::to_string(k));
    }
    return t.done();
}

PropertyResult determinantal_johnson(const SuiteContext& ctx) {
    Tally t("determinantal.johnson");
    for (int k = 0; k < 50; ++k) {
        const int n = 1 + k % 3, d = 1 + (k / 3) % 2;
        const auto ls = random_johnson_instance(n, 2, d, derive_seed(ctx.cfg.seed, 0x7000 + static_cast<std::uint64_t>(k)));
        const MultiPoly f = johnson_sum(ls);
        const Verdict v = test_stable(f, ctx.cfg);
        const std::string id = "instance " + std::to_string(k);
        t.check(v.tag == VerdictTag::StableLikely, verdict_note(id, v));
        t.check(f == johnson_by_extraction(ls), id + " extraction");
    }
    return t.done();
}

PropertyResult determinantal_separability(const SuiteContext& ctx) {
    Tally t("determinantal.separability");
    Rng rng(derive_seed(ctx.cfg.seed, 0x7100));
    const auto even_real_rooted = [&](int pairs) {
        MultiPoly p = MultiPoly::constant(1, rng.uniform(0.5, 2.0));
        for (int j = 0; j < pairs; ++j) {
            const double r = rng.uniform(0.2, 3.0);
            p = p * (MultiPoly::monomial({2}, 1.0) - MultiPoly::constant(1, r * r));
        }
        return p;
    };
    for (int k = 0; k < 40; ++k) {
        const MultiPoly f = outer(even_real_rooted(1 + k % 3), even_real_rooted(1 + (k / 3) % 3));
        const auto gh = separability_check(f);
        t.check(gh && max_coeff_distance(outer(gh->first, gh->second), f) <= 1e-10 * f.max_abs_coeff(),
                "instance " + std::to_string(k));
    }
    const MultiPoly x2 = MultiPoly::monomial({2, 0}, 1.0), y2 = MultiPoly::monomial({0, 2}, 1.0);
    t.check(!separability_check(x2 + y2), "x^2 + y^2");
    t.check(!separability_check(x2 * y2 + MultiPoly::constant(2, 1.0)), "x^2 y^2 + 1");
    return t.done();
}

// ------------------------------------------------------------------ bilinear

PropertyResult bilinear_agreement(const SuiteContext& ctx) {
    Tally t("bilinear.exact_vs_sampled");
    Rng rng(derive_seed(ctx.cfg.seed, 0x8000));
    for (int k = 0; k < 200; ++k) {
        MultiPoly f(2);
        f.add_term({0, 0}, rng.uniform(-2.0, 2.0));
        f.add_term({1, 0}, rng.uniform(-2.0, 2.0));
        f.add_term({0, 1}, rng.uniform(-2.0, 2.0));
        f.add_term({1, 1}, rng.uniform(-2.0, 2.0));
        if (std::abs(bilinear_determinant(f)) < 1e-6) continue;
        const bool exact = bilinear_exact(f) != BilinearVerdict::Unstable;
        const Verdict v = test_stable(f, ctx.cfg);
        t.check(exact == v.stable_or_zero(), verdict_note("instance " + std::to_string(k) + " " + to_string(f), v));
    }
    return t.done();
}

// ------------------------------------------------------------------ coefficients

PropertyResult coefficients_corpus(const SuiteContext& ctx) {
    Tally t("coefficients.corpus");
    for (const auto& e : ctx.corpus)
        if (is_real_member(e)) t.check(coeff_necessary(e.poly.real_part(), ctx.cfg).pass(), e.id());
    return t.done();
}

PropertyResult coefficients_counterexample(const SuiteContext& ctx) {
    Tally t("coefficients.one_plus_xy");
    const MultiPoly f = MultiPoly::variable(2, 0) * MultiPoly::variable(2, 1) + MultiPoly::constant(2, 1.0);
    const CoeffReport r = coeff_necessary(f, ctx.cfg);
    bool found = false;
    for (const auto& c : r.grid_inequality)
        if (c.r == 0 && c.s == 0) found = !c.pass && c.value == 1.0;
    t.check(!r.pass(), "1 + x y passes");
    t.check(found, "cell (0,0) missing or not equal to +1");
    return t.done();
}

// ------------------------------------------------------------------ Hermite-Biehler

PropertyResult hb_corpus(const SuiteContext& ctx) {
    Tally t("hb.corpus");
    for (const auto& e : ctx.corpus) {
        const HBReport r = hb_test(e.poly, ctx.cfg);
        t.check(r.agree(), verdict_note(e.id() + " split", r.split) + "; " + verdict_note("direct", r.direct));
    }
    return t.done();
}

PropertyResult hb_combinations(const SuiteContext& ctx) {
    Tally t("hb.combinations");
    const auto members = nonconstant_members(ctx.corpus);
    int made = 0;
    for (std::size_t m = 0; m < members.size() && made < 50; m += 3) {
        const auto [k, i] = members[m];
        if (!is_real_member(ctx.corpus[k])) continue;
        const MultiPoly g = ctx.corpus[k].poly.real_part();
        Rng rng(derive_seed(ctx.cfg.seed, 0x9000 + k));
        const double c = (made % 2 == 0 ? 1.0 : -1.0) * rng.log_uniform(0.1, 10.0);
        const MultiPoly f = g + Complex(0.0, c) * partial_derivative(g, i);
        const HBReport r = hb_test(f, ctx.cfg);
        t.check(r.agree(), verdict_note(ctx.corpus[k].id() + " split", r.split) + "; " + verdict_note("direct", r.direct));
        ++made;
    }
    return t.done();
}

// ------------------------------------------------------------------ Rayleigh

PropertyResult rayleigh_corpus(const SuiteContext& ctx) {
    Tally t("rayleigh.corpus");
    for (const auto& e : ctx.corpus) {
        if (!is_real_member(e) || !is_multiaffine(e.poly) || e.poly.nvars() < 1) continue;
        const auto pts = default_rayleigh_points(e.poly.nvars(), ctx.cfg.seed);
        const RayleighResult r = rayleigh_check_all(e.poly.real_part(), pts);
        t.check(r.min_value >= -1e-8, e.id() + " min " + std::to_string(r.min_value));
    }
    return t.done();
}

PropertyResult rayleigh_counterexample(const SuiteContext& ctx) {
    Tally t("rayleigh.one_plus_xy");
    const MultiPoly f = MultiPoly::variable(2, 0) * MultiPoly::variable(2, 1) + MultiPoly::constant(2, 1.0);
    const RayleighResult r = rayleigh_check_all(f, default_rayleigh_points(2, ctx.cfg.seed));
    t.check(r.min_value == -1.0, "min " + std::to_string(r.min_value));
    return t.done();
}

// ------------------------------------------------------------------ operators

PropertyResult operators_neg_partial_closure(const SuiteContext& ctx) {
    Tally t("operators.neg_partial_closure");
    const auto partner = partners(ctx.corpus);
    int done = 0;
    for (std::size_t i = 0; i < partner.size() && done < 100; ++i) {
        const std::size_t j = partner[i];
        if (j == i) continue;
        ++done;
        const Verdict v = test_stable(apply_neg_partial(ctx.corpus[i].poly, ctx.corpus[j].poly), ctx.cfg);
        t.check(v.stable_or_zero(), verdict_note(ctx.corpus[i].id() + "(-d) " + ctx.corpus[j].id(), v));
    }
    return t.done();
}

PropertyResult operators_exp_examples(const SuiteContext&) {
    Tally t("operators.exp_neg_mixed_examples");
    const MultiPoly xy = MultiPoly::monomial({1, 1}, 1.0);
    t.check(exp_neg_mixed(xy) == xy - MultiPoly::constant(2, 1.0), "x y");
    const MultiPoly x2y2 = MultiPoly::monomial({2, 2}, 1.0);
    t.check(exp_neg_mixed(x2y2) == x2y2 - Complex(4.0) * xy + MultiPoly::constant(2, 2.0), "x^2 y^2");
    const MultiPoly lin = MultiPoly::variable(2, 0) + MultiPoly::variable(2, 1);
    t.check(exp_neg_mixed(lin) == lin, "x + y");
    return t.done();
}

PropertyResult operators_exp_closure(const SuiteContext& ctx) {
    Tally t("operators.exp_neg_mixed_closure");
    for (const auto& e : ctx.corpus) {
        const int d = e.poly.nvars();
        if (d < 2 || d % 2 != 0) continue;
        const MultiPoly g = exp_neg_mixed(e.poly);
        const Verdict v = test_stable(g, ctx.cfg);
        t.check(v.stable_or_zero(), verdict_note(e.id(), v));
        // Swapping the blocks, and (for larger blocks) rotating the pairs.
        const int b = d / 2;
        std::vector<int> swap(static_cast<std::size_t>(d)), rot(static_cast<std::size_t>(d));
        for (int i = 0; i < b; ++i) {
            swap[static_cast<std::size_t>(i)] = b + i;
            swap[static_cast<std::size_t>(b + i)] = i;
            rot[static_cast<std::size_t>(i)] = (i + 1) % b;
            rot[static_cast<std::size_t>(b + i)] = b + (i + 1) % b;
        }
        for (const auto& perm : {swap, rot}) {
            const MultiPoly lhs = exp_neg_mixed(permute_variables(e.poly, perm));
            const MultiPoly rhs = permute_variables(g, perm);
            t.check(max_coeff_distance(lhs, rhs) <= 1e-12 * std::max(1.0, g.max_abs_coeff()), e.id() + " permutation");
        }
    }
    return t.done();
}

PropertyResult operators_exp_identity(const SuiteContext& ctx) {
    Tally t("operators.exp_identity");
    Rng rng(derive_seed(ctx.cfg.seed, 0xA000));
    for (int k = 0; k < 40; ++k) {
        const int d = 1 + k % 2;
        const MultiPoly f = random_poly(rng, d, 4, 4 / d, true);
        const MultiPoly g = random_poly(rng, d, 4, 4 / d, true);
        // g(x) f(y) in 2d variables, x block first.
        std::vector<int> shift(static_cast<std::size_t>(2 * d));
        for (int i = 0; i < d; ++i) {
            shift[static_cast<std::size_t>(i)] = d + i;
            shift[static_cast<std::size_t>(d + i)] = i;
        }
        const MultiPoly gf = extend_variables(g, d) * permute_variables(extend_variables(f, d), shift);
        MultiPoly lhs = exp_neg_mixed(gf);
        for (int i = 0; i < d; ++i) lhs = specialize(lhs, d, 0.0);
        t.check(lhs == apply_neg_partial(f, g), "instance " + std::to_string(k));
    }
    return t.done();
}

PropertyResult operators_preserver(const SuiteContext& ctx) {
    Tally t("operators.preserver");
    const MultiPoly x = MultiPoly::variable(2, 0), v = MultiPoly::variable(2, 1);
    const MultiPoly one = MultiPoly::constant(2, 1.0);
    std::vector<MultiPoly> inputs;
    for (const auto& e : ctx.corpus)
        if (e.poly.nvars() == 1) inputs.push_back(e.poly);

    const PreserverReport a = preserver_test(DiffOperatorSymbol(x + v, 1), ctx.cfg, inputs);
    t.check(a.symbol_verdict.tag == VerdictTag::StableLikely, verdict_note("x + v", a.symbol_verdict));
    const PreserverReport c = preserver_test(DiffOperatorSymbol(x * v - one, 1), ctx.cfg, inputs);
    t.check(c.symbol_verdict.tag == VerdictTag::StableLikely, verdict_note("x v - 1", c.symbol_verdict));
    const PreserverReport b = preserver_test(DiffOperatorSymbol(one + x * v, 1), ctx.cfg, inputs);
    t.check(b.symbol_verdict.tag == VerdictTag::UnstableWitness, verdict_note("1 + x v", b.symbol_verdict));
    t.check(b.counterexample.has_value(), "1 + x v: no corpus counterexample");
    if (b.counterexample) {
        const MultiPoly& g = inputs[*b.counterexample];
        const MultiPoly expect = g - MultiPoly::variable(1, 0) * partial_derivative(g, 0);
        t.check(b.image && *b.image == expect, "1 + x v image differs from g - x g'");
    }
    return t.done();
}

// True iff every 2x2 minor of the table vanishes (relative 1e-10).
bool rank_one_oracle(const std::vector<std::vector<double>>& a) {
    const std::size_t n = a.size(), m = a[0].size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k < n; ++k)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t l = j + 1; l < m; ++l) {
                    const double p = a[i][j] * a[k][l], q = a[i][l] * a[k][j];
                    if (std::abs(p - q) > 1e-10 * std::max(std::abs(p), std::abs(q))) return false;
                }
    return true;
}

PropertyResult operators_diagonal_factor(const SuiteContext& ctx) {
    Tally t("operators.diagonal_factor");
    Rng rng(derive_seed(ctx.cfg.seed, 0xB000));
    for (int k = 0; k < 100; ++k) {
        std::vector<double> u(5), w(5);
        for (auto& x : u) x = (rng.canonical() < 0.5 ? -1.0 : 1.0) * rng.log_uniform(0.5, 2.0);
        for (auto& x : w) x = (rng.canonical() < 0.5 ? -1.0 : 1.0) * rng.log_uniform(0.5, 2.0);
        std::vector<std::vector<double>> a(5, std::vector<double>(5));
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) a[i][j] = u[i] * w[j];
        if (k % 2 == 1) a[static_cast<std::size_t>(rng.integer(0, 4))][static_cast<std::size_t>(rng.integer(0, 4))] *= 1.0 + rng.uniform(0.01, 0.5);
        const DiagonalFactorResult r = diagonal_factor(diagonal_from_table(a));
        const bool oracle = rank_one_oracle(a);
        bool ok = r.factors.has_value() == oracle;
        if (ok && r.factors) {
            const auto& s = *r.factors;
            for (std::size_t i = 0; i < 5; ++i)
                for (std::size_t j = 0; j < 5; ++j)
                    ok = ok && std::abs(s[0][i] * s[1][j] - a[i][j]) <= 1e-10 * std::abs(a[i][j]);
        }
        t.check(ok, "grid " + std::to_string(k));
    }
    return t.done();
}

PropertyResult operators_hermite(const SuiteContext& ctx) {
    Tally t("operators.hermite_map");
    int uni = 0, multi = 0;
    for (const auto& e : ctx.corpus) {
        if (e.poly.nvars() == 1 && is_real_member(e) && uni < 50) {
            ++uni;
            t.check(is_real_rooted(to_uni(hermite_map(e.poly.real_part())), ctx.cfg.tol), e.id());
        } else if (e.poly.nvars() > 1 && multi < 40) {
            ++multi;
            const Verdict v = test_stable(hermite_map(e.poly), ctx.cfg);
            t.check(v.stable_or_zero(), verdict_note(e.id(), v));
        }
    }
    t.check(uni == 50, "fewer than 50 univariate real members");
    return t.done();
}

}  // namespace

const std::vector<Property>& suite_properties() {
    static const std::vector<Property> props = [] {
        std::vector<Property> p{
            {"poly.ring_laws", poly_ring_laws},
            {"poly.reverse_twice", poly_reverse_twice},
            {"poly.full_reverse_involution", poly_full_reverse_involution},
            {"poly.restrict_line", poly_restrict_line},
            {"poly.top_form_limit", poly_top_form_limit},
            {"poly.json_round_trip", poly_json_round_trip},
            {"uni.roots_recovered", uni_roots_recovered},
            {"uni.product_membership", uni_product_membership},
            {"uni.derivative_interlaces", uni_derivative_interlaces},
            {"uni.hb_round_trip", uni_hb_round_trip},
            {"hand.stable_examples", hand_stable_examples},
            {"hand.unstable_examples", hand_unstable_examples},
            {"closure.derivative", closure_derivative},
            {"closure.reverse_var", closure_reverse_var},
            {"closure.full_reverse", closure_full_reverse},
            {"closure.product", closure_product},
            {"closure.specialize", closure_specialize},
            {"closure.substitute_affine", closure_substitute_affine},
            {"closure.merge_variables", closure_merge},
            {"closure.shift_new_variable", closure_shift_new_variable},
            {"closure.top_form", closure_top_form},
            {"closure.coefficient_slice", closure_coefficient_slice},
            {"interlacing.derivative", interlacing_derivative},
            {"interlacing.directional_derivative", interlacing_directional_derivative},
            {"interlacing.basic_rules", interlacing_basic},
            {"interlacing.adjacent_coefficients", interlacing_adjacent},
            {"interlacing.recurrence_chains", interlacing_recurrence},
            {"interlacing.reflexive", interlacing_reflexive},
            {"interlacing.linear_combinations", interlacing_linear_combinations},
            {"determinantal.pencils", determinantal_pencils},
            {"determinantal.cofactor_vs_interpolation", determinantal_cofactor_vs_interpolation},
            {"determinantal.reversal_example", determinantal_reversal_example},
            {"determinantal.johnson", determinantal_johnson},
            {"determinantal.separability", determinantal_separability},
            {"bilinear.exact_vs_sampled", bilinear_agreement},
            {"coefficients.corpus", coefficients_corpus},
            {"coefficients.one_plus_xy", coefficients_counterexample},
            {"hb.corpus", hb_corpus},
            {"hb.combinations", hb_combinations},
            {"rayleigh.corpus", rayleigh_corpus},
            {"rayleigh.one_plus_xy", rayleigh_counterexample},
            {"operators.neg_partial_closure", operators_neg_partial_closure},
            {"operators.exp_neg_mixed_examples", operators_exp_examples},
            {"operators.exp_neg_mixed_closure", operators_exp_closure},
            {"operators.exp_identity", operators_exp_identity},
            {"operators.preserver", operators_preserver},
            {"operators.diagonal_factor", operators_diagonal_factor},
            {"operators.hermite_map", operators_hermite},
        };
        std::sort(p.begin(), p.end(), [](const Property& a, const Property& b) { return a.id < b.id; });
        return p;
    }();
    return props;
}

std::vector<PropertyResult> run_suite(const SuiteContext& ctx, const std::string& filter, unsigned threads) {
    std::vector<const Property*> selected;
    for (const auto& p : suite_properties())
        if (filter.empty() || p.id.find(filter) != std::string::npos) selected.push_back(&p);

    std::vector<PropertyResult> results(selected.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(selected.size(), 1)));
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t k = next++; k < selected.size(); k = next++) {
            try {
                results[k] = selected[k]->run(ctx);
            } catch (const std::exception& e) {
                results[k] = {selected[k]->id, false, 0, 1, std::string("exception: ") + e.what()};
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return results;
}

Json suite_report(const std::vector<PropertyResult>& results) {
    Json list = Json::array();
    int passed = 0;
    for (const auto& r : results) {
        passed += r.passed ? 1 : 0;
        list.push_back({{"id", r.id}, {"passed", r.passed}, {"checked", r.checked}, {"failed", r.failed},
                        {"detail", r.detail}});
    }
    return {{"passed", passed}, {"failed", static_cast<int>(results.size()) - passed}, {"results", std::move(list)}};
}

}  // namespace stabpoly
