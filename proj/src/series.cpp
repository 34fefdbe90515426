#include "chord/series.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "chord/enumerate.hpp"
#include "chord/patterns.hpp"
#include "chord/structure.hpp"

namespace chord {

std::string op_name(Op op) { return op == Op::Bin ? "bin" : "div"; }

Op parse_op(const std::string& s) {
    if (s == "bin") return Op::Bin;
    if (s == "div") return Op::Div;
    throw std::invalid_argument("unknown operator '" + s + "' (expected bin or div)");
}

static YPolynomial apply_basis(const YPolynomial& p, bool binomial) {
    if (p.degree() + 1 > kMaxIndex)
        throw std::out_of_range("operator input degree exceeds truncation bound");
    YPolynomial out;
    for (int n = 0; n <= p.degree(); ++n) {
        if (p[n].is_zero()) continue;
        std::vector<WeightPolynomial> c(n + 2);
        for (int i = 1; i <= n + 1; ++i) {
            WeightPolynomial t = WeightPolynomial::f(n + 1 - i) * p[n];
            if (binomial) t *= factorial(n) / factorial(i);
            c[i] = t;
        }
        out += YPolynomial(std::move(c));
    }
    return out;
}

YPolynomial l_bin(const YPolynomial& p) { return apply_basis(p, true); }
YPolynomial l_div(const YPolynomial& p) { return apply_basis(p, false); }
YPolynomial apply_op(Op op, const YPolynomial& p) { return op == Op::Bin ? l_bin(p) : l_div(p); }

namespace {

using Tensor = std::map<std::pair<int, int>, WeightPolynomial>;

mpq_class weight(Coalgebra co, int n, int k) {
    if (co == Coalgebra::DividedPower) return 1;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return mpq_class(b);
}

void add(Tensor& t, int a, int b, const WeightPolynomial& w) {
    if (w.is_zero()) return;
    auto& slot = t[{a, b}];
    slot += w;
    if (slot.is_zero()) t.erase({a, b});
}

Tensor coproduct(Coalgebra co, const YPolynomial& p) {
    Tensor t;
    for (int i = 0; i <= p.degree(); ++i)
        for (int k = 0; k <= i; ++k) add(t, k, i - k, p[i] * weight(co, i, k));
    return t;
}

std::string tensor_text(const Tensor& t) {
    std::string s;
    for (const auto& [e, w] : t) {
        if (!s.empty()) s += " + ";
        s += "(" + w.to_string() + ")*y^" + std::to_string(e.first) + "(x)y^" + std::to_string(e.second);
    }
    return s.empty() ? "0" : s;
}

}  // namespace

CheckResult check_cocycle(Coalgebra co, Op op, int n_max) {
    for (int n = 0; n <= n_max; ++n) {
        Tensor lhs = coproduct(co, apply_op(op, YPolynomial::power(n)));
        Tensor rhs;
        for (int k = 0; k <= n; ++k) {
            YPolynomial right = apply_op(op, YPolynomial::power(n - k));
            for (int j = 0; j <= right.degree(); ++j) add(rhs, k, j, right[j] * weight(co, n, k));
        }
        YPolynomial whole = apply_op(op, YPolynomial::power(n));
        for (int j = 0; j <= whole.degree(); ++j) add(rhs, j, 0, whole[j]);
        if (lhs != rhs) {
            return {false, "basis y^" + std::to_string(n) + ": Delta(L y^n) = " + tensor_text(lhs) +
                               " but (id(x)L)Delta(y^n) + L(y^n)(x)1 = " + tensor_text(rhs)};
        }
    }
    return {};
}

PhiValues phi_all_ones(int n) { return PhiValues(n + 1, WeightPolynomial(1)); }

PhiValues phi_covering(int n, int s) {
    PhiValues v(n + 1);
    for (int k = 1; k <= n; ++k) {
        mpz_class b = 0;
        if (k + s >= k + 1) mpz_bin_uiui(b.get_mpz_t(), k + s, k + 1);
        v[k] = WeightPolynomial(mpq_class(b));
    }
    return v;
}

static WeightPolynomial phi_value(const PhiValues& phi, int k) {
    if (k == 0) return 1;
    if (k < static_cast<int>(phi.size())) return phi[k];
    return WeightPolynomial::phi(k);
}

XSeries solve_tree_like(Op op, int n_max, const PhiValues& phi) {
    if (n_max > kMaxIndex) throw std::out_of_range("order exceeds truncation bound");
    XSeries g{n_max, std::vector<YPolynomial>(n_max + 1)};
    if (n_max < 1) return g;
    // pw[k][m] = [x^m] G^k
    std::vector<std::vector<YPolynomial>> pw(n_max + 1, std::vector<YPolynomial>(n_max + 1));
    pw[0][0] = YPolynomial::power(0);
    g.coeff[1] = apply_op(op, YPolynomial::power(0));
    for (int n = 1; n < n_max; ++n) {
        // G is known through x^n; extend G^k to x^n.
        for (int k = 1; k <= n; ++k) {
            YPolynomial acc;
            for (int j = 1; j <= n - (k - 1); ++j) acc += g.coeff[j] * pw[k - 1][n - j];
            pw[k][n] = acc;
        }
        YPolynomial arg;
        for (int k = 1; k <= n; ++k) arg += pw[k][n] * phi_value(phi, k);
        g.coeff[n + 1] = apply_op(op, arg);
    }
    return g;
}

WeightPolynomial f_monomial(const ChordDiagram& c) {
    if (!is_connected(c)) throw DiagramError("weight requires a connected diagram");
    TerminalProfile p = terminal_profile(c);
    WeightPolynomial w = 1;
    for (int i = 0; i < c.size() - p.k; ++i) w = w * WeightPolynomial::f(0);
    for (int g : p.gaps) w = w * WeightPolynomial::f(g);
    return w;
}

WeightPolynomial phi_monomial(const ChordDiagram& c) {
    if (!is_connected(c)) throw DiagramError("weight requires a connected diagram");
    WeightPolynomial w = 1;
    for (int x = 0; x < c.size(); ++x) w = w * WeightPolynomial::phi(valency(c, x));
    return w;
}

XSeries diagram_series(Op op, int n_max, const PhiValues& phi, int jobs) {
    XSeries g{n_max, std::vector<YPolynomial>(n_max + 1)};
    using Tally = std::map<std::pair<Monomial, int>, long>;  // (f_C phi_C, t1) -> multiplicity
    for (int n = 1; n <= n_max; ++n) {
        Tally tally = sweep(
            n, jobs, Tally{},
            [&](const ChordDiagram& c, Tally& acc) {
                if (!is_connected(c)) return;
                if (op == Op::Div && contains_any_top_cycle(c)) return;
                WeightPolynomial w = f_monomial(c) * phi_monomial(c);
                ++acc[{w.terms().begin()->first, first_terminal(c)}];
            },
            [](Tally& a, Tally&& b) {
                for (auto& [key, v] : b) a[key] += v;
            });
        YPolynomial sum;
        for (const auto& [key, count] : tally) {
            const auto& [mono, t1] = key;
            WeightPolynomial w = WeightPolynomial::monomial(mono, count);
            if (!phi.empty()) w = w.substitute_phi(phi);
            if (op == Op::Bin) w *= 1 / factorial(t1 - 1);
            sum += apply_op(op, YPolynomial::power(t1 - 1)) * w;
        }
        g.coeff[n] = sum;
    }
    return g;
}

WeightPolynomial g_coefficient(const XSeries& g, int i, int n) {
    if (n < 1 || n >= static_cast<int>(g.coeff.size())) return {};
    return g.coeff[n][i] * factorial(i);
}

std::optional<std::pair<int, int>> rge_counterexample(const XSeries& g) {
    for (int n = 2; n <= g.order; ++n)
        for (int i = 2; i <= n; ++i) {
            WeightPolynomial rhs;
            for (int m = 1; m <= n - i + 1; ++m)
                rhs += g_coefficient(g, 1, m) * g_coefficient(g, i - 1, n - m) * mpq_class(2 * (n - m) - 1);
            if (rhs != g_coefficient(g, i, n)) return std::pair{i, n};
        }
    return std::nullopt;
}

CheckResult check_rge(Op op, int n_max) {
    XSeries g = solve_tree_like(op, n_max, phi_all_ones(n_max));
    auto bad = rge_counterexample(g);
    if (!bad) return {};
    auto [i, n] = *bad;
    std::ostringstream os;
    os << "i=" << i << " n=" << n << ": g_{i,n} = " << g_coefficient(g, i, n).to_string();
    return {false, os.str()};
}

std::vector<std::vector<WeightPolynomial>> root_share_sums(int n_max, int jobs) {
    std::vector<std::vector<WeightPolynomial>> s(n_max + 1, std::vector<WeightPolynomial>(n_max + 2));
    using Tally = std::map<std::pair<Monomial, int>, long>;
    for (int n = 1; n <= n_max; ++n) {
        Tally tally = sweep(
            n, jobs, Tally{},
            [](const ChordDiagram& c, Tally& acc) {
                if (!is_connected(c)) return;
                ++acc[{f_monomial(c).terms().begin()->first, first_terminal(c)}];
            },
            [](Tally& a, Tally&& b) {
                for (auto& [key, v] : b) a[key] += v;
            });
        for (const auto& [key, count] : tally) {
            const auto& [mono, t1] = key;
            for (int i = 0; i <= t1; ++i)
                s[n][i] += WeightPolynomial::monomial(mono, count) * WeightPolynomial::f(t1 - i);
        }
    }
    return s;
}

CheckResult check_root_share_identity(int n_max, int jobs) {
    auto s = root_share_sums(n_max, jobs);
    for (int n = 2; n <= n_max; ++n)
        for (int i = 1; i <= n; ++i) {
            WeightPolynomial rhs;
            for (int m = 1; m <= n - i + 1 && m < n; ++m)
                rhs += s[m][1] * s[n - m][i - 1] * mpq_class(2 * (n - m) - 1);
            if (rhs != s[n][i]) {
                return {false, "n=" + std::to_string(n) + " i=" + std::to_string(i) + ": lhs " +
                                   s[n][i].to_string() + " rhs " + rhs.to_string()};
            }
        }
    return {};
}

namespace {

std::vector<mpz_class> class_counts(int n_max, const PatternClass& cls, bool connected_only, int jobs) {
    std::vector<mpz_class> out(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        long c = sweep(
            n, jobs, 0L,
            [&](const ChordDiagram& d, long& acc) {
                if (connected_only && (d.size() == 0 || !is_connected(d))) return;
                if (in_class(d, cls)) ++acc;
            },
            [](long& a, long&& b) { a += b; });
        out[n] = c;
    }
    return out;
}

}  // namespace

OgfReport ogf_checks(int n_max, int jobs) {
    OgfReport rep;
    auto note = [&](bool ok, const std::string& s) {
        rep.ok = rep.ok && ok;
        rep.lines.push_back(std::string(ok ? "ok   " : "FAIL ") + s);
    };

    // Stein recurrence against enumerated connected counts.
    auto conn = class_counts(n_max, PatternClass{}, true, jobs);
    for (int n = 2; n <= n_max; ++n) {
        mpz_class r = 0;
        for (int k = 1; k <= n - 1; ++k) r += (2 * k - 1) * conn[k] * conn[n - k];
        note(r == conn[n], "stein n=" + std::to_string(n) + " recurrence " + r.get_str() + " enumerated " +
                               conn[n].get_str());
    }

    // a_n = sum_k b_k [x^(n-k)] A^(2k) for classes with connected forbidden patterns.
    for (const auto& name : builtin_class_names()) {
        PatternClass cls = PatternClass::parse(name);
        if (!cls.connected_patterns()) {
            rep.lines.push_back("skip " + name + ": has a disconnected forbidden pattern");
            continue;
        }
        auto a = class_counts(n_max, cls, false, jobs);
        auto b = class_counts(n_max, cls, true, jobs);
        // pw[m] = [x^m] A^j, advanced one factor at a time.
        bool ok = true;
        std::string first_bad;
        for (int n = 1; n <= n_max; ++n) {
            mpz_class total = 0;
            std::vector<mpz_class> pw(n + 1);
            pw[0] = 1;
            for (int k = 1; k <= n; ++k) {
                for (int rep2 = 0; rep2 < 2; ++rep2) {
                    std::vector<mpz_class> next(n + 1);
                    for (int i = 0; i <= n; ++i)
                        for (int j = 0; i + j <= n; ++j) next[i + j] += pw[i] * a[j];
                    pw = std::move(next);
                }
                total += b[k] * pw[n - k];
            }
            if (total != a[n] && ok) {
                ok = false;
                first_bad = " (n=" + std::to_string(n) + ": " + total.get_str() + " vs " + a[n].get_str() + ")";
            }
        }
        note(ok, "functional equation " + name + " n<=" + std::to_string(n_max) + first_bad);
    }

    // C' = 1/(1-C), C(0) = 0: (n+1)! [x^(n+1)] C = (2n-1)!!.
    int order = std::min(n_max, 6) + 1;
    std::vector<mpq_class> c(order + 1, 0), inv(order + 1, 0);
    // inv = 1/(1-C); build coefficients incrementally.
    for (int m = 0; m < order; ++m) {
        mpq_class v = m == 0 ? mpq_class(1) : mpq_class(0);
        for (int j = 1; j <= m; ++j) v += c[j] * inv[m - j];
        inv[m] = v;
        c[m + 1] = inv[m] / (m + 1);
    }
    bool egf_ok = true;
    for (int n = 0; n + 1 <= order; ++n) {
        mpz_class df = 1;
        for (int k = 2 * n - 1; k > 1; k -= 2) df *= k;
        mpq_class lhs = c[n + 1] * factorial(n + 1);
        if (lhs != df) egf_ok = false;
    }
    note(egf_ok, "egf integral equation through order " + std::to_string(order));
    return rep;
}

}  // namespace chord
