#include "chord/oracles.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "chord/structure.hpp"

namespace chord {

namespace {

mpz_class fact(long n) {
    if (n < 0) throw OracleError("negative factorial");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
    if (b == 0 || a % b != 0) throw OracleError("formula did not produce an integer");
    return a / b;
}

void need(bool ok, const std::string& what) {
    if (!ok) throw OracleError(what);
}

}  // namespace

mpz_class binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class double_factorial(int n) {
    need(n >= 0, "double_factorial: n >= 0");
    mpz_class r = 1;
    for (int k = 2 * n - 1; k > 1; k -= 2) r *= k;
    return r;
}

mpz_class stein(int n) {
    need(n >= 1, "stein: n >= 1");
    std::vector<mpz_class> c(n + 1, 0);
    c[1] = 1;
    for (int m = 2; m <= n; ++m)
        for (int k = 1; k < m; ++k) c[m] += (2 * k - 1) * c[k] * c[m - k];
    return c[n];
}

mpz_class tutte(int n) {
    need(n >= 0, "tutte: n >= 0");
    if (n == 0) return 1;
    return exact_div(2 * binomial(4 * n + 1, n - 1), mpz_class(n) * (n + 1));
}

mpz_class brown(int m, int n) {
    need(m >= 0 && n >= 0, "brown: m, n >= 0");
    return exact_div(2 * fact(2 * m + 3) * fact(4 * n + 2 * m + 1),
                     fact(m) * fact(m + 2) * fact(n) * fact(3 * n + 2 * m + 3));
}

mpz_class corollary_count(int n, int i) {
    need(i >= 2 && i <= n, "corollary_count: 2 <= i <= n");
    return exact_div(2 * fact(2 * i - 1) * fact(4 * n - 2 * i - 3),
                     fact(i - 2) * fact(i) * fact(n - i) * fact(3 * n - i - 1));
}

mpz_class catalan(int n) {
    need(n >= 0, "catalan: n >= 0");
    return exact_div(binomial(2 * n, n), n + 1);
}

mpz_class stanley(int n) {
    need(n >= 0, "stanley: n >= 0");
    return catalan(n) * catalan(n + 2) - catalan(n + 1) * catalan(n + 1);
}

mpz_class kreweras(int n) {
    need(n >= 0, "kreweras: n >= 0");
    return exact_div(binomial(3 * n, n), 2 * n + 1);
}

mpz_class pallo(int n) {
    need(n >= 0, "pallo: n >= 0");
    // inner = x C(x); result = sum_k C_k inner^k
    std::vector<mpz_class> inner(n + 1, 0), pw(n + 1, 0), out(n + 1, 0);
    for (int k = 1; k <= n; ++k) inner[k] = catalan(k - 1);
    pw[0] = 1;
    for (int k = 0; k <= n; ++k) {
        for (int j = 0; j <= n; ++j) out[j] += catalan(k) * pw[j];
        std::vector<mpz_class> next(n + 1, 0);
        for (int a = 0; a <= n; ++a)
            for (int b = 1; a + b <= n; ++b) next[a + b] += pw[a] * inner[b];
        pw = std::move(next);
    }
    return out[n];
}

mpz_class schroeder(int n) {
    need(n >= 0, "schroeder: n >= 0");
    mpz_class s = 0;
    for (int k = 0; k <= n; ++k) s += catalan(k) * binomial(n + k, n - k);
    return s;
}

mpz_class baxter(int length) {
    need(length >= 0, "baxter: length >= 0");
    if (length == 0) return 1;
    const int m = length + 1;
    mpz_class s = 0;
    for (int k = 1; k <= length; ++k) s += binomial(m, k - 1) * binomial(m, k) * binomial(m, k + 1);
    return exact_div(s, binomial(m, 1) * binomial(m, 2));
}

mpz_class semi_baxter(int length) {
    need(length >= 0, "semi_baxter: length >= 0");
    if (length <= 1) return 1;
    const long n = length + 1;
    mpz_class s = 0;
    for (long j = 0; j <= n - 1; ++j) s += binomial(n - 1, j + 2) * binomial(n + 1, j) * binomial(n + j + 1, j + 1);
    return exact_div(24 * s, mpz_class(n - 2) * (n - 1) * (n - 1) * n * (n + 1));
}

mpz_class gen_catalan(int n) {
    need(n >= 0, "gen_catalan: n >= 0");
    if (n == 0) return 1;
    mpz_class s = 0;
    for (int k = 0; k <= n - 1; ++k) s += binomial(2 * n, n - 1 - k) * binomial(n - 1 + k, k);
    return exact_div(s, n);
}

mpz_class one_terminal(int n) {
    need(n >= 1, "one_terminal: n >= 1");
    return double_factorial(n - 1);
}

std::vector<std::string> oracle_names() {
    return {"double_factorial", "stein",    "tutte",   "brown",       "corollary_count",
            "catalan",          "stanley",  "kreweras", "pallo",      "schroeder",
            "baxter",           "semi_baxter", "gen_catalan", "one_terminal"};
}

mpz_class oracle(const std::string& name, const std::vector<int>& a) {
    auto arity = [&](std::size_t k) {
        if (a.size() != k) throw OracleError(name + " takes " + std::to_string(k) + " argument(s)");
    };
    using F1 = mpz_class (*)(int);
    static const std::map<std::string, F1> unary = {
        {"double_factorial", double_factorial}, {"stein", stein},     {"tutte", tutte},
        {"catalan", catalan},                   {"stanley", stanley}, {"kreweras", kreweras},
        {"pallo", pallo},                       {"schroeder", schroeder}, {"baxter", baxter},
        {"semi_baxter", semi_baxter},           {"gen_catalan", gen_catalan}, {"one_terminal", one_terminal}};
    if (auto it = unary.find(name); it != unary.end()) {
        arity(1);
        return it->second(a[0]);
    }
    if (name == "brown") {
        arity(2);
        return brown(a[0], a[1]);
    }
    if (name == "corollary_count") {
        arity(2);
        return corollary_count(a[0], a[1]);
    }
    throw OracleError("unknown oracle '" + name + "'");
}

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::All: return "all";
        case Variant::Connected: return "connected";
        case Variant::OneTerminal: return "1-terminal";
    }
    return "?";
}

Variant parse_variant(const std::string& s) {
    if (s == "all") return Variant::All;
    if (s == "connected") return Variant::Connected;
    if (s == "1-terminal" || s == "one-terminal") return Variant::OneTerminal;
    throw std::invalid_argument("unknown variant '" + s + "'");
}

bool in_variant(const ChordDiagram& c, Variant v) {
    switch (v) {
        case Variant::All: return true;
        case Variant::Connected: return c.size() > 0 && is_connected(c);
        case Variant::OneTerminal: return c.size() > 0 && is_one_terminal(c);
    }
    return false;
}

std::string statistic_name(Statistic s) {
    switch (s) {
        case Statistic::T1: return "t1";
        case Statistic::TerminalCount: return "terminal-count";
        case Statistic::Crossings: return "crossings";
        case Statistic::Nestings: return "nestings";
        case Statistic::Kappa: return "kappa";
        case Statistic::Terminality: return "terminality";
    }
    return "?";
}

Statistic parse_statistic(const std::string& s) {
    for (auto st : {Statistic::T1, Statistic::TerminalCount, Statistic::Crossings, Statistic::Nestings,
                    Statistic::Kappa, Statistic::Terminality})
        if (statistic_name(st) == s) return st;
    throw std::invalid_argument("unknown statistic '" + s + "'");
}

int statistic_value(const ChordDiagram& c, Statistic s) {
    const bool conn = c.size() > 0 && is_connected(c);
    switch (s) {
        case Statistic::T1: return conn ? first_terminal(c) : -1;
        case Statistic::TerminalCount: return conn ? terminal_profile(c).k : -1;
        case Statistic::Crossings: return crossings(c);
        case Statistic::Nestings: return nestings(c);
        case Statistic::Kappa: return vertex_connectivity(c);
        case Statistic::Terminality: return terminality(c);
    }
    return -1;
}

mpz_class CountTable::total() const {
    mpz_class t = 0;
    for (const auto& [k, v] : rows) t += v;
    return t;
}

std::string CountTable::to_csv() const {
    std::ostringstream os;
    os << "n";
    for (auto s : stats) os << "," << statistic_name(s);
    os << ",count\n";
    for (const auto& [key, v] : rows) {
        os << n;
        for (int x : key) os << "," << x;
        os << "," << v.get_str() << "\n";
    }
    return os.str();
}

nlohmann::json CountTable::to_json() const {
    nlohmann::json j;
    j["class"] = class_name;
    j["n"] = n;
    j["statistics"] = nlohmann::json::array();
    for (auto s : stats) j["statistics"].push_back(statistic_name(s));
    j["rows"] = nlohmann::json::array();
    for (const auto& [key, v] : rows) j["rows"].push_back({{"values", key}, {"count", v.get_str()}});
    j["total"] = total().get_str();
    return j;
}

CountTable count_class(int n, const PatternClass& cls, Variant v, const std::vector<Statistic>& stats, int jobs) {
    using Rows = std::map<std::vector<int>, long>;
    Rows r = sweep(
        n, jobs, Rows{},
        [&](const ChordDiagram& c, Rows& acc) {
            if (!in_variant(c, v) || !in_class(c, cls)) return;
            std::vector<int> key;
            for (auto s : stats) key.push_back(statistic_value(c, s));
            ++acc[key];
        },
        [](Rows& a, Rows&& b) {
            for (auto& [k, x] : b) a[k] += x;
        });
    CountTable t;
    t.class_name = cls.name() + (v == Variant::All ? "" : " " + variant_name(v));
    t.stats = stats;
    t.n = n;
    for (auto& [k, x] : r) t.rows[k] = x;
    return t;
}

mpz_class count_simple(int n, const std::function<bool(const ChordDiagram&)>& pred, int jobs) {
    long c = sweep(
        n, jobs, 0L, [&](const ChordDiagram& d, long& acc) { acc += pred(d) ? 1 : 0; },
        [](long& a, long&& b) { a += b; });
    return c;
}

std::optional<ChordDiagram> witness_search(int n, const std::function<bool(const ChordDiagram&)>& pred) {
    std::optional<ChordDiagram> found;
    // generation order is fixed, so the first hit is reproducible
    struct Stop {};
    try {
        for_each_diagram(n, [&](const ChordDiagram& c) {
            if (pred(c)) {
                found = c;
                throw Stop{};
            }
        });
    } catch (const Stop&) {
    }
    return found;
}

namespace {

struct Spec {
    std::string id;
    std::string statement;
    std::string cls;
    Variant variant;
    std::string oracle;
    std::function<std::optional<mpz_class>(int)> value;
};

std::optional<mpz_class> guarded(const std::function<mpz_class()>& f) {
    try {
        return f();
    } catch (const OracleError&) {
        return std::nullopt;
    }
}

std::vector<Spec> specs() {
    using V = Variant;
    auto g = [](auto fn) { return [fn](int n) { return guarded([=] { return fn(n); }); }; };
    return {
        {"triangle-free-stanley", "K3-free diagrams are counted by C_n C_{n+2} - C_{n+1}^2", "triangle-free",
         V::All, "stanley(n)", g([](int n) { return stanley(n); })},
        {"top-cycle-tamari", "connected top-cycle-free diagrams of size n number 2/(n(n+1)) binom(4n+1,n-1)",
         "top-cycle-free", V::Connected, "tutte(n)", g([](int n) { return tutte(n); })},
        {"top-cycle-corollary-sum", "connected top-cycle-free diagrams equal the sum of per-t1 map counts",
         "top-cycle-free", V::Connected, "sum_i corollary_count(n,i)", g([](int n) {
             if (n < 1) throw OracleError("n >= 1");
             if (n == 1) return mpz_class(1);
             mpz_class s = 0;
             for (int i = 2; i <= n; ++i) s += corollary_count(n, i);
             return s;
         })},
        {"tree-kreweras", "connected tree diagrams are counted by binom(3n,n)/(2n+1)", "tree", V::Connected,
         "kreweras(n)", g([](int n) { return kreweras(n); })},
        {"chordal-catalan-squared", "connected chordal diagrams are counted by C_n^2", "chordal", V::Connected,
         "catalan(n)^2", g([](int n) -> mpz_class { return catalan(n) * catalan(n); })},
        {"bipartite-cubic-maps", "connected bipartite diagrams match 3-edge-connected Hamiltonian cubic maps",
         "bipartite", V::Connected, "none (counts only)", [](int) { return std::optional<mpz_class>{}; }},
        {"bottom-cycle-gen-catalan", "connected bottom-cycle-free diagrams are counted by C(2; n-1)",
         "bottom-cycle-free", V::Connected, "gen_catalan(n-1)", g([](int n) { return gen_catalan(n - 1); })},
        {"one-terminal-top-cycle-catalan", "1-terminal top-cycle-free diagrams are counted by C_{n-1}",
         "top-cycle-free", V::OneTerminal, "catalan(n-1)", g([](int n) { return catalan(n - 1); })},
        {"one-terminal-triangle-semi-baxter", "1-terminal triangle-free diagrams match semi-Baxter permutations of length n-1",
         "triangle-free", V::OneTerminal, "semi_baxter(n-1)", g([](int n) { return semi_baxter(n - 1); })},
        {"one-terminal-bipartite-baxter", "1-terminal bipartite diagrams match Baxter permutations of length n-1",
         "bipartite", V::OneTerminal, "baxter(n-1)", g([](int n) { return baxter(n - 1); })},
        {"one-terminal-bottom-cycle-schroeder", "1-terminal bottom-cycle-free diagrams are counted by S_{n-2}",
         "bottom-cycle-free", V::OneTerminal, "schroeder(n-2)", g([](int n) { return schroeder(n - 2); })},
    };
}

}  // namespace

ConjectureReport conjecture_report(int n_max, int jobs) {
    ConjectureReport rep;
    rep.n_max = n_max;
    auto sp = specs();
    // (class, variant) pairs to count; every conjecture is scanned over all three variants
    std::vector<std::pair<std::string, Variant>> keys;
    for (const auto& s : sp)
        for (auto v : {Variant::All, Variant::Connected, Variant::OneTerminal})
            if (std::find(keys.begin(), keys.end(), std::pair{s.cls, v}) == keys.end()) keys.emplace_back(s.cls, v);
    std::vector<PatternClass> classes;
    for (const auto& k : keys) classes.push_back(PatternClass::parse(k.first));
    std::vector<std::vector<mpz_class>> counts(keys.size(), std::vector<mpz_class>(n_max + 1, 0));
    for (int n = 1; n <= n_max; ++n) {
        using Acc = std::vector<long>;
        Acc tally = sweep(
            n, jobs, Acc(keys.size(), 0),
            [&](const ChordDiagram& c, Acc& acc) {
                const bool conn = is_connected(c);
                const bool one = conn && is_one_terminal(c);
                std::map<std::string, bool> memo;
                for (std::size_t i = 0; i < keys.size(); ++i) {
                    Variant v = keys[i].second;
                    if ((v == Variant::Connected && !conn) || (v == Variant::OneTerminal && !one)) continue;
                    auto it = memo.find(keys[i].first);
                    bool in = it != memo.end() ? it->second : (memo[keys[i].first] = in_class(c, classes[i]));
                    if (in) ++acc[i];
                }
            },
            [](Acc& a, Acc&& b) {
                for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
            });
        for (std::size_t i = 0; i < keys.size(); ++i) counts[i][n] = tally[i];
    }
    auto lookup = [&](const std::string& cls, Variant v) {
        for (std::size_t i = 0; i < keys.size(); ++i)
            if (keys[i].first == cls && keys[i].second == v) return counts[i];
        return std::vector<mpz_class>{};
    };
    for (const auto& s : sp) {
        for (auto v : {Variant::All, Variant::Connected, Variant::OneTerminal}) {
            ConjectureRow row{s.id, s.statement, s.cls, v, s.oracle, lookup(s.cls, v), {}, {}};
            for (int off = -1; off <= 1; ++off) {
                std::vector<std::optional<mpz_class>> exp(n_max + 1);
                bool any = false, all = true;
                for (int n = 1; n <= n_max; ++n) {
                    exp[n] = s.value(n + off);
                    if (!exp[n]) continue;
                    any = true;
                    all = all && *exp[n] == row.counts[n];
                }
                row.expected[off] = exp;
                row.matches[off] = any && all;
            }
            rep.rows.push_back(std::move(row));
        }
    }
    auto b = lookup("bottom-cycle-free", Variant::Connected);
    auto t = lookup("top-cycle-free", Variant::Connected);
    std::string ineq = "bottom-vs-top inequality |C_n(B>=3)| <= |C_n(T>=3)|:";
    bool holds = true;
    for (int n = 1; n <= n_max; ++n) {
        holds = holds && b[n] <= t[n];
        ineq += " n=" + std::to_string(n) + (b[n] <= t[n] ? " holds" : " fails");
    }
    rep.notes.push_back(ineq + (holds ? " (holds for all n checked)" : " (violated)"));
    return rep;
}

nlohmann::json ConjectureReport::to_json() const {
    nlohmann::json j;
    j["n_max"] = n_max;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json row;
        row["id"] = r.id;
        row["statement"] = r.statement;
        row["class"] = r.class_name;
        row["variant"] = variant_name(r.variant);
        row["oracle"] = r.oracle;
        nlohmann::json cs = nlohmann::json::array();
        for (int n = 1; n <= n_max; ++n) cs.push_back(r.counts[n].get_str());
        row["counts"] = cs;
        nlohmann::json offs = nlohmann::json::object();
        for (const auto& [off, exp] : r.expected) {
            nlohmann::json e = nlohmann::json::array();
            for (int n = 1; n <= n_max; ++n) e.push_back(exp[n] ? nlohmann::json(exp[n]->get_str()) : nlohmann::json());
            offs[std::to_string(off)] = {{"expected", e}, {"match", r.matches.at(off)}};
        }
        row["offsets"] = offs;
        j["rows"].push_back(row);
    }
    j["notes"] = notes;
    return j;
}

std::string ConjectureReport::to_table() const {
    std::ostringstream os;
    os << std::left << std::setw(38) << "conjecture" << std::setw(12) << "variant" << std::setw(8) << "off-1"
       << std::setw(8) << "off0" << std::setw(8) << "off+1" << "counts n=1.." << n_max << "\n";
    for (const auto& r : rows) {
        os << std::setw(38) << r.id << std::setw(12) << variant_name(r.variant);
        for (int off = -1; off <= 1; ++off) os << std::setw(8) << (r.matches.at(off) ? "match" : "-");
        for (int n = 1; n <= n_max; ++n) os << (n > 1 ? "," : "") << r.counts[n].get_str();
        os << "\n";
    }
    for (const auto& s : notes) os << s << "\n";
    return os.str();
}

}  // namespace chord
