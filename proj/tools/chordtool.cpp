#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "chord/bijections.hpp"
#include "chord/checks.hpp"
#include "chord/enumerate.hpp"
#include "chord/oracles.hpp"
#include "chord/patterns.hpp"
#include "chord/series.hpp"
#include "chord/stirling.hpp"
#include "chord/triangulation.hpp"

using namespace chord;
using nlohmann::json;

namespace {

constexpr int kMaxEnumSize = 10;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int env_budget() {
    const char* s = std::getenv("CHORDTOOL_BUDGET");
    if (!s || !*s) return 0;
    try {
        int b = std::stoi(s);
        if (b > 0) return b;
    } catch (const std::exception&) {
    }
    throw UsageError("CHORDTOOL_BUDGET must be a positive integer");
}

// ---------------------------------------------------------------- text forms

IncreasingOrderedTree parse_tree(const std::string& s) {
    std::size_t i = 0;
    std::map<int, std::vector<int>> kids;
    int max_label = -1;
    auto skip = [&] {
        while (i < s.size() && (s[i] == ' ' || s[i] == ',')) ++i;
    };
    std::function<int()> node = [&]() -> int {
        skip();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw DiagramError("tree text: expected a vertex label");
        int v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = 10 * v + (s[i++] - '0');
        if (kids.count(v)) throw DiagramError("tree text: repeated label");
        kids[v];
        max_label = std::max(max_label, v);
        skip();
        if (i < s.size() && s[i] == '(') {
            ++i;
            for (;;) {
                skip();
                if (i < s.size() && s[i] == ')') {
                    ++i;
                    break;
                }
                kids[v].push_back(node());
            }
        }
        return v;
    };
    if (node() != 0) throw DiagramError("tree text: root must be 0");
    skip();
    if (i != s.size()) throw DiagramError("tree text: trailing characters");
    if (max_label + 1 != static_cast<int>(kids.size())) throw DiagramError("tree text: labels must be 0..n-1");
    IncreasingOrderedTree t;
    t.children.assign(kids.size(), {});
    for (auto& [v, c] : kids) t.children[v] = c;
    validate_tree(t);
    return t;
}

json parts_to_json(const Parts& parts) {
    json a = json::array();
    for (const auto& p : parts) a.push_back({{"diagram", to_text(p.diagram)}, {"block", p.block}});
    return a;
}

Parts parts_from_json(const json& j) {
    Parts parts;
    for (const auto& e : j) {
        if (e.is_array() && e.size() == 2)
            parts.push_back({parse_text(e[0].get<std::string>()), e[1].get<std::vector<int>>()});
        else
            parts.push_back({parse_text(e.at("diagram").get<std::string>()), e.at("block").get<std::vector<int>>()});
    }
    return parts;
}

Triangulation triangulation_from_json(const json& j) {
    Triangulation t;
    t.vertex_count = j.at("vertices").get<int>();
    t.exterior = j.at("exterior").get<std::vector<int>>();
    t.triangles.clear();
    for (const auto& f : j.at("triangles")) t.triangles.push_back({f.at(0).get<int>(), f.at(1).get<int>(), f.at(2).get<int>()});
    if (t.exterior.size() < 2 || t.vertex_count < static_cast<int>(t.exterior.size()))
        throw DiagramError("triangulation JSON: bad vertex or exterior data");
    return t;
}

json glued_to_json(const std::vector<GluedPart>& g) {
    json a = json::array();
    for (const auto& p : g) a.push_back({{"triangulation", to_json(p.triangulation)}, {"index", p.index}});
    return a;
}

std::vector<GluedPart> glued_from_json(const json& j) {
    std::vector<GluedPart> g;
    for (const auto& e : j) g.push_back({triangulation_from_json(e.at("triangulation")), e.at("index").get<int>()});
    return g;
}

// top-cycle-free diagrams have interval blocks, so the glue indices determine them
ChordDiagram omega_inverse(const Triangulation& t) {
    if (t.is_edge()) return parse_text("(1,2)");
    Parts parts;
    int next = 1;
    for (const auto& g : gamma(t)) {
        std::vector<int> block;
        for (int i = 0; i < g.index; ++i) block.push_back(next++);
        parts.push_back({omega_inverse(g.triangulation), block});
    }
    return beta(parts);
}

json root_share_to_json(const RootShare& r) {
    return {{"root_side", to_text(r.root_side)}, {"outer", to_text(r.outer)}, {"index", r.index}};
}

// ---------------------------------------------------------------- map

struct MapResult {
    std::string text;
    bool roundtrip_ok = true;
};

std::string dump(const json& j) { return j.dump(); }

MapResult run_map(const std::string& name, const std::string& input, bool roundtrip) {
    // parse errors are usage errors; domain errors surface from the map itself
    auto diagram = [&] {
        try {
            return parse_text(input);
        } catch (const DiagramError& e) {
            throw UsageError(std::string("invalid diagram: ") + e.what());
        }
    };
    auto word = [&] {
        try {
            return parse_word(input);
        } catch (const DiagramError& e) {
            throw UsageError(std::string("invalid word: ") + e.what());
        }
    };
    auto tree = [&] {
        try {
            return parse_tree(input);
        } catch (const DiagramError& e) {
            throw UsageError(std::string("invalid tree: ") + e.what());
        }
    };
    auto parsed_json = [&] {
        try {
            return json::parse(input);
        } catch (const json::exception& e) {
            throw UsageError(std::string("invalid JSON: ") + e.what());
        }
    };

    MapResult r;
    if (name == "psi") {
        auto c = diagram();
        auto out = psi(c);
        r.text = to_text(out);
        if (roundtrip) r.roundtrip_ok = chi(out) == c;
    } else if (name == "chi") {
        auto c = diagram();
        auto out = chi(c);
        r.text = to_text(out);
        if (roundtrip) r.roundtrip_ok = psi(out) == c;
    } else if (name == "alpha") {
        auto c = diagram();
        auto out = alpha(c);
        r.text = dump(parts_to_json(out));
        if (roundtrip) r.roundtrip_ok = beta(out) == c;
    } else if (name == "beta") {
        Parts in;
        try {
            in = parts_from_json(parsed_json());
        } catch (const json::exception& e) {
            throw UsageError(std::string("invalid parts JSON: ") + e.what());
        }
        auto out = beta(in);
        r.text = to_text(out);
        if (roundtrip) r.roundtrip_ok = alpha(out) == in;
    } else if (name == "omega") {
        auto c = diagram();
        auto out = omega(c);
        r.text = dump(to_json(out));
        if (roundtrip) r.roundtrip_ok = omega_inverse(out) == c;
    } else if (name == "gamma") {
        Triangulation t;
        try {
            t = triangulation_from_json(parsed_json());
        } catch (const json::exception& e) {
            throw UsageError(std::string("invalid triangulation JSON: ") + e.what());
        }
        auto out = gamma(t);
        r.text = dump(glued_to_json(out));
        if (roundtrip) r.roundtrip_ok = canonical_code(join(out)) == canonical_code(t);
    } else if (name == "zeta") {
        auto c = diagram();
        auto out = zeta(c);
        r.text = word_to_text(out);
        if (roundtrip) r.roundtrip_ok = zeta_inverse(out) == c;
    } else if (name == "zeta-inv") {
        auto w = word();
        auto out = zeta_inverse(w);
        r.text = to_text(out);
        if (roundtrip) r.roundtrip_ok = zeta(out) == w;
    } else if (name == "eta") {
        auto t = tree();
        auto out = eta(t);
        r.text = word_to_text(out);
        if (roundtrip) r.roundtrip_ok = eta_inverse(out) == t;
    } else if (name == "eta-inv") {
        auto w = word();
        auto out = eta_inverse(w);
        r.text = tree_to_text(out);
        if (roundtrip) r.roundtrip_ok = eta(out) == w;
    } else if (name == "theta") {
        auto c = diagram();
        auto out = theta(c);
        r.text = tree_to_text(out);
        if (roundtrip) r.roundtrip_ok = theta_inverse(out) == c;
    } else if (name == "theta-inv") {
        auto t = tree();
        auto out = theta_inverse(t);
        r.text = to_text(out);
        if (roundtrip) r.roundtrip_ok = theta(out) == t;
    } else if (name == "root-share") {
        auto c = diagram();
        auto out = root_share_decompose(c);
        r.text = dump(root_share_to_json(out));
        if (roundtrip) r.roundtrip_ok = root_share_compose(out.root_side, out.outer, out.index) == c;
    } else {
        throw UsageError("unknown bijection '" + name + "'");
    }
    return r;
}

const std::vector<std::string> kMapNames = {"psi",   "chi",     "alpha", "beta",      "omega",
                                            "gamma", "zeta",    "zeta-inv", "eta",    "eta-inv",
                                            "theta", "theta-inv", "root-share"};

// ---------------------------------------------------------------- enum

std::vector<Statistic> parse_stats(const std::vector<std::string>& names) {
    std::vector<Statistic> out;
    for (const auto& n : names) {
        try {
            out.push_back(parse_statistic(n));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    return out;
}

int run_enum(int size, const std::string& cls_name, const std::string& variant_name_in,
             const std::vector<std::string>& stat_names, bool count, const std::string& format, int jobs) {
    if (size < 0 || size > kMaxEnumSize)
        throw UsageError("--size must be between 0 and " + std::to_string(kMaxEnumSize));
    PatternClass cls;
    Variant variant;
    try {
        if (cls_name == "connected" || cls_name == "1-terminal" || cls_name == "one-terminal") {
            cls = PatternClass::parse("all");
            variant = parse_variant(cls_name);
        } else {
            cls = PatternClass::parse(cls_name);
            variant = parse_variant(variant_name_in);
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    auto stats = parse_stats(stat_names);

    if (count || !stats.empty()) {
        auto table = count_class(size, cls, variant, stats, jobs);
        if (stats.empty()) {
            if (format == "json")
                std::cout << json{{"class", table.class_name}, {"n", size}, {"count", table.total().get_str()}}.dump()
                          << "\n";
            else
                std::cout << table.total().get_str() << "\n";
        } else if (format == "json") {
            std::cout << table.to_json().dump() << "\n";
        } else if (format == "csv") {
            std::cout << table.to_csv();
        } else {
            for (const auto& [key, v] : table.rows) {
                for (std::size_t i = 0; i < key.size(); ++i)
                    std::cout << statistic_name(stats[i]) << "=" << key[i] << " ";
                std::cout << v.get_str() << "\n";
            }
        }
        return 0;
    }

    std::vector<ChordDiagram> found;
    for_each_diagram(size, [&](const ChordDiagram& c) {
        if (in_variant(c, variant) && in_class(c, cls)) found.push_back(c);
    });
    if (format == "json") {
        json a = json::array();
        for (const auto& c : found) a.push_back(to_json(c));
        std::cout << a.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "n,diagram\n";
        for (const auto& c : found) std::cout << size << ",\"" << to_text(c) << "\"\n";
    } else {
        for (const auto& c : found) std::cout << to_text(c) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- series

int run_series(const std::string& op_text, int n_max, const std::string& phi_mode, int s, const std::string& source,
               const std::string& format, int jobs) {
    if (n_max < 1 || n_max > 8) throw UsageError("--max-size must be between 1 and 8");
    Op op;
    try {
        op = parse_op(op_text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    PhiValues phi;
    if (phi_mode == "ones")
        phi = phi_all_ones(n_max);
    else if (phi_mode == "covering")
        phi = phi_covering(n_max, s);
    else if (phi_mode != "symbolic")
        throw UsageError("--phi must be symbolic, ones or covering");
    XSeries g = source == "diagrams" ? diagram_series(op, n_max, phi, jobs) : solve_tree_like(op, n_max, phi);
    json all = json::array();
    for (int n = 1; n <= n_max; ++n)
        for (int k = 0; k <= g.coeff[n].degree(); ++k) {
            const auto& w = g.coeff[n][k];
            if (w.is_zero()) continue;
            json row = {{"n", n}, {"y_power", k}, {"poly", w.to_string()}};
            if (format == "lines")
                std::cout << row.dump() << "\n";
            else
                all.push_back(row);
        }
    if (format == "json") std::cout << all.dump() << "\n";
    if (format == "csv") {
        std::cout << "n,y_power,poly\n";
        for (const auto& r : all)
            std::cout << r["n"].get<int>() << "," << r["y_power"].get<int>() << ",\"" << r["poly"].get<std::string>()
                      << "\"\n";
    }
    return 0;
}

// ---------------------------------------------------------------- verify

int run_verify(const std::vector<std::string>& ids_in, int max_size, int jobs, bool list) {
    if (list) {
        for (const auto& c : check_registry())
            std::cout << c.id << " (budget " << c.default_budget << (c.report_only ? ", report only" : "") << ")  "
                      << c.description << "\n";
        return 0;
    }
    std::vector<const CheckInfo*> todo;
    for (const auto& id : ids_in) {
        if (id == "all") {
            for (const auto& c : check_registry()) todo.push_back(&c);
            continue;
        }
        const CheckInfo* c = find_check(id);
        if (!c) throw UsageError("unknown check id '" + id + "'");
        todo.push_back(c);
    }
    if (todo.empty()) throw UsageError("no check ids given");
    const int env = env_budget();
    bool ok = true;
    for (const CheckInfo* c : todo) {
        int budget = max_size > 0 ? max_size : env > 0 ? env : c->default_budget;
        auto t0 = std::chrono::steady_clock::now();
        CheckOutcome out;
        try {
            out = c->run(budget, jobs);
        } catch (const std::exception& e) {
            out.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const char* tag = c->report_only ? "REPORT" : out.pass ? "PASS" : "FAIL";
        std::cout << tag << " " << c->id << " (max size " << budget << ")\n";
        for (const auto& l : out.lines) std::cout << "  " << l << "\n";
        std::cerr << c->id << ": " << secs << " s\n";
        if (!c->report_only && !out.pass) ok = false;
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chord diagram enumeration, bijections and series checks"};
    app.require_subcommand(1);
    int jobs = default_jobs();
    app.add_option("--jobs,-j", jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* en = app.add_subcommand("enum", "enumerate diagrams, counts or statistic tables");
    int size = -1;
    std::string cls = "all", variant = "all", format = "lines";
    std::vector<std::string> stats;
    bool count = false;
    en->add_option("--size,-n", size, "number of chords")->required();
    en->add_option("--class,-c", cls, "pattern class, or connected / 1-terminal");
    en->add_option("--variant", variant, "all, connected or 1-terminal");
    en->add_option("--stats", stats, "statistics to tabulate")->delimiter(',');
    en->add_flag("--count", count, "print only the count");
    en->add_option("--format,-f", format)->check(CLI::IsMember({"lines", "csv", "json"}));

    auto* mp = app.add_subcommand("map", "apply a bijection");
    std::string bij, input;
    bool roundtrip = false;
    mp->add_option("bijection,--bijection,-b", bij)->required()->check(CLI::IsMember(kMapNames));
    mp->add_option("input,--input,-i", input)->required();
    mp->add_flag("--roundtrip", roundtrip, "apply the inverse and check the identity");

    auto* se = app.add_subcommand("series", "coefficients of the tree-like series");
    std::string op = "bin", phi = "symbolic", source = "solver", sformat = "lines";
    int smax = 4, s_param = 1;
    se->add_option("--op", op, "bin or div")->check(CLI::IsMember({"bin", "div"}));
    se->add_option("--max-size,-n", smax, "highest power of x");
    se->add_option("--phi", phi, "symbolic, ones or covering")->check(CLI::IsMember({"symbolic", "ones", "covering"}));
    se->add_option("--s", s_param, "parameter of the covering preset")->check(CLI::NonNegativeNumber);
    se->add_option("--source", source, "solver or diagrams")->check(CLI::IsMember({"solver", "diagrams"}));
    se->add_option("--format,-f", sformat)->check(CLI::IsMember({"lines", "csv", "json"}));

    auto* ve = app.add_subcommand("verify", "run registered checks");
    std::vector<std::string> ids;
    int vmax = 0;
    bool vlist = false;
    ve->add_option("ids", ids, "check ids or all");
    ve->add_option("--max-size,-n", vmax, "override the per-check budget")->check(CLI::PositiveNumber);
    ve->add_flag("--list", vlist, "list registered checks");

    auto* co = app.add_subcommand("conjectures", "compare enumerated counts with conjectured sequences");
    int cmax = 0;
    std::string cformat = "lines";
    co->add_option("--max-size,-n", cmax, "largest size")->check(CLI::PositiveNumber);
    co->add_option("--format,-f", cformat)->check(CLI::IsMember({"lines", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*en) return run_enum(size, cls, variant, stats, count, format, jobs);
        if (*mp) {
            auto r = run_map(bij, input, roundtrip);
            std::cout << r.text << "\n";
            if (!r.roundtrip_ok) {
                std::cerr << "error: round trip did not return the input\n";
                return 1;
            }
            return 0;
        }
        if (*se) return run_series(op, smax, phi, s_param, source, sformat, jobs);
        if (*ve) return run_verify(ids, vmax, jobs, vlist);
        if (*co) {
            int n = cmax > 0 ? cmax : env_budget() > 0 ? env_budget() : 6;
            auto rep = conjecture_report(n, jobs);
            if (cformat == "json")
                std::cout << rep.to_json().dump(2) << "\n";
            else
                std::cout << rep.to_table();
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DiagramError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const OracleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
