#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "chord/diagram.hpp"
#include "chord/enumerate.hpp"
#include "chord/patterns.hpp"

namespace chord {

struct OracleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

mpz_class binomial(long n, long k);
mpz_class double_factorial(int n);  // (2n-1)!!, diagrams of size n
mpz_class stein(int n);             // connected diagrams of size n
mpz_class tutte(int n);             // rooted planar triangulations, 2/(n(n+1)) binom(4n+1, n-1)
mpz_class brown(int m, int n);      // triangulations of an (m+3)-gon with n interior vertices
mpz_class corollary_count(int n, int i);
mpz_class catalan(int n);
mpz_class stanley(int n);
mpz_class kreweras(int n);
mpz_class pallo(int n);
mpz_class schroeder(int n);
mpz_class baxter(int length);
mpz_class semi_baxter(int length);
mpz_class gen_catalan(int n);  // C(2; n)
mpz_class one_terminal(int n);

// Evaluate by name with integer arguments; throws OracleError on bad name or domain.
mpz_class oracle(const std::string& name, const std::vector<int>& args);
std::vector<std::string> oracle_names();

enum class Variant { All, Connected, OneTerminal };
std::string variant_name(Variant v);
Variant parse_variant(const std::string& s);
bool in_variant(const ChordDiagram& c, Variant v);

enum class Statistic { T1, TerminalCount, Crossings, Nestings, Kappa, Terminality };
std::string statistic_name(Statistic s);
Statistic parse_statistic(const std::string& s);
int statistic_value(const ChordDiagram& c, Statistic s);  // -1 when undefined (disconnected)

struct CountTable {
    std::string class_name;
    std::vector<Statistic> stats;
    int n = 0;
    std::map<std::vector<int>, mpz_class> rows;

    mpz_class total() const;
    std::string to_csv() const;
    nlohmann::json to_json() const;
};

CountTable count_class(int n, const PatternClass& cls, Variant v, const std::vector<Statistic>& stats,
                       int jobs = 1);
mpz_class count_simple(int n, const std::function<bool(const ChordDiagram&)>& pred, int jobs = 1);

struct ConjectureRow {
    std::string id;
    std::string statement;
    std::string class_name;
    Variant variant;
    std::string oracle;
    std::vector<mpz_class> counts;                     // index n = 1..n_max (0 unused)
    std::map<int, std::vector<std::optional<mpz_class>>> expected;  // offset -> oracle(n + offset)
    std::map<int, bool> matches;                       // offset -> all defined values equal
};

struct ConjectureReport {
    int n_max = 0;
    std::vector<ConjectureRow> rows;
    std::vector<std::string> notes;
    nlohmann::json to_json() const;
    std::string to_table() const;
};

ConjectureReport conjecture_report(int n_max, int jobs = 1);

std::optional<ChordDiagram> witness_search(int n, const std::function<bool(const ChordDiagram&)>& pred);

}  // namespace chord
