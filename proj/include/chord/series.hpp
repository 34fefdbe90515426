#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chord/diagram.hpp"
#include "chord/poly.hpp"

namespace chord {

enum class Op { Bin, Div };
enum class Coalgebra { Binomial, DividedPower };

std::string op_name(Op op);
Op parse_op(const std::string& s);

YPolynomial l_bin(const YPolynomial& p);
YPolynomial l_div(const YPolynomial& p);
YPolynomial apply_op(Op op, const YPolynomial& p);

struct CheckResult {
    bool ok = true;
    std::string detail;  // counterexample when !ok
};

// Delta(L y^n) == (id (x) L) Delta(y^n) + L(y^n) (x) 1 for n <= N.
CheckResult check_cocycle(Coalgebra coalgebra, Op op, int n_max);

// phi[k] replaces the indeterminate phi_k; an empty vector keeps phi symbolic.
using PhiValues = std::vector<WeightPolynomial>;
PhiValues phi_all_ones(int n);
PhiValues phi_covering(int n, int s);  // phi_k = binom(k+s, k+1)

XSeries solve_tree_like(Op op, int n_max, const PhiValues& phi = {});

WeightPolynomial f_monomial(const ChordDiagram& c);
WeightPolynomial phi_monomial(const ChordDiagram& c);

XSeries diagram_series(Op op, int n_max, const PhiValues& phi = {}, int jobs = 1);

// g_{i,n} = i! [y^i x^n] G.
WeightPolynomial g_coefficient(const XSeries& g, int i, int n);
// First (i, n) with 2 <= i <= n <= N where the RGE identity fails.
std::optional<std::pair<int, int>> rge_counterexample(const XSeries& g);
CheckResult check_rge(Op op, int n_max);

// Sum over connected C of size n with t1 >= i of f_{t1-i} f_C.
std::vector<std::vector<WeightPolynomial>> root_share_sums(int n_max, int jobs = 1);
CheckResult check_root_share_identity(int n_max, int jobs = 1);

struct OgfReport {
    bool ok = true;
    std::vector<std::string> lines;
};
OgfReport ogf_checks(int n_max, int jobs = 1);

}  // namespace chord
