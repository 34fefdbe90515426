#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace chord {

// Indeterminates f_0..f_15 and phi_1..phi_15.
inline constexpr int kMaxIndex = 15;

struct Monomial {
    std::array<std::uint8_t, 32> exp{};
    static int f_slot(int i) { return i; }
    static int phi_slot(int k) { return 15 + k; }
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    Monomial operator*(const Monomial& o) const {
        Monomial m;
        for (int i = 0; i < 32; ++i) m.exp[i] = static_cast<std::uint8_t>(exp[i] + o.exp[i]);
        return m;
    }
    int degree() const {
        int d = 0;
        for (auto e : exp) d += e;
        return d;
    }
};

class WeightPolynomial {
public:
    WeightPolynomial() = default;
    WeightPolynomial(long c) { if (c) terms_[Monomial{}] = c; }  // NOLINT
    WeightPolynomial(const mpq_class& c) { if (c != 0) terms_[Monomial{}] = c; }  // NOLINT

    static WeightPolynomial f(int i);
    static WeightPolynomial phi(int k);  // phi(0) is the constant 1
    static WeightPolynomial monomial(const Monomial& m, const mpq_class& c = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, mpq_class>& terms() const { return terms_; }

    WeightPolynomial& operator+=(const WeightPolynomial& o);
    WeightPolynomial& operator-=(const WeightPolynomial& o);
    WeightPolynomial& operator*=(const mpq_class& c);
    friend WeightPolynomial operator+(WeightPolynomial a, const WeightPolynomial& b) { return a += b; }
    friend WeightPolynomial operator-(WeightPolynomial a, const WeightPolynomial& b) { return a -= b; }
    friend WeightPolynomial operator*(const WeightPolynomial& a, const WeightPolynomial& b);
    friend WeightPolynomial operator*(WeightPolynomial a, const mpq_class& c) { return a *= c; }
    friend bool operator==(const WeightPolynomial&, const WeightPolynomial&) = default;

    // Substitute phi_k -> values[k] (index 0 unused); f untouched.
    WeightPolynomial substitute_phi(const std::vector<WeightPolynomial>& values) const;
    // Substitute f_i -> values[i] and phi_k -> phis[k]; result must be constant.
    mpq_class evaluate(const std::vector<mpq_class>& f, const std::vector<mpq_class>& phi) const;

    std::string to_string() const;

private:
    void add_term(const Monomial& m, const mpq_class& c);
    std::map<Monomial, mpq_class> terms_;
};

// Coefficients indexed by the power of y; trailing zeros trimmed.
class YPolynomial {
public:
    YPolynomial() = default;
    explicit YPolynomial(std::vector<WeightPolynomial> c) : c_(std::move(c)) { trim(); }
    static YPolynomial power(int n, const WeightPolynomial& coeff = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const WeightPolynomial& operator[](int i) const;
    const std::vector<WeightPolynomial>& coeffs() const { return c_; }

    YPolynomial& operator+=(const YPolynomial& o);
    friend YPolynomial operator+(YPolynomial a, const YPolynomial& b) { return a += b; }
    friend YPolynomial operator*(const YPolynomial& a, const YPolynomial& b);
    friend YPolynomial operator*(const YPolynomial& a, const WeightPolynomial& w);
    friend bool operator==(const YPolynomial&, const YPolynomial&) = default;

    YPolynomial substitute_phi(const std::vector<WeightPolynomial>& values) const;
    std::string to_string() const;

private:
    void trim();
    std::vector<WeightPolynomial> c_;
};

struct XSeries {
    int order = 0;
    std::vector<YPolynomial> coeff;  // coeff[n] is [x^n]; coeff[0] unused
    friend bool operator==(const XSeries&, const XSeries&) = default;
    XSeries substitute_phi(const std::vector<WeightPolynomial>& values) const;
};

mpq_class factorial(int n);

}  // namespace chord
