#include "chord/poly.hpp"

#include <stdexcept>

namespace chord {

mpq_class factorial(int n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return mpq_class(r);
}

static void check_index(int i) {
    if (i < 0 || i > kMaxIndex) throw std::out_of_range("indeterminate index beyond truncation bound 15");
}

WeightPolynomial WeightPolynomial::f(int i) {
    check_index(i);
    Monomial m;
    m.exp[Monomial::f_slot(i)] = 1;
    return monomial(m);
}

WeightPolynomial WeightPolynomial::phi(int k) {
    if (k == 0) return 1;
    check_index(k);
    Monomial m;
    m.exp[Monomial::phi_slot(k)] = 1;
    return monomial(m);
}

WeightPolynomial WeightPolynomial::monomial(const Monomial& m, const mpq_class& c) {
    WeightPolynomial p;
    p.add_term(m, c);
    return p;
}

void WeightPolynomial::add_term(const Monomial& m, const mpq_class& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (fresh) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

WeightPolynomial& WeightPolynomial::operator+=(const WeightPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

WeightPolynomial& WeightPolynomial::operator-=(const WeightPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

WeightPolynomial& WeightPolynomial::operator*=(const mpq_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

WeightPolynomial operator*(const WeightPolynomial& a, const WeightPolynomial& b) {
    WeightPolynomial out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

WeightPolynomial WeightPolynomial::substitute_phi(const std::vector<WeightPolynomial>& values) const {
    WeightPolynomial out;
    for (const auto& [m, c] : terms_) {
        Monomial base = m;
        WeightPolynomial factor(c);
        for (int k = 1; k <= kMaxIndex; ++k) {
            int e = base.exp[Monomial::phi_slot(k)];
            if (!e) continue;
            if (k >= static_cast<int>(values.size())) continue;
            base.exp[Monomial::phi_slot(k)] = 0;
            for (int r = 0; r < e; ++r) factor = factor * values[k];
        }
        out += monomial(base) * factor;
    }
    return out;
}

mpq_class WeightPolynomial::evaluate(const std::vector<mpq_class>& f, const std::vector<mpq_class>& phi) const {
    mpq_class total = 0;
    for (const auto& [m, c] : terms_) {
        mpq_class t = c;
        for (int i = 0; i <= kMaxIndex; ++i)
            for (int r = 0; r < m.exp[Monomial::f_slot(i)]; ++r) t *= f.at(i);
        for (int k = 1; k <= kMaxIndex; ++k)
            for (int r = 0; r < m.exp[Monomial::phi_slot(k)]; ++r) t *= phi.at(k);
        total += t;
    }
    return total;
}

std::string WeightPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string mono;
        for (int i = 0; i <= kMaxIndex; ++i) {
            int e = m.exp[Monomial::f_slot(i)];
            if (e) mono += "*f" + std::to_string(i) + (e > 1 ? "^" + std::to_string(e) : "");
        }
        for (int k = 1; k <= kMaxIndex; ++k) {
            int e = m.exp[Monomial::phi_slot(k)];
            if (e) mono += "*phi" + std::to_string(k) + (e > 1 ? "^" + std::to_string(e) : "");
        }
        mpq_class a = abs(c);
        std::string head;
        if (mono.empty()) head = a.get_str();
        else if (a == 1) head = mono.substr(1);
        else head = a.get_str() + mono;
        if (s.empty()) s = (c < 0 ? "-" : "") + head;
        else s += (c < 0 ? " - " : " + ") + head;
    }
    return s;
}

YPolynomial YPolynomial::power(int n, const WeightPolynomial& coeff) {
    std::vector<WeightPolynomial> c(n + 1);
    c[n] = coeff;
    return YPolynomial(std::move(c));
}

const WeightPolynomial& YPolynomial::operator[](int i) const {
    static const WeightPolynomial zero;
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : zero;
}

void YPolynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

YPolynomial& YPolynomial::operator+=(const YPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

YPolynomial operator*(const YPolynomial& a, const YPolynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<WeightPolynomial> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) c[i + j] += a.c_[i] * b.c_[j];
    }
    return YPolynomial(std::move(c));
}

YPolynomial operator*(const YPolynomial& a, const WeightPolynomial& w) {
    std::vector<WeightPolynomial> c;
    for (const auto& x : a.c_) c.push_back(x * w);
    return YPolynomial(std::move(c));
}

YPolynomial YPolynomial::substitute_phi(const std::vector<WeightPolynomial>& values) const {
    std::vector<WeightPolynomial> c;
    for (const auto& x : c_) c.push_back(x.substitute_phi(values));
    return YPolynomial(std::move(c));
}

std::string YPolynomial::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + c_[i].to_string() + ")" + (i ? "*y^" + std::to_string(i) : "");
    }
    return s;
}

XSeries XSeries::substitute_phi(const std::vector<WeightPolynomial>& values) const {
    XSeries out{order, {}};
    for (const auto& y : coeff) out.coeff.push_back(y.substitute_phi(values));
    return out;
}

}  // namespace chord
