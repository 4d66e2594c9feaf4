#ifndef WREP_POLY_HPP
#define WREP_POLY_HPP

#include <vector>

#include "wrep/rational.hpp"

namespace wrep {

/// Dense univariate polynomial over the rationals; coeffs[i] is the u^i
/// coefficient, trailing zeros trimmed.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
    static Poly constant(const Rational& r) { return Poly(std::vector<Rational>{r}); }
    static Poly monic_linear(const Rational& a) {  // u + a
        return Poly(std::vector<Rational>{a, Rational(1)});
    }

    int degree() const { return (int)c_.size() - 1; }  // -1 for the zero poly
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const { return (i >= 0 && i < (int)c_.size()) ? c_[i] : Rational(0); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Rational eval(const Rational& x) const {
        Rational r(0);
        for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
        return r;
    }

    /// p(u + s) by synthetic substitution.
    Poly shift_arg(const Rational& s) const {
        Poly r;
        Poly pw = constant(Rational(1));
        Poly lin(std::vector<Rational>{s, Rational(1)});
        for (std::size_t i = 0; i < c_.size(); ++i) {
            r = r + pw * constant(c_[i]);
            pw = pw * lin;
        }
        return r;
    }

    /// Exact division by (u + a); throws when -a is not a root.
    Poly divide_linear(const Rational& a) const {
        if (is_zero()) throw Error("internal", "dividing the zero polynomial");
        Rational root = -a;
        int d = degree();
        std::vector<Rational> q(d, Rational(0));
        Rational acc = c_[d];
        for (int i = d - 1; i >= 0; --i) {
            q[i] = acc;
            acc = c_[i] + root * acc;
        }
        if (!acc.is_zero()) throw Error("internal", "not a root in exact division");
        return Poly(std::move(q));
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            if (i == 0 || c_[i] != Rational(1)) s += c_[i].to_string();
            if (i >= 1) {
                if (c_[i] != Rational(1)) s += "*";
                s += "u";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

} // namespace wrep

#endif // WREP_POLY_HPP
