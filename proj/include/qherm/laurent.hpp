#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "qherm/rational.hpp"

namespace qherm {

/// Laurent polynomial in the variable v with rational coefficients.
/// The deformation parameter is q = v^2, so half-integer q-powers such as
/// q^{1/2} stay inside the ring as integer v-powers.
class LaurentV {
public:
    LaurentV() = default;
    LaurentV(int n) { if (n != 0) c_[0] = Rational(n); }
    LaurentV(const Rational& r) { if (r != 0) c_[0] = r; }

    static LaurentV monomial(const Rational& coeff, int exp) {
        LaurentV p;
        if (coeff != 0) p.c_[exp] = coeff;
        return p;
    }
    /// v^k
    static LaurentV vpow(int k) { return monomial(1, k); }
    /// q^k = v^{2k}
    static LaurentV qpow(int k) { return monomial(1, 2 * k); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const {
        return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1;
    }
    /// True when the polynomial is a single term c * v^k.
    bool is_monomial() const { return c_.size() == 1; }

    const std::map<int, Rational>& coeffs() const { return c_; }

    Rational coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? Rational(0) : it->second;
    }

    int min_exp() const {
        if (c_.empty()) throw std::logic_error("LaurentV: min_exp of zero");
        return c_.begin()->first;
    }
    int max_exp() const {
        if (c_.empty()) throw std::logic_error("LaurentV: max_exp of zero");
        return c_.rbegin()->first;
    }
    Rational lead_coeff() const {
        if (c_.empty()) throw std::logic_error("LaurentV: lead_coeff of zero");
        return c_.rbegin()->second;
    }

    LaurentV& operator+=(const LaurentV& o);
    LaurentV& operator-=(const LaurentV& o);
    friend LaurentV operator+(LaurentV a, const LaurentV& b) { a += b; return a; }
    friend LaurentV operator-(LaurentV a, const LaurentV& b) { a -= b; return a; }
    friend LaurentV operator*(const LaurentV& a, const LaurentV& b);
    LaurentV& operator*=(const LaurentV& o) { *this = *this * o; return *this; }
    friend LaurentV operator*(const LaurentV& a, const Rational& s);
    friend LaurentV operator*(const Rational& s, const LaurentV& a) { return a * s; }
    LaurentV operator-() const;

    LaurentV pow(unsigned k) const;
    /// Multiply by v^k.
    LaurentV shifted(int k) const;
    /// The bar involution v -> v^{-1}.
    LaurentV bar() const;

    double eval(double v) const;

    friend bool operator==(const LaurentV& a, const LaurentV& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LaurentV& a, const LaurentV& b) { return !(a == b); }

    /// Canonical text form, exponents descending: "v^2 + 2 + v^-2".
    std::string str() const;

private:
    std::map<int, Rational> c_; // exponent of v -> coefficient, no zeros stored
    void trim();
    friend class RatFuncV;
};

/// Exact division in Q[v, v^{-1}]. Returns true and sets quo iff b divides a.
bool divide_exact(const LaurentV& a, const LaurentV& b, LaurentV& quo);

/// Gcd of the polynomial parts, normalized to min_exp 0, integer coefficients
/// with content 1, and positive leading coefficient.
LaurentV laurent_gcd(const LaurentV& a, const LaurentV& b);

/// Rational c such that p / c has coprime integer coefficients and positive
/// leading coefficient.
Rational rational_content(const LaurentV& p);

} // namespace qherm
