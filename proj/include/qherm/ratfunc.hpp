#pragma once

#include <string>

#include "qherm/laurent.hpp"

namespace qherm {

/// Reduced fraction of Laurent polynomials in v. Canonical form: the
/// denominator is a polynomial in v with nonzero constant term, coprime
/// integer coefficients and positive leading coefficient, and shares no
/// factor with the numerator. Equality of canonical forms is equality in
/// Q(v), which is how every exact identity in the library is decided.
class RatFuncV {
public:
    RatFuncV() : num_(), den_(1) {}
    RatFuncV(int n) : num_(n), den_(1) {}
    RatFuncV(const Rational& r) : num_(r), den_(1) {}
    RatFuncV(const LaurentV& p) : num_(p), den_(1) {}
    RatFuncV(LaurentV num, LaurentV den);

    static RatFuncV vpow(int k) { return RatFuncV(LaurentV::vpow(k)); }
    static RatFuncV qpow(int k) { return RatFuncV(LaurentV::qpow(k)); }

    const LaurentV& num() const { return num_; }
    const LaurentV& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    /// True when the denominator is trivial (the value lies in Q[v,v^{-1}]).
    bool is_laurent() const { return den_.is_one(); }

    friend RatFuncV operator+(const RatFuncV& a, const RatFuncV& b);
    friend RatFuncV operator-(const RatFuncV& a, const RatFuncV& b);
    friend RatFuncV operator*(const RatFuncV& a, const RatFuncV& b);
    friend RatFuncV operator/(const RatFuncV& a, const RatFuncV& b);
    RatFuncV operator-() const;
    RatFuncV& operator+=(const RatFuncV& o) { *this = *this + o; return *this; }
    RatFuncV& operator-=(const RatFuncV& o) { *this = *this - o; return *this; }
    RatFuncV& operator*=(const RatFuncV& o) { *this = *this * o; return *this; }
    RatFuncV& operator/=(const RatFuncV& o) { *this = *this / o; return *this; }

    RatFuncV inverse() const;
    /// Integer power, negative exponents allowed.
    RatFuncV pow(int k) const;
    /// The bar involution v -> v^{-1}.
    RatFuncV bar() const;

    double eval(double v) const;

    friend bool operator==(const RatFuncV& a, const RatFuncV& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RatFuncV& a, const RatFuncV& b) { return !(a == b); }

    std::string str() const;
    /// Like str() but renders even v-powers as q-powers when the whole value
    /// only involves q (all exponents even). Display only.
    std::string str_q() const;

private:
    LaurentV num_, den_;
    void normalize();
};

} // namespace qherm
