#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "qherm/ratfunc.hpp"

namespace qherm {

/// Monomial in the commuting parameter symbols (r, c, c_i, ...):
/// symbol name -> positive exponent.
using Mono = std::map<std::string, int>;

/// Polynomial in the parameter symbols with RatFuncV coefficients. This is
/// the top floor of the scalar tower; every polynomial carrier (XPoly,
/// XYPoly, SymLaurent, NCElem) stores its coefficients here.
class ParamScalar {
public:
    ParamScalar() = default;
    ParamScalar(int n) : ParamScalar(RatFuncV(n)) {}
    ParamScalar(const Rational& r) : ParamScalar(RatFuncV(r)) {}
    ParamScalar(const LaurentV& p) : ParamScalar(RatFuncV(p)) {}
    ParamScalar(const RatFuncV& r) {
        if (!r.is_zero()) t_[Mono{}] = r;
    }

    static ParamScalar symbol(const std::string& name) {
        ParamScalar p;
        p.t_[Mono{{name, 1}}] = RatFuncV(1);
        return p;
    }
    static ParamScalar vpow(int k) { return ParamScalar(RatFuncV::vpow(k)); }
    static ParamScalar qpow(int k) { return ParamScalar(RatFuncV::qpow(k)); }

    bool is_zero() const { return t_.empty(); }
    bool is_one() const {
        return t_.size() == 1 && t_.begin()->first.empty() && t_.begin()->second.is_one();
    }
    /// No parameter symbols present.
    bool is_constant() const {
        return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty());
    }
    /// The value as a RatFuncV; throws unless is_constant().
    RatFuncV constant_value() const;

    const std::map<Mono, RatFuncV>& terms() const { return t_; }
    RatFuncV coeff(const Mono& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? RatFuncV(0) : it->second;
    }

    ParamScalar& operator+=(const ParamScalar& o);
    ParamScalar& operator-=(const ParamScalar& o);
    friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { a += b; return a; }
    friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { a -= b; return a; }
    friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b);
    ParamScalar& operator*=(const ParamScalar& o) { *this = *this * o; return *this; }
    ParamScalar operator-() const;
    /// Division by an invertible scalar from the tower below.
    friend ParamScalar operator/(const ParamScalar& a, const RatFuncV& s);

    ParamScalar pow(unsigned k) const;

    /// Substitute a symbol by an arbitrary ParamScalar.
    ParamScalar subst(const std::string& name, const ParamScalar& value) const;
    /// The bar involution v -> v^{-1} applied to every coefficient.
    ParamScalar bar() const;

    double eval(double v, const std::map<std::string, double>& syms) const;

    friend bool operator==(const ParamScalar& a, const ParamScalar& b);
    friend bool operator!=(const ParamScalar& a, const ParamScalar& b) { return !(a == b); }

    std::string str() const;
    std::string latex() const;
    nlohmann::json to_json() const;

private:
    std::map<Mono, RatFuncV> t_;
    void drop_zeros();
};

nlohmann::json ratfunc_to_json(const RatFuncV& r);

} // namespace qherm
