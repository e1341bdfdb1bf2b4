#pragma once

#include <functional>
#include <map>

#include "qherm/param.hpp"

namespace qherm {

/// Univariate polynomial in x over the scalar tower.
class XPoly {
public:
    XPoly() = default;
    XPoly(int n) : XPoly(ParamScalar(n)) {}
    XPoly(const ParamScalar& c) {
        if (!c.is_zero()) c_[0] = c;
    }

    static XPoly x() { return monomial(ParamScalar(1), 1); }
    static XPoly monomial(const ParamScalar& c, int exp) {
        XPoly p;
        if (!c.is_zero()) p.c_[exp] = c;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
    ParamScalar coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? ParamScalar() : it->second;
    }
    ParamScalar lead_coeff() const {
        return c_.empty() ? ParamScalar() : c_.rbegin()->second;
    }
    const std::map<int, ParamScalar>& coeffs() const { return c_; }

    XPoly& operator+=(const XPoly& o);
    XPoly& operator-=(const XPoly& o);
    friend XPoly operator+(XPoly a, const XPoly& b) { a += b; return a; }
    friend XPoly operator-(XPoly a, const XPoly& b) { a -= b; return a; }
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    friend XPoly operator*(const XPoly& a, const ParamScalar& s);
    friend XPoly operator*(const ParamScalar& s, const XPoly& a) { return a * s; }
    XPoly operator-() const;

    /// Apply fn to every coefficient (substitutions, bar involution, ...).
    XPoly map_coeffs(const std::function<ParamScalar(const ParamScalar&)>& fn) const;

    friend bool operator==(const XPoly& a, const XPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const XPoly& a, const XPoly& b) { return !(a == b); }

    std::string str(const std::string& var = "x") const;
    std::string latex(const std::string& var = "x") const;
    nlohmann::json to_json(const std::string& var = "x") const;

private:
    std::map<int, ParamScalar> c_;
    void drop_zeros();
};

} // namespace qherm
