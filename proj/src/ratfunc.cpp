#include "qherm/ratfunc.hpp"

#include <sstream>

namespace qherm {

RatFuncV::RatFuncV(LaurentV num, LaurentV den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFuncV: zero denominator");
    normalize();
}

void RatFuncV::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentV(1);
        return;
    }
    // Pull the v-power out of the denominator; v is a unit.
    int s = den_.min_exp();
    if (s != 0) {
        den_ = den_.shifted(-s);
        num_ = num_.shifted(-s);
    }
    if (den_.is_monomial()) {
        // den is a nonzero constant: fold it into the numerator.
        num_ = num_ * (Rational(1) / den_.coeff(0));
        den_ = LaurentV(1);
        return;
    }
    LaurentV g = laurent_gcd(num_, den_);
    if (!g.is_one() && !g.is_zero()) {
        LaurentV qn, qd;
        if (!divide_exact(num_, g, qn) || !divide_exact(den_, g, qd))
            throw std::logic_error("RatFuncV: gcd does not divide");
        num_ = qn;
        den_ = qd;
    }
    Rational c = rational_content(den_);
    if (c != 1) {
        den_ = den_ * (Rational(1) / c);
        num_ = num_ * (Rational(1) / c);
    }
}

RatFuncV operator+(const RatFuncV& a, const RatFuncV& b) {
    if (a.den_.is_one() && b.den_.is_one()) {
        RatFuncV r;
        r.num_ = a.num_ + b.num_;
        return r;
    }
    return RatFuncV(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFuncV operator-(const RatFuncV& a, const RatFuncV& b) {
    if (a.den_.is_one() && b.den_.is_one()) {
        RatFuncV r;
        r.num_ = a.num_ - b.num_;
        return r;
    }
    return RatFuncV(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFuncV operator*(const RatFuncV& a, const RatFuncV& b) {
    if (a.den_.is_one() && b.den_.is_one()) {
        RatFuncV r;
        r.num_ = a.num_ * b.num_;
        return r;
    }
    return RatFuncV(a.num_ * b.num_, a.den_ * b.den_);
}

RatFuncV operator/(const RatFuncV& a, const RatFuncV& b) {
    if (b.is_zero()) throw std::domain_error("RatFuncV: division by zero");
    return RatFuncV(a.num_ * b.den_, a.den_ * b.num_);
}

RatFuncV RatFuncV::operator-() const {
    RatFuncV r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFuncV RatFuncV::inverse() const {
    if (is_zero()) throw std::domain_error("RatFuncV: inverse of zero");
    return RatFuncV(den_, num_);
}

RatFuncV RatFuncV::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    RatFuncV r(1);
    RatFuncV base = *this;
    unsigned e = static_cast<unsigned>(k);
    while (e) {
        if (e & 1u) r *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return r;
}

RatFuncV RatFuncV::bar() const {
    return RatFuncV(num_.bar(), den_.bar());
}

double RatFuncV::eval(double v) const {
    return num_.eval(v) / den_.eval(v);
}

std::string RatFuncV::str() const {
    if (den_.is_one()) return num_.str();
    std::ostringstream os;
    os << "(" << num_.str() << ")/(" << den_.str() << ")";
    return os.str();
}

namespace {

bool all_even(const LaurentV& p) {
    for (const auto& [e, c] : p.coeffs())
        if (e % 2 != 0) return false;
    return true;
}

std::string laurent_str_q(const LaurentV& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        Rational c = it->second;
        int e = it->first / 2;
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (e == 0) {
            os << c.get_str();
        } else {
            if (c != 1) os << c.get_str() << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

} // namespace

std::string RatFuncV::str_q() const {
    if (!all_even(num_) || !all_even(den_)) return str();
    if (den_.is_one()) return laurent_str_q(num_);
    return "(" + laurent_str_q(num_) + ")/(" + laurent_str_q(den_) + ")";
}

} // namespace qherm
