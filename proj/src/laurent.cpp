#include "qherm/laurent.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace qherm {

void LaurentV::trim() {
    for (auto it = c_.begin(); it != c_.end();) {
        if (it->second == 0) it = c_.erase(it);
        else ++it;
    }
}

LaurentV& LaurentV::operator+=(const LaurentV& o) {
    for (const auto& [e, r] : o.c_) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_.emplace(e, r);
        } else {
            it->second += r;
            if (it->second == 0) c_.erase(it);
        }
    }
    return *this;
}

LaurentV& LaurentV::operator-=(const LaurentV& o) {
    for (const auto& [e, r] : o.c_) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_.emplace(e, -r);
        } else {
            it->second -= r;
            if (it->second == 0) c_.erase(it);
        }
    }
    return *this;
}

LaurentV operator*(const LaurentV& a, const LaurentV& b) {
    LaurentV r;
    for (const auto& [ea, ra] : a.c_)
        for (const auto& [eb, rb] : b.c_)
            r.c_[ea + eb] += ra * rb;
    r.trim();
    return r;
}

LaurentV operator*(const LaurentV& a, const Rational& s) {
    if (s == 0) return LaurentV();
    LaurentV r = a;
    for (auto& [e, c] : r.c_) c *= s;
    return r;
}

LaurentV LaurentV::operator-() const {
    LaurentV r = *this;
    for (auto& [e, c] : r.c_) c = -c;
    return r;
}

LaurentV LaurentV::pow(unsigned k) const {
    LaurentV r(1);
    LaurentV base = *this;
    while (k) {
        if (k & 1u) r *= base;
        k >>= 1u;
        if (k) base *= base;
    }
    return r;
}

LaurentV LaurentV::shifted(int k) const {
    LaurentV r;
    for (const auto& [e, c] : c_) r.c_[e + k] = c;
    return r;
}

LaurentV LaurentV::bar() const {
    LaurentV r;
    for (const auto& [e, c] : c_) r.c_[-e] = c;
    return r;
}

double LaurentV::eval(double v) const {
    double acc = 0.0;
    for (const auto& [e, c] : c_) acc += c.get_d() * std::pow(v, e);
    return acc;
}

std::string LaurentV::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        Rational c = it->second;
        int e = it->first;
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
            os << "v";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

namespace {

// Dense polynomial view: coeffs[i] is the coefficient of v^{i + offset}.
struct DensePoly {
    std::vector<Rational> c;
    int deg() const { return static_cast<int>(c.size()) - 1; }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

DensePoly to_dense(const LaurentV& p, int shift) {
    DensePoly d;
    d.c.assign(static_cast<size_t>(p.max_exp() + shift) + 1, Rational(0));
    for (const auto& [e, r] : p.coeffs()) d.c[static_cast<size_t>(e + shift)] = r;
    return d;
}

LaurentV from_dense(const DensePoly& d, int shift) {
    LaurentV p;
    for (size_t i = 0; i < d.c.size(); ++i)
        if (d.c[i] != 0) p += LaurentV::monomial(d.c[i], static_cast<int>(i) + shift);
    return p;
}

// Long division a = q*b + r over Q[v]; both dense, b nonzero.
void dense_divmod(const DensePoly& a, const DensePoly& b, DensePoly& q, DensePoly& r) {
    r = a;
    r.trim();
    q.c.clear();
    int db = b.deg();
    if (r.deg() >= db) q.c.assign(static_cast<size_t>(r.deg() - db) + 1, Rational(0));
    while (r.deg() >= db && !r.c.empty()) {
        int shift = r.deg() - db;
        Rational f = r.c.back() / b.c.back();
        q.c[static_cast<size_t>(shift)] = f;
        for (int i = 0; i <= db; ++i)
            r.c[static_cast<size_t>(i + shift)] -= f * b.c[static_cast<size_t>(i)];
        r.trim();
    }
}

} // namespace

bool divide_exact(const LaurentV& a, const LaurentV& b, LaurentV& quo) {
    if (b.is_zero()) throw std::domain_error("LaurentV: division by zero");
    if (a.is_zero()) { quo = LaurentV(); return true; }
    int sa = -a.min_exp(), sb = -b.min_exp();
    DensePoly da = to_dense(a, sa);
    DensePoly db = to_dense(b, sb);
    DensePoly q, r;
    dense_divmod(da, db, q, r);
    if (!r.c.empty()) return false;
    quo = from_dense(q, sb - sa);
    return true;
}

Rational rational_content(const LaurentV& p) {
    if (p.is_zero()) return Rational(1);
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& [e, c] : p.coeffs()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    if (p.lead_coeff() < 0) content = -content;
    return content;
}

LaurentV laurent_gcd(const LaurentV& a, const LaurentV& b) {
    if (a.is_zero() && b.is_zero()) return LaurentV();
    if (a.is_zero()) return b.shifted(-b.min_exp()) * (Rational(1) / rational_content(b.shifted(-b.min_exp())));
    if (b.is_zero()) return a.shifted(-a.min_exp()) * (Rational(1) / rational_content(a.shifted(-a.min_exp())));

    DensePoly x = to_dense(a, -a.min_exp());
    DensePoly y = to_dense(b, -b.min_exp());
    x.trim();
    y.trim();
    while (!y.c.empty()) {
        DensePoly q, r;
        dense_divmod(x, y, q, r);
        x = y;
        y = r;
    }
    LaurentV g = from_dense(x, 0);
    return g * (Rational(1) / rational_content(g));
}

} // namespace qherm
