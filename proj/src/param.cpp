#include "qherm/param.hpp"

#include <cmath>
#include <sstream>

namespace qherm {

RatFuncV ParamScalar::constant_value() const {
    if (t_.empty()) return RatFuncV(0);
    if (!is_constant()) throw std::logic_error("ParamScalar: not constant: " + str());
    return t_.begin()->second;
}

void ParamScalar::drop_zeros() {
    for (auto it = t_.begin(); it != t_.end();) {
        if (it->second.is_zero()) it = t_.erase(it);
        else ++it;
    }
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& o) {
    for (const auto& [m, r] : o.t_) {
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, r);
        } else {
            it->second += r;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& o) {
    for (const auto& [m, r] : o.t_) {
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, -r);
        } else {
            it->second -= r;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
    ParamScalar r;
    for (const auto& [ma, ra] : a.t_) {
        for (const auto& [mb, rb] : b.t_) {
            Mono m = ma;
            for (const auto& [s, e] : mb) m[s] += e;
            auto it = r.t_.find(m);
            if (it == r.t_.end()) r.t_.emplace(std::move(m), ra * rb);
            else it->second += ra * rb;
        }
    }
    r.drop_zeros();
    return r;
}

ParamScalar ParamScalar::operator-() const {
    ParamScalar r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

ParamScalar operator/(const ParamScalar& a, const RatFuncV& s) {
    if (s.is_zero()) throw std::domain_error("ParamScalar: division by zero scalar");
    ParamScalar r = a;
    RatFuncV inv = s.inverse();
    for (auto& [m, c] : r.t_) c *= inv;
    return r;
}

ParamScalar ParamScalar::pow(unsigned k) const {
    ParamScalar r(1);
    ParamScalar base = *this;
    while (k) {
        if (k & 1u) r *= base;
        k >>= 1u;
        if (k) base *= base;
    }
    return r;
}

ParamScalar ParamScalar::subst(const std::string& name, const ParamScalar& value) const {
    ParamScalar out;
    for (const auto& [m, c] : t_) {
        auto it = m.find(name);
        if (it == m.end()) {
            ParamScalar term;
            term.t_[m] = c;
            out += term;
            continue;
        }
        int e = it->second;
        Mono rest = m;
        rest.erase(name);
        ParamScalar term;
        term.t_[rest] = c;
        out += term * value.pow(static_cast<unsigned>(e));
    }
    return out;
}

ParamScalar ParamScalar::bar() const {
    ParamScalar r;
    for (const auto& [m, c] : t_) r.t_[m] = c.bar();
    r.drop_zeros();
    return r;
}

double ParamScalar::eval(double v, const std::map<std::string, double>& syms) const {
    double acc = 0.0;
    for (const auto& [m, c] : t_) {
        double term = c.eval(v);
        for (const auto& [s, e] : m) {
            auto it = syms.find(s);
            if (it == syms.end())
                throw std::invalid_argument("ParamScalar::eval: no value for symbol " + s);
            term *= std::pow(it->second, e);
        }
        acc += term;
    }
    return acc;
}

bool operator==(const ParamScalar& a, const ParamScalar& b) {
    if (a.t_.size() != b.t_.size()) return false;
    auto ia = a.t_.begin();
    auto ib = b.t_.begin();
    for (; ia != a.t_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        if (ia->second != ib->second) return false;
    }
    return true;
}

namespace {

std::string mono_str(const Mono& m) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, e] : m) {
        if (!first) os << "*";
        first = false;
        os << s;
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

} // namespace

std::string ParamScalar::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        if (!first) os << " + ";
        first = false;
        if (m.empty()) {
            os << c.str_q();
            continue;
        }
        if (c.is_one()) {
            os << mono_str(m);
        } else {
            std::string cs = c.str_q();
            bool composite = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
            if (composite) os << "(" << cs << ")*";
            else os << cs << "*";
            os << mono_str(m);
        }
    }
    return os.str();
}

std::string ParamScalar::latex() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        if (!first) os << " + ";
        first = false;
        std::ostringstream ms;
        for (const auto& [s, e] : m) {
            if (s.size() > 1 && (s[0] == 'c')) ms << "c_{" << s.substr(1) << "}";
            else ms << s;
            if (e != 1) ms << "^{" << e << "}";
        }
        if (m.empty()) {
            os << c.str_q();
        } else if (c.is_one()) {
            os << ms.str();
        } else {
            os << "\\left(" << c.str_q() << "\\right)" << ms.str();
        }
    }
    return os.str();
}

nlohmann::json ratfunc_to_json(const RatFuncV& r) {
    auto side = [](const LaurentV& p) {
        nlohmann::json arr = nlohmann::json::array();
        for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
            arr.push_back({it->first, it->second.get_str()});
        if (p.is_zero()) arr.push_back({0, "0"});
        return arr;
    };
    return {{"num", side(r.num())}, {"den", side(r.den())}};
}

nlohmann::json ParamScalar::to_json() const {
    if (is_constant()) return ratfunc_to_json(constant_value());
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : t_) {
        nlohmann::json mono = nlohmann::json::array();
        for (const auto& [s, e] : m) mono.push_back({s, e});
        arr.push_back({mono, ratfunc_to_json(c)});
    }
    return arr;
}

} // namespace qherm
