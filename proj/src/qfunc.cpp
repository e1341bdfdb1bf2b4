#include "qherm/qfunc.hpp"

namespace qherm {

RatFuncV qnum_symmetric(int n, int d) {
    if (n < 0) throw std::invalid_argument("qnum_symmetric: n must be >= 0");
    if (d <= 0) throw std::invalid_argument("qnum_symmetric: d must be positive");
    LaurentV s;
    for (int k = 0; k < n; ++k) s += LaurentV::vpow(2 * d * (n - 1 - 2 * k));
    return RatFuncV(s);
}

ParamScalar qnum_nonsym(int n, const ParamScalar& p) {
    if (n < 0) throw std::invalid_argument("qnum_nonsym: n must be >= 0");
    ParamScalar s;
    ParamScalar pk(1);
    for (int k = 0; k < n; ++k) {
        s += pk;
        pk *= p;
    }
    return s;
}

RatFuncV qfactorial(int n, int d) {
    if (n < 0) throw std::invalid_argument("qfactorial: n must be >= 0");
    RatFuncV f(1);
    for (int k = 2; k <= n; ++k) f *= qnum_symmetric(k, d);
    return f;
}

RatFuncV qbinomial(int n, int m, int d) {
    if (m < 0 || m > n) throw std::invalid_argument("qbinomial: require 0 <= m <= n");
    return qfactorial(n, d) / (qfactorial(m, d) * qfactorial(n - m, d));
}

ParamScalar qpochhammer_finite(const ParamScalar& a, const ParamScalar& base, int n) {
    if (n < 0) throw std::invalid_argument("qpochhammer_finite: n must be >= 0");
    ParamScalar prod(1);
    ParamScalar bk(1);
    for (int k = 0; k < n; ++k) {
        prod *= ParamScalar(1) - a * bk;
        bk *= base;
    }
    return prod;
}

ParamScalar qpochhammer_finite(const ParamScalar& a, int n) {
    return qpochhammer_finite(a, ParamScalar::qpow(1), n);
}

RatFuncV qpoch_rf(const RatFuncV& a, const RatFuncV& base, int n) {
    if (n < 0) throw std::invalid_argument("qpoch_rf: n must be >= 0");
    RatFuncV prod(1);
    RatFuncV bk(1);
    for (int k = 0; k < n; ++k) {
        prod *= RatFuncV(1) - a * bk;
        bk *= base;
    }
    return prod;
}

RatFuncV qpoch_qq(int n) {
    return qpoch_rf(RatFuncV::qpow(1), RatFuncV::qpow(1), n);
}

std::vector<RatFuncV> qpochhammer_series(int n_max) {
    if (n_max < 0) throw std::invalid_argument("qpochhammer_series: n_max must be >= 0");
    std::vector<RatFuncV> out;
    out.reserve(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        RatFuncV c = RatFuncV::qpow(n * (n - 1) / 2) / qpoch_qq(n);
        if (n % 2 != 0) c = -c;
        out.push_back(c);
    }
    return out;
}

bool qbinom_alternating_sum(int ell) {
    if (ell < 0) throw std::invalid_argument("qbinom_alternating_sum: ell must be >= 0");
    RatFuncV lhs;
    for (int n = 0; n <= ell; ++n) {
        RatFuncV term = qbinomial(ell, n, 1) * RatFuncV::qpow(n * (ell + 1));
        if (n % 2 != 0) term = -term;
        lhs += term;
    }
    RatFuncV rhs = qpoch_rf(RatFuncV::qpow(2), RatFuncV::qpow(2), ell);
    return lhs == rhs;
}

} // namespace qherm
