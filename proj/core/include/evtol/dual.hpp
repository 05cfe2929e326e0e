// Forward-mode dual scalar carrying a fixed-width derivative vector.
//
// Used to obtain exact local Jacobians of the one-step dynamics and of the
// per-step derived outputs; the trajectory-level gradient is then assembled
// by reverse accumulation across timesteps (see nlp.cpp). Branch decisions
// (grid-cell lookup, clamping) always test .val, so piecewise-defined models
// differentiate correctly inside each piece.

#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace evtol {

template <std::size_t K>
struct Dual {
    double val{0.0};
    std::array<double, K> der{};

    Dual() = default;
    Dual(double v) : val(v) { der.fill(0.0); }  // NOLINT: implicit by design

    static Dual seed(double v, std::size_t k) {
        Dual d(v);
        d.der[k] = 1.0;
        return d;
    }

    Dual& operator+=(const Dual& o) {
        val += o.val;
        for (std::size_t i = 0; i < K; ++i) der[i] += o.der[i];
        return *this;
    }
    Dual& operator-=(const Dual& o) {
        val -= o.val;
        for (std::size_t i = 0; i < K; ++i) der[i] -= o.der[i];
        return *this;
    }
    Dual& operator*=(const Dual& o) { return *this = *this * o; }
    Dual& operator/=(const Dual& o) { return *this = *this / o; }

    friend Dual operator-(const Dual& a) {
        Dual r;
        r.val = -a.val;
        for (std::size_t i = 0; i < K; ++i) r.der[i] = -a.der[i];
        return r;
    }
    friend Dual operator+(const Dual& a, const Dual& b) {
        Dual r;
        r.val = a.val + b.val;
        for (std::size_t i = 0; i < K; ++i) r.der[i] = a.der[i] + b.der[i];
        return r;
    }
    friend Dual operator-(const Dual& a, const Dual& b) {
        Dual r;
        r.val = a.val - b.val;
        for (std::size_t i = 0; i < K; ++i) r.der[i] = a.der[i] - b.der[i];
        return r;
    }
    friend Dual operator*(const Dual& a, const Dual& b) {
        Dual r;
        r.val = a.val * b.val;
        for (std::size_t i = 0; i < K; ++i) r.der[i] = a.der[i] * b.val + a.val * b.der[i];
        return r;
    }
    friend Dual operator/(const Dual& a, const Dual& b) {
        Dual r;
        const double inv = 1.0 / b.val;
        r.val = a.val * inv;
        for (std::size_t i = 0; i < K; ++i) r.der[i] = (a.der[i] - r.val * b.der[i]) * inv;
        return r;
    }

    friend bool operator<(const Dual& a, const Dual& b) { return a.val < b.val; }
    friend bool operator>(const Dual& a, const Dual& b) { return a.val > b.val; }
    friend bool operator<=(const Dual& a, const Dual& b) { return a.val <= b.val; }
    friend bool operator>=(const Dual& a, const Dual& b) { return a.val >= b.val; }
};

template <std::size_t K>
inline Dual<K> chain(double f, double dfdx, const Dual<K>& x) {
    Dual<K> r;
    r.val = f;
    for (std::size_t i = 0; i < K; ++i) r.der[i] = dfdx * x.der[i];
    return r;
}

template <std::size_t K> inline Dual<K> sin(const Dual<K>& x) { return chain(std::sin(x.val), std::cos(x.val), x); }
template <std::size_t K> inline Dual<K> cos(const Dual<K>& x) { return chain(std::cos(x.val), -std::sin(x.val), x); }
template <std::size_t K> inline Dual<K> tan(const Dual<K>& x) {
    const double c = std::cos(x.val);
    return chain(std::tan(x.val), 1.0 / (c * c), x);
}
template <std::size_t K> inline Dual<K> exp(const Dual<K>& x) {
    const double e = std::exp(x.val);
    return chain(e, e, x);
}
template <std::size_t K> inline Dual<K> log(const Dual<K>& x) { return chain(std::log(x.val), 1.0 / x.val, x); }
template <std::size_t K> inline Dual<K> log10(const Dual<K>& x) {
    return chain(std::log10(x.val), 1.0 / (x.val * std::log(10.0)), x);
}
template <std::size_t K> inline Dual<K> sqrt(const Dual<K>& x) {
    const double s = std::sqrt(x.val);
    return chain(s, 0.5 / s, x);
}
template <std::size_t K> inline Dual<K> atan(const Dual<K>& x) {
    return chain(std::atan(x.val), 1.0 / (1.0 + x.val * x.val), x);
}
template <std::size_t K> inline Dual<K> atan2(const Dual<K>& y, const Dual<K>& x) {
    const double d = x.val * x.val + y.val * y.val;
    Dual<K> r;
    r.val = std::atan2(y.val, x.val);
    for (std::size_t i = 0; i < K; ++i) r.der[i] = (x.val * y.der[i] - y.val * x.der[i]) / d;
    return r;
}
// pow with constant exponent; the only form the models need
template <std::size_t K> inline Dual<K> pow(const Dual<K>& x, double p) {
    return chain(std::pow(x.val, p), p * std::pow(x.val, p - 1.0), x);
}
template <std::size_t K> inline Dual<K> abs(const Dual<K>& x) {
    return x.val < 0.0 ? -x : x;
}

template <std::size_t K> inline double value(const Dual<K>& x) { return x.val; }
inline double value(double x) { return x; }

}  // namespace evtol
