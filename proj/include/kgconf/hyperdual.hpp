#pragma once

// Hyper-dual numbers: a + b e1 + c e2 + d e1e2 with e1^2 = e2^2 = 0.
//
// Seeding two coordinates with unit e1 and e2 parts yields the exact first
// partials in the e1/e2 slots and the exact second (pure or mixed) partial in
// the e1e2 slot. The value type may be real or complex; coordinates stay real
// even when the field is complex.

#include <cmath>
#include <complex>
#include <type_traits>

namespace kgconf {

template <class T>
struct HyperDual;

template <class U>
struct is_hyperdual : std::false_type {};
template <class T>
struct is_hyperdual<HyperDual<T>> : std::true_type {};

template <class U, class T>
concept HyperDualScalar =
    !is_hyperdual<std::remove_cvref_t<U>>::value && std::is_convertible_v<U, T>;

template <class T>
struct HyperDual {
  T v{};
  T d1{};
  T d2{};
  T d12{};

  constexpr HyperDual() = default;
  constexpr HyperDual(T value, T e1, T e2, T e12)
      : v(value), d1(e1), d2(e2), d12(e12) {}
  template <HyperDualScalar<T> U>
  constexpr HyperDual(U value) : v(T(value)) {}  // NOLINT(implicit)

  HyperDual& operator+=(const HyperDual& o) {
    v += o.v;
    d1 += o.d1;
    d2 += o.d2;
    d12 += o.d12;
    return *this;
  }
  HyperDual& operator-=(const HyperDual& o) {
    v -= o.v;
    d1 -= o.d1;
    d2 -= o.d2;
    d12 -= o.d12;
    return *this;
  }
  HyperDual& operator*=(const HyperDual& o) {
    *this = *this * o;
    return *this;
  }
  HyperDual& operator/=(const HyperDual& o) {
    *this = *this / o;
    return *this;
  }

  friend HyperDual operator-(const HyperDual& a) {
    return {-a.v, -a.d1, -a.d2, -a.d12};
  }
  friend HyperDual operator+(HyperDual a, const HyperDual& b) { return a += b; }
  friend HyperDual operator-(HyperDual a, const HyperDual& b) { return a -= b; }
  friend HyperDual operator*(const HyperDual& a, const HyperDual& b) {
    return {a.v * b.v, a.v * b.d1 + a.d1 * b.v, a.v * b.d2 + a.d2 * b.v,
            a.v * b.d12 + a.d1 * b.d2 + a.d2 * b.d1 + a.d12 * b.v};
  }
  friend HyperDual operator/(const HyperDual& a, const HyperDual& b) {
    const T inv = T(1) / b.v;
    return a * chain(b, inv, -inv * inv, T(2) * inv * inv * inv);
  }

  // Scalars scale every slot.
  template <HyperDualScalar<T> U>
  friend HyperDual operator*(const HyperDual& a, const U& s) {
    const T k(s);
    return {a.v * k, a.d1 * k, a.d2 * k, a.d12 * k};
  }
  template <HyperDualScalar<T> U>
  friend HyperDual operator*(const U& s, const HyperDual& a) {
    return a * s;
  }
  template <HyperDualScalar<T> U>
  friend HyperDual operator/(const HyperDual& a, const U& s) {
    const T k = T(1) / T(s);
    return a * k;
  }
  template <HyperDualScalar<T> U>
  friend HyperDual operator/(const U& s, const HyperDual& a) {
    return HyperDual(T(s)) / a;
  }
  template <HyperDualScalar<T> U>
  friend HyperDual operator+(HyperDual a, const U& s) {
    a.v += T(s);
    return a;
  }
  template <HyperDualScalar<T> U>
  friend HyperDual operator+(const U& s, HyperDual a) {
    a.v += T(s);
    return a;
  }
  template <HyperDualScalar<T> U>
  friend HyperDual operator-(HyperDual a, const U& s) {
    a.v -= T(s);
    return a;
  }
  template <HyperDualScalar<T> U>
  friend HyperDual operator-(const U& s, const HyperDual& a) {
    return HyperDual(T(s)) - a;
  }

  /// f(x) given f, f' and f'' at the value slot.
  friend HyperDual chain(const HyperDual& x, T f, T fp, T fpp) {
    return {f, fp * x.d1, fp * x.d2, fp * x.d12 + fpp * x.d1 * x.d2};
  }

  friend HyperDual exp(const HyperDual& x) {
    using std::exp;
    const T e = exp(x.v);
    return chain(x, e, e, e);
  }
  friend HyperDual log(const HyperDual& x) {
    using std::log;
    const T inv = T(1) / x.v;
    return chain(x, log(x.v), inv, -inv * inv);
  }
  friend HyperDual sqrt(const HyperDual& x) {
    using std::sqrt;
    const T s = sqrt(x.v);
    const T fp = T(0.5) / s;
    return chain(x, s, fp, -fp / (T(2) * x.v));
  }
  friend HyperDual pow(const HyperDual& x, double p) {
    using std::pow;
    const T f = pow(x.v, p);
    const T fp = T(p) * pow(x.v, p - 1.0);
    const T fpp = T(p * (p - 1.0)) * pow(x.v, p - 2.0);
    return chain(x, f, fp, fpp);
  }
  friend HyperDual sin(const HyperDual& x) {
    using std::cos;
    using std::sin;
    const T s = sin(x.v);
    return chain(x, s, cos(x.v), -s);
  }
  friend HyperDual cos(const HyperDual& x) {
    using std::cos;
    using std::sin;
    const T c = cos(x.v);
    return chain(x, c, -sin(x.v), -c);
  }
};

/// Non-negative integer power by repeated multiplication; exact at zero.
template <class S>
S ipow(const S& x, int n) {
  S result(1.0);
  for (int k = 0; k < n; ++k) result = result * x;
  return result;
}

}  // namespace kgconf
