#pragma once

#include <concepts>
#include <numeric>
#include <tuple>

#include "chipfire/error.hpp"

namespace chipfire {

// Arithmetic that throws ErrorKind::Overflow instead of wrapping. Types
// without builtin overflow detection fall through to plain arithmetic.
template <typename T>
T checked_add(T a, T b) {
  if constexpr (std::integral<T>) {
    T r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer overflow in addition");
    return r;
  } else {
    return a + b;
  }
}

template <typename T>
T checked_sub(T a, T b) {
  if constexpr (std::integral<T>) {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer overflow in subtraction");
    return r;
  } else {
    return a - b;
  }
}

template <typename T>
T checked_mul(T a, T b) {
  if constexpr (std::integral<T>) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer overflow in multiplication");
    return r;
  } else {
    return a * b;
  }
}

template <typename T>
T abs_value(T a) {
  return a < T(0) ? -a : a;
}

template <typename T>
T gcd_value(T a, T b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != T(0)) {
    T t = a % b;
    a = b;
    b = t;
  }
  return a;
}

template <typename T>
T lcm_value(T a, T b) {
  if (a == T(0) || b == T(0)) return T(0);
  return checked_mul(abs_value(a) / gcd_value(a, b), abs_value(b));
}

// Returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
template <typename T>
std::tuple<T, T, T> extended_gcd(T a, T b) {
  T old_r = a, r = b;
  T old_s = 1, s = 0;
  T old_t = 0, t = 1;
  while (r != T(0)) {
    T quot = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, old_r - quot * r);
    std::tie(old_s, s) = std::make_tuple(s, old_s - quot * s);
    std::tie(old_t, t) = std::make_tuple(t, old_t - quot * t);
  }
  if (old_r < T(0)) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

// Floor division for a possibly negative numerator, b > 0.
template <typename T>
T floor_div(T a, T b) {
  T q = a / b;
  if ((a % b != T(0)) && ((a < T(0)) != (b < T(0)))) --q;
  return q;
}

template <typename T>
T ceil_div(T a, T b) {
  return -floor_div(-a, b);
}

// Remainder in [0, b) for b > 0.
template <typename T>
T positive_mod(T a, T b) {
  T r = a % b;
  return r < T(0) ? r + b : r;
}

}  // namespace chipfire
