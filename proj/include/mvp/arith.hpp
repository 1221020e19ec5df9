#pragma once

#include <cstdint>

#include "mvp/mvp.hpp"

namespace mvp {

Mvp add(const Mvp& p, const Mvp& q);
Mvp negate(const Mvp& p);
Mvp subtract(const Mvp& p, const Mvp& q);
Mvp scale(const Mvp& p, double factor);

/// Term-pair convolution. Large products use the OpenMP kernel when it is
/// available; the result is identical to the serial kernel either way.
Mvp multiply(const Mvp& p, const Mvp& q);

/// p^n by repeated squaring, n >= 0. pow(anything, 0) is the constant 1.
/// Negative n throws DomainError; use invert() for monomials.
Mvp pow(const Mvp& p, std::int64_t n);

inline Mvp operator+(const Mvp& p, const Mvp& q) { return add(p, q); }
inline Mvp operator-(const Mvp& p, const Mvp& q) { return subtract(p, q); }
inline Mvp operator-(const Mvp& p) { return negate(p); }
inline Mvp operator*(const Mvp& p, const Mvp& q) { return multiply(p, q); }

inline Mvp operator+(const Mvp& p, double c) { return add(p, Mvp(c)); }
inline Mvp operator+(double c, const Mvp& p) { return add(Mvp(c), p); }
inline Mvp operator-(const Mvp& p, double c) { return add(p, Mvp(-c)); }
inline Mvp operator-(double c, const Mvp& p) { return add(Mvp(c), negate(p)); }
inline Mvp operator*(const Mvp& p, double c) { return scale(p, c); }
inline Mvp operator*(double c, const Mvp& p) { return scale(p, c); }
inline Mvp operator/(const Mvp& p, double c) { return scale(p, 1.0 / c); }

}  // namespace mvp
