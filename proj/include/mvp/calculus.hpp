#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "mvp/mvp.hpp"

namespace mvp {

// Partial derivative in each listed symbol, applied left to right.
// c s^k R -> c k s^(k-1) R, valid for negative k.
Mvp deriv(const Mvp& p, std::span<const Symbol> vars);
Mvp deriv(const Mvp& p, std::initializer_list<std::string_view> vars);

// Mixed partial with the given order per symbol (orders >= 0).
Mvp aderiv(const Mvp& p, const std::map<Symbol, std::int64_t>& orders);

// sum_i coeffs[i] * base^i by Horner's scheme. coeffs must be nonempty.
Mvp horner(const Mvp& base, std::span<const double> coeffs);
Mvp horner(std::string_view base, std::span<const double> coeffs);

}  // namespace mvp
