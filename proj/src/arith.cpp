#include "mvp/arith.hpp"

#include "mvp/errors.hpp"
#include "mvp/kernels.hpp"

namespace mvp {

namespace {

// Below this many term pairs the thread start-up dominates.
constexpr std::size_t parallel_threshold = 1u << 14;

}  // namespace

Mvp add(const Mvp& p, const Mvp& q) {
    Mvp out = p;
    for (const auto& [term, coeff] : q) out.accumulate(term, coeff);
    return out;
}

Mvp negate(const Mvp& p) {
    Mvp out;
    for (const auto& [term, coeff] : p) out.accumulate(term, -coeff);
    return out;
}

Mvp subtract(const Mvp& p, const Mvp& q) {
    return add(p, negate(q));
}

Mvp scale(const Mvp& p, double factor) {
    Mvp out;
    for (const auto& [term, coeff] : p) out.accumulate(term, coeff * factor);
    return out;
}

Mvp multiply(const Mvp& p, const Mvp& q) {
    if (kernels::max_threads() > 1 && p.size() * q.size() >= parallel_threshold) {
        return kernels::multiply_parallel(p, q);
    }
    return kernels::multiply_serial(p, q);
}

Mvp pow(const Mvp& p, std::int64_t n) {
    if (n < 0) throw DomainError("negative powers of a polynomial are not supported; use invert() for monomials");
    Mvp result(1.0);
    Mvp square = p;
    while (n != 0) {
        if (n & 1) result = multiply(result, square);
        n >>= 1;
        if (n != 0) square = multiply(square, square);
    }
    return result;
}

}  // namespace mvp
