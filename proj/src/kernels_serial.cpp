#include <cstdint>

#include "mvp/errors.hpp"
#include "kernels_detail.hpp"

namespace mvp::kernels {

double real_power(double base, Power k) {
    std::uint64_t n = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
    double result = 1.0;
    double square = base;
    while (n != 0) {
        if (n & 1u) result *= square;
        n >>= 1;
        if (n != 0) square *= square;
    }
    return k < 0 ? 1.0 / result : result;
}

Mvp multiply_serial(const Mvp& p, const Mvp& q, MultiplyStats* stats) {
    Mvp out;
    std::size_t count = 0;
    for (const auto& [tp, cp] : p) {
        for (const auto& [tq, cq] : q) {
            out.accumulate(tp * tq, cp * cq);
            ++count;
        }
    }
    if (stats) stats->accumulations += count;
    return out;
}

namespace detail {

double evaluate_point(const EvalPlan& plan, const Columns& columns, std::size_t point, bool& bad) {
    double sum = 0.0;
    for (std::size_t i = 0; i < plan.coeffs.size(); ++i) {
        double value = plan.coeffs[i];
        for (std::size_t f = plan.offsets[i]; f < plan.offsets[i + 1]; ++f) {
            const auto& factor = plan.factors[f];
            double base = columns.at(factor.column, point);
            if (base == 0.0 && factor.power < 0) bad = true;
            value *= real_power(base, factor.power);
        }
        sum += value;
    }
    return sum;
}

}  // namespace detail

std::vector<double> evaluate_serial(const EvalPlan& plan, const Columns& columns) {
    std::vector<double> out(columns.points);
    bool bad = false;
    for (std::size_t i = 0; i < columns.points; ++i) out[i] = detail::evaluate_point(plan, columns, i, bad);
    if (bad) throw DomainError("zero raised to a negative power");
    return out;
}

}  // namespace mvp::kernels
