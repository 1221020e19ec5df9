#pragma once

// Hot loops in two flavours: a serial reference and an OpenMP version that
// must produce bit-identical results. The public operations (multiply,
// subvec) dispatch between them; tests and the benchmark call both directly.

#include <cstddef>
#include <utility>
#include <vector>

#include "mvp/mvp.hpp"

namespace mvp::kernels {

struct MultiplyStats {
    std::size_t accumulations = 0;
};

// For each term of p in storage order, for each term of q in storage order,
// accumulate the product into the result.
Mvp multiply_serial(const Mvp& p, const Mvp& q, MultiplyStats* stats = nullptr);

// Term products are formed in parallel one block of rows at a time. Each
// thread then owns the result terms whose hash falls in its shard and sums
// them in the serial order, so the result is bit-identical to multiply_serial.
Mvp multiply_parallel(const Mvp& p, const Mvp& q, MultiplyStats* stats = nullptr);

// A polynomial compiled against a fixed list of bound columns for fast
// pointwise evaluation.
struct EvalPlan {
    struct Factor {
        std::size_t column;
        Power power;
    };
    std::vector<double> coeffs;
    std::vector<std::size_t> offsets;  // term i owns factors[offsets[i], offsets[i+1])
    std::vector<Factor> factors;
};

// Each column holds either `points` values or a single recycled value.
struct Columns {
    std::vector<std::vector<double>> values;
    std::size_t points = 0;

    double at(std::size_t column, std::size_t point) const {
        const auto& v = values[column];
        return v.size() == 1 ? v[0] : v[point];
    }
};

// Evaluate at every point. Throws DomainError for zero to a negative power.
std::vector<double> evaluate_serial(const EvalPlan& plan, const Columns& columns);
std::vector<double> evaluate_parallel(const EvalPlan& plan, const Columns& columns);

// base^k for integer k by repeated squaring; negative k via the reciprocal.
// Returns NaN-free results only when base != 0 or k >= 0.
double real_power(double base, Power k);

bool parallel_available() noexcept;
int max_threads() noexcept;

}  // namespace mvp::kernels
