#pragma once

#include "mvp/kernels.hpp"

namespace mvp::kernels::detail {

// Sets `bad` when a zero base meets a negative power.
double evaluate_point(const EvalPlan& plan, const Columns& columns, std::size_t point, bool& bad);

}  // namespace mvp::kernels::detail
