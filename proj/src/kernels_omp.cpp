#include <algorithm>
#include <exception>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kernels_detail.hpp"
#include "mvp/errors.hpp"

namespace mvp::kernels {

bool parallel_available() noexcept {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

int max_threads() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace {

struct Product {
    Term term;
    double coeff;
    std::size_t hash;
};

int thread_id() {
#ifdef _OPENMP
    return omp_get_thread_num();
#else
    return 0;
#endif
}

int thread_count() {
#ifdef _OPENMP
    return omp_get_num_threads();
#else
    return 1;
#endif
}

}  // namespace

// Each block of rows is expanded in parallel. Every thread then walks the
// whole block in serial order and inserts only the products whose hash falls
// in its shard, so each result term sees exactly the serial summation order.
Mvp multiply_parallel(const Mvp& p, const Mvp& q, MultiplyStats* stats) {
    constexpr std::size_t block_rows = 64;

    std::vector<const Mvp::Map::value_type*> rows;
    std::vector<const Mvp::Map::value_type*> cols;
    rows.reserve(p.size());
    cols.reserve(q.size());
    for (const auto& e : p) rows.push_back(&e);
    for (const auto& e : q) cols.push_back(&e);

    std::vector<std::vector<Product>> block(block_rows);
    std::vector<Mvp> shards(static_cast<std::size_t>(max_threads()));
    std::exception_ptr failure;
    bool failed = false;

#pragma omp parallel
    {
        const auto tid = static_cast<std::size_t>(thread_id());
        const auto nthreads = static_cast<std::size_t>(thread_count());
        Mvp& shard = shards[tid];
        const TermHash hasher;

        for (std::size_t first = 0; first < rows.size(); first += block_rows) {
            const auto n = static_cast<std::ptrdiff_t>(std::min(block_rows, rows.size() - first));

#pragma omp for schedule(dynamic, 4)
            for (std::ptrdiff_t r = 0; r < n; ++r) {
                auto& products = block[static_cast<std::size_t>(r)];
                products.clear();
                products.reserve(cols.size());
                const auto& [tp, cp] = *rows[first + static_cast<std::size_t>(r)];
                try {
                    for (const auto* col : cols) {
                        Term t = tp * col->first;
                        const std::size_t h = hasher(t);
                        products.push_back({std::move(t), cp * col->second, h});
                    }
                } catch (...) {
#pragma omp critical(mvp_multiply_failure)
                    {
                        if (!failure) failure = std::current_exception();
                        failed = true;
                    }
                }
            }
            // implicit barrier: products complete, `failed` visible to all
            if (failed) break;

            for (std::ptrdiff_t r = 0; r < n; ++r) {
                for (auto& product : block[static_cast<std::size_t>(r)]) {
                    if (product.hash % nthreads == tid) shard.accumulate(std::move(product.term), product.coeff);
                }
            }
#pragma omp barrier
        }
    }
    if (failure) std::rethrow_exception(failure);

    Mvp out = Mvp::merge_disjoint(std::move(shards));
    if (stats) stats->accumulations += rows.size() * cols.size();
    return out;
}

std::vector<double> evaluate_parallel(const EvalPlan& plan, const Columns& columns) {
    std::vector<double> out(columns.points);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(columns.points);
    bool any_bad = false;

#pragma omp parallel for schedule(static) reduction(|| : any_bad)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        bool bad = false;
        out[static_cast<std::size_t>(i)] = detail::evaluate_point(plan, columns, static_cast<std::size_t>(i), bad);
        any_bad = any_bad || bad;
    }
    if (any_bad) throw DomainError("zero raised to a negative power");
    return out;
}

}  // namespace mvp::kernels
