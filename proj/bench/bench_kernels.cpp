// Serial reference against OpenMP kernels. Prints CSV:
// kernel,op,size,threads,mean_ms,identical

#include <chrono>
#include <cstdio>
#include <cstring>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "mvp/all.hpp"
#include "mvp/kernels.hpp"

using namespace mvp;

namespace {

template <typename F>
double mean_ms(int trials, F&& op) {
    using clock = std::chrono::steady_clock;
    double total = 0.0;
    for (int t = 0; t < trials; ++t) {
        const auto start = clock::now();
        op();
        total += std::chrono::duration<double, std::milli>(clock::now() - start).count();
    }
    return total / trials;
}

bool identical(const Mvp& a, const Mvp& b) {
    if (a.size() != b.size()) return false;
    auto i = a.begin();
    for (auto j = b.begin(); j != b.end(); ++i, ++j) {
        if (i->first != j->first || std::memcmp(&i->second, &j->second, sizeof(double)) != 0) return false;
    }
    return true;
}

void row(const char* kernel, const char* op, std::size_t size, double ms, bool same) {
    std::printf("%s,%s,%zu,%d,%.3f,%s\n", kernel, op, size, kernels::max_threads(), ms, same ? "yes" : "no");
}

void bench_multiply(int terms, int symbols, int trials) {
    RandomSpec spec{terms, 3, 6, letters(symbols), 1};
    const Mvp p = rmvp(spec);
    spec.seed = 2;
    const Mvp q = rmvp(spec);
    const Mvp serial = kernels::multiply_serial(p, q);
    const bool same = identical(serial, kernels::multiply_parallel(p, q));
    const std::size_t size = p.size() * q.size();
    row("serial", "multiply", size, mean_ms(trials, [&] { return kernels::multiply_serial(p, q); }), true);
    row("parallel", "multiply", size, mean_ms(trials, [&] { return kernels::multiply_parallel(p, q); }), same);
}

void bench_subvec(std::size_t points, int trials) {
    const Mvp p = pow(parse("1 + a + b^-1 + c d + a^2 d"), 4);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.5, 1.5);
    std::map<Symbol, std::vector<double>> at;
    for (const char* s : {"a", "b", "c", "d"}) {
        auto& column = at[s];
        for (std::size_t i = 0; i < points; ++i) column.push_back(u(rng));
    }
    const auto serial = subvec(p, at, Execution::serial);
    const bool same = serial == subvec(p, at, Execution::parallel);
    row("serial", "subvec", points, mean_ms(trials, [&] { return subvec(p, at, Execution::serial); }), true);
    row("parallel", "subvec", points, mean_ms(trials, [&] { return subvec(p, at, Execution::parallel); }), same);
}

}  // namespace

int main(int argc, char** argv) {
    const int trials = argc > 1 ? std::stoi(argv[1]) : 3;
    std::printf("kernel,op,size,threads,mean_ms,identical\n");
    for (int terms : {100, 300, 1000}) bench_multiply(terms, 4, trials);
    bench_multiply(1000, 8, trials);
    for (std::size_t points : {1000u, 100000u, 1000000u}) bench_subvec(points, trials);
    return 0;
}
