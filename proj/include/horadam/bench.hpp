#pragma once

#include "horadam/scalar_seq.hpp"

#include <chrono>
#include <stdexcept>
#include <utility>
#include <vector>

namespace horadam {

struct BenchRow {
    unsigned long long n = 0;
    double naive_ms = 0.0;
    double fast_ms = 0.0;
    bool equal = false; // both methods produced the same (F_n, L_n)
};

/// Times the plain recurrence against fast doubling for (F_n, L_n).
/// Results are compared for exact equality before timings are reported.
inline BenchRow bench_point(const Rational& p, const Rational& q, unsigned long long n) {
    using clock = std::chrono::steady_clock;
    BenchRow row;
    row.n = n;

    auto t0 = clock::now();
    Rational f_prev(0), f_cur(1);
    Rational l_prev(2), l_cur = p;
    for (unsigned long long i = 1; i < n; ++i) {
        Rational f_next = p * f_cur + q * f_prev;
        f_prev = std::move(f_cur);
        f_cur = std::move(f_next);
        Rational l_next = p * l_cur + q * l_prev;
        l_prev = std::move(l_cur);
        l_cur = std::move(l_next);
    }
    Rational naive_f = n == 0 ? f_prev : f_cur;
    Rational naive_l = n == 0 ? l_prev : l_cur;
    auto t1 = clock::now();

    auto [fast_f, fast_l] = fast_double(p, q, n);
    auto t2 = clock::now();

    row.naive_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    row.fast_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
    row.equal = naive_f == fast_f && naive_l == fast_l;
    return row;
}

inline std::vector<BenchRow> run_bench(const Rational& p, const Rational& q,
                                       const std::vector<unsigned long long>& ns) {
    fibonacci_params(p, q).validate();
    std::vector<BenchRow> rows;
    rows.reserve(ns.size());
    for (unsigned long long n : ns) rows.push_back(bench_point(p, q, n));
    return rows;
}

} // namespace horadam
