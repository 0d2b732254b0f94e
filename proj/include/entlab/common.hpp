#pragma once

#include <atomic>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace entlab {

// Requested problem size exceeds a hard implementation cap (e.g. dense
// matrices above N = 12 qubits).
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A numerical routine failed to produce a usable result (eigensolver
// non-convergence and the like).
class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A threshold solver found no sign change inside its search domain.
class no_threshold_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace num {

inline constexpr double kLn2 = 0.6931471805599453094172321214581766;

// ln cosh(x), stable for |x| large: |x| + log1p(e^{-2|x|}) - ln 2.
inline double log_cosh(double x) {
    const double a = std::abs(x);
    return a + std::log1p(std::exp(-2.0 * a)) - kLn2;
}

// ln sinh(x) for x > 0: x + log1p(-e^{-2x}) - ln 2.  Returns -inf at x = 0.
inline double log_sinh(double x) {
    if (x < 0.0) throw std::domain_error("log_sinh: negative argument");
    if (x == 0.0) return -std::numeric_limits<double>::infinity();
    return x + std::log1p(-std::exp(-2.0 * x)) - kLn2;
}

// ln tanh(x) for x >= 0.  Returns -inf at x = 0.
inline double log_tanh(double x) {
    if (x < 0.0) throw std::domain_error("log_tanh: negative argument");
    if (x == 0.0) return -std::numeric_limits<double>::infinity();
    const double e = std::exp(-2.0 * x);
    return std::log1p(-e) - std::log1p(e);
}

// ln(e^a + e^b)
inline double log_sum_exp(double a, double b) {
    if (a < b) std::swap(a, b);
    if (std::isinf(a) && a < 0.0) return a;
    return a + std::log1p(std::exp(b - a));
}

// ln(e^a - e^b), requires a >= b.
inline double log_diff_exp(double a, double b) {
    if (b > a) throw std::domain_error("log_diff_exp: negative difference");
    if (a == b) return -std::numeric_limits<double>::infinity();
    return a + std::log1p(-std::exp(b - a));
}

// Compensated (Kahan) accumulator.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

// Exact binomial coefficient for n <= 64 (largest value C(64,32) fits in a
// 64-bit unsigned).  Returns 0 for k outside [0, n].
inline std::uint64_t binomial_u64(int n, int k) {
    if (n < 0 || n > 64) throw std::domain_error("binomial_u64: n out of [0,64]");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    // Pascal row built in place; intermediate values never exceed C(n, .).
    std::vector<std::uint64_t> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j > 0; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j) - 1];
    }
    return row[static_cast<std::size_t>(k)];
}

// ln C(n, k) by a compensated sum of logs; accurate to ~1e-14 absolute for
// n <= 500, which beats lgamma at these argument sizes.
inline double log_binomial(int n, int k) {
    if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
    if (k > n - k) k = n - k;
    KahanSum s;
    for (int i = 1; i <= k; ++i) {
        s.add(std::log(static_cast<double>(n - k + i)));
        s.add(-std::log(static_cast<double>(i)));
    }
    return s.value();
}

}  // namespace num

// Worker count for parallel sweeps: hardware concurrency capped by the
// ENTLAB_THREADS environment variable when set.
inline unsigned worker_count() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("ENTLAB_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && cap > 0 && static_cast<unsigned long>(cap) < n) n = static_cast<unsigned>(cap);
    }
    return n;
}

// Runs fn(i) for i in [0, count) on a small thread pool.  Results must be
// written into per-index slots by the caller, so output order never depends
// on scheduling.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const unsigned workers = std::min<std::size_t>(worker_count(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::atomic<std::size_t> next{0};
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) break;
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

// Shortest round-trip decimal representation of a double.
inline std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

}  // namespace entlab
