#ifndef ATSMEM_SWEEP_HPP
#define ATSMEM_SWEEP_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "atsmem/config.hpp"

namespace atsmem {

// Column-ordered numeric result table with echoed run metadata. CSV output
// is full precision (17 significant digits) with UNIX newlines; JSON output
// is a record array. Both are byte-deterministic for a given (config, seed).
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, std::string>> metadata;

    // Restrict and reorder the columns; unknown names are config errors.
    void select_columns(const std::vector<std::string>& wanted);
};

void write_csv(const Table& t, std::ostream& out);
void write_json(const Table& t, std::ostream& out);

// Full-precision number formatting shared by every writer.
std::string format_full(double v);

// Grid values for one sweep axis (linear or log spacing, endpoints included).
std::vector<double> axis_values(const SweepAxis& axis);

// Worker count: min(hardware, ATSMEM_THREADS if set), at least 1.
std::size_t thread_cap();

// Evaluate body(0..n-1) on the available threads. Rows land at their own
// index, so output order never depends on scheduling; the first exception is
// rethrown on the caller after all workers join.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
    const std::size_t workers = std::min(thread_cap(), std::max<std::size_t>(n, 1));
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n || failed.load()) return;
            try {
                body(i);
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace atsmem

#endif  // ATSMEM_SWEEP_HPP
