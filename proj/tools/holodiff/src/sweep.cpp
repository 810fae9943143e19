#include "holodiff/cli/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <string_view>
#include <thread>

#include "holodiff/numtheory.hpp"

namespace holodiff::cli {

bool SweepRow::passed() const {
    return std::all_of(invariants.begin(), invariants.end(), [](const auto& r) { return r.passed; });
}

unsigned worker_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("HOLODIFF_THREADS")) {
        const std::string_view text(env);
        unsigned cap = 0;
        const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
        if (ec == std::errc{} && end == text.data() + text.size() && cap > 0) return cap;
    }
    return hw;
}

std::vector<SweepRow> sweep(std::int64_t from, std::int64_t to, unsigned workers, bool with_restrictions) {
    std::vector<SweepRow> rows;
    for (std::int64_t l = std::max<std::int64_t>(from, 7); l <= to; ++l) {
        if (nt::is_prime(l)) rows.push_back({l, 0, 0.0, {}});
    }
    // Largest primes first so the slowest jobs do not end up last.
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k = next++; k < rows.size(); k = next++) {
            SweepRow& row = rows[rows.size() - 1 - k];
            const auto start = std::chrono::steady_clock::now();
            row.invariants = psl2::verify_all(row.ell, with_restrictions);
            row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            row.case_id = psl2::classify(row.ell).case_id;
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(rows.size())));
    {
        std::vector<std::jthread> pool;
        for (unsigned i = 1; i < n; ++i) pool.emplace_back(work);
        work();
    }
    return rows;
}

}  // namespace holodiff::cli
