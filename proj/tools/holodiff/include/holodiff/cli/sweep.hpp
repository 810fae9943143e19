#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "holodiff/psl2mod3.hpp"

namespace holodiff::cli {

struct SweepRow {
    std::int64_t ell = 0;
    int case_id = 0;
    double seconds = 0.0;
    std::vector<psl2::InvariantResult> invariants;
    bool passed() const;
};

// Worker count from HOLODIFF_THREADS, else the hardware concurrency; at least 1.
unsigned worker_count();

// verify_all for every prime in [from, to], spread over `workers` threads.
// Rows come back ordered by l.
std::vector<SweepRow> sweep(std::int64_t from, std::int64_t to, unsigned workers, bool with_restrictions = true);

}  // namespace holodiff::cli
