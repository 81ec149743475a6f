#pragma once

#include <chrono>
#include <cstdint>

namespace icw {

/// Exploration budget shared by the MAIS search and the matroid search.
/// Either bound alone triggers a Budget outcome.
struct Budget {
    std::uint64_t max_nodes = 100'000'000;
    double max_seconds = 300.0;
};

class BudgetClock {
public:
    explicit BudgetClock(Budget b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

    /// Counts one node; true while within budget. Wall time is polled
    /// sparsely since steady_clock::now() is comparatively expensive.
    bool tick() {
        ++nodes_;
        if (nodes_ > budget_.max_nodes) return false;
        if ((nodes_ & 0x3FFF) == 0 && elapsed_seconds() > budget_.max_seconds) return false;
        return true;
    }

    std::uint64_t nodes() const { return nodes_; }

    double elapsed_seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    Budget budget_;
    std::uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace icw
