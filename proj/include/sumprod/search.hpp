#pragma once

// Bounded brute-force enumeration of the sum-product system.

#include "sumprod/transforms.hpp"

#include <cstdint>
#include <vector>

namespace sumprod {

struct SearchSpec {
    int s = 3;
    std::uint64_t n_max = 0;
    /// Largest allowed part; 0 means n_max.
    std::uint64_t a_max = 0;
    unsigned jobs = 1;
    /// Skip the 64-bit fast path (for cross-checking).
    bool force_bigint = false;

    /// Throws std::invalid_argument for s < 3, n_max < s - 1 or jobs == 0.
    void validate() const;
};

/// All a_1 <= ... <= a_{s-1} with sum <= n_max and each a_i <= a_max whose
/// product times sum is a perfect s-th power, sorted by (n, parts). The
/// result does not depend on spec.jobs.
std::vector<DioSolution> enumerate_solutions(const SearchSpec& spec);

struct MembershipRow {
    DioSolution row;
    bool present = false;
};

struct MembershipReport {
    std::vector<MembershipRow> rows;
    std::size_t found_total = 0;
    bool all_present() const;
};

/// Which of the given rows appear in enumerate_solutions(spec).
MembershipReport check_table_membership(const std::vector<DioSolution>& rows, const SearchSpec& spec);

}  // namespace sumprod
