#pragma once

#include "minrank/combinatorics.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace minrank {

struct ParameterSet {
    std::uint64_t m = 0, n = 0, K = 0, r = 0;
    std::optional<std::uint32_t> q;

    // Throws InvalidArgument unless m, n, K >= 1 and 1 <= r <= n.
    void validate() const;
};

// min{ m C(n,r+1), K C(n,r) }
BigInt eqs_b1(const ParameterSet& p);

struct B2Count {
    BigInt count;  // may be negative far outside the precondition regime
    bool precondition_met;
};
// min{ K m C(n,r+1) - C(m+1,2) C(n,r+2), C(K+1,2) C(n,r) } and the flag
// m C(n,r+1) <= K C(n,r).
B2Count eqs_b2(const ParameterSet& p);

// Size of the syzygy correction at b = 2: C(m+1,2) C(n,r+2).
BigInt syzygy_count_b2(const ParameterSet& p);

// Linearization succeeds at degree b (b in {1, 2}) for generic instances:
//   b = 1: m C(n,r+1) >= K C(n,r) - 1
//   b = 2: K m C(n,r+1) - C(m+1,2) C(n,r+2) >= C(K+1,2) C(n,r) - 1
bool solvable(const ParameterSet& p, unsigned b);

struct MacaulayDims {
    BigInt rows, cols;
};
MacaulayDims macaulay_dims(const ParameterSet& p, unsigned b);

// Model outputs only: dense elimination rows*cols*min(rows, cols), and a
// sparse model 3 cols^2 w with w = K (r + 1) nonzeros per row.
struct CostEstimate {
    BigInt dense, sparse;
};
CostEstimate cost_estimate(const ParameterSet& p, unsigned b);

struct ComplexityEntry {
    unsigned b = 0;
    BigInt rows, cols;
    std::optional<BigInt> predicted;
    std::optional<bool> precondition;
    std::optional<bool> solvable;
    BigInt cost_dense, cost_sparse;
};

struct ComplexityReport {
    ParameterSet params;
    std::vector<ComplexityEntry> entries;
};

ComplexityReport complexity_report(const ParameterSet& p, unsigned max_b = 2);

// Flat key=value block, one entry per b, entries separated by a blank line.
// Keys: b, rows, cols, predicted, precondition, solvable, cost_dense,
// cost_sparse. Absent values are written as "none".
std::string format_report(const ComplexityReport& report);

}  // namespace minrank
