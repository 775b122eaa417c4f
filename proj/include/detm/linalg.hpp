#pragma once

#include <utility>
#include <vector>

#include "detm/rational.hpp"

namespace detm {

using IntMat = std::vector<std::vector<Int>>;
using RatMat = std::vector<std::vector<Rat>>;
using RatVec = std::vector<Rat>;

struct SmithResult {
    std::vector<Int> divisors;  // d_1 | d_2 | ..., nonnegative
    IntMat U;                   // unimodular, rows x rows
    IntMat V;                   // unimodular, cols x cols
    IntMat Uinv;                // inverse of U, tracked during elimination
    // U * M * V = diag(divisors)
};

// Classical elimination with smallest-pivot selection; exact, desk scale.
SmithResult smith_normal_form(const IntMat& M);

struct RankKernel {
    long rank = 0;
    std::vector<RatVec> kernel;  // basis vectors annihilated by M (M * v = 0)
};

// Exact Gauss-Jordan over Q. Kernel vectors are scaled to integer coprime
// entries with positive leading coefficient.
RankKernel rank_and_kernel_over_Q(const RatMat& M);

// Determinant of a square integer matrix (fraction-free Bareiss).
Int int_determinant(IntMat M);

// Incremental exact row reduction: feed rows one at a time, query rank.
class IncrementalRowReducer {
public:
    explicit IncrementalRowReducer(long cols) : cols_(cols) {}

    // Returns true if the row increased the rank.
    bool add_row(RatVec row);
    long rank() const { return static_cast<long>(pivots_.size()); }

private:
    long cols_;
    std::vector<RatVec> rows_;   // reduced rows, one pivot each
    std::vector<long> pivots_;   // pivot column of rows_[i]
};

}  // namespace detm
