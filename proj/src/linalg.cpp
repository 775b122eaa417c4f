#include "detm/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace detm {

namespace {

IntMat identity(long n) {
    IntMat I(n, std::vector<Int>(n, 0));
    for (long i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

}  // namespace

SmithResult smith_normal_form(const IntMat& M) {
    long rows = static_cast<long>(M.size());
    long cols = rows ? static_cast<long>(M[0].size()) : 0;
    SmithResult res;
    res.U = identity(rows);
    res.V = identity(cols);
    res.Uinv = identity(rows);
    if (rows == 0 || cols == 0) return res;

    IntMat A = M;
    auto row_swap = [&](long i, long j) {
        std::swap(A[i], A[j]);
        std::swap(res.U[i], res.U[j]);
        for (long r = 0; r < rows; ++r) std::swap(res.Uinv[r][i], res.Uinv[r][j]);
    };
    auto col_swap = [&](long i, long j) {
        for (long r = 0; r < rows; ++r) std::swap(A[r][i], A[r][j]);
        for (long r = 0; r < cols; ++r) std::swap(res.V[r][i], res.V[r][j]);
    };
    auto row_axpy = [&](long dst, long src, const Int& q) {  // row dst -= q * row src
        for (long c = 0; c < cols; ++c) A[dst][c] -= q * A[src][c];
        for (long c = 0; c < rows; ++c) res.U[dst][c] -= q * res.U[src][c];
        for (long r = 0; r < rows; ++r) res.Uinv[r][src] += q * res.Uinv[r][dst];
    };
    auto col_axpy = [&](long dst, long src, const Int& q) {
        for (long r = 0; r < rows; ++r) A[r][dst] -= q * A[r][src];
        for (long r = 0; r < cols; ++r) res.V[r][dst] -= q * res.V[r][src];
    };
    auto negate_row = [&](long i) {
        for (long c = 0; c < cols; ++c) A[i][c] = -A[i][c];
        for (long c = 0; c < rows; ++c) res.U[i][c] = -res.U[i][c];
        for (long r = 0; r < rows; ++r) res.Uinv[r][i] = -res.Uinv[r][i];
    };

    long t = 0;
    long limit = std::min(rows, cols);
    while (t < limit) {
        // locate the nonzero entry of smallest absolute value in the trailing block
        long pi = -1, pj = -1;
        Int best;
        for (long i = t; i < rows; ++i)
            for (long j = t; j < cols; ++j) {
                if (A[i][j] == 0) continue;
                Int a = abs(A[i][j]);
                if (pi < 0 || a < best) { best = a; pi = i; pj = j; }
            }
        if (pi < 0) break;  // trailing block is zero
        row_swap(t, pi);
        col_swap(t, pj);

        bool clean = true;
        for (long i = t + 1; i < rows; ++i) {
            if (A[i][t] == 0) continue;
            Int q = A[i][t] / A[t][t];
            row_axpy(i, t, q);
            if (A[i][t] != 0) clean = false;
        }
        for (long j = t + 1; j < cols; ++j) {
            if (A[t][j] == 0) continue;
            Int q = A[t][j] / A[t][t];
            col_axpy(j, t, q);
            if (A[t][j] != 0) clean = false;
        }
        if (!clean) continue;  // smaller pivot appeared, redo this step

        // divisibility fix-up: pivot must divide the whole trailing block
        bool fixed = false;
        for (long i = t + 1; i < rows && !fixed; ++i)
            for (long j = t + 1; j < cols && !fixed; ++j)
                if (A[i][j] % A[t][t] != 0) {
                    row_axpy(t, i, Int(-1));  // add row i into row t, then redo
                    fixed = true;
                }
        if (fixed) continue;

        if (A[t][t] < 0) negate_row(t);
        ++t;
    }

    res.divisors.resize(limit);
    for (long i = 0; i < limit; ++i) res.divisors[i] = A[i][i];
    // drop trailing zero divisors only if the matrix rank is smaller; keep as
    // reported (zeros mean rank deficiency)
    return res;
}

RankKernel rank_and_kernel_over_Q(const RatMat& M) {
    long rows = static_cast<long>(M.size());
    long cols = rows ? static_cast<long>(M[0].size()) : 0;
    RankKernel out;
    if (cols == 0) return out;

    RatMat A = M;
    std::vector<long> pivot_of_row;
    std::vector<bool> is_pivot_col(cols, false);
    long r = 0;
    for (long c = 0; c < cols && r < rows; ++c) {
        long piv = -1;
        for (long i = r; i < rows; ++i)
            if (A[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(A[r], A[piv]);
        Rat inv = 1 / A[r][c];
        for (long j = c; j < cols; ++j) A[r][j] *= inv;
        for (long i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == 0) continue;
            Rat f = A[i][c];
            for (long j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
        }
        pivot_of_row.push_back(c);
        is_pivot_col[c] = true;
        ++r;
    }
    out.rank = r;

    for (long c = 0; c < cols; ++c) {
        if (is_pivot_col[c]) continue;
        RatVec v(cols, 0);
        v[c] = 1;
        for (long i = 0; i < r; ++i) v[pivot_of_row[i]] = -A[i][c];
        // integer coprime scaling, positive leading entry
        Int lcm = 1;
        for (auto& x : v) lcm = lcm * x.get_den() / gcd(lcm, Int(x.get_den()));
        Int g = 0;
        for (auto& x : v) {
            x *= Rat(lcm);
            x.canonicalize();
            g = gcd(g, Int(x.get_num()));
        }
        if (g > 1)
            for (auto& x : v) { x /= Rat(g); x.canonicalize(); }
        for (auto& x : v)
            if (x != 0) {
                if (x < 0)
                    for (auto& y : v) y = -y;
                break;
            }
        out.kernel.push_back(std::move(v));
    }
    return out;
}

Int int_determinant(IntMat M) {
    long n = static_cast<long>(M.size());
    if (n == 0) return 1;
    if (static_cast<long>(M[0].size()) != n) throw std::invalid_argument("determinant: matrix not square");
    Int prev = 1;
    int sign = 1;
    for (long k = 0; k < n - 1; ++k) {
        if (M[k][k] == 0) {
            long piv = -1;
            for (long i = k + 1; i < n; ++i)
                if (M[i][k] != 0) { piv = i; break; }
            if (piv < 0) return 0;
            std::swap(M[k], M[piv]);
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i)
            for (long j = k + 1; j < n; ++j)
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
        prev = M[k][k];
    }
    return sign > 0 ? M[n - 1][n - 1] : -M[n - 1][n - 1];
}

bool IncrementalRowReducer::add_row(RatVec row) {
    if (static_cast<long>(row.size()) != cols_) throw std::invalid_argument("row size mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        long p = pivots_[i];
        if (row[p] == 0) continue;
        Rat f = row[p];
        for (long j = 0; j < cols_; ++j) row[j] -= f * rows_[i][j];
    }
    long p = -1;
    for (long j = 0; j < cols_; ++j)
        if (row[j] != 0) { p = j; break; }
    if (p < 0) return false;
    Rat inv = 1 / row[p];
    for (long j = 0; j < cols_; ++j) row[j] *= inv;
    rows_.push_back(std::move(row));
    pivots_.push_back(p);
    return true;
}

}  // namespace detm
