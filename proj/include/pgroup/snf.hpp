#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace pgroup {

// Small dense integer matrices, row-major. Only used for the handful of
// (p-1) x (p-1) systems behind the cyclotomic group family.
struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    long long& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    friend IntMat operator*(const IntMat& x, const IntMat& y) {
        if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
        IntMat z(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                long long v = x.at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < y.cols; ++j) z.at(i, j) += v * y.at(k, j);
            }
        return z;
    }
};

// U * A * V = D with D diagonal, nonnegative, d_i | d_{i+1}, and U, V
// unimodular. U's inverse is tracked alongside so callers can change basis
// in both directions without a separate inversion step.
struct SmithResult {
    IntMat d;
    IntMat u;
    IntMat uinv;
    IntMat v;
};

inline SmithResult smith_normal_form(IntMat a) {
    const int rows = a.rows, cols = a.cols;
    SmithResult res;
    res.u = IntMat::identity(rows);
    res.uinv = IntMat::identity(rows);
    res.v = IntMat::identity(cols);
    IntMat& d = a;

    auto swap_rows = [&](int i, int j) {
        if (i == j) return;
        for (int c = 0; c < cols; ++c) std::swap(d.at(i, c), d.at(j, c));
        for (int c = 0; c < rows; ++c) std::swap(res.u.at(i, c), res.u.at(j, c));
        for (int r = 0; r < rows; ++r) std::swap(res.uinv.at(r, i), res.uinv.at(r, j));
    };
    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        for (int r = 0; r < rows; ++r) std::swap(d.at(r, i), d.at(r, j));
        for (int r = 0; r < cols; ++r) std::swap(res.v.at(r, i), res.v.at(r, j));
    };
    // row_i += f * row_j  (and the matching inverse update on uinv columns)
    auto add_row = [&](int i, int j, long long f) {
        if (f == 0) return;
        for (int c = 0; c < cols; ++c) d.at(i, c) += f * d.at(j, c);
        for (int c = 0; c < rows; ++c) res.u.at(i, c) += f * res.u.at(j, c);
        for (int r = 0; r < rows; ++r) res.uinv.at(r, j) -= f * res.uinv.at(r, i);
    };
    auto add_col = [&](int i, int j, long long f) {
        if (f == 0) return;
        for (int r = 0; r < rows; ++r) d.at(r, i) += f * d.at(r, j);
        for (int r = 0; r < cols; ++r) res.v.at(r, i) += f * res.v.at(r, j);
    };
    auto negate_row = [&](int i) {
        for (int c = 0; c < cols; ++c) d.at(i, c) = -d.at(i, c);
        for (int c = 0; c < rows; ++c) res.u.at(i, c) = -res.u.at(i, c);
        for (int r = 0; r < rows; ++r) res.uinv.at(r, i) = -res.uinv.at(r, i);
    };

    const int nmin = rows < cols ? rows : cols;
    for (int s = 0; s < nmin; ++s) {
        for (;;) {
            // smallest nonzero entry of the trailing block to the pivot slot
            int pr = -1, pc = -1;
            long long best = 0;
            for (int r = s; r < rows; ++r)
                for (int c = s; c < cols; ++c) {
                    long long v = std::llabs(d.at(r, c));
                    if (v != 0 && (pr == -1 || v < best)) {
                        best = v;
                        pr = r;
                        pc = c;
                    }
                }
            if (pr == -1) break;  // trailing block is zero
            swap_rows(s, pr);
            swap_cols(s, pc);

            bool clean = true;
            for (int r = s + 1; r < rows; ++r) {
                long long f = d.at(r, s) / d.at(s, s);
                add_row(r, s, -f);
                if (d.at(r, s) != 0) clean = false;
            }
            for (int c = s + 1; c < cols; ++c) {
                long long f = d.at(s, c) / d.at(s, s);
                add_col(c, s, -f);
                if (d.at(s, c) != 0) clean = false;
            }
            if (!clean) continue;

            // enforce divisibility of the trailing block by the pivot
            bool divides = true;
            for (int r = s + 1; r < rows && divides; ++r)
                for (int c = s + 1; c < cols && divides; ++c)
                    if (d.at(r, c) % d.at(s, s) != 0) {
                        add_row(s, r, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (s < rows && s < cols && d.at(s, s) < 0) negate_row(s);
    }

    res.d = std::move(d);
    return res;
}

}  // namespace pgroup
