#pragma once

#include "stacky/arith.hpp"

#include <optional>
#include <vector>

namespace stacky {

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    IntVec entries; // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c)
        : rows(r), cols(c), entries(static_cast<size_t>(r) * static_cast<size_t>(c), Int(0)) {}

    static IntMatrix identity(int n);
    static IntMatrix from_columns(const std::vector<IntVec>& columns, int nrows);
    static IntMatrix from_rows(const std::vector<IntVec>& row_list, int ncols);

    Int& at(int i, int j) { return entries[static_cast<size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return entries[static_cast<size_t>(i) * cols + j]; }

    IntVec column(int j) const;
    IntVec row(int i) const;

    bool operator==(const IntMatrix&) const = default;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntVec mat_vec(const IntMatrix& a, const IntVec& x);
Int mat_det(const IntMatrix& a); // fraction-free (Bareiss) elimination

// U*A*V == S with U, V unimodular and S diagonal, d_1 | d_2 | ... | d_r >= 0
// followed by zeros.
struct SmithDecomposition {
    IntMatrix U, S, V;
};

SmithDecomposition smith_normal_form(const IntMatrix& A);

// Lattice basis of { x in Z^cols : A*x = 0 }; primitive by construction
// (columns of the unimodular V from the Smith form).
std::vector<IntVec> integer_kernel(const IntMatrix& A);

// Unique rational solution of A*x = b, or nullopt when b is outside the
// column span.  The columns must be linearly independent; otherwise throws.
std::optional<RatVec> rational_solve(const IntMatrix& A, const IntVec& b);

// Do the vectors span a finite-index (i.e. full-rank) subgroup of Z^rank?
bool finite_index_span(const std::vector<IntVec>& vectors, int rank);

// Rank of a rational matrix given as a list of rows (destructive Gauss).
int rational_rank(std::vector<RatVec> row_list);

} // namespace stacky
