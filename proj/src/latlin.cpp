#include "stacky/latlin.hpp"

#include <stdexcept>
#include <utility>

namespace stacky {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& columns, int nrows) {
    IntMatrix m(nrows, static_cast<int>(columns.size()));
    for (int j = 0; j < m.cols; ++j) {
        if (static_cast<int>(columns[j].size()) != nrows)
            throw std::invalid_argument("from_columns: column length mismatch");
        for (int i = 0; i < nrows; ++i) m.at(i, j) = columns[j][i];
    }
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& row_list, int ncols) {
    IntMatrix m(static_cast<int>(row_list.size()), ncols);
    for (int i = 0; i < m.rows; ++i) {
        if (static_cast<int>(row_list[i].size()) != ncols)
            throw std::invalid_argument("from_rows: row length mismatch");
        for (int j = 0; j < ncols; ++j) m.at(i, j) = row_list[i][j];
    }
    return m;
}

IntVec IntMatrix::column(int j) const {
    IntVec c(rows);
    for (int i = 0; i < rows; ++i) c[i] = at(i, j);
    return c;
}

IntVec IntMatrix::row(int i) const {
    IntVec r(cols);
    for (int j = 0; j < cols; ++j) r[j] = at(i, j);
    return r;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    IntMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

IntVec mat_vec(const IntMatrix& a, const IntVec& x) {
    if (static_cast<int>(x.size()) != a.cols) throw std::invalid_argument("mat_vec: shape mismatch");
    IntVec y(a.rows, Int(0));
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) y[i] += a.at(i, j) * x[j];
    return y;
}

namespace {

void row_swap(IntMatrix& m, int a, int b) {
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

void col_swap(IntMatrix& m, int a, int b) {
    for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row a += c * row b
void row_addmul(IntMatrix& m, int a, int b, const Int& c) {
    for (int j = 0; j < m.cols; ++j) m.at(a, j) += c * m.at(b, j);
}

// col a += c * col b
void col_addmul(IntMatrix& m, int a, int b, const Int& c) {
    for (int i = 0; i < m.rows; ++i) m.at(i, a) += c * m.at(i, b);
}

void row_negate(IntMatrix& m, int a) {
    for (int j = 0; j < m.cols; ++j) m.at(a, j) = -m.at(a, j);
}

Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace

Int mat_det(const IntMatrix& a0) {
    if (a0.rows != a0.cols) throw std::invalid_argument("mat_det: matrix not square");
    int n = a0.rows;
    if (n == 0) return Int(1);
    IntMatrix a = a0;
    Int prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) { p = i; break; }
            if (p < 0) return Int(0);
            row_swap(a, k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    return sign < 0 ? Int(-a.at(n - 1, n - 1)) : a.at(n - 1, n - 1);
}

SmithDecomposition smith_normal_form(const IntMatrix& A) {
    if (A.rows <= 0 || A.cols <= 0)
        throw std::invalid_argument("smith_normal_form: empty matrix");
    SmithDecomposition d{IntMatrix::identity(A.rows), A, IntMatrix::identity(A.cols)};
    IntMatrix& U = d.U;
    IntMatrix& S = d.S;
    IntMatrix& V = d.V;
    const int m = A.rows, n = A.cols, r = std::min(m, n);

    // every operation on S is mirrored on U (row ops) or V (column ops),
    // keeping U*A*V == S at all times
    auto s_row_swap = [&](int a, int b) { row_swap(S, a, b); row_swap(U, a, b); };
    auto s_col_swap = [&](int a, int b) { col_swap(S, a, b); col_swap(V, a, b); };
    auto s_row_addmul = [&](int a, int b, const Int& c) { row_addmul(S, a, b, c); row_addmul(U, a, b, c); };
    auto s_col_addmul = [&](int a, int b, const Int& c) { col_addmul(S, a, b, c); col_addmul(V, a, b, c); };

    bool exhausted = false;
    for (int t = 0; t < r && !exhausted; ++t) {
        for (;;) {
            // smallest nonzero |entry| of the trailing submatrix as pivot
            int pi = -1, pj = -1;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j)
                    if (S.at(i, j) != 0 &&
                        (pi < 0 || mpz_cmpabs(S.at(i, j).get_mpz_t(), S.at(pi, pj).get_mpz_t()) < 0)) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) { exhausted = true; break; }
            if (pi != t) s_row_swap(t, pi);
            if (pj != t) s_col_swap(t, pj);

            bool clean;
            do {
                clean = true;
                for (int i = t + 1; i < m; ++i)
                    if (S.at(i, t) != 0) {
                        Int q = fdiv(S.at(i, t), S.at(t, t));
                        if (q != 0) s_row_addmul(i, t, -q);
                        if (S.at(i, t) != 0) { s_row_swap(i, t); clean = false; }
                    }
                for (int j = t + 1; j < n; ++j)
                    if (S.at(t, j) != 0) {
                        Int q = fdiv(S.at(t, j), S.at(t, t));
                        if (q != 0) s_col_addmul(j, t, -q);
                        if (S.at(t, j) != 0) { s_col_swap(j, t); clean = false; }
                    }
            } while (!clean);

            // the divisibility chain needs the pivot to divide the rest of
            // the submatrix; pulling an offending row up and re-clearing
            // strictly shrinks the pivot, so this terminates
            bool restart = false;
            for (int i = t + 1; i < m && !restart; ++i)
                for (int j = t + 1; j < n && !restart; ++j)
                    if (S.at(i, j) % S.at(t, t) != 0) {
                        s_row_addmul(t, i, Int(1));
                        restart = true;
                    }
            if (!restart) break;
        }
    }

    for (int t = 0; t < r; ++t)
        if (S.at(t, t) < 0) {
            row_negate(S, t);
            row_negate(U, t);
        }
    return d;
}

std::vector<IntVec> integer_kernel(const IntMatrix& A) {
    int n = A.cols;
    if (n == 0) return {};
    if (A.rows == 0) {
        std::vector<IntVec> basis;
        for (int j = 0; j < n; ++j) {
            IntVec e(n, Int(0));
            e[j] = 1;
            basis.push_back(e);
        }
        return basis;
    }
    SmithDecomposition d = smith_normal_form(A);
    int r = std::min(A.rows, n);
    std::vector<IntVec> basis;
    for (int j = 0; j < n; ++j)
        if (j >= r || d.S.at(j, j) == 0) basis.push_back(d.V.column(j));
    return basis;
}

std::optional<RatVec> rational_solve(const IntMatrix& A, const IntVec& b) {
    if (static_cast<int>(b.size()) != A.rows)
        throw std::invalid_argument("rational_solve: vector length mismatch");
    const int m = A.rows, n = A.cols;
    std::vector<RatVec> M(m, RatVec(n + 1));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) M[i][j] = Rat(A.at(i, j));
        M[i][n] = Rat(b[i]);
    }
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int p = -1;
        for (int i = row; i < m; ++i)
            if (M[i][col] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(M[p], M[row]);
        Rat lead = M[row][col];
        for (int j = col; j <= n; ++j) M[row][j] /= lead;
        for (int i = 0; i < m; ++i)
            if (i != row && M[i][col] != 0) {
                Rat f = M[i][col];
                for (int j = col; j <= n; ++j) M[i][j] -= f * M[row][j];
            }
        pivot_col.push_back(col);
        ++row;
    }
    if (static_cast<int>(pivot_col.size()) < n)
        throw std::invalid_argument("rational_solve: columns are linearly dependent");
    for (int i = row; i < m; ++i)
        if (M[i][n] != 0) return std::nullopt;
    RatVec x(n);
    for (size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = M[k][n];
    return x;
}

bool finite_index_span(const std::vector<IntVec>& vectors, int rank) {
    if (rank == 0) return true;
    if (vectors.empty()) return false;
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != rank)
            throw std::invalid_argument("finite_index_span: vector length mismatch");
    SmithDecomposition d = smith_normal_form(IntMatrix::from_columns(vectors, rank));
    int nonzero = 0;
    for (int t = 0; t < std::min(d.S.rows, d.S.cols); ++t)
        if (d.S.at(t, t) != 0) ++nonzero;
    return nonzero == rank;
}

int rational_rank(std::vector<RatVec> row_list) {
    if (row_list.empty()) return 0;
    const size_t n = row_list[0].size();
    for (const auto& r : row_list)
        if (r.size() != n) throw std::invalid_argument("rational_rank: ragged rows");
    int rank = 0;
    size_t col = 0;
    const int m = static_cast<int>(row_list.size());
    while (rank < m && col < n) {
        int p = -1;
        for (int i = rank; i < m; ++i)
            if (row_list[i][col] != 0) { p = i; break; }
        if (p < 0) { ++col; continue; }
        std::swap(row_list[p], row_list[rank]);
        Rat lead = row_list[rank][col];
        for (size_t j = col; j < n; ++j) row_list[rank][j] /= lead;
        for (int i = rank + 1; i < m; ++i)
            if (row_list[i][col] != 0) {
                Rat f = row_list[i][col];
                for (size_t j = col; j < n; ++j) row_list[i][j] -= f * row_list[rank][j];
            }
        ++rank;
        ++col;
    }
    return rank;
}

} // namespace stacky
