#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgm/errors.hpp"
#include "cgm/poly.hpp"

namespace cgm {

// Dense row-major matrix over a field K. Dimensions are fixed at construction
// and at least 1x1, so every matrix can answer which field it lives in.
// Operations are pure: they return new values and never mutate arguments.
template <typename K>
class Matrix {
  public:
    Matrix(int rows, int cols, const K& fill) : rows_(rows), cols_(cols), e_(check_dims(rows, cols), fill) {}

    explicit Matrix(const std::vector<std::vector<K>>& rows) {
        if (rows.empty() || rows[0].empty()) fail(errc::degenerate_input, "empty matrix literal");
        rows_ = static_cast<int>(rows.size());
        cols_ = static_cast<int>(rows[0].size());
        e_.reserve(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_));
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != cols_) fail(errc::degenerate_input, "ragged matrix literal");
            for (const auto& x : r) {
                if (!same_field(x, rows[0][0])) fail(errc::type_mismatch, "mixed fields in matrix literal");
                e_.push_back(x);
            }
        }
    }

    static Matrix identity(int n, const K& exemplar) {
        Matrix m(n, n, zero_like(exemplar));
        for (int i = 0; i < n; ++i) m.at(i, i) = one_like(exemplar);
        return m;
    }
    static Matrix zero(int rows, int cols, const K& exemplar) { return Matrix(rows, cols, zero_like(exemplar)); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const K& field_exemplar() const { return e_[0]; }

    K& at(int i, int j) { return e_[idx(i, j)]; }
    const K& at(int i, int j) const { return e_[idx(i, j)]; }

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

    Matrix operator-() const {
        Matrix r(*this);
        for (auto& x : r.e_) x = -x;
        return r;
    }
    Matrix operator+(const Matrix& o) const {
        check_same_shape(o);
        Matrix r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const { return *this + (-o); }

    Matrix operator*(const Matrix& o) const {
        check_field(o);
        if (cols_ != o.rows_) fail(errc::type_mismatch, "matrix product shape mismatch");
        Matrix r(rows_, o.cols_, zero_like(e_[0]));
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const K& a = at(i, k);
                if (a.is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
            }
        return r;
    }

    Matrix operator*(const K& s) const {
        Matrix r(*this);
        for (auto& x : r.e_) x = x * s;
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_, e_[0]);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    K trace() const {
        require_square("trace");
        K t = zero_like(e_[0]);
        for (int i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool is_scalar() const {
        require_square("is_scalar");
        const K& lambda = at(0, 0);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                if (i == j ? !(at(i, j) == lambda) : !at(i, j).is_zero()) return false;
            }
        return true;
    }

    Matrix block(int i0, int j0, int r, int c) const {
        if (i0 < 0 || j0 < 0 || r < 1 || c < 1 || i0 + r > rows_ || j0 + c > cols_)
            fail(errc::degenerate_input, "block out of range");
        Matrix out(r, c, e_[0]);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) out.at(i, j) = at(i0 + i, j0 + j);
        return out;
    }

    Matrix column(int j) const { return block(0, j, rows_, 1); }

    static Matrix from_columns(const std::vector<Matrix>& cols) {
        if (cols.empty()) fail(errc::degenerate_input, "from_columns with no columns");
        int n = cols[0].rows();
        Matrix out(n, static_cast<int>(cols.size()), cols[0].field_exemplar());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].cols() != 1 || cols[j].rows() != n)
                fail(errc::type_mismatch, "from_columns expects same-height column vectors");
            for (int i = 0; i < n; ++i) out.at(i, static_cast<int>(j)) = cols[j].at(i, 0);
        }
        return out;
    }

    static Matrix vstack(const Matrix& top, const Matrix& bottom) {
        if (top.cols_ != bottom.cols_) fail(errc::type_mismatch, "vstack width mismatch");
        top.check_field(bottom);
        Matrix out(top.rows_ + bottom.rows_, top.cols_, top.e_[0]);
        for (int i = 0; i < top.rows_; ++i)
            for (int j = 0; j < top.cols_; ++j) out.at(i, j) = top.at(i, j);
        for (int i = 0; i < bottom.rows_; ++i)
            for (int j = 0; j < top.cols_; ++j) out.at(top.rows_ + i, j) = bottom.at(i, j);
        return out;
    }

    // Reduced row echelon form plus the pivot column indices. Pivots are the
    // first nonzero entry scanning rows top-down in each column, so the result
    // is deterministic.
    std::pair<Matrix, std::vector<int>> rref() const {
        Matrix r(*this);
        std::vector<int> pivots;
        int row = 0;
        for (int col = 0; col < cols_ && row < rows_; ++col) {
            int p = -1;
            for (int i = row; i < rows_; ++i)
                if (!r.at(i, col).is_zero()) { p = i; break; }
            if (p < 0) continue;
            r.swap_rows(p, row);
            K inv = one_like(e_[0]) / r.at(row, col);
            for (int j = col; j < cols_; ++j) r.at(row, j) = r.at(row, j) * inv;
            for (int i = 0; i < rows_; ++i) {
                if (i == row || r.at(i, col).is_zero()) continue;
                K f = r.at(i, col);
                for (int j = col; j < cols_; ++j) r.at(i, j) -= f * r.at(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return {r, pivots};
    }

    int rank() const { return static_cast<int>(rref().second.size()); }

    // Basis of the right null space as n x 1 columns: one vector per free
    // column in ascending column order, free coordinate set to 1.
    std::vector<Matrix> kernel_basis() const {
        auto [r, pivots] = rref();
        std::vector<Matrix> basis;
        std::size_t next_pivot = 0;
        for (int col = 0; col < cols_; ++col) {
            if (next_pivot < pivots.size() && pivots[next_pivot] == col) {
                ++next_pivot;
                continue;
            }
            Matrix v(cols_, 1, zero_like(e_[0]));
            v.at(col, 0) = one_like(e_[0]);
            for (std::size_t k = 0; k < pivots.size(); ++k) v.at(pivots[k], 0) = -r.at(static_cast<int>(k), col);
            basis.push_back(v);
        }
        return basis;
    }

    Matrix inverse() const {
        require_square("inverse");
        Matrix aug = vstack(transpose(), identity(rows_, e_[0]).transpose()).transpose(); // [this | I]
        auto [r, pivots] = aug.rref();
        if (static_cast<int>(pivots.size()) != rows_ || pivots.back() != rows_ - 1)
            fail(errc::singular_matrix, "matrix is singular");
        return r.block(0, rows_, rows_, rows_);
    }

    // Coefficients of det(xI - A), monic. Berkowitz's division-free scheme:
    // valid over F_p for every prime, including p <= n.
    Polynomial<K> char_poly() const {
        require_square("char_poly");
        const K zero = zero_like(e_[0]);
        const K one = one_like(e_[0]);
        std::vector<K> c{one, -at(0, 0)}; // highest degree first
        for (int k = 2; k <= rows_; ++k) {
            // Toeplitz column for the k-th leading principal submatrix:
            // q[0] = 1, q[1] = -pivot, q[j] = -(row part) M^(j-2) (col part)
            // with M the (k-1)x(k-1) leading block.
            std::vector<K> q(static_cast<std::size_t>(k) + 1, zero);
            q[0] = one;
            q[1] = -at(k - 1, k - 1);
            std::vector<K> w(static_cast<std::size_t>(k) - 1, zero);
            for (int i = 0; i < k - 1; ++i) w[static_cast<std::size_t>(i)] = at(i, k - 1);
            for (int j = 2; j <= k; ++j) {
                K dot = zero;
                for (int i = 0; i < k - 1; ++i) dot += at(k - 1, i) * w[static_cast<std::size_t>(i)];
                q[static_cast<std::size_t>(j)] = -dot;
                if (j == k) break;
                std::vector<K> nw(static_cast<std::size_t>(k) - 1, zero);
                for (int i = 0; i < k - 1; ++i)
                    for (int l = 0; l < k - 1; ++l)
                        nw[static_cast<std::size_t>(i)] += at(i, l) * w[static_cast<std::size_t>(l)];
                w = std::move(nw);
            }
            std::vector<K> nc(static_cast<std::size_t>(k) + 1, zero);
            for (std::size_t i = 0; i < nc.size(); ++i)
                for (std::size_t j = 0; j < c.size(); ++j) {
                    if (i < j || i - j >= q.size()) continue;
                    nc[i] += q[i - j] * c[j];
                }
            c = std::move(nc);
        }
        std::vector<K> lowest_first(c.rbegin(), c.rend());
        return Polynomial<K>(std::move(lowest_first));
    }

    // Monic annihilator of least degree: scan I, A, A^2, ... for the first
    // power lying in the span of the earlier ones.
    Polynomial<K> min_poly() const {
        require_square("min_poly");
        const int n = rows_;
        const K zero = zero_like(e_[0]);
        std::vector<Matrix> powers{identity(n, e_[0])};
        for (int m = 1; m <= n; ++m) {
            powers.push_back(powers.back() * *this);
            // Solve [vec(A^0) ... vec(A^(m-1))] c = vec(A^m).
            Matrix sys(n * n, m + 1, zero);
            for (int j = 0; j <= m; ++j)
                for (int i = 0; i < n * n; ++i) sys.at(i, j) = powers[static_cast<std::size_t>(j)].at(i / n, i % n);
            auto [r, pivots] = sys.rref();
            if (!pivots.empty() && pivots.back() == m) continue; // independent so far
            std::vector<K> coeffs(static_cast<std::size_t>(m) + 1, zero);
            coeffs[static_cast<std::size_t>(m)] = one_like(e_[0]);
            for (std::size_t k = 0; k < pivots.size(); ++k)
                coeffs[static_cast<std::size_t>(pivots[k])] = -r.at(static_cast<int>(k), m);
            return Polynomial<K>(std::move(coeffs));
        }
        fail(errc::internal, "no annihilating polynomial up to degree n");
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < rows_; ++i) {
            s += i == 0 ? "[" : " ";
            for (int j = 0; j < cols_; ++j) {
                if (j) s += " ";
                s += at(i, j).str();
            }
            s += i + 1 == rows_ ? "]" : "\n";
        }
        return s;
    }

  private:
    static std::size_t check_dims(int rows, int cols) {
        if (rows < 1 || cols < 1) fail(errc::degenerate_input, "matrix dimensions must be positive");
        return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    }
    std::size_t idx(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) fail(errc::degenerate_input, "matrix index out of range");
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
    }
    void require_square(const char* what) const {
        if (!is_square()) fail(errc::degenerate_input, std::string(what) + " needs a square matrix");
    }
    void check_field(const Matrix& o) const {
        if (!same_field(e_[0], o.e_[0])) fail(errc::type_mismatch, "mixed fields in matrix operation");
    }
    void check_same_shape(const Matrix& o) const {
        check_field(o);
        if (rows_ != o.rows_ || cols_ != o.cols_) fail(errc::type_mismatch, "matrix shape mismatch");
    }
    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }

    int rows_ = 0, cols_ = 0;
    std::vector<K> e_;
};

template <typename K>
Matrix<K> direct_sum(const Matrix<K>& x, const Matrix<K>& y) {
    if (!x.is_square() || !y.is_square()) fail(errc::degenerate_input, "direct sum of non-square blocks");
    if (!same_field(x.field_exemplar(), y.field_exemplar())) fail(errc::type_mismatch, "direct sum across fields");
    int n = x.rows(), m = y.rows();
    Matrix<K> out = Matrix<K>::zero(n + m, n + m, x.field_exemplar());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = x.at(i, j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) out.at(n + i, n + j) = y.at(i, j);
    return out;
}

// [[a, b], [-b, a]]: the real 2x2 model of the complex number a + bi.
template <typename K>
Matrix<K> rot_block(const K& a, const K& b) {
    Matrix<K> m(2, 2, zero_like(a));
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = -b;
    m.at(1, 1) = a;
    return m;
}

template <typename K>
Matrix<K> conjugate(const Matrix<K>& a, const Matrix<K>& p) {
    if (a.rows() != p.rows() || a.cols() != p.cols() || !a.is_square())
        fail(errc::type_mismatch, "conjugation needs same-size square matrices");
    return p.inverse() * a * p;
}

template <typename K>
bool commutes(const Matrix<K>& a, const Matrix<K>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || !a.is_square())
        fail(errc::type_mismatch, "commutation check needs same-size square matrices");
    return a * b == b * a;
}

// f(A) by Horner.
template <typename K>
Matrix<K> eval_at_matrix(const Polynomial<K>& f, const Matrix<K>& a) {
    if (!a.is_square()) fail(errc::degenerate_input, "polynomial of a non-square matrix");
    Matrix<K> acc = Matrix<K>::zero(a.rows(), a.cols(), a.field_exemplar());
    Matrix<K> id = Matrix<K>::identity(a.rows(), a.field_exemplar());
    for (int i = f.degree(); i >= 0; --i) acc = acc * a + id * f.coeff(i);
    return acc;
}

} // namespace cgm
