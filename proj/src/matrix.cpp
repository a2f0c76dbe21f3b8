#include "wgauss/matrix.hpp"

#include "wgauss/kernels.hpp"

namespace wgauss {

namespace {

bool prime_fast(FieldPtr f) { return f && f->is_finite() && f->degree() == 1; }

// Gauss-Jordan over F_p on packed rows.
RrefResult rref_fp(const Matrix& m) {
    const uint32_t p = m.field()->p();
    const int R = m.rows(), C = m.cols();
    std::vector<std::vector<uint32_t>> a(static_cast<std::size_t>(R), std::vector<uint32_t>(C));
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < C; ++j) a[i][j] = m.at(i, j).residue()[0];
    std::vector<int> piv;
    int row = 0;
    for (int c = 0; c < C && row < R; ++c) {
        int sel = -1;
        for (int r = row; r < R; ++r)
            if (a[r][c]) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(a[row], a[sel]);
        uint32_t iv = fp::inv(a[row][c], p);
        for (int j = c; j < C; ++j) a[row][j] = static_cast<uint32_t>(uint64_t{a[row][j]} * iv % p);
        for (int r = 0; r < R; ++r) {
            if (r == row || !a[r][c]) continue;
            kern::axpy_mod(a[r].data() + c, a[row].data() + c, p - a[r][c], static_cast<std::size_t>(C - c), p);
        }
        piv.push_back(c);
        ++row;
    }
    RrefResult out{Matrix(m.field(), row, C), piv};
    for (int i = 0; i < row; ++i)
        for (int j = 0; j < C; ++j) out.rref.at(i, j) = Scalar::from_int(m.field(), a[i][j]);
    return out;
}

RrefResult rref_generic(const Matrix& m) {
    const int R = m.rows(), C = m.cols();
    Matrix a = m;
    std::vector<int> piv;
    int row = 0;
    for (int c = 0; c < C && row < R; ++c) {
        int sel = -1;
        for (int r = row; r < R; ++r)
            if (!a.at(r, c).is_zero()) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        if (sel != row)
            for (int j = 0; j < C; ++j) std::swap(a.at(row, j), a.at(sel, j));
        Scalar iv = a.at(row, c).inv();
        for (int j = c; j < C; ++j) a.at(row, j) *= iv;
        for (int r = 0; r < R; ++r) {
            if (r == row || a.at(r, c).is_zero()) continue;
            Scalar f = a.at(r, c);
            for (int j = c; j < C; ++j) a.at(r, j) -= f * a.at(row, j);
        }
        piv.push_back(c);
        ++row;
    }
    RrefResult out{Matrix(m.field(), row, C), piv};
    for (int i = 0; i < row; ++i)
        for (int j = 0; j < C; ++j) out.rref.at(i, j) = a.at(i, j);
    return out;
}

}  // namespace

Matrix::Matrix(FieldPtr f, int rows, int cols)
    : f_(f), r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(FieldPtr f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(FieldPtr f, int cols, const std::vector<std::vector<Scalar>>& rows) {
    Matrix m(f, 0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

std::vector<Scalar> Matrix::row(int i) const {
    return std::vector<Scalar>(a_.begin() + static_cast<long>(i) * c_, a_.begin() + static_cast<long>(i + 1) * c_);
}

void Matrix::append_row(const std::vector<Scalar>& v) {
    if (static_cast<int>(v.size()) != c_) throw DomainError("append_row: width mismatch");
    for (const auto& s : v) {
        if (s.field() != f_) throw MixedFieldError();
        a_.push_back(s);
    }
    ++r_;
}

void Matrix::append_rows(const Matrix& m) {
    for (int i = 0; i < m.rows(); ++i) append_row(m.row(i));
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (c_ != o.r_) throw DomainError("matrix product: shape mismatch");
    Matrix out(f_, r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.c_; ++j) out.at(i, j) += at(i, k) * o.at(k, j);
        }
    return out;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    std::vector<Scalar> out(static_cast<std::size_t>(r_), Scalar::zero(f_));
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

bool Matrix::operator==(const Matrix& o) const { return f_ == o.f_ && r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

Matrix Matrix::transpose() const {
    Matrix t(f_, c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::coerce(FieldPtr to) const {
    Matrix m(to, r_, c_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i].coerce(to);
    return m;
}

std::optional<Matrix> Matrix::inverse() const {
    if (r_ != c_) throw DomainError("inverse of a non-square matrix");
    Matrix aug(f_, r_, 2 * c_);
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, c_ + i) = Scalar::one(f_);
    }
    auto red = rref(aug);
    if (red.rank() < r_ || red.pivots[r_ - 1] >= c_) return std::nullopt;
    Matrix inv(f_, r_, c_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) inv.at(i, j) = red.rref.at(i, c_ + j);
    return inv;
}

Scalar Matrix::det() const {
    if (r_ != c_) throw DomainError("determinant of a non-square matrix");
    Matrix a = *this;
    Scalar d = Scalar::one(f_);
    for (int c = 0; c < c_; ++c) {
        int sel = -1;
        for (int r = c; r < r_; ++r)
            if (!a.at(r, c).is_zero()) {
                sel = r;
                break;
            }
        if (sel < 0) return Scalar::zero(f_);
        if (sel != c) {
            for (int j = 0; j < c_; ++j) std::swap(a.at(c, j), a.at(sel, j));
            d = -d;
        }
        d *= a.at(c, c);
        Scalar iv = a.at(c, c).inv();
        for (int r = c + 1; r < r_; ++r) {
            if (a.at(r, c).is_zero()) continue;
            Scalar f = a.at(r, c) * iv;
            for (int j = c; j < c_; ++j) a.at(r, j) -= f * a.at(c, j);
        }
    }
    return d;
}

RrefResult rref(const Matrix& m) { return prime_fast(m.field()) ? rref_fp(m) : rref_generic(m); }

int rank(const Matrix& m) { return rref(m).rank(); }

std::vector<std::vector<Scalar>> kernel(const Matrix& m) {
    auto red = rref(m);
    FieldPtr f = m.field();
    std::vector<bool> is_piv(static_cast<std::size_t>(m.cols()), false);
    for (int c : red.pivots) is_piv[c] = true;
    std::vector<std::vector<Scalar>> out;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_piv[free]) continue;
        std::vector<Scalar> v(static_cast<std::size_t>(m.cols()), Scalar::zero(f));
        v[free] = Scalar::one(f);
        for (int i = 0; i < red.rank(); ++i) v[red.pivots[i]] = -red.rref.at(i, free);
        out.push_back(std::move(v));
    }
    return out;
}

RankKernelRref rank_kernel_rref(const Matrix& m) {
    auto red = rref(m);
    return {red.rank(), kernel(m), red.rref};
}

bool same_row_space(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) return false;
    FieldPtr f = a.field() == b.field() ? a.field() : Field::compositum(a.field(), b.field());
    return rref(a.coerce(f)).rref == rref(b.coerce(f)).rref;
}

std::vector<Scalar> plucker(const Matrix& basis) {
    const int k = basis.rows(), n = basis.cols();
    FieldPtr f = basis.field();
    if (rank(basis) < k) throw DomainError("plucker: rows are linearly dependent");
    std::vector<Scalar> out;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        Matrix sub(f, k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub.at(i, j) = basis.at(i, idx[j]);
        out.push_back(sub.det());
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    for (const auto& v : out)
        if (!v.is_zero()) {
            Scalar iv = v.inv();
            for (auto& w : out) w *= iv;
            break;
        }
    return out;
}

}  // namespace wgauss
