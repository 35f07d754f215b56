#include "linalg.hpp"

#include <algorithm>
#include <sstream>

namespace atl {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
    Matrix m(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.r_; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols, int rows) {
    Matrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.c_; ++j)
        for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    return m;
}

Vec Matrix::row(int i) const { return Vec(d_.begin() + static_cast<long>(i) * c_, d_.begin() + static_cast<long>(i + 1) * c_); }

Vec Matrix::col(int j) const {
    Vec v(r_);
    for (int i = 0; i < r_; ++i) v[i] = at(i, j);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool Matrix::is_zero() const {
    for (auto& v : d_)
        if (!v.is_zero()) return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matrix size mismatch in product");
    Matrix m(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
        for (int k = 0; k < a.c_; ++k) {
            const Scalar& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.c_; ++j) {
                const Scalar& y = b.at(k, j);
                if (!y.is_zero()) m.at(i, j) += x * y;
            }
        }
    return m;
}

Vec operator*(const Matrix& a, const Vec& v) {
    Vec r(a.r_);
    for (int i = 0; i < a.r_; ++i)
        for (int j = 0; j < a.c_; ++j)
            if (!a.at(i, j).is_zero() && !v[j].is_zero()) r[i] += a.at(i, j) * v[j];
    return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix m = a;
    for (size_t k = 0; k < m.d_.size(); ++k) m.d_[k] += b.d_[k];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix m = a;
    for (size_t k = 0; k < m.d_.size(); ++k) m.d_[k] -= b.d_[k];
    return m;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix m = a;
    for (auto& v : m.d_)
        if (!v.is_zero()) v = s * v;
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.d_ == b.d_; }

SparseMat SparseMat::identity(int n) {
    SparseMat m(n, n);
    for (int i = 0; i < n; ++i) m.rows_[i].emplace_back(i, Scalar(1));
    return m;
}

SparseMat SparseMat::from_dense(const Matrix& d) {
    SparseMat m(d.rows(), d.cols());
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j)
            if (!d.at(i, j).is_zero()) m.rows_[i].emplace_back(j, d.at(i, j));
    return m;
}

void SparseMat::add(int i, int j, const Scalar& v) {
    if (!v.is_zero()) rows_[i].emplace_back(j, v);
}

void SparseMat::finalize() {
    for (auto& row : rows_) {
        std::stable_sort(row.begin(), row.end(), [](auto& x, auto& y) { return x.first < y.first; });
        std::vector<std::pair<int, Scalar>> out;
        for (auto& e : row) {
            if (!out.empty() && out.back().first == e.first) out.back().second += e.second;
            else out.push_back(e);
        }
        out.erase(std::remove_if(out.begin(), out.end(), [](auto& e) { return e.second.is_zero(); }), out.end());
        row.swap(out);
    }
}

Scalar SparseMat::get(int i, int j) const {
    for (auto& e : rows_[i])
        if (e.first == j) return e.second;
    return Scalar(0);
}

size_t SparseMat::nnz() const {
    size_t n = 0;
    for (auto& r : rows_) n += r.size();
    return n;
}

Matrix SparseMat::dense() const {
    Matrix m(r_, c_);
    for (int i = 0; i < r_; ++i)
        for (auto& e : rows_[i]) m.at(i, e.first) = e.second;
    return m;
}

SparseMat SparseMat::transpose() const {
    SparseMat t(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (auto& e : rows_[i]) t.rows_[e.first].emplace_back(i, e.second);
    return t;
}

SparseMat operator*(const SparseMat& a, const SparseMat& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matrix size mismatch in product");
    SparseMat m(a.r_, b.c_);
    std::vector<Scalar> acc(b.c_);
    std::vector<char> used(b.c_, 0);
    std::vector<int> touched;
    for (int i = 0; i < a.r_; ++i) {
        touched.clear();
        for (auto& [k, x] : a.rows_[i])
            for (auto& [j, y] : b.rows_[k]) {
                if (!used[j]) {
                    used[j] = 1;
                    touched.push_back(j);
                    acc[j] = x * y;
                } else acc[j] += x * y;
            }
        std::sort(touched.begin(), touched.end());
        for (int j : touched) {
            if (!acc[j].is_zero()) m.rows_[i].emplace_back(j, acc[j]);
            used[j] = 0;
        }
    }
    return m;
}

Vec operator*(const SparseMat& a, const Vec& v) {
    Vec r(a.r_);
    for (int i = 0; i < a.r_; ++i)
        for (auto& [j, x] : a.rows_[i])
            if (!v[j].is_zero()) r[i] += x * v[j];
    return r;
}

Matrix operator*(const SparseMat& a, const Matrix& b) {
    Matrix m(a.r_, b.cols());
    for (int i = 0; i < a.r_; ++i)
        for (auto& [k, x] : a.rows_[i])
            for (int j = 0; j < b.cols(); ++j)
                if (!b.at(k, j).is_zero()) m.at(i, j) += x * b.at(k, j);
    return m;
}

SparseMat operator+(const SparseMat& a, const SparseMat& b) {
    SparseMat m = a;
    for (int i = 0; i < b.r_; ++i)
        for (auto& e : b.rows_[i]) m.rows_[i].push_back(e);
    m.finalize();
    return m;
}

SparseMat operator-(const SparseMat& a, const SparseMat& b) { return a + Scalar(-1) * b; }

SparseMat operator*(const Scalar& s, const SparseMat& a) {
    SparseMat m(a.r_, a.c_);
    if (s.is_zero()) return m;
    for (int i = 0; i < a.r_; ++i)
        for (auto& [j, x] : a.rows_[i]) m.rows_[i].emplace_back(j, s * x);
    return m;
}

bool operator==(const SparseMat& a, const SparseMat& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) return false;
    for (int i = 0; i < a.r_; ++i) {
        auto& x = a.rows_[i];
        auto& y = b.rows_[i];
        size_t p = 0, q = 0;
        while (p < x.size() || q < y.size()) {
            if (p < x.size() && x[p].second.is_zero()) {
                ++p;
                continue;
            }
            if (q < y.size() && y[q].second.is_zero()) {
                ++q;
                continue;
            }
            if (p == x.size() || q == y.size()) return false;
            if (x[p].first != y[q].first || x[p].second != y[q].second) return false;
            ++p;
            ++q;
        }
    }
    return true;
}

Echelon rref(Matrix a) {
    int R = a.rows(), C = a.cols();
    std::vector<int> piv;
    int row = 0;
    for (int col = 0; col < C && row < R; ++col) {
        int best = -1;
        long best_size = 0;
        for (int i = row; i < R; ++i) {
            if (a.at(i, col).is_zero()) continue;
            long s = a.at(i, col).size_hint();
            if (best < 0 || s < best_size) best = i, best_size = s;
        }
        if (best < 0) continue;
        if (best != row)
            for (int j = 0; j < C; ++j) std::swap(a.at(best, j), a.at(row, j));
        Scalar inv = a.at(row, col).inv();
        for (int j = col; j < C; ++j)
            if (!a.at(row, j).is_zero()) a.at(row, j) = a.at(row, j) * inv;
        for (int i = 0; i < R; ++i) {
            if (i == row || a.at(i, col).is_zero()) continue;
            Scalar f = a.at(i, col);
            for (int j = col; j < C; ++j) submul(a.at(i, j), f, a.at(row, j));
        }
        piv.push_back(col);
        ++row;
    }
    Matrix out(row, C);
    for (int i = 0; i < row; ++i)
        for (int j = 0; j < C; ++j) out.at(i, j) = a.at(i, j);
    return {out, piv};
}

int rank(const Matrix& a) { return static_cast<int>(rref(a).pivots.size()); }

std::vector<Vec> nullspace(const Matrix& a) {
    Echelon e = rref(a);
    int C = a.cols();
    std::vector<char> is_piv(C, 0);
    for (int p : e.pivots) is_piv[p] = 1;
    std::vector<Vec> out;
    for (int f = 0; f < C; ++f) {
        if (is_piv[f]) continue;
        Vec v(C);
        v[f] = Scalar(1);
        for (size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.R.at(static_cast<int>(i), f);
        out.push_back(v);
    }
    return out;
}

std::vector<Vec> left_nullspace(const Matrix& a) { return nullspace(a.transpose()); }

std::optional<Matrix> inverse(const Matrix& a) {
    int n = a.rows();
    if (n != a.cols()) return std::nullopt;
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = Scalar(1);
    }
    Echelon e = rref(aug);
    if (static_cast<int>(e.pivots.size()) < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = e.R.at(i, n + j);
    return inv;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    int R = a.rows(), C = a.cols();
    Matrix aug(R, C + 1);
    for (int i = 0; i < R; ++i) {
        for (int j = 0; j < C; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, C) = b[i];
    }
    Echelon e = rref(aug);
    Vec x(C);
    for (size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == C) return std::nullopt;
        x[e.pivots[i]] = e.R.at(static_cast<int>(i), C);
    }
    return x;
}

bool is_zero(const Vec& v) {
    for (auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec axpy(const Vec& x, const Scalar& a, const Vec& y) {
    Vec r = x;
    if (a.is_zero()) return r;
    for (size_t i = 0; i < r.size(); ++i)
        if (!y[i].is_zero()) r[i] += a * y[i];
    return r;
}

Subspace Subspace::span(int n, const std::vector<Vec>& vecs) {
    Subspace s(n);
    for (auto& v : vecs) s.add(v);
    return s;
}

Subspace Subspace::whole(int n) {
    Subspace s(n);
    for (int i = 0; i < n; ++i) {
        Vec v(n);
        v[i] = Scalar(1);
        s.basis_.push_back(v);
        s.piv_.push_back(i);
    }
    return s;
}

Vec Subspace::reduce(const Vec& v) const {
    Vec r = v;
    for (size_t i = 0; i < basis_.size(); ++i) {
        Scalar c = r[piv_[i]];
        if (c.is_zero()) continue;
        const Vec& b = basis_[i];
        for (int j = 0; j < n_; ++j) submul(r[j], c, b[j]);
    }
    return r;
}

bool Subspace::add(const Vec& v) {
    Vec r = reduce(v);
    int p = -1;
    long best = 0;
    for (int j = 0; j < n_; ++j) {
        if (r[j].is_zero()) continue;
        long s = r[j].size_hint();
        if (p < 0 || s < best) p = j, best = s;
    }
    if (p < 0) return false;
    Scalar inv = r[p].inv();
    for (auto& x : r)
        if (!x.is_zero()) x = x * inv;
    for (auto& b : basis_) {
        Scalar c = b[p];
        if (c.is_zero()) continue;
        for (int j = 0; j < n_; ++j) submul(b[j], c, r[j]);
    }
    basis_.push_back(std::move(r));
    piv_.push_back(p);
    return true;
}

Vec Subspace::coords(const Vec& v) const {
    Vec c(basis_.size());
    for (size_t i = 0; i < basis_.size(); ++i) c[i] = v[piv_[i]];
    return c;
}

bool Subspace::contains(const Subspace& o) const {
    for (auto& b : o.basis_)
        if (!contains(b)) return false;
    return true;
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (dim() == 0 || o.dim() == 0) return Subspace(n_);
    // solve sum a_i u_i = sum b_j w_j
    std::vector<Vec> cols;
    for (auto& b : basis_) cols.push_back(b);
    for (auto& b : o.basis_) {
        Vec nb(n_);
        for (int j = 0; j < n_; ++j) nb[j] = -b[j];
        cols.push_back(nb);
    }
    Matrix A = Matrix::from_cols(cols, n_);
    Subspace out(n_);
    for (auto& x : nullspace(A)) {
        Vec v(n_);
        for (size_t i = 0; i < basis_.size(); ++i)
            if (!x[i].is_zero())
                for (int j = 0; j < n_; ++j) v[j] += x[i] * basis_[i][j];
        out.add(v);
    }
    return out;
}

Subspace Subspace::sum(const Subspace& o) const {
    Subspace s = *this;
    for (auto& b : o.basis_) s.add(b);
    return s;
}

Subquotient::Subquotient(const Subspace& upper, const Subspace& lower) : upper_(upper), lower_(lower) {
    comp_ = Subspace(upper.ambient());
    for (auto& b : upper.basis()) comp_.add(lower.reduce(b));
}

Vec Subquotient::coords(const Vec& v) const { return comp_.coords(lower_.reduce(v)); }

std::string to_string(const Matrix& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? ",\n [" : "[");
        for (int j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m.at(i, j).str();
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace atl
