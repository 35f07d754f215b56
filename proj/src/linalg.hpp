#pragma once
// Dense and sparse exact matrices, elimination, and subspaces in reduced echelon form.

#include <optional>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace atl {

using Vec = std::vector<Scalar>;

struct DimensionBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : r_(rows), c_(cols), d_(static_cast<size_t>(rows) * cols) {}
    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<Vec>& rows, int cols);
    static Matrix from_cols(const std::vector<Vec>& cols, int rows);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Scalar& at(int i, int j) { return d_[static_cast<size_t>(i) * c_ + j]; }
    const Scalar& at(int i, int j) const { return d_[static_cast<size_t>(i) * c_ + j]; }
    Vec row(int i) const;
    Vec col(int j) const;

    Matrix transpose() const;
    bool is_zero() const;
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vec operator*(const Matrix& a, const Vec& v);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    int r_ = 0, c_ = 0;
    std::vector<Scalar> d_;
};

class SparseMat {
public:
    SparseMat() = default;
    SparseMat(int rows, int cols) : r_(rows), c_(cols), rows_(rows) {}
    static SparseMat identity(int n);
    static SparseMat from_dense(const Matrix& m);

    int rows() const { return r_; }
    int cols() const { return c_; }
    // adds v to entry (i, j)
    void add(int i, int j, const Scalar& v);
    void finalize();  // merge duplicates, drop zeros, sort
    const std::vector<std::pair<int, Scalar>>& row(int i) const { return rows_[i]; }
    Scalar get(int i, int j) const;
    size_t nnz() const;

    Matrix dense() const;
    SparseMat transpose() const;
    friend SparseMat operator*(const SparseMat& a, const SparseMat& b);
    friend Vec operator*(const SparseMat& a, const Vec& v);
    friend Matrix operator*(const SparseMat& a, const Matrix& b);
    friend SparseMat operator+(const SparseMat& a, const SparseMat& b);
    friend SparseMat operator-(const SparseMat& a, const SparseMat& b);
    friend SparseMat operator*(const Scalar& s, const SparseMat& a);
    friend bool operator==(const SparseMat& a, const SparseMat& b);
    friend bool operator!=(const SparseMat& a, const SparseMat& b) { return !(a == b); }

private:
    int r_ = 0, c_ = 0;
    std::vector<std::vector<std::pair<int, Scalar>>> rows_;
};

struct Echelon {
    Matrix R;                 // reduced row echelon form (only nonzero rows kept)
    std::vector<int> pivots;  // pivot column of each row
};

Echelon rref(Matrix a);
int rank(const Matrix& a);
// basis of {x : a x = 0}, one vector per free column
std::vector<Vec> nullspace(const Matrix& a);
std::vector<Vec> left_nullspace(const Matrix& a);
std::optional<Matrix> inverse(const Matrix& a);
// a particular x with a x = b, if any
std::optional<Vec> solve(const Matrix& a, const Vec& b);

bool is_zero(const Vec& v);
Vec axpy(const Vec& x, const Scalar& a, const Vec& y);  // x + a*y

// A subspace of K^n kept as reduced echelon rows; coordinates are the pivot entries.
class Subspace {
public:
    explicit Subspace(int n = 0) : n_(n) {}
    static Subspace span(int n, const std::vector<Vec>& vecs);
    static Subspace whole(int n);

    int ambient() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return piv_; }

    // returns true if v was new
    bool add(const Vec& v);
    Vec reduce(const Vec& v) const;  // v minus its component along the echelon rows
    bool contains(const Vec& v) const { return is_zero(reduce(v)); }
    Vec coords(const Vec& v) const;  // requires contains(v)
    bool contains(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    Subspace sum(const Subspace& o) const;

private:
    int n_ = 0;
    std::vector<Vec> basis_;
    std::vector<int> piv_;
};

// A subquotient U/L of K^n (L inside U) with a fixed basis of a complement of L in U.
class Subquotient {
public:
    Subquotient() = default;
    Subquotient(const Subspace& upper, const Subspace& lower);

    int dim() const { return comp_.dim(); }
    const Subspace& upper() const { return upper_; }
    const Subspace& lower() const { return lower_; }
    const std::vector<Vec>& lifts() const { return comp_.basis(); }
    // coordinates of an element of U modulo L
    Vec coords(const Vec& v) const;

private:
    Subspace upper_, lower_, comp_;
};

std::string to_string(const Matrix& m);

}  // namespace atl
