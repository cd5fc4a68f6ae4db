#ifndef QUIVERLAB_MATRIX_HPP
#define QUIVERLAB_MATRIX_HPP

#include <optional>
#include <vector>

#include "quiverlab/field.hpp"

namespace quiverlab {

// Dense row-major matrix over a field F. The field object is passed to the
// operations rather than stored, so Mat is plain data; entries are kept
// normalized (reduced mod p resp. canonical fractions) by construction.
template <class F>
struct Mat {
  using Elt = typename F::Elt;

  int rows = 0;
  int cols = 0;
  std::vector<Elt> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Elt& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Elt& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }
};

template <class F>
Mat<F> zero_mat(const F& f, int r, int c);
template <class F>
Mat<F> identity_mat(const F& f, int n);

template <class F>
bool mat_is_zero(const F& f, const Mat<F>& m);

template <class F>
Mat<F> mat_mul(const F& f, const Mat<F>& A, const Mat<F>& B);
template <class F>
Mat<F> mat_add(const F& f, const Mat<F>& A, const Mat<F>& B);
template <class F>
Mat<F> mat_sub(const F& f, const Mat<F>& A, const Mat<F>& B);
template <class F>
Mat<F> mat_neg(const F& f, const Mat<F>& A);
template <class F>
Mat<F> mat_scale(const F& f, const typename F::Elt& c, const Mat<F>& A);
template <class F>
Mat<F> transpose(const Mat<F>& A);

// [A | B] and [A ; B]
template <class F>
Mat<F> hconcat(const Mat<F>& A, const Mat<F>& B);
template <class F>
Mat<F> vconcat(const Mat<F>& A, const Mat<F>& B);
template <class F>
Mat<F> block_diag(const F& f, const std::vector<Mat<F>>& blocks);

// Gauss-Jordan reduction with deterministic pivoting: columns are scanned
// left to right and the first row with a nonzero entry becomes the pivot.
//   rref       reduced row echelon form of A
//   rank       number of pivots
//   pivots     pivot column indices, ascending
//   null_basis columns form a basis of the right null space; the basis vector
//              for free column j has a 1 in position j, so rank + null cols
//              always equals A.cols
template <class F>
struct Rref {
  Mat<F> rref;
  int rank = 0;
  std::vector<int> pivots;
  Mat<F> null_basis;
};

template <class F>
Rref<F> reduce(const F& f, const Mat<F>& A);

template <class F>
int rank_of(const F& f, const Mat<F>& A);

// Solve A X = B. Returns nullopt when inconsistent; when the system is
// underdetermined the free coordinates of X are set to zero.
template <class F>
std::optional<Mat<F>> solve(const F& f, const Mat<F>& A, const Mat<F>& B);

// Basis of the column space: the pivot columns of A, in order.
template <class F>
Mat<F> column_space_basis(const F& f, const Mat<F>& A);

// Standard basis vectors e_j (as columns) extending col(A) to the full space;
// deterministic: the j not hit by pivot rows of the column-reduced A.
template <class F>
Mat<F> complement_basis(const F& f, const Mat<F>& A, int ambient_dim);

// Surjection q : k^n -> k^(n-rank A) with kernel exactly col(A); rows are a
// basis of the left annihilator of A.
template <class F>
Mat<F> quotient_map(const F& f, const Mat<F>& A, int ambient_dim);

template <class F>
bool is_invertible(const F& f, const Mat<F>& A);
template <class F>
Mat<F> inverse(const F& f, const Mat<F>& A);

// Flatten to a single column, row-major.
template <class F>
Mat<F> vectorize(const Mat<F>& A);

}  // namespace quiverlab

#endif
