#include "quiverlab/matrix.hpp"

namespace quiverlab {

template <class F>
Mat<F> zero_mat(const F& f, int r, int c) {
  Mat<F> m(r, c);
  for (auto& x : m.a) x = f.zero();
  return m;
}

template <class F>
Mat<F> identity_mat(const F& f, int n) {
  Mat<F> m = zero_mat(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

template <class F>
bool mat_is_zero(const F& f, const Mat<F>& m) {
  for (const auto& x : m.a)
    if (!f.is_zero(x)) return false;
  return true;
}

template <class F>
Mat<F> mat_mul(const F& f, const Mat<F>& A, const Mat<F>& B) {
  if (A.cols != B.rows)
    throw Error(ErrorKind::shape_mismatch, "matrix product " + std::to_string(A.rows) + "x" +
                                               std::to_string(A.cols) + " * " +
                                               std::to_string(B.rows) + "x" + std::to_string(B.cols));
  Mat<F> C = zero_mat(f, A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      const auto& aik = A.at(i, k);
      if (f.is_zero(aik)) continue;
      for (int j = 0; j < B.cols; ++j)
        C.at(i, j) = f.add(C.at(i, j), f.mul(aik, B.at(k, j)));
    }
  return C;
}

template <class F>
Mat<F> mat_add(const F& f, const Mat<F>& A, const Mat<F>& B) {
  if (A.rows != B.rows || A.cols != B.cols)
    throw Error(ErrorKind::shape_mismatch, "matrix sum shape");
  Mat<F> C = A;
  for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = f.add(C.a[i], B.a[i]);
  return C;
}

template <class F>
Mat<F> mat_sub(const F& f, const Mat<F>& A, const Mat<F>& B) {
  if (A.rows != B.rows || A.cols != B.cols)
    throw Error(ErrorKind::shape_mismatch, "matrix difference shape");
  Mat<F> C = A;
  for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = f.sub(C.a[i], B.a[i]);
  return C;
}

template <class F>
Mat<F> mat_neg(const F& f, const Mat<F>& A) {
  Mat<F> C = A;
  for (auto& x : C.a) x = f.neg(x);
  return C;
}

template <class F>
Mat<F> mat_scale(const F& f, const typename F::Elt& c, const Mat<F>& A) {
  Mat<F> C = A;
  for (auto& x : C.a) x = f.mul(c, x);
  return C;
}

template <class F>
Mat<F> transpose(const Mat<F>& A) {
  Mat<F> T(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

template <class F>
Mat<F> hconcat(const Mat<F>& A, const Mat<F>& B) {
  if (A.rows != B.rows) throw Error(ErrorKind::shape_mismatch, "hconcat rows");
  Mat<F> C(A.rows, A.cols + B.cols);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
    for (int j = 0; j < B.cols; ++j) C.at(i, A.cols + j) = B.at(i, j);
  }
  return C;
}

template <class F>
Mat<F> vconcat(const Mat<F>& A, const Mat<F>& B) {
  if (A.cols != B.cols) throw Error(ErrorKind::shape_mismatch, "vconcat cols");
  Mat<F> C(A.rows + B.rows, A.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
  for (int i = 0; i < B.rows; ++i)
    for (int j = 0; j < B.cols; ++j) C.at(A.rows + i, j) = B.at(i, j);
  return C;
}

template <class F>
Mat<F> block_diag(const F& f, const std::vector<Mat<F>>& blocks) {
  int r = 0, c = 0;
  for (const auto& b : blocks) r += b.rows, c += b.cols;
  Mat<F> C = zero_mat(f, r, c);
  int ro = 0, co = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows; ++i)
      for (int j = 0; j < b.cols; ++j) C.at(ro + i, co + j) = b.at(i, j);
    ro += b.rows;
    co += b.cols;
  }
  return C;
}

template <class F>
Rref<F> reduce(const F& f, const Mat<F>& A) {
  Rref<F> out;
  Mat<F> m = A;
  const int rows = m.rows, cols = m.cols;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!f.is_zero(m.at(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    const auto s = f.inv(m.at(r, c));
    for (int j = c; j < cols; ++j) m.at(r, j) = f.mul(s, m.at(r, j));
    for (int i = 0; i < rows; ++i) {
      if (i == r || f.is_zero(m.at(i, c))) continue;
      const auto t = m.at(i, c);
      for (int j = c; j < cols; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(t, m.at(r, j)));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  // null basis: one column per free column, with a 1 in the free position
  std::vector<char> is_pivot(cols, 0);
  for (int c : out.pivots) is_pivot[c] = 1;
  out.null_basis = zero_mat(f, cols, cols - out.rank);
  int k = 0;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    out.null_basis.at(c, k) = f.one();
    for (int i = 0; i < out.rank; ++i)
      out.null_basis.at(out.pivots[i], k) = f.neg(m.at(i, c));
    ++k;
  }
  out.rref = std::move(m);
  return out;
}

template <class F>
int rank_of(const F& f, const Mat<F>& A) {
  return reduce(f, A).rank;
}

template <class F>
std::optional<Mat<F>> solve(const F& f, const Mat<F>& A, const Mat<F>& B) {
  if (A.rows != B.rows) throw Error(ErrorKind::shape_mismatch, "solve: row counts differ");
  const Rref<F> red = reduce(f, hconcat(A, B));
  // consistency: no pivot in the B block
  for (int c : red.pivots)
    if (c >= A.cols) return std::nullopt;
  Mat<F> X = zero_mat(f, A.cols, B.cols);
  for (size_t i = 0; i < red.pivots.size(); ++i) {
    const int pc = red.pivots[i];
    for (int j = 0; j < B.cols; ++j) X.at(pc, j) = red.rref.at(static_cast<int>(i), A.cols + j);
  }
  return X;
}

template <class F>
Mat<F> column_space_basis(const F& f, const Mat<F>& A) {
  const Rref<F> red = reduce(f, A);
  Mat<F> B(A.rows, red.rank);
  for (int k = 0; k < red.rank; ++k)
    for (int i = 0; i < A.rows; ++i) B.at(i, k) = A.at(i, red.pivots[k]);
  return B;
}

template <class F>
Mat<F> complement_basis(const F& f, const Mat<F>& A, int ambient_dim) {
  if (A.rows != ambient_dim) throw Error(ErrorKind::shape_mismatch, "complement_basis ambient");
  // pivot rows of the column-reduced A = pivot columns of A^T
  const Rref<F> red = reduce(f, transpose(A));
  std::vector<char> hit(ambient_dim, 0);
  for (int c : red.pivots) hit[c] = 1;
  Mat<F> C = zero_mat(f, ambient_dim, ambient_dim - red.rank);
  int k = 0;
  for (int i = 0; i < ambient_dim; ++i)
    if (!hit[i]) C.at(i, k++) = f.one();
  return C;
}

template <class F>
Mat<F> quotient_map(const F& f, const Mat<F>& A, int ambient_dim) {
  if (A.rows != ambient_dim) throw Error(ErrorKind::shape_mismatch, "quotient_map ambient");
  return transpose(reduce(f, transpose(A)).null_basis);
}

template <class F>
bool is_invertible(const F& f, const Mat<F>& A) {
  return A.rows == A.cols && rank_of(f, A) == A.rows;
}

template <class F>
Mat<F> inverse(const F& f, const Mat<F>& A) {
  if (A.rows != A.cols) throw Error(ErrorKind::shape_mismatch, "inverse of non-square matrix");
  const auto X = solve(f, A, identity_mat(f, A.rows));
  if (!X) throw Error(ErrorKind::bad_parameter, "matrix is singular");
  return *X;
}

template <class F>
Mat<F> vectorize(const Mat<F>& A) {
  Mat<F> v(A.rows * A.cols, 1);
  v.a = A.a;
  return v;
}

#define QUIVERLAB_INSTANTIATE_MATRIX(F)                                              \
  template Mat<F> zero_mat<F>(const F&, int, int);                                  \
  template Mat<F> identity_mat<F>(const F&, int);                                   \
  template bool mat_is_zero<F>(const F&, const Mat<F>&);                            \
  template Mat<F> mat_mul<F>(const F&, const Mat<F>&, const Mat<F>&);               \
  template Mat<F> mat_add<F>(const F&, const Mat<F>&, const Mat<F>&);               \
  template Mat<F> mat_sub<F>(const F&, const Mat<F>&, const Mat<F>&);               \
  template Mat<F> mat_neg<F>(const F&, const Mat<F>&);                              \
  template Mat<F> mat_scale<F>(const F&, const typename F::Elt&, const Mat<F>&);    \
  template Mat<F> transpose<F>(const Mat<F>&);                                      \
  template Mat<F> hconcat<F>(const Mat<F>&, const Mat<F>&);                         \
  template Mat<F> vconcat<F>(const Mat<F>&, const Mat<F>&);                         \
  template Mat<F> block_diag<F>(const F&, const std::vector<Mat<F>>&);              \
  template Rref<F> reduce<F>(const F&, const Mat<F>&);                              \
  template int rank_of<F>(const F&, const Mat<F>&);                                 \
  template std::optional<Mat<F>> solve<F>(const F&, const Mat<F>&, const Mat<F>&);  \
  template Mat<F> column_space_basis<F>(const F&, const Mat<F>&);                   \
  template Mat<F> complement_basis<F>(const F&, const Mat<F>&, int);                \
  template Mat<F> quotient_map<F>(const F&, const Mat<F>&, int);                    \
  template bool is_invertible<F>(const F&, const Mat<F>&);                          \
  template Mat<F> inverse<F>(const F&, const Mat<F>&);                              \
  template Mat<F> vectorize<F>(const Mat<F>&);

QUIVERLAB_INSTANTIATE_MATRIX(PrimeField)
QUIVERLAB_INSTANTIATE_MATRIX(Rationals)

}  // namespace quiverlab
