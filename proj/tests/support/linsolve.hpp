#ifndef HECKELIB_TESTS_LINSOLVE_HPP
#define HECKELIB_TESTS_LINSOLVE_HPP

#include <optional>
#include <stdexcept>
#include <vector>

// Test-side exact linear algebra over an arbitrary field type F.
// F needs: default ctor (zero), F(1), +, -, *, /, ==, is-zero via == F().

namespace testsupport {

template <class F>
using Mat = std::vector<std::vector<F>>;

// solve M x = rhs by Gaussian elimination; M square and invertible
template <class F>
std::vector<F> solve(Mat<F> M, std::vector<F> rhs) {
  const size_t n = M.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && M[piv][col] == F()) ++piv;
    if (piv == n) throw std::runtime_error("singular matrix in solve()");
    std::swap(M[piv], M[col]);
    std::swap(rhs[piv], rhs[col]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col || M[r][col] == F()) continue;
      F f = M[r][col] / M[col][col];
      for (size_t c = col; c < n; ++c) M[r][c] = M[r][c] - f * M[col][c];
      rhs[r] = rhs[r] - f * rhs[col];
    }
  }
  std::vector<F> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = rhs[i] / M[i][i];
  return x;
}

// basis of the kernel of M (rows = equations), vectors of length ncols
template <class F>
Mat<F> kernel(Mat<F> M, size_t ncols) {
  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < ncols && row < M.size(); ++col) {
    size_t piv = row;
    while (piv < M.size() && M[piv][col] == F()) ++piv;
    if (piv == M.size()) continue;
    std::swap(M[piv], M[row]);
    for (size_t r = 0; r < M.size(); ++r) {
      if (r == row || M[r][col] == F()) continue;
      F f = M[r][col] / M[row][col];
      for (size_t c = 0; c < ncols; ++c) M[r][c] = M[r][c] - f * M[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<char> is_pivot(ncols, 0);
  for (size_t c : pivot_col) is_pivot[c] = 1;
  Mat<F> basis;
  for (size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> vec(ncols);
    vec[free] = F(1);
    for (size_t r = 0; r < pivot_col.size(); ++r)
      vec[pivot_col[r]] = F() - M[r][free] / M[r][pivot_col[r]];
    basis.push_back(std::move(vec));
  }
  return basis;
}

}  // namespace testsupport

#endif
