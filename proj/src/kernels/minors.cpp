#include "plueckerlab/kernels/minors.hpp"

#include "plueckerlab/parallel.hpp"

namespace plab {

std::vector<std::vector<std::size_t>> column_subsets(std::size_t c, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  if (r > c) return out;
  std::vector<std::size_t> s(r);
  for (std::size_t i = 0; i < r; ++i) s[i] = i;
  for (;;) {
    out.push_back(s);
    std::size_t i = r;
    while (i > 0 && s[i - 1] == c - r + (i - 1)) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t k = i; k < r; ++k) s[k] = s[k - 1] + 1;
  }
  return out;
}

namespace {
std::vector<std::size_t> all_rows(std::size_t n) {
  std::vector<std::size_t> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = i;
  return r;
}
}  // namespace

std::vector<MultiPoly> maximal_minors(const Matrix<MultiPoly>& m) {
  if (m.rows() > m.cols()) throw std::invalid_argument("maximal minors need rows <= cols");
  const auto subsets = column_subsets(m.cols(), m.rows());
  const auto rows = all_rows(m.rows());
  return parallel::map<MultiPoly>(subsets.size(), [&](std::size_t i) { return determinant(m.select(rows, subsets[i])); });
}

std::vector<MultiPoly> maximal_minors_serial(const Matrix<MultiPoly>& m) {
  if (m.rows() > m.cols()) throw std::invalid_argument("maximal minors need rows <= cols");
  const auto subsets = column_subsets(m.cols(), m.rows());
  const auto rows = all_rows(m.rows());
  return parallel::map_serial<MultiPoly>(subsets.size(), [&](std::size_t i) { return determinant(m.select(rows, subsets[i])); });
}

}  // namespace plab
