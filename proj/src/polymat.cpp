#include "modkalt/polymat.hpp"

#include <cstdint>

#include "modkalt/errors.hpp"
#include "modkalt/families.hpp"

namespace modkalt {

bool poly_mat_equal(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

namespace {

const IntPoly kOne(1);
const IntPoly kT = IntPoly::monomial(1);

}  // namespace

PolyMatrix family_matrix(int n, int k, int r) {
  if (n < 1 || k < 1 || r < 1 || r > k) throw InvalidSpecError("family matrix needs n,k >= 1 and 1 <= r <= k");
  if (r >= 2 && n % k != 0) throw InvalidSpecError("family matrix with r >= 2 needs k | n");
  PolyMatrix m(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const int diff = j - i - (r - 1);
      if (((diff % k) + k) % k != 0) continue;
      m(i - 1, j - 1) = (i < j) ? kT : kOne;
    }
  return m;
}

PolyMatrix derangement_matrix(int n, int k) {
  PolyMatrix m = family_matrix(n, k, 1);
  for (int i = 0; i < n; ++i) m(i, i) = IntPoly();
  return m;
}

PolyMatrix eulerian_matrix(int m) {
  if (m < 1) throw InvalidSpecError("block size must be positive");
  PolyMatrix a(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a(i, j) = (i < j) ? kT : kOne;
  return a;
}

PolyMatrix eulerian_matrix_shifted(int m) {
  PolyMatrix b = eulerian_matrix(m);
  for (int i = 0; i < m; ++i) b(i, i) = kT;
  return b;
}

PolyMatrix derangement_block(int m) {
  PolyMatrix a = eulerian_matrix(m);
  for (int i = 0; i < m; ++i) a(i, i) = IntPoly();
  return a;
}

namespace {

int poly_degree_or_max(const IntPoly& p) {
  auto d = p.degree();
  return d ? *d : INT32_MAX;
}

IntPoly det_bareiss(PolyMatrix w) {
  const Eigen::Index n = w.rows();
  if (n == 0) return IntPoly(1);
  int sign = 1;
  IntPoly prev_pivot(1);
  for (Eigen::Index c = 0; c + 1 < n; ++c) {
    // lowest-degree nonzero pivot keeps intermediate growth down
    Eigen::Index pivot = -1;
    for (Eigen::Index i = c; i < n; ++i) {
      if (w(i, c).is_zero()) continue;
      if (pivot < 0 || poly_degree_or_max(w(i, c)) < poly_degree_or_max(w(pivot, c)))
        pivot = i;
    }
    if (pivot < 0) return IntPoly();
    if (pivot != c) {
      w.row(pivot).swap(w.row(c));
      sign = -sign;
    }
    for (Eigen::Index i = c + 1; i < n; ++i) {
      for (Eigen::Index j = c + 1; j < n; ++j)
        w(i, j) = exact_div(w(c, c) * w(i, j) - w(i, c) * w(c, j), prev_pivot);
      w(i, c) = IntPoly();
    }
    prev_pivot = w(c, c);
  }
  IntPoly result = w(n - 1, n - 1);
  return sign < 0 ? -result : result;
}

IntPoly det_cofactor_impl(const PolyMatrix& m, std::vector<Eigen::Index>& cols,
                          Eigen::Index row) {
  const size_t width = cols.size();
  if (width == 0) return IntPoly(1);
  if (width == 1) return m(row, cols[0]);
  IntPoly acc;
  int sign = 1;
  for (size_t pick = 0; pick < width; ++pick) {
    const Eigen::Index col = cols[pick];
    if (!m(row, col).is_zero()) {
      cols.erase(cols.begin() + static_cast<long>(pick));
      IntPoly minor = det_cofactor_impl(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<long>(pick), col);
      minor = m(row, col) * minor;
      if (sign < 0) minor = -minor;
      acc += minor;
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace

IntPoly det_cofactor(const PolyMatrix& m) {
  std::vector<Eigen::Index> cols(static_cast<size_t>(m.cols()));
  for (size_t j = 0; j < cols.size(); ++j) cols[j] = static_cast<Eigen::Index>(j);
  return det_cofactor_impl(m, cols, 0);
}

IntPoly det(const PolyMatrix& m, int size_limit) {
  if (m.rows() > size_limit) throw SizeLimitError("determinant size exceeds configured limit");
  try {
    return det_bareiss(m);
  } catch (const NotDivisibleError&) {
    return det_cofactor(m);
  }
}

IntPoly permanent(const PolyMatrix& m, int size_limit) {
  const int n = static_cast<int>(m.rows());
  if (n > size_limit || n >= 63)
    throw SizeLimitError("permanent size exceeds configured limit");
  if (n == 0) return IntPoly(1);
  std::vector<IntPoly> row_sums(static_cast<size_t>(n));
  IntPoly total;
  std::uint64_t prev_gray = 0;
  for (std::uint64_t s = 1; s < (1ULL << n); ++s) {
    const std::uint64_t gray = s ^ (s >> 1);
    const std::uint64_t changed = gray ^ prev_gray;
    int col = 0;
    while (!((changed >> col) & 1ULL)) ++col;
    if (gray & changed) {
      for (int i = 0; i < n; ++i) row_sums[static_cast<size_t>(i)] += m(i, col);
    } else {
      for (int i = 0; i < n; ++i) row_sums[static_cast<size_t>(i)] -= m(i, col);
    }
    IntPoly prod(1);
    for (int i = 0; i < n && !prod.is_zero(); ++i) prod *= row_sums[static_cast<size_t>(i)];
    const int popcount = __builtin_popcountll(gray);
    if ((n - popcount) % 2 == 0)
      total += prod;
    else
      total -= prod;
    prev_gray = gray;
  }
  return total;
}

PolyMatrix kronecker(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (Eigen::Index s = 0; s < b.rows(); ++s)
        for (Eigen::Index t = 0; t < b.cols(); ++t)
          c(i * b.rows() + s, j * b.cols() + t) = a(i, j) * b(s, t);
    }
  return c;
}

PolyMatrix relabel(const PolyMatrix& m, int n, int k, int r) {
  if (m.rows() != n || m.cols() != n) throw InvalidSpecError("matrix size differs from n");
  if (k < 1 || r < 1 || r > k) throw InvalidSpecError("relabel needs k >= 1 and 1 <= r <= k");
  if (n % k != 0 && r >= 2) throw InvalidSpecError("relabel with r >= 2 needs k | n");
  const std::vector<int> sigma = residue_classes(FamilySpec(n, k, r)).relabeling;
  PolyMatrix out(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      out(sigma[static_cast<size_t>(i) - 1] - 1, sigma[static_cast<size_t>(j) - 1] - 1) =
          m(i - 1, j - 1);
  return out;
}

IntPoly tridiag_det(const std::vector<IntPoly>& c, const std::vector<IntPoly>& a,
                    const std::vector<IntPoly>& b) {
  const size_t n = c.size();
  if (n == 0) return IntPoly(1);
  if (a.size() != n - 1 || b.size() != n - 1)
    throw LengthMismatchError("tridiagonal bands must have length n-1");
  IntPoly f_prev2(1);   // f_0
  IntPoly f_prev1 = c[0];  // f_1
  for (size_t i = 2; i <= n; ++i) {
    IntPoly f = c[i - 1] * f_prev1 - b[i - 2] * a[i - 2] * f_prev2;
    f_prev2 = std::move(f_prev1);
    f_prev1 = std::move(f);
  }
  return f_prev1;
}

}  // namespace modkalt
