// Brute-force reference computations for tests. Everything here is kept
// deliberately naive and independent of the library's production paths.
#ifndef MODKALT_TESTS_ORACLES_HPP
#define MODKALT_TESTS_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "modkalt/perm.hpp"
#include "modkalt/poly.hpp"
#include "modkalt/polymat.hpp"

namespace modkalt::testing {

// O(n^2) pair scan.
inline long long inv_pair_scan(const Perm& p) {
  long long count = 0;
  for (int i = 1; i <= p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j)
      if (p.at(i) > p.at(j)) ++count;
  return count;
}

// Visits all of S_n in lexicographic order.
inline void for_each_perm(int n, const std::function<void(const Perm&)>& visit) {
  std::vector<int> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    visit(Perm(word));
  } while (std::next_permutation(word.begin(), word.end()));
}

// Sum of weight(p) * t^stat(p) over all of S_n.
inline IntPoly sum_over_sn(int n, const std::function<int(const Perm&)>& stat,
                           const std::function<BigInt(const Perm&)>& weight) {
  std::vector<BigInt> coeffs(static_cast<size_t>(n) + 1, 0);
  for_each_perm(n, [&](const Perm& p) { coeffs[static_cast<size_t>(stat(p))] += weight(p); });
  return IntPoly::from_coeffs(std::move(coeffs));
}

// Permanent straight from the defining n! sum.
inline IntPoly permanent_naive(const PolyMatrix& m) {
  const int n = static_cast<int>(m.rows());
  if (n == 0) return IntPoly(1);
  IntPoly total;
  for_each_perm(n, [&](const Perm& p) {
    IntPoly prod(1);
    for (int i = 1; i <= n && !prod.is_zero(); ++i) prod *= m(i - 1, p.at(i) - 1);
    total += prod;
  });
  return total;
}

inline IntPoly random_poly(std::mt19937& rng, int max_degree, int coeff_bound) {
  std::uniform_int_distribution<int> deg_dist(0, max_degree);
  std::uniform_int_distribution<int> coeff_dist(-coeff_bound, coeff_bound);
  const int degree = deg_dist(rng);
  std::vector<BigInt> coeffs(static_cast<size_t>(degree) + 1);
  for (auto& c : coeffs) c = coeff_dist(rng);
  return IntPoly::from_coeffs(std::move(coeffs));
}

inline PolyMatrix random_poly_matrix(std::mt19937& rng, int size, int max_degree,
                                     int coeff_bound) {
  PolyMatrix m(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) m(i, j) = random_poly(rng, max_degree, coeff_bound);
  return m;
}

inline PolyMatrix poly_identity(int n) {
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = IntPoly(1);
  return m;
}

inline PolyMatrix block_diag(const std::vector<PolyMatrix>& blocks) {
  Eigen::Index total = 0;
  for (const auto& b : blocks) total += b.rows();
  PolyMatrix out(total, total);
  Eigen::Index offset = 0;
  for (const auto& b : blocks) {
    for (Eigen::Index i = 0; i < b.rows(); ++i)
      for (Eigen::Index j = 0; j < b.cols(); ++j) out(offset + i, offset + j) = b(i, j);
    offset += b.rows();
  }
  return out;
}

// The block shape relabel() must produce for the family and derangement
// matrices: plain diagonal copies when r = 1, and the cyclically shifted
// block pattern when r >= 2 (which requires k | n).
inline PolyMatrix expected_relabeled(int n, int k, int r, bool derangement) {
  const int m = n / k, j = n % k;
  auto plain = [&](int size) {
    return derangement ? derangement_block(size) : eulerian_matrix(size);
  };
  if (j != 0) {  // j copies of the (m+1)-block, then k-j copies of the m-block
    std::vector<PolyMatrix> blocks;
    for (int c = 0; c < j; ++c) blocks.push_back(plain(m + 1));
    if (m >= 1)
      for (int c = 0; c < k - j; ++c) blocks.push_back(plain(m));
    return block_diag(blocks);
  }
  if (r == 1) return block_diag(std::vector<PolyMatrix>(static_cast<size_t>(k), plain(m)));
  PolyMatrix out(n, n);
  const PolyMatrix a = eulerian_matrix(m);
  const PolyMatrix b = eulerian_matrix_shifted(m);
  for (int g = 1; g <= k; ++g) {
    const bool wrapped = g >= k - r + 2;
    const int target = wrapped ? g + r - 1 - k : g + r - 1;
    const PolyMatrix& block = wrapped ? a : b;
    for (int i = 0; i < m; ++i)
      for (int jj = 0; jj < m; ++jj)
        out((g - 1) * m + i, (target - 1) * m + jj) = block(i, jj);
  }
  return out;
}

}  // namespace modkalt::testing

#endif  // MODKALT_TESTS_ORACLES_HPP
