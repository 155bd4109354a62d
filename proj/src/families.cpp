#include "modkalt/families.hpp"

#include <algorithm>

#include "modkalt/errors.hpp"

namespace modkalt {

FamilySpec::FamilySpec(int n_, int k_, int r_, bool derangement_)
    : n(n_), k(k_), r(r_), derangement(derangement_) {
  if (n < 1) throw InvalidSpecError("family size n must be positive");
  if (k < 1) throw InvalidSpecError("modulus k must be positive");
  if (r < 1 || r > k) throw InvalidSpecError("remainder r must lie in 1..k");
}

bool is_member(const Perm& p, const FamilySpec& spec) {
  if (p.size() != spec.n) throw SizeMismatchError("permutation size differs from spec.n");
  for (int i = 1; i <= spec.n; ++i) {
    // pi_i - i = r - 1 (mod k), computed with a non-negative remainder
    int diff = p.at(i) - i - (spec.r - 1);
    if (((diff % spec.k) + spec.k) % spec.k != 0) return false;
  }
  if (spec.derangement && !is_derangement(p)) return false;
  return true;
}

namespace {

// The proofs' index maps. For k | n (Case 2): class b != 0 goes to slots
// a+1+m(b-1), class 0 to a+m(k-1). Otherwise (Case 1, n = mk+j with
// 1 <= j <= k-1): classes 1..j go to a+1+(b-1)(m+1), classes j+1..k-1 to
// j(m+1)+a+1+(b-j-1)m, and class 0 to n-(m-a).
std::vector<int> relabeling_map(int n, int k) {
  const int m = n / k;
  const int j = n % k;
  std::vector<int> sigma(static_cast<size_t>(n));
  for (int q = 1; q <= n; ++q) {
    const int a = q / k;
    const int b = q % k;
    int target;
    if (j == 0) {
      target = (b != 0) ? a + 1 + m * (b - 1) : a + m * (k - 1);
    } else if (b >= 1 && b <= j) {
      target = a + 1 + (b - 1) * (m + 1);
    } else if (b > j) {
      target = j * (m + 1) + a + 1 + (b - j - 1) * m;
    } else {  // b == 0
      target = n - (m - a);
    }
    sigma[static_cast<size_t>(q) - 1] = target;
  }
  return sigma;
}

}  // namespace

ResidueClasses residue_classes(const FamilySpec& spec) {
  ResidueClasses rc;
  rc.n = spec.n;
  rc.k = spec.k;
  rc.r = spec.r;
  rc.position_classes.assign(static_cast<size_t>(spec.k), {});
  rc.value_classes.assign(static_cast<size_t>(spec.k), {});
  for (int i = 1; i <= spec.n; ++i)
    rc.position_classes[static_cast<size_t>(i % spec.k)].push_back(i);
  for (int b = 0; b < spec.k; ++b) {
    const int shifted = (b + spec.r - 1) % spec.k;
    for (int v = 1; v <= spec.n; ++v)
      if (v % spec.k == shifted) rc.value_classes[static_cast<size_t>(b)].push_back(v);
  }
  rc.size_compatible = true;
  for (int b = 0; b < spec.k; ++b)
    if (rc.position_classes[static_cast<size_t>(b)].size() !=
        rc.value_classes[static_cast<size_t>(b)].size())
      rc.size_compatible = false;
  rc.relabeling = relabeling_map(spec.n, spec.k);
  return rc;
}

namespace {

struct Enumerator {
  const FamilySpec& spec;
  const std::function<void(const Perm&)>& visit;
  std::vector<const std::vector<int>*> values_for_position;  // by position, 1-based
  std::vector<bool> used;                                    // by value, 1-based
  std::vector<int> word;

  void run() {
    const ResidueClasses rc = residue_classes(spec);
    if (!rc.size_compatible) return;
    values_for_position.assign(static_cast<size_t>(spec.n) + 1, nullptr);
    for (int i = 1; i <= spec.n; ++i)
      values_for_position[static_cast<size_t>(i)] =
          &rc.value_classes[static_cast<size_t>(i % spec.k)];
    used.assign(static_cast<size_t>(spec.n) + 1, false);
    word.assign(static_cast<size_t>(spec.n), 0);
    extend(1);
  }

  // Ascending candidate order at each position gives lexicographic output.
  void extend(int pos) {
    if (pos > spec.n) {
      visit(Perm(word));
      return;
    }
    for (int v : *values_for_position[static_cast<size_t>(pos)]) {
      if (used[static_cast<size_t>(v)]) continue;
      if (spec.derangement && v == pos) continue;
      used[static_cast<size_t>(v)] = true;
      word[static_cast<size_t>(pos) - 1] = v;
      extend(pos + 1);
      used[static_cast<size_t>(v)] = false;
    }
  }
};

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt big_pow(const BigInt& base, int e) {
  BigInt acc = 1;
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

}  // namespace

void for_each_member(const FamilySpec& spec, const std::function<void(const Perm&)>& visit) {
  Enumerator{spec, visit, {}, {}, {}}.run();
}

std::vector<Perm> enumerate_family(const FamilySpec& spec) {
  std::vector<Perm> out;
  for_each_member(spec, [&](const Perm& p) { out.push_back(p); });
  return out;
}

BigInt family_count_bound(const FamilySpec& spec) {
  const int m = spec.n / spec.k;
  const int j = spec.n % spec.k;
  if (spec.r == 1) return big_pow(factorial(m + 1), j) * big_pow(factorial(m), spec.k - j);
  if (j != 0) return 0;  // empty unless r = 1 or k | n
  return big_pow(factorial(m), spec.k);
}

BigInt family_count(const FamilySpec& spec) {
  if (!spec.derangement) return family_count_bound(spec);
  BigInt count = 0;
  for_each_member(spec, [&](const Perm&) { ++count; });
  return count;
}

}  // namespace modkalt
