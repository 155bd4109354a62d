#ifndef MODKALT_FAMILIES_HPP
#define MODKALT_FAMILIES_HPP

#include <functional>
#include <vector>

#include "modkalt/perm.hpp"
#include "modkalt/poly.hpp"

namespace modkalt {

/// Names a family of mod-k-alternating permutations: all pi in S_n with
/// pi_i - i = r - 1 (mod k), optionally restricted to derangements.
struct FamilySpec {
  int n = 1;
  int k = 1;
  int r = 1;
  bool derangement = false;

  FamilySpec(int n_, int k_, int r_, bool derangement_ = false);
};

/// The residue-class block structure of a family.
///
/// position_classes[b] lists positions congruent to b (mod k), ascending,
/// for b = 0..k-1. value_classes[b] lists the values those positions may
/// take, i.e. the values congruent to b + r - 1 (mod k). The family is
/// nonempty iff each pair has equal size.
struct ResidueClasses {
  int n = 0;
  int k = 0;
  int r = 0;
  std::vector<std::vector<int>> position_classes;
  std::vector<std::vector<int>> value_classes;
  bool size_compatible = false;

  /// Simultaneous row/column relabeling that block-diagonalizes the
  /// family matrix: relabeling[q-1] is the new index of old index q.
  /// Depends only on (n, k).
  std::vector<int> relabeling;
};

/// True iff p lies in the family named by spec.
bool is_member(const Perm& p, const FamilySpec& spec);

ResidueClasses residue_classes(const FamilySpec& spec);

/// Visits every member exactly once, in lexicographic one-line order.
/// Members are produced by composing bijections between matched residue
/// classes, so the cost is proportional to the family size, not n!.
void for_each_member(const FamilySpec& spec, const std::function<void(const Perm&)>& visit);

/// Materialized enumeration, lexicographic order.
std::vector<Perm> enumerate_family(const FamilySpec& spec);

/// |family|. Closed product of factorials where available; derangement
/// families are counted by enumeration.
BigInt family_count(const FamilySpec& spec);

/// Cheap upper bound used for budget checks: the count of the family
/// with the derangement restriction dropped.
BigInt family_count_bound(const FamilySpec& spec);

}  // namespace modkalt

#endif  // MODKALT_FAMILIES_HPP
