#pragma once

#include <string>
#include <vector>

namespace lieosc {

enum class Family { A, B, C, D };

char family_letter(Family f);
/// Accepts "a".."d" in either case.
Family parse_family(const std::string& text);
/// Smallest rank for which the family is handled (A:1, B:2, C:2, D:3).
int min_rank(Family f);
/// Throws InvalidRank when the rank is below the family minimum.
void validate_rank(Family f, int rank);

using IntVector = std::vector<int>;

/// A positive root: multiset of simple-root indices (1-based, sorted) and its
/// coordinates in the orthonormal basis l_1, l_2, ...
struct Root {
  std::vector<int> label;
  IntVector vector;

  int height() const { return static_cast<int>(label.size()); }
  /// Label word, e.g. "11223"; dot-separated when any index exceeds 9.
  std::string label_string() const;
};

struct RootSystem {
  Family family;
  int rank;
  std::vector<IntVector> simple;
  /// Ordered by height, then lexicographically by label.
  std::vector<Root> positive;

  /// Index into `positive` of the root with this vector, or -1.
  int find(const IntVector& v) const;
  int find_label(const std::vector<int>& label) const;
};

std::vector<IntVector> simple_roots(Family family, int rank);
RootSystem positive_roots(Family family, int rank);
int algebra_dim(Family family, int rank);

/// Multiset union of two sorted labels.
std::vector<int> merge_labels(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace lieosc
