#include "lieosc/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "lieosc/error.hpp"

namespace lieosc {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

Family parse_family(const std::string& text) {
  if (text.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
      case 'A': return Family::A;
      case 'B': return Family::B;
      case 'C': return Family::C;
      case 'D': return Family::D;
      default: break;
    }
  }
  fail(ErrorCode::InvalidArgument, "unknown family '" + text + "' (expected a, b, c or d)");
}

int min_rank(Family f) {
  switch (f) {
    case Family::A: return 1;
    case Family::B: return 2;
    case Family::C: return 2;
    case Family::D: return 3;
  }
  return 1;
}

void validate_rank(Family f, int rank) {
  if (rank < min_rank(f))
    fail(ErrorCode::InvalidRank, std::string("rank ") + std::to_string(rank) + " is below the minimum " +
                                     std::to_string(min_rank(f)) + " for family " + family_letter(f));
}

std::string Root::label_string() const {
  bool wide = std::any_of(label.begin(), label.end(), [](int i) { return i > 9; });
  std::string s;
  for (std::size_t k = 0; k < label.size(); ++k) {
    if (wide && k) s += '.';
    s += std::to_string(label[k]);
  }
  return s;
}

int RootSystem::find(const IntVector& v) const {
  for (std::size_t i = 0; i < positive.size(); ++i)
    if (positive[i].vector == v) return static_cast<int>(i);
  return -1;
}

int RootSystem::find_label(const std::vector<int>& label) const {
  for (std::size_t i = 0; i < positive.size(); ++i)
    if (positive[i].label == label) return static_cast<int>(i);
  return -1;
}

std::vector<int> merge_labels(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

namespace {

std::size_t coord_dim(Family f, int n) { return f == Family::A ? static_cast<std::size_t>(n) + 1 : static_cast<std::size_t>(n); }

IntVector basis_vector(std::size_t dim, std::size_t i, int s = 1) {
  IntVector v(dim, 0);
  v[i] = s;
  return v;
}

// The positive roots as coordinate vectors, from the classical descriptions.
std::set<IntVector> positive_vectors(Family f, int n) {
  std::size_t dim = coord_dim(f, n);
  std::set<IntVector> out;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      IntVector minus(dim, 0);
      minus[i] = 1;
      minus[j] = -1;
      out.insert(minus);
      if (f != Family::A) {
        IntVector plus(dim, 0);
        plus[i] = 1;
        plus[j] = 1;
        out.insert(plus);
      }
    }
    if (f == Family::B) out.insert(basis_vector(dim, i));
    if (f == Family::C) out.insert(basis_vector(dim, i, 2));
  }
  return out;
}

}  // namespace

std::vector<IntVector> simple_roots(Family family, int rank) {
  validate_rank(family, rank);
  const int n = rank;
  std::size_t dim = coord_dim(family, n);
  std::vector<IntVector> simple;
  int chain = family == Family::A ? n : n - 1;
  for (int i = 0; i < chain; ++i) {
    IntVector v(dim, 0);
    v[i] = 1;
    v[i + 1] = -1;
    simple.push_back(v);
  }
  switch (family) {
    case Family::A: break;
    case Family::B: simple.push_back(basis_vector(dim, n - 1)); break;
    case Family::C: simple.push_back(basis_vector(dim, n - 1, 2)); break;
    case Family::D: {
      IntVector v(dim, 0);
      v[n - 2] = 1;
      v[n - 1] = 1;
      simple.push_back(v);
      break;
    }
  }
  return simple;
}

RootSystem positive_roots(Family family, int rank) {
  RootSystem rs{family, rank, simple_roots(family, rank), {}};
  const auto targets = positive_vectors(family, rank);

  // Grow from the simple roots by adding one simple root at a time; every
  // positive root is reached this way and its label records the additions.
  std::map<IntVector, std::vector<int>> found;
  std::vector<IntVector> frontier;
  for (int i = 0; i < rank; ++i) {
    found[rs.simple[i]] = {i + 1};
    frontier.push_back(rs.simple[i]);
  }
  while (!frontier.empty()) {
    std::vector<IntVector> next;
    for (const auto& v : frontier) {
      for (int i = 0; i < rank; ++i) {
        IntVector w = v;
        for (std::size_t k = 0; k < w.size(); ++k) w[k] += rs.simple[i][k];
        if (!targets.count(w) || found.count(w)) continue;
        found[w] = merge_labels(found[v], {i + 1});
        next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  if (found.size() != targets.size())
    fail(ErrorCode::Consistency, "root generation did not reach every positive root");

  for (auto& [vec, label] : found) rs.positive.push_back({label, vec});
  std::sort(rs.positive.begin(), rs.positive.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.label < b.label;
  });
  return rs;
}

int algebra_dim(Family family, int rank) {
  validate_rank(family, rank);
  const int n = rank;
  switch (family) {
    case Family::A: return n * (n + 2);
    case Family::B: return n * (2 * n + 1);
    case Family::C: return n * (2 * n + 1);
    case Family::D: return n * (2 * n - 1);
  }
  return 0;
}

}  // namespace lieosc
