#include "embedlie/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>
#include <string>

#include "embedlie/error.hpp"

namespace embedlie {

std::vector<std::vector<int>> IntMatrix::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out[static_cast<std::size_t>(i)].push_back((*this)(i, j));
  }
  return out;
}

int Root::height() const noexcept { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

bool Root::positive() const noexcept {
  bool any = false;
  for (int c : coeffs) {
    if (c < 0) return false;
    any = any || c > 0;
  }
  return any;
}

bool canonical_less(const Root& a, const Root& b) noexcept {
  const int ha = a.height();
  const int hb = b.height();
  if (ha != hb) return ha < hb;
  return a.coeffs < b.coeffs;
}

std::vector<std::pair<int, int>> dynkin_edges(const SimpleType& type) {
  const int n = type.rank();
  std::vector<std::pair<int, int>> edges;
  switch (type.family()) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::F:
    case Family::G:
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(n - 3, n - 1);
      break;
    case Family::E:
      // 1-3-4-5-6(-7(-8)) with 2 attached to 4.
      edges.emplace_back(0, 2);
      edges.emplace_back(1, 3);
      for (int i = 2; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<int> simple_root_lengths(const SimpleType& type) {
  const int n = type.rank();
  std::vector<int> len(static_cast<std::size_t>(n), 2);
  switch (type.family()) {
    case Family::B:
      std::fill(len.begin(), len.end() - 1, 4);
      break;
    case Family::C:
      len.back() = 4;
      break;
    case Family::F:
      len[0] = len[1] = 4;
      break;
    case Family::G:
      len[1] = 6;
      break;
    default:
      break;
  }
  return len;
}

IntMatrix cartan_matrix(const SimpleType& type) {
  const int n = type.rank();
  const auto len = simple_root_lengths(type);
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 2;
  for (auto [i, j] : dynkin_edges(type)) {
    // Adjacent simple roots: (alpha_i, alpha_j) = -max(|alpha_i|^2, |alpha_j|^2)/2.
    const int ip = -std::max(len[static_cast<std::size_t>(i)], len[static_cast<std::size_t>(j)]);
    m(i, j) = ip / len[static_cast<std::size_t>(j)];
    m(j, i) = ip / len[static_cast<std::size_t>(i)];
  }
  return m;
}

namespace {

struct CoeffHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int c : v) h = (h ^ static_cast<std::size_t>(c)) * 1099511628211ULL;
    return h;
  }
};

std::vector<Root> enumerate(const IntMatrix& cartan) {
  const int n = cartan.size();
  // Column i of the Cartan matrix as (j, C(j,i)) pairs, zeros dropped, so
  // <beta, alpha_i^vee> = sum_j c_j C(j,i) costs O(degree).
  std::vector<std::vector<std::pair<int, int>>> column(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (cartan(j, i) != 0) column[static_cast<std::size_t>(i)].emplace_back(j, cartan(j, i));
    }
  }

  std::unordered_set<std::vector<int>, CoeffHash> known;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    known.insert(e);
    layer.push_back(std::move(e));
  }
  while (!layer.empty()) {
    std::set<std::vector<int>> next;
    for (auto& beta : layer) {
      for (int i = 0; i < n; ++i) {
        auto& ci = beta[static_cast<std::size_t>(i)];
        // p = length of the alpha_i-string below beta.
        int p = 0;
        const int saved = ci;
        while (true) {
          --ci;
          if (!known.count(beta)) break;
          ++p;
        }
        ci = saved;
        int pairing = 0;
        for (auto [j, c] : column[static_cast<std::size_t>(i)]) {
          pairing += beta[static_cast<std::size_t>(j)] * c;
        }
        if (p - pairing > 0) {
          ++ci;
          next.insert(beta);
          ci = saved;
        }
      }
    }
    layer.assign(next.begin(), next.end());
    known.insert(layer.begin(), layer.end());
  }
  std::vector<Root> out;
  out.reserve(known.size());
  for (const auto& c : known) out.push_back(Root{c});
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

void check_cartan(const IntMatrix& m, const SimpleType& type) {
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      const int v = m(i, j);
      const bool ok = i == j ? v == 2 : (v <= 0 && v >= -3 && ((v == 0) == (m(j, i) == 0)));
      if (!ok) throw ConsistencyError("malformed Cartan matrix for " + type.name());
    }
  }
}

}  // namespace

std::vector<Root> positive_roots(const SimpleType& type) { return enumerate(cartan_matrix(type)); }

RootSystem::RootSystem(const SimpleType& type)
    : type_(type), cartan_(cartan_matrix(type)), roots_(enumerate(cartan_)) {
  check_cartan(cartan_, type_);
  const auto expected = (closed_form_dimension(type_) - type_.rank()) / 2;
  if (static_cast<std::int64_t>(roots_.size()) != expected) {
    throw ConsistencyError("root enumeration for " + type_.name() + " produced " +
                           std::to_string(roots_.size()) + " positive roots, expected " +
                           std::to_string(expected));
  }
  int simple = 0;
  for (const auto& r : roots_) {
    if (!r.positive()) throw ConsistencyError("non-positive root enumerated for " + type_.name());
    if (r.height() == 1) ++simple;
  }
  if (simple != type_.rank()) throw ConsistencyError("simple roots missing for " + type_.name());
}

std::int64_t closed_form_dimension(const SimpleType& type) noexcept {
  const std::int64_t n = type.rank();
  switch (type.family()) {
    case Family::A: return n * n + 2 * n;
    case Family::B:
    case Family::C: return 2 * n * n + n;
    case Family::D: return 2 * n * n - n;
    case Family::E: return n == 6 ? 78 : n == 7 ? 133 : 248;
    case Family::F: return 52;
    case Family::G: return 14;
  }
  return 0;
}

GroupDims dimension(const RootSystem& system) {
  const auto& type = system.type();
  const std::int64_t by_roots =
      type.rank() + 2 * static_cast<std::int64_t>(system.positive_roots().size());
  const std::int64_t by_formula = closed_form_dimension(type);
  if (by_roots != by_formula) {
    throw ConsistencyError("dimension mismatch for " + type.name() + ": closed form " +
                           std::to_string(by_formula) + ", root count " +
                           std::to_string(by_roots));
  }
  return {by_formula, type.rank()};
}

GroupDims dimension(const SimpleType& type) {
  // Compare against a raw enumeration so the RootSystem constructor's own
  // count check cannot mask a mismatch.
  const auto roots = positive_roots(type);
  const std::int64_t by_roots = type.rank() + 2 * static_cast<std::int64_t>(roots.size());
  const std::int64_t by_formula = closed_form_dimension(type);
  if (by_roots != by_formula) {
    throw ConsistencyError("dimension mismatch for " + type.name() + ": closed form " +
                           std::to_string(by_formula) + ", root count " +
                           std::to_string(by_roots));
  }
  return {by_formula, type.rank()};
}

}  // namespace embedlie
