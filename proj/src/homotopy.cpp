#include "embedlie/homotopy.hpp"

#include <algorithm>
#include <numeric>

#include "embedlie/error.hpp"
#include "embedlie/root_system.hpp"

namespace embedlie {

WeylDegrees weyl_degrees(const SimpleType& type) {
  const int n = type.rank();
  std::vector<int> deg;
  switch (type.family()) {
    case Family::A:
      for (int i = 2; i <= n + 1; ++i) deg.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= n; ++i) deg.push_back(2 * i);
      break;
    case Family::D:
      for (int i = 1; i <= n - 1; ++i) deg.push_back(2 * i);
      deg.push_back(n);
      break;
    case Family::E:
      if (n == 6) deg = {2, 5, 6, 8, 9, 12};
      if (n == 7) deg = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) deg = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Family::F: deg = {2, 6, 8, 12}; break;
    case Family::G: deg = {2, 6}; break;
  }
  std::sort(deg.begin(), deg.end());
  return {deg};
}

HomotopyType rational_homotopy_type(const SimpleType& type) {
  HomotopyType h;
  for (int d : weyl_degrees(type).degrees) h.entries.push_back(2 * d - 1);
  std::sort(h.entries.begin(), h.entries.end());

  if (static_cast<int>(h.entries.size()) != type.rank()) {
    throw ConsistencyError("wrong number of Weyl degrees for " + type.name());
  }
  for (int e : h.entries) {
    if (e < 3 || e % 2 == 0) throw ConsistencyError("malformed homotopy entry for " + type.name());
  }
  const std::int64_t sum = std::accumulate(h.entries.begin(), h.entries.end(), std::int64_t{0});
  if (sum != closed_form_dimension(type)) {
    throw ConsistencyError("homotopy entries of " + type.name() + " sum to " +
                           std::to_string(sum) + ", not dim G");
  }
  return h;
}

std::string format_homotopy(const HomotopyType& h) {
  std::string out = "{";
  for (std::size_t i = 0; i < h.entries.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(h.entries[i]);
  }
  return out + "}";
}

std::vector<std::pair<SimpleType, SimpleType>> coincidence_audit(int max_rank) {
  if (max_rank < 4) throw InvalidInput("coincidence audit needs max_rank >= 4");
  auto types = all_types(max_rank);
  std::sort(types.begin(), types.end());
  std::vector<HomotopyType> homotopy;
  for (const auto& t : types) homotopy.push_back(rational_homotopy_type(t));

  std::vector<std::pair<SimpleType, SimpleType>> out;
  for (std::size_t i = 0; i < types.size(); ++i) {
    for (std::size_t j = i + 1; j < types.size(); ++j) {
      if (homotopy[i] == homotopy[j]) out.emplace_back(types[i], types[j]);
    }
  }
  return out;
}

bool pi3_audit(const SimpleType& type) {
  const auto h = rational_homotopy_type(type);
  return std::count(h.entries.begin(), h.entries.end(), 3) == 1;
}

}  // namespace embedlie
