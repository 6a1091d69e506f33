#include "embedlie/simple_type.hpp"

#include <charconv>

#include "embedlie/error.hpp"

namespace embedlie {

bool SimpleType::valid(Family family, int rank) noexcept {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 3;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

SimpleType::SimpleType(Family family, int rank) : family_(family), rank_(rank) {
  if (!valid(family, rank)) {
    throw InvalidInput("invalid rank " + std::to_string(rank) + " for type " +
                       std::string(1, static_cast<char>(family)));
  }
}

SimpleType SimpleType::parse(std::string_view text) {
  if (text.size() < 2) throw InvalidInput("malformed Lie type '" + std::string(text) + "'");
  auto family = family_from_char(text.front());
  if (!family) throw InvalidInput("unknown Lie family in '" + std::string(text) + "'");
  int rank = 0;
  auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw InvalidInput("malformed rank in '" + std::string(text) + "'");
  }
  return SimpleType(*family, rank);
}

bool SimpleType::classical() const noexcept {
  return family_ == Family::A || family_ == Family::B || family_ == Family::C ||
         family_ == Family::D;
}

std::string SimpleType::name() const {
  return std::string(1, static_cast<char>(family_)) + std::to_string(rank_);
}

std::optional<Family> family_from_char(char c) noexcept {
  if (c < 'A' || c > 'G') return std::nullopt;
  return static_cast<Family>(c);
}

std::vector<SimpleType> exceptional_types() {
  return {{Family::E, 6}, {Family::E, 7}, {Family::E, 8}, {Family::F, 4}, {Family::G, 2}};
}

std::vector<SimpleType> all_types(int max_classical_rank, bool with_exceptional) {
  std::vector<SimpleType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    for (int n = 1; n <= max_classical_rank; ++n) {
      if (SimpleType::valid(f, n)) out.emplace_back(f, n);
    }
  }
  if (with_exceptional) {
    for (const auto& t : exceptional_types()) out.push_back(t);
  }
  return out;
}

}  // namespace embedlie
