#include "embedlie/group_expr.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "embedlie/root_system.hpp"

namespace embedlie {

GroupExpr::GroupExpr(std::vector<Factor> factors, std::int64_t affine_dim)
    : affine_dim_(affine_dim) {
  if (affine_dim < 0) throw InvalidInput("affine dimension must be non-negative");
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.type < b.type; });
  for (const auto& f : factors) {
    if (f.multiplicity < 1) throw InvalidInput("multiplicity must be at least 1");
    if (!factors_.empty() && factors_.back().type == f.type) {
      factors_.back().multiplicity += f.multiplicity;
    } else {
      factors_.push_back(f);
    }
  }
  if (factors_.empty() && affine_dim_ < 1) {
    throw InvalidInput("group expression is trivial: need a simple factor or Aff k with k >= 1");
  }
}

std::int64_t GroupExpr::simple_count() const noexcept {
  std::int64_t r = 0;
  for (const auto& f : factors_) r += f.multiplicity;
  return r;
}

std::int64_t GroupExpr::semisimple_dim() const noexcept {
  std::int64_t d = 0;
  for (const auto& f : factors_) d += f.multiplicity * closed_form_dimension(f.type);
  return d;
}

bool GroupExpr::is_simple_times_affine() const noexcept {
  return factors_.size() == 1 && factors_.front().multiplicity == 1;
}

bool GroupExpr::is_sl2_power_times_affine() const noexcept {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const Factor& f) { return f.type == SimpleType{Family::A, 1}; });
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : InvalidInput(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

// Values larger than this are rejected so dimensions stay far from overflow.
constexpr std::int64_t kMaxInt = 1'000'000;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupExpr parse() {
    std::vector<Factor> factors;
    std::int64_t affine = 0;
    bool seen_affine = false;
    while (true) {
      skip_ws();
      const std::size_t term_start = pos_;
      if (lookahead_affine()) {
        if (seen_affine) throw ParseError("more than one Aff term", term_start);
        pos_ += 3;
        affine = integer("affine dimension");
        seen_affine = true;
      } else {
        factors.push_back(factor());
      }
      skip_ws();
      if (pos_ == text_.size()) break;
      if (text_[pos_] != 'x') throw ParseError("expected 'x' between terms", pos_);
      ++pos_;
    }
    if (factors.empty() && affine < 1) {
      throw ParseError("expression has no simple factor and no positive Aff term", 0);
    }
    return GroupExpr(std::move(factors), affine);
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool lookahead_affine() const { return text_.substr(pos_, 3) == "Aff"; }

  std::int64_t integer(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    std::int64_t v = 0;
    bool any = false;
    while (true) {
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = v * 10 + (text_[pos_] - '0');
        if (v > kMaxInt) throw ParseError(std::string(what) + " too large", start);
        any = true;
        ++pos_;
        continue;
      }
      // Whitespace inside a number is ignored, but only if a digit follows.
      std::size_t probe = pos_;
      while (probe < text_.size() && std::isspace(static_cast<unsigned char>(text_[probe]))) {
        ++probe;
      }
      if (any && probe > pos_ && probe < text_.size() &&
          std::isdigit(static_cast<unsigned char>(text_[probe]))) {
        pos_ = probe;
        continue;
      }
      break;
    }
    if (!any) throw ParseError(std::string("expected ") + what, start);
    return v;
  }

  Factor factor() {
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) throw ParseError("expected Lie type", start);
    const auto family = family_from_char(text_[pos_]);
    if (!family) throw ParseError("expected Lie type letter A-G or Aff", start);
    ++pos_;
    const auto rank = integer("rank");
    if (!SimpleType::valid(*family, static_cast<int>(rank))) {
      throw ParseError("invalid rank " + std::to_string(rank) + " for type " +
                           std::string(1, static_cast<char>(*family)),
                       start);
    }
    int multiplicity = 1;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      const std::size_t at = pos_;
      const auto m = integer("multiplicity");
      if (m < 1) throw ParseError("multiplicity must be at least 1", at);
      multiplicity = static_cast<int>(m);
    }
    return Factor{SimpleType(*family, static_cast<int>(rank)), multiplicity};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string format_expr(const GroupExpr& expr) {
  std::string out;
  for (const auto& f : expr.factors()) {
    if (!out.empty()) out += " x ";
    out += f.type.name();
    if (f.multiplicity != 1) out += "^" + std::to_string(f.multiplicity);
  }
  if (expr.affine_dim() > 0) {
    if (!out.empty()) out += " x ";
    out += "Aff" + std::to_string(expr.affine_dim());
  }
  return out;
}

}  // namespace embedlie
