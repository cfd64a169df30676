#pragma once

#include <cstdint>
#include <string>

#include "wscm/error.hpp"

namespace wscm {

/// Coefficient field for homology: the rationals or GF(p).
class FieldSpec {
 public:
  enum class Kind { kRationals, kPrime };

  static FieldSpec rationals() { return FieldSpec(Kind::kRationals, 0); }

  static FieldSpec prime(std::uint32_t p) {
    if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
    return FieldSpec(Kind::kPrime, p);
  }

  /// Accepts "q", "2", "3" or "p:<n>" with n prime.
  static FieldSpec parse(const std::string& text) {
    if (text == "q" || text == "Q") return rationals();
    if (text == "2") return prime(2);
    if (text == "3") return prime(3);
    if (text.rfind("p:", 0) == 0) {
      const auto digits = text.substr(2);
      if (digits.empty() || digits.size() > 9 || digits.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("bad field spec '" + text + "'");
      return prime(static_cast<std::uint32_t>(std::stoul(digits)));
    }
    throw InputError("bad field spec '" + text + "' (expected q, 2, 3 or p:<prime>)");
  }

  Kind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == Kind::kRationals; }
  std::uint32_t characteristic() const { return p_; }

  /// Round-trips through parse().
  std::string spec() const {
    if (is_rationals()) return "q";
    if (p_ == 2 || p_ == 3) return std::to_string(p_);
    return "p:" + std::to_string(p_);
  }

  std::string display() const { return is_rationals() ? "QQ" : "GF(" + std::to_string(p_) + ")"; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t k = 2; k * k <= n; ++k)
      if (n % k == 0) return false;
    return true;
  }

  Kind kind_;
  std::uint32_t p_;
};

}  // namespace wscm
