// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordcalc/term.hpp"

namespace ordcalc {

/// Cantor normal form of an ordinal below w^w: a sum of monomials
/// w^exponent * coefficient with strictly decreasing exponents.
class Cnf {
 public:
  struct Monomial {
    std::uint64_t exponent;
    std::uint64_t coefficient;
    auto operator<=>(const Monomial&) const = default;
  };

  Cnf() = default;
  explicit Cnf(std::vector<Monomial> monomials);

  static Cnf finite(std::uint64_t n);

  const std::vector<Monomial>& monomials() const { return monomials_; }
  bool is_zero() const { return monomials_.empty(); }

  /// Ordinal (left-absorbing) sum.
  friend Cnf operator+(const Cnf& a, const Cnf& b);
  /// this * w
  Cnf times_omega() const;

  friend bool operator==(const Cnf&, const Cnf&) = default;
  friend std::strong_ordering operator<=>(const Cnf& a, const Cnf& b);

  std::string to_string() const;

 private:
  std::vector<Monomial> monomials_;
};

/// The ordinal denoted by a well-ordered, w^w-free term; nullopt otherwise.
std::optional<Cnf> ordinal_cnf(const Term& t);

}  // namespace ordcalc
