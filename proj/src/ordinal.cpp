// SPDX-License-Identifier: Apache-2.0

#include "ordcalc/ordinal.hpp"

#include <stdexcept>

namespace ordcalc {

Cnf::Cnf(std::vector<Monomial> monomials) : monomials_(std::move(monomials)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    if (monomials_[i].coefficient == 0) throw std::invalid_argument("zero CNF coefficient");
    if (i && monomials_[i - 1].exponent <= monomials_[i].exponent)
      throw std::invalid_argument("CNF exponents must strictly decrease");
  }
}

Cnf Cnf::finite(std::uint64_t n) {
  if (n == 0) return {};
  return Cnf({{0, n}});
}

Cnf operator+(const Cnf& a, const Cnf& b) {
  if (b.is_zero()) return a;
  const auto lead = b.monomials_.front();
  std::vector<Cnf::Monomial> out;
  for (const auto& m : a.monomials_) {
    if (m.exponent > lead.exponent) out.push_back(m);
    else if (m.exponent == lead.exponent) out.push_back({m.exponent, m.coefficient + lead.coefficient});
  }
  if (out.empty() || out.back().exponent != lead.exponent) out.push_back(lead);
  out.insert(out.end(), b.monomials_.begin() + 1, b.monomials_.end());
  return Cnf(std::move(out));
}

Cnf Cnf::times_omega() const {
  if (is_zero()) return {};
  return Cnf({{monomials_.front().exponent + 1, 1}});
}

std::strong_ordering operator<=>(const Cnf& a, const Cnf& b) {
  return std::lexicographical_compare_three_way(a.monomials_.begin(), a.monomials_.end(),
                                                b.monomials_.begin(), b.monomials_.end());
}

std::string Cnf::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& m : monomials_) {
    if (!out.empty()) out += " + ";
    if (m.exponent == 0) {
      out += std::to_string(m.coefficient);
      continue;
    }
    out += m.exponent == 1 ? "w" : "w^" + std::to_string(m.exponent);
    if (m.coefficient > 1) out += "." + std::to_string(m.coefficient);
  }
  return out;
}

namespace {

Cnf value(const Term& t) {
  switch (t.kind()) {
    case Kind::Zero:
    case Kind::One:
    case Kind::Fin: return Cnf::finite(t.count());
    case Kind::Sum: {
      Cnf acc;
      for (const auto& p : t.children()) acc = acc + value(p);
      return acc;
    }
    case Kind::Periodic: {
      Cnf block;
      for (const auto& p : t.children()) block = block + value(p);
      return block.times_omega();
    }
    default: throw std::logic_error("not an ordinal term");
  }
}

}  // namespace

std::optional<Cnf> ordinal_cnf(const Term& t) {
  Term n = normalize(t);
  if (!well_ordered(n) || contains_wpow(n)) return std::nullopt;
  return value(n);
}

}  // namespace ordcalc
