// frobenius.hpp -- the classical (integer) Frobenius problem

#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace shufrob {

/// Non-empty sorted multiset of positive integers.
class Moduli {
 public:
  /// Sorts the values. Throws FormatError if empty, DomainError if any is < 1.
  explicit Moduli(std::vector<std::int64_t> values);
  Moduli(std::initializer_list<std::int64_t> values) : Moduli(std::vector<std::int64_t>(values)) {}

  const std::vector<std::int64_t>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::int64_t smallest() const noexcept { return values_.front(); }
  std::int64_t largest() const noexcept { return values_.back(); }
  std::int64_t gcd() const noexcept;

 private:
  std::vector<std::int64_t> values_;
};

/// Largest smallest modulus accepted by the residue-class computations.
inline constexpr std::int64_t kMaxResidueModulus = 1'000'000;

/// Smallest representable number in each residue class modulo the smallest
/// modulus (the Apery set). Unreachable classes hold -1.
std::vector<std::int64_t> apery_set(const Moduli& ms);

/// Largest integer that is not a non-negative combination of ms.
/// Returns -1 when 1 is among the moduli. Throws DomainError when the gcd
/// exceeds 1.
std::int64_t frobenius_number(const Moduli& ms);

/// m1*m2 - m1 - m2, for coprime m1, m2 >= 2.
std::int64_t sylvester(std::int64_t m1, std::int64_t m2);

/// Upper bound m_1*m_k - m_1 - m_k (smallest and largest modulus).
std::int64_t schur_bound(const Moduli& ms);

bool representable(std::int64_t n, const Moduli& ms);

/// Coefficients c (aligned with ms.values()) with sum c_i*m_i == n. Among
/// all solutions returns the one that is lexicographically smallest when the
/// coefficients are read from the largest modulus down, i.e. large moduli
/// are used as sparingly as possible. Throws DomainError if n is not
/// representable.
std::vector<std::int64_t> decompose(std::int64_t n, const Moduli& ms);

}  // namespace shufrob
