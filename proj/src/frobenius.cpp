#include "shufrob/frobenius.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <string>

#include "shufrob/errors.hpp"

namespace shufrob {

Moduli::Moduli(std::vector<std::int64_t> values) : values_(std::move(values)) {
  if (values_.empty()) throw FormatError("moduli list is empty");
  for (auto v : values_) {
    if (v < 1) throw DomainError("moduli must be >= 1, got " + std::to_string(v));
  }
  std::sort(values_.begin(), values_.end());
}

std::int64_t Moduli::gcd() const noexcept {
  std::int64_t g = 0;
  for (auto v : values_) g = std::gcd(g, v);
  return g;
}

namespace {

// Dijkstra over residues modulo values[0], restricted to the first `count` values.
std::vector<std::int64_t> residue_minima(const std::vector<std::int64_t>& values, std::size_t count) {
  const std::int64_t base = values.front();
  if (base > kMaxResidueModulus) {
    throw ResourceError("smallest modulus " + std::to_string(base) + " exceeds limit " +
                        std::to_string(kMaxResidueModulus));
  }
  std::vector<std::int64_t> dist(static_cast<std::size_t>(base), -1);
  using Item = std::pair<std::int64_t, std::int64_t>;  // (value, residue)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (std::size_t k = 1; k < count; ++k) {
      std::int64_t nd = d + values[k];
      auto nr = static_cast<std::size_t>(nd % base);
      if (dist[nr] < 0 || nd < dist[nr]) {
        dist[nr] = nd;
        queue.emplace(nd, static_cast<std::int64_t>(nr));
      }
    }
  }
  return dist;
}

bool representable_with(std::int64_t n, std::int64_t base, const std::vector<std::int64_t>& minima) {
  auto floor = minima[static_cast<std::size_t>(n % base)];
  return floor >= 0 && n >= floor;
}

}  // namespace

std::vector<std::int64_t> apery_set(const Moduli& ms) { return residue_minima(ms.values(), ms.size()); }

std::int64_t frobenius_number(const Moduli& ms) {
  if (ms.gcd() != 1) {
    throw DomainError("gcd of moduli is " + std::to_string(ms.gcd()) + "; no finite Frobenius number");
  }
  if (ms.smallest() == 1) return -1;
  auto minima = apery_set(ms);
  return *std::max_element(minima.begin(), minima.end()) - ms.smallest();
}

std::int64_t sylvester(std::int64_t m1, std::int64_t m2) {
  if (m1 < 2 || m2 < 2) throw DomainError("sylvester formula needs both moduli >= 2");
  if (std::gcd(m1, m2) != 1) throw DomainError("sylvester formula needs coprime moduli");
  return m1 * m2 - m1 - m2;
}

std::int64_t schur_bound(const Moduli& ms) {
  if (ms.size() < 2) throw DomainError("schur bound needs at least two moduli");
  return ms.smallest() * ms.largest() - ms.smallest() - ms.largest();
}

bool representable(std::int64_t n, const Moduli& ms) {
  if (n < 0) throw DomainError("representable() needs n >= 0");
  return representable_with(n, ms.smallest(), apery_set(ms));
}

std::vector<std::int64_t> decompose(std::int64_t n, const Moduli& ms) {
  if (n < 0) throw DomainError("decompose() needs n >= 0");
  const auto& values = ms.values();
  const std::int64_t base = ms.smallest();

  // minima[k] answers representability with values[0..k].
  std::vector<std::vector<std::int64_t>> minima(values.size() + 1);
  for (std::size_t k = 1; k <= values.size(); ++k) minima[k] = residue_minima(values, k);

  if (!representable_with(n, base, minima[values.size()])) {
    throw DomainError(std::to_string(n) + " is not representable by the given moduli");
  }

  std::vector<std::int64_t> coeffs(values.size(), 0);
  std::int64_t rest = n;
  for (std::size_t k = values.size(); k-- > 1;) {
    std::int64_t c = 0;
    while (!representable_with(rest - c * values[k], base, minima[k])) ++c;
    coeffs[k] = c;
    rest -= c * values[k];
  }
  coeffs[0] = rest / base;
  return coeffs;
}

}  // namespace shufrob
