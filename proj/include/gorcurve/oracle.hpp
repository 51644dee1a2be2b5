#pragma once

// Brute-force ground truth for the semigroup and classification routines.
// Nothing here may include or call the library proper: the point is to be
// slow, naive and independent.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string_view>
#include <vector>

namespace gorcurve::oracle {

using I64 = std::int64_t;

// Is m a non-negative integer combination of gens? Nested enumeration over
// coefficient tuples, largest generator outermost.
inline bool membership(std::span<const I64> gens, I64 m) {
  if (m < 0) return false;
  if (m == 0) return true;
  std::vector<I64> g(gens.begin(), gens.end());
  std::sort(g.rbegin(), g.rend());
  std::function<bool(std::size_t, I64)> search = [&](std::size_t pos, I64 rest) -> bool {
    if (rest == 0) return true;
    if (pos == g.size()) return false;
    if (pos + 1 == g.size()) return rest % g[pos] == 0;
    for (I64 c = rest / g[pos]; c >= 0; --c)
      if (search(pos + 1, rest - c * g[pos])) return true;
    return false;
  };
  return search(0, m);
}

// Marks every sum_j c_j g_j <= bound by walking all coefficient tuples.
inline std::vector<bool> members_up_to(std::span<const I64> gens, I64 bound) {
  std::vector<bool> hit(static_cast<std::size_t>(bound) + 1, false);
  std::function<void(std::size_t, I64)> walk = [&](std::size_t pos, I64 total) {
    if (pos == gens.size()) {
      hit[static_cast<std::size_t>(total)] = true;
      return;
    }
    for (I64 t = total; t <= bound; t += gens[pos]) walk(pos + 1, t);
  };
  walk(0, 0);
  return hit;
}

// Largest non-member, -1 if none. gens must be coprime. The search window
// doubles until it contains min(gens) consecutive members.
inline I64 frobenius(std::span<const I64> gens) {
  const I64 smallest = *std::min_element(gens.begin(), gens.end());
  for (I64 bound = 2 * *std::max_element(gens.begin(), gens.end());; bound *= 2) {
    auto hit = members_up_to(gens, bound);
    I64 run = 0;
    for (I64 k = 0; k <= bound; ++k) {
      run = hit[static_cast<std::size_t>(k)] ? run + 1 : 0;
      if (run == smallest) return k - smallest;
    }
  }
}

inline bool symmetric(std::span<const I64> gens) {
  const I64 f = frobenius(gens);
  if (f < 0) return true;
  auto hit = members_up_to(gens, f);
  for (I64 z = 0; z <= f; ++z)
    if (hit[static_cast<std::size_t>(z)] == hit[static_cast<std::size_t>(f - z)]) return false;
  return true;
}

// Smallest k >= 1 with k * gens[i] a combination of the other generators.
inline I64 r(std::span<const I64> gens, std::size_t i) {
  std::vector<I64> others;
  for (std::size_t j = 0; j < gens.size(); ++j)
    if (j != i) others.push_back(gens[j]);
  for (I64 k = 1;; ++k)
    if (membership(others, k * gens[i])) return k;
}

inline bool complete_intersection(std::span<const I64> gens) {
  const std::size_t n = gens.size();
  if (n == 1) return true;
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
    std::vector<I64> left, right;
    for (std::size_t i = 0; i < n; ++i) (mask >> i & 1 ? left : right).push_back(gens[i]);
    I64 dl = 0, dr = 0;
    for (I64 v : left) dl = std::gcd(dl, v);
    for (I64 v : right) dr = std::gcd(dr, v);
    if (std::gcd(dl, dr) != 1) continue;
    for (I64& v : left) v /= dl;
    for (I64& v : right) v /= dr;
    if (membership(right, dl) && membership(left, dr) && complete_intersection(left) &&
        complete_intersection(right))
      return true;
  }
  return false;
}

enum class Verdict { CompleteIntersection, GorensteinNonCI, NonGorenstein };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::CompleteIntersection: return "CompleteIntersection";
    case Verdict::GorensteinNonCI: return "GorensteinNonCI";
    case Verdict::NonGorenstein: return "NonGorenstein";
  }
  return "Unknown";
}

inline Verdict classify(std::span<const I64> gens) {
  if (complete_intersection(gens)) return Verdict::CompleteIntersection;
  return symmetric(gens) ? Verdict::GorensteinNonCI : Verdict::NonGorenstein;
}

}  // namespace gorcurve::oracle
