#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gorcurve/error.hpp"
#include "gorcurve/integer.hpp"
#include "gorcurve/matrix.hpp"
#include "gorcurve/parallel.hpp"
#include "gorcurve/semigroup.hpp"

namespace gorcurve {

using Quad = std::array<Int, 4>;
// perm[k] is the generator index placed at position k of a form.
using Perm = std::array<std::size_t, 4>;

inline constexpr Perm kIdentityPerm{0, 1, 2, 3};

inline Quad permuted(const Sequence& s, const Perm& perm) {
  ensure(s.size() == 4, ErrorKind::PreconditionViolated, "expected a 4-sequence");
  return {s[perm[0]], s[perm[1]], s[perm[2]], s[perm[3]]};
}

// Maps a vector indexed by form position back to generator order.
inline Quad to_sequence_order(const Quad& form_vec, const Perm& perm) {
  Quad out{};
  for (std::size_t k = 0; k < 4; ++k) out[perm[k]] = form_vec[k];
  return out;
}

// A principal matrix with the zero pattern
//
//   [ -c1   0   d13  d14 ]
//   [ d21  -c2   0   d24 ]
//   [ d31  d32  -c3   0  ]
//   [  0   d42  d43  -c4 ]
//
// c_i >= 2, d_ij > 0 and zero column sums. Positions refer to the permuted
// sequence (s[perm[0]], ..., s[perm[3]]).
struct BresinskyForm {
  Quad c{};
  Int d13 = 0, d14 = 0, d21 = 0, d24 = 0, d31 = 0, d32 = 0, d42 = 0, d43 = 0;
  Perm perm = kIdentityPerm;

  IntMatrix matrix() const {
    return IntMatrix{{-c[0], 0, d13, d14},
                     {d21, -c[1], 0, d24},
                     {d31, d32, -c[2], 0},
                     {0, d42, d43, -c[3]}};
  }

  friend bool operator==(const BresinskyForm&, const BresinskyForm&) = default;
};

// Empty when `m` has the Bresinsky shape, otherwise the first violation found.
inline std::optional<std::string> bresinsky_shape_violation(const IntMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4) return "matrix is not 4x4";
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const std::string where = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      if (i == j) {
        if (m(i, j) > -2) return "diagonal entry " + where + " must be <= -2";
      } else if (j == (i + 1) % 4) {
        if (m(i, j) != 0) return "entry " + where + " must be zero";
      } else if (m(i, j) <= 0) {
        return "entry " + where + " must be positive";
      }
    }
  }
  for (std::size_t j = 0; j < 4; ++j) {
    Int sum = 0;
    for (std::size_t i = 0; i < 4; ++i) sum = checked::add(sum, m(i, j));
    if (sum != 0) return "column " + std::to_string(j + 1) + " does not sum to zero";
  }
  return std::nullopt;
}

inline BresinskyForm form_from_matrix(const IntMatrix& m, const Perm& perm = kIdentityPerm) {
  if (auto why = bresinsky_shape_violation(m)) throw Error(ErrorKind::WrongShape, *why);
  BresinskyForm f;
  f.c = {-m(0, 0), -m(1, 1), -m(2, 2), -m(3, 3)};
  f.d13 = m(0, 2);
  f.d14 = m(0, 3);
  f.d21 = m(1, 0);
  f.d24 = m(1, 3);
  f.d31 = m(2, 0);
  f.d32 = m(2, 1);
  f.d42 = m(3, 1);
  f.d43 = m(3, 2);
  f.perm = perm;
  return f;
}

// The zero pattern is invariant under cyclic relabelling i -> i + k (mod 4);
// position i of the result is position i + k of `f`.
inline BresinskyForm rotate_form(const BresinskyForm& f, std::size_t k) {
  IntMatrix old = f.matrix();
  IntMatrix m(4, 4);
  Perm perm{};
  for (std::size_t i = 0; i < 4; ++i) {
    perm[i] = f.perm[(i + k) % 4];
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = old((i + k) % 4, (j + k) % 4);
  }
  return form_from_matrix(m, perm);
}

// Rotation placing the smallest generator at position 1.
inline BresinskyForm canonical_rotation(const BresinskyForm& f, const Sequence& s) {
  Quad b = permuted(s, f.perm);
  auto k = static_cast<std::size_t>(std::min_element(b.begin(), b.end()) - b.begin());
  return rotate_form(f, k);
}

namespace detail {

struct TwoTerm {
  Int first;
  Int second;
};

// All (x, y) with x, y >= 1 and x * g1 + y * g2 == target.
inline std::vector<TwoTerm> two_term_representations(Int target, Int g1, Int g2) {
  std::vector<TwoTerm> out;
  for (Int x = 1; x * g1 < target; ++x) {
    Int rest = target - x * g1;
    if (rest % g2 == 0) out.push_back({x, rest / g2});
  }
  return out;
}

// The adjugate column of a matrix annihilating b is lambda * b; true iff |lambda| = 1.
inline bool adjugate_is_sequence(const IntMatrix& m, const Quad& b) {
  auto column = adjugate_column(m, 0);
  const Wide lambda = column[0] / b[0];
  if (lambda != 1 && lambda != -1) return false;
  for (std::size_t k = 0; k < 4; ++k)
    if (column[k] != lambda * b[k]) return false;
  return true;
}

}  // namespace detail

// Enumerates every Bresinsky form of `s` whose diagonal is the principal r_i
// and whose first adjugate column is coprime, hence equal to the permuted
// sequence up to sign. Shape alone is not enough: (10,11,14,13) has a
// shape-valid principal matrix with adjugate column 2 * a and is not symmetric.
// Permutations are tried in lexicographic order, then rows' candidate
// representations in ascending first coefficient. The visitor returns false to stop.
template <typename Visitor>
void for_each_bresinsky_form(const Sequence& s, const std::array<Int, 4>& r, Visitor&& visit) {
  ensure(s.size() == 4, ErrorKind::PreconditionViolated, "Bresinsky forms need a 4-sequence");
  if (*std::min_element(r.begin(), r.end()) < 2) return;

  Perm perm = kIdentityPerm;
  do {
    Quad b = permuted(s, perm);
    Quad c{r[perm[0]], r[perm[1]], r[perm[2]], r[perm[3]]};
    auto row1 = detail::two_term_representations(checked::mul(c[0], b[0]), b[2], b[3]);
    if (row1.empty()) continue;
    auto row2 = detail::two_term_representations(checked::mul(c[1], b[1]), b[0], b[3]);
    if (row2.empty()) continue;
    auto row3 = detail::two_term_representations(checked::mul(c[2], b[2]), b[0], b[1]);
    if (row3.empty()) continue;
    auto row4 = detail::two_term_representations(checked::mul(c[3], b[3]), b[1], b[2]);
    if (row4.empty()) continue;

    for (const auto& [d13, d14] : row1)
      for (const auto& [d21, d24] : row2) {
        if (d14 + d24 != c[3]) continue;
        for (const auto& [d31, d32] : row3) {
          if (d21 + d31 != c[0]) continue;
          for (const auto& [d42, d43] : row4) {
            if (d32 + d42 != c[1] || d13 + d43 != c[2]) continue;
            BresinskyForm f{c, d13, d14, d21, d24, d31, d32, d42, d43, perm};
            if (!detail::adjugate_is_sequence(f.matrix(), b)) continue;
            if (!visit(f)) return;
          }
        }
      }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

inline std::array<Int, 4> principal_rs(const Sequence& s) {
  ensure(s.size() == 4, ErrorKind::PreconditionViolated, "expected a 4-sequence");
  return {principal_r(s, 0), principal_r(s, 1), principal_r(s, 2), principal_r(s, 3)};
}

// First Bresinsky form in the deterministic search order, if any.
inline std::optional<BresinskyForm> detect_bresinsky_form(const Sequence& s) {
  std::optional<BresinskyForm> found;
  for_each_bresinsky_form(s, principal_rs(s), [&](const BresinskyForm& f) {
    found = f;
    return false;
  });
  return found;
}

inline std::vector<BresinskyForm> all_bresinsky_forms(const Sequence& s) {
  std::vector<BresinskyForm> out;
  for_each_bresinsky_form(s, principal_rs(s), [&](const BresinskyForm& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

// Checks the shape of A and reads the curve off its first adjugate column.
// The rows of A are then principal relations of the returned sequence.
inline Sequence certify_bresinsky_matrix(const IntMatrix& a) {
  if (auto why = bresinsky_shape_violation(a)) throw Error(ErrorKind::WrongShape, *why);
  auto column = adjugate_column(a, 0);
  bool any_pos = false, any_neg = false, any_zero = false;
  for (Wide w : column) {
    any_pos |= w > 0;
    any_neg |= w < 0;
    any_zero |= w == 0;
  }
  if (any_zero || (any_pos && any_neg))
    throw Error(ErrorKind::DegenerateAdjugate, "first adjugate column is not of one strict sign");
  Wide g = 0;
  for (Wide w : column) g = gcd_wide(g, w);
  if (g != 1) throw Error(ErrorKind::NotCoprimeAdjoint, "adjugate column entries share a factor", checked::narrow(g));
  std::vector<Int> entries;
  for (Wide w : column) entries.push_back(checked::narrow(abs_wide(w)));
  return Sequence::make(entries);
}

namespace detail {

// Delorme: a complete intersection is a single generator or the gluing of two
// complete intersections along a partition A | B.
inline bool glues(std::span<const Int> gens, std::size_t cap) {
  const std::size_t n = gens.size();
  if (n == 1) return true;
  ensure(n <= 16, ErrorKind::PreconditionViolated, "gluing search is exponential in n");
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
    std::vector<Int> part_a, part_b;
    for (std::size_t i = 0; i < n; ++i) (mask >> i & 1 ? part_a : part_b).push_back(gens[i]);
    Int da = gcd_of(part_a);
    Int db = gcd_of(part_b);
    if (std::gcd(da, db) != 1) continue;
    for (Int& v : part_a) v /= da;
    for (Int& v : part_b) v /= db;
    if (!contains(part_b, da, cap) || !contains(part_a, db, cap)) continue;
    if (glues(part_a, cap) && glues(part_b, cap)) return true;
  }
  return false;
}

}  // namespace detail

inline bool is_complete_intersection(const Sequence& s, std::size_t cap = kDefaultCellCap) {
  return detail::glues(s.entries(), cap);
}

enum class CurveClass { CompleteIntersection, GorensteinNonCI, NonGorenstein };

constexpr std::string_view to_string(CurveClass c) {
  switch (c) {
    case CurveClass::CompleteIntersection: return "CompleteIntersection";
    case CurveClass::GorensteinNonCI: return "GorensteinNonCI";
    case CurveClass::NonGorenstein: return "NonGorenstein";
  }
  return "Unknown";
}

struct Classification {
  CurveClass kind = CurveClass::NonGorenstein;
  std::optional<BresinskyForm> form;  // set exactly for GorensteinNonCI
};

// Gluing test first, then the Bresinsky detector. The symmetry of the
// semigroup is computed independently and must agree with both.
inline Classification classify(const Sequence& s) {
  ensure(s.size() == 4, ErrorKind::PreconditionViolated, "classification needs a 4-sequence");
  const bool ci = is_complete_intersection(s);
  const bool symmetric = profile(s).symmetric;
  if (ci) {
    if (!symmetric)
      throw Error(ErrorKind::InconsistentClassification, "complete intersection with a non-symmetric semigroup");
    return {CurveClass::CompleteIntersection, std::nullopt};
  }
  auto form = detect_bresinsky_form(s);
  if (form.has_value() != symmetric)
    throw Error(ErrorKind::InconsistentClassification,
                form ? "Bresinsky form found for a non-symmetric semigroup"
                     : "symmetric non-CI semigroup without a Bresinsky form");
  if (form) return {CurveClass::GorensteinNonCI, form};
  return {CurveClass::NonGorenstein, std::nullopt};
}

namespace detail {

inline Quad nonnegative_direction(const std::array<Wide, 4>& raw, const char* what) {
  bool any_pos = false, any_neg = false;
  for (Wide w : raw) {
    any_pos |= w > 0;
    any_neg |= w < 0;
  }
  if (!any_pos && !any_neg) throw Error(ErrorKind::ZeroVector, std::string(what) + " vanishes");
  if (any_pos && any_neg) throw Error(ErrorKind::MixedSignVector, std::string(what) + " has mixed signs");
  Quad out{};
  for (std::size_t k = 0; k < 4; ++k) out[k] = checked::narrow(abs_wide(raw[k]));
  return out;
}

}  // namespace detail

inline IntMatrix translation_matrix_u(const BresinskyForm& f) {
  return IntMatrix{{f.d21, -f.c[1], 0, f.d24}, {1, 0, -1, 0}, {0, f.d42, f.d43, -f.c[3]}};
}

inline IntMatrix translation_matrix_v(const BresinskyForm& f) {
  return IntMatrix{{-f.c[0], 0, f.d13, f.d14}, {0, -1, 0, 1}, {f.d31, f.d32, -f.c[2], 0}};
}

// Direction of the A_t family, indexed by form position.
inline Quad translation_vector_u(const BresinskyForm& f) {
  return detail::nonnegative_direction(cross_product(translation_matrix_u(f)), "u");
}

// Direction of the B_t family, indexed by form position.
inline Quad translation_vector_v(const BresinskyForm& f) {
  return detail::nonnegative_direction(cross_product(translation_matrix_v(f)), "v");
}

inline IntMatrix family_matrix_a(const BresinskyForm& f, Int t) {
  ensure(t >= 0, ErrorKind::PreconditionViolated, "t must be non-negative");
  BresinskyForm g = f;
  g.c[0] = checked::add(g.c[0], t);
  g.c[2] = checked::add(g.c[2], t);
  g.d13 = checked::add(g.d13, t);
  g.d31 = checked::add(g.d31, t);
  return g.matrix();
}

inline IntMatrix family_matrix_b(const BresinskyForm& f, Int t) {
  ensure(t >= 0, ErrorKind::PreconditionViolated, "t must be non-negative");
  BresinskyForm g = f;
  g.c[1] = checked::add(g.c[1], t);
  g.c[3] = checked::add(g.c[3], t);
  g.d24 = checked::add(g.d24, t);
  g.d42 = checked::add(g.d42, t);
  return g.matrix();
}

enum class FamilyKind { U, V, Diagonal };

constexpr std::string_view to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::U: return "u";
    case FamilyKind::V: return "v";
    case FamilyKind::Diagonal: return "diagonal";
  }
  return "unknown";
}

// Form of the translated sequence: A_t for U, B_t for V.
inline BresinskyForm family_form(const BresinskyForm& f, FamilyKind kind, Int t) {
  ensure(kind != FamilyKind::Diagonal, ErrorKind::PreconditionViolated, "diagonal family has no matrix family");
  return form_from_matrix(kind == FamilyKind::U ? family_matrix_a(f, t) : family_matrix_b(f, t), f.perm);
}

// Data of the homogeneous-rows case: rows 2 and 4 of the canonically rotated
// form sum to zero, and s + t * period * (1,1,1,1) stays Gorenstein non-CI.
struct HomogeneousPeriod {
  BresinskyForm form;  // rotated so the smallest generator is first
  Int x = 0, y = 0, z = 0;
  Int b = 0, d = 0, q = 0, beta = 0, alpha = 0, period = 0;
};

namespace detail {

// Every identity the homogeneous-rows case implies is re-checked here; a
// failure means a bug or a bad input form, never a value to be swallowed.
inline HomogeneousPeriod homogeneous_period(const Sequence& s, const BresinskyForm& rotated) {
  auto check = [](bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::AssertionFailure, what);
  };
  HomogeneousPeriod out;
  out.form = rotated;
  const BresinskyForm& f = out.form;
  Quad a = permuted(s, f.perm);
  out.x = a[1] - a[0];
  out.y = a[2] - a[0];
  out.z = a[3] - a[0];
  check(checked::mul(f.c[1], out.x) == checked::mul(f.d24, out.z), "c2 * x != d24 * z");
  check(checked::add(checked::mul(f.d42, out.x), checked::mul(f.d43, out.y)) == checked::mul(f.c[3], out.z),
        "d42 * x + d43 * y != c4 * z");
  check(0 < out.x && out.x < out.z && out.z < out.y, "x < z < y fails");

  out.b = checked::add(checked::mul(f.d21, f.c[3]), checked::mul(f.d24, f.d43));
  out.d = std::gcd(out.x, out.z);
  check(checked::mul(f.c[1], out.d) % out.z == 0, "z / d does not divide c2");
  out.q = checked::mul(f.c[1], out.d) / out.z;
  check(checked::mul(out.q, out.x / out.d) == f.d24, "d24 != q * x / d");
  out.beta = out.y / std::gcd(out.b, out.y);
  out.alpha = checked::mul(out.beta, out.b) / out.y;
  out.period = checked::mul(out.alpha, out.y);
  check(out.beta <= out.d, "beta > gcd(x, z)");
  Quad u = translation_vector_u(f);
  check(u == Quad{out.b, out.b, out.b, out.b}, "u != b * (1,1,1,1)");
  return out;
}

}  // namespace detail

// nullopt when rows 2 and 4 are not both homogeneous.
inline std::optional<HomogeneousPeriod> homogeneous_rows_period(const Sequence& s, const BresinskyForm& detected) {
  BresinskyForm f = canonical_rotation(detected, s);
  if (f.c[1] != f.d21 + f.d24 || f.c[3] != f.d42 + f.d43) return std::nullopt;
  return detail::homogeneous_period(s, f);
}

inline std::optional<HomogeneousPeriod> homogeneous_rows_period(const Sequence& s) {
  Classification cls = classify(s);
  ensure(cls.kind == CurveClass::GorensteinNonCI, ErrorKind::PreconditionViolated,
         "homogeneous rows period needs a Gorenstein non-CI sequence");
  return homogeneous_rows_period(s, *cls.form);
}

struct FamilyMember {
  Int t = 0;
  Quad sequence{};  // generator order
  Int gcd = 1;      // != 1 means the member is skipped
  std::optional<CurveClass> classification;
  // For U and V: whether the adjugate of A_t / B_t reproduced the member.
  std::optional<bool> matrix_certified;
  bool inconsistent = false;  // classify raised InconsistentClassification
  bool finding = false;       // coprime but not Gorenstein non-CI

  bool skipped() const { return gcd != 1; }
};

struct TranslationFamily {
  Sequence base;
  FamilyKind kind;
  BresinskyForm form;
  Quad direction{};  // generator order
  std::vector<FamilyMember> members;

  std::vector<FamilyMember> findings() const {
    std::vector<FamilyMember> out;
    for (const auto& m : members)
      if (m.finding) out.push_back(m);
    return out;
  }
};

inline Quad translate(const Sequence& s, const Quad& step, Int t) {
  ensure(s.size() == 4, ErrorKind::PreconditionViolated, "expected a 4-sequence");
  Quad out{};
  for (std::size_t k = 0; k < 4; ++k) out[k] = checked::add(s[k], checked::mul(t, step[k]));
  return out;
}

inline TranslationFamily generate_family(const Sequence& s, FamilyKind kind, Int t_max, std::size_t workers = 1) {
  ensure(t_max >= 0, ErrorKind::PreconditionViolated, "t_max must be non-negative");
  Classification cls = classify(s);
  ensure(cls.kind == CurveClass::GorensteinNonCI, ErrorKind::PreconditionViolated,
         "translation families need a Gorenstein non-CI base");
  const BresinskyForm& form = *cls.form;

  TranslationFamily fam{s, kind, form, {}, {}};
  switch (kind) {
    case FamilyKind::U: fam.direction = to_sequence_order(translation_vector_u(form), form.perm); break;
    case FamilyKind::V: fam.direction = to_sequence_order(translation_vector_v(form), form.perm); break;
    case FamilyKind::Diagonal: {
      auto period = homogeneous_rows_period(s, form);
      ensure(period.has_value(), ErrorKind::PreconditionViolated,
             "diagonal family needs rows 2 and 4 of the form to be homogeneous");
      fam.direction = {period->period, period->period, period->period, period->period};
      break;
    }
  }

  fam.members = parallel_map(static_cast<std::size_t>(t_max) + 1, workers, [&](std::size_t idx) {
    FamilyMember m;
    m.t = static_cast<Int>(idx);
    m.sequence = translate(s, fam.direction, m.t);
    m.gcd = gcd_of(m.sequence);
    if (m.skipped()) return m;
    Sequence member = Sequence::make(m.sequence);
    try {
      m.classification = classify(member).kind;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InconsistentClassification) throw;
      m.inconsistent = true;
    }
    m.finding = m.inconsistent || *m.classification != CurveClass::GorensteinNonCI;
    if (kind != FamilyKind::Diagonal) {
      Sequence certified = certify_bresinsky_matrix(family_form(form, kind, m.t).matrix());
      m.matrix_certified = Quad{certified[0], certified[1], certified[2], certified[3]} == permuted(member, form.perm);
      m.finding = m.finding || !*m.matrix_certified;
    }
    return m;
  });
  return fam;
}

struct ScanRow {
  Int t = 0;
  Quad sequence{};  // s + t * step, before reduction
  Int gcd = 1;      // divided out before classifying
  CurveClass classification = CurveClass::NonGorenstein;
};

// Classifies s + t * step for t in [t_first, t_last]. Members with a common
// factor are reduced first, since S(d a) and S(a) are isomorphic.
inline std::vector<ScanRow> scan_translations(const Sequence& s, const Quad& step, Int t_first, Int t_last,
                                              std::size_t workers = 1) {
  ensure(s.size() == 4, ErrorKind::PreconditionViolated, "scans need a 4-sequence");
  ensure(t_first >= 0 && t_first <= t_last, ErrorKind::PreconditionViolated, "empty or negative t range");
  for (Int v : step) ensure(v >= 0, ErrorKind::PreconditionViolated, "step entries must be non-negative");
  const auto count = static_cast<std::size_t>(t_last - t_first) + 1;
  return parallel_map(count, workers, [&](std::size_t idx) {
    ScanRow row;
    row.t = t_first + static_cast<Int>(idx);
    row.sequence = translate(s, step, row.t);
    auto [reduced, g] = Sequence::reduce(row.sequence);
    row.gcd = g;
    row.classification = classify(reduced).kind;
    return row;
  });
}

}  // namespace gorcurve
