#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gorcurve/error.hpp"
#include "gorcurve/integer.hpp"
#include "gorcurve/matrix.hpp"

namespace gorcurve {

// Upper bound on the number of cells a membership table may allocate.
inline constexpr std::size_t kDefaultCellCap = 100'000'000;

// A list of n >= 2 positive integers with gcd 1. Generates a numerical
// semigroup and parametrizes the monomial curve t -> (t^a_1, ..., t^a_n).
class Sequence {
 public:
  static Sequence make(std::span<const Int> raw) {
    ensure(raw.size() >= 2, ErrorKind::TooFewEntries, "a sequence needs at least two entries");
    for (Int v : raw)
      if (v <= 0) throw Error(ErrorKind::ZeroOrNegativeEntry, "entry " + std::to_string(v), v);
    Int g = gcd_of(raw);
    if (g != 1) throw Error(ErrorKind::NotCoprime, "entries share a common factor", g);
    return Sequence(std::vector<Int>(raw.begin(), raw.end()));
  }

  static Sequence make(std::initializer_list<Int> raw) {
    return make(std::span<const Int>(raw.begin(), raw.size()));
  }

  // Divides out the gcd. Returns the reduced sequence and the factor removed.
  static std::pair<Sequence, Int> reduce(std::span<const Int> raw) {
    ensure(raw.size() >= 2, ErrorKind::TooFewEntries, "a sequence needs at least two entries");
    for (Int v : raw)
      if (v <= 0) throw Error(ErrorKind::ZeroOrNegativeEntry, "entry " + std::to_string(v), v);
    Int g = gcd_of(raw);
    std::vector<Int> out(raw.begin(), raw.end());
    for (Int& v : out) v /= g;
    return {Sequence(std::move(out)), g};
  }

  std::size_t size() const noexcept { return entries_.size(); }
  Int operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Int> entries() const noexcept { return entries_; }
  Int smallest() const { return *std::min_element(entries_.begin(), entries_.end()); }

  Int sum() const {
    Int s = 0;
    for (Int v : entries_) s = checked::add(s, v);
    return s;
  }

  friend bool operator==(const Sequence&, const Sequence&) = default;
  friend auto operator<=>(const Sequence&, const Sequence&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Sequence& s) {
    os << '(';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    return os << ')';
  }

 private:
  explicit Sequence(std::vector<Int> entries) : entries_(std::move(entries)) {}
  std::vector<Int> entries_;
};

// Membership table for the additive monoid generated by `gens`, grown on
// demand by the recurrence member(k) = OR_j member(k - g_j).
// The generators need not be coprime.
class MembershipSieve {
 public:
  explicit MembershipSieve(std::span<const Int> gens, std::size_t cap = kDefaultCellCap)
      : gens_(gens.begin(), gens.end()), cap_(cap), reach_{1} {
    for (Int g : gens_) ensure(g > 0, ErrorKind::ZeroOrNegativeEntry, "generator must be positive");
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  }

  bool contains(Int m) {
    if (m < 0) throw Error(ErrorKind::NegativeQuery, "membership of a negative integer", m);
    extend_to(m);
    return reach_[static_cast<std::size_t>(m)] != 0;
  }

  void extend_to(Int m) {
    if (m < static_cast<Int>(reach_.size())) return;
    if (static_cast<std::uint64_t>(m) + 1 > cap_)
      throw Error(ErrorKind::CapacityExceeded,
                  "membership table would exceed " + std::to_string(cap_) + " cells", m);
    const std::size_t old_size = reach_.size();
    reach_.resize(static_cast<std::size_t>(m) + 1, 0);
    for (std::size_t k = old_size; k < reach_.size(); ++k) {
      for (Int g : gens_) {
        auto step = static_cast<std::size_t>(g);
        if (step > k) break;
        if (reach_[k - step]) {
          reach_[k] = 1;
          break;
        }
      }
    }
  }

  std::size_t size() const noexcept { return reach_.size(); }
  bool at(std::size_t k) const { return reach_[k] != 0; }

 private:
  std::vector<Int> gens_;
  std::size_t cap_;
  std::vector<std::uint8_t> reach_;
};

inline bool contains(std::span<const Int> gens, Int m, std::size_t cap = kDefaultCellCap) {
  return MembershipSieve(gens, cap).contains(m);
}

inline bool contains(const Sequence& s, Int m, std::size_t cap = kDefaultCellCap) {
  return contains(s.entries(), m, cap);
}

struct SemigroupProfile {
  Int frobenius = -1;  // -1 when the semigroup is all of N
  Int genus = 0;
  Int multiplicity = 1;
  std::vector<Int> apery;  // apery[r]: least member congruent to r mod multiplicity
  bool symmetric = true;
};

inline SemigroupProfile profile(const Sequence& s, std::size_t cap = kDefaultCellCap) {
  SemigroupProfile p;
  p.multiplicity = s.smallest();
  MembershipSieve sieve(s.entries(), cap);

  // Once `multiplicity` consecutive members appear, every larger integer is
  // a member; the Frobenius number sits just before that run.
  Int run = 0;
  Int k = 0;
  for (;; ++k) {
    if (sieve.contains(k)) {
      if (++run == p.multiplicity) break;
    } else {
      run = 0;
    }
  }
  p.frobenius = k - p.multiplicity;

  p.apery.assign(static_cast<std::size_t>(p.multiplicity), -1);
  Int found = 0;
  for (Int z = 0; found < p.multiplicity; ++z) {
    auto r = static_cast<std::size_t>(z % p.multiplicity);
    if (p.apery[r] < 0 && sieve.contains(z)) {
      p.apery[r] = z;
      ++found;
    }
  }

  for (Int z = 0; z <= p.frobenius; ++z) {
    bool member = sieve.at(static_cast<std::size_t>(z));
    if (!member) ++p.genus;
    if (member == sieve.at(static_cast<std::size_t>(p.frobenius - z))) p.symmetric = false;
  }
  return p;
}

// Visits every coefficient vector c >= 0 with sum_j c_j * gens_j == target,
// in lexicographic order. The visitor returns false to stop early.
template <typename Visitor>
void for_each_representation(std::span<const Int> gens, Int target, Visitor&& visit) {
  std::vector<Int> coeffs(gens.size(), 0);
  auto recurse = [&](auto&& self, std::size_t pos, Int remaining) -> bool {
    if (pos + 1 == gens.size()) {
      if (remaining % gens[pos] != 0) return true;
      coeffs[pos] = remaining / gens[pos];
      return visit(std::as_const(coeffs));
    }
    for (Int c = 0; c * gens[pos] <= remaining; ++c) {
      coeffs[pos] = c;
      if (!self(self, pos + 1, remaining - c * gens[pos])) return false;
    }
    coeffs[pos] = 0;
    return true;
  };
  if (gens.empty()) {
    if (target == 0) visit(std::as_const(coeffs));
    return;
  }
  recurse(recurse, 0, target);
}

inline std::optional<std::vector<Int>> lex_smallest_representation(std::span<const Int> gens,
                                                                   Int target) {
  std::optional<std::vector<Int>> out;
  for_each_representation(gens, target, [&](const std::vector<Int>& c) {
    out = c;
    return false;
  });
  return out;
}

struct PrincipalRow {
  Int r = 0;
  // Coefficients r_ij for j != i, in ascending j.
  std::vector<Int> rep;
};

namespace detail {

inline std::vector<Int> others_of(const Sequence& s, std::size_t i) {
  ensure(i < s.size(), ErrorKind::PreconditionViolated, "generator index out of range");
  std::vector<Int> others;
  for (std::size_t j = 0; j < s.size(); ++j)
    if (j != i) others.push_back(s[j]);
  return others;
}

}  // namespace detail

// Smallest r >= 1 with r * a_i in the semigroup of the other entries. It
// exists because gcd(a) = 1.
inline Int principal_r(const Sequence& s, std::size_t i, std::size_t cap = kDefaultCellCap) {
  MembershipSieve sieve(detail::others_of(s, i), cap);
  for (Int k = 1;; ++k)
    if (sieve.contains(checked::mul(k, s[i]))) return k;
}

// r_i together with the lexicographically smallest representation of r_i * a_i.
inline PrincipalRow principal_row(const Sequence& s, std::size_t i, std::size_t cap = kDefaultCellCap) {
  PrincipalRow row;
  row.r = principal_r(s, i, cap);
  auto rep = lex_smallest_representation(detail::others_of(s, i), checked::mul(row.r, s[i]));
  ensure(rep.has_value(), ErrorKind::AssertionFailure, "member without a representation");
  row.rep = std::move(*rep);
  return row;
}

inline IntMatrix principal_matrix(const Sequence& s, std::size_t cap = kDefaultCellCap) {
  const std::size_t n = s.size();
  IntMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    PrincipalRow row = principal_row(s, i, cap);
    d(i, i) = -row.r;
    for (std::size_t j = 0, k = 0; j < n; ++j)
      if (j != i) d(i, j) = row.rep[k++];
  }
  for (Int v : d.apply(s.entries()))
    ensure(v == 0, ErrorKind::AssertionFailure, "principal row does not annihilate the sequence");
  ensure(rank(d) == n - 1, ErrorKind::AssertionFailure, "principal matrix rank is not n-1");
  return d;
}

// Recovers the sequence from a rank n-1 relation matrix: first column of the
// adjugate, signs removed, gcd divided out.
inline Sequence inverse_principal(const IntMatrix& m) {
  ensure(m.square() && m.rows() >= 2, ErrorKind::PreconditionViolated, "need a square matrix, n >= 2");
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        ensure(m(i, j) < 0, ErrorKind::PreconditionViolated, "diagonal entries must be negative");
      else
        ensure(m(i, j) >= 0, ErrorKind::PreconditionViolated, "off-diagonal entries must be >= 0");
    }
  ensure(rank(m) == n - 1, ErrorKind::PreconditionViolated, "matrix rank must be n-1");

  // At rank n-1 every adjugate column is a multiple of the kernel vector. The
  // first column can be the zero multiple, so fall back to the next one.
  std::vector<Wide> column;
  for (std::size_t col = 0; col < n && column.empty(); ++col) {
    auto candidate = adjugate_column(m, col);
    for (Wide w : candidate)
      if (w != 0) {
        column = std::move(candidate);
        break;
      }
  }
  bool any_pos = false, any_neg = false, any_zero = column.empty();
  for (Wide w : column) {
    any_pos |= w > 0;
    any_neg |= w < 0;
    any_zero |= w == 0;
  }
  if (any_zero || (any_pos && any_neg))
    throw Error(ErrorKind::DegenerateAdjugate, "adjugate column is zero or not of one strict sign");
  Wide g = 0;
  for (Wide w : column) g = gcd_wide(g, w);
  std::vector<Int> out;
  out.reserve(n);
  for (Wide w : column) out.push_back(checked::narrow(abs_wide(w) / g));
  return Sequence::make(out);
}

// True when every row of m is a principal relation of inverse_principal(m).
inline bool is_principal(const IntMatrix& m, std::size_t cap = kDefaultCellCap) {
  Sequence s = inverse_principal(m);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (-m(i, i) != principal_r(s, i, cap)) return false;
  return true;
}

}  // namespace gorcurve
