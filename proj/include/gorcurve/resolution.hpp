#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "gorcurve/error.hpp"
#include "gorcurve/gorenstein4.hpp"
#include "gorcurve/integer.hpp"
#include "gorcurve/semigroup.hpp"

namespace gorcurve {

using Exponents = std::array<Int, 4>;

struct Monomial {
  Exponents exps{};

  Int weighted_degree(const Quad& weights) const {
    Int deg = 0;
    for (std::size_t k = 0; k < 4; ++k) deg = checked::add(deg, checked::mul(exps[k], weights[k]));
    return deg;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    for (std::size_t k = 0; k < 4; ++k) out.exps[k] = checked::add(a.exps[k], b.exps[k]);
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// x_{var+1}^power
inline Monomial var_power(std::size_t var, Int power) {
  Monomial m;
  m.exps[var] = power;
  return m;
}

inline std::ostream& operator<<(std::ostream& os, const Monomial& m) {
  bool any = false;
  for (std::size_t k = 0; k < 4; ++k) {
    if (m.exps[k] == 0) continue;
    if (any) os << '*';
    os << 'x' << k + 1;
    if (m.exps[k] != 1) os << '^' << m.exps[k];
    any = true;
  }
  if (!any) os << '1';
  return os;
}

// Entry of a monomial matrix: zero, +monomial or -monomial.
struct SignedMonomial {
  int sign = 0;
  Monomial mono;

  static SignedMonomial zero() { return {}; }
  SignedMonomial operator-() const { return {-sign, mono}; }
  friend bool operator==(const SignedMonomial&, const SignedMonomial&) = default;
};

// Integer-coefficient polynomial in x1..x4, stored as exponent -> coefficient
// with zero coefficients removed.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const SignedMonomial& m) {  // NOLINT(google-explicit-constructor)
    if (m.sign != 0) terms_[m.mono.exps] = m.sign;
  }

  void add_term(const Exponents& e, Int coeff) {
    if (coeff == 0) return;
    Int& slot = terms_[e];
    slot = checked::add(slot, coeff);
    if (slot == 0) terms_.erase(e);
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<Exponents, Int>& terms() const noexcept { return terms_; }

  Polynomial& operator+=(const Polynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        out.add_term((Monomial{ea} * Monomial{eb}).exps, checked::mul(ca, cb));
    return out;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::map<Exponents, Int> terms_;
};

struct Binomial {
  Monomial plus;
  Monomial minus;

  Polynomial polynomial() const {
    Polynomial p;
    p.add_term(plus.exps, 1);
    p.add_term(minus.exps, -1);
    return p;
  }

  bool homogeneous(const Quad& weights) const {
    return plus.weighted_degree(weights) == minus.weighted_degree(weights);
  }

  // Same binomial up to an overall sign.
  bool equal_up_to_sign(const Binomial& other) const {
    return (plus == other.plus && minus == other.minus) || (plus == other.minus && minus == other.plus);
  }

  friend bool operator==(const Binomial&, const Binomial&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Binomial& b) {
  return os << b.plus << " - " << b.minus;
}

using SkewMatrix = std::array<std::array<SignedMonomial, 5>, 5>;

// Pfaffian presentation of I(a) for a Gorenstein non-CI 4-sequence.
// Variable x_k carries weight sequence[k-1]; `sequence` is in form order.
struct SkewPresentation {
  Quad sequence{};
  BresinskyForm form;
  SkewMatrix phi{};
  std::array<Binomial, 5> delta{};
  Int last_twist = 0;
  Int socle_degree = 0;

  friend bool operator==(const SkewPresentation&, const SkewPresentation&) = default;
};

inline bool is_skew_symmetric(const SkewMatrix& phi) {
  for (std::size_t i = 0; i < 5; ++i) {
    if (phi[i][i].sign != 0) return false;
    for (std::size_t j = i + 1; j < 5; ++j)
      if (!(phi[j][i] == -phi[i][j])) return false;
  }
  return true;
}

inline Int twist_for(const Quad& b, const BresinskyForm& f) {
  return checked::add(checked::add(checked::mul(b[0], f.c[0]), checked::mul(b[3], f.c[3])),
                      checked::mul(b[1], f.d32));
}

inline SkewPresentation build_presentation(const Sequence& s, const BresinskyForm& f) {
  SkewPresentation p;
  p.sequence = permuted(s, f.perm);
  p.form = f;
  for (Int v : f.matrix().apply(p.sequence))
    ensure(v == 0, ErrorKind::PreconditionViolated, "form rows do not annihilate the sequence");

  auto x = [](std::size_t k, Int e) { return SignedMonomial{1, var_power(k - 1, e)}; };
  auto set = [&p](std::size_t i, std::size_t j, SignedMonomial m) {
    p.phi[i][j] = m;
    p.phi[j][i] = -m;
  };
  set(0, 2, x(2, f.d32));
  set(0, 3, x(3, f.d43));
  set(0, 4, x(4, f.d24));
  set(1, 2, x(1, f.d21));
  set(1, 3, x(4, f.d14));
  set(1, 4, x(2, f.d42));
  set(2, 4, x(3, f.d13));
  set(3, 4, x(1, f.d31));

  auto mono = [](std::initializer_list<std::pair<std::size_t, Int>> factors) {
    Monomial m;
    for (auto [k, e] : factors) m.exps[k - 1] = e;
    return m;
  };
  p.delta = {Binomial{mono({{1, f.c[0]}}), mono({{3, f.d13}, {4, f.d14}})},
             Binomial{mono({{3, f.c[2]}}), mono({{1, f.d31}, {2, f.d32}})},
             Binomial{mono({{4, f.c[3]}}), mono({{2, f.d42}, {3, f.d43}})},
             Binomial{mono({{2, f.c[1]}}), mono({{1, f.d21}, {4, f.d24}})},
             Binomial{mono({{1, f.d21}, {3, f.d43}}), mono({{2, f.d32}, {4, f.d14}})}};

  p.last_twist = twist_for(p.sequence, f);
  p.socle_degree = checked::sub(p.last_twist, Int{3});
  return p;
}

// Pfaffian of the 4x4 skew submatrix left after deleting row and column i.
inline Binomial pfaffian(const SkewMatrix& phi, std::size_t i) {
  ensure(i < 5, ErrorKind::PreconditionViolated, "pfaffian index out of range");
  ensure(is_skew_symmetric(phi), ErrorKind::PreconditionViolated, "matrix is not skew-symmetric");
  std::array<std::size_t, 4> k{};
  for (std::size_t j = 0, n = 0; j < 5; ++j)
    if (j != i) k[n++] = j;
  auto m = [&](std::size_t a, std::size_t b) { return Polynomial(phi[k[a]][k[b]]); };

  Polynomial pf = m(0, 1) * m(2, 3);
  pf -= m(0, 2) * m(1, 3);
  pf += m(0, 3) * m(1, 2);

  const auto& terms = pf.terms();
  if (terms.size() != 2) throw Error(ErrorKind::NotBinomial, std::to_string(terms.size()) + " surviving terms");
  auto first = terms.begin();
  auto second = std::next(first);
  if (first->second * second->second != -1)
    throw Error(ErrorKind::NotBinomial, "terms are not a unit-coefficient difference");
  if (first->second == 1) return {Monomial{first->first}, Monomial{second->first}};
  return {Monomial{second->first}, Monomial{first->first}};
}

// delta * phi = 0 and phi * delta^T = 0 as exact polynomial identities.
inline bool verify_complexes(const SkewPresentation& p) {
  if (!is_skew_symmetric(p.phi)) return false;
  std::array<Polynomial, 5> delta;
  for (std::size_t i = 0; i < 5; ++i) delta[i] = p.delta[i].polynomial();
  for (std::size_t j = 0; j < 5; ++j) {
    Polynomial row_side, column_side;
    for (std::size_t i = 0; i < 5; ++i) {
      row_side += delta[i] * Polynomial(p.phi[i][j]);
      column_side += Polynomial(p.phi[j][i]) * delta[i];
    }
    if (!row_side.is_zero() || !column_side.is_zero()) return false;
  }
  return true;
}

inline bool verify_complexes(const Sequence& s, const SkewPresentation& p) {
  return permuted(s, p.form.perm) == p.sequence && verify_complexes(p);
}

// Each delta entry is homogeneous for deg x_k = sequence[k-1] and sits in the
// degree of the principal relation it encodes.
inline bool verify_homogeneity(const Sequence& s, const SkewPresentation& p) {
  const Quad b = permuted(s, p.form.perm);
  if (b != p.sequence) return false;
  const BresinskyForm& f = p.form;
  const std::array<Int, 5> expected{
      checked::mul(f.c[0], b[0]), checked::mul(f.c[2], b[2]), checked::mul(f.c[3], b[3]),
      checked::mul(f.c[1], b[1]), checked::add(checked::mul(f.d21, b[0]), checked::mul(f.d43, b[2]))};
  for (std::size_t k = 0; k < 5; ++k) {
    if (!p.delta[k].homogeneous(b)) return false;
    if (p.delta[k].plus.weighted_degree(b) != expected[k]) return false;
  }
  return true;
}

inline Quad translation_direction(const BresinskyForm& f, FamilyKind kind) {
  ensure(kind != FamilyKind::Diagonal, ErrorKind::PreconditionViolated, "expected kind U or V");
  return kind == FamilyKind::U ? translation_vector_u(f) : translation_vector_v(f);
}

// Presentation of s + t * u (kind U) or s + t * v (kind V), built from A_t or
// B_t and re-validated against the translated sequence.
inline SkewPresentation translated_presentation(const Sequence& s, const BresinskyForm& f, FamilyKind kind, Int t) {
  ensure(t >= 0, ErrorKind::PreconditionViolated, "t must be non-negative");
  Quad raw = translate(s, to_sequence_order(translation_direction(f, kind), f.perm), t);
  if (Int g = gcd_of(raw); g != 1) throw Error(ErrorKind::NotCoprime, "translated sequence", g);
  Sequence moved = Sequence::make(raw);
  BresinskyForm moved_form = family_form(f, kind, t);

  SkewPresentation p = build_presentation(moved, moved_form);
  auto check = [](bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::AssertionFailure, what);
  };
  Sequence certified = certify_bresinsky_matrix(moved_form.matrix());
  check(Quad{certified[0], certified[1], certified[2], certified[3]} == p.sequence,
        "translated matrix does not certify the translated sequence");
  check(verify_complexes(moved, p), "translated presentation is not a complex");
  check(verify_homogeneity(moved, p), "translated presentation is not homogeneous");
  return p;
}

// Closed-form growth of the socle degree along the U or V family.
inline Int socle_increment(const BresinskyForm& f, const Sequence& base, FamilyKind kind, Int t) {
  ensure(t >= 0, ErrorKind::PreconditionViolated, "t must be non-negative");
  const Quad a = permuted(base, f.perm);
  const Quad w = translation_direction(f, kind);
  using checked::add;
  using checked::mul;
  Int linear = add(add(mul(w[0], f.c[0]), mul(w[1], f.d32)), mul(w[3], f.c[3]));
  Int lead = kind == FamilyKind::U ? w[0] : w[3];
  linear = add(linear, kind == FamilyKind::U ? a[0] : a[3]);
  return add(mul(mul(t, t), lead), mul(t, linear));
}

}  // namespace gorcurve
