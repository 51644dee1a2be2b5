#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "json.hpp"

#include "gorcurve/gorenstein4.hpp"
#include "gorcurve/resolution.hpp"
#include "gorcurve/semigroup.hpp"

namespace gorcurve {

using nlohmann::json;

inline json quad_json(const Quad& q) { return json::array({q[0], q[1], q[2], q[3]}); }

inline Quad quad_from_json(const json& j) {
  ensure(j.is_array() && j.size() == 4, ErrorKind::WrongShape, "expected an array of four integers");
  return {j[0].get<Int>(), j[1].get<Int>(), j[2].get<Int>(), j[3].get<Int>()};
}

inline json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

// perm is written 1-based, like the generator labels a_1..a_4.
inline json form_json(const BresinskyForm& f) {
  return {{"c", quad_json(f.c)},
          {"d",
           {{"d13", f.d13}, {"d14", f.d14}, {"d21", f.d21}, {"d24", f.d24},
            {"d31", f.d31}, {"d32", f.d32}, {"d42", f.d42}, {"d43", f.d43}}},
          {"perm", json::array({f.perm[0] + 1, f.perm[1] + 1, f.perm[2] + 1, f.perm[3] + 1})}};
}

inline json presentation_json(const SkewPresentation& p) {
  json phi = json::array();
  for (const auto& row : p.phi) {
    json out_row = json::array();
    for (const auto& entry : row)
      out_row.push_back({{"sign", entry.sign}, {"exponents", quad_json(entry.mono.exps)}});
    phi.push_back(std::move(out_row));
  }
  json delta = json::array();
  for (const auto& b : p.delta) delta.push_back({{"plus", quad_json(b.plus.exps)}, {"minus", quad_json(b.minus.exps)}});
  const Perm& perm = p.form.perm;
  return {{"sequence", quad_json(p.sequence)},
          {"perm", json::array({perm[0] + 1, perm[1] + 1, perm[2] + 1, perm[3] + 1})},
          {"phi", std::move(phi)},
          {"delta", std::move(delta)},
          {"last_twist", p.last_twist},
          {"socle_degree", p.socle_degree}};
}

// Inverse of presentation_json. The form is read back off phi and delta.
inline SkewPresentation presentation_from_json(const json& j) {
  SkewPresentation p;
  p.sequence = quad_from_json(j.at("sequence"));
  const json& phi = j.at("phi");
  ensure(phi.is_array() && phi.size() == 5, ErrorKind::WrongShape, "phi must be 5x5");
  for (std::size_t i = 0; i < 5; ++i) {
    ensure(phi[i].is_array() && phi[i].size() == 5, ErrorKind::WrongShape, "phi must be 5x5");
    for (std::size_t k = 0; k < 5; ++k) {
      p.phi[i][k].sign = phi[i][k].at("sign").get<int>();
      p.phi[i][k].mono.exps = quad_from_json(phi[i][k].at("exponents"));
    }
  }
  const json& delta = j.at("delta");
  ensure(delta.is_array() && delta.size() == 5, ErrorKind::WrongShape, "delta must have five entries");
  for (std::size_t k = 0; k < 5; ++k) {
    p.delta[k].plus.exps = quad_from_json(delta[k].at("plus"));
    p.delta[k].minus.exps = quad_from_json(delta[k].at("minus"));
  }
  p.last_twist = j.at("last_twist").get<Int>();
  p.socle_degree = j.at("socle_degree").get<Int>();

  Quad perm1 = quad_from_json(j.at("perm"));
  BresinskyForm& f = p.form;
  for (std::size_t k = 0; k < 4; ++k) f.perm[k] = static_cast<std::size_t>(perm1[k] - 1);
  f.c = {p.delta[0].plus.exps[0], p.delta[3].plus.exps[1], p.delta[1].plus.exps[2], p.delta[2].plus.exps[3]};
  f.d32 = p.phi[0][2].mono.exps[1];
  f.d43 = p.phi[0][3].mono.exps[2];
  f.d24 = p.phi[0][4].mono.exps[3];
  f.d21 = p.phi[1][2].mono.exps[0];
  f.d14 = p.phi[1][3].mono.exps[3];
  f.d42 = p.phi[1][4].mono.exps[1];
  f.d13 = p.phi[2][4].mono.exps[2];
  f.d31 = p.phi[3][4].mono.exps[0];
  return p;
}

}  // namespace gorcurve
