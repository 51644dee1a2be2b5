// Acceptance suite: one PASS/FAIL line per criterion, with wall-clock times.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gorcurve/gorcurve.hpp"
#include "gorcurve/oracle.hpp"
#include "gorcurve/parallel.hpp"

using namespace gorcurve;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::string detail;
};

struct Detected {
  Sequence s;
  BresinskyForm form;
};

constexpr Int kUniverseMax = 60;

std::size_t workers() { return std::max(1u, std::thread::hardware_concurrency()); }

// Criterion 5 produces the Gorenstein non-CI set that criteria 6-9 reuse.
std::vector<Detected> g_gorenstein;
bool g_universe_ready = false;

int run_criterion(int number, const std::string& title, double limit_seconds, const std::function<Verdict()>& body) {
  auto start = Clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0 && seconds > limit_seconds) {
    v.pass = false;
    v.detail += (v.detail.empty() ? "" : "; ") + std::string("time limit exceeded");
  }
  std::ostringstream line;
  line << (v.pass ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " [" << seconds << " s";
  if (limit_seconds > 0) line << ", limit " << limit_seconds << " s";
  line << "]";
  if (!v.detail.empty()) line << " " << v.detail;
  std::cout << line.str() << std::endl;
  return v.pass ? 0 : 1;
}

Verdict criterion_1() {
  const IntMatrix expected{{-4, 0, 1, 1}, {1, -4, 0, 3}, {3, 1, -2, 0}, {0, 3, 1, -4}};
  auto s = Sequence::make({11, 17, 25, 19});
  auto start = Clock::now();
  IntMatrix d = principal_matrix(s);
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  if (d != expected) return {false, "matrix differs from the expected one"};
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<Int> others;
    for (std::size_t j = 0; j < 4; ++j)
      if (j != i) others.push_back(s[j]);
    int count = 0;
    for_each_representation(others, -d(i, i) * s[i], [&](const std::vector<Int>&) {
      ++count;
      return true;
    });
    if (count != 1) return {false, "row " + std::to_string(i + 1) + " has " + std::to_string(count) + " representations"};
  }
  if (ms >= 1.0) return {false, "principal_matrix took " + std::to_string(ms) + " ms"};
  return {true, "principal_matrix in " + std::to_string(ms) + " ms"};
}

Verdict criterion_2() {
  const IntMatrix m{{-4, 0, 1, 1}, {1, -5, 4, 0}, {0, 4, -5, 1}, {3, 1, 0, -2}};
  Sequence s = inverse_principal(m);
  if (s != Sequence::make({7, 11, 12, 16})) return {false, "inverse_principal(M) is not (7,11,12,16)"};
  if (is_principal(m)) return {false, "M reported principal"};
  std::vector<Int> raw{7, 11, 12, 16};
  if (oracle::r(raw, 1) != 3) return {false, "oracle r_2 != 3"};
  if (principal_r(s, 1) != 3) return {false, "principal_r r_2 != 3"};
  return {};
}

Verdict criterion_3() {
  auto base = Sequence::make({11, 17, 25, 19});
  auto p = homogeneous_rows_period(base);
  if (!p) return {false, "period not applicable"};
  if (p->b != 7 || p->period != 14) return {false, "b=" + std::to_string(p->b) + " period=" + std::to_string(p->period)};
  for (Int t = 1; t <= 20; ++t) {
    auto s = Sequence::make({11 + 14 * t, 17 + 14 * t, 25 + 14 * t, 19 + 14 * t});
    if (classify(s).kind != CurveClass::GorensteinNonCI) return {false, "t=" + std::to_string(t) + " not GorensteinNonCI"};
  }
  try {
    (void)Sequence::make(translate(base, {1, 1, 1, 1}, 7));
    return {false, "shift by 7 accepted"};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotCoprime || e.value() != 2) return {false, "shift by 7 rejected for the wrong reason"};
  }
  return {};
}

Verdict criterion_4() {
  auto rows = scan_translations(Sequence::make({43, 67, 49, 83}), {1, 1, 1, 1}, 1, 83, workers());
  std::vector<Int> hits;
  for (const auto& r : rows)
    if (r.classification == CurveClass::GorensteinNonCI) hits.push_back(r.t);
  if (hits != std::vector<Int>{15, 49, 83}) {
    std::string got;
    for (Int t : hits) got += " " + std::to_string(t);
    return {false, "hits:" + got};
  }
  return {};
}

Verdict criterion_5() {
  std::vector<std::array<Int, 4>> universe;
  for (Int a = 2; a <= kUniverseMax; ++a)
    for (Int b = a; b <= kUniverseMax; ++b)
      for (Int c = b; c <= kUniverseMax; ++c)
        for (Int d = c; d <= kUniverseMax; ++d) {
          std::array<Int, 4> q{a, b, c, d};
          if (gcd_of(q) == 1) universe.push_back(q);
        }

  struct Row {
    bool disagree = false;
    std::optional<BresinskyForm> form;
  };
  auto rows = parallel_map(universe.size(), workers(), [&](std::size_t i) {
    const auto& q = universe[i];
    auto s = Sequence::make(q);
    Row row;
    row.form = detect_bresinsky_form(s);
    bool expected = oracle::symmetric(q) && !oracle::complete_intersection(q);
    row.disagree = row.form.has_value() != expected;
    return row;
  });

  std::size_t disagreements = 0;
  std::string first;
  g_gorenstein.clear();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].disagree) {
      if (disagreements++ == 0) {
        std::ostringstream os;
        os << " first " << Sequence::make(universe[i]);
        first = os.str();
      }
    } else if (rows[i].form) {
      g_gorenstein.push_back({Sequence::make(universe[i]), *rows[i].form});
    }
  }
  g_universe_ready = true;
  std::string summary = std::to_string(universe.size()) + " sequences, " + std::to_string(g_gorenstein.size()) +
                        " Gorenstein non-CI, " + std::to_string(disagreements) + " disagreements";
  if (disagreements) return {false, summary + first};
  return {true, summary};
}

Verdict require_universe() {
  if (!g_universe_ready) return {false, "criterion 5 did not produce its Gorenstein non-CI set"};
  if (g_gorenstein.empty()) return {false, "empty Gorenstein non-CI set"};
  return {};
}

Verdict criterion_6() {
  if (auto v = require_universe(); !v.pass) return v;
  auto counts = parallel_map(g_gorenstein.size(), workers(), [&](std::size_t i) {
    std::array<std::size_t, 2> out{0, 0};  // checked members, findings
    for (FamilyKind kind : {FamilyKind::U, FamilyKind::V}) {
      auto fam = generate_family(g_gorenstein[i].s, kind, 10);
      for (const auto& m : fam.members)
        if (!m.skipped()) ++out[0];
      out[1] += fam.findings().size();
    }
    return out;
  });
  std::size_t checked = 0, findings = 0;
  for (const auto& c : counts) {
    checked += c[0];
    findings += c[1];
  }
  std::string summary = std::to_string(checked) + " coprime members, " + std::to_string(findings) + " findings";
  return {findings == 0, summary};
}

Verdict criterion_7() {
  if (auto v = require_universe(); !v.pass) return v;
  auto failures = parallel_map(g_gorenstein.size(), workers(), [&](std::size_t i) -> std::string {
    const auto& [s, f] = g_gorenstein[i];
    auto p = build_presentation(s, f);
    std::array<bool, 5> used{};
    for (std::size_t k = 0; k < 5; ++k) {
      Binomial pf = pfaffian(p.phi, k);
      bool matched = false;
      for (std::size_t j = 0; j < 5 && !matched; ++j)
        if (!used[j] && pf.equal_up_to_sign(p.delta[j])) used[j] = matched = true;
      if (!matched) return "pfaffian mismatch";
    }
    if (!verify_complexes(s, p) || !verify_homogeneity(s, p)) return "base presentation check failed";
    for (FamilyKind kind : {FamilyKind::U, FamilyKind::V})
      for (Int t = 1; t <= 5; ++t) {
        Quad moved = translate(s, to_sequence_order(translation_direction(f, kind), f.perm), t);
        if (gcd_of(moved) != 1) continue;
        // Re-validates complexes and homogeneity internally and throws on failure.
        auto q = translated_presentation(s, f, kind, t);
        if (!verify_complexes(Sequence::make(moved), q)) return "translated complex check failed";
      }
    return {};
  });
  for (std::size_t i = 0; i < failures.size(); ++i)
    if (!failures[i].empty()) {
      std::ostringstream os;
      os << failures[i] << " at " << g_gorenstein[i].s;
      return {false, os.str()};
    }
  return {true, std::to_string(g_gorenstein.size()) + " forms"};
}

Verdict criterion_8() {
  auto example = Sequence::make({11, 17, 25, 19});
  auto p = build_presentation(example, *detect_bresinsky_form(example));
  if (p.last_twist != 137 || p.last_twist - example.sum() != 65 || oracle::frobenius(example.entries()) != 65)
    return {false, "example identity 137 - 72 = 65 fails"};
  if (auto v = require_universe(); !v.pass) return v;
  auto bad = parallel_map(g_gorenstein.size(), workers(), [&](std::size_t i) {
    const auto& [s, f] = g_gorenstein[i];
    return build_presentation(s, f).last_twist - s.sum() != oracle::frobenius(s.entries());
  });
  std::size_t failures = static_cast<std::size_t>(std::count(bad.begin(), bad.end(), true));
  return {failures == 0, std::to_string(g_gorenstein.size()) + " sequences, " + std::to_string(failures) + " mismatches"};
}

Verdict criterion_9() {
  if (auto v = require_universe(); !v.pass) return v;
  std::vector<std::size_t> idx(g_gorenstein.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::mt19937_64 rng(9);
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(std::min<std::size_t>(100, idx.size()));
  std::size_t compared = 0;
  for (std::size_t i : idx) {
    const auto& [s, f] = g_gorenstein[i];
    const Int base = build_presentation(s, f).socle_degree;
    for (FamilyKind kind : {FamilyKind::U, FamilyKind::V})
      for (Int t = 0; t <= 10; ++t) {
        Quad moved = translate(s, to_sequence_order(translation_direction(f, kind), f.perm), t);
        Int recomputed;
        if (gcd_of(moved) == 1) {
          recomputed = translated_presentation(s, f, kind, t).socle_degree;
        } else {
          // No presentation exists; evaluate the socle degree of A_t / B_t directly.
          BresinskyForm g = family_form(f, kind, t);
          Quad b = permuted(s, f.perm);
          Quad w = translation_direction(f, kind);
          for (std::size_t k = 0; k < 4; ++k) b[k] += t * w[k];
          recomputed = b[0] * g.c[0] + b[3] * g.c[3] + b[1] * g.d32 - 3;
        }
        if (socle_increment(f, s, kind, t) != recomputed - base) {
          std::ostringstream os;
          os << "mismatch at " << s << " kind " << to_string(kind) << " t=" << t;
          return {false, os.str()};
        }
        ++compared;
      }
  }
  return {true, std::to_string(idx.size()) + " forms, " + std::to_string(compared) + " comparisons"};
}

std::string capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

Verdict criterion_10() {
  const std::string cli = GORCURVE_CLI_PATH;
  const std::vector<std::string> commands{
      "family 11 17 25 19 --kind diagonal --tmax 20",
      "scan 11 17 25 19 --step 14 14 14 14 --trange 1..20",
      "scan 43 67 49 83 --step 1 1 1 1 --trange 1..83",
      "scan 43 67 49 83 --step 1 1 1 1 --trange 1..83 --json",
  };
  std::size_t runs = 0;
  for (const auto& cmd : commands) {
    int status = 0;
    std::string reference = capture("'" + cli + "' " + cmd, status);
    if (status != 0 || reference.empty()) return {false, "`" + cmd + "` failed"};
    for (const char* extra : {"", " --parallel 1", " --parallel 2", " --parallel 4", " --parallel 8"}) {
      std::string again = capture("'" + cli + "' " + cmd + extra, status);
      ++runs;
      if (status != 0 || again != reference) return {false, "`" + cmd + extra + "` differs"};
    }
  }
  return {true, std::to_string(runs) + " repeated invocations identical"};
}

}  // namespace

int main() {
  int failures = 0;
  failures += run_criterion(1, "golden principal matrix of (11,17,25,19)", 0, criterion_1);
  failures += run_criterion(2, "inverse of the non-principal matrix M and r_2 = 3", 0, criterion_2);
  failures += run_criterion(3, "period 14 for (11,17,25,19) and its diagonal translates", 5, criterion_3);
  failures += run_criterion(4, "scan of (43,67,49,83) + t(1,1,1,1) hits exactly 15, 49, 83", 60, criterion_4);
  failures += run_criterion(5, "detector agrees with symmetric and not CI on entries <= 60", 600, criterion_5);
  failures += run_criterion(6, "u- and v-families stay Gorenstein non-CI for t <= 10", 0, criterion_6);
  failures += run_criterion(7, "pfaffians, complexes and homogeneity, base and t <= 5", 0, criterion_7);
  failures += run_criterion(8, "last twist minus weights equals the Frobenius number", 0, criterion_8);
  failures += run_criterion(9, "socle increments match recomputed differences", 0, criterion_9);
  failures += run_criterion(10, "CLI output is byte-identical across runs and --parallel", 0, criterion_10);
  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
