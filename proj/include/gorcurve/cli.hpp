#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <regex>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gorcurve/error.hpp"
#include "gorcurve/gorenstein4.hpp"
#include "gorcurve/json_io.hpp"
#include "gorcurve/resolution.hpp"
#include "gorcurve/semigroup.hpp"

namespace gorcurve::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kPreconditionUnmet = 3, kInternalError = 4 };

// Default ceiling on classifications per scan invocation; --force lifts it.
inline constexpr Int kScanWorkCap = 1'000'000;

inline int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ZeroOrNegativeEntry:
    case ErrorKind::TooFewEntries:
    case ErrorKind::NotCoprime:
    case ErrorKind::NegativeQuery:
    case ErrorKind::Overflow:
    case ErrorKind::CapacityExceeded:
      return kInputError;
    case ErrorKind::PreconditionViolated:
      return kPreconditionUnmet;
    default:
      return kInternalError;
  }
}

namespace detail {

inline std::string quad_text(const Quad& q) {
  return "(" + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," + std::to_string(q[2]) + "," +
         std::to_string(q[3]) + ")";
}

inline std::string form_text(const BresinskyForm& f) {
  return "c=" + quad_text(f.c) + " d13=" + std::to_string(f.d13) + " d14=" + std::to_string(f.d14) +
         " d21=" + std::to_string(f.d21) + " d24=" + std::to_string(f.d24) + " d31=" + std::to_string(f.d31) +
         " d32=" + std::to_string(f.d32) + " d42=" + std::to_string(f.d42) + " d43=" + std::to_string(f.d43) +
         " perm=" + quad_text({static_cast<Int>(f.perm[0] + 1), static_cast<Int>(f.perm[1] + 1),
                               static_cast<Int>(f.perm[2] + 1), static_cast<Int>(f.perm[3] + 1)});
}

inline Sequence sequence_arg(const std::vector<Int>& raw) {
  if (raw.size() != 4) throw Error(ErrorKind::TooFewEntries, "expected exactly four integers");
  return Sequence::make(raw);
}

inline FamilyKind kind_arg(const std::string& s) {
  if (s == "u") return FamilyKind::U;
  if (s == "v") return FamilyKind::V;
  if (s == "diagonal") return FamilyKind::Diagonal;
  throw Error(ErrorKind::PreconditionViolated, "unknown kind " + s);
}

struct Range {
  Int first = 0;
  Int last = 0;
};

inline std::optional<Range> parse_range(const std::string& text) {
  static const std::regex pattern(R"(^(\d+)\.\.(\d+)$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) return std::nullopt;
  try {
    Range r{std::stoll(m[1].str()), std::stoll(m[2].str())};
    if (r.first > r.last) return std::nullopt;
    return r;
  } catch (const std::out_of_range&) {
    return std::nullopt;
  }
}

inline json analysis_json(const Sequence& s) {
  json out;
  out["sequence"] = json(std::vector<Int>(s.entries().begin(), s.entries().end()));
  Classification cls = classify(s);
  out["classification"] = std::string(to_string(cls.kind));
  // The rank of the lexicographic principal matrix can fall below 3, e.g. (10,14,15,21).
  out["principal_matrix"] = nullptr;
  try {
    out["principal_matrix"] = matrix_json(principal_matrix(s));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::AssertionFailure) throw;
    out["principal_matrix_note"] = e.what();
  }
  SemigroupProfile prof = profile(s);
  out["profile"] = {{"frobenius", prof.frobenius}, {"genus", prof.genus}, {"symmetric", prof.symmetric}};
  out["bresinsky"] = nullptr;
  out["u"] = nullptr;
  out["v"] = nullptr;
  out["period"] = nullptr;
  out["presentation"] = nullptr;
  if (cls.form) {
    const BresinskyForm& f = *cls.form;
    out["bresinsky"] = form_json(f);
    out["u"] = quad_json(to_sequence_order(translation_vector_u(f), f.perm));
    out["v"] = quad_json(to_sequence_order(translation_vector_v(f), f.perm));
    if (auto period = homogeneous_rows_period(s, f)) out["period"] = period->period;
    out["presentation"] = presentation_json(build_presentation(s, f));
  }
  return out;
}

inline void print_analysis(const json& a, std::ostream& out) {
  auto quad = [](const json& j) { return quad_text(quad_from_json(j)); };
  out << "sequence: " << quad(a["sequence"]) << '\n';
  out << "classification: " << a["classification"].get<std::string>() << '\n';
  if (a["principal_matrix"].is_null())
    out << "principal matrix: unavailable (" << a["principal_matrix_note"].get<std::string>() << ")\n";
  else
    out << "principal matrix:\n";
  for (const auto& row : a["principal_matrix"]) {
    out << "  [";
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j].get<Int>();
    out << "]\n";
  }
  const json& prof = a["profile"];
  out << "frobenius: " << prof["frobenius"].get<Int>() << '\n';
  out << "genus: " << prof["genus"].get<Int>() << '\n';
  out << "symmetric: " << (prof["symmetric"].get<bool>() ? "true" : "false") << '\n';
  if (a["bresinsky"].is_null()) {
    out << "bresinsky form: none\n";
    return;
  }
  const json& f = a["bresinsky"];
  const json& d = f["d"];
  out << "bresinsky form: c=" << quad(f["c"]);
  for (const char* key : {"d13", "d14", "d21", "d24", "d31", "d32", "d42", "d43"})
    out << ' ' << key << '=' << d[key].get<Int>();
  out << " perm=" << quad(f["perm"]) << '\n';
  out << "u: " << quad(a["u"]) << '\n';
  out << "v: " << quad(a["v"]) << '\n';
  out << "period: " << (a["period"].is_null() ? std::string("not applicable") : std::to_string(a["period"].get<Int>()))
      << '\n';
  out << "last twist: " << a["presentation"]["last_twist"].get<Int>() << '\n';
  out << "socle degree: " << a["presentation"]["socle_degree"].get<Int>() << '\n';
}

inline void print_presentation(const SkewPresentation& p, std::ostream& out) {
  out << "sequence (form order): " << quad_text(p.sequence) << '\n';
  out << "phi:\n";
  for (const auto& row : p.phi) {
    out << " ";
    for (const auto& e : row) {
      out << ' ';
      if (e.sign == 0) {
        out << '0';
      } else {
        if (e.sign < 0) out << '-';
        out << e.mono;
      }
    }
    out << '\n';
  }
  out << "delta:\n";
  for (const auto& b : p.delta) out << "  " << b << '\n';
  out << "last twist: " << p.last_twist << '\n';
  out << "socle degree: " << p.socle_degree << '\n';
}

inline std::string member_class(const FamilyMember& m) {
  if (m.inconsistent) return "Inconsistent";
  return m.classification ? std::string(to_string(*m.classification)) : std::string("Skipped");
}

inline void print_family(const TranslationFamily& fam, bool as_json, std::ostream& out) {
  if (as_json) {
    json members = json::array();
    for (const auto& m : fam.members) {
      json row{{"t", m.t}, {"sequence", quad_json(m.sequence)}, {"gcd", m.gcd}};
      row["classification"] = member_class(m);
      row["matrix_certified"] = m.matrix_certified ? json(*m.matrix_certified) : json(nullptr);
      row["finding"] = m.finding;
      members.push_back(std::move(row));
    }
    json doc{{"base", json(std::vector<Int>(fam.base.entries().begin(), fam.base.entries().end()))},
             {"kind", std::string(to_string(fam.kind))},
             {"direction", quad_json(fam.direction)},
             {"bresinsky", form_json(fam.form)},
             {"members", std::move(members)}};
    out << doc.dump(2) << '\n';
    return;
  }
  out << "t,a1,a2,a3,a4,gcd,classification,matrix_certified\n";
  for (const auto& m : fam.members) {
    out << m.t;
    for (Int v : m.sequence) out << ',' << v;
    out << ',' << m.gcd << ',' << member_class(m) << ',';
    if (m.matrix_certified) out << (*m.matrix_certified ? "true" : "false");
    out << '\n';
  }
}

inline void print_scan(const std::vector<ScanRow>& rows, bool as_json, std::ostream& out) {
  if (as_json) {
    json doc = json::array();
    for (const auto& r : rows)
      doc.push_back({{"t", r.t},
                     {"sequence", quad_json(r.sequence)},
                     {"gcd", r.gcd},
                     {"classification", std::string(to_string(r.classification))}});
    out << doc.dump(2) << '\n';
    return;
  }
  out << "t,a1,a2,a3,a4,gcd,classification\n";
  for (const auto& r : rows) {
    out << r.t;
    for (Int v : r.sequence) out << ',' << v;
    out << ',' << r.gcd << ',' << to_string(r.classification) << '\n';
  }
}

}  // namespace detail

// Runs one CLI invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gorenstein monomial curves in A^4: classification, translation families, scans"};
  app.require_subcommand(1);

  std::vector<Int> seq;
  bool as_json = false;

  auto* analyze = app.add_subcommand("analyze", "classify a sequence and print its invariants");
  analyze->add_option("sequence", seq, "four positive integers")->required()->expected(4);
  analyze->add_flag("--json", as_json, "emit the full record as JSON");

  std::string kind_text = "u";
  Int t_max = 0;
  std::size_t workers = 1;
  auto* family = app.add_subcommand("family", "translate a Gorenstein non-CI sequence along u, v or the diagonal");
  family->add_option("sequence", seq, "four positive integers")->required()->expected(4);
  family->add_option("--kind", kind_text, "u | v | diagonal")->check(CLI::IsMember({"u", "v", "diagonal"}));
  family->add_option("--tmax", t_max, "largest t")->required()->check(CLI::NonNegativeNumber);
  family->add_option("--parallel", workers, "worker threads")->check(CLI::PositiveNumber);
  family->add_flag("--json", as_json, "emit JSON instead of CSV");

  std::vector<Int> step;
  std::string trange;
  bool force = false;
  auto* scan = app.add_subcommand("scan", "classify s + t * step over a range of t");
  scan->add_option("sequence", seq, "four positive integers")->required()->expected(4);
  scan->add_option("--step", step, "four non-negative integers")->required()->expected(4);
  scan->add_option("--trange", trange, "A..B")->required();
  scan->add_option("--parallel", workers, "worker threads")->check(CLI::PositiveNumber);
  scan->add_flag("--force", force, "allow more than 10^6 classifications");
  scan->add_flag("--json", as_json, "emit JSON instead of CSV");

  std::string present_kind;
  Int present_t = 0;
  auto* present = app.add_subcommand("present", "print the pfaffian presentation of I(a)");
  present->add_option("sequence", seq, "four positive integers")->required()->expected(4);
  auto* present_kind_opt =
      present->add_option("--kind", present_kind, "translate along u or v first")->check(CLI::IsMember({"u", "v"}));
  present->add_option("--t", present_t, "translation parameter")
      ->check(CLI::NonNegativeNumber)
      ->needs(present_kind_opt);
  present->add_flag("--json", as_json, "emit JSON");

  std::vector<std::string> argv_storage{"gorcurve"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (analyze->parsed()) {
      json a = detail::analysis_json(detail::sequence_arg(seq));
      if (as_json)
        out << a.dump(2) << '\n';
      else
        detail::print_analysis(a, out);
      return kOk;
    }

    if (family->parsed()) {
      Sequence s = detail::sequence_arg(seq);
      TranslationFamily fam = generate_family(s, detail::kind_arg(kind_text), t_max, workers);
      detail::print_family(fam, as_json, out);
      for (const auto& m : fam.findings())
        err << "FINDING: t=" << m.t << " sequence " << detail::quad_text(m.sequence)
            << " is coprime but not certified Gorenstein non-CI\n";
      return kOk;
    }

    if (scan->parsed()) {
      Sequence s = detail::sequence_arg(seq);
      auto range = detail::parse_range(trange);
      if (!range) {
        err << "error: --trange must look like A..B with 0 <= A <= B\n";
        return kInputError;
      }
      for (Int v : step) {
        if (v < 0) {
          err << "error: --step entries must be non-negative\n";
          return kInputError;
        }
      }
      if (!force && range->last - range->first + 1 > kScanWorkCap) {
        err << "error: range exceeds " << kScanWorkCap << " classifications; pass --force to run it anyway\n";
        return kInputError;
      }
      auto rows = scan_translations(s, Quad{step[0], step[1], step[2], step[3]}, range->first, range->last, workers);
      detail::print_scan(rows, as_json, out);
      return kOk;
    }

    if (present->parsed()) {
      Sequence s = detail::sequence_arg(seq);
      Classification cls = classify(s);
      if (cls.kind != CurveClass::GorensteinNonCI) {
        err << "error: " << s << " is " << to_string(cls.kind) << ", not Gorenstein non-CI\n";
        return kPreconditionUnmet;
      }
      SkewPresentation p = present_kind.empty()
                               ? build_presentation(s, *cls.form)
                               : translated_presentation(s, *cls.form, detail::kind_arg(present_kind), present_t);
      if (as_json)
        out << presentation_json(p).dump(2) << '\n';
      else
        detail::print_presentation(p, out);
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kInputError;
}

}  // namespace gorcurve::cli
