#pragma once

// Command-line front end. run() is separate from main() so tests can drive it
// with in-memory streams.

#include "mtrank/mtrank.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtrank::cli {

using Json = nlohmann::ordered_json;

enum class Status { ok, violation, error };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::violation: return "violation";
    case Status::error: return "error";
  }
  return "error";
}

inline int exit_code(Status s) {
  switch (s) {
    case Status::ok: return 0;
    case Status::violation: return 1;
    case Status::error: return 2;
  }
  return 2;
}

/// One command's machine-readable result plus its text rendering. BigNat
/// values go into JSON as decimal strings.
struct OutputRecord {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  Status status = Status::ok;

  std::string detail;   // tables, suppressed by --quiet
  std::string summary;  // always printed in text mode

  Json to_json() const {
    Json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["results"] = results;
    j["status"] = to_string(status);
    return j;
  }
};

/// Thrown for bad user input; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::string fmt_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline unsigned parse_small(const std::string& text, const char* what, unsigned max_value) {
  BigNat v;
  try {
    v = parse_nat(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string("malformed integer for ") + what + ": '" + text + "'");
  }
  if (v > max_value) throw UsageError(std::string(what) + " exceeds supported maximum " + std::to_string(max_value));
  return v.convert_to<unsigned>();
}

inline BigNat parse_big(const std::string& text, const char* what) {
  try {
    return parse_nat(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string("malformed integer for ") + what + ": '" + text + "'");
  }
}

inline SimpleType parse_type(const std::string& label) {
  try {
    return parse_simple_type(label);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const auto parse_int = [&](std::string s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
      negative = s.front() == '-';
      s.erase(0, 1);
    }
    BigInt v = parse_big(s, "weight coordinate");
    return negative ? BigInt(-v) : v;
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw UsageError("zero denominator in weight coordinate");
  return Rational(parse_int(text.substr(0, slash)), den);
}

inline std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (!text.empty() && text.back() == ',') parts.emplace_back();
  return parts;
}

inline Json weight_json(const Weight& w) {
  Json a = Json::array();
  for (const auto& c : w.coords) a.push_back(mtrank::to_string(c));
  return a;
}

inline Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

inline std::string matrix_text(const IntMatrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::string cell = m(i, j).str();
      s += std::string(cell.size() < 3 ? 3 - cell.size() : 0, ' ') + cell;
    }
    s += "\n";
  }
  return s;
}

inline std::string divisors_text(const QuotientInvariants& q) {
  std::string s = "(";
  for (std::size_t i = 0; i < q.elementary_divisors.size(); ++i)
    s += (i ? "," : "") + q.elementary_divisors[i].str();
  return s + ")";
}

inline Json divisors_json(const QuotientInvariants& q) {
  Json a = Json::array();
  for (const auto& d : q.elementary_divisors) a.push_back(d.str());
  return a;
}

inline Json bound_json(const BoundReport& b) {
  return Json{{"input_dimension", b.input_dimension.str()},
              {"bound_kind", mtrank::to_string(b.bound_kind)},
              {"min_rank", b.min_rank},
              {"witness_lhs", b.witness_lhs.str()},
              {"witness_rhs", b.witness_rhs.str()},
              {"equality", b.equality}};
}

inline std::string bound_text(const BoundReport& b) {
  return std::string(mtrank::to_string(b.bound_kind)) + " bound for g = " + b.input_dimension.str() +
         ": min_rank " + std::to_string(b.min_rank) + ", witness " + b.witness_lhs.str() + " >= " +
         b.witness_rhs.str() + ", equality " + (b.equality ? "true" : "false") + "\n";
}

inline Json example_json(const ExampleReport& r) {
  Json notes = Json::array();
  for (const auto& n : r.notes) notes.push_back({{"name", n.name}, {"passed", n.passed}, {"value", n.value}});
  return Json{{"example_id", mtrank::to_string(r.example_id)},
              {"n", r.n},
              {"abelian_dim", r.abelian_dim.str()},
              {"mt_rank", r.mt_rank},
              {"shape", r.shape.name()},
              {"bound_value_equalled", r.bound_value_equalled},
              {"notes", notes}};
}

inline std::string example_row(const ExampleReport& r) {
  std::string failed;
  for (const auto& n : r.notes)
    if (!n.passed) failed += (failed.empty() ? "" : ",") + n.name;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-19s %4u %32s %7u %9s  %s\n", mtrank::to_string(r.example_id), r.n,
                r.abelian_dim.str().c_str(), r.mt_rank, r.bound_value_equalled ? "yes" : "no",
                failed.empty() ? "ok" : ("FAILED " + failed).c_str());
  return buf;
}

inline const char* example_header() {
  return "example                n                      abelian_dim mt_rank  equality  checks\n";
}

// Ranges and sweep limits accepted from the command line.
inline constexpr unsigned kMaxLandauIndex = 100000;
inline constexpr unsigned kMaxOracleIndex = 60;
inline constexpr unsigned kMaxExampleN = 400;
inline constexpr unsigned kMaxRootRank = 64;

}  // namespace detail

inline OutputRecord cmd_landau(const std::string& kind, const std::string& n_text) {
  const unsigned n = detail::parse_small(n_text, "n", detail::kMaxLandauIndex);
  OutputRecord rec{"landau"};
  rec.inputs = {{"function", kind}, {"n", n}};
  const BigNat v = kind == "g" ? landau_g(n) : landau_g1(n);
  rec.results = {{"value", v.str()}};
  rec.summary = v.str() + "\n";
  return rec;
}

inline OutputRecord cmd_alpha(unsigned from, unsigned to, bool envelope) {
  if (from < 2) throw UsageError("--from must be at least 2");
  if (to < from) throw UsageError("--to must be at least --from");
  if (to > detail::kMaxLandauIndex) throw UsageError("--to exceeds supported maximum");
  OutputRecord rec{"alpha"};
  rec.inputs = {{"from", from}, {"to", to}, {"envelope", envelope}};
  const LandauTable table(to);
  Json rows = Json::array();
  std::size_t below_two = 0, below_envelope = 0, envelope_rows = 0;
  rec.detail = envelope ? "     n                g1           alpha        envelope\n"
                        : "     n                g1           alpha\n";
  for (unsigned n = from; n <= to; ++n) {
    const AlphaValue a = alpha(table, n);
    Json row = {{"n", n}, {"g1", table.g1(n).str()}, {"alpha", detail::fmt_real(a.alpha)}};
    if (a.alpha < 2) ++below_two;
    char buf[160];
    if (envelope) {
      row["envelope"] = detail::fmt_real(a.envelope);
      if (n >= 9) {
        ++envelope_rows;
        if (a.alpha < a.envelope && a.envelope < 2) ++below_envelope;
      }
      std::snprintf(buf, sizeof buf, "%6u %17s %15s %15s\n", n, table.g1(n).str().c_str(),
                    detail::fmt_real(a.alpha).c_str(), detail::fmt_real(a.envelope).c_str());
    } else {
      std::snprintf(buf, sizeof buf, "%6u %17s %15s\n", n, table.g1(n).str().c_str(), detail::fmt_real(a.alpha).c_str());
    }
    rec.detail += buf;
    rows.push_back(row);
  }
  const std::size_t count = to - from + 1;
  rec.results = {{"rows", rows}, {"all_below_two", below_two == count}};
  rec.summary = std::to_string(below_two) + "/" + std::to_string(count) + " rows with alpha < 2\n";
  if (envelope) {
    rec.results["all_below_envelope"] = below_envelope == envelope_rows;
    rec.summary += std::to_string(below_envelope) + "/" + std::to_string(envelope_rows) +
                   " rows (n >= 9) with alpha < envelope < 2\n";
  }
  if (below_two != count || (envelope && below_envelope != envelope_rows)) rec.status = Status::violation;
  return rec;
}

inline OutputRecord cmd_bound(const std::string& commutative, const std::string& general, const std::string& product,
                              const std::vector<std::string>& triple) {
  const int selected = !commutative.empty() + !general.empty() + !product.empty() + !triple.empty();
  if (selected != 1) throw UsageError("bound needs exactly one of --commutative, --general, --product, --triple");
  OutputRecord rec{"bound"};
  if (!commutative.empty() || !general.empty()) {
    const bool is_comm = !commutative.empty();
    const BigNat g = detail::parse_big(is_comm ? commutative : general, "g");
    if (g < 1) throw UsageError("g must be at least 1");
    rec.inputs = {{"kind", is_comm ? "commutative" : "general"}, {"g", g.str()}};
    const BoundReport b = is_comm ? commutative_rank_bound(g) : general_rank_bound(g);
    rec.results = detail::bound_json(b);
    rec.summary = detail::bound_text(b);
  } else if (!product.empty()) {
    std::vector<BigNat> dims;
    Json dims_json = Json::array();
    for (const auto& part : detail::split_commas(product)) {
      BigNat d = detail::parse_big(part, "dimension");
      if (d < 1) throw UsageError("each dimension must be at least 1");
      dims_json.push_back(d.str());
      dims.push_back(std::move(d));
    }
    rec.inputs = {{"kind", "product"}, {"dims", dims_json}};
    const BoundReport b = product_rank_bound(dims);
    rec.results = detail::bound_json(b);
    rec.summary = "sum of dimensions " + b.input_dimension.str() + "\n" + detail::bound_text(b);
  } else {
    const unsigned rank = detail::parse_small(triple.at(0), "rank", 1u << 20);
    const BigNat u = detail::parse_big(triple.at(1), "u");
    const BigNat dim = detail::parse_big(triple.at(2), "dim");
    if (rank < 1 || u < 1 || dim < 1) throw UsageError("rank, u and dim must be at least 1");
    rec.inputs = {{"kind", "triple"}, {"rank", rank}, {"u", u.str()}, {"dim", dim.str()}};
    const bool comm = triple_commutative_check(rank, dim);
    const bool noncomm = triple_noncommutative_check(rank, u, dim);
    const BigNat lhs = u * pow2(rank - 1);
    rec.results = {{"triple_commutative", comm},
                   {"triple_noncommutative", noncomm},
                   {"witness_lhs", lhs.str()},
                   {"witness_rhs", dim.str()},
                   {"equality", lhs == dim}};
    rec.summary = "u * 2^(rank-1) = " + lhs.str() + (noncomm ? " >= " : " < ") + dim.str() +
                  "\ntriple_commutative " + (comm ? "true" : "false") + ", triple_noncommutative " +
                  (noncomm ? "true" : "false") + "\n";
  }
  return rec;
}

inline OutputRecord cmd_exponent(const std::string& g_text, const std::string& n_text) {
  const BigNat g = detail::parse_big(g_text, "g");
  const unsigned n = detail::parse_small(n_text, "n", std::numeric_limits<unsigned>::max());
  if (g < 1 || n < 1) throw UsageError("g and n must be at least 1");
  OutputRecord rec{"exponent"};
  rec.inputs = {{"g", g.str()}, {"n", n}};
  const DivisionFieldExponent e = division_field_exponent(g, n);
  rec.results = {{"exponent", detail::fmt_real(e.value)}};
  if (e.exact) rec.results["exact"] = mtrank::to_string(*e.exact);
  rec.summary = detail::fmt_real(e.value) + (e.exact ? " (exact " + mtrank::to_string(*e.exact) + ")" : "") + "\n";
  return rec;
}

inline OutputRecord cmd_rootsys(const std::string& action, const std::string& label, int index,
                                const std::string& weight_text) {
  const SimpleType t = detail::parse_type(label);
  if (t.rank() > detail::kMaxRootRank) throw UsageError("rank exceeds supported maximum");
  OutputRecord rec{"rootsys"};
  rec.inputs = {{"action", action}, {"type", t.name()}};
  if (action == "cartan") {
    const IntMatrix m = cartan_matrix(t);
    rec.results = {{"cartan_matrix", detail::matrix_json(m)}};
    rec.summary = detail::matrix_text(m);
  } else if (action == "fundamental-group") {
    const QuotientInvariants q = fundamental_group_invariants(t);
    rec.results = {{"elementary_divisors", detail::divisors_json(q)},
                   {"order", q.torsion_order().str()},
                   {"exponent", q.torsion_exponent().str()}};
    rec.summary = "invariants " + detail::divisors_text(q) + ", order " + q.torsion_order().str() + ", exponent " +
                  q.torsion_exponent().str() + "\n";
  } else if (action == "minuscule") {
    Json reps = Json::array();
    for (const auto& r : minuscule_catalog(t)) {
      const Weight hw = highest_weight(r);
      reps.push_back({{"fundamental_weight_index", r.fundamental_weight_index},
                      {"dimension", r.dimension.str()},
                      {"highest_weight", detail::weight_json(hw)}});
      rec.summary += "w" + std::to_string(r.fundamental_weight_index) + "  dim " + r.dimension.str() +
                     "  highest weight " + to_string(hw) + "\n";
    }
    if (reps.empty()) rec.summary = "no minuscule weights\n";
    rec.results = {{"representations", reps}};
  } else {
    // orbit
    std::vector<std::pair<std::string, Weight>> seeds;
    if (!weight_text.empty()) {
      Weight w;
      for (const auto& c : detail::split_commas(weight_text)) w.coords.push_back(detail::parse_rational(c));
      seeds.emplace_back("weight", std::move(w));
      rec.inputs["weight"] = weight_text;
    } else if (index > 0) {
      if (static_cast<unsigned>(index) > t.rank()) throw UsageError("fundamental weight index out of range");
      seeds.emplace_back("w" + std::to_string(index), fundamental_weights(t).at(index - 1));
      rec.inputs["index"] = index;
    } else {
      for (const auto& r : minuscule_catalog(t))
        seeds.emplace_back("w" + std::to_string(r.fundamental_weight_index), highest_weight(r));
    }
    Json orbits = Json::array();
    for (const auto& [name, w] : seeds) {
      std::vector<Weight> orbit;
      try {
        orbit = weyl_orbit(t, w, 1u << 20);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      Json pts = Json::array();
      rec.detail += name + " " + to_string(w) + ": orbit size " + std::to_string(orbit.size()) + "\n";
      for (const auto& p : orbit) {
        pts.push_back(detail::weight_json(p));
        rec.detail += "  " + to_string(p) + "\n";
      }
      orbits.push_back({{"seed", name}, {"highest_weight", detail::weight_json(w)}, {"size", orbit.size()}, {"weights", pts}});
      rec.summary += name + ": orbit size " + std::to_string(orbit.size()) + "\n";
    }
    if (seeds.empty()) rec.summary = "no minuscule weights; pass --index or --weight\n";
    rec.results = {{"orbits", orbits}};
  }
  return rec;
}

inline OutputRecord cmd_snf(std::istream& in) {
  Json parsed;
  try {
    parsed = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("matrix is not valid JSON: ") + e.what());
  }
  if (!parsed.is_array() || parsed.empty()) throw UsageError("matrix must be a nonempty JSON array of arrays");
  std::vector<std::vector<BigInt>> rows;
  for (const auto& row : parsed) {
    if (!row.is_array() || row.empty()) throw UsageError("matrix rows must be nonempty arrays");
    std::vector<BigInt> r;
    for (const auto& v : row) {
      if (v.is_number_integer()) {
        r.emplace_back(v.get<long long>());
      } else if (v.is_string()) {
        std::string s = v.get<std::string>();
        const bool negative = !s.empty() && s.front() == '-';
        BigInt x = detail::parse_big(negative ? s.substr(1) : s, "matrix entry");
        r.push_back(negative ? BigInt(-x) : x);
      } else {
        throw UsageError("matrix entries must be integers");
      }
    }
    if (!rows.empty() && r.size() != rows.front().size()) throw UsageError("ragged matrix rows");
    rows.push_back(std::move(r));
  }
  const IntMatrix m = IntMatrix::from_rows(rows);
  const QuotientInvariants q = smith_normal_form(m);
  OutputRecord rec{"snf"};
  rec.inputs = {{"matrix", detail::matrix_json(m)}};
  rec.results = {{"elementary_divisors", detail::divisors_json(q)},
                 {"free_rank", q.free_rank},
                 {"exponent", q.free_rank == 0 ? Json(q.torsion_exponent().str()) : Json(nullptr)}};
  rec.summary = "elementary divisors " + detail::divisors_text(q) + ", free rank " + std::to_string(q.free_rank) + "\n";
  return rec;
}

namespace detail {

inline std::vector<unsigned> admissible_example_ns(ExampleId id, unsigned max_n) {
  std::vector<unsigned> ns;
  for (unsigned n = 1; n <= max_n; ++n) {
    switch (id) {
      case ExampleId::cm:
        if (n >= 2) ns.push_back(n);
        break;
      case ExampleId::spin:
        if (n % 4 == 1 || n % 4 == 2) ns.push_back(n);
        break;
      case ExampleId::sl2_product:
        if (n % 2 == 1) ns.push_back(n);
        break;
      case ExampleId::large_multiplicity:
        if (n >= 3 && n % 2 == 1) ns.push_back(n);
        break;
    }
  }
  return ns;
}

inline ExampleReport build_example(ExampleId id, unsigned n) {
  switch (id) {
    case ExampleId::cm: return cm_example(n);
    case ExampleId::spin: return spin_example(n);
    case ExampleId::sl2_product: return sl2_product_example(n);
    case ExampleId::large_multiplicity: return large_multiplicity_example(n);
  }
  throw std::logic_error("unknown example");
}

inline std::vector<ExampleId> parse_example_ids(const std::string& which) {
  if (which == "cm") return {ExampleId::cm};
  if (which == "spin") return {ExampleId::spin};
  if (which == "sl2") return {ExampleId::sl2_product};
  if (which == "largemult") return {ExampleId::large_multiplicity};
  return {ExampleId::cm, ExampleId::spin, ExampleId::sl2_product, ExampleId::large_multiplicity};
}

}  // namespace detail

inline OutputRecord run_examples(const std::string& command, const std::string& which, unsigned max_n) {
  OutputRecord rec{command};
  rec.inputs = {{"family", which}, {"max", max_n}};
  Json reports = Json::array();
  std::size_t failures = 0, total = 0;
  rec.detail = detail::example_header();
  for (ExampleId id : detail::parse_example_ids(which))
    for (unsigned n : detail::admissible_example_ns(id, max_n)) {
      const ExampleReport r = detail::build_example(id, n);
      ++total;
      if (!r.all_checks_passed()) ++failures;
      reports.push_back(detail::example_json(r));
      rec.detail += detail::example_row(r);
    }
  rec.results = {{"reports", reports}, {"failed", failures}};
  rec.summary = std::to_string(total - failures) + "/" + std::to_string(total) + " example reports with all checks passing\n";
  if (failures > 0) rec.status = Status::violation;
  return rec;
}

inline OutputRecord cmd_verify(const std::string& which, int max_opt) {
  OutputRecord rec{"verify"};
  const auto max_or = [&](unsigned fallback, unsigned cap) {
    if (max_opt < 0) return fallback;
    if (static_cast<unsigned>(max_opt) > cap) throw UsageError("--max exceeds supported maximum " + std::to_string(cap));
    return static_cast<unsigned>(max_opt);
  };
  std::size_t checked = 0, failed = 0;
  Json failures = Json::array();

  if (which == "landau-oracle") {
    const unsigned max_n = max_or(25, detail::kMaxOracleIndex);
    const LandauTable table(max_n);
    for (unsigned n = 0; n <= max_n; ++n) {
      const BigNat bg = oracle::brute_force_g(n), bg1 = oracle::brute_force_g1(n);
      checked += 2;
      if (table.g(n) != bg) failures.push_back({{"n", n}, {"function", "g"}, {"dp", table.g(n).str()}, {"oracle", bg.str()}});
      if (table.g1(n) != bg1) failures.push_back({{"n", n}, {"function", "g1"}, {"dp", table.g1(n).str()}, {"oracle", bg1.str()}});
      rec.detail += "n=" + std::to_string(n) + " g=" + table.g(n).str() + " g1=" + table.g1(n).str() + "\n";
    }
    rec.inputs = {{"check", which}, {"max", max_n}};
  } else if (which == "sandwich" || which == "massias") {
    const unsigned max_n = max_or(500, detail::kMaxLandauIndex / 2);
    const LandauTable table(sandwich_reach(max_n));
    const bool sandwich = which == "sandwich";
    for (unsigned n = sandwich ? 1 : 2; n <= max_n; ++n) {
      ++checked;
      const bool ok = sandwich ? sandwich_check(table, n) : massias_check(table, n);
      if (!ok) failures.push_back({{"n", n}});
    }
    rec.inputs = {{"check", which}, {"max", max_n}};
  } else if (which == "u-vs-g1") {
    const unsigned max_rank = max_or(12, 24);
    const UVersusG1Report report = verify_u_vs_g1(max_rank);
    checked = report.multisets_checked;
    for (const auto& v : report.violations)
      failures.push_back({{"factors", factors_name(v.factors)}, {"lcm", v.lcm.str()}, {"bound", v.bound.str()}, {"reason", v.reason}});
    Json per_rank = Json::array();
    rec.detail = "rank  max_lcm  g1(rank)  witness\n";
    for (const auto& m : report.per_rank) {
      per_rank.push_back({{"rank", m.rank}, {"max_lcm", m.max_lcm.str()}, {"g1", m.g1.str()}, {"witness", factors_name(m.witness)}});
      char buf[160];
      std::snprintf(buf, sizeof buf, "%4u %8s %9s  %s\n", m.rank, m.max_lcm.str().c_str(), m.g1.str().c_str(),
                    factors_name(m.witness).c_str());
      rec.detail += buf;
    }
    rec.inputs = {{"check", which}, {"max", max_rank}};
    rec.results["per_rank"] = per_rank;
  } else if (which == "char-count") {
    const unsigned max_rank = max_or(10, 12);
    rec.detail = "type  w_k  orbit  catalog  bound(rank+1)\n";
    auto types = admissible_types(max_rank);
    for (unsigned e : {6u, 7u})
      if (e > max_rank) types.emplace_back(Family::E, e);
    for (const auto& t : types)
      for (const auto& r : minuscule_catalog(t)) {
        ++checked;
        const BigNat count = count_distinct_characters(weyl_orbit(t, highest_weight(r)));
        const BigNat cap = char_count_bound(t.rank() + 1);
        if (count != r.dimension || count > cap)
          failures.push_back({{"type", t.name()}, {"index", r.fundamental_weight_index}, {"orbit", count.str()},
                              {"catalog", r.dimension.str()}, {"bound", cap.str()}});
        char buf[160];
        std::snprintf(buf, sizeof buf, "%-5s w%-3u %6s %8s %14s\n", t.name().c_str(), r.fundamental_weight_index,
                      count.str().c_str(), r.dimension.str().c_str(), cap.str().c_str());
        rec.detail += buf;
      }
    rec.inputs = {{"check", which}, {"max", max_rank}};
  } else {
    OutputRecord ex = run_examples("verify", "all", max_or(20, detail::kMaxExampleN));
    ex.inputs = {{"check", which}, {"max", ex.inputs["max"]}};
    return ex;
  }

  failed = failures.size();
  rec.results["checked"] = checked;
  rec.results["violations"] = failures;
  rec.summary = which + ": " + std::to_string(checked) + " checks, " + std::to_string(failed) + " violations\n";
  if (failed > 0) rec.status = Status::violation;
  return rec;
}

/// Runs one command line. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  const bool json = std::find(args.begin(), args.end(), "--json") != args.end();
  CLI::App app{"Rank bounds for Mumford-Tate and l-adic monodromy groups", "mtrank"};
  app.require_subcommand(1);
  bool json_flag = false, quiet = false;
  app.add_flag("--json", json_flag, "Emit one JSON document");
  app.add_flag("--quiet", quiet, "Suppress tables, keep summaries");

  std::string landau_kind, landau_n;
  auto* landau = app.add_subcommand("landau", "Landau's function g(n) or g1(n)");
  landau->add_option("function", landau_kind)->required()->check(CLI::IsMember({"g", "g1"}));
  landau->add_option("n", landau_n)->required();

  unsigned alpha_from = 0, alpha_to = 0;
  bool alpha_env = false;
  auto* alpha_cmd = app.add_subcommand("alpha", "Tabulate alpha(n) = log2 g1(n) / sqrt(n ln n)");
  alpha_cmd->add_option("--from", alpha_from)->required();
  alpha_cmd->add_option("--to", alpha_to)->required();
  alpha_cmd->add_flag("--envelope", alpha_env, "Also report the Massias envelope");

  std::string b_comm, b_gen, b_prod;
  std::vector<std::string> b_triple;
  auto* bound = app.add_subcommand("bound", "Rank lower bounds");
  bound->add_option("--commutative", b_comm, "Commutative endomorphism bound for dimension g");
  bound->add_option("--general", b_gen, "General bound for dimension g");
  bound->add_option("--product", b_prod, "General bound for a product, dims comma separated");
  bound->add_option("--triple", b_triple, "Check rank, u, dim for a pure triple")->expected(3);

  std::string e_g, e_n;
  auto* exponent = app.add_subcommand("exponent", "Division-field exponent n (log2 g + 2)");
  exponent->add_option("g", e_g)->required();
  exponent->add_option("n", e_n)->required();

  std::string r_action, r_type, r_weight;
  int r_index = 0;
  auto* rootsys = app.add_subcommand("rootsys", "Root system data");
  rootsys->add_option("action", r_action)->required()->check(CLI::IsMember({"cartan", "fundamental-group", "minuscule", "orbit"}));
  rootsys->add_option("type", r_type)->required();
  rootsys->add_option("--index", r_index, "Orbit of fundamental weight k");
  rootsys->add_option("--weight", r_weight, "Orbit of an explicit weight, comma separated rationals");

  auto* snf = app.add_subcommand("snf", "Smith normal form of a JSON matrix on standard input");

  std::string v_which;
  int v_max = -1;
  auto* verify = app.add_subcommand("verify", "Verification sweeps");
  verify->add_option("check", v_which)
      ->required()
      ->check(CLI::IsMember({"landau-oracle", "sandwich", "massias", "u-vs-g1", "char-count", "examples"}));
  verify->add_option("--max", v_max)->check(CLI::NonNegativeNumber);

  std::string x_which;
  int x_max = -1;
  auto* examples = app.add_subcommand("examples", "Sharpness example families");
  examples->add_option("family", x_which)->required()->check(CLI::IsMember({"cm", "spin", "sl2", "largemult", "all"}));
  examples->add_option("--max", x_max)->check(CLI::NonNegativeNumber);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  const auto fail = [&](const std::string& message) {
    err << "mtrank: " << message << "\n";
    if (json) {
      OutputRecord rec{args.empty() ? "" : args.front()};
      rec.status = Status::error;
      rec.results = {{"message", message}};
      out << rec.to_json().dump(2) << "\n";
    }
    return exit_code(Status::error);
  };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return fail(e.what());
  }

  OutputRecord rec;
  try {
    if (*landau) rec = cmd_landau(landau_kind, landau_n);
    else if (*alpha_cmd) rec = cmd_alpha(alpha_from, alpha_to, alpha_env);
    else if (*bound) rec = cmd_bound(b_comm, b_gen, b_prod, b_triple);
    else if (*exponent) rec = cmd_exponent(e_g, e_n);
    else if (*rootsys) rec = cmd_rootsys(r_action, r_type, r_index, r_weight);
    else if (*snf) rec = cmd_snf(in);
    else if (*verify) rec = cmd_verify(v_which, v_max);
    else if (*examples) {
      if (x_max > static_cast<int>(detail::kMaxExampleN)) throw UsageError("--max exceeds supported maximum");
      rec = run_examples("examples", x_which, x_max < 0 ? 10 : static_cast<unsigned>(x_max));
    }
  } catch (const std::invalid_argument& e) {
    return fail(e.what());
  } catch (const std::domain_error& e) {
    return fail(e.what());
  } catch (const std::length_error& e) {
    return fail(e.what());
  }

  if (json_flag) {
    out << rec.to_json().dump(2) << "\n";
  } else {
    if (!quiet) out << rec.detail;
    out << rec.summary;
  }
  return exit_code(rec.status);
}

}  // namespace mtrank::cli
