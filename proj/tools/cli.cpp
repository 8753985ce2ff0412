#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jroots/classify.hpp"
#include "jroots/cluster.hpp"
#include "jroots/enumerate.hpp"
#include "jroots/errors.hpp"
#include "jroots/families.hpp"
#include "jroots/json_io.hpp"
#include "jroots/lattice.hpp"
#include "jroots/reference_tables.hpp"
#include "jroots/weyl.hpp"

namespace jroots::cli {
namespace {

using nlohmann::json;

enum class Format { Plain, Json, Csv };

struct Globals {
  unsigned threads = 0;
  double time_limit = 300.0;
  std::string format = "plain";
};

/// Raised for malformed command lines detected after CLI11 parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

Format format_of(const Globals& g, bool tabular) {
  if (g.format == "json") return Format::Json;
  if (g.format == "csv") {
    if (!tabular) throw UsageError("--format csv is only available for tables, orbits and generic");
    return Format::Csv;
  }
  return Format::Plain;
}

EnumerationOptions enumeration_options(const Globals& g) {
  EnumerationOptions options;
  options.threads = g.threads;
  if (g.time_limit > 0)
    options.deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(g.time_limit));
  return options;
}

std::vector<Coord> parse_coords(std::string_view text) {
  std::vector<Coord> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    std::string_view token = text.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    Coord value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw UsageError("bad integer '" + std::string(token) + "' in vector '" + std::string(text) + "'");
    out.push_back(value);
    start = end + 1;
  }
  return out;
}

/// "a,b,c" or "@path" with one vector per line.
std::vector<std::vector<Coord>> parse_vector_argument(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return {parse_coords(arg)};
  std::ifstream in(arg.substr(1));
  if (!in) throw UsageError("cannot open " + arg.substr(1));
  std::vector<std::vector<Coord>> out;
  std::string line;
  while (std::getline(in, line)) {
    line.erase(std::remove(line.begin(), line.end(), '\r'), line.end());
    if (line.find_first_not_of(" \t") == std::string::npos || line.front() == '#') continue;
    out.push_back(parse_coords(line));
  }
  return out;
}

std::vector<Coord> require_size(std::vector<Coord> x, const SystemParams& p) {
  if (x.size() != static_cast<std::size_t>(p.n()))
    throw UsageError("expected " + std::to_string(p.n()) + " coordinates, got " + std::to_string(x.size()));
  return x;
}

std::string join(std::span<const Coord> x, char sep = ',') {
  std::ostringstream os;
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? std::string(1, sep) : "") << x[i];
  return os.str();
}

std::string paren(std::span<const Coord> x) { return "(" + join(x) + ")"; }

json count_to_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return json(v.convert_to<std::uint64_t>());
  return json(to_string(v));
}

int exit_code_for(RootKind kind) {
  if (is_real(kind)) return kRealRoot;
  if (is_almost_real(kind)) return kAlmostReal;
  return kOther;
}

void print_trace(std::ostream& os, const ReductionTrace& trace) {
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const ReductionStep& s = trace.steps[i];
    os << "  step " << (i + 1) << ": dec = " << paren(s.sorted.coords()) << ", r = " << s.r
       << ", degree -> " << s.degree_after << '\n';
  }
  if (trace.last) os << "  result: " << paren(trace.last->coords()) << '\n';
  os << "  terminal: " << to_string(trace.terminal) << '\n';
}

std::string headline(const Classification& c) {
  std::string line = to_string(c.kind);
  if (c.degree && c.kind != RootKind::DegreeZeroReal) line += ", degree " + std::to_string(*c.degree);
  return line;
}

// ---------------------------------------------------------------------------

int cmd_check(const Globals& g, int k, int n, const std::string& arg, std::ostream& out) {
  const SystemParams params(k, n);
  const Format format = format_of(g, false);
  const auto vectors = parse_vector_argument(arg);
  int code = kRealRoot;
  json batch = json::array();
  for (const auto& raw : vectors) {
    const std::vector<Coord> x = require_size(raw, params);
    const Classification c = classify(params, x);
    code = std::max(code, exit_code_for(c.kind));
    if (format == Format::Json) {
      json entry = to_json(c);
      entry["x"] = x;
      batch.push_back(entry);
      continue;
    }
    if (vectors.size() > 1) {
      out << paren(x) << ": " << headline(c) << '\n';
      continue;
    }
    out << headline(c) << '\n';
    out << "x = " << paren(x) << " in " << to_string(params) << '\n';
    if (c.q_value) out << "q = " << *c.q_value << '\n';
    if (c.trace) {
      out << "reduction" << (c.degree && *c.degree < 0 ? " of -x" : "") << ":\n";
      print_trace(out, *c.trace);
    }
  }
  if (format == Format::Json) out << (vectors.size() == 1 ? batch[0] : batch).dump(2) << '\n';
  return code;
}

int cmd_reduce(const Globals& g, int k, int n, const std::string& arg, std::ostream& out) {
  const SystemParams params(k, n);
  const LatticeVector v(params, require_size(parse_coords(arg), params));
  const ReductionTrace trace = reduce_trace(v);
  if (format_of(g, false) == Format::Json) {
    out << to_json(trace).dump(2) << '\n';
  } else {
    out << "reduction of " << paren(v.coords()) << " in " << to_string(params) << ":\n";
    print_trace(out, trace);
  }
  return trace.terminal == TerminalKind::NegativeBeta ? kRealRoot : kAlmostReal;
}

bool kind_selected(const std::string& selector, OrbitKind kind) {
  return selector == "all" || selector == to_string(kind);
}

void validate_kind(const std::string& selector, bool allow_all) {
  if (selector == "real" || selector == "almost" || (allow_all && selector == "all")) return;
  throw UsageError("--kind must be real" + std::string(allow_all ? ", almost or all" : " or almost"));
}

int cmd_orbits(const Globals& g, int k, int n, Coord degree, const std::string& kind, std::ostream& out) {
  validate_kind(kind, true);
  const SystemParams params(k, n);
  const Format format = format_of(g, true);
  const auto orbits = enumerate_orbits(params, degree, enumeration_options(g));
  json list = json::array();
  if (format == Format::Csv) out << "k,n,degree,kind,representative,orbit_size\n";
  for (const OrbitClass& o : orbits) {
    if (!kind_selected(kind, o.kind)) continue;
    switch (format) {
      case Format::Json: list.push_back(to_json(o)); break;
      case Format::Csv:
        out << k << ',' << n << ',' << degree << ',' << to_string(o.kind) << ','
            << join(o.representative.coords(), ' ') << ',' << o.orbit_size << '\n';
        break;
      case Format::Plain:
        out << paren(o.representative.coords()) << "  " << to_string(o.kind) << "  size " << o.orbit_size << '\n';
        break;
    }
  }
  if (format == Format::Json) out << json{{"k", k}, {"n", n}, {"degree", degree}, {"orbits", list}}.dump(2) << '\n';
  return kOk;
}

int cmd_tables(const Globals& g, int k, int n, Coord max_degree, const std::string& kind, std::ostream& out) {
  validate_kind(kind, false);
  if (max_degree < 1) throw UsageError("--max must be >= 1");
  const SystemParams params(k, n);
  const Format format = format_of(g, true);
  const EnumerationOptions options = enumeration_options(g);
  std::vector<BigInt> counts;
  for (Coord d = 1; d <= max_degree; ++d)
    counts.push_back(kind == "real" ? count_real_roots(params, d, options) : count_almost_real_roots(params, d, options));

  if (format == Format::Csv) {
    out << "k,n,degree,kind,count\n";
    for (std::size_t i = 0; i < counts.size(); ++i)
      out << k << ',' << n << ',' << (i + 1) << ',' << kind << ',' << counts[i] << '\n';
  } else if (format == Format::Json) {
    json rows = json::array();
    for (std::size_t i = 0; i < counts.size(); ++i)
      rows.push_back({{"degree", i + 1}, {"count", count_to_json(counts[i])}});
    out << json{{"k", k}, {"n", n}, {"kind", kind}, {"counts", rows}}.dump(2) << '\n';
  } else {
    out << (kind == "real" ? "real" : "almost real") << " roots of " << to_string(params) << '\n';
    for (std::size_t i = 0; i < counts.size(); ++i) out << "degree " << (i + 1) << ": " << counts[i] << '\n';
  }
  return kOk;
}

int cmd_generic(const Globals& g, Coord degree, const std::string& kind, std::ostream& out) {
  validate_kind(kind, true);
  const Format format = format_of(g, true);
  const auto orbits = enumerate_generic(degree, enumeration_options(g));
  std::map<OrbitKind, int> tally;
  json list = json::array();
  if (format == Format::Csv) out << "degree,kind,offset,core\n";
  for (const GenericOrbit& o : orbits) {
    ++tally[o.kind];
    if (!kind_selected(kind, o.kind)) continue;
    switch (format) {
      case Format::Json: list.push_back(to_json(o)); break;
      case Format::Csv: out << degree << ',' << to_string(o.kind) << ',' << o.offset << ',' << join(o.core, ' ') << '\n'; break;
      case Format::Plain: out << to_string(o.kind) << "  " << o.pattern() << '\n'; break;
    }
  }
  if (format == Format::Json) {
    out << json{{"degree", degree}, {"real", tally[OrbitKind::Real]}, {"almost", tally[OrbitKind::AlmostReal]},
                {"orbits", list}}
               .dump(2)
        << '\n';
  } else if (format == Format::Plain) {
    out << "degree " << degree << ": " << tally[OrbitKind::Real] << " real, " << tally[OrbitKind::AlmostReal]
        << " almost real generic orbits\n";
  }
  return kOk;
}

std::string weight_name(int index) { return index == 0 ? "w_beta" : "w_" + std::to_string(index); }

int cmd_weights(const Globals& g, int k, int n, std::ostream& out) {
  const SystemParams params(k, n);
  const auto weights = fundamental_weights(params);
  const auto positive_sum = sum_of_positive_roots(params);
  const auto weyl_vector = sum_of_fundamental_weights(params);
  if (format_of(g, false) == Format::Json) {
    json list = json::array();
    for (std::size_t i = 0; i < weights.size(); ++i) {
      json w = to_json(weights[i]);
      w["name"] = weight_name(static_cast<int>(i));
      list.push_back(w);
    }
    out << json{{"k", k},
                {"n", n},
                {"weights", list},
                {"sum_of_positive_roots", rationals_to_json(positive_sum)},
                {"sum_of_weights", rationals_to_json(weyl_vector)}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << "fundamental weights of " << to_string(params) << " (root basis beta,alpha_1..; e-basis)\n";
  for (std::size_t i = 0; i < weights.size(); ++i)
    out << weight_name(static_cast<int>(i)) << "  " << format_scaled(weights[i].root_coeffs) << "  "
        << format_scaled(weights[i].coords) << '\n';
  out << "sum of fundamental weights: " << format_scaled(weyl_vector) << '\n';
  out << "sum of positive roots: " << format_scaled(positive_sum) << '\n';
  return kOk;
}

void describe_vector(const Globals& g, const LatticeVector& v, std::ostream& out) {
  const Classification c = classify(v);
  const RootCoefficients rc = to_root_basis(v);
  if (format_of(g, false) == Format::Json) {
    out << json{{"vector", to_json(v)}, {"root_basis", to_json(rc)}, {"classification", to_json(c)}}.dump(2) << '\n';
    return;
  }
  out << paren(v.coords()) << " in " << to_string(v.params()) << '\n';
  out << "root basis: m_beta = " << rc.m_beta << ", m = " << paren(rc.m) << '\n';
  out << headline(c) << '\n';
}

struct FamilyArgs {
  std::string name;
  int k = 0;
  int n = 0;
  Coord d = 2;
  std::string series = "A1";
  std::string sign = "+";
  Coord m = 1;
  int i = 0;
  int j = 0;
};

int cmd_families(const Globals& g, const FamilyArgs& a, std::ostream& out) {
  const SystemParams params(a.k, a.n);
  if (a.name == "gamma") {
    describe_vector(g, gamma(a.d, params), out);
  } else if (a.name == "delta") {
    describe_vector(g, delta_family(a.d, params), out);
  } else if (a.name == "affine-delta") {
    describe_vector(g, affine_delta(params), out);
  } else if (a.name == "affine") {
    const auto series = parse_affine_series(a.series);
    if (!series) throw UsageError("unknown series '" + a.series + "'");
    if (a.sign != "+" && a.sign != "-") throw UsageError("--sign must be + or -");
    std::optional<std::pair<int, int>> positions;
    if (a.i != 0 || a.j != 0) positions = std::make_pair(a.i, a.j);
    describe_vector(g, affine_family(*series, a.sign == "+" ? 1 : -1, a.m, params, positions), out);
  } else {
    throw UsageError("unknown family '" + a.name + "' (gamma, delta, affine-delta, affine)");
  }
  return kOk;
}

std::string manin_row(const ManinVector& m) {
  std::ostringstream os;
  os << m.a << " |";
  for (Coord b : m.b) os << ' ' << b;
  return os.str();
}

int cmd_manin(const Globals& g, const std::string& arg, std::ostream& out) {
  const SystemParams e8(3, 8);
  const bool json_out = format_of(g, false) == Format::Json;
  if (!arg.empty()) {
    const ManinVector m = to_manin(LatticeVector(e8, require_size(parse_coords(arg), e8)));
    if (json_out)
      out << to_json(m).dump(2) << '\n';
    else
      out << manin_row(m) << '\n';
    return kOk;
  }
  // Root table: one row per W(A_7)-orbit, degree 0 included.
  std::vector<ManinVector> roots;
  roots.push_back(to_manin(dec(LatticeVector::alpha(e8, 1))));
  for (Coord d = 1; d <= 3; ++d)
    for (const OrbitClass& o : enumerate_orbits(e8, d))
      if (o.kind == OrbitKind::Real) roots.push_back(to_manin(o.representative));
  std::sort(roots.begin(), roots.end(), [](const ManinVector& x, const ManinVector& y) { return x.a < y.a; });

  const SystemParams j410(4, 10);
  const std::pair<AffineSeries, int> curve_series[] = {
      {AffineSeries::A3, -1}, {AffineSeries::A2, -1}, {AffineSeries::A1, -1}, {AffineSeries::A0, -1},
      {AffineSeries::A1, 1},  {AffineSeries::A2, 1},  {AffineSeries::A3, 1}};
  std::vector<LatticeVector> curves;
  for (const auto& [series, sign] : curve_series) {
    std::optional<std::pair<int, int>> positions;
    if (series == AffineSeries::A0) positions = std::make_pair(9, 2);
    curves.push_back(affine_family(series, sign, 1, j410, positions));
  }

  if (json_out) {
    json r = json::array(), c = json::array();
    for (const auto& m : roots) r.push_back(to_json(m));
    for (const auto& v : curves) c.push_back(v.values());
    out << json{{"roots", r}, {"curves", c}}.dump(2) << '\n';
    return kOk;
  }
  out << "E8 roots as (a | b_1 .. b_8), one per W(A_7)-orbit:\n";
  for (const auto& m : roots) out << "  " << manin_row(m) << '\n';
  out << "exceptional curves as affine roots of J(4,10) with m = 1 (a, b_1 .. b_8, b_9):\n";
  for (std::size_t i = 0; i < curves.size(); ++i)
    out << "  " << to_string(curve_series[i].first) << (curve_series[i].second > 0 ? "+" : "-") << "  "
        << paren(curves[i].coords()) << '\n';
  return kOk;
}

int cmd_profile(const Globals& g, int k, int n, const std::string& arg, const std::string& rows, std::ostream& out) {
  const SystemParams params(k, n);
  if (arg.empty() == rows.empty()) throw UsageError("give either a vector or --rows");
  const Profile p = rows.empty() ? canonical_profile(LatticeVector(params, require_size(parse_coords(arg), params)))
                                 : parse_profile(params, rows);
  const auto rotations = cyclic_permutations(p);
  const LatticeVector x = phi(p);
  if (format_of(g, false) == Format::Json) {
    json rot = json::array();
    for (const auto& r : rotations) rot.push_back(to_json(r));
    out << json{{"profile", to_json(p)},
                {"rendered", render(p)},
                {"phi", x.values()},
                {"weakly_column_decreasing", is_weakly_column_decreasing(p)},
                {"canonical", is_canonical(p)},
                {"cyclic_permutations", rot}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << render(p) << '\n';
  out << "phi = " << paren(x.coords()) << '\n';
  out << "weakly column decreasing: " << (is_weakly_column_decreasing(p) ? "yes" : "no") << '\n';
  out << "canonical: " << (is_canonical(p) ? "yes" : "no") << '\n';
  out << "cyclic permutations:";
  for (const auto& r : rotations) out << ' ' << render(r);
  out << '\n';
  return kOk;
}

int cmd_convert(const Globals& g, int k, int n, const std::string& xs, const std::string& ms, std::ostream& out) {
  const SystemParams params(k, n);
  if (xs.empty() == ms.empty()) throw UsageError("give exactly one of --x or --m");
  RootCoefficients rc{params, 0, {}};
  std::optional<LatticeVector> v;
  if (!xs.empty()) {
    v.emplace(params, require_size(parse_coords(xs), params));
    rc = to_root_basis(*v);
  } else {
    const auto m = parse_coords(ms);
    if (m.size() != static_cast<std::size_t>(n)) throw UsageError("--m takes m_beta followed by n-1 coefficients");
    rc = RootCoefficients{params, m[0], std::vector<Coord>(m.begin() + 1, m.end())};
    v.emplace(from_root_basis(rc));
  }
  if (format_of(g, false) == Format::Json) {
    out << json{{"vector", to_json(*v)}, {"root_basis", to_json(rc)}}.dump(2) << '\n';
  } else {
    out << "x = " << paren(v->coords()) << '\n';
    out << "m_beta = " << rc.m_beta << ", m = " << paren(rc.m) << '\n';
  }
  return kOk;
}

int cmd_word(const Globals& g, int k, int n, const std::string& word_text, const std::string& arg, std::ostream& out) {
  const SystemParams params(k, n);
  const WeylWord w = parse_word(word_text);
  const LatticeVector v(params, require_size(parse_coords(arg), params));
  const LatticeVector result = apply_word(w, v);
  if (format_of(g, false) == Format::Json) {
    out << json{{"word", to_string(w)}, {"input", to_json(v)}, {"result", to_json(result)}, {"q", q(result)}}.dump(2)
        << '\n';
  } else {
    out << paren(result.coords()) << '\n';
    out << "degree " << degree(v) << " -> " << degree(result) << ", q = " << q(result) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct SelftestLine {
  std::string name;
  bool ok;
  std::string detail;
};

std::vector<SelftestLine> run_selftest(const EnumerationOptions& options) {
  std::vector<SelftestLine> lines;
  for (const auto& row : reference::real_root_counts()) {
    const SystemParams p(row.k, row.n);
    std::string detail;
    bool ok = true;
    for (std::size_t i = 0; i < row.values.size(); ++i) {
      const Coord d = row.first_degree + static_cast<Coord>(i);
      const BigInt got = count_real_roots(p, d, options);
      if (got != row.values[i]) {
        ok = false;
        detail += " d=" + std::to_string(d) + ": got " + to_string(got) + " expected " + std::to_string(row.values[i]);
      }
    }
    lines.push_back({"real root counts " + to_string(p), ok, detail});
  }
  for (const auto& row : reference::almost_real_root_counts()) {
    const SystemParams p(row.k, row.n);
    std::string detail;
    bool ok = true;
    for (std::size_t i = 0; i < row.values.size(); ++i) {
      const Coord d = row.first_degree + static_cast<Coord>(i);
      const BigInt got = count_almost_real_roots(p, d, options);
      if (got != row.values[i]) {
        ok = false;
        detail += " d=" + std::to_string(d) + ": got " + to_string(got) + " expected " + std::to_string(row.values[i]);
      }
    }
    lines.push_back({"almost real root counts " + to_string(p), ok, detail});
  }
  // Orbit counts: finite rows through degree 11, unbounded rows through 7.
  std::map<Coord, std::vector<GenericOrbit>> generic;
  for (const auto& row : reference::orbit_counts()) {
    const bool finite = row.n != reference::kUnbounded;
    const std::size_t degrees = finite ? row.real.size() : 7;
    std::string detail;
    bool ok = true;
    for (std::size_t i = 0; i < degrees; ++i) {
      const Coord d = static_cast<Coord>(i + 1);
      std::uint64_t real = 0, almost = 0;
      if (finite) {
        for (const auto& o : enumerate_orbits(SystemParams(row.k, row.n), d, options))
          ++(o.kind == OrbitKind::Real ? real : almost);
      } else {
        if (!generic.count(d)) generic[d] = enumerate_generic(d, options);
        for (const auto& o : generic[d])
          if (row.k == reference::kUnbounded || o.offset <= row.k) ++(o.kind == OrbitKind::Real ? real : almost);
      }
      if (real != row.real[i] || almost != row.almost[i]) {
        ok = false;
        detail += " d=" + std::to_string(d) + ": got " + std::to_string(real) + "/" + std::to_string(almost) +
                  " expected " + std::to_string(row.real[i]) + "/" + std::to_string(row.almost[i]);
      }
    }
    const std::string k_text = row.k == reference::kUnbounded ? "inf" : std::to_string(row.k);
    const std::string n_text = finite ? std::to_string(row.n) : "inf";
    lines.push_back({"orbit counts (" + k_text + "," + n_text + ")", ok, detail});
  }
  return lines;
}

int cmd_selftest(const Globals& g, std::ostream& out) {
  const auto lines = run_selftest(enumeration_options(g));
  const bool all_ok = std::all_of(lines.begin(), lines.end(), [](const SelftestLine& l) { return l.ok; });
  if (format_of(g, false) == Format::Json) {
    json list = json::array();
    for (const auto& l : lines) list.push_back({{"check", l.name}, {"pass", l.ok}, {"detail", l.detail}});
    out << json{{"pass", all_ok}, {"checks", list}}.dump(2) << '\n';
  } else {
    for (const auto& l : lines) out << (l.ok ? "PASS " : "FAIL ") << l.name << l.detail << '\n';
    out << (all_ok ? "selftest passed" : "selftest FAILED") << '\n';
  }
  return all_ok ? kOk : kSelftestMismatch;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Real roots of the root systems J(k,n)", "jroots"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--threads", g.threads, "Enumeration threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--time-limit", g.time_limit, "Abort enumerations after this many seconds (0 = never)")
      ->capture_default_str();
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();

  std::ostringstream buffer;
  std::function<int()> action;

  int k = 0, n = 0;
  std::string vec, word_text, kind = "real", rows, xs, ms;
  Coord degree = 1, max_degree = 7;
  FamilyArgs fam;

  const auto add_kn = [&](CLI::App* sub) {
    sub->add_option("k", k, "k")->required();
    sub->add_option("n", n, "n")->required();
  };

  auto* check = app.add_subcommand("check", "Classify a vector (or @file, one vector per line)");
  add_kn(check);
  check->add_option("x", vec, "Comma-separated coordinates or @file")->required();
  check->callback([&] { action = [&] { return cmd_check(g, k, n, vec, buffer); }; });

  auto* reduce = app.add_subcommand("reduce", "Print the s_beta(dec(x)) reduction trace");
  add_kn(reduce);
  reduce->add_option("x", vec, "Comma-separated coordinates")->required();
  reduce->callback([&] { action = [&] { return cmd_reduce(g, k, n, vec, buffer); }; });

  auto* orbits = app.add_subcommand("orbits", "List W(A_{n-1})-orbits of one degree");
  add_kn(orbits);
  orbits->add_option("--degree", degree, "Degree")->required();
  orbits->add_option("--kind", kind, "real, almost or all")->capture_default_str();
  orbits->callback([&] {
    if (kind == "real" && orbits->count("--kind") == 0) kind = "all";
    action = [&] { return cmd_orbits(g, k, n, degree, kind, buffer); };
  });

  auto* tables = app.add_subcommand("tables", "Root counts per degree");
  add_kn(tables);
  tables->add_option("--max", max_degree, "Largest degree")->capture_default_str();
  tables->add_option("--kind", kind, "real or almost")->capture_default_str();
  tables->callback([&] { action = [&] { return cmd_tables(g, k, n, max_degree, kind, buffer); }; });

  auto* generic = app.add_subcommand("generic", "Orbits valid for all large enough (k,n)");
  generic->add_option("--degree", degree, "Degree")->required();
  generic->add_option("--kind", kind, "real, almost or all");
  generic->callback([&] {
    if (generic->count("--kind") == 0) kind = "all";
    action = [&] { return cmd_generic(g, degree, kind, buffer); };
  });

  auto* weights = app.add_subcommand("weights", "Fundamental weights of a finite-type system");
  add_kn(weights);
  weights->callback([&] { action = [&] { return cmd_weights(g, k, n, buffer); }; });

  auto* families = app.add_subcommand("families", "Named roots: gamma, delta, affine-delta, affine");
  families->add_option("family", fam.name, "gamma | delta | affine-delta | affine")->required();
  families->add_option("k", fam.k, "k")->required();
  families->add_option("n", fam.n, "n")->required();
  families->add_option("--d", fam.d, "Degree for gamma/delta")->capture_default_str();
  families->add_option("--series", fam.series, "A0..A3, B0..B3, C0..C2")->capture_default_str();
  families->add_option("--sign", fam.sign, "+ or -")->capture_default_str();
  families->add_option("--m", fam.m, "Multiple of the null root")->capture_default_str();
  families->add_option("--i", fam.i, "Position i (series *0)");
  families->add_option("--j", fam.j, "Position j < i (series *0)");
  families->callback([&] { action = [&] { return cmd_families(g, fam, buffer); }; });

  auto* manin = app.add_subcommand("manin", "Manin coordinates in E8 = J(3,8)");
  manin->add_option("x", vec, "Optional vector of J(3,8); omitted prints the tables");
  manin->callback([&] { action = [&] { return cmd_manin(g, vec, buffer); }; });

  auto* profile = app.add_subcommand("profile", "Canonical profile of a vector, or predicates of given rows");
  add_kn(profile);
  profile->add_option("x", vec, "Comma-separated coordinates");
  profile->add_option("--rows", rows, "Profile such as 258|147|136");
  profile->callback([&] { action = [&] { return cmd_profile(g, k, n, vec, rows, buffer); }; });

  auto* convert = app.add_subcommand("convert", "Convert between e-coordinates and simple-root coefficients");
  add_kn(convert);
  convert->add_option("--x", xs, "e-coordinates");
  convert->add_option("--m", ms, "m_beta,m_1,...,m_{n-1}");
  convert->callback([&] { action = [&] { return cmd_convert(g, k, n, xs, ms, buffer); }; });

  auto* word = app.add_subcommand("word", "Apply a Weyl word such as b,3,b,1 (letters applied left to right)");
  add_kn(word);
  word->add_option("word", word_text, "Word")->required();
  word->add_option("x", vec, "Comma-separated coordinates")->required();
  word->callback([&] { action = [&] { return cmd_word(g, k, n, word_text, vec, buffer); }; });

  auto* selftest = app.add_subcommand("selftest", "Compare against the embedded census tables");
  selftest->callback([&] { action = [&] { return cmd_selftest(g, buffer); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kUsage;
  }

  int code = kOk;
  try {
    code = action();
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  out << buffer.str();
  return code;
}

}  // namespace jroots::cli
