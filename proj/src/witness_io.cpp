#include "bramsey/witness_io.hpp"

#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "bramsey/detect.hpp"
#include "bramsey/error.hpp"

namespace bramsey {
namespace {

constexpr std::string_view kWitnessMagic = "bramsey-witness v";
constexpr std::string_view kCertificateMagic = "bramsey-certificate v1";

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

ProblemSpec parse_spec_fields(const std::string& text, const std::string& context) {
  std::istringstream in(text);
  ProblemSpec spec;
  std::string extra;
  if (!(in >> spec.m >> spec.n >> spec.a >> spec.s) || (in >> extra))
    throw Error(ErrorKind::ParseError, context + ": expected 'm n a s', got '" + text + "'");
  return spec;
}

std::vector<int> parse_row(const std::string& line, int lineno) {
  std::vector<int> row;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size())
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(lineno) + ": bad index '" + tok + "'");
    row.push_back(v);
  }
  return row;
}

}  // namespace

WitnessFile to_witness_file(const Coloring& c, const ProblemSpec& spec,
                            std::optional<std::string> note) {
  WitnessFile w;
  w.spec = spec;
  w.note = std::move(note);
  for (int x = 0; x < c.m(); ++x) {
    std::vector<int> row;
    c.row(x).for_each([&](int y) { row.push_back(y + 1); });
    w.rows.push_back(std::move(row));
  }
  return w;
}

Coloring to_coloring(const WitnessFile& w) {
  std::vector<std::vector<int>> rows = w.rows;
  for (auto& r : rows)
    for (auto& y : r) y -= 1;
  return build_coloring(w.spec.m, w.spec.n, rows);
}

void write_witness(std::ostream& out, const WitnessFile& w) {
  out << kWitnessMagic << w.schema_version << "; " << w.spec.m << ' ' << w.spec.n << ' '
      << w.spec.a << ' ' << w.spec.s << '\n';
  if (w.note) {
    std::istringstream lines(*w.note);
    std::string line;
    while (std::getline(lines, line)) out << "# " << line << '\n';
  }
  for (const auto& row : w.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << '\n';
  }
}

WitnessFile read_witness(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line))
    throw Error(ErrorKind::ParseError, "empty witness file");
  ++lineno;
  line = trim(line);
  if (line.rfind(kWitnessMagic, 0) != 0)
    throw Error(ErrorKind::ParseError, "missing 'bramsey-witness v1;' header");
  const auto semi = line.find(';');
  if (semi == std::string::npos)
    throw Error(ErrorKind::ParseError, "header lacks ';' before the spec");
  WitnessFile w;
  try {
    w.schema_version = std::stoi(line.substr(kWitnessMagic.size(), semi - kWitnessMagic.size()));
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "bad schema version in '" + line + "'");
  }
  if (w.schema_version != 1)
    throw Error(ErrorKind::ParseError,
                "unsupported witness schema v" + std::to_string(w.schema_version));
  w.spec = parse_spec_fields(line.substr(semi + 1), "witness header");
  if (w.spec.m < 1 || w.spec.m > 4096)
    throw Error(ErrorKind::ParseError, "implausible row count m = " + std::to_string(w.spec.m));

  std::string note;
  while (static_cast<int>(w.rows.size()) < w.spec.m && std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] == '#') {
      std::string text = line.substr(1);
      if (!text.empty() && text[0] == ' ') text.erase(0, 1);
      note += (note.empty() ? "" : "\n") + text;
      continue;
    }
    w.rows.push_back(parse_row(line, lineno));
  }
  if (static_cast<int>(w.rows.size()) != w.spec.m)
    throw Error(ErrorKind::ParseError, "expected " + std::to_string(w.spec.m) + " rows, found " +
                                           std::to_string(w.rows.size()));
  while (std::getline(in, line)) {
    ++lineno;
    if (!trim(line).empty())
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(lineno) + ": trailing content after the last row");
  }
  if (!note.empty()) w.note = note;
  return w;
}

std::string_view to_string(Engine e) noexcept {
  switch (e) {
    case Engine::Dfs: return "dfs";
    case Engine::Cegar: return "cegar";
    case Engine::Oracle: return "oracle";
    case Engine::Verifier: return "verifier";
  }
  return "dfs";
}

std::string_view to_string(Trust t) noexcept {
  return t == Trust::SelfVerified ? "self-verified" : "solver-trusted";
}

Certificate make_certificate(const ProblemSpec& spec, const SearchOutcome& outcome,
                             Engine engine) {
  Certificate c;
  c.spec = spec;
  c.status = outcome.status;
  c.engine = engine;
  c.trust = engine == Engine::Cegar && outcome.status == ArrowStatus::Arrow
                ? Trust::SolverTrusted
                : Trust::SelfVerified;
  c.stats = outcome.stats;
  if (outcome.witness) c.witness = to_witness_file(*outcome.witness, spec);
  return c;
}

void write_certificate(std::ostream& out, const Certificate& c) {
  out << kCertificateMagic << '\n';
  out << "spec: " << c.spec.m << ' ' << c.spec.n << ' ' << c.spec.a << ' ' << c.spec.s << '\n';
  out << "status: " << to_string(c.status) << '\n';
  out << "engine: " << to_string(c.engine) << '\n';
  out << "trust: " << to_string(c.trust) << '\n';
  out << "nodes: " << c.stats.nodes << '\n';
  out << "elapsed_seconds: " << std::fixed << std::setprecision(6) << c.stats.elapsed_seconds
      << std::defaultfloat << '\n';
  for (const auto& [rule, count] : c.stats.prunes) out << "prune." << rule << ": " << count << '\n';
  if (c.witness) {
    out << "witness:\n";
    write_witness(out, *c.witness);
  }
}

Certificate read_certificate(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != kCertificateMagic)
    throw Error(ErrorKind::ParseError, "missing 'bramsey-certificate v1' header");
  Certificate c;
  bool have_spec = false;
  bool have_status = false;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    if (line == "witness:") {
      c.witness = read_witness(in);
      break;
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      throw Error(ErrorKind::ParseError, "expected 'key: value', got '" + line + "'");
    const std::string key = line.substr(0, colon);
    const std::string value = trim(line.substr(colon + 1));
    try {
      if (key == "spec") {
        c.spec = parse_spec_fields(value, "certificate spec");
        have_spec = true;
      } else if (key == "status") {
        const auto st = parse_status(value);
        if (!st) throw Error(ErrorKind::ParseError, "unknown status '" + value + "'");
        c.status = *st;
        have_status = true;
      } else if (key == "engine") {
        if (value == "dfs") c.engine = Engine::Dfs;
        else if (value == "cegar") c.engine = Engine::Cegar;
        else if (value == "oracle") c.engine = Engine::Oracle;
        else if (value == "verifier") c.engine = Engine::Verifier;
        else throw Error(ErrorKind::ParseError, "unknown engine '" + value + "'");
      } else if (key == "trust") {
        if (value == "self-verified") c.trust = Trust::SelfVerified;
        else if (value == "solver-trusted") c.trust = Trust::SolverTrusted;
        else throw Error(ErrorKind::ParseError, "unknown trust label '" + value + "'");
      } else if (key == "nodes") {
        c.stats.nodes = std::stoull(value);
      } else if (key == "elapsed_seconds") {
        c.stats.elapsed_seconds = std::stod(value);
      } else if (key.rfind("prune.", 0) == 0) {
        c.stats.prunes[key.substr(6)] = std::stoull(value);
      } else {
        throw Error(ErrorKind::ParseError, "unknown certificate key '" + key + "'");
      }
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseError, "bad value for '" + key + "': '" + value + "'");
    }
  }
  if (!have_spec || !have_status)
    throw Error(ErrorKind::ParseError, "certificate lacks spec or status");
  if (c.status == ArrowStatus::NotArrow && !c.witness)
    throw Error(ErrorKind::ParseError, "NotArrow certificate without a witness");
  if (c.witness && c.witness->spec != c.spec)
    throw Error(ErrorKind::ParseError, "embedded witness spec differs from certificate spec");
  return c;
}

bool recheck(const Certificate& c) {
  if (c.status != ArrowStatus::NotArrow) return true;
  if (!c.witness) return false;
  return verify(to_coloring(*c.witness), c.spec).good();
}

}  // namespace bramsey
