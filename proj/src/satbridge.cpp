#include "bramsey/satbridge.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "bramsey/combinations.hpp"
#include "bramsey/detect.hpp"
#include "bramsey/error.hpp"

namespace bramsey {
namespace {

void add_biclique_clauses(CnfDoc& doc, int k, bool negated) {
  const ProblemSpec& sp = doc.spec;
  for_each_combination(sp.m, k, [&](std::span<const int> xs) {
    for_each_combination(sp.n, k, [&](std::span<const int> ys) {
      Clause c;
      c.reserve(static_cast<std::size_t>(k * k));
      for (int x : xs)
        for (int y : ys) c.push_back(negated ? -doc.var(x, y) : doc.var(x, y));
      doc.clauses.push_back(std::move(c));
      return true;
    });
    return true;
  });
}

// row_x >=lex row_{x+1}. eq[y] means the rows agree on columns < y; it is only
// ever forced true, which is all the ordering constraint needs.
void add_lex_order(CnfDoc& doc) {
  const int n = doc.spec.n;
  for (int x = 0; x + 1 < doc.spec.m; ++x) {
    int eq = 0;  // 0: "agree on the empty prefix", always true
    for (int y = 0; y < n; ++y) {
      const int hi = doc.var(x, y);
      const int lo = doc.var(x + 1, y);
      // eq -> (hi >= lo)
      Clause order{-lo, hi};
      if (eq != 0) order.insert(order.begin(), -eq);
      doc.clauses.push_back(std::move(order));
      if (y + 1 == n) break;
      const int next = ++doc.num_vars;
      // eq & (hi == lo) -> next
      Clause both_red{-hi, -lo, next};
      Clause both_blue{hi, lo, next};
      if (eq != 0) {
        both_red.insert(both_red.begin(), -eq);
        both_blue.insert(both_blue.begin(), -eq);
      }
      doc.clauses.push_back(std::move(both_red));
      doc.clauses.push_back(std::move(both_blue));
      eq = next;
    }
  }
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "'\\''";
    else out += c;
  }
  return out + "'";
}

std::filesystem::path fresh_workdir() {
  std::random_device rd;
  const auto base = std::filesystem::temp_directory_path();
  for (int attempt = 0; attempt < 100; ++attempt) {
    auto dir = base / ("bramsey-sat-" + std::to_string(rd()));
    if (std::filesystem::create_directory(dir)) return dir;
  }
  throw Error(ErrorKind::IoError, "could not create a working directory under " + base.string());
}

}  // namespace

CnfDoc encode_cnf(const ProblemSpec& spec, EncodeMode mode, const EncodeOptions& opts) {
  spec.validate();
  if (mode == EncodeMode::Full) {
    const auto red = binomial(spec.m, spec.a) * binomial(spec.n, spec.a);
    const auto blue = binomial(spec.m, spec.s) * binomial(spec.n, spec.s);
    const bool overflow = red == UINT64_MAX || blue == UINT64_MAX || red > UINT64_MAX - blue;
    if (overflow || red + blue > opts.full_clause_cap)
      throw Error(ErrorKind::EncodingTooLarge,
                  "full encoding of " + spec.to_string() + " needs " +
                      (overflow ? std::string("> 2^64") : std::to_string(red + blue)) +
                      " clauses (cap " + std::to_string(opts.full_clause_cap) + ")");
  }
  CnfDoc doc;
  doc.spec = spec;
  doc.num_vars = spec.m * spec.n;
  add_biclique_clauses(doc, spec.a, true);
  if (mode == EncodeMode::Full) add_biclique_clauses(doc, spec.s, false);
  if (opts.symmetry_breaking) add_lex_order(doc);
  return doc;
}

Clause blocking_clause(const CnfDoc& doc, const std::vector<int>& xs, const std::vector<int>& ys) {
  Clause c;
  c.reserve(xs.size() * ys.size());
  for (int x : xs)
    for (int y : ys) c.push_back(doc.var(x, y));
  return c;
}

void write_dimacs(std::ostream& out, const CnfDoc& doc) {
  const ProblemSpec& sp = doc.spec;
  out << "c spec " << sp.m << ' ' << sp.n << ' ' << sp.a << ' ' << sp.s << '\n';
  out << "p cnf " << doc.num_vars << ' ' << doc.clauses.size() << '\n';
  for (const auto& c : doc.clauses) {
    for (int lit : c) out << lit << ' ';
    out << "0\n";
  }
}

Coloring decode_model(const CnfDoc& doc, const std::vector<int>& assignment,
                      const ProblemSpec& spec) {
  if (spec.m != doc.spec.m || spec.n != doc.spec.n)
    throw Error(ErrorKind::SpecMismatch, "model is for " + doc.spec.to_string() +
                                             ", decoding as " + spec.to_string());
  std::vector<signed char> value(static_cast<std::size_t>(doc.num_vars) + 1, 0);
  for (int lit : assignment) {
    const int v = lit < 0 ? -lit : lit;
    if (v == 0 || v > doc.num_vars)
      throw Error(ErrorKind::UnknownVariable, "literal " + std::to_string(lit) + " with " +
                                                  std::to_string(doc.num_vars) + " variables");
    value[static_cast<std::size_t>(v)] = lit > 0 ? 1 : -1;
  }
  for (int v = 1; v <= doc.num_vars; ++v)
    if (value[static_cast<std::size_t>(v)] == 0)
      throw Error(ErrorKind::IncompleteModel, "variable " + std::to_string(v) + " unassigned");
  std::vector<YSet> rows(static_cast<std::size_t>(spec.m));
  for (int v = 1; v <= doc.edge_vars(); ++v) {
    if (value[static_cast<std::size_t>(v)] > 0) {
      const auto [x, y] = doc.edge(v);
      rows[static_cast<std::size_t>(x)].set(y);
    }
  }
  return Coloring(spec.n, std::move(rows));
}

std::optional<SolverHarness> SolverHarness::from_env() {
  const char* cmd = std::getenv("BRAMSEY_SOLVER_CMD");
  if (cmd == nullptr || *cmd == '\0') return std::nullopt;
  return SolverHarness{cmd, 0.0, {}};
}

SolverAnswer parse_solver_output(std::string_view text) {
  std::optional<SolverVerdict> verdict;
  SolverAnswer answer;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("s ", 0) == 0) {
      const std::string status = line.substr(2);
      if (status == "SATISFIABLE") verdict = SolverVerdict::Sat;
      else if (status == "UNSATISFIABLE") verdict = SolverVerdict::Unsat;
      else throw Error(ErrorKind::SolverFailure, "solver reported '" + status + "'");
    } else if (line.rfind("v ", 0) == 0 || line == "v") {
      std::istringstream lits(line.substr(1));
      int lit = 0;
      while (lits >> lit)
        if (lit != 0) answer.model.push_back(lit);
      if (!lits.eof())
        throw Error(ErrorKind::SolverFailure, "unparsable model line '" + line + "'");
    }
  }
  if (!verdict) throw Error(ErrorKind::SolverFailure, "no status line in solver output");
  answer.verdict = *verdict;
  if (answer.verdict == SolverVerdict::Unsat) answer.model.clear();
  return answer;
}

SolverAnswer run_solver(const SolverHarness& harness, const CnfDoc& doc) {
  const auto dir = harness.workdir.empty() ? fresh_workdir() : harness.workdir;
  std::filesystem::create_directories(dir);
  const auto cnf_path = dir / "problem.cnf";
  const auto out_path = dir / "solver.out";
  {
    std::ofstream cnf(cnf_path);
    if (!cnf) throw Error(ErrorKind::IoError, "cannot write " + cnf_path.string());
    write_dimacs(cnf, doc);
  }
  std::string cmd = harness.command_template;
  const std::string placeholder = "{cnf_path}";
  const auto at = cmd.find(placeholder);
  if (at == std::string::npos)
    throw Error(ErrorKind::SolverFailure, "solver command lacks the {cnf_path} placeholder");
  cmd.replace(at, placeholder.size(), shell_quote(cnf_path.string()));
  if (harness.timeout_seconds > 0.0)
    cmd = "timeout " + std::to_string(harness.timeout_seconds) + " " + cmd;
  cmd += " > " + shell_quote(out_path.string()) + " 2>&1";

  const int raw = std::system(cmd.c_str());
  const std::string output = read_file(out_path);
  if (harness.workdir.empty()) {
    std::error_code ec;
    std::filesystem::remove_all(dir, ec);
  }
  if (raw == -1 || !WIFEXITED(raw))
    throw Error(ErrorKind::SolverFailure, "solver did not exit normally: " + cmd);
  const int code = WEXITSTATUS(raw);
  if (code != 0 && code != 10 && code != 20)
    throw Error(ErrorKind::SolverFailure, "solver exited with code " + std::to_string(code));
  return parse_solver_output(output);
}

SearchOutcome cegar(const ProblemSpec& spec, const SolverHarness& harness, const Budget& budget,
                    const CegarOptions& opts) {
  spec.validate();
  budget.validate();
  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  SolverHarness h = harness;
  if (h.workdir.empty()) h.workdir = fresh_workdir();

  CnfDoc doc = encode_cnf(spec, EncodeMode::RedOnly, EncodeOptions{opts.symmetry_breaking});
  SearchOutcome out;
  std::uint64_t& blocking = out.stats.prunes["blocking_clauses"];
  while (true) {
    if (out.stats.nodes >= budget.max_nodes || elapsed() > budget.max_seconds) {
      out.status = ArrowStatus::Inconclusive;
      break;
    }
    ++out.stats.nodes;
    const SolverAnswer answer = run_solver(h, doc);
    if (answer.verdict == SolverVerdict::Unsat) {
      out.status = ArrowStatus::Arrow;
      break;
    }
    Coloring model = decode_model(doc, answer.model, spec);
    if (find_red_K(model, spec.a, spec.a))
      throw Error(ErrorKind::SolverFailure, "model violates a red-freeness clause");
    const auto copy = find_blue_K(model, spec.s, spec.s);
    if (!copy) {
      out.status = ArrowStatus::NotArrow;
      out.witness = std::move(model);
      break;
    }
    doc.clauses.push_back(blocking_clause(doc, copy->xs, copy->ys));
    ++blocking;
    if (opts.batch) {
      // Every violating s-subset of X with every s-set of its uncovered columns,
      // or with disjoint s-sets of them when there are too many.
      constexpr std::uint64_t kAllCopiesLimit = 256;
      const auto s = static_cast<std::size_t>(spec.s);
      for_each_combination(spec.m, spec.s, [&](std::span<const int> xs) {
        YSet uncovered = YSet::prefix(spec.n);
        for (int x : xs) uncovered &= model.blue_row(x);
        const std::vector<int> rows(xs.begin(), xs.end());
        const std::vector<int> cols = uncovered.indices();
        auto block = [&](std::vector<int> ys) {
          if (rows == copy->xs && ys == copy->ys) return;
          doc.clauses.push_back(blocking_clause(doc, rows, ys));
          ++blocking;
        };
        if (binomial(cols.size(), s) <= kAllCopiesLimit) {
          for_each_combination(static_cast<int>(cols.size()), spec.s, [&](std::span<const int> pick) {
            std::vector<int> ys;
            for (int p : pick) ys.push_back(cols[static_cast<std::size_t>(p)]);
            block(std::move(ys));
            return true;
          });
        } else {
          for (std::size_t at = 0; at + s <= cols.size(); at += s)
            block(std::vector<int>(cols.begin() + static_cast<std::ptrdiff_t>(at),
                                   cols.begin() + static_cast<std::ptrdiff_t>(at + s)));
        }
        return true;
      });
    }
  }
  out.stats.elapsed_seconds = elapsed();
  if (harness.workdir.empty()) {
    std::error_code ec;
    std::filesystem::remove_all(h.workdir, ec);
  }
  return out;
}

}  // namespace bramsey
