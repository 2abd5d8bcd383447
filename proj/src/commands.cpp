#include "bramsey/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "bramsey/constructions.hpp"
#include "bramsey/detect.hpp"
#include "bramsey/error.hpp"
#include "bramsey/oracle.hpp"
#include "bramsey/table.hpp"
#include "bramsey/witness_io.hpp"

namespace bramsey::cli {
namespace {

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

/// Runs `write` against the file at `path`, or against `fallback` when path is empty.
template <typename F>
void emit(const std::string& path, std::ostream& fallback, F&& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorKind::IoError, "cannot open " + path + " for writing");
  write(file);
  if (!file) throw Error(ErrorKind::IoError, "failed writing " + path);
}

std::string one_based(const std::vector<int>& v) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i] + 1;
  out << '}';
  return out.str();
}

void print_report(std::ostream& out, const ProblemSpec& spec, const VerifyReport& r) {
  out << "spec " << spec.to_string() << '\n';
  out << "max red degree: " << r.max_red_degree << '\n';
  int lo = spec.n + 1;
  int hi = -1;
  for (std::size_t i = 0; i < r.pairwise.size(); ++i)
    for (std::size_t j = 0; j < r.pairwise.size(); ++j)
      if (i != j) {
        lo = std::min(lo, r.pairwise[i][j]);
        hi = std::max(hi, r.pairwise[i][j]);
      }
  if (hi < 0) {
    out << "pairwise: (single row)\n";
  } else if (lo == hi) {
    out << "pairwise: all off-diagonal = " << lo << '\n';
  } else {
    out << "pairwise: off-diagonal min " << lo << ", max " << hi << '\n';
    for (const auto& row : r.pairwise) {
      out << " ";
      for (int v : row) out << ' ' << v;
      out << '\n';
    }
  }
  if (r.min_union)
    out << "min-union(" << r.min_union->k << "): " << r.min_union->value << " at x"
        << one_based(r.min_union->subset) << '\n';
  auto copy = [&](const char* label, int k, const std::optional<Biclique>& b) {
    out << label << " K_{" << k << "," << k << "}: ";
    if (b) out << "x" << one_based(b->xs) << " y" << one_based(b->ys) << '\n';
    else out << "none\n";
  };
  copy("red", spec.a, r.red_copy);
  copy("blue", spec.s, r.blue_copy);
  out << "verdict: " << (r.good() ? "good" : "bad") << '\n';
}

void print_outcome(std::ostream& out, const ProblemSpec& spec, const SearchOutcome& o) {
  out << "spec " << spec.to_string() << '\n';
  out << "status: " << to_string(o.status) << '\n';
  out << "nodes: " << o.stats.nodes << '\n';
  for (const auto& [rule, count] : o.stats.prunes) out << "prune." << rule << ": " << count << '\n';
  out << "elapsed_seconds: " << o.stats.elapsed_seconds << '\n';
  if (o.witness) {
    out << "witness (1-based):\n";
    write_witness(out, to_witness_file(*o.witness, spec));
  }
}

int exit_for(ArrowStatus s) { return s == ArrowStatus::Inconclusive ? kExitInconclusive : kExitOk; }

int verify_certificate(std::istream& in, std::ostream& out) {
  const Certificate cert = read_certificate(in);
  out << "certificate " << to_string(cert.status) << " for " << cert.spec.to_string() << " ("
      << to_string(cert.engine) << ", " << to_string(cert.trust) << ")\n";
  if (cert.status == ArrowStatus::NotArrow) {
    const Coloring c = to_coloring(*cert.witness);
    const VerifyReport report = verify(c, cert.spec);
    print_report(out, cert.spec, report);
    return report.good() ? kExitOk : kExitBad;
  }
  return exit_for(cert.status);
}

}  // namespace

int cmd_construct(const std::string& name, const SpecArgs& args, const std::string& out_path,
                  std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    WitnessFile file;
    if (name == "star") {
      if (args.m < 1 || args.n < 1)
        throw Error(ErrorKind::InvalidSpec, "star needs --m and --n");
      const ProblemSpec spec{args.m, args.n, args.a ? args.a : 2, args.s ? args.s : 6};
      file = to_witness_file(star_witness(spec.m, spec.n), spec, "star: x1 red to every column");
    } else if (name == "a7x56" || name == "b8x44") {
      const NamedWitness w = name == "a7x56" ? witness_7_56() : witness_8_44();
      file = to_witness_file(w.coloring, w.spec, w.name);
    } else {
      throw Error(ErrorKind::InvalidSpec,
                  "unknown construction '" + name + "' (expected star, a7x56 or b8x44)");
    }
    emit(out_path, out, [&](std::ostream& o) { write_witness(o, file); });
    return kExitOk;
  });
}

int cmd_verify(const std::string& path, const SpecArgs& overrides, const std::string& cert_path,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
    std::string first;
    std::getline(in, first);
    in.seekg(0);
    if (first.rfind("bramsey-certificate", 0) == 0) return verify_certificate(in, out);

    const WitnessFile file = read_witness(in);
    Coloring c = to_coloring(file);
    ProblemSpec spec = file.spec;
    if (overrides.m && overrides.m != spec.m)
      throw Error(ErrorKind::SpecMismatch, "witness has m = " + std::to_string(spec.m));
    if (overrides.n) {
      if (overrides.n < spec.n)
        throw Error(ErrorKind::SpecMismatch, "cannot shrink n below " + std::to_string(spec.n));
      spec.n = overrides.n;
      c = c.padded(spec.n);
    }
    if (overrides.a) spec.a = overrides.a;
    if (overrides.s) spec.s = overrides.s;

    const VerifyReport report = verify(c, spec);
    print_report(out, spec, report);
    if (!cert_path.empty() && report.good()) {
      SearchOutcome o;
      o.status = ArrowStatus::NotArrow;
      o.witness = c;
      const Certificate cert = make_certificate(spec, o, Engine::Verifier);
      emit(cert_path, out, [&](std::ostream& f) { write_certificate(f, cert); });
    }
    return report.good() ? kExitOk : kExitBad;
  });
}

int cmd_search(const ProblemSpec& spec, const Budget& budget, const RuleSet& rules,
               const std::string& cert_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SearchOutcome o = decide_arrow(spec, budget, rules);
    print_outcome(out, spec, o);
    if (!cert_path.empty()) {
      const Certificate cert = make_certificate(spec, o, Engine::Dfs);
      emit(cert_path, out, [&](std::ostream& f) { write_certificate(f, cert); });
    }
    return exit_for(o.status);
  });
}

int cmd_scan(int m, int a, int s, int n_lo, int n_hi, const Budget& budget, const RuleSet& rules,
             std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ScanResult r = brm_scan(m, a, s, n_lo, n_hi, budget, rules);
    bool inconclusive = false;
    out << "scan BR_" << m << "(K_{" << a << "," << a << "}, K_{" << s << "," << s << "}) over n = "
        << n_lo << ".." << n_hi << '\n';
    for (const auto& e : r.entries) {
      out << "  n=" << e.n << ' ' << to_string(e.outcome.status) << " (" << e.outcome.stats.nodes
          << " nodes)\n";
      inconclusive |= e.outcome.status == ArrowStatus::Inconclusive;
    }
    if (r.value) {
      out << "BR = " << *r.value << '\n';
    } else if (r.upper_bound) {
      out << "BR in [" << r.lower_bound << ", " << *r.upper_bound << "]\n";
    } else {
      out << "no arrowing up to n = " << n_hi << " (BR >= " << r.lower_bound << " if it exists)\n";
    }
    if (!r.monotone) {
      out << "warning: NotArrow after Arrow; results are not monotone in n\n";
      return kExitBad;
    }
    return inconclusive ? kExitInconclusive : kExitOk;
  });
}

int cmd_encode(const ProblemSpec& spec, EncodeMode mode, bool symmetry_breaking,
               const std::string& out_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    EncodeOptions opts;
    opts.symmetry_breaking = symmetry_breaking;
    const CnfDoc doc = encode_cnf(spec, mode, opts);
    emit(out_path, out, [&](std::ostream& o) { write_dimacs(o, doc); });
    if (!out_path.empty())
      out << "wrote " << doc.num_vars << " vars, " << doc.clauses.size() << " clauses to "
          << out_path << '\n';
    return kExitOk;
  });
}

int cmd_cegar(const ProblemSpec& spec, const std::optional<std::string>& solver_cmd,
              const Budget& budget, const CegarOptions& opts, const std::string& cert_path,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::optional<SolverHarness> harness;
    if (solver_cmd && !solver_cmd->empty()) harness = SolverHarness{*solver_cmd, 0.0, {}};
    else harness = SolverHarness::from_env();
    if (!harness)
      throw Error(ErrorKind::SolverFailure, "no solver: pass --solver or set BRAMSEY_SOLVER_CMD");
    const SearchOutcome o = cegar(spec, *harness, budget, opts);
    print_outcome(out, spec, o);
    if (!cert_path.empty()) {
      const Certificate cert = make_certificate(spec, o, Engine::Cegar);
      emit(cert_path, out, [&](std::ostream& f) { write_certificate(f, cert); });
    }
    return exit_for(o.status);
  });
}

int cmd_oracle(const ProblemSpec& spec, const std::string& cert_path, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const OracleResult r = brute_force_arrow(spec);
    SearchOutcome o;
    o.status = r.arrows ? ArrowStatus::Arrow : ArrowStatus::NotArrow;
    o.witness = r.example;
    o.stats.nodes = std::uint64_t{1} << (spec.m * spec.n);
    out << "good colourings: " << r.good_count << '\n';
    print_outcome(out, spec, o);
    if (!cert_path.empty()) {
      const Certificate cert = make_certificate(spec, o, Engine::Oracle);
      emit(cert_path, out, [&](std::ostream& f) { write_certificate(f, cert); });
    }
    return kExitOk;
  });
}

int cmd_table(const std::string& family, const Budget& per_cell, const RuleSet& rules,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto fam = find_family(family);
    if (!fam)
      throw Error(ErrorKind::InvalidSpec,
                  "unknown family '" + family + "' (expected k22_k33, k22_k55 or k22_k66)");
    const auto rows = reproduction_table(*fam, per_cell, rules);
    print_table(out, *fam, rows);
    bool inconclusive = false;
    for (const auto& r : rows) {
      if (r.status() == CellStatus::Mismatch) return kExitBad;
      inconclusive |= r.status() == CellStatus::Inconclusive;
    }
    return inconclusive ? kExitInconclusive : kExitOk;
  });
}

}  // namespace bramsey::cli
