#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bramsey/coloring.hpp"
#include "bramsey/search.hpp"

namespace bramsey {

/// Text witness format, one row per line with 1-based column indices:
///
///     bramsey-witness v1; 7 56 2 6
///     # optional note lines
///     1 2 3 4 5 6 7 8 9 10 11
///     ...
///
/// An empty line is an empty row.
struct WitnessFile {
  int schema_version = 1;
  ProblemSpec spec;
  std::vector<std::vector<int>> rows;  // 1-based
  std::optional<std::string> note;
};

WitnessFile to_witness_file(const Coloring& c, const ProblemSpec& spec,
                            std::optional<std::string> note = std::nullopt);
/// Errors: IndexOutOfRange (index 0 or > n), RowCountMismatch, CapacityExceeded.
Coloring to_coloring(const WitnessFile& w);

void write_witness(std::ostream& out, const WitnessFile& w);
/// Throws ParseError on a malformed header, a non-numeric token or a wrong row count.
WitnessFile read_witness(std::istream& in);

enum class Engine { Dfs, Cegar, Oracle, Verifier };
enum class Trust { SelfVerified, SolverTrusted };

std::string_view to_string(Engine e) noexcept;
std::string_view to_string(Trust t) noexcept;

/// Record of one decision. Keys are written in a fixed order:
///
///     bramsey-certificate v1
///     spec: 8 44 2 6
///     status: NotArrow
///     engine: dfs
///     trust: self-verified
///     nodes: 1234
///     elapsed_seconds: 0.0123
///     prune.max_degree: 17
///     ...
///     witness:
///     bramsey-witness v1; 8 44 2 6
///     ...
struct Certificate {
  ProblemSpec spec;
  ArrowStatus status = ArrowStatus::Inconclusive;
  Engine engine = Engine::Dfs;
  Trust trust = Trust::SelfVerified;
  SearchStats stats;
  std::optional<WitnessFile> witness;
};

/// Trust follows the engine: a CEGAR Arrow rests on the solver, everything else
/// is checked in-process.
Certificate make_certificate(const ProblemSpec& spec, const SearchOutcome& outcome, Engine engine);

void write_certificate(std::ostream& out, const Certificate& c);
/// Throws ParseError; a NotArrow certificate without a witness is malformed.
Certificate read_certificate(std::istream& in);

/// Re-verifies an embedded witness. True for certificates without a NotArrow
/// claim; for NotArrow, true iff the witness is a good colouring for the spec.
bool recheck(const Certificate& c);

}  // namespace bramsey
