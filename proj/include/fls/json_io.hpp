#pragma once

#include <string>
#include <vector>

#include "fls/classify.hpp"
#include "fls/embedding.hpp"
#include "fls/fsle.hpp"
#include "fls/fuzzy.hpp"
#include "fls/matrix.hpp"
#include "fls/verify.hpp"

namespace fls {

/// A parsed problem: the crisp matrix, the fuzzy right-hand side, and any
/// solver settings the file carried. Command-line flags override the file's
/// solver block.
struct ProblemFile {
    Matrix a;
    std::vector<FuzzyNumber> b;
    SolveOptions options;
    bool dump_embedding = false;
};

/// Parses a problem from JSON text:
///
///   {
///     "A": [[...], ...],
///     "b": [{"trapezoidal": [x0, y0, alpha, beta]} |
///           {"parametric": {"lower": [c0, c1], "upper": [d0, d1]}}, ...],
///     "solver": {"method": "lu"|"aor", "gamma": F, "omega": F,
///                "tol": F, "max_iter": N},          // optional
///     "flags": {"check_inverse": B, "dump_embedding": B}  // optional
///   }
///
/// `origin` names the source in diagnostics. Throws ParseError naming the
/// offending field; non-finite numbers are rejected everywhere.
ProblemFile parse_problem_text(const std::string& text,
                               const std::string& origin = "<input>");

/// Reads the file and parses it; unreadable paths are a ParseError too.
ProblemFile parse_problem_file(const std::string& path);

/// Reconstructs the problem encoded in an embedding dump produced by
/// embedding_to_json: A = s1 + s2, b reassembled from the stacked
/// right-hand-side coefficient vectors.
ProblemFile problem_from_embedding_text(const std::string& text,
                                        const std::string& origin = "<input>");

/// Serializers. Output is deterministic: fixed key order, two-space indent,
/// integer-valued reals dumped as exact integers and all other reals with 17
/// significant digits, so equal inputs give byte-identical dumps.
std::string classification_to_json(const Classification& c);
std::string embedding_to_json(const Embedding& e);
std::string report_to_json(const SolutionReport& r);

}  // namespace fls
