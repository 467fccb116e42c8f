#pragma once

// Problem files are JSON documents.  Every rational is a string ("3", "-1/2")
// so no value ever passes through floating point.
//
//   {
//     "variables": 2,
//     "rule": "exterior" | "skew" | "symmetric",
//     "cap": 4,                                  optional; required unless exterior
//     "names": ["x", "y"],                       optional
//     "group_generators": [[["0","1"],["1","0"]]],
//     "arrangement": {                           optional
//       "ambient_dim": 3,
//       "subspaces": [{"span": [["1","0","0"]]}, {"forms": [["0","0","1"]]}]
//     },
//     "experiment": {                            optional
//       "w_generators": [[["-1"]]],
//       "v_dims": [1, 2, 3]
//     }
//   }

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewinv/algebra.hpp"
#include "skewinv/arrangement.hpp"
#include "skewinv/linalg.hpp"

namespace skewinv {

struct ExperimentSpec {
  std::vector<MatrixQ> w_generators;
  std::vector<std::size_t> v_dims;
};

struct ProblemFile {
  std::size_t variables = 0;
  SignRule rule = SignRule::exterior;
  std::optional<std::size_t> cap;
  std::vector<std::string> names;
  std::vector<MatrixQ> group_generators;
  std::optional<Arrangement> arrangement;
  std::optional<ExperimentSpec> experiment;
};

/// Throws ParseError on malformed JSON, malformed rationals, non-square or
/// mis-sized matrices and unknown rules.
ProblemFile parse_problem(std::string_view text);
ProblemFile load_problem(const std::filesystem::path& path);

/// Algebra context for the problem; `cap_override` replaces the file's cap.
CtxPtr make_context(const ProblemFile& problem, std::optional<std::size_t> cap_override = std::nullopt);

}  // namespace skewinv
