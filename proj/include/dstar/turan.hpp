#pragma once

#include <string>
#include <vector>

#include "dstar/enumerate.hpp"
#include "dstar/graph.hpp"

namespace dstar {

struct TuranResult {
  int n = 0;
  PatternSpec pattern;
  int value = 0;
  std::vector<std::string> witnesses;  // canonical graph6, capped
  EnumStats stats;                     // accumulated over edge levels
  double elapsed_ms = 0;
};

// Exact planar Turan number by a descending edge-count sweep: the first
// nonempty level is the answer. Disconnected hosts included. Guarded at
// n <= 10.
TuranResult compute_planar_turan(int n, PatternSpec p, int workers = 0, int witness_cap = 100,
                                 bool allow_large = false);

struct ClosedFormRow {
  int n = 0;
  int m = 0;
  int computed = 0;
  int predicted = 0;
  bool formula_applies = true;  // the closed form's stated validity range covers this n
  bool match = false;           // computed == predicted (only meaningful when it applies)
};

// Closed-form value for ex_P(n, S_{m,m}) together with its validity range.
std::pair<int, bool> predicted_value(int n, int m);

// Computes ex_P(n, S_{m,m}) for m in {1,2,3,4} and 3 <= n <= n_max and
// compares against the closed forms.
std::vector<ClosedFormRow> verify_closed_forms(int n_max, int workers = 0);

struct WeightCorpusSummary {
  int n = 0;
  std::uint64_t graphs = 0;           // S_{3,3}-free planar graphs on n vertices
  std::uint64_t with_blocks = 0;      // graphs with max degree >= 5
  std::uint64_t base_failures = 0;    // build_base threw or invariants failed
  std::uint64_t refine_unresolved = 0;
  std::uint64_t audit_failures = 0;   // any ledger/bipartite/edge-cap/bound failure
  std::uint64_t single_block = 0;
  std::uint64_t single_block_cap_violations = 0;  // single-block graphs beyond the edge bound (n >= 7)
  std::uint64_t multi_block = 0;
  std::uint64_t multi_block_cap_violations = 0;
  std::vector<std::string> failures;  // graph6 + reason, capped

  bool clean() const {
    return base_failures == 0 && refine_unresolved == 0 && audit_failures == 0 &&
           single_block_cap_violations == 0 && multi_block_cap_violations == 0;
  }
};

// Runs build/refine/audit over every S_{3,3}-free planar graph on n
// vertices and aggregates failures; anything nonzero is a build bug.
WeightCorpusSummary verify_corpus_weights(int n, int workers = 0, int max_rounds = 4);

struct DegreeClassCorpusSummary {
  int n = 0;
  std::uint64_t graphs = 0;
  std::uint64_t applicable = 0;  // graphs meeting the structural reductions
  std::uint64_t failures = 0;
  std::vector<std::string> failing;  // graph6, capped

  bool clean() const { return failures == 0; }
};

// Degree-class inequalities over the same corpus.
DegreeClassCorpusSummary verify_corpus_degree_classes(int n, int workers = 0);

}  // namespace dstar
