#include "dstar/turan.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <stdexcept>

#include "dstar/canonical.hpp"
#include "dstar/formats.hpp"
#include "dstar/starblock.hpp"

namespace dstar {

namespace {

int planar_edge_cap(int n) {
  if (n <= 2) return n * (n - 1) / 2;
  return 3 * n - 6;
}

}  // namespace

TuranResult compute_planar_turan(int n, PatternSpec p, int workers, int witness_cap,
                                 bool allow_large) {
  int limit = allow_large ? 12 : 10;
  if (n < 1 || n > limit) throw std::invalid_argument("compute_planar_turan: order beyond the guard");
  auto start = std::chrono::steady_clock::now();

  TuranResult res;
  res.n = n;
  res.pattern = p;
  for (int level = planar_edge_cap(n); level >= 0; --level) {
    EnumConstraints c;
    c.n = n;
    c.min_edges = c.max_edges = level;
    c.require_planar = true;
    c.forbid = p;

    std::vector<std::vector<std::string>> per_root;
    std::mutex m;
    EnumStats stats = enumerate_parallel(
        c, workers,
        [&](const Graph& g, std::size_t root) {
          std::scoped_lock lock(m);
          if (per_root[root].size() < static_cast<std::size_t>(witness_cap))
            per_root[root].push_back(graph6_encode(canonical_graph(g)));
        },
        [&](std::size_t roots) { per_root.resize(roots); });
    res.stats += stats;
    if (stats.emitted > 0) {
      res.value = level;
      for (const auto& bucket : per_root)
        for (const std::string& w : bucket) {
          if (static_cast<int>(res.witnesses.size()) >= witness_cap) break;
          res.witnesses.push_back(w);
        }
      break;
    }
  }
  res.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return res;
}

std::pair<int, bool> predicted_value(int n, int m) {
  if (m == 1) return {n % 3 == 0 ? n : n - 1, true};
  if (m == 2) return {2 * n - 4, n >= 16};
  if (m == 3) {
    if (n <= 7) return {3 * n - 6, true};
    if (n == 8) return {16, true};
    if (n == 9) return {18, true};
    return {5 * n / 2 - 5, true};
  }
  return {3 * n - 6, true};  // m >= 4
}

std::vector<ClosedFormRow> verify_closed_forms(int n_max, int workers) {
  if (n_max > 10) throw std::invalid_argument("verify_closed_forms: n_max must be <= 10");
  std::vector<ClosedFormRow> rows;
  for (int n = 3; n <= n_max; ++n) {
    for (int m = 1; m <= 4; ++m) {
      ClosedFormRow row;
      row.n = n;
      row.m = m;
      row.computed = compute_planar_turan(n, PatternSpec::of(m, m), workers, 1).value;
      auto [pred, applies] = predicted_value(n, m);
      row.predicted = pred;
      row.formula_applies = applies;
      row.match = !applies || row.computed == pred;
      rows.push_back(row);
    }
  }
  return rows;
}

namespace {

int single_block_edge_cap(int n) {
  if (n == 7) return 15;
  if (n == 8) return 16;
  if (n == 9) return 18;
  return 5 * n / 2 - 5;  // n >= 10
}

void record_failure(std::vector<std::string>& sink, const Graph& g, const std::string& why) {
  if (sink.size() < 32) sink.push_back(graph6_encode(canonical_graph(g)) + "  " + why);
}

}  // namespace

WeightCorpusSummary verify_corpus_weights(int n, int workers, int max_rounds) {
  if (n < 1 || n > 9) throw std::invalid_argument("verify_corpus_weights: n must be in 1..9");
  EnumConstraints c;
  c.n = n;
  c.require_planar = true;
  c.forbid = PatternSpec::of(3, 3);

  WeightCorpusSummary sum;
  sum.n = n;
  std::mutex m;
  enumerate_parallel(c, workers, [&](const Graph& g, std::size_t) {
    WeightCorpusSummary local;
    local.graphs = 1;
    if (g.max_degree() >= 5) {
      local.with_blocks = 1;
      try {
        StarBlockBase base = build_base(g);
        RefineResult ref = refine_until_bounded(g, std::move(base), max_rounds);
        if (!ref.all_pass) {
          local.refine_unresolved = 1;
          record_failure(local.failures, g, "refinement unresolved");
        }
        WeightAudit a = audit(g, ref.base);
        if (!a.all_ok()) {
          local.audit_failures = 1;
          record_failure(local.failures, g, "audit identities failed");
        }
        if (ref.base.blocks.size() == 1) {
          local.single_block = 1;
          if (n >= 7 && g.edge_count() > single_block_edge_cap(n)) {
            local.single_block_cap_violations = 1;
            record_failure(local.failures, g, "single-block edge bound violated");
          }
        }
        if (ref.base.blocks.size() >= 2) {
          local.multi_block = 1;
          if (2 * g.edge_count() > 5 * n - 10) {
            local.multi_block_cap_violations = 1;
            record_failure(local.failures, g, "multi-block edge bound violated");
          }
        }
      } catch (const std::exception& e) {
        local.base_failures = 1;
        record_failure(local.failures, g, e.what());
      }
    }
    std::scoped_lock lock(m);
    sum.graphs += local.graphs;
    sum.with_blocks += local.with_blocks;
    sum.base_failures += local.base_failures;
    sum.refine_unresolved += local.refine_unresolved;
    sum.audit_failures += local.audit_failures;
    sum.single_block += local.single_block;
    sum.single_block_cap_violations += local.single_block_cap_violations;
    sum.multi_block += local.multi_block;
    sum.multi_block_cap_violations += local.multi_block_cap_violations;
    for (const std::string& f : local.failures)
      if (sum.failures.size() < 32) sum.failures.push_back(f);
  });
  return sum;
}

DegreeClassCorpusSummary verify_corpus_degree_classes(int n, int workers) {
  if (n < 1 || n > 9) throw std::invalid_argument("verify_corpus_degree_classes: n must be in 1..9");
  EnumConstraints c;
  c.n = n;
  c.require_planar = true;
  c.forbid = PatternSpec::of(3, 3);

  DegreeClassCorpusSummary sum;
  sum.n = n;
  std::mutex m;
  enumerate_parallel(c, workers, [&](const Graph& g, std::size_t) {
    DegreeClassReport r = degree_class_report(g);
    std::scoped_lock lock(m);
    ++sum.graphs;
    if (!r.applicable) return;
    ++sum.applicable;
    if (!r.all_applicable_ok()) {
      ++sum.failures;
      if (sum.failing.size() < 32) sum.failing.push_back(graph6_encode(canonical_graph(g)));
    }
  });
  return sum;
}

}  // namespace dstar
