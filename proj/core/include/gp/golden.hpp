#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gp/classify.hpp"

namespace gp {

/// One frozen reference row: the expected analysis of G(k, p^m).
struct GoldenRow {
  long p;
  int m;
  long k;
  bool directed;
  long components;        // p^{m-a}
  long small_q;           // p^a
  long small_k;           // k_a
  bool bipartite;
  std::optional<SrgParams> srg;  // asserted exact parameters
  bool not_srg = false;          // asserted srg failure (undirected only)
  std::string form;              // expected NamedForm::to_string(), "" = skip
};

/// The reference tables: all GP-graphs over F_81, F_25, F_49 and every
/// binary field up to F_256.
const std::vector<GoldenRow>& golden_rows();

struct GoldenCheck {
  std::string claim;   // e.g. "G(5,81)"
  bool pass;
  std::string detail;  // first mismatch, empty on pass
};

/// Evaluates one row against a freshly built graph.
GoldenCheck check_golden_row(const GoldenRow& row);

/// Runs the whole corpus.
std::vector<GoldenCheck> run_golden();

}  // namespace gp
