#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gp/classify.hpp"

namespace gp {

/// One analyzed graph in a parameter sweep.
struct SweepRow {
  long p;
  int m;
  long q;
  long k;
  long n;
  int a;
  long components;
  bool directed;
  bool bipartite;
  std::optional<SrgParams> srg;  // only when requested
  std::string form;              // only when requested
  bool oracle_ok = true;         // only when cross-checking
};

struct SweepSpec {
  std::vector<long> p_list;
  int m_max = 1;
  /// Restrict to these k values; by default every divisor of q−1.
  std::optional<std::vector<long>> k_list;
  bool with_srg = false;
  bool with_form = false;
  bool oracle_crosscheck = false;
  /// Guard on total work: sum of q over planned rows.
  long budget = kDefaultBudget;

  static constexpr long kDefaultBudget = 1L << 20;
};

/// Runs the sweep. Rows are ordered by (q asc, k asc) regardless of the
/// evaluation schedule. Throws BudgetExceeded before any work if the planned
/// rows exceed spec.budget, PreconditionViolated on an empty or invalid spec.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string sweep_json(const std::vector<SweepRow>& rows);
std::string sweep_markdown(const std::vector<SweepRow>& rows);

}  // namespace gp
