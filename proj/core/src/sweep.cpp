#include "gp/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include <nlohmann/json.hpp>

#include "gp/decompose.hpp"
#include "gp/errors.hpp"
#include "gp/oracle.hpp"

namespace gp {

namespace {

struct PlannedRow {
  long p;
  int m;
  long q;
  long k;
  std::shared_ptr<const FiniteField> field;
};

std::vector<long> divisors(long n) {
  std::vector<long> d;
  for (long i = 1; i * i <= n; ++i)
    if (n % i == 0) {
      d.push_back(i);
      if (i != n / i) d.push_back(n / i);
    }
  std::sort(d.begin(), d.end());
  return d;
}

SweepRow evaluate(const PlannedRow& pr, const SweepSpec& spec) {
  GPGraph g(pr.field, pr.k);
  auto d = decompose(g);

  SweepRow row;
  row.p = pr.p;
  row.m = pr.m;
  row.q = pr.q;
  row.k = g.k();
  row.n = g.n();
  row.a = d.params.a;
  row.components = d.params.component_count;
  row.directed = g.directed();
  row.bipartite = (pr.q % 2 == 0 && g.k() == pr.q - 1);

  if (spec.with_srg || spec.with_form) {
    auto c = classify(g, d);
    if (spec.with_srg) row.srg = c.srg_params;
    if (spec.with_form) row.form = c.named_form.to_string();
    row.bipartite = c.bipartite;
  }
  if (spec.oracle_crosscheck) {
    oracle::DenseGraph dg(g);
    long weak = static_cast<long>(
        oracle::components(dg, oracle::ComponentMode::weak).size());
    long strong = static_cast<long>(
        oracle::components(dg, oracle::ComponentMode::strong).size());
    bool two_col = oracle::two_coloring(dg).bipartition.has_value();
    row.oracle_ok = weak == row.components && strong == row.components &&
                    two_col == row.bipartite;
  }
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  if (spec.p_list.empty() || spec.m_max < 1)
    throw PreconditionViolated("sweep needs a nonempty prime list and m_max >= 1");
  for (long p : spec.p_list)
    if (!is_prime(p)) throw NotPrime(p);

  std::vector<PlannedRow> plan;
  long total = 0;
  for (long p : spec.p_list) {
    long q = 1;
    for (int m = 1; m <= spec.m_max; ++m) {
      if (q > (1L << 40) / p) break;  // overflow guard
      q *= p;
      auto field = std::make_shared<FiniteField>(p, m);
      std::vector<long> ks;
      if (spec.k_list) {
        for (long k : *spec.k_list)
          if (k >= 1 && (q - 1) % k == 0) ks.push_back(k);
      } else {
        ks = divisors(q - 1);
      }
      for (long k : ks) {
        plan.push_back({p, m, q, k, field});
        total += q;
        if (total > spec.budget) throw BudgetExceeded(total, spec.budget);
      }
    }
  }

  std::sort(plan.begin(), plan.end(), [](const PlannedRow& a, const PlannedRow& b) {
    return std::tie(a.q, a.k) < std::tie(b.q, b.k);
  });

  std::vector<SweepRow> rows(plan.size());
  std::atomic<size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mu;
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= plan.size()) return;
      try {
        rows[i] = evaluate(plan[i], spec);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  unsigned nt = std::min<unsigned>(std::thread::hardware_concurrency(),
                                   static_cast<unsigned>(plan.size()));
  if (nt <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "q,k,n,a,components,directed,bipartite,srg,form\n";
  for (const auto& r : rows) {
    os << r.q << ',' << r.k << ',' << r.n << ',' << r.a << ','
       << r.components << ',' << (r.directed ? 1 : 0) << ','
       << (r.bipartite ? 1 : 0) << ',';
    if (r.srg)
      os << '(' << (*r.srg)[0] << ';' << (*r.srg)[1] << ';' << (*r.srg)[2]
         << ';' << (*r.srg)[3] << ')';
    os << ',' << r.form << '\n';
  }
  return os.str();
}

std::string sweep_json(const std::vector<SweepRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["q"] = r.q;
    j["k"] = r.k;
    j["n"] = r.n;
    j["a"] = r.a;
    j["components"] = r.components;
    j["directed"] = r.directed;
    j["bipartite"] = r.bipartite;
    if (r.srg) j["srg"] = *r.srg;
    if (!r.form.empty()) j["form"] = r.form;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

std::string sweep_markdown(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "| q | k | n | a | components | directed | bipartite | srg | form |\n";
  os << "|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    os << "| " << r.q << " | " << r.k << " | " << r.n << " | " << r.a
       << " | " << r.components << " | " << (r.directed ? "yes" : "no")
       << " | " << (r.bipartite ? "yes" : "no") << " | ";
    if (r.srg)
      os << "srg(" << (*r.srg)[0] << "," << (*r.srg)[1] << "," << (*r.srg)[2]
         << "," << (*r.srg)[3] << ")";
    else
      os << "-";
    os << " | " << (r.form.empty() ? "-" : r.form) << " |\n";
  }
  return os.str();
}

}  // namespace gp
