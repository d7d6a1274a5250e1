#include "gp/golden.hpp"

#include <memory>
#include <sstream>

#include "gp/decompose.hpp"
#include "gp/errors.hpp"

namespace gp {

namespace {

constexpr bool U = false, D = true;  // directedness
const std::optional<SrgParams> none = std::nullopt;

std::vector<GoldenRow> build_rows() {
  std::vector<GoldenRow> r;
  // p, m, k, directed, components, small_q, small_k, bipartite, srg, not_srg, form

  // --- F_81, all ten divisors of 80 ---
  r.push_back({3, 4, 1, U, 1, 81, 1, false, SrgParams{81, 80, 79, 0}, false, "K_81"});
  r.push_back({3, 4, 2, U, 1, 81, 2, false, SrgParams{81, 40, 19, 20}, false, "P_81"});
  r.push_back({3, 4, 4, U, 1, 81, 4, false, SrgParams{81, 20, 1, 6}, false, "G(4,81)"});
  r.push_back({3, 4, 5, U, 1, 81, 5, false, SrgParams{81, 16, 7, 2}, false, "L_{9,9}"});
  r.push_back({3, 4, 8, U, 1, 81, 8, false, none, true, "G(8,81)"});
  r.push_back({3, 4, 10, U, 9, 9, 1, false, none, false, "9K_9"});
  r.push_back({3, 4, 16, D, 1, 81, 16, false, none, false, "G(16,81)"});
  r.push_back({3, 4, 20, U, 9, 9, 2, false, none, true, "9 x P_9"});
  r.push_back({3, 4, 40, U, 27, 3, 1, false, none, false, "27C_3"});
  r.push_back({3, 4, 80, D, 27, 3, 2, false, none, false, "27->C_3"});

  // --- F_25, all eight divisors of 24 ---
  r.push_back({5, 2, 1, U, 1, 25, 1, false, SrgParams{25, 24, 23, 0}, false, "K_25"});
  r.push_back({5, 2, 2, U, 1, 25, 2, false, SrgParams{25, 12, 5, 6}, false, "P_25"});
  r.push_back({5, 2, 3, U, 1, 25, 3, false, SrgParams{25, 8, 3, 2}, false, "L_{5,5}"});
  r.push_back({5, 2, 4, U, 1, 25, 4, false, none, true, "G(4,25)"});
  r.push_back({5, 2, 6, U, 5, 5, 1, false, none, false, "5K_5"});
  r.push_back({5, 2, 8, D, 1, 25, 8, false, none, false, "G(8,25)"});
  r.push_back({5, 2, 12, U, 5, 5, 2, false, none, false, "5C_5"});
  r.push_back({5, 2, 24, D, 5, 5, 4, false, none, false, "5->C_5"});

  // --- F_49, all ten divisors of 48 ---
  r.push_back({7, 2, 1, U, 1, 49, 1, false, SrgParams{49, 48, 47, 0}, false, "K_49"});
  r.push_back({7, 2, 2, U, 1, 49, 2, false, SrgParams{49, 24, 11, 12}, false, "P_49"});
  r.push_back({7, 2, 3, U, 1, 49, 3, false, none, true, "G(3,49)"});
  r.push_back({7, 2, 4, U, 1, 49, 4, false, SrgParams{49, 12, 5, 2}, false, "L_{7,7}"});
  r.push_back({7, 2, 6, U, 1, 49, 6, false, none, true, "G(6,49)"});
  r.push_back({7, 2, 8, U, 7, 7, 1, false, none, false, "7K_7"});
  r.push_back({7, 2, 12, U, 1, 49, 12, false, none, true, "G(12,49)"});
  r.push_back({7, 2, 16, D, 7, 7, 2, false, none, false, "7 x ->P_7"});
  r.push_back({7, 2, 24, U, 7, 7, 3, false, none, false, "7C_7"});
  r.push_back({7, 2, 48, D, 7, 7, 6, false, none, false, "7->C_7"});

  // --- binary fields, m <= 8 ---
  r.push_back({2, 1, 1, U, 1, 2, 1, true, SrgParams{2, 1, 0, 0}, false, "K_2"});
  r.push_back({2, 2, 1, U, 1, 4, 1, false, SrgParams{4, 3, 2, 0}, false, "K_4"});
  r.push_back({2, 2, 3, U, 2, 2, 1, true, none, false, "2K_2"});
  r.push_back({2, 3, 1, U, 1, 8, 1, false, none, false, "K_8"});
  r.push_back({2, 3, 7, U, 4, 2, 1, true, none, false, "4K_2"});
  r.push_back({2, 4, 1, U, 1, 16, 1, false, none, false, "K_16"});
  r.push_back({2, 4, 3, U, 1, 16, 3, false, SrgParams{16, 5, 0, 2}, false, "G(3,16)"});
  r.push_back({2, 4, 5, U, 4, 4, 1, false, none, false, "4K_4"});
  r.push_back({2, 4, 15, U, 8, 2, 1, true, none, false, "8K_2"});
  r.push_back({2, 5, 1, U, 1, 32, 1, false, none, false, "K_32"});
  r.push_back({2, 5, 31, U, 16, 2, 1, true, none, false, "16K_2"});
  r.push_back({2, 6, 1, U, 1, 64, 1, false, none, false, "K_64"});
  r.push_back({2, 6, 3, U, 1, 64, 3, false, SrgParams{64, 21, 8, 6}, false, "G(3,64)"});
  r.push_back({2, 6, 7, U, 1, 64, 7, false, none, true, "G(7,64)"});
  r.push_back({2, 6, 9, U, 8, 8, 1, false, none, false, "8K_8"});
  r.push_back({2, 6, 21, U, 16, 4, 1, false, none, false, "16 x K_4"});
  r.push_back({2, 6, 63, U, 32, 2, 1, true, none, false, "32K_2"});
  r.push_back({2, 7, 1, U, 1, 128, 1, false, none, false, "K_128"});
  r.push_back({2, 7, 127, U, 64, 2, 1, true, none, false, "64K_2"});
  r.push_back({2, 8, 1, U, 1, 256, 1, false, none, false, "K_256"});
  r.push_back({2, 8, 3, U, 1, 256, 3, false, SrgParams{256, 85, 24, 30}, false, "G(3,256)"});
  r.push_back({2, 8, 5, U, 1, 256, 5, false, SrgParams{256, 51, 2, 12}, false, "G(5,256)"});
  r.push_back({2, 8, 15, U, 1, 256, 15, false, none, true, "G(15,256)"});
  r.push_back({2, 8, 17, U, 16, 16, 1, false, none, false, "16K_16"});
  r.push_back({2, 8, 51, U, 16, 16, 3, false, none, false, "16 x G(3,16)"});
  r.push_back({2, 8, 85, U, 64, 4, 1, false, none, false, "64 x K_4"});
  r.push_back({2, 8, 255, U, 128, 2, 1, true, none, false, "128K_2"});
  return r;
}

}  // namespace

const std::vector<GoldenRow>& golden_rows() {
  static const std::vector<GoldenRow> rows = build_rows();
  return rows;
}

GoldenCheck check_golden_row(const GoldenRow& row) {
  std::ostringstream claim;
  claim << "G(" << row.k << "," << [&] {
    long q = 1;
    for (int i = 0; i < row.m; ++i) q *= row.p;
    return q;
  }() << ")";
  GoldenCheck out{claim.str(), true, ""};
  auto fail = [&](const std::string& why) {
    if (out.pass) {
      out.pass = false;
      out.detail = why;
    }
  };
  try {
    auto field = std::make_shared<FiniteField>(row.p, row.m);
    GPGraph g(field, row.k);
    auto d = decompose(g);
    auto c = classify(g, d);

    if (g.directed() != row.directed) fail("directedness");
    if (d.params.component_count != row.components) fail("component count");
    if (d.small_field->q() != row.small_q) fail("component field size");
    if (d.params.k_a != row.small_k) fail("component exponent");
    if (c.bipartite != row.bipartite) fail("bipartiteness");
    if (row.srg) {
      if (!c.srg_params)
        fail("expected srg, got none");
      else if (*c.srg_params != *row.srg) {
        std::ostringstream os;
        const auto& s = *c.srg_params;
        os << "srg mismatch: got (" << s[0] << "," << s[1] << "," << s[2]
           << "," << s[3] << ")";
        fail(os.str());
      }
    }
    if (row.not_srg && c.srg_params) fail("expected non-srg");
    if (!row.form.empty() && c.named_form.to_string() != row.form)
      fail("form mismatch: got " + c.named_form.to_string());
  } catch (const Error& e) {
    fail(std::string("exception: ") + e.what());
  }
  return out;
}

std::vector<GoldenCheck> run_golden() {
  std::vector<GoldenCheck> out;
  for (const auto& row : golden_rows()) out.push_back(check_golden_row(row));
  return out;
}

}  // namespace gp
