// End-to-end pipeline: triality group -> Moufang loop -> filtration ->
// L_p(G) -> induced triality -> H -> lemma battery -> |H| vs |U|.
// Every check lands in a named row; nothing is skipped silently.

#ifndef BURNSIDE_PIPELINE_HPP
#define BURNSIDE_PIPELINE_HPP

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "burnside/config.hpp"
#include "burnside/graded_lie.hpp"
#include "burnside/group_algebra.hpp"
#include "burnside/malcev.hpp"
#include "burnside/report.hpp"
#include "burnside/triality.hpp"

namespace burnside {

struct PipelineReport {
  std::string input;
  u32 p = 5, n = 1;
  u64 seed = 0;
  std::size_t group_order = 0, loop_order = 0, u_order = 0;
  u64 loop_exp = 0;
  bool exponent_divides = false;
  std::string filtration_route;
  std::vector<std::size_t> l_dims, h_dims;
  std::size_t h_dim = 0;
  u64 p_pow_dim_h = 0;
  std::size_t h_class = 0;
  bool h_nilpotent = false;
  std::vector<CheckItem> rows;

  void add_report(const std::string& prefix, const CheckReport& rep) {
    for (const CheckItem& it : rep.items) rows.push_back({prefix + ": " + it.name, it.status, it.detail});
  }
  void add_row(const std::string& name, const std::string& status, const std::string& detail = "") {
    rows.push_back({name, status, detail});
  }
  bool has_fail() const {
    for (const auto& r : rows)
      if (r.status == "fail") return true;
    return false;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["input"] = input;
    j["p"] = p;
    j["n"] = n;
    j["seed"] = seed;
    j["group_order"] = group_order;
    j["loop_order"] = loop_order;
    j["loop_exponent"] = loop_exp;
    j["exponent_divides_p_n"] = exponent_divides;
    j["u_order"] = u_order;
    j["filtration_route"] = filtration_route;
    j["l_dims"] = l_dims;
    j["h_dims"] = h_dims;
    j["h_dim"] = h_dim;
    j["p_pow_dim_h"] = p_pow_dim_h;
    j["h_nilpotent"] = h_nilpotent;
    j["h_nilpotency_class"] = h_class;
    nlohmann::json rws = nlohmann::json::array();
    for (const auto& r : rows) rws.push_back({{"check", r.name}, {"status", r.status}, {"detail", r.detail}});
    j["checks"] = rws;
    j["verdict"] = has_fail() ? "fail" : "pass";
    return j;
  }

  std::string text() const {
    std::ostringstream os;
    os << "pipeline report for " << input << " (p=" << p << ", n=" << n << ", seed=" << seed << ")\n";
    os << "  group order " << group_order << ", loop order " << loop_order << ", loop exponent " << loop_exp
       << ", |U| = " << u_order << "\n";
    os << "  filtration route " << filtration_route << ", L dims per degree [";
    for (std::size_t i = 0; i < l_dims.size(); ++i) os << (i ? "," : "") << l_dims[i];
    os << "], H dims per degree [";
    for (std::size_t i = 0; i < h_dims.size(); ++i) os << (i ? "," : "") << h_dims[i];
    os << "]\n";
    os << "  p^dim(H) = " << p_pow_dim_h << " vs |U| = " << u_order << "\n";
    for (const auto& r : rows) {
      os << "  [" << r.status << "] " << r.name;
      if (!r.detail.empty()) os << " -- " << r.detail;
      os << "\n";
    }
    os << (has_fail() ? "VERDICT: fail\n" : "VERDICT: pass\n");
    return os.str();
  }
};

inline PipelineReport run_pipeline(const TrialityGroup& t, u32 p, u32 n, const std::string& name) {
  PipelineReport r;
  r.input = name;
  r.p = p;
  r.n = n;
  r.seed = config().seed;
  r.group_order = t.G.n;
  u64 q = 1;
  for (u32 i = 0; i < n; ++i) q *= p;

  CheckReport pred = verify_triality(t.G, t.rho, t.sigma);
  r.add_report("Section 2 (triality predicate)", pred);
  if (!pred.all_passed()) return r;

  LoopExtraction ex = moufang_from_triality(t);
  r.loop_order = ex.loop.n;
  r.u_order = ex.U.elems.size();
  r.add_report("Section 2 (Moufang loop)", ex.moufang);
  r.loop_exp = loop_exponent(ex.loop);
  r.exponent_divides = q % r.loop_exp == 0;
  r.add_row("Section 6 (exponent divides p^n)", r.exponent_divides ? "pass" : "skip",
            "loop exponent " + std::to_string(r.loop_exp) + (r.exponent_divides ? " divides " : " does not divide ") +
                "p^n = " + std::to_string(q) + (r.exponent_divides ? "" : "; Engel checks downgraded to informational"));

  if (!t.G.is_p_group(p))
    throw std::invalid_argument("run_pipeline: " + name + " is not a " + std::to_string(p) + "-group");

  LpAlgebra A = build_lp_algebra(t.G, p);
  r.filtration_route = A.filt.route;
  r.l_dims = A.L.degree_dims;
  r.add_report("Section 3 (Zassenhaus filtration)", check_filtration(t.G, A.filt));
  r.add_report("Section 3 (restricted Lie axioms)", verify_restricted_axioms(A));

  LieTriality T = induce_triality(t, A);
  r.add_report("Lemma 3.1", verify_lie_triality(T));

  MalcevAlgebra H;
  try {
    H = extract_h(T);
    r.add_row("Lemma 3.2: H closed under *", "pass");
  } catch (const std::logic_error& e) {
    r.add_row("Lemma 3.2: H closed under *", "fail", e.what());
    return r;
  }
  r.h_dim = H.dim;
  r.h_dims.assign(A.L.max_degree(), 0);
  for (std::size_t d : H.degree_of) r.h_dims[d - 1]++;
  r.p_pow_dim_h = 1;
  for (std::size_t i = 0; i < H.dim; ++i) r.p_pow_dim_h *= p;

  r.add_report("Lemma 3.2", check_malcev_identities(H));
  r.add_report("Lemma 3.3", check_bridge_identities(T, H));
  std::vector<FpVec> gens;
  for (std::size_t i = 0; i < H.dim; ++i)
    if (H.degree_of[i] == 1) gens.push_back(H.basis(i));
  r.add_report("Lemma 3.4", check_lemma_3_4(T, H, gens));
  r.add_report("Lemma 4.4", check_lemma_4_4(T, H));
  if (p <= config().perm_budget)
    r.add_report("Lemma 4.5", check_lemma_4_5(T, H, 1));
  else
    r.add_row("Lemma 4.5", "skip", "p = " + std::to_string(p) + " exceeds the permutation budget " +
                                       std::to_string(config().perm_budget));

  auto engel_rows = [&](const std::string& prefix, const CheckReport& rep) {
    if (r.exponent_divides) {
      r.add_report(prefix, rep);
      return;
    }
    for (const CheckItem& it : rep.items)
      r.add_row(prefix + ": " + it.name, "skip",
                "informational (exponent precondition unmet): check result was '" + it.status + "'" +
                    (it.detail.empty() ? "" : ", " + it.detail));
  };
  if (q <= config().perm_budget) {
    engel_rows("Lemma 4.3", check_ambient_engel(T, H, n));
    engel_rows("Lemma 4.6 / Proposition 5.1", check_engel_hypotheses(H, n));
  } else {
    r.add_row("Lemma 4.3", "skip", "p^n = " + std::to_string(q) + " exceeds the permutation budget " +
                                       std::to_string(config().perm_budget));
    r.add_row("Lemma 4.6 / Proposition 5.1", "skip",
              "p^n = " + std::to_string(q) + " exceeds the permutation budget " +
                  std::to_string(config().perm_budget));
  }

  SeriesResult lp = series(H, SeriesKind::lower_power);
  r.h_nilpotent = lp.reaches_zero;
  r.h_class = lp.nilpotency_class;
  r.add_row("Section 5 (lower power series)", lp.reaches_zero ? "pass" : "fail",
            lp.reaches_zero ? "nilpotent of class " + std::to_string(lp.nilpotency_class)
                            : "stabilizes above zero at dim " + std::to_string(lp.terms.back().dim()));
  r.add_report("Section 5 (Kuzmin containment)", check_kuzmin(H));

  r.add_row("Section 6 (|H| vs |U|)", r.p_pow_dim_h == r.u_order ? "pass" : "fail",
            "p^dim(H) = " + std::to_string(r.p_pow_dim_h) + ", |U| = " + std::to_string(r.u_order));
  return r;
}

// Lemma rows for a direct algebra input (no group behind it): the triality
// clauses, closure of H, and the Lemma 4.4 dichotomy with its 4.5 gate.
inline std::vector<CheckItem> algebra_lemma_rows(const LieTriality& T) {
  std::vector<CheckItem> rows;
  CheckReport lt = verify_lie_triality(T);
  for (const CheckItem& it : lt.items) rows.push_back({"Lemma 3.1: " + it.name, it.status, it.detail});
  try {
    MalcevAlgebra H = extract_h(T);
    rows.push_back({"Lemma 3.2: H closed under *", "pass", "dim H = " + std::to_string(H.dim)});
    CheckReport l44 = check_lemma_4_4(T, H);
    for (const CheckItem& it : l44.items) rows.push_back({"Lemma 4.4: " + it.name, it.status, it.detail});
    CheckReport l45 = check_lemma_4_5(T, H, 1);
    for (const CheckItem& it : l45.items) rows.push_back({"Lemma 4.5: " + it.name, it.status, it.detail});
  } catch (const std::logic_error& e) {
    rows.push_back({"Lemma 3.2: H closed under *", "fail", e.what()});
  }
  return rows;
}

}  // namespace burnside

#endif  // BURNSIDE_PIPELINE_HPP
