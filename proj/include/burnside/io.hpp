// JSON interchange: group / loop / triality file schemas, constructor
// descriptors for inputs too large to ship as tables, and the built-in
// input fleet.
//
// Schemas (0-based indices, identity at index 0):
//   group file:    {"order": n, "table": [[...]], "p_hint": optional}
//   triality file: group file plus {"rho": [perm], "sigma": [perm]}
//   loop file:     group file without the associativity requirement
// Descriptor files instead carry {"construct": name, ...} and are expanded
// through the library constructors.
//
// Malformed structure throws FormatError (CLI exit 2); structurally valid
// input that fails a mathematical check throws the library's usual
// exceptions (CLI exit 1).

#ifndef BURNSIDE_IO_HPP
#define BURNSIDE_IO_HPP

#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "burnside/graded_lie.hpp"
#include "burnside/group.hpp"
#include "burnside/loop.hpp"
#include "burnside/triality.hpp"

namespace burnside {

using nlohmann::json;

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline bool is_uint(const json& j) {
  return j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0);
}

inline std::vector<u16> parse_table(const json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) throw FormatError(std::string(what) + ": table must be an order x order array");
  std::vector<u16> t;
  t.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != n) throw FormatError(std::string(what) + ": table row has wrong length");
    for (const json& e : row) {
      if (!detail::is_uint(e) || e.get<u64>() >= n)
        throw FormatError(std::string(what) + ": table entry out of range");
      t.push_back(static_cast<u16>(e.get<u32>()));
    }
  }
  return t;
}

inline std::vector<u32> parse_perm(const json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) throw FormatError(std::string(what) + ": permutation must have length order");
  std::vector<u32> perm;
  std::vector<bool> seen(n, false);
  for (const json& e : j) {
    if (!detail::is_uint(e) || e.get<u64>() >= n)
      throw FormatError(std::string(what) + ": permutation entry out of range");
    u32 v = e.get<u32>();
    if (seen[v]) throw FormatError(std::string(what) + ": permutation repeats an index");
    seen[v] = true;
    perm.push_back(v);
  }
  return perm;
}

inline std::size_t parse_order(const json& j, const char* what) {
  if (!j.is_object()) throw FormatError(std::string(what) + ": expected a JSON object");
  if (!j.contains("order") || !detail::is_uint(j["order"]) || j["order"].get<u64>() == 0 ||
      j["order"].get<u64>() > 65535)
    throw FormatError(std::string(what) + ": missing or invalid \"order\"");
  if (!j.contains("table")) throw FormatError(std::string(what) + ": missing \"table\"");
  return j["order"].get<std::size_t>();
}

}  // namespace detail

inline json group_to_json(const FiniteGroup& g) {
  json j;
  j["order"] = g.n;
  json table = json::array();
  for (u32 i = 0; i < g.n; ++i) {
    json row = json::array();
    for (u32 k = 0; k < g.n; ++k) row.push_back(g.mul(i, k));
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  return j;
}

inline FiniteGroup group_from_json(const json& j, GroupOptions opts = {}) {
  std::size_t n = detail::parse_order(j, "group");
  if (j.contains("p_hint") && !detail::is_uint(j["p_hint"]))
    throw FormatError("group: \"p_hint\" must be an unsigned number");
  return FiniteGroup::from_table("input_group", static_cast<u32>(n),
                                 detail::parse_table(j["table"], n, "group"), {}, opts);
}

inline json loop_to_json(const Loop& l) {
  json j;
  j["order"] = l.n;
  json table = json::array();
  for (u32 i = 0; i < l.n; ++i) {
    json row = json::array();
    for (u32 k = 0; k < l.n; ++k) row.push_back(l.mul(i, k));
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  return j;
}

inline Loop loop_from_json(const json& j) {
  std::size_t n = detail::parse_order(j, "loop");
  return Loop::from_table("input_loop", static_cast<u32>(n), detail::parse_table(j["table"], n, "loop"));
}

inline json triality_to_json(const TrialityGroup& t) {
  json j = group_to_json(t.G);
  j["rho"] = t.rho.images;
  j["sigma"] = t.sigma.images;
  return j;
}

// Constructor descriptors, for inputs whose tables would be impractical to
// ship (the order-15625 doublings in particular).
inline FiniteGroup group_from_descriptor(const json& j, GroupOptions opts = {});

inline TrialityGroup triality_from_descriptor(const json& j, GroupOptions opts = {}) {
  if (!j.is_object() || !j.contains("construct") || !j["construct"].is_string())
    throw FormatError("descriptor: missing \"construct\"");
  std::string c = j["construct"].get<std::string>();
  if (c == "abelian_doubling") {
    if (!j.contains("base")) throw FormatError("abelian_doubling: missing \"base\"");
    return abelian_doubling(group_from_descriptor(j["base"], opts));
  }
  if (c == "group_doubling") {
    GroupOptions o = opts;
    if (j.contains("max_order")) o.max_order = j["max_order"].get<u64>();
    if (!j.contains("base")) throw FormatError("group_doubling: missing \"base\"");
    return group_doubling(group_from_descriptor(j["base"], o), o);
  }
  throw FormatError("descriptor: unknown triality construct \"" + c + "\"");
}

inline FiniteGroup group_from_descriptor(const json& j, GroupOptions opts) {
  if (j.is_object() && j.contains("table")) return group_from_json(j, opts);
  if (!j.is_object() || !j.contains("construct") || !j["construct"].is_string())
    throw FormatError("descriptor: missing \"construct\"");
  std::string c = j["construct"].get<std::string>();
  auto need = [&](const char* key) -> u64 {
    if (!j.contains(key) || !detail::is_uint(j[key]))
      throw FormatError(c + ": missing or invalid \"" + key + "\"");
    return j[key].get<u64>();
  };
  if (c == "cyclic") return FiniteGroup::cyclic(need("n"));
  if (c == "elementary_abelian") return FiniteGroup::elementary_abelian(static_cast<u32>(need("p")), static_cast<u32>(need("k")));
  if (c == "heisenberg") return FiniteGroup::heisenberg(static_cast<u32>(need("p")));
  if (c == "modular_p3") return FiniteGroup::modular_p3(static_cast<u32>(need("p")));
  if (c == "direct_product") {
    if (!j.contains("factors") || !j["factors"].is_array() || j["factors"].size() < 2)
      throw FormatError("direct_product: \"factors\" must list at least two groups");
    FiniteGroup g = group_from_descriptor(j["factors"][0], opts);
    for (std::size_t i = 1; i < j["factors"].size(); ++i)
      g = FiniteGroup::direct_product(g, group_from_descriptor(j["factors"][i], opts));
    return g;
  }
  throw FormatError("descriptor: unknown group construct \"" + c + "\"");
}

// A triality input file is either an explicit table file or a descriptor.
inline TrialityGroup read_triality_json(const json& j, GroupOptions opts = {}) {
  if (j.is_object() && j.contains("construct")) return triality_from_descriptor(j, opts);
  std::size_t n = detail::parse_order(j, "triality");
  if (!j.contains("rho") || !j.contains("sigma"))
    throw FormatError("triality: missing \"rho\" or \"sigma\"");
  FiniteGroup g = group_from_json(j, opts);
  TrialityGroup t;
  t.G = std::move(g);
  t.rho = GroupMap{detail::parse_perm(j["rho"], n, "triality rho")};
  t.sigma = GroupMap{detail::parse_perm(j["sigma"], n, "triality sigma")};
  return t;
}

inline std::vector<std::string> example_4_expected_failures(int sigma_sign) {
  if (sigma_sign >= 0) return {"Lemma 3.1: sigma_automorphism", "Lemma 3.2: H closed under *"};
  return {"Lemma 3.1: triality_identity", "Lemma 4.4: lemma_4_4"};
}

inline u32 smallest_prime_factor(u64 n) {
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return static_cast<u32>(d);
  return static_cast<u32>(n);
}

// One parsed input: either a triality group or a direct algebra example.
struct TrialityInput {
  std::string name;
  std::optional<TrialityGroup> group;
  std::optional<LieTriality> algebra;
  u32 p_hint = 0;  // 0 = infer from the group order
  std::vector<std::string> expected_failures;

  u32 p() const {
    if (p_hint) return p_hint;
    if (algebra) return algebra->L.p;
    return smallest_prime_factor(group->G.n);
  }
};

inline TrialityInput read_input_json(const json& j, const std::string& name, GroupOptions opts = {}) {
  TrialityInput in;
  in.name = name;
  if (j.is_object() && j.contains("p_hint") && detail::is_uint(j["p_hint"]))
    in.p_hint = j["p_hint"].get<u32>();
  if (j.is_object() && j.contains("construct") && j["construct"].is_string() &&
      j["construct"].get<std::string>() == "example_4") {
    u32 p = j.contains("p") ? j["p"].get<u32>() : 5;
    int sign = j.contains("sigma_sign") ? j["sigma_sign"].get<int>() : -1;
    in.algebra = example_4_algebra(p, sign);
    in.expected_failures = example_4_expected_failures(sign);
    return in;
  }
  in.group = read_triality_json(j, opts);
  return in;
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw FormatError("invalid JSON in " + path);
  return j;
}

inline std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

// ---- built-in fleet -------------------------------------------------------

struct FleetEntry {
  std::string name;
  std::optional<TrialityGroup> group;   // group-derived entry
  std::optional<LieTriality> algebra;   // direct algebra entry (the 3-dim example)
  u32 p = 5;
  // row names whose failure is the expected outcome for this entry
  std::vector<std::string> expected_failures;
};

inline std::vector<FleetEntry> builtin_fleet(bool include_example = true) {
  GroupOptions big;
  big.max_order = 20000;
  std::vector<FleetEntry> fleet;
  fleet.push_back({"abelian_doubling(C_5)", abelian_doubling(FiniteGroup::cyclic(5)), std::nullopt, 5, {}});
  fleet.push_back({"abelian_doubling(C_5xC_5)", abelian_doubling(FiniteGroup::elementary_abelian(5, 2)),
                   std::nullopt, 5, {}});
  fleet.push_back({"abelian_doubling(C_7)", abelian_doubling(FiniteGroup::cyclic(7)), std::nullopt, 7, {}});
  fleet.push_back({"group_doubling(Heisenberg_125)", group_doubling(FiniteGroup::heisenberg(5), big),
                   std::nullopt, 5, {}});
  fleet.push_back({"group_doubling(modular_125)", group_doubling(FiniteGroup::modular_p3(5), big),
                   std::nullopt, 5, {}});
  if (include_example) {
    fleet.push_back({"example_4(sigma=+1)", std::nullopt, example_4_algebra(5, +1), 5,
                     example_4_expected_failures(+1)});
    fleet.push_back({"example_4(sigma=-1)", std::nullopt, example_4_algebra(5, -1), 5,
                     example_4_expected_failures(-1)});
  }
  return fleet;
}

}  // namespace burnside

#endif  // BURNSIDE_IO_HPP
