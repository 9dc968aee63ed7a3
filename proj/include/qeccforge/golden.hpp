#ifndef QECCFORGE_GOLDEN_HPP
#define QECCFORGE_GOLDEN_HPP

#include "qeccforge/construct.hpp"
#include "qeccforge/golden_data.hpp"
#include "qeccforge/groundspace.hpp"
#include "qeccforge/io.hpp"
#include "qeccforge/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qeccforge {

inline const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names{"steane",          "c633",  "c422", "cyclic482",
                                              "steane-embedded", "spin8", "spin6"};
  return names;
}

inline std::string golden_text(std::string_view file) {
  for (const auto& f : golden_data::files)
    if (f.name == file) return std::string(f.text);
  throw InputError("no embedded golden file " + std::string(file));
}

inline ClassicalCode golden_code(std::string_view file) { return parse_code_string(golden_text(file)); }

inline QuantumCode golden_states(std::string_view file) {
  return quantum_code_from_json(Json::parse(golden_text(file)));
}

struct ExampleCheck {
  std::string what;
  bool ok = false;
  std::string detail;
};

struct ExampleReport {
  std::string name;
  bool matched = true;
  std::vector<ExampleCheck> checks;
  std::optional<QuantumCode> code;
  double seconds = 0.0;

  void check(std::string what, bool ok, std::string detail = {}) {
    matched = matched && ok;
    checks.push_back({std::move(what), ok, std::move(detail)});
  }
};

/// Same support set and amplitudes. With `exact`, rational squares must agree
/// wherever the expectation carries one; otherwise amplitudes agree within tol.
inline bool same_state(const LogicalState& got, const LogicalState& want, bool exact, double tol,
                       std::string* why = nullptr) {
  auto fail = [&](std::string m) {
    if (why) *why = std::move(m);
    return false;
  };
  if (got.support.size() != want.support.size())
    return fail("support size " + std::to_string(got.support.size()) + " vs " +
                std::to_string(want.support.size()));
  std::map<Codeword, const SupportTerm*> index;
  for (const auto& t : got.support) index[t.codeword] = &t;
  for (const auto& w : want.support) {
    auto it = index.find(w.codeword);
    if (it == index.end()) return fail("missing codeword " + codeword_string(w.codeword, false));
    const SupportTerm& g = *it->second;
    if (exact && w.amp_sq) {
      if (!g.amp_sq) return fail("no exact amplitude for " + codeword_string(w.codeword, false));
      if (*g.amp_sq != *w.amp_sq)
        return fail("amp^2 " + g.amp_sq->str() + " vs " + w.amp_sq->str() + " at " +
                    codeword_string(w.codeword, false));
    } else if (std::abs(g.amp - w.amp) > tol) {
      return fail("amplitude " + fmt12(g.amp) + " vs " + fmt12(w.amp) + " at " +
                  codeword_string(w.codeword, false));
    }
  }
  return true;
}

/// Matches states in order.
inline bool same_states_ordered(const QuantumCode& got, const QuantumCode& want, bool exact, double tol,
                                std::string* why) {
  if (got.states.size() != want.states.size()) {
    *why = std::to_string(got.states.size()) + " states, expected " + std::to_string(want.states.size());
    return false;
  }
  for (std::size_t i = 0; i < want.states.size(); ++i) {
    std::string w;
    if (!same_state(got.states[i], want.states[i], exact, tol, &w)) {
      *why = "state " + std::to_string(i) + ": " + w;
      return false;
    }
  }
  return true;
}

/// Matches states as an unordered collection.
inline bool same_states_unordered(const QuantumCode& got, const QuantumCode& want, bool exact, double tol,
                                  std::string* why) {
  if (got.states.size() != want.states.size()) {
    *why = std::to_string(got.states.size()) + " states, expected " + std::to_string(want.states.size());
    return false;
  }
  std::vector<bool> used(got.states.size(), false);
  for (std::size_t i = 0; i < want.states.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < got.states.size() && !found; ++j)
      if (!used[j] && same_state(got.states[j], want.states[i], exact, tol)) used[j] = found = true;
    if (!found) {
      *why = "expected state " + std::to_string(i) + " not produced";
      return false;
    }
  }
  return true;
}

inline bool supports_in_Tn(const QuantumCode& code) {
  for (const auto& st : code.states)
    for (const auto& t : st.support)
      if (!is_allowed_spin_string(t.codeword)) return false;
  return true;
}

namespace detail {

inline std::string kl_detail(const KLReport& r) {
  return std::to_string(r.paulis_checked) + " Paulis, worst " + fmt12(r.worst_violation);
}

inline void expect_failure(ExampleReport& rep, const std::string& what, Failure expected,
                           const std::function<void()>& body) {
  try {
    body();
    rep.check(what, false, "construction unexpectedly succeeded");
  } catch (const ConstructionError& e) {
    rep.check(what, e.kind() == expected, e.what());
  }
}

inline void run_steane(ExampleReport& rep, const KLOptions& kopt) {
  ConstructOptions copt;
  copt.backend = KernelBackend::Exact;
  QuantumCode code = build_logical_qubit(golden_code("steane.code"), 3, 3, copt);
  rep.check("kernel dimension 1", code.provenance.kernel_dimension == 1,
            std::to_string(code.provenance.kernel_dimension));
  rep.check("exact backend", code.provenance.backend == "exact", code.provenance.backend);
  std::string why;
  rep.check("states match exactly", same_states_ordered(code, golden_states("steane.expected.json"), true, 0.0, &why),
            why);
  const KLReport r = kl_verify(code, 3, 3, kopt);
  rep.check("KL at d_X = d_Z = 3", r.passed, kl_detail(r));
  rep.code = std::move(code);
}

inline void run_c633(ExampleReport& rep, const KLOptions& kopt) {
  const ClassicalCode c = golden_code("c633.code");
  expect_failure(rep, "no code at d_Z = 3", Failure::TrivialKernel, [&] { build_logical_qubit(c, 3, 3); });
  QuantumCode code = build_logical_qubit(c, 3, 2);
  std::string why;
  rep.check("4+4 code at d_X = 3, d_Z = 2",
            same_states_ordered(code, golden_states("c633.expected.json"), true, 0.0, &why), why);
  const KLReport r = kl_verify(code, 3, 2, kopt);
  rep.check("KL at d_X = 3, d_Z = 2", r.passed, kl_detail(r));
  rep.code = std::move(code);
}

inline void run_c422(ExampleReport& rep, const KLOptions&) {
  const ClassicalCode c = golden_code("c422.code");
  expect_failure(rep, "no code at d = 2", Failure::TrivialKernel, [&] { build_logical_qubit(c, 2, 2); });
}

inline void run_cyclic482(ExampleReport& rep, const KLOptions& kopt) {
  const ClassicalCode c = golden_code("cyclic482.code");
  const AMatrix a = build_a_matrix(c, 2);
  const KernelBasis k = kernel(a);
  rep.check("kernel dimension 3", k.dimension() == 3, std::to_string(k.dimension()));
  const QuantumCode want = golden_states("cyclic482.expected.json");
  std::optional<QuantumCode> hit;
  std::string tried;
  for (std::size_t idx = 0; idx < k.dimension() && !hit; ++idx) {
    ConstructOptions copt;
    copt.kernel_index = idx;
    QuditResult res = build_logical_qudit(c, 2, 2, copt);
    std::string why;
    if (!res.halted || res.code.states.size() == want.states.size()) {
      if (same_states_unordered(res.code, want, true, 0.0, &why)) {
        hit = std::move(res.code);
        tried += "index " + std::to_string(idx) + " matches";
        break;
      }
    } else {
      why = "halted: " + res.halt_reason;
    }
    tried += "index " + std::to_string(idx) + ": " + why + "; ";
  }
  rep.check("four states match for some kernel index", hit.has_value(), tried);
  if (!hit) return;
  for (std::size_t i = 0; i + 1 < hit->states.size(); ++i)
    for (std::size_t j = i + 1; j < hit->states.size(); ++j) {
      QuantumCode pair = *hit;
      pair.states = {hit->states[i], hit->states[j]};
      const KLReport r = kl_verify(pair, 2, 2, kopt);
      rep.check("KL at d = 2 for states " + std::to_string(i) + "," + std::to_string(j), r.passed, kl_detail(r));
    }
  const KLReport all = kl_verify(*hit, 2, 2, kopt);
  rep.check("KL at d = 2 for all four states", all.passed, kl_detail(all));
  rep.code = std::move(*hit);
}

inline void run_steane_embedded(ExampleReport& rep, const KLOptions& kopt) {
  ConstructOptions copt;
  copt.backend = KernelBackend::Float;
  EmbedResult e = embed_and_check(golden_code("steane.code"), 2, 3, 3, copt, kopt);
  rep.check("embedded words avoid (m, -m) pairs", e.all_in_Tn);
  rep.check("supports are product ground states", e.all_ground_states && supports_in_Tn(e.code));
  std::string why;
  rep.check("states match", same_states_ordered(e.code, golden_states("steane-embedded.expected.json"), false, 1e-9, &why),
            why);
  rep.check("KL at d_X = d_Z = 3", e.report.passed, kl_detail(e.report));
  rep.code = std::move(e.code);
}

inline void run_listed(ExampleReport& rep, const KLOptions& kopt, std::string_view file, int d) {
  QuantumCode code = golden_states(file);
  rep.check("supports in T_" + std::to_string(code.n), supports_in_Tn(code));
  bool normalized = true;
  for (const auto& st : code.states) normalized = normalized && std::abs(st.norm_sq() - 1.0) < 1e-12;
  rep.check("states normalized", normalized);
  const KLReport r = kl_verify(code, d, d, kopt);
  rep.check("KL at d_X = d_Z = " + std::to_string(d), r.passed, kl_detail(r));
  rep.code = std::move(code);
}

inline void run_spin6(ExampleReport& rep, const KLOptions& kopt) {
  run_listed(rep, kopt, "spin6.json", 2);
  KLOptions fast = kopt;
  fast.fail_fast = true;
  fast.record_c_values = false;
  const KLReport rx = kl_verify(*rep.code, 3, 2, fast);
  rep.check("fails KL at d_X = 3", !rx.passed, kl_detail(rx));
  const KLReport rz = kl_verify(*rep.code, 2, 3, fast);
  rep.check("fails KL at d_Z = 3", !rz.passed, kl_detail(rz));
}

}  // namespace detail

/// Runs one named example end to end and compares with its embedded expectation.
/// Construction errors that the example does not expect count as a mismatch.
inline ExampleReport run_example(const std::string& name, KLOptions kopt = {}) {
  kopt.record_c_values = false;
  ExampleReport rep;
  rep.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (name == "steane") detail::run_steane(rep, kopt);
    else if (name == "c633") detail::run_c633(rep, kopt);
    else if (name == "c422") detail::run_c422(rep, kopt);
    else if (name == "cyclic482") detail::run_cyclic482(rep, kopt);
    else if (name == "steane-embedded") detail::run_steane_embedded(rep, kopt);
    else if (name == "spin8") detail::run_listed(rep, kopt, "spin8.json", 3);
    else if (name == "spin6") detail::run_spin6(rep, kopt);
    else throw InputError("unknown example '" + name + "'");
  } catch (const ConstructionError& e) {
    rep.check("pipeline", false, e.what());
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

inline Json to_json(const ExampleReport& r) {
  Json j;
  j["example"] = r.name;
  j["matched"] = r.matched;
  Json cs = Json::array();
  for (const auto& c : r.checks) cs.push_back(Json{{"check", c.what}, {"ok", c.ok}, {"detail", c.detail}});
  j["checks"] = std::move(cs);
  return j;
}

}  // namespace qeccforge

#endif  // QECCFORGE_GOLDEN_HPP
