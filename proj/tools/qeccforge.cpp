#include "qeccforge/aqecc.hpp"
#include "qeccforge/construct.hpp"
#include "qeccforge/golden.hpp"
#include "qeccforge/groundspace.hpp"
#include "qeccforge/io.hpp"
#include "qeccforge/perminv.hpp"
#include "qeccforge/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace qeccforge;

namespace {

enum Exit { Ok = 0, VerifyFailed = 1, GoldenMismatch = 2, Infeasible = 3, BadInput = 4 };

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

KernelBackend parse_backend(const std::string& s) {
  if (s == "auto") return KernelBackend::Auto;
  if (s == "exact") return KernelBackend::Exact;
  if (s == "float") return KernelBackend::Float;
  throw InputError("backend must be auto, exact or float");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct ConstructArgs {
  std::string code, out, states, backend = "auto";
  int dx = 1, dz = 1;
  std::size_t kernel_index = 0;
};

int cmd_construct(const ConstructArgs& a) {
  const ClassicalCode code = read_code_file(a.code);
  ConstructOptions opt;
  opt.backend = parse_backend(a.backend);
  opt.kernel_index = a.kernel_index;
  if (a.states.empty()) {
    write_output(a.out, dump(to_json(build_logical_qubit(code, a.dx, a.dz, opt))));
    return Ok;
  }
  if (a.states != "max") {
    const int m = parse_int(a.states, 0);
    if (m < 2) throw InputError("--states needs an integer >= 2 or 'max'");
    opt.states = static_cast<std::size_t>(m);
  }
  const QuditResult r = build_logical_qudit(code, a.dx, a.dz, opt);
  write_output(a.out, dump(to_json(r.code)));
  if (r.halted || r.exhausted) {
    std::cerr << "recursion stopped after " << r.code.states.size() << " states: " << r.halt_reason << "\n";
    if (opt.states && r.code.states.size() < *opt.states) return Infeasible;
  }
  return Ok;
}

struct VerifyArgs {
  std::string code, out;
  int dx = 0, dz = 0;
  double tol = 1e-8;
  bool total = false, quiet = false;
};

int cmd_verify(const VerifyArgs& a) {
  const QuantumCode code = read_quantum_code(a.code);
  KLOptions opt;
  opt.tol = a.tol;
  opt.mode = a.total ? WeightMode::Total : WeightMode::Separate;
  const int dx = a.dx > 0 ? a.dx : code.d_x, dz = a.dz > 0 ? a.dz : code.d_z;
  const KLReport r = kl_verify(code, dx, dz, opt);
  write_output(a.out, dump(to_json(r, true)));
  if (!a.quiet)
    std::cerr << (r.passed ? "PASSED" : "FAILED") << ": KL at d_X = " << dx << ", d_Z = " << dz << " over "
              << r.paulis_checked << " Paulis, worst violation " << fmt12(r.worst_violation) << "\n";
  return r.passed ? Ok : VerifyFailed;
}

int cmd_certify(const std::string& path, double tol) {
  const QuantumCode code = read_quantum_code(path);
  KLOptions opt;
  opt.tol = tol;
  const DistanceCertificate c = certify_distance(code, opt);
  std::cout << dump(Json{{"d_x", c.d_x}, {"d_z", c.d_z}, {"distance", c.overall()}});
  return Ok;
}

int cmd_amatrix(const std::string& path, int dz, const std::string& backend, const std::string& out) {
  const ClassicalCode code = read_code_file(path);
  const AMatrix a = build_a_matrix(code, dz);
  KernelOptions kopt;
  kopt.backend = parse_backend(backend);
  const KernelBasis k = kernel(a, kopt);
  if (out.empty()) {
    std::cout << amatrix_csv(a);
    return Ok;
  }
  write_output(out + ".csv", amatrix_csv(a));
  write_output(out + ".json", dump(amatrix_sidecar(a, k)));
  return Ok;
}

int cmd_gs_enum(int s, int n) {
  std::string text;
  for_each_Tn(s, n, [&](const SpinString& t) { text += format_spin_string(t) + "\n"; });
  std::cout << text;
  return Ok;
}

int cmd_gs_dim(int s, int n) {
  Json j;
  j["s"] = s;
  j["n"] = n;
  j["T_n"] = big_to_json(count_Tn(s, n));
  j["kernel_dimension"] = big_to_json(kernel_dimension(s, n));
  j["ground_fraction"] = product_ground_fraction(s, n);
  std::cout << dump(j);
  return Ok;
}

int cmd_gs_reduce(const std::string& text) {
  SpinString t;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) t.push_back(parse_int(tok, 0));
  const CanonicalForm c = canonicalize(t);
  std::cout << dump(Json{{"canonical", format_spin_string(c.full())},
                         {"irreducible", format_spin_string(c.irreducible)},
                         {"k", c.k()}});
  return Ok;
}

int cmd_gs_embed(const std::string& path, int s, int dx, int dz, const std::string& out) {
  const EmbedResult e = embed_and_check(read_code_file(path), s, dx, dz);
  Json j = to_json(e.code);
  j["checks"] = Json{{"in_T_n", e.all_in_Tn}, {"ground_states", e.all_ground_states}, {"kl", to_json(e.report, false)}};
  write_output(out, dump(j));
  return e.report.passed && e.all_in_Tn && e.all_ground_states ? Ok : VerifyFailed;
}

struct AqeccArgs {
  std::vector<std::string> pairs;
  int q = 2, n = 6, dx = 1, dz = 2;
  std::size_t m = 0, trials = 10;
  std::uint64_t seed = 1;
};

int cmd_aqecc(const AqeccArgs& a) {
  if (!a.pairs.empty()) {
    std::vector<GammaVector> gs;
    int q = 0, n = 0, dz = 0;
    for (const auto& p : a.pairs) {
      const QuantumCode c = read_quantum_code(p);
      if (c.states.size() != 2) throw InputError(p + ": a pair file holds exactly two states");
      q = c.q();
      n = c.n;
      dz = c.d_z;
      gs.push_back(gamma_vector(c.states[0], c.states[1], q, n, c.d_x, c.d_z, gs.size()));
    }
    const double d = delta(gs);
    const InfidelityBound ib = infidelity_bound(d, q, n, dz);
    std::cout << "pairs,delta,infidelity_bound\n" << gs.size() << "," << fmt12(d) << "," << fmt12(ib.value) << "\n";
    std::cerr << "note: " << ib.caveat << "\n";
    return Ok;
  }
  if (a.m == 0) throw InputError("give --pairs or random-code settings with --m");
  std::cout << "seed,pairs,logical_states,delta,expected_M\n";
  for (const auto& t : aqecc_monte_carlo(a.q, a.n, a.m, a.dx, a.dz, a.trials, a.seed))
    std::cout << t.seed << "," << t.pairs << "," << t.logical_states << ","
              << (t.delta ? fmt12(*t.delta) : "") << "," << (t.expected_M ? fmt12(*t.expected_M) : "") << "\n";
  return Ok;
}

int cmd_perminv(int n, int d, std::size_t kernel_index, bool dicke, bool ignore, const std::string& out) {
  PermInvOptions opt;
  opt.kernel_index = kernel_index;
  opt.ignore_inequality = ignore;
  const PermInvCode c = build_perminv_code(n, d, opt);
  if (!dicke) {
    QuantumCode q = expand_perminv(c);
    write_output(out, dump(to_json(q)));
    return Ok;
  }
  Json j;
  j["n"] = c.n;
  j["d"] = c.d;
  j["kernel_dimension"] = c.kernel_dimension;
  j["classes"] = Json{{"exact", big_to_json(c.class_count.exact)},
                      {"stated_formula", big_to_json(c.class_count.stated_formula)},
                      {"bound", big_to_json(c.class_count.bound)}};
  Json states = Json::array();
  for (std::size_t s = 0; s < c.states.size(); ++s) {
    Json sup = Json::array();
    for (const auto& t : c.states[s])
      sup.push_back(Json{{"dicke_weight", t.weight},
                         {"amp", std::sqrt(to_double(t.prob))},
                         {"amp_sq_num", big_to_json(numerator(t.prob))},
                         {"amp_sq_den", big_to_json(denominator(t.prob))}});
    states.push_back(Json{{"label", s}, {"support", std::move(sup)}});
  }
  j["states"] = std::move(states);
  const PermInvCheck chk = perminv_kl_check(c);
  j["kl"] = Json{{"passed", chk.passed}, {"classes_checked", chk.classes_checked}, {"worst_violation", chk.worst_violation}};
  write_output(out, dump(j));
  return chk.passed ? Ok : VerifyFailed;
}

int cmd_examples(const std::string& which, bool json) {
  std::vector<std::string> names;
  if (which == "all") names = example_names();
  else names = {which};
  bool all = true;
  Json reports = Json::array();
  for (const auto& n : names) {
    const ExampleReport r = run_example(n);
    all = all && r.matched;
    if (json) {
      reports.push_back(to_json(r));
      continue;
    }
    std::cout << (r.matched ? "MATCH    " : "MISMATCH ") << r.name << " (" << fmt12(r.seconds) << " s)\n";
    for (const auto& c : r.checks)
      std::cout << "  [" << (c.ok ? "ok" : "!!") << "] " << c.what << (c.detail.empty() ? "" : ": " + c.detail)
                << "\n";
  }
  if (json) std::cout << dump(reports);
  return all ? Ok : GoldenMismatch;
}

int cmd_random_code(int q, int n, std::size_t m, std::uint64_t seed, const std::string& out) {
  const ClassicalCode c = random_code(q, n, m, seed);
  write_output(out, "# random code q=" + std::to_string(q) + " n=" + std::to_string(n) + " m=" + std::to_string(m) +
                        " seed=" + std::to_string(seed) + "\n" + format_code(c));
  return Ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qeccforge: quantum codes from classical codes"};
  app.require_subcommand(1);
  int status = Ok;

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build logical states from a classical code");
  construct->add_option("--code", ca.code, "classical code file")->required();
  construct->add_option("--dx", ca.dx, "bit-flip distance")->required();
  construct->add_option("--dz", ca.dz, "phase-flip distance")->required();
  construct->add_option("--states", ca.states, "number of logical states (M or 'max')");
  construct->add_option("--kernel-index", ca.kernel_index, "kernel basis vector to use");
  construct->add_option("--backend", ca.backend, "auto, exact or float");
  construct->add_option("--out", ca.out, "output JSON (stdout if omitted)");
  construct->callback([&] { status = cmd_construct(ca); });

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check the Knill-Laflamme conditions");
  verify->add_option("--code", va.code, "code JSON")->required();
  verify->add_option("--dx", va.dx, "override d_X");
  verify->add_option("--dz", va.dz, "override d_Z");
  verify->add_option("--tol", va.tol, "absolute tolerance");
  verify->add_flag("--total-weight", va.total, "bound total weight by min(d_X, d_Z) - 1");
  verify->add_option("--out", va.out, "report JSON (stdout if omitted)");
  verify->add_flag("--quiet", va.quiet, "no summary line");
  verify->callback([&] { status = cmd_verify(va); });

  std::string cert_code;
  double cert_tol = 1e-8;
  auto* certify = app.add_subcommand("certify", "largest verified d_X and d_Z");
  certify->add_option("--code", cert_code, "code JSON")->required();
  certify->add_option("--tol", cert_tol, "absolute tolerance");
  certify->callback([&] { status = cmd_certify(cert_code, cert_tol); });

  std::string am_code, am_backend = "auto", am_out;
  int am_dz = 2;
  auto* amatrix = app.add_subcommand("amatrix", "export the constraint matrix");
  amatrix->add_option("--code", am_code, "classical code file")->required();
  amatrix->add_option("--dz", am_dz, "phase-flip distance")->required();
  amatrix->add_option("--backend", am_backend, "kernel backend");
  amatrix->add_option("--out", am_out, "output prefix for .csv and .json");
  amatrix->callback([&] { status = cmd_amatrix(am_code, am_dz, am_backend, am_out); });

  auto* gs = app.add_subcommand("groundspace", "spin-chain ground space tools");
  gs->require_subcommand(1);
  int gs_s = 2, gs_n = 4, gs_dx = 3, gs_dz = 3;
  std::string gs_string, gs_construct = "gv", gs_range = "1..20", gs_code, gs_out;
  auto* gs_enum = gs->add_subcommand("enum", "list T_n");
  gs_enum->add_option("--s", gs_s)->required();
  gs_enum->add_option("--n", gs_n)->required();
  gs_enum->callback([&] { status = cmd_gs_enum(gs_s, gs_n); });
  auto* gs_dim = gs->add_subcommand("dim", "ground-space dimensions");
  gs_dim->add_option("--s", gs_s)->required();
  gs_dim->add_option("--n", gs_n)->required();
  gs_dim->callback([&] { status = cmd_gs_dim(gs_s, gs_n); });
  auto* gs_reduce = gs->add_subcommand("reduce", "canonical form of a spin string");
  gs_reduce->add_option("--string", gs_string, "space-separated spins")->required();
  gs_reduce->callback([&] { status = cmd_gs_reduce(gs_string); });
  auto* gs_bounds = gs->add_subcommand("bounds", "threshold sweep as CSV");
  gs_bounds->add_option("--construct", gs_construct, "gv or justesen");
  gs_bounds->add_option("--s-range", gs_range, "A..B");
  gs_bounds->callback([&] {
    const auto [a, b] = parse_range(gs_range);
    std::cout << bounds_csv(gs_construct, a, b);
  });
  auto* gs_embed = gs->add_subcommand("embed", "embed a binary code into the spin alphabet");
  gs_embed->add_option("--code", gs_code)->required();
  gs_embed->add_option("--s", gs_s);
  gs_embed->add_option("--dx", gs_dx);
  gs_embed->add_option("--dz", gs_dz);
  gs_embed->add_option("--out", gs_out);
  gs_embed->callback([&] { status = cmd_gs_embed(gs_code, gs_s, gs_dx, gs_dz, gs_out); });

  AqeccArgs aa;
  auto* aq = app.add_subcommand("aqecc", "approximate codes from state pairs");
  aq->add_option("--pairs", aa.pairs, "pair JSON files");
  aq->add_option("--q", aa.q);
  aq->add_option("--n", aa.n);
  aq->add_option("--m", aa.m, "random code size");
  aq->add_option("--dx", aa.dx);
  aq->add_option("--dz", aa.dz);
  aq->add_option("--trials", aa.trials);
  aq->add_option("--seed", aa.seed);
  aq->callback([&] { status = cmd_aqecc(aa); });

  int pi_n = 42, pi_d = 3;
  std::size_t pi_k = 0;
  bool pi_dicke = false, pi_ignore = false;
  std::string pi_out;
  auto* pi = app.add_subcommand("perminv", "permutation-invariant qubit codes");
  pi->add_option("--n", pi_n)->required();
  pi->add_option("--d", pi_d)->required();
  pi->add_option("--kernel-index", pi_k);
  pi->add_flag("--dicke", pi_dicke, "report Dicke supports instead of basis states");
  pi->add_flag("--ignore-inequality", pi_ignore, "skip the counting precondition");
  pi->add_option("--out", pi_out);
  pi->callback([&] { status = cmd_perminv(pi_n, pi_d, pi_k, pi_dicke, pi_ignore, pi_out); });

  std::string ex_name = "all";
  bool ex_json = false;
  auto* ex = app.add_subcommand("examples", "run the built-in reference examples");
  ex->add_option("name", ex_name, "example name or 'all'");
  ex->add_flag("--json", ex_json);
  ex->callback([&] { status = cmd_examples(ex_name, ex_json); });

  int rc_q = 2, rc_n = 8;
  std::size_t rc_m = 16;
  std::uint64_t rc_seed = 1;
  std::string rc_out;
  auto* rc = app.add_subcommand("random-code", "seeded uniform random classical code");
  rc->add_option("--q", rc_q);
  rc->add_option("--n", rc_n);
  rc->add_option("--m", rc_m)->required();
  rc->add_option("--seed", rc_seed);
  rc->add_option("--out", rc_out);
  rc->callback([&] { status = cmd_random_code(rc_q, rc_n, rc_m, rc_seed, rc_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? Ok : BadInput;
  } catch (const ConstructionError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return Infeasible;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return BadInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return BadInput;
  }
  return status;
}
