#ifndef QECCFORGE_IO_HPP
#define QECCFORGE_IO_HPP

#include "qeccforge/amatrix.hpp"
#include "qeccforge/groundspace.hpp"
#include "qeccforge/quantum_code.hpp"
#include "qeccforge/verify.hpp"

#include "json.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace qeccforge {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Classical code files
// ---------------------------------------------------------------------------

inline std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

inline int parse_int(const std::string& tok, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw InputError("line " + std::to_string(line_no) + ": bad symbol '" + tok + "'");
  }
}

/// Parses the text format: a required `alphabet qary <q>` or `alphabet spin <s>`
/// header, `#` comments, then one codeword per line as space-separated
/// integers or as a digit string.
inline ClassicalCode parse_code(std::istream& in, WordOrder order = WordOrder::Lexicographic) {
  std::optional<Alphabet> alphabet;
  std::vector<Codeword> words;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (!alphabet) {
      std::istringstream hs(t);
      std::string kw, kind;
      int p = 0;
      if (!(hs >> kw >> kind >> p) || kw != "alphabet" || (kind != "qary" && kind != "spin"))
        throw InputError("line " + std::to_string(line_no) +
                         ": expected header 'alphabet qary <q>' or 'alphabet spin <s>'");
      alphabet = kind == "qary" ? Alphabet::qary(p) : Alphabet::spin(p);
      continue;
    }
    Codeword w;
    if (t.find_first_of(" \t") == std::string::npos &&
        std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      for (char c : t) w.push_back(c - '0');
    } else {
      std::istringstream ls(t);
      std::string tok;
      while (ls >> tok) w.push_back(parse_int(tok, line_no));
    }
    words.push_back(std::move(w));
  }
  if (!alphabet) throw InputError("missing 'alphabet' header");
  if (words.empty()) throw InputError("code file has no codewords");
  const std::size_t n = words.front().size();
  return ClassicalCode(*alphabet, n, std::move(words), order);
}

inline ClassicalCode parse_code_string(const std::string& text, WordOrder order = WordOrder::Lexicographic) {
  std::istringstream in(text);
  return parse_code(in, order);
}

inline ClassicalCode read_code_file(const std::string& path, WordOrder order = WordOrder::Lexicographic) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_code(in, order);
}

inline std::string codeword_string(const Codeword& w, bool compact) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

inline std::string format_code(const ClassicalCode& code) {
  const Alphabet& a = code.alphabet();
  const bool compact = !a.is_spin() && a.param() <= 10;
  std::string out = "alphabet " + a.describe() + "\n";
  for (const auto& w : code.words()) out += codeword_string(w, compact) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Numbers
// ---------------------------------------------------------------------------

/// 12 significant digits, with negative zero printed as 0.
inline std::string fmt12(double v) {
  if (v == 0.0) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s = buf;
  if (s == "-0") s = "0";
  return s;
}

inline Json big_to_json(const BigInt& v) {
  if (v >= BigInt(std::numeric_limits<std::int64_t>::min()) &&
      v <= BigInt(std::numeric_limits<std::int64_t>::max()))
    return v.convert_to<std::int64_t>();
  return v.str();
}

inline BigInt big_from_json(const Json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<std::int64_t>());
}

// ---------------------------------------------------------------------------
// Quantum codes
// ---------------------------------------------------------------------------

inline Json to_json(const QuantumCode& code) {
  Json j;
  j["q"] = code.q();
  j["n"] = code.n;
  j["d_x"] = code.d_x;
  j["d_z"] = code.d_z;
  j["alphabet"] = code.alphabet.describe();
  Json states = Json::array();
  for (const auto& st : code.states) {
    Json s;
    s["label"] = st.label;
    Json sup = Json::array();
    for (const auto& t : st.support) {
      Json e;
      e["codeword"] = t.codeword;
      e["amp"] = t.amp;
      if (t.amp_sq) {
        e["amp_sq_num"] = big_to_json(numerator(*t.amp_sq));
        e["amp_sq_den"] = big_to_json(denominator(*t.amp_sq));
      }
      sup.push_back(std::move(e));
    }
    s["support"] = std::move(sup);
    states.push_back(std::move(s));
  }
  j["states"] = std::move(states);
  const auto& p = code.provenance;
  Json prov;
  prov["method"] = p.method;
  prov["backend"] = p.backend;
  prov["kernel_dimension"] = p.kernel_dimension;
  prov["kernel_index"] = p.kernel_index;
  prov["kernel_vector"] = p.kernel_vector;
  prov["blocks"] = p.blocks;
  prov["notes"] = p.notes;
  j["provenance"] = std::move(prov);
  return j;
}

inline Alphabet parse_alphabet(const std::string& s) {
  std::istringstream in(s);
  std::string kind;
  int p = 0;
  if (!(in >> kind >> p)) throw InputError("bad alphabet '" + s + "'");
  if (kind == "qary") return Alphabet::qary(p);
  if (kind == "spin") return Alphabet::spin(p);
  throw InputError("bad alphabet '" + s + "'");
}

/// Reads the code JSON; provenance is optional and ignored by the verifier.
inline QuantumCode quantum_code_from_json(const Json& j) {
  try {
    QuantumCode code;
    code.alphabet = j.contains("alphabet") ? parse_alphabet(j.at("alphabet").get<std::string>())
                                           : Alphabet::qary(j.at("q").get<int>());
    if (code.alphabet.modulus() != j.at("q").get<int>())
      throw InputError("alphabet and q disagree");
    code.n = j.at("n").get<int>();
    code.d_x = j.value("d_x", 1);
    code.d_z = j.value("d_z", 1);
    for (const auto& s : j.at("states")) {
      LogicalState st;
      st.label = s.value("label", static_cast<int>(code.states.size()));
      for (const auto& e : s.at("support")) {
        SupportTerm t;
        t.codeword = e.at("codeword").get<Codeword>();
        if (static_cast<int>(t.codeword.size()) != code.n) throw InputError("codeword length differs from n");
        for (int x : t.codeword)
          if (!code.alphabet.contains(x)) throw InputError("codeword symbol outside alphabet");
        if (e.contains("amp_sq_num") && e.contains("amp_sq_den"))
          t.amp_sq = Rational(big_from_json(e.at("amp_sq_num")), big_from_json(e.at("amp_sq_den")));
        if (e.contains("amp")) t.amp = e.at("amp").get<double>();
        else if (t.amp_sq) t.amp = std::sqrt(to_double(*t.amp_sq));
        else throw InputError("support entry needs 'amp' or 'amp_sq_num'/'amp_sq_den'");
        st.support.push_back(std::move(t));
      }
      code.states.push_back(std::move(st));
    }
    if (j.contains("provenance")) {
      const auto& p = j.at("provenance");
      code.provenance.method = p.value("method", "");
      code.provenance.backend = p.value("backend", "");
    }
    return code;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed code JSON: ") + e.what());
  }
}

inline QuantumCode read_quantum_code(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return quantum_code_from_json(j);
}

inline Json to_json(const PauliLabel& p) {
  return Json{{"x", p.x}, {"z", p.z}};
}

inline Json to_json(const KLReport& r, bool with_c_values = true) {
  Json j;
  j["passed"] = r.passed;
  j["d_x_checked"] = r.d_x_checked;
  j["d_z_checked"] = r.d_z_checked;
  j["paulis_checked"] = r.paulis_checked;
  j["worst_violation"] = r.worst_violation;
  j["worst_label"] = r.worst_label ? to_json(*r.worst_label) : Json(nullptr);
  if (with_c_values) {
    Json cv = Json::array();
    for (const auto& [p, c] : r.c_values) {
      Json e = to_json(p);
      e["re"] = c.real();
      e["im"] = c.imag();
      cv.push_back(std::move(e));
    }
    j["c_values"] = std::move(cv);
  }
  return j;
}

// ---------------------------------------------------------------------------
// A-matrix export
// ---------------------------------------------------------------------------

inline std::string amatrix_csv(const AMatrix& a) {
  std::string out = "row";
  for (const auto& w : a.col_words) out += "," + codeword_string(w, true);
  out += "\n";
  for (std::size_t r = 0; r < a.num_rows(); ++r) {
    out += a.rows[r].describe();
    for (std::size_t c = 0; c < a.num_cols(); ++c) out += "," + fmt12(a.entries(r, c));
    out += "\n";
  }
  return out;
}

inline Json amatrix_sidecar(const AMatrix& a, const KernelBasis& k) {
  Json j;
  j["q"] = a.q;
  j["d_z"] = a.d_z;
  j["exact"] = a.exact();
  Json rows = Json::array();
  for (const auto& r : a.rows) rows.push_back(r.describe());
  j["rows"] = std::move(rows);
  j["cols"] = a.col_words;
  j["rows_before_pruning"] = a.rows_before_pruning;
  j["rows_after_zero_pruning"] = a.rows_after_zero_pruning;
  Json log = Json::array();
  for (const auto& e : a.prune_log) {
    Json x;
    x["row"] = e.label.describe();
    x["reason"] = e.reason == PruneEvent::Reason::ZeroRow ? "zero" : "duplicate";
    if (e.kept) x["duplicate_of"] = e.kept->describe();
    log.push_back(std::move(x));
  }
  j["pruning"] = std::move(log);
  j["backend"] = to_string(k.backend);
  j["kernel_dimension"] = k.dimension();
  if (k.backend == KernelBackend::Exact) {
    Json vs = Json::array();
    for (const auto& v : k.exact_vectors) {
      Json row = Json::array();
      for (const auto& x : v) row.push_back(x.str());
      vs.push_back(std::move(row));
    }
    j["kernel"] = std::move(vs);
  } else {
    j["kernel"] = k.vectors;
    j["tolerance"] = k.tolerance;
  }
  return j;
}

// ---------------------------------------------------------------------------
// Threshold sweeps
// ---------------------------------------------------------------------------

/// Parses "A..B" (or a single integer) into an inclusive range.
inline std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int(trim(text), 0);
    return {v, v};
  }
  return {parse_int(trim(text.substr(0, dots)), 0), parse_int(trim(text.substr(dots + 2)), 0)};
}

/// CSV rows (s, tau_max) for s in [a, b]; header only when the range is empty.
inline std::string bounds_csv(const std::string& construct, int a, int b) {
  const bool gv = construct == "gv";
  if (!gv && construct != "justesen") throw InputError("construct must be gv or justesen");
  std::string out = gv ? "s,tau_max\n" : "s,tau_max,side_condition\n";
  for (int s = a; s <= b; ++s) {
    const double t = gv ? gv_threshold(s) : justesen_threshold(s);
    out += std::to_string(s) + "," + fmt12(t);
    if (!gv) out += justesen_side_condition(s, t) ? ",1" : ",0";
    out += "\n";
  }
  return out;
}

}  // namespace qeccforge

#endif  // QECCFORGE_IO_HPP
