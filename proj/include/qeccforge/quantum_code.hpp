#ifndef QECCFORGE_QUANTUM_CODE_HPP
#define QECCFORGE_QUANTUM_CODE_HPP

#include "qeccforge/classical.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace qeccforge {

struct SupportTerm {
  Codeword codeword;
  double amp = 0.0;
  /// Exact amplitude squared, present when the construction ran rationally.
  std::optional<Rational> amp_sq;
};

/// One logical basis state: a real superposition over product basis states.
struct LogicalState {
  int label = 0;
  std::vector<SupportTerm> support;

  double norm_sq() const {
    double s = 0.0;
    for (const auto& t : support) s += t.amp * t.amp;
    return s;
  }
};

/// Construction trace. Informational only: the verifier never reads it.
struct Provenance {
  std::string method;
  std::string backend;
  std::size_t kernel_dimension = 0;
  std::size_t kernel_index = 0;
  std::vector<double> kernel_vector;
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::string> notes;
};

struct QuantumCode {
  Alphabet alphabet = Alphabet::qary(2);
  int n = 0;
  int d_x = 1;
  int d_z = 1;
  std::vector<LogicalState> states;
  Provenance provenance;

  int q() const noexcept { return alphabet.modulus(); }
  std::size_t dimension() const noexcept { return states.size(); }
};

}  // namespace qeccforge

#endif  // QECCFORGE_QUANTUM_CODE_HPP
