// Phase-tracked n-qubit Pauli algebra in the symplectic binary representation.
//
// An operator is i^phase_exp * X^x * Z^z with the X factor written to the left
// of the Z factor on every qubit. Qubit k (1-based in all text I/O) lives at
// mask bit k-1. Hermitian <=> phase_exp == popcount(x & z) (mod 2).

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace bavn {

inline constexpr int kMaxQubits = 8;

enum class Letter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char letter_char(Letter l);
Letter letter_from_bits(bool x, bool z);
std::pair<bool, bool> letter_bits(Letter l);  // (x, z)

struct PauliOperator {
  std::uint8_t n = 1;
  std::uint8_t phase_exp = 0;  // mod 4
  std::uint8_t x_mask = 0;
  std::uint8_t z_mask = 0;

  static PauliOperator identity(int n);
  // Single hermitian letter at a 0-based qubit (phase fixed so sign is +).
  static PauliOperator single(int n, int qubit, Letter l);

  Letter letter(int qubit) const;  // 0-based
  bool hermitian() const;
  bool operator==(const PauliOperator&) const = default;
};

// r = p * q; throws std::invalid_argument on mismatched n.
PauliOperator multiply(const PauliOperator& p, const PauliOperator& q);
bool commutes(const PauliOperator& p, const PauliOperator& q);

// Phaseless letter string of p on the qubits selected by side_mask, in
// ascending qubit order. Empty mask gives the empty string.
std::string restrict_to(const PauliOperator& p, std::uint8_t side_mask);
// Same projection packed 2 bits per selected qubit (x low bit, z high bit).
std::uint32_t restrict_code(const PauliOperator& p, std::uint8_t side_mask);

// +1 or -1; p must be hermitian (throws std::domain_error otherwise).
int sign_of(const PauliOperator& p);
// Canonical text form "+X1·Z2·I3" / "-Y1·Y2·Z3"; hermitian input only.
std::string render(const PauliOperator& p);
// Inverse of render; throws std::invalid_argument on malformed input.
PauliOperator parse_rendered(std::string_view s);

}  // namespace bavn
