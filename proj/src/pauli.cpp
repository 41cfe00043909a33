#include "bavn/pauli.hpp"

#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace bavn {

namespace {
const char kLetterChars[4] = {'I', 'X', 'Y', 'Z'};
// UTF-8 middle dot separating the letter tokens of a rendered operator.
const std::string kSep = "\xc2\xb7";

void check_same_n(const PauliOperator& p, const PauliOperator& q) {
  if (p.n != q.n) throw std::invalid_argument("pauli: mismatched qubit counts");
}
}  // namespace

char letter_char(Letter l) { return kLetterChars[static_cast<int>(l)]; }

Letter letter_from_bits(bool x, bool z) {
  if (x && z) return Letter::Y;
  if (x) return Letter::X;
  if (z) return Letter::Z;
  return Letter::I;
}

std::pair<bool, bool> letter_bits(Letter l) {
  switch (l) {
    case Letter::X: return {true, false};
    case Letter::Y: return {true, true};
    case Letter::Z: return {false, true};
    default: return {false, false};
  }
}

PauliOperator PauliOperator::identity(int n) {
  if (n < 1 || n > kMaxQubits) throw std::invalid_argument("pauli: bad qubit count");
  PauliOperator p;
  p.n = static_cast<std::uint8_t>(n);
  return p;
}

PauliOperator PauliOperator::single(int n, int qubit, Letter l) {
  PauliOperator p = identity(n);
  if (qubit < 0 || qubit >= n) throw std::invalid_argument("pauli: qubit out of range");
  auto [x, z] = letter_bits(l);
  p.x_mask = static_cast<std::uint8_t>(x ? 1u << qubit : 0u);
  p.z_mask = static_cast<std::uint8_t>(z ? 1u << qubit : 0u);
  p.phase_exp = (x && z) ? 1 : 0;  // Y = i·XZ
  return p;
}

Letter PauliOperator::letter(int qubit) const {
  return letter_from_bits((x_mask >> qubit) & 1u, (z_mask >> qubit) & 1u);
}

bool PauliOperator::hermitian() const {
  return (phase_exp & 1u) == (std::popcount(std::uint32_t(x_mask & z_mask)) & 1u);
}

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q) {
  check_same_n(p, q);
  PauliOperator r;
  r.n = p.n;
  r.x_mask = p.x_mask ^ q.x_mask;
  r.z_mask = p.z_mask ^ q.z_mask;
  // Moving p's Z factors past q's X factors costs (-1) per crossing.
  int cross = std::popcount(std::uint32_t(p.z_mask & q.x_mask));
  r.phase_exp = static_cast<std::uint8_t>((p.phase_exp + q.phase_exp + 2 * cross) & 3);
  return r;
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
  check_same_n(p, q);
  int s = std::popcount(std::uint32_t(p.x_mask & q.z_mask)) +
          std::popcount(std::uint32_t(p.z_mask & q.x_mask));
  return (s & 1) == 0;
}

std::string restrict_to(const PauliOperator& p, std::uint8_t side_mask) {
  std::string out;
  for (int k = 0; k < p.n; ++k) {
    if ((side_mask >> k) & 1u) out.push_back(letter_char(p.letter(k)));
  }
  return out;
}

std::uint32_t restrict_code(const PauliOperator& p, std::uint8_t side_mask) {
  std::uint32_t code = 0;
  int pos = 0;
  for (int k = 0; k < p.n; ++k) {
    if (!((side_mask >> k) & 1u)) continue;
    code |= std::uint32_t((p.x_mask >> k) & 1u) << (2 * pos);
    code |= std::uint32_t((p.z_mask >> k) & 1u) << (2 * pos + 1);
    ++pos;
  }
  return code;
}

int sign_of(const PauliOperator& p) {
  if (!p.hermitian()) throw std::domain_error("pauli: sign of non-hermitian operator");
  int s = (p.phase_exp - std::popcount(std::uint32_t(p.x_mask & p.z_mask))) & 3;
  return s == 0 ? +1 : -1;
}

std::string render(const PauliOperator& p) {
  std::string out;
  out.push_back(sign_of(p) > 0 ? '+' : '-');
  for (int k = 0; k < p.n; ++k) {
    if (k > 0) out += kSep;
    out.push_back(letter_char(p.letter(k)));
    out += std::to_string(k + 1);
  }
  return out;
}

PauliOperator parse_rendered(std::string_view s) {
  if (s.empty() || (s[0] != '+' && s[0] != '-'))
    throw std::invalid_argument("pauli: rendered operator must start with a sign");
  bool negative = s[0] == '-';
  s.remove_prefix(1);

  PauliOperator p;
  p.n = 0;
  int expect = 1;
  while (!s.empty()) {
    char lc = s[0];
    Letter l;
    switch (lc) {
      case 'I': l = Letter::I; break;
      case 'X': l = Letter::X; break;
      case 'Y': l = Letter::Y; break;
      case 'Z': l = Letter::Z; break;
      default: throw std::invalid_argument("pauli: bad letter in rendered operator");
    }
    s.remove_prefix(1);
    std::size_t d = 0;
    int idx = 0;
    while (d < s.size() && std::isdigit(static_cast<unsigned char>(s[d]))) {
      idx = idx * 10 + (s[d] - '0');
      ++d;
      if (d > 2) throw std::invalid_argument("pauli: qubit index too large");
    }
    if (d == 0) throw std::invalid_argument("pauli: missing qubit index");
    s.remove_prefix(d);
    if (idx != expect) throw std::invalid_argument("pauli: qubit indices must be 1..n in order");
    if (idx > kMaxQubits) throw std::invalid_argument("pauli: too many qubits");
    auto [x, z] = letter_bits(l);
    if (x) p.x_mask |= std::uint8_t(1u << (idx - 1));
    if (z) p.z_mask |= std::uint8_t(1u << (idx - 1));
    ++expect;
    if (!s.empty()) {
      if (s.substr(0, kSep.size()) != kSep)
        throw std::invalid_argument("pauli: expected separator in rendered operator");
      s.remove_prefix(kSep.size());
      if (s.empty()) throw std::invalid_argument("pauli: trailing separator");
    }
  }
  if (expect == 1) throw std::invalid_argument("pauli: empty operator");
  p.n = static_cast<std::uint8_t>(expect - 1);
  // Hermitian phase with the requested sign.
  int yc = std::popcount(std::uint32_t(p.x_mask & p.z_mask));
  p.phase_exp = static_cast<std::uint8_t>((yc + (negative ? 2 : 0)) & 3);
  return p;
}

}  // namespace bavn
