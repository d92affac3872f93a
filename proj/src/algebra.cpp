#include "z2z4/algebra.hpp"

#include <algorithm>

#include "z2z4/errors.hpp"

namespace z2z4 {

std::string to_string(const Ambient& ambient) {
  return "alpha=" + std::to_string(ambient.alpha) + " beta=" + std::to_string(ambient.beta);
}

MixedVector::MixedVector(Ambient ambient)
    : alpha_(ambient.alpha), entries_(ambient.alpha + ambient.beta, 0) {}

MixedVector::MixedVector(std::vector<std::uint8_t> binary,
                         const std::vector<std::uint8_t>& quaternary)
    : alpha_(binary.size()), entries_(std::move(binary)) {
  for (auto b : entries_) {
    if (b > 1) throw PreconditionError("binary entry out of range: " + std::to_string(b));
  }
  for (auto q : quaternary) {
    if (q > 3) throw PreconditionError("quaternary entry out of range: " + std::to_string(q));
  }
  entries_.insert(entries_.end(), quaternary.begin(), quaternary.end());
}

static void require_same_shape(const MixedVector& u, const MixedVector& v) {
  if (u.ambient() != v.ambient()) {
    throw PreconditionError("shape mismatch: " + to_string(u.ambient()) + " vs " +
                            to_string(v.ambient()));
  }
}

MixedVector& MixedVector::operator+=(const MixedVector& other) {
  require_same_shape(*this, other);
  for (std::size_t i = 0; i < alpha_; ++i) entries_[i] ^= other.entries_[i];
  for (std::size_t i = alpha_; i < entries_.size(); ++i) {
    entries_[i] = static_cast<std::uint8_t>((entries_[i] + other.entries_[i]) & 3U);
  }
  return *this;
}

MixedVector& MixedVector::operator-=(const MixedVector& other) { return *this += -other; }

MixedVector MixedVector::operator-() const { return scaled(3); }

MixedVector MixedVector::scaled(unsigned k) const {
  MixedVector out = *this;
  for (std::size_t i = 0; i < alpha_; ++i) out.entries_[i] = static_cast<std::uint8_t>(entries_[i] * (k & 1U));
  for (std::size_t i = alpha_; i < entries_.size(); ++i) {
    out.entries_[i] = static_cast<std::uint8_t>((entries_[i] * k) & 3U);
  }
  return out;
}

bool MixedVector::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](auto e) { return e == 0; });
}

unsigned MixedVector::order() const noexcept {
  if (is_zero()) return 1;
  auto q = quaternary();
  return std::any_of(q.begin(), q.end(), [](auto e) { return (e & 1U) != 0; }) ? 4 : 2;
}

std::size_t MixedVector::hash() const noexcept {
  // FNV-1a over the shape and the entries.
  std::size_t h = 1469598103934665603ULL ^ alpha_;
  for (auto e : entries_) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return h;
}

MixedVector constant_vector(Ambient ambient, unsigned binary_value, unsigned quaternary_value) {
  MixedVector v(ambient);
  for (std::size_t i = 0; i < ambient.alpha; ++i) v.set_x(i, binary_value);
  for (std::size_t j = 0; j < ambient.beta; ++j) v.set_y(j, quaternary_value);
  return v;
}

std::vector<std::uint8_t> gray_map(const MixedVector& v) {
  static constexpr std::uint8_t kPhi[4][2] = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
  std::vector<std::uint8_t> out(v.binary().begin(), v.binary().end());
  out.reserve(v.ambient().length());
  for (auto q : v.quaternary()) {
    out.push_back(kPhi[q][0]);
    out.push_back(kPhi[q][1]);
  }
  return out;
}

std::size_t hamming_weight(std::span<const std::uint8_t> bits) noexcept {
  return static_cast<std::size_t>(std::count_if(bits.begin(), bits.end(), [](auto b) { return b != 0; }));
}

std::size_t lee_weight(std::span<const std::uint8_t> quaternary) noexcept {
  static constexpr std::size_t kLee[4] = {0, 1, 2, 1};
  std::size_t w = 0;
  for (auto q : quaternary) w += kLee[q & 3U];
  return w;
}

std::size_t weight(const MixedVector& v) noexcept {
  return hamming_weight(v.binary()) + lee_weight(v.quaternary());
}

std::size_t p_count(std::span<const std::uint8_t> quaternary) noexcept {
  return static_cast<std::size_t>(
      std::count_if(quaternary.begin(), quaternary.end(), [](auto q) { return (q & 1U) != 0; }));
}

std::uint8_t binary_inner(std::span<const std::uint8_t> u, std::span<const std::uint8_t> v) {
  if (u.size() != v.size()) throw PreconditionError("binary inner product: length mismatch");
  unsigned s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] & v[i];
  return static_cast<std::uint8_t>(s & 1U);
}

std::uint8_t quaternary_inner(std::span<const std::uint8_t> u, std::span<const std::uint8_t> v) {
  if (u.size() != v.size()) throw PreconditionError("quaternary inner product: length mismatch");
  unsigned s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += static_cast<unsigned>(u[i]) * v[i];
  return static_cast<std::uint8_t>(s & 3U);
}

std::uint8_t inner_product(const MixedVector& u, const MixedVector& v) {
  require_same_shape(u, v);
  return static_cast<std::uint8_t>(
      (2U * binary_inner(u.binary(), v.binary()) + quaternary_inner(u.quaternary(), v.quaternary())) & 3U);
}

MixedVector parse_vector(std::string_view literal) {
  auto bar = literal.find('|');
  if (bar == std::string_view::npos) {
    throw ParseError(0, "vector literal '" + std::string(literal) + "' has no '|'");
  }
  if (literal.find('|', bar + 1) != std::string_view::npos) {
    throw ParseError(0, "vector literal '" + std::string(literal) + "' has more than one '|'");
  }
  std::vector<std::uint8_t> binary;
  std::vector<std::uint8_t> quaternary;
  for (char c : literal.substr(0, bar)) {
    if (c != '0' && c != '1') {
      throw ParseError(0, std::string("invalid binary symbol '") + c + "' in '" + std::string(literal) + "'");
    }
    binary.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  for (char c : literal.substr(bar + 1)) {
    if (c < '0' || c > '3') {
      throw ParseError(0, std::string("invalid quaternary symbol '") + c + "' in '" +
                              std::string(literal) + "'");
    }
    quaternary.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return MixedVector(std::move(binary), quaternary);
}

MixedVector parse_vector(std::string_view literal, Ambient ambient) {
  MixedVector v = parse_vector(literal);
  if (v.ambient() != ambient) {
    throw ParseError(0, "vector '" + std::string(literal) + "' has shape " + to_string(v.ambient()) +
                            ", expected " + to_string(ambient));
  }
  return v;
}

std::string to_string(const MixedVector& v) {
  std::string s;
  s.reserve(v.alpha() + v.beta() + 1);
  for (auto b : v.binary()) s.push_back(static_cast<char>('0' + b));
  s.push_back('|');
  for (auto q : v.quaternary()) s.push_back(static_cast<char>('0' + q));
  return s;
}

std::uint64_t ambient_size(Ambient ambient) {
  if (ambient.length() >= 64) throw GuardExceeded("ambient " + to_string(ambient) + " is too large to index");
  return std::uint64_t{1} << ambient.length();
}

MixedVector ambient_element(Ambient ambient, std::uint64_t index) {
  MixedVector v(ambient);
  for (std::size_t j = ambient.beta; j-- > 0;) {
    v.set_y(j, static_cast<unsigned>(index & 3U));
    index >>= 2;
  }
  for (std::size_t i = ambient.alpha; i-- > 0;) {
    v.set_x(i, static_cast<unsigned>(index & 1U));
    index >>= 1;
  }
  return v;
}

MixedVector concat(const MixedVector& u, const MixedVector& v) {
  std::vector<std::uint8_t> binary(u.binary().begin(), u.binary().end());
  binary.insert(binary.end(), v.binary().begin(), v.binary().end());
  std::vector<std::uint8_t> quaternary(u.quaternary().begin(), u.quaternary().end());
  quaternary.insert(quaternary.end(), v.quaternary().begin(), v.quaternary().end());
  return MixedVector(std::move(binary), quaternary);
}

}  // namespace z2z4
