#include "idealpow/monomial.hpp"

#include <algorithm>
#include <functional>

namespace idealpow {

Monomial::Monomial(std::initializer_list<Exponent> exps) : exps_(exps) { validate(); }

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) { validate(); }

Monomial Monomial::one(std::size_t arity) {
  return Monomial(std::vector<Exponent>(arity, 0));
}

void Monomial::validate() const {
  if (exps_.empty()) throw ParameterError("monomial arity must be at least 1");
  if (std::any_of(exps_.begin(), exps_.end(), [](Exponent e) { return e < 0; }))
    throw ParameterError("negative exponent");
}

Exponent Monomial::degree() const {
  Exponent sum = 0;
  for (Exponent e : exps_) {
    if (__builtin_add_overflow(sum, e, &sum)) throw OverflowError("monomial degree overflows 64 bits");
  }
  return sum;
}

Monomial Monomial::swapped() const {
  if (arity() != 2) throw ArityError("swap requires arity 2");
  return Monomial{exps_[1], exps_[0]};
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Exponent e : m.exponents()) {
    h ^= std::hash<Exponent>{}(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity()) throw ArityError();
  auto ea = a.exponents();
  auto eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i] > eb[i]) return false;
  }
  return true;
}

bool try_multiply(const Monomial& a, const Monomial& b, Monomial& out) {
  std::vector<Exponent> exps(a.arity());
  auto ea = a.exponents();
  auto eb = b.exponents();
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (__builtin_add_overflow(ea[i], eb[i], &exps[i])) return false;
  }
  out = Monomial(std::move(exps));
  return true;
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity()) throw ArityError();
  Monomial out;
  if (!try_multiply(a, b, out)) throw OverflowError("exponent overflow in monomial product");
  return out;
}

std::string variable_name(std::size_t index) {
  static constexpr const char* kNames[] = {"x", "y", "z", "w"};
  if (index < 4) return kNames[index];
  return "x" + std::to_string(index + 1);
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += variable_name(i);
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace idealpow
