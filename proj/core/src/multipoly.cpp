#include "polyinc/multipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace polyinc {

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxArity; ++i) r.exp[i] = static_cast<std::uint16_t>(exp[i] + o.exp[i]);
  return r;
}

Monomial Monomial::quotient_of(const Monomial& num) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxArity; ++i) r.exp[i] = static_cast<std::uint16_t>(num.exp[i] - exp[i]);
  return r;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (std::size_t i = 0; i < kMaxArity; ++i)
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i];
  return false;
}

MultiPoly::MultiPoly(std::size_t arity) : arity_(arity) {
  if (arity > kMaxArity) throw std::invalid_argument("MultiPoly: arity exceeds " + std::to_string(kMaxArity));
}

MultiPoly MultiPoly::constant(std::size_t arity, const Rat& c) {
  MultiPoly p(arity);
  p.add_term(Monomial{}, c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw std::invalid_argument("MultiPoly::variable: index out of range");
  Monomial m;
  m.exp[index] = 1;
  return monomial(arity, m, Rat(1));
}

MultiPoly MultiPoly::monomial(std::size_t arity, const Monomial& m, const Rat& c) {
  MultiPoly p(arity);
  for (std::size_t i = arity; i < kMaxArity; ++i)
    if (m.exp[i] != 0) throw std::invalid_argument("MultiPoly::monomial: exponent beyond arity");
  p.add_term(m, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

int MultiPoly::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree());
}

int MultiPoly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.exp[var]));
  return d;
}

Rat MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (arity_ != o.arity_) throw std::invalid_argument("MultiPoly: arity mismatch in +");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (arity_ != o.arity_) throw std::invalid_argument("MultiPoly: arity mismatch in -");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.arity_ != b.arity_) throw std::invalid_argument("MultiPoly: arity mismatch in *");
  MultiPoly r(a.arity_);
  Rat prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      prod = ca * cb;
      r.add_term(ma * mb, prod);
    }
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly result = constant(arity_, Rat(1));
  MultiPoly base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::with_arity(std::size_t arity) const {
  MultiPoly r(arity);
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = arity; i < kMaxArity; ++i)
      if (m.exp[i] != 0) throw std::invalid_argument("with_arity: variable would be dropped");
    r.terms_.emplace(m, c);
  }
  return r;
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
  static const std::string kDefault[kMaxArity] = {"x", "y", "z", "v1", "v2", "v3"};
  auto name = [&](std::size_t i) -> const std::string& { return i < names.size() ? names[i] : kDefault[i]; };
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_vars = m.degree() > 0;
    bool wrote = false;
    if (!has_vars || mag != 1) {
      out << polyinc::to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < arity_; ++i) {
      if (m.exp[i] == 0) continue;
      if (wrote) out << "*";
      out << name(i);
      if (m.exp[i] > 1) out << "^" << m.exp[i];
      wrote = true;
    }
  }
  return out.str();
}

Rat monomial_value(const Monomial& m, std::span<const Rat> point) {
  Rat v(1);
  for (std::size_t i = 0; i < point.size(); ++i) {
    for (unsigned k = 0; k < m.exp[i]; ++k) v *= point[i];
  }
  return v;
}

Rat poly_eval(const MultiPoly& p, std::span<const Rat> point) {
  if (point.size() != p.arity())
    throw std::invalid_argument("poly_eval: arity " + std::to_string(p.arity()) + " but point has " +
                                std::to_string(point.size()) + " coordinates");
  // Power tables keep evaluation linear in the number of terms.
  std::vector<std::vector<Rat>> powers(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    int d = p.degree_in(i);
    powers[i].reserve(static_cast<std::size_t>(std::max(d, 0)) + 1);
    powers[i].emplace_back(1);
    for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * point[i]);
  }
  Rat sum(0), term;
  for (const auto& [m, c] : p.terms()) {
    term = c;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (m.exp[i] != 0) term *= powers[i][m.exp[i]];
    sum += term;
  }
  return sum;
}

MultiPoly poly_partial(const MultiPoly& p, std::size_t var) {
  if (var >= p.arity()) throw std::invalid_argument("poly_partial: variable index out of range");
  MultiPoly r(p.arity());
  for (const auto& [m, c] : p.terms()) {
    if (m.exp[var] == 0) continue;
    Monomial d = m;
    d.exp[var] = static_cast<std::uint16_t>(d.exp[var] - 1);
    r.add_term(d, c * m.exp[var]);
  }
  return r;
}

MultiPoly compose(const MultiPoly& p, std::span<const MultiPoly> values) {
  if (values.size() != p.arity()) throw std::invalid_argument("compose: need one value per variable");
  if (values.empty()) return p;
  std::size_t out_arity = values.front().arity();
  std::vector<std::vector<MultiPoly>> powers(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].arity() != out_arity) throw std::invalid_argument("compose: mixed arities");
    powers[i].push_back(MultiPoly::constant(out_arity, Rat(1)));
    for (int k = 1; k <= p.degree_in(i); ++k) powers[i].push_back(powers[i].back() * values[i]);
  }
  MultiPoly r(out_arity);
  for (const auto& [m, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(out_arity, c);
    for (std::size_t i = 0; i < values.size(); ++i)
      if (m.exp[i] != 0) term = term * powers[i][m.exp[i]];
    r += term;
  }
  return r;
}

std::optional<MultiPoly> exact_quotient(const MultiPoly& dividend, const MultiPoly& divisor) {
  if (divisor.is_zero()) throw std::invalid_argument("exact_quotient: zero divisor");
  if (dividend.arity() != divisor.arity()) throw std::invalid_argument("exact_quotient: arity mismatch");
  MultiPoly quotient(dividend.arity());
  MultiPoly rest = dividend;
  const auto& [lead_m, lead_c] = divisor.leading_term();
  while (!rest.is_zero()) {
    const auto& [m, c] = rest.leading_term();
    // With a single divisor, a leading term it cannot absorb stays in the
    // remainder forever, so the division is not exact.
    if (!lead_m.divides(m)) return std::nullopt;
    MultiPoly step = MultiPoly::monomial(dividend.arity(), lead_m.quotient_of(m), c / lead_c);
    rest -= step * divisor;
    quotient += step;
  }
  return quotient;
}

bool divides(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero()) throw std::invalid_argument("divides: zero divisor");
  return exact_quotient(q, p).has_value();
}

std::vector<MultiPoly> coefficients_in(const MultiPoly& p, std::size_t var) {
  if (var >= p.arity()) throw std::invalid_argument("coefficients_in: variable index out of range");
  int d = p.degree_in(var);
  std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(d, 0)) + 1, MultiPoly(p.arity()));
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    rest.exp[var] = 0;
    out[m.exp[var]].add_term(rest, c);
  }
  return out;
}

std::vector<Monomial> monomials_up_to(std::size_t arity, unsigned max_degree, unsigned min_degree) {
  std::vector<Monomial> out;
  // Exponents of a fixed total degree, earliest variable's power descending.
  auto emit = [&](auto&& self, std::size_t var, unsigned remaining, Monomial& cur) -> void {
    if (var + 1 == arity) {
      cur.exp[var] = static_cast<std::uint16_t>(remaining);
      out.push_back(cur);
      cur.exp[var] = 0;
      return;
    }
    for (int e = static_cast<int>(remaining); e >= 0; --e) {
      cur.exp[var] = static_cast<std::uint16_t>(e);
      self(self, var + 1, remaining - static_cast<unsigned>(e), cur);
    }
    cur.exp[var] = 0;
  };
  for (unsigned d = min_degree; d <= max_degree; ++d) {
    if (arity == 0) {
      if (d == 0) out.emplace_back();
      continue;
    }
    Monomial cur;
    emit(emit, 0, d, cur);
  }
  return out;
}

}  // namespace polyinc
