#include "polyinc/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace polyinc {

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat UniPoly::operator()(const Rat& t) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(c));
}

UniPoly operator*(const Rat& s, const UniPoly& a) {
  std::vector<Rat> c = a.coeffs_;
  for (auto& v : c) v *= s;
  return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("UniPoly::divmod: zero divisor");
  std::vector<Rat> rem = coeffs_;
  int dd = divisor.degree();
  if (degree() < dd) return {UniPoly{}, *this};
  std::vector<Rat> quot(static_cast<std::size_t>(degree() - dd) + 1);
  for (int k = degree(); k >= dd; --k) {
    Rat f = rem[static_cast<std::size_t>(k)] / divisor.leading();
    quot[static_cast<std::size_t>(k - dd)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= f * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

std::string UniPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    Rat mag = abs(c);
    if (k == 0 || mag != 1) out << polyinc::to_string(mag) << (k > 0 ? "*" : "");
    if (k >= 1) out << var;
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

namespace {

int sign_changes(const std::vector<UniPoly>& chain, const Rat& t) {
  int changes = 0, last = 0;
  for (const auto& p : chain) {
    int s = sgn(p(t));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::size_t sturm_count(const UniPoly& q, const Rat& lo, const Rat& hi) {
  if (q.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("sturm_count: empty interval");
  if (q(lo) == 0 || q(hi) == 0) throw std::invalid_argument("sturm_count: interval endpoint is a root");
  std::vector<UniPoly> chain{q, q.derivative()};
  while (!chain.back().is_zero()) {
    auto rem = chain[chain.size() - 2].divmod(chain.back()).second;
    chain.push_back(-rem);
  }
  chain.pop_back();
  return static_cast<std::size_t>(sign_changes(chain, lo) - sign_changes(chain, hi));
}

Rat root_bound(const UniPoly& q) {
  if (q.is_zero()) throw std::invalid_argument("root_bound: zero polynomial");
  Rat m(0);
  for (int k = 0; k < q.degree(); ++k) {
    Rat r = abs(q.coeffs()[static_cast<std::size_t>(k)] / q.leading());
    if (r > m) m = r;
  }
  return m + 1;
}

}  // namespace polyinc
