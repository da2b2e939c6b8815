#include "polyinc/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace polyinc {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  Int d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rat r(Int(n, 10), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat approximate(double value, std::uint64_t max_den) {
  if (!std::isfinite(value)) throw std::invalid_argument("approximate: non-finite value");
  // Convergents h/k of the continued fraction of `value`.
  Int h_prev = 1, h = 0, k_prev = 0, k = 1;
  Rat x(value);  // exact binary value
  Int bound(static_cast<unsigned long>(max_den));
  for (int iter = 0; iter < 64; ++iter) {
    Int a = x.get_num() / x.get_den();
    if (x < 0 && a * x.get_den() != x.get_num()) a -= 1;  // floor
    Int h_next = a * h_prev + h;
    Int k_next = a * k_prev + k;
    if (k_next > bound) break;
    h = h_prev;
    k = k_prev;
    h_prev = h_next;
    k_prev = k_next;
    Rat frac = x - Rat(a);
    if (frac == 0) break;
    x = 1 / frac;
  }
  Rat out(h_prev, k_prev);
  out.canonicalize();
  return out;
}

}  // namespace polyinc
