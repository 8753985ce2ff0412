#include "jroots/weyl.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <utility>

#include "jroots/errors.hpp"

namespace jroots {

Reflection Reflection::simple(int i) {
  if (i < 1) throw ContractError("reflection index must be >= 1, got " + std::to_string(i));
  return Reflection(i);
}

WeylWord parse_word(std::string_view text) {
  WeylWord w;
  if (text.empty()) return w;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    std::string_view token = text.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token == "b" || token == "B") {
      w.letters.push_back(Reflection::beta());
    } else {
      int i = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), i);
      if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
        throw ContractError("bad word token '" + std::string(token) + "'");
      w.letters.push_back(Reflection::simple(i));
    }
    start = end + 1;
  }
  return w;
}

std::string to_string(const WeylWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ',';
    out += w.letters[i].is_beta() ? std::string("b") : std::to_string(w.letters[i].index());
  }
  return out;
}

LatticeVector apply_s_i(int i, const LatticeVector& v) {
  if (i < 1 || i >= v.params().n())
    throw ContractError("s_" + std::to_string(i) + " out of range for " + to_string(v.params()));
  std::vector<Coord> x = v.values();
  std::swap(x[i - 1], x[i]);
  return LatticeVector(v.params(), std::move(x));
}

Coord s_beta_shift(const LatticeVector& v) {
  const int k = v.params().k();
  Coord tail = 0;
  for (std::size_t i = k; i < v.size(); ++i) tail = checked_add(tail, v[i]);
  return checked_sub(tail, checked_mul(2, degree(v)));
}

LatticeVector apply_s_beta(const LatticeVector& v) {
  const Coord r = s_beta_shift(v);
  std::vector<Coord> x = v.values();
  for (int i = 0; i < v.params().k(); ++i) x[i] = checked_add(x[i], r);
  return LatticeVector(v.params(), std::move(x));
}

LatticeVector apply(const Reflection& s, const LatticeVector& v) {
  return s.is_beta() ? apply_s_beta(v) : apply_s_i(s.index(), v);
}

LatticeVector apply_word(const WeylWord& w, const LatticeVector& v) {
  LatticeVector out = v;
  for (const Reflection& s : w.letters) out = apply(s, out);
  return out;
}

LatticeVector dec(const LatticeVector& v) {
  std::vector<Coord> x = v.values();
  std::stable_sort(x.begin(), x.end(), std::greater<>());
  return LatticeVector(v.params(), std::move(x));
}

}  // namespace jroots
