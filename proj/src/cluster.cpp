#include "jroots/cluster.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <utility>

#include "jroots/errors.hpp"

namespace jroots {

Profile::Profile(SystemParams params, std::vector<std::vector<int>> rows)
    : params_(params), rows_(std::move(rows)) {
  if (rows_.empty()) throw ContractError("a profile needs at least one row");
  for (auto& row : rows_) {
    std::sort(row.begin(), row.end());
    if (static_cast<int>(row.size()) != params_.k())
      throw ContractError("every profile row must have k = " + std::to_string(params_.k()) + " elements");
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      throw ContractError("profile rows must not repeat labels");
    if (row.front() < 1 || row.back() > params_.n())
      throw ContractError("profile labels must lie in 1.." + std::to_string(params_.n()));
  }
}

LatticeVector phi(const Profile& p) {
  std::vector<Coord> x(p.params().n(), 0);
  for (const auto& row : p.rows())
    for (int label : row) ++x[label - 1];
  return LatticeVector(p.params(), std::move(x));
}

Profile canonical_profile(const LatticeVector& v) {
  const Coord d = degree(v);
  if (d < 1) throw ContractError("canonical profile requires degree >= 1");
  for (Coord c : v.coords())
    if (c < 0 || c > d) throw ContractError("canonical profile requires entries in [0, " + std::to_string(d) + "]");

  std::vector<int> a;
  for (std::size_t i = 0; i < v.size(); ++i) a.insert(a.end(), v[i], static_cast<int>(i + 1));

  const int k = v.params().k();
  const int rank = static_cast<int>(d);
  std::vector<std::vector<int>> rows(rank);
  for (int i = 1; i <= rank; ++i)
    for (int j = 0; j < k; ++j) rows[i - 1].push_back(a[(rank - i) + j * rank]);  // a_{d-i+1+jd}, 1-based
  return Profile(v.params(), std::move(rows));
}

bool is_weakly_column_decreasing(const Profile& p) {
  const auto& rows = p.rows();
  for (std::size_t i = 0; i + 1 < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      if (rows[i][j] < rows[i + 1][j]) return false;
  return true;
}

bool is_canonical(const Profile& p) {
  if (!is_weakly_column_decreasing(p)) return false;
  const auto& top = p.rows().front();
  const auto& bottom = p.rows().back();
  for (std::size_t j = 1; j < top.size(); ++j)
    if (bottom[j] < top[j - 1]) return false;
  return true;
}

std::vector<Profile> cyclic_permutations(const Profile& p) {
  std::vector<Profile> out;
  std::vector<std::vector<int>> rows = p.rows();
  for (int r = 0; r < p.rank(); ++r) {
    out.emplace_back(p.params(), rows);
    std::rotate(rows.begin(), rows.begin() + 1, rows.end());
  }
  return out;
}

std::string render(const Profile& p) {
  const bool compact = p.params().n() <= 9;
  std::ostringstream os;
  for (std::size_t i = 0; i < p.rows().size(); ++i) {
    if (i) os << '|';
    const auto& row = p.rows()[i];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j && !compact) os << ',';
      os << row[j];
    }
  }
  return os.str();
}

Profile parse_profile(const SystemParams& params, std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('|', start), text.size());
    const std::string_view chunk = text.substr(start, end - start);
    std::vector<int> row;
    if (chunk.find(',') != std::string_view::npos) {
      std::size_t s = 0;
      while (s <= chunk.size()) {
        const std::size_t e = std::min(chunk.find(',', s), chunk.size());
        int value = 0;
        const auto [ptr, ec] = std::from_chars(chunk.data() + s, chunk.data() + e, value);
        if (ec != std::errc() || ptr != chunk.data() + e) throw ContractError("bad profile label in '" + std::string(chunk) + "'");
        row.push_back(value);
        s = e + 1;
      }
    } else {
      if (params.n() > 9) throw ContractError("use comma-separated labels when n > 9");
      for (char c : chunk) {
        if (c < '1' || c > '9') throw ContractError("bad profile label '" + std::string(1, c) + "'");
        row.push_back(c - '0');
      }
    }
    rows.push_back(std::move(row));
    start = end + 1;
  }
  return Profile(params, std::move(rows));
}

}  // namespace jroots
