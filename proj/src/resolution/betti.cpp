#include "pdlab/resolution/betti.hpp"

#include <algorithm>
#include <sstream>

#include "pdlab/error.hpp"

namespace pdlab {

BettiTable::BettiTable(std::map<std::pair<int, int>, std::int64_t> entries) {
  for (const auto& [k, v] : entries) set(k.first, k.second, v);
}

void BettiTable::set(int i, int j, std::int64_t value) {
  if (value < 0) throw DomainError("Betti numbers are nonnegative");
  if (i < 0) throw DomainError("homological degree must be nonnegative");
  if (value == 0)
    entries_.erase({i, j});
  else
    entries_[{i, j}] = value;
}

std::int64_t BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

std::vector<std::int64_t> BettiTable::totals() const {
  std::vector<std::int64_t> t;
  for (const auto& [k, v] : entries_) {
    if (static_cast<std::size_t>(k.first) >= t.size()) t.resize(k.first + 1, 0);
    t[k.first] += v;
  }
  return t;
}

std::vector<std::tuple<int, int, std::int64_t>> BettiTable::triples() const {
  std::vector<std::tuple<int, int, std::int64_t>> out;
  for (const auto& [k, v] : entries_) out.emplace_back(k.first, k.second, v);
  return out;
}

std::string BettiTable::to_text() const {
  if (entries_.empty()) return "(zero module)\n";
  const auto tot = totals();
  const int ncols = static_cast<int>(tot.size());
  int lo = 0, hi = 0;
  for (const auto& [k, v] : entries_) {
    lo = std::min(lo, k.second - k.first);
    hi = std::max(hi, k.second - k.first);
  }

  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> head{""};
  for (int i = 0; i < ncols; ++i) head.push_back(std::to_string(i));
  grid.push_back(head);
  std::vector<std::string> total_row{"total:"};
  for (auto v : tot) total_row.push_back(std::to_string(v));
  grid.push_back(total_row);
  for (int r = lo; r <= hi; ++r) {
    std::vector<std::string> row{std::to_string(r) + ":"};
    for (int i = 0; i < ncols; ++i) {
      auto v = at(i, i + r);
      row.push_back(v ? std::to_string(v) : "-");
    }
    grid.push_back(row);
  }

  std::vector<std::size_t> width(ncols + 1, 0);
  for (const auto& row : grid)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  for (const auto& row : grid) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += ' ';
      line += std::string(width[c] - row[c].size(), ' ') + row[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  if (truncated_at_)
    out << "(truncated: exact for internal degrees <= " << *truncated_at_ << ")\n";
  return out.str();
}

int pd_of(const BettiTable& table) {
  if (!table.complete()) throw DomainError("projective dimension needs a complete Betti table");
  int pd = 0;
  for (const auto& [k, v] : table.entries()) pd = std::max(pd, k.first);
  return pd;
}

int reg_of(const BettiTable& table) {
  if (!table.complete()) throw DomainError("regularity needs a complete Betti table");
  int reg = 0;
  bool any = false;
  for (const auto& [k, v] : table.entries()) {
    reg = any ? std::max(reg, k.second - k.first) : k.second - k.first;
    any = true;
  }
  return reg;
}

bool hilbert_crosscheck(const BettiTable& table, const HilbertNumerator& numerator) {
  std::vector<std::int64_t> alt;
  for (const auto& [k, v] : table.entries()) {
    if (k.second < 0) return false;
    if (static_cast<std::size_t>(k.second) >= alt.size()) alt.resize(k.second + 1, 0);
    alt[k.second] += (k.first % 2 == 0) ? v : -v;
  }
  while (!alt.empty() && alt.back() == 0) alt.pop_back();
  auto n = numerator.coefficients;
  while (!n.empty() && n.back() == 0) n.pop_back();
  return alt == n;
}

}  // namespace pdlab
