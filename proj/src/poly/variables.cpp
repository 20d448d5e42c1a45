#include "pdlab/poly/variables.hpp"

#include <algorithm>
#include <functional>

#include "pdlab/error.hpp"

namespace pdlab {

ExponentMatrix::ExponentMatrix(std::size_t rows, std::size_t cols, std::vector<int> row_major)
    : rows_(rows), cols_(cols), a_(std::move(row_major)) {
  if (a_.size() != rows * cols) throw DomainError("exponent matrix entry count mismatch");
  for (int v : a_)
    if (v < 0) throw DomainError("negative entry in exponent matrix");
}

ExponentMatrix ExponentMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) return {};
  std::vector<int> flat;
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw DomainError("ragged exponent matrix");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return ExponentMatrix(rows.size(), rows.front().size(), std::move(flat));
}

int ExponentMatrix::column_sum(std::size_t col) const {
  int s = 0;
  for (std::size_t r = 0; r < rows_; ++r) s += at(r, col);
  return s;
}

std::string ExponentMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) s += ',';
    s += '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) s += ',';
      s += std::to_string(at(r, c));
    }
    s += ']';
  }
  return s + "]";
}

Variable Variable::x(int j, int k) {
  Variable v;
  v.kind = Kind::kX;
  v.j = j;
  v.k = k;
  v.name = "x[" + std::to_string(j) + "," + std::to_string(k) + "]";
  return v;
}

Variable Variable::y(ExponentMatrix a) {
  Variable v;
  v.kind = Kind::kY;
  v.name = "y" + a.to_string();
  v.matrix = std::move(a);
  return v;
}

Variable Variable::named(std::string name) {
  Variable v;
  v.kind = Kind::kNamed;
  v.name = std::move(name);
  return v;
}

VariableTable::VariableTable(std::vector<Variable> vars) : vars_(std::move(vars)) {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (!by_name_.emplace(vars_[i].name, i).second)
      throw DomainError("duplicate variable " + vars_[i].name);
}

VariableTable VariableTable::family(int g, int n, std::vector<ExponentMatrix> y_matrices) {
  std::vector<Variable> vars;
  for (int k = 1; k <= n; ++k)
    for (int j = 1; j <= g; ++j) vars.push_back(Variable::x(j, k));
  std::sort(y_matrices.begin(), y_matrices.end(), std::greater<>());
  for (auto& a : y_matrices) {
    if (a.rows() != static_cast<std::size_t>(g) || a.cols() != static_cast<std::size_t>(n))
      throw DomainError("y-variable matrix has the wrong shape");
    vars.push_back(Variable::y(std::move(a)));
  }
  return VariableTable(std::move(vars));
}

VariableTable VariableTable::named(const std::vector<std::string>& names) {
  std::vector<Variable> vars;
  for (const auto& n : names) {
    if (n.empty()) throw DomainError("empty variable name");
    vars.push_back(Variable::named(n));
  }
  return VariableTable(std::move(vars));
}

std::optional<std::size_t> VariableTable::index_of(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> VariableTable::index_of_x(int j, int k) const {
  return index_of(Variable::x(j, k).name);
}

std::optional<std::size_t> VariableTable::index_of_y(const ExponentMatrix& a) const {
  return index_of("y" + a.to_string());
}

}  // namespace pdlab
