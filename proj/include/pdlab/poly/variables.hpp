#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pdlab {

/// g x n matrix of nonnegative integers, row-major. Rows index j = 1..g,
/// columns index k = 1..n; accessors are 0-based.
class ExponentMatrix {
 public:
  ExponentMatrix() = default;
  ExponentMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  ExponentMatrix(std::size_t rows, std::size_t cols, std::vector<int> row_major);
  static ExponentMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int at(std::size_t row, std::size_t col) const { return a_[row * cols_ + col]; }
  int& at(std::size_t row, std::size_t col) { return a_[row * cols_ + col]; }
  const std::vector<int>& row_major() const { return a_; }
  int column_sum(std::size_t col) const;

  /// "[[1,1,2],[1,1,0]]"
  std::string to_string() const;

  friend bool operator==(const ExponentMatrix&, const ExponentMatrix&) = default;
  /// Lexicographic on the row-major entries.
  friend auto operator<=>(const ExponentMatrix& a, const ExponentMatrix& b) {
    return a.a_ <=> b.a_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<int> a_;
};

/// Descriptor of one ring variable: x_{j,k}, y_A, or a free-standing name
/// (used by the special constructors, e.g. w, x, y, z).
struct Variable {
  enum class Kind { kX, kY, kNamed };
  Kind kind = Kind::kNamed;
  int j = 0;  // kX: row index, 1-based
  int k = 0;  // kX: column index, 1-based
  ExponentMatrix matrix;  // kY
  std::string name;

  static Variable x(int j, int k);
  static Variable y(ExponentMatrix a);
  static Variable named(std::string name);

  friend bool operator==(const Variable& a, const Variable& b) { return a.name == b.name; }
};

/// Ordered, duplicate-free list of ring variables, fixed at construction.
class VariableTable {
 public:
  VariableTable() = default;

  /// Family ring: x_{j,k} sorted by (k, j), then y_A in descending
  /// lexicographic order of the row-major entries.
  static VariableTable family(int g, int n, std::vector<ExponentMatrix> y_matrices);
  static VariableTable named(const std::vector<std::string>& names);

  std::size_t size() const { return vars_.size(); }
  const Variable& operator[](std::size_t i) const { return vars_[i]; }
  const std::vector<Variable>& variables() const { return vars_; }
  const std::string& name(std::size_t i) const { return vars_[i].name; }

  std::optional<std::size_t> index_of(const std::string& name) const;
  std::optional<std::size_t> index_of_x(int j, int k) const;
  std::optional<std::size_t> index_of_y(const ExponentMatrix& a) const;

  friend bool operator==(const VariableTable& a, const VariableTable& b) {
    return a.vars_ == b.vars_;
  }

 private:
  explicit VariableTable(std::vector<Variable> vars);
  std::vector<Variable> vars_;
  std::map<std::string, std::size_t> by_name_;
};

}  // namespace pdlab
