#pragma once

#include "neutro/graph.hpp"
#include "neutro/num.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace neutro {

// Dense matrix of Num values with row/column labels (vertex ids or edge
// names) carried along so printed output can name its cells.
class Matrix {
 public:
  Matrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels);
  static Matrix identity(std::vector<std::string> labels);

  std::size_t rows() const { return row_labels_.size(); }
  std::size_t cols() const { return col_labels_.size(); }
  Num& at(std::size_t r, std::size_t c) { return cells_[r * cols() + c]; }
  const Num& at(std::size_t r, std::size_t c) const {
    return cells_[r * cols() + c];
  }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  bool is_symmetric() const;
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::vector<std::string> row_labels_, col_labels_;
  std::vector<Num> cells_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix pow(Matrix a, std::size_t k);  // k = 0 gives the identity

// Entries: 1 for a real edge, I for an indeterminate one, 0 otherwise.
// Labels follow the graph's vertex order.
Matrix adjacency(const Graph& g);

// Rows = vertices, columns = edges in insertion order; an edge's column holds
// its kind value (1 or I) at both endpoints.  Needs at least one edge.
Matrix incidence(const Graph& g);
std::string edge_label(const Edge& e);  // "u-v", used for incidence columns

// pow(adjacency(g), k) with the walk-counting reading: entry (i,j) = a + bI
// where a counts length-k walks i->j over real edges only and b counts those
// using at least one indeterminate edge.  k >= 1.
Matrix walk_counts(const Graph& g, std::size_t k);

struct YConnectivity {
  bool connected = true;
  Matrix y;  // A + A^2 + ... + A^(n-1); 0x0 when n <= 1
  // Off-diagonal zero cells of y, as (row label, col label) witnesses.
  std::vector<std::pair<std::string, std::string>> zeros;
};
// Connected iff every off-diagonal entry of Y is nonzero.  The diagonal is
// exempt: K2 is connected yet Y = A has a zero diagonal.
YConnectivity connectivity_by_y(const Graph& g);

enum class MatrixKind : std::uint8_t { Adjacency, Incidence };

struct BlockDecomposition {
  std::vector<std::string> row_order;
  std::vector<std::string> col_order;
  std::vector<std::size_t> row_blocks;  // rows per diagonal block
  std::vector<std::size_t> col_blocks;  // columns per diagonal block
  Matrix permuted;
};

// Permutes the adjacency (or incidence) matrix so each connected component
// forms one diagonal block and every cross-block entry is zero.  Incidence
// blocks only cover components that own edges; edgeless components contribute
// trailing zero rows.
BlockDecomposition block_decompose(const Graph& g, MatrixKind kind);

}  // namespace neutro
