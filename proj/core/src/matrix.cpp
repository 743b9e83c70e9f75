#include "neutro/matrix.hpp"

#include <cassert>
#include <map>
#include <stdexcept>

namespace neutro {

Matrix::Matrix(std::vector<std::string> row_labels,
               std::vector<std::string> col_labels)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      cells_(row_labels_.size() * col_labels_.size()) {}

Matrix Matrix::identity(std::vector<std::string> labels) {
  Matrix m(labels, labels);
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, i) = 1;
  return m;
}

bool Matrix::is_symmetric() const {
  if (rows() != cols()) return false;
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = i + 1; j < cols(); ++j) {
      if (at(i, j) != at(j, i)) return false;
    }
  }
  return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix dimension mismatch in +");
  }
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) += b.at(i, j);
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix dimension mismatch in *");
  }
  Matrix out(a.row_labels(), b.col_labels());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Num& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return out;
}

Matrix pow(Matrix a, std::size_t k) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("matrix power needs a square matrix");
  }
  Matrix result = Matrix::identity(a.row_labels());
  while (k > 0) {
    if (k & 1) result = result * a;
    k >>= 1;
    if (k > 0) a = a * a;
  }
  return result;
}

namespace {

Num kind_value(Kind k) { return k == Kind::Real ? Num(1) : Num::I(); }

std::map<std::string, std::size_t> label_index(const Graph& g) {
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < g.vertex_ids().size(); ++i) {
    idx[g.vertex_ids()[i]] = i;
  }
  return idx;
}

}  // namespace

Matrix adjacency(const Graph& g) {
  Matrix m(g.vertex_ids(), g.vertex_ids());
  auto idx = label_index(g);
  for (const auto& e : g.edges()) {
    Num v = kind_value(e.kind);
    m.at(idx[e.a], idx[e.b]) = v;
    m.at(idx[e.b], idx[e.a]) = v;
  }
  assert(m.is_symmetric());
  return m;
}

std::string edge_label(const Edge& e) { return e.a + "-" + e.b; }

Matrix incidence(const Graph& g) {
  if (g.edge_count() == 0) {
    throw std::invalid_argument("incidence matrix needs at least one edge");
  }
  std::vector<std::string> cols;
  for (const auto& e : g.edges()) cols.push_back(edge_label(e));
  Matrix m(g.vertex_ids(), cols);
  auto idx = label_index(g);
  for (std::size_t j = 0; j < g.edges().size(); ++j) {
    const auto& e = g.edges()[j];
    Num v = kind_value(e.kind);
    m.at(idx[e.a], j) = v;
    m.at(idx[e.b], j) = v;
  }
  return m;
}

Matrix walk_counts(const Graph& g, std::size_t k) {
  if (k == 0) throw std::invalid_argument("walk counting needs k >= 1");
  return pow(adjacency(g), k);
}

YConnectivity connectivity_by_y(const Graph& g) {
  std::size_t n = g.vertex_count();
  if (n <= 1) return {true, Matrix({}, {}), {}};
  Matrix a = adjacency(g);
  Matrix y = a;
  Matrix p = a;
  for (std::size_t i = 2; i < n; ++i) {
    p = p * a;
    y = y + p;
  }
  YConnectivity out{true, std::move(y), {}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && out.y.at(i, j).is_zero()) {
        out.zeros.emplace_back(out.y.row_labels()[i], out.y.col_labels()[j]);
      }
    }
  }
  out.connected = out.zeros.empty();
  return out;
}

BlockDecomposition block_decompose(const Graph& g, MatrixKind kind) {
  auto comps = components(g);
  Matrix source = kind == MatrixKind::Adjacency ? adjacency(g) : incidence(g);

  std::map<std::string, std::size_t> comp_of;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (const auto& id : comps[c]) comp_of[id] = c;
  }

  BlockDecomposition out{{}, {}, {}, {}, Matrix({}, {})};
  if (kind == MatrixKind::Adjacency) {
    for (const auto& comp : comps) {
      out.row_blocks.push_back(comp.size());
      for (const auto& id : comp) out.row_order.push_back(id);
    }
    out.col_order = out.row_order;
    out.col_blocks = out.row_blocks;
  } else {
    // Edge columns grouped by the component that owns them, in insertion
    // order; rows follow the same component order, edgeless components last.
    std::vector<std::vector<std::string>> cols_by_comp(comps.size());
    for (const auto& e : g.edges()) {
      cols_by_comp[comp_of[e.a]].push_back(edge_label(e));
    }
    std::vector<std::size_t> trailing;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (cols_by_comp[c].empty()) {
        trailing.push_back(c);
        continue;
      }
      out.row_blocks.push_back(comps[c].size());
      out.col_blocks.push_back(cols_by_comp[c].size());
      for (const auto& id : comps[c]) out.row_order.push_back(id);
      for (const auto& lbl : cols_by_comp[c]) out.col_order.push_back(lbl);
    }
    for (std::size_t c : trailing) {
      for (const auto& id : comps[c]) out.row_order.push_back(id);
    }
  }

  std::map<std::string, std::size_t> src_row, src_col;
  for (std::size_t i = 0; i < source.rows(); ++i) src_row[source.row_labels()[i]] = i;
  for (std::size_t j = 0; j < source.cols(); ++j) src_col[source.col_labels()[j]] = j;
  Matrix perm(out.row_order, out.col_order);
  for (std::size_t i = 0; i < perm.rows(); ++i) {
    for (std::size_t j = 0; j < perm.cols(); ++j) {
      perm.at(i, j) = source.at(src_row[out.row_order[i]], src_col[out.col_order[j]]);
    }
  }
#ifndef NDEBUG
  // Cross-block cells must all be zero.
  std::size_t r0 = 0, c0 = 0;
  for (std::size_t b = 0; b < out.row_blocks.size(); ++b) {
    for (std::size_t i = 0; i < out.row_blocks[b]; ++i) {
      for (std::size_t j = 0; j < perm.cols(); ++j) {
        bool inside = j >= c0 && j < c0 + out.col_blocks[b];
        assert(inside || perm.at(r0 + i, j).is_zero());
      }
    }
    r0 += out.row_blocks[b];
    c0 += out.col_blocks[b];
  }
#endif
  out.permuted = std::move(perm);
  return out;
}

}  // namespace neutro
