#include "treespect/linalg.hpp"

#include <algorithm>

namespace treespect {

namespace {

namespace mp = boost::multiprecision;

struct Echelon {
  std::vector<std::vector<Integer>> rows;  // row echelon, integer entries
  std::vector<int> pivot_cols;             // ascending
};

// Row-scales to integers, then runs Bareiss fraction-free elimination.
// Row scaling does not change the null space.
Echelon echelon_form(const std::vector<RationalVector>& input, int cols) {
  std::vector<std::vector<Integer>> rows;
  rows.reserve(input.size());
  for (const auto& row : input) {
    Integer scale = 1;
    for (const auto& e : row) {
      const Integer& den = mp::denominator(e);
      scale = mp::lcm(scale, den);
    }
    std::vector<Integer> r;
    r.reserve(cols);
    for (const auto& e : row) {
      r.push_back(mp::numerator(e) * (scale / mp::denominator(e)));
    }
    rows.push_back(std::move(r));
  }

  Echelon ech;
  Integer prev_pivot = 1;
  std::size_t next_row = 0;
  for (int col = 0; col < cols && next_row < rows.size(); ++col) {
    std::size_t pivot_row = next_row;
    while (pivot_row < rows.size() && rows[pivot_row][col] == 0) ++pivot_row;
    if (pivot_row == rows.size()) continue;
    std::swap(rows[next_row], rows[pivot_row]);
    const Integer pivot = rows[next_row][col];
    for (std::size_t r = next_row + 1; r < rows.size(); ++r) {
      const Integer factor = rows[r][col];
      for (int c = col; c < cols; ++c) {
        Integer v = rows[r][c] * pivot - rows[next_row][c] * factor;
        rows[r][c] = v / prev_pivot;  // exact by Bareiss
      }
    }
    prev_pivot = pivot;
    ech.pivot_cols.push_back(col);
    ++next_row;
  }
  rows.resize(next_row);
  ech.rows = std::move(rows);
  return ech;
}

void normalize_first_nonzero(RationalVector& v) {
  for (const auto& e : v) {
    if (e != 0) {
      Rational inv = Rational(1) / e;
      for (auto& x : v) x *= inv;
      return;
    }
  }
}

}  // namespace

std::vector<RationalVector> nullspace(const std::vector<RationalVector>& rows, int cols) {
  Echelon ech = echelon_form(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int c : ech.pivot_cols) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (int free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    RationalVector x(cols, Rational(0));
    x[free_col] = 1;
    for (int i = static_cast<int>(ech.pivot_cols.size()) - 1; i >= 0; --i) {
      const int pc = ech.pivot_cols[i];
      Rational acc = 0;
      for (int c = pc + 1; c < cols; ++c) {
        if (x[c] != 0 && ech.rows[i][c] != 0) acc += Rational(ech.rows[i][c]) * x[c];
      }
      x[pc] = -acc / Rational(ech.rows[i][pc]);
    }
    normalize_first_nonzero(x);
    basis.push_back(std::move(x));
  }
  return basis;
}

int rank(const std::vector<RationalVector>& rows, int cols) {
  return static_cast<int>(echelon_form(rows, cols).pivot_cols.size());
}

bool linearly_independent(const std::vector<RationalVector>& vectors) {
  if (vectors.empty()) return true;
  const int cols = static_cast<int>(vectors[0].size());
  return rank(vectors, cols) == static_cast<int>(vectors.size());
}

TreePatternMatrix adjacency_matrix(const Forest& f) {
  return TreePatternMatrix::adjacency(f);
}

RationalBasis eigenspace_basis(const TreePatternMatrix& m, const Rational& lambda) {
  TreePatternMatrix shifted = m.shifted(lambda);
  RationalBasis basis;
  basis.lambda = lambda;
  basis.vectors = nullspace(shifted.rows(), m.order());
  return basis;
}

RationalBasis eigenspace_basis(const Forest& f, const Rational& lambda) {
  return eigenspace_basis(TreePatternMatrix::adjacency(f), lambda);
}

bool verify_eigenvector(const TreePatternMatrix& m, const Rational& lambda,
                        const RationalVector& x) {
  if (static_cast<int>(x.size()) != m.order()) {
    throw std::invalid_argument("eigenvector length does not match matrix order");
  }
  bool nonzero = false;
  for (const auto& e : x) {
    if (e != 0) {
      nonzero = true;
      break;
    }
  }
  if (!nonzero) return false;
  for (int i = 0; i < m.order(); ++i) {
    Rational acc = 0;
    // Only pattern neighbors and the diagonal can contribute.
    for (int j : m.pattern().neighbors(i)) acc += m.at(i, j) * x[j];
    acc += m.at(i, i) * x[i];
    if (acc != lambda * x[i]) return false;
  }
  return true;
}

std::map<long, int> integer_spectrum(const Forest& f) {
  std::map<long, int> spectrum;
  const long bound = f.max_degree();
  TreePatternMatrix a = TreePatternMatrix::adjacency(f);
  for (long k = -bound; k <= bound; ++k) {
    int dim = eigenspace_basis(a, Rational(k)).dimension();
    if (dim > 0) spectrum[k] = dim;
  }
  return spectrum;
}

std::vector<int> always_zero_set(int order, const std::vector<RationalVector>& vectors) {
  std::vector<int> zero;
  for (int v = 0; v < order; ++v) {
    bool all = true;
    for (const auto& vec : vectors) {
      if (vec[v] != 0) {
        all = false;
        break;
      }
    }
    if (all) zero.push_back(v);
  }
  return zero;
}

RationalBasis straighten_basis(const Forest& f, const RationalBasis& b) {
  TreePatternMatrix a = TreePatternMatrix::adjacency(f);
  for (const auto& v : b.vectors) {
    if (!verify_eigenvector(a, b.lambda, v)) {
      throw std::invalid_argument("straighten_basis: input is not an eigenvector set");
    }
  }
  if (!linearly_independent(b.vectors)) {
    throw std::invalid_argument("straighten_basis: input vectors are dependent");
  }
  if (b.dimension() != eigenspace_basis(a, b.lambda).dimension()) {
    throw std::invalid_argument("straighten_basis: input does not span the eigenspace");
  }

  auto zero = always_zero_set(f.order(), b.vectors);
  Forest support_graph = f.without_vertices(zero);
  std::vector<std::vector<int>> comps;
  for (const auto& part : support_graph.component_vertices()) {
    std::vector<int> orig;
    orig.reserve(part.size());
    for (int v : part) orig.push_back(f.require_index(support_graph.label(v)));
    comps.push_back(std::move(orig));
  }

  std::vector<RationalVector> out = b.vectors;
  std::vector<std::string> witness_labels;
  std::vector<bool> used(comps.size(), false);
  for (std::size_t j = 0; j < out.size(); ++j) {
    int witness = -1;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (!used[c] && out[j][comps[c].front()] != 0) {
        witness = static_cast<int>(c);
        break;
      }
    }
    if (witness < 0) {
      // Cannot happen for a genuine eigenspace basis of a tree; a vector
      // vanishing on all unused components would be dependent on earlier ones.
      throw std::logic_error("straighten_basis: no witness component found");
    }
    used[witness] = true;
    witness_labels.push_back(f.label(comps[witness].front()));
    const int u = comps[witness].front();
    for (std::size_t i = j + 1; i < out.size(); ++i) {
      if (out[i][u] == 0) continue;
      Rational factor = out[i][u] / out[j][u];
      for (int v = 0; v < f.order(); ++v) out[i][v] -= factor * out[j][v];
      for (int v : comps[witness]) {
        if (out[i][v] != 0) {
          throw std::logic_error("straighten_basis: restriction did not vanish");
        }
      }
    }
  }
  for (auto& v : out) normalize_first_nonzero(v);

  RationalBasis result;
  result.vectors = std::move(out);
  result.lambda = b.lambda;
  result.straight_order = std::move(witness_labels);
  return result;
}

bool check_straight(const std::vector<RationalVector>& vectors,
                    const std::vector<std::vector<int>>& witnesses) {
  if (vectors.size() != witnesses.size()) return false;
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    bool nonzero = false;
    for (int v : witnesses[j]) {
      if (vectors[j][v] != 0) nonzero = true;
    }
    if (!nonzero) return false;
    for (std::size_t i = j + 1; i < witnesses.size(); ++i) {
      for (int v : witnesses[i]) {
        if (vectors[j][v] != 0) return false;
      }
    }
  }
  return true;
}

}  // namespace treespect
