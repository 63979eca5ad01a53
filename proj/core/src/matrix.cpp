#include "treespect/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace treespect {

TreePatternMatrix TreePatternMatrix::build(const std::vector<std::string>& vertex_order,
                                           std::vector<RationalVector> rows) {
  const int n = static_cast<int>(vertex_order.size());
  if (static_cast<int>(rows.size()) != n) {
    throw std::invalid_argument("matrix row count does not match vertex order");
  }
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("matrix is not square");
    }
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool ij = rows[i][j] != 0;
      bool ji = rows[j][i] != 0;
      if (ij != ji) {
        throw std::invalid_argument("off-diagonal zero pattern is not symmetric at (" +
                                    vertex_order[i] + ", " + vertex_order[j] + ")");
      }
      if (ij) edges.emplace_back(vertex_order[i], vertex_order[j]);
    }
  }
  TreePatternMatrix m;
  m.vertex_order_ = vertex_order;
  m.rows_ = std::move(rows);
  try {
    m.pattern_ = Forest::build(vertex_order, edges);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("matrix pattern graph is not a forest");
  }
  return m;
}

TreePatternMatrix TreePatternMatrix::adjacency(const Forest& f) {
  const int n = f.order();
  std::vector<RationalVector> rows(n, RationalVector(n, Rational(0)));
  for (auto [u, v] : f.edges()) {
    rows[u][v] = 1;
    rows[v][u] = 1;
  }
  TreePatternMatrix m;
  m.vertex_order_ = f.labels();
  m.rows_ = std::move(rows);
  m.pattern_ = f;
  return m;
}

TreePatternMatrix TreePatternMatrix::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<std::string> verts;
  std::vector<RationalVector> rows;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    if (tok == "order") {
      if (!(ls >> n) || n < 0) throw ParseError(lineno, "bad order");
    } else if (tok == "vertices") {
      std::string v;
      while (ls >> v) verts.push_back(v);
    } else {
      if (n < 0) throw ParseError(lineno, "entry row before 'order'");
      RationalVector row;
      std::string entry = tok;
      try {
        do {
          row.push_back(parse_rational(entry));
        } while (ls >> entry);
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
      }
      if (static_cast<int>(row.size()) != n) {
        throw ParseError(lineno, "expected " + std::to_string(n) + " entries");
      }
      rows.push_back(std::move(row));
    }
  }
  if (n < 0) throw ParseError(lineno, "missing 'order' line");
  if (static_cast<int>(verts.size()) != n) throw ParseError(lineno, "missing or short 'vertices' line");
  if (static_cast<int>(rows.size()) != n) throw ParseError(lineno, "expected " + std::to_string(n) + " rows");
  try {
    return build(verts, std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw ParseError(lineno, e.what());
  }
}

std::string TreePatternMatrix::serialize() const {
  std::ostringstream out;
  out << "order " << order() << '\n';
  out << "vertices";
  for (const auto& v : vertex_order_) out << ' ' << v;
  out << '\n';
  for (const auto& row : rows_) {
    for (int j = 0; j < order(); ++j) {
      if (j) out << ' ';
      out << format_rational(row[j]);
    }
    out << '\n';
  }
  return out.str();
}

bool TreePatternMatrix::zero_diagonal() const {
  for (int i = 0; i < order(); ++i) {
    if (rows_[i][i] != 0) return false;
  }
  return true;
}

bool TreePatternMatrix::value_symmetric() const {
  for (int i = 0; i < order(); ++i) {
    for (int j = i + 1; j < order(); ++j) {
      if (rows_[i][j] != rows_[j][i]) return false;
    }
  }
  return true;
}

TreePatternMatrix TreePatternMatrix::shifted(const Rational& lambda) const {
  TreePatternMatrix m = *this;
  for (int i = 0; i < order(); ++i) m.rows_[i][i] -= lambda;
  return m;
}

TreePatternMatrix TreePatternMatrix::principal_submatrix(const std::vector<int>& keep) const {
  std::vector<int> idx = keep;
  std::sort(idx.begin(), idx.end());
  std::vector<std::string> verts;
  verts.reserve(idx.size());
  for (int v : idx) verts.push_back(vertex_order_.at(v));
  std::vector<RationalVector> rows;
  rows.reserve(idx.size());
  for (int r : idx) {
    RationalVector row;
    row.reserve(idx.size());
    for (int c : idx) row.push_back(rows_[r][c]);
    rows.push_back(std::move(row));
  }
  TreePatternMatrix m;
  m.vertex_order_ = std::move(verts);
  m.rows_ = std::move(rows);
  m.pattern_ = pattern_.induced(idx);
  return m;
}

}  // namespace treespect
