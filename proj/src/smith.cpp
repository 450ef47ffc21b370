#include "ternlab/smith.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "ternlab/errors.hpp"

namespace ternlab {

void SparseMatrix::add(std::size_t r, std::size_t c, const Integer& v) {
  if (r >= rows_ || c >= columns_.size()) throw InputError("sparse matrix index out of range");
  if (v == 0) return;
  auto& col = columns_[c];
  auto [it, inserted] = col.try_emplace(r, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) col.erase(it);
  }
}

Integer SparseMatrix::at(std::size_t r, std::size_t c) const {
  auto it = columns_[c].find(r);
  return it == columns_[c].end() ? Integer(0) : it->second;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& col : columns_) n += col.size();
  return n;
}

SparseMatrix SparseMatrix::transposed() const {
  SparseMatrix t(cols(), rows());
  for (std::size_t c = 0; c < cols(); ++c)
    for (const auto& [r, v] : columns_[c]) t.columns_[r].emplace(c, v);
  return t;
}

DenseMatrix SparseMatrix::to_dense() const {
  DenseMatrix d(rows_, std::vector<Integer>(cols(), 0));
  for (std::size_t c = 0; c < cols(); ++c)
    for (const auto& [r, v] : columns_[c]) d[r][c] = v;
  return d;
}

SparseMatrix SparseMatrix::from_dense(const DenseMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  SparseMatrix s(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) s.add(r, c, m[r][c]);
  return s;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix dimensions do not agree");
  SparseMatrix out(a.rows(), b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c)
    for (const auto& [k, bv] : b.column(c))
      for (const auto& [r, av] : a.column(k)) out.add(r, c, av * bv);
  return out;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t inner = n ? a[0].size() : 0;
  if (inner != b.size()) throw InputError("matrix dimensions do not agree");
  const std::size_t m = b.empty() ? 0 : b[0].size();
  DenseMatrix out(n, std::vector<Integer>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

DenseMatrix identity_matrix(std::size_t n) {
  DenseMatrix out(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

class SmithEliminator {
 public:
  SmithEliminator(const SparseMatrix& m, SmithForm& out)
      : out_(out), rows_(m.rows()), colrows_(m.cols()) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (const auto& [r, v] : m.column(c)) {
        rows_[r].emplace(c, v);
        colrows_[c].insert(r);
      }
  }

  void run() {
    const std::size_t limit = std::min(rows_.size(), colrows_.size());
    std::vector<Integer> diag;
    for (std::size_t s = 0; s < limit; ++s) {
      auto pivot = find_pivot(s);
      if (!pivot) break;
      if (pivot->first != s) row_swap(pivot->first, s);
      if (pivot->second != s) col_swap(pivot->second, s);
      clear_cross(s);
      diag.push_back(rows_[s].at(s));
    }
    normalize(diag);
    out_.divisors_ = std::move(diag);
  }

 private:
  using Row = std::map<std::size_t, Integer>;

  std::optional<std::pair<std::size_t, std::size_t>> find_pivot(std::size_t s) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    std::size_t best_score = 0;
    for (std::size_t r = s; r < rows_.size(); ++r) {
      const std::size_t row_len = rows_[r].size();
      for (const auto& [c, v] : rows_[r]) {
        Integer mag = abs(v);
        const std::size_t score = (row_len - 1) * (colrows_[c].size() - 1);
        if (!best || mag < best_abs || (mag == best_abs && score < best_score)) {
          best = {r, c};
          best_abs = mag;
          best_score = score;
          if (best_abs == 1 && best_score == 0) return best;
        }
      }
    }
    return best;
  }

  // Eliminates everything in row s and column s except the pivot, moving a
  // smaller remainder into the pivot slot whenever one appears.
  void clear_cross(std::size_t s) {
    for (;;) {
      std::vector<std::size_t> others;
      for (std::size_t r : colrows_[s])
        if (r != s) others.push_back(r);
      for (std::size_t r : others) {
        const Integer q = rows_[r].at(s) / rows_[s].at(s);
        if (q != 0) row_addmul(r, s, -q);
      }
      if (colrows_[s].size() > 1) {
        row_swap(min_in_column(s), s);
        continue;
      }
      std::vector<std::size_t> cols;
      for (const auto& [c, v] : rows_[s])
        if (c != s) cols.push_back(c);
      for (std::size_t c : cols) {
        const Integer q = rows_[s].at(c) / rows_[s].at(s);
        if (q != 0) col_addmul(c, s, -q);
      }
      if (rows_[s].size() > 1) {
        col_swap(min_in_row(s), s);
        continue;
      }
      return;
    }
  }

  std::size_t min_in_column(std::size_t s) const {
    std::size_t best = s;
    Integer best_abs;
    for (std::size_t r : colrows_[s]) {
      if (r == s) continue;
      Integer mag = abs(rows_[r].at(s));
      if (best == s || mag < best_abs) {
        best = r;
        best_abs = mag;
      }
    }
    return best;
  }

  std::size_t min_in_row(std::size_t s) const {
    std::size_t best = s;
    Integer best_abs;
    for (const auto& [c, v] : rows_[s]) {
      if (c == s) continue;
      Integer mag = abs(v);
      if (best == s || mag < best_abs) {
        best = c;
        best_abs = mag;
      }
    }
    return best;
  }

  void set_entry(std::size_t r, std::size_t c, const Integer& v) {
    if (v == 0) {
      if (rows_[r].erase(c)) colrows_[c].erase(r);
    } else {
      rows_[r][c] = v;
      colrows_[c].insert(r);
    }
  }

  void log_row(std::size_t i, std::size_t j, Integer a, Integer b, Integer c, Integer d) {
    if (out_.with_transforms_)
      out_.row_ops_.push_back({i, j, std::move(a), std::move(b), std::move(c), std::move(d)});
  }

  void log_col(std::size_t i, std::size_t j, Integer a, Integer b, Integer c, Integer d) {
    if (out_.with_transforms_)
      out_.col_ops_.push_back({i, j, std::move(a), std::move(b), std::move(c), std::move(d)});
  }

  // row_t += q * row_src
  void row_addmul(std::size_t t, std::size_t src, const Integer& q) {
    const Row source = rows_[src];
    for (const auto& [c, v] : source) {
      auto it = rows_[t].find(c);
      set_entry(t, c, (it == rows_[t].end() ? Integer(0) : it->second) + q * v);
    }
    log_row(t, src, 1, q, 0, 1);
  }

  void row_swap(std::size_t i, std::size_t j) {
    for (const auto& [c, v] : rows_[i]) colrows_[c].erase(i);
    for (const auto& [c, v] : rows_[j]) colrows_[c].erase(j);
    std::swap(rows_[i], rows_[j]);
    for (const auto& [c, v] : rows_[i]) colrows_[c].insert(i);
    for (const auto& [c, v] : rows_[j]) colrows_[c].insert(j);
    log_row(i, j, 0, 1, 1, 0);
  }

  // col_t += q * col_src
  void col_addmul(std::size_t t, std::size_t src, const Integer& q) {
    const std::set<std::size_t> touched = colrows_[src];
    for (std::size_t r : touched) {
      auto it = rows_[r].find(t);
      set_entry(r, t, (it == rows_[r].end() ? Integer(0) : it->second) + q * rows_[r].at(src));
    }
    log_col(t, src, 1, q, 0, 1);
  }

  void col_swap(std::size_t i, std::size_t j) {
    std::set<std::size_t> touched = colrows_[i];
    touched.insert(colrows_[j].begin(), colrows_[j].end());
    for (std::size_t r : touched) {
      auto& row = rows_[r];
      auto ii = row.find(i);
      auto jj = row.find(j);
      Integer vi = ii == row.end() ? Integer(0) : ii->second;
      Integer vj = jj == row.end() ? Integer(0) : jj->second;
      set_entry(r, i, vj);
      set_entry(r, j, vi);
    }
    log_col(i, j, 0, 1, 1, 0);
  }

  // Turns the diagonal into a positive divisibility chain. Each step acts on
  // a diagonal 2x2 block diag(a, b) with g = gcd(a, b) = s a + t b:
  //   [s t; -b/g a/g] diag(a,b) [1 -t b/g; 1 s a/g] = diag(g, ab/g).
  void normalize(std::vector<Integer>& d) {
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] < 0) {
        d[i] = -d[i];
        log_row(i, i, -1, 0, 0, 0);
      }
    }
    for (std::size_t i = 0; i < d.size(); ++i) {
      for (std::size_t j = i + 1; j < d.size(); ++j) {
        if (mpz_divisible_p(d[j].get_mpz_t(), d[i].get_mpz_t())) continue;
        Integer g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), d[i].get_mpz_t(),
                   d[j].get_mpz_t());
        const Integer a = d[i], b = d[j];
        const Integer ag = a / g, bg = b / g;
        log_row(i, j, s, t, -bg, ag);
        log_col(i, j, 1, 1, -(t * bg), s * ag);
        d[i] = g;
        d[j] = a * bg;
      }
    }
  }

  SmithForm& out_;
  std::vector<Row> rows_;
  std::vector<std::set<std::size_t>> colrows_;
};

SmithForm SmithForm::compute(const SparseMatrix& m, bool with_transforms) {
  SmithForm out;
  out.rows_ = m.rows();
  out.cols_ = m.cols();
  out.with_transforms_ = with_transforms;
  SmithEliminator(m, out).run();
  return out;
}

namespace {

void require_transforms(bool have) {
  if (!have) throw InputError("Smith form was computed without transforms");
}

}  // namespace

std::vector<Integer> SmithForm::apply_row_transform(std::vector<Integer> z) const {
  require_transforms(with_transforms_);
  if (z.size() != rows_) throw InputError("vector length does not match the row count");
  for (const Op& op : row_ops_) {
    if (op.i == op.j) {
      z[op.i] *= op.a;
      continue;
    }
    Integer zi = op.a * z[op.i] + op.b * z[op.j];
    Integer zj = op.c * z[op.i] + op.d * z[op.j];
    z[op.i] = std::move(zi);
    z[op.j] = std::move(zj);
  }
  return z;
}

std::vector<Integer> SmithForm::apply_col_transform(std::vector<Integer> y) const {
  require_transforms(with_transforms_);
  if (y.size() != cols_) throw InputError("vector length does not match the column count");
  for (auto it = col_ops_.rbegin(); it != col_ops_.rend(); ++it) {
    const Op& op = *it;
    if (op.i == op.j) {
      y[op.i] *= op.a;
      continue;
    }
    Integer yi = op.a * y[op.i] + op.c * y[op.j];
    Integer yj = op.b * y[op.i] + op.d * y[op.j];
    y[op.i] = std::move(yi);
    y[op.j] = std::move(yj);
  }
  return y;
}

DenseMatrix SmithForm::row_transform() const {
  require_transforms(with_transforms_);
  DenseMatrix u = identity_matrix(rows_);
  for (const Op& op : row_ops_) {
    if (op.i == op.j) {
      for (auto& v : u[op.i]) v *= op.a;
      continue;
    }
    for (std::size_t c = 0; c < rows_; ++c) {
      Integer vi = op.a * u[op.i][c] + op.b * u[op.j][c];
      Integer vj = op.c * u[op.i][c] + op.d * u[op.j][c];
      u[op.i][c] = std::move(vi);
      u[op.j][c] = std::move(vj);
    }
  }
  return u;
}

DenseMatrix SmithForm::col_transform() const {
  require_transforms(with_transforms_);
  DenseMatrix v = identity_matrix(cols_);
  for (const Op& op : col_ops_) {
    if (op.i == op.j) {
      for (auto& row : v) row[op.i] *= op.a;
      continue;
    }
    for (auto& row : v) {
      Integer vi = op.a * row[op.i] + op.b * row[op.j];
      Integer vj = op.c * row[op.i] + op.d * row[op.j];
      row[op.i] = std::move(vi);
      row[op.j] = std::move(vj);
    }
  }
  return v;
}

std::vector<Integer> SmithForm::torsion() const {
  std::vector<Integer> out;
  for (const auto& d : divisors_)
    if (d > 1) out.push_back(d);
  return out;
}

}  // namespace ternlab
