#include "mono/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mono {

namespace {

std::vector<Rational> zero_vec(int n) { return std::vector<Rational>(n); }

Matrix vec_to_col(const std::vector<Rational>& v) {
  Matrix m(static_cast<int>(v.size()), 1);
  for (size_t i = 0; i < v.size(); ++i) m.at(static_cast<int>(i), 0) = v[i];
  return m;
}

std::vector<Rational> col_to_vec(const Matrix& m, int j = 0) {
  std::vector<Rational> v(m.rows());
  for (int i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
  return v;
}

}  // namespace

std::vector<Rational> Algebra::mult_vec(const std::vector<Rational>& u,
                                        const std::vector<Rational>& v) const {
  std::vector<Rational> r = zero_vec(dim);
  for (int i = 0; i < dim; ++i) {
    if (is_zero(u[i])) continue;
    for (int j = 0; j < dim; ++j) {
      if (is_zero(v[j])) continue;
      Rational c = u[i] * v[j];
      const auto& w = mult[i][j];
      for (int k = 0; k < dim; ++k)
        if (!is_zero(w[k])) r[k] += c * w[k];
    }
  }
  return r;
}

Matrix Algebra::left_mult(const std::vector<Rational>& u) const {
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    if (is_zero(u[i])) continue;
    for (int c = 0; c < dim; ++c)
      for (int r = 0; r < dim; ++r)
        if (!is_zero(mult[i][c][r])) m.at(r, c) += u[i] * mult[i][c][r];
  }
  return m;
}

int Algebra::basis_index(const std::string& label) const {
  for (int i = 0; i < dim; ++i)
    if (basis_labels[i] == label) return i;
  throw InputError("unknown basis label: " + label);
}

AlgebraPtr make_algebra(Algebra a, bool validate) {
  const int d = a.dim;
  if (static_cast<int>(a.mult.size()) != d || static_cast<int>(a.unit.size()) != d)
    throw InputError("algebra " + a.name + ": inconsistent dimensions");
  if (a.basis_labels.empty()) {
    for (int i = 0; i < d; ++i) a.basis_labels.push_back("b" + std::to_string(i));
  }
  if (a.idempotents.empty()) a.idempotents.push_back(a.unit);
  if (a.generators.empty()) {
    for (int i = 0; i < d; ++i) {
      std::vector<Rational> e = zero_vec(d);
      e[i] = 1;
      a.generators.push_back(e);
    }
  }

  a.left_mults_.clear();
  for (int i = 0; i < d; ++i) {
    std::vector<Rational> e = zero_vec(d);
    e[i] = 1;
    a.left_mults_.push_back(a.left_mult(e));
  }

  if (validate) {
    // unit law
    for (int i = 0; i < d; ++i) {
      std::vector<Rational> e = zero_vec(d);
      e[i] = 1;
      if (a.mult_vec(a.unit, e) != e || a.mult_vec(e, a.unit) != e)
        throw InputError("algebra " + a.name + ": unit law fails at basis " +
                         a.basis_labels[i]);
    }
    // associativity on all basis triples
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const auto ij = a.mult[i][j];
        for (int k = 0; k < d; ++k) {
          std::vector<Rational> ek = zero_vec(d);
          ek[k] = 1;
          std::vector<Rational> lhs = a.mult_vec(ij, ek);
          std::vector<Rational> ei = zero_vec(d);
          ei[i] = 1;
          std::vector<Rational> rhs = a.mult_vec(ei, a.mult[j][k]);
          if (lhs != rhs)
            throw InputError("algebra " + a.name + ": associativity fails on (" +
                             std::to_string(i) + "," + std::to_string(j) + "," +
                             std::to_string(k) + ")");
        }
      }
    // idempotent axioms
    std::vector<Rational> sum = zero_vec(d);
    for (size_t s = 0; s < a.idempotents.size(); ++s) {
      for (int i = 0; i < d; ++i) sum[i] += a.idempotents[s][i];
      if (a.mult_vec(a.idempotents[s], a.idempotents[s]) != a.idempotents[s])
        throw InputError("algebra " + a.name + ": idempotent " + std::to_string(s) +
                         " is not idempotent");
      for (size_t t = 0; t < a.idempotents.size(); ++t) {
        if (s == t) continue;
        auto p = a.mult_vec(a.idempotents[s], a.idempotents[t]);
        if (p != zero_vec(d))
          throw InputError("algebra " + a.name + ": idempotents not orthogonal");
      }
    }
    if (sum != a.unit)
      throw InputError("algebra " + a.name + ": idempotents do not sum to the unit");
    // generator closure: idempotents + generators must generate
    std::vector<Matrix> seed;
    seed.push_back(vec_to_col(a.unit));
    for (const auto& e : a.idempotents) seed.push_back(vec_to_col(e));
    for (const auto& g : a.generators) seed.push_back(vec_to_col(g));
    Matrix span = column_space_basis(Matrix::hstack(seed));
    for (;;) {
      std::vector<Matrix> prods{span};
      for (int j = 0; j < span.cols(); ++j)
        for (const auto& g : a.generators) {
          auto x = col_to_vec(span, j);
          prods.push_back(vec_to_col(a.mult_vec(g, x)));
          prods.push_back(vec_to_col(a.mult_vec(x, g)));
        }
      Matrix bigger = column_space_basis(Matrix::hstack(prods));
      if (bigger.cols() == span.cols()) break;
      span = bigger;
    }
    if (span.cols() != d)
      throw InputError("algebra " + a.name + ": declared generators do not generate");
  }
  return std::make_shared<const Algebra>(std::move(a));
}

// ---------------------------------------------------------------------------
// path algebras

namespace {

struct Path {
  int source, target;        // vertex indices
  std::vector<int> arrows;   // application order
};

std::string path_label(const QuiverPresentation& q, const Path& p) {
  if (p.arrows.empty()) return "e_" + q.vertices[p.source];
  // composition order (last applied first), matching how the paper writes
  // composite arrows
  std::string s;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    if (!s.empty()) s += "*";
    s += q.arrows[*it].name;
  }
  return s;
}

}  // namespace

AlgebraPtr path_algebra(const QuiverPresentation& q) {
  const int nv = static_cast<int>(q.vertices.size());
  std::map<std::string, int> vidx, aidx;
  for (int v = 0; v < nv; ++v) {
    if (vidx.count(q.vertices[v])) throw InputError("duplicate vertex " + q.vertices[v]);
    vidx[q.vertices[v]] = v;
  }
  for (size_t i = 0; i < q.arrows.size(); ++i) {
    const auto& ar = q.arrows[i];
    if (!vidx.count(ar.from) || !vidx.count(ar.to))
      throw InputError("arrow " + ar.name + " has unknown endpoint");
    if (aidx.count(ar.name)) throw InputError("duplicate arrow " + ar.name);
    aidx[ar.name] = static_cast<int>(i);
  }

  auto term_path = [&](const std::vector<std::string>& names) {
    Path p;
    if (names.empty()) throw InputError("empty relation path");
    std::vector<int> idx;
    for (const auto& nm : names) {
      if (!aidx.count(nm)) throw InputError("relation uses unknown arrow " + nm);
      idx.push_back(aidx[nm]);
    }
    for (size_t k = 0; k + 1 < idx.size(); ++k)
      if (q.arrows[idx[k]].to != q.arrows[idx[k + 1]].from)
        throw InputError("relation path not composable at arrow " + names[k]);
    p.source = vidx[q.arrows[idx.front()].from];
    p.target = vidx[q.arrows[idx.back()].to];
    p.arrows = idx;
    return p;
  };
  for (const auto& rel : q.relations) {
    if (rel.empty()) throw InputError("empty relation");
    Path first = term_path(rel.front().arrows);
    if (first.arrows.size() < 2) throw InputError("relation path of length < 2");
    for (const auto& t : rel) {
      Path p = term_path(t.arrows);
      if (p.arrows.size() < 2) throw InputError("relation path of length < 2");
      if (p.source != first.source || p.target != first.target)
        throw InputError("relation terms are not parallel paths");
    }
  }

  // Enumerate paths by length under the cap, layer by layer.
  const int cap = q.path_cap > 0 ? q.path_cap : 64;
  const size_t count_cap = 200000;
  std::vector<Path> paths;             // all paths, enumeration order
  std::map<std::vector<int>, int> pid; // arrows -> index (trivial paths keyed below)
  std::vector<int> layer_begin{0};

  auto cycle_error = [&](const Path& witness) -> InputError {
    // A too-long path must revisit a vertex; report that cycle.
    std::vector<int> verts{witness.source};
    for (int a : witness.arrows) verts.push_back(vidx[q.arrows[a].to]);
    std::map<int, int> seen;
    for (size_t i = 0; i < verts.size(); ++i) {
      if (seen.count(verts[i])) {
        std::string cyc;
        for (size_t k = seen[verts[i]]; k < i; ++k) {
          if (!cyc.empty()) cyc += "->";
          cyc += q.vertices[verts[k]];
        }
        cyc += "->" + q.vertices[verts[i]];
        return InputError("quiver " + q.name +
                          ": path cap exceeded; growing cycle " + cyc);
      }
      seen[verts[i]] = static_cast<int>(i);
    }
    return InputError("quiver " + q.name + ": path cap exceeded");
  };

  for (int v = 0; v < nv; ++v) paths.push_back(Path{v, v, {}});
  layer_begin.push_back(static_cast<int>(paths.size()));

  auto path_index = [&](const Path& p) -> int {
    if (p.arrows.empty()) return p.source;
    auto it = pid.find(p.arrows);
    return it == pid.end() ? -1 : it->second;
  };

  // The ideal is the span of u*r*v; it is saturated by arrow multiplication.
  // Stabilization: once every path of some length L lies in the ideal span,
  // all longer paths do too, and the quotient is spanned by paths < L.
  int stable_len = -1;
  {
    // first pass just to find the stabilization length
    std::vector<Path> cur;
    for (int v = 0; v < nv; ++v) cur.push_back(Path{v, v, {}});
    for (int len = 1; len <= cap + 1 && stable_len < 0; ++len) {
      std::vector<Path> next;
      for (const auto& p : cur) {
        for (size_t a = 0; a < q.arrows.size(); ++a)
          if (vidx[q.arrows[a].from] == p.target) {
            Path np = p;
            np.arrows.push_back(static_cast<int>(a));
            np.target = vidx[q.arrows[a].to];
            next.push_back(np);
          }
      }
      if (next.empty()) {
        stable_len = len;  // no paths of this length at all
        break;
      }
      if (len > cap) throw cycle_error(next.front());
      // record layer
      for (const auto& p : next) {
        if (paths.size() >= count_cap) throw cycle_error(p);
        pid[p.arrows] = static_cast<int>(paths.size());
        paths.push_back(p);
      }
      layer_begin.push_back(static_cast<int>(paths.size()));
      cur = std::move(next);
      // ideal span over paths enumerated so far
      int np = static_cast<int>(paths.size());
      std::vector<Matrix> gens;
      for (const auto& rel : q.relations) {
        Matrix g(np, 1);
        bool in_range = true;
        for (const auto& t : rel) {
          Path tp = term_path(t.arrows);
          int id = path_index(tp);
          if (id < 0) { in_range = false; break; }
          g.at(id, 0) += t.coeff;
        }
        if (in_range) gens.push_back(g);
      }
      if (gens.empty()) continue;
      // saturate by arrow multiplication within the enumerated range
      Matrix span = column_space_basis(Matrix::hstack(gens));
      for (;;) {
        std::vector<Matrix> prods{span};
        for (int j = 0; j < span.cols(); ++j) {
          for (size_t a = 0; a < q.arrows.size(); ++a) {
            Matrix left(np, 1), right(np, 1);
            bool lok = true, rok = true;
            for (int r = 0; r < np; ++r) {
              if (is_zero(span.at(r, j))) continue;
              const Path& p = paths[r];
              // left: apply p first, then arrow a  (a * p)
              if (vidx[q.arrows[a].from] == p.target) {
                Path np2 = p;
                np2.arrows.push_back(static_cast<int>(a));
                np2.target = vidx[q.arrows[a].to];
                int id = path_index(np2);
                if (id < 0) lok = false; else left.at(id, 0) += span.at(r, j);
              }
              // right: apply arrow a first, then p  (p * a)
              if (vidx[q.arrows[a].to] == p.source) {
                Path np2;
                np2.source = vidx[q.arrows[a].from];
                np2.target = p.target;
                np2.arrows.push_back(static_cast<int>(a));
                np2.arrows.insert(np2.arrows.end(), p.arrows.begin(), p.arrows.end());
                int id = path_index(np2);
                if (id < 0) rok = false; else right.at(id, 0) += span.at(r, j);
              }
            }
            if (lok && !left.is_zero()) prods.push_back(left);
            if (rok && !right.is_zero()) prods.push_back(right);
          }
        }
        Matrix bigger = column_space_basis(Matrix::hstack(prods));
        if (bigger.cols() == span.cols()) break;
        span = std::move(bigger);
      }
      // is every path of length == len in the span?
      int lb = layer_begin[len], le = layer_begin[len + 1];
      Matrix layer(np, le - lb);
      for (int c = lb; c < le; ++c) layer.at(c, c - lb) = 1;
      if (subspace_contains(span, layer)) stable_len = len;
    }
  }
  if (stable_len < 0) {
    // cap reached with surviving paths
    Path w = paths.back();
    throw cycle_error(w);
  }

  // Second pass: enumerate paths up to 2*(stable_len-1) so that products of
  // basis residues can be reduced, rebuild the ideal span, pick the basis.
  const int full_len = std::max(1, 2 * (stable_len - 1));
  paths.clear();
  pid.clear();
  layer_begin.assign(1, 0);
  for (int v = 0; v < nv; ++v) paths.push_back(Path{v, v, {}});
  layer_begin.push_back(static_cast<int>(paths.size()));
  {
    std::vector<Path> cur;
    for (int v = 0; v < nv; ++v) cur.push_back(Path{v, v, {}});
    for (int len = 1; len <= full_len; ++len) {
      std::vector<Path> next;
      for (const auto& p : cur)
        for (size_t a = 0; a < q.arrows.size(); ++a)
          if (vidx[q.arrows[a].from] == p.target) {
            Path np = p;
            np.arrows.push_back(static_cast<int>(a));
            np.target = vidx[q.arrows[a].to];
            if (paths.size() >= count_cap) throw cycle_error(np);
            pid[np.arrows] = static_cast<int>(paths.size());
            paths.push_back(np);
            next.push_back(np);
          }
      layer_begin.push_back(static_cast<int>(paths.size()));
      cur = std::move(next);
    }
  }
  const int np = static_cast<int>(paths.size());
  Matrix ideal(np, 0);
  {
    std::vector<Matrix> gens;
    for (const auto& rel : q.relations) {
      Matrix g(np, 1);
      for (const auto& t : rel) {
        Path tp = term_path(t.arrows);
        int id = path_index(tp);
        if (id < 0) throw InputError("internal: relation term outside range");
        g.at(id, 0) += t.coeff;
      }
      gens.push_back(g);
    }
    if (!gens.empty()) {
      Matrix span = column_space_basis(Matrix::hstack(gens));
      for (;;) {
        std::vector<Matrix> prods{span};
        for (int j = 0; j < span.cols(); ++j)
          for (size_t a = 0; a < q.arrows.size(); ++a) {
            Matrix left(np, 1), right(np, 1);
            for (int r = 0; r < np; ++r) {
              if (is_zero(span.at(r, j))) continue;
              const Path& p = paths[r];
              if (vidx[q.arrows[a].from] == p.target) {
                Path np2 = p;
                np2.arrows.push_back(static_cast<int>(a));
                np2.target = vidx[q.arrows[a].to];
                int id = path_index(np2);
                if (id >= 0) left.at(id, 0) += span.at(r, j);
                // products beyond full_len lie in the ideal already
              }
              if (vidx[q.arrows[a].to] == p.source) {
                Path np2;
                np2.source = vidx[q.arrows[a].from];
                np2.target = p.target;
                np2.arrows.push_back(static_cast<int>(a));
                np2.arrows.insert(np2.arrows.end(), p.arrows.begin(), p.arrows.end());
                int id = path_index(np2);
                if (id >= 0) right.at(id, 0) += span.at(r, j);
              }
            }
            if (!left.is_zero()) prods.push_back(left);
            if (!right.is_zero()) prods.push_back(right);
          }
        Matrix bigger = column_space_basis(Matrix::hstack(prods));
        if (bigger.cols() == span.cols()) break;
        span = std::move(bigger);
      }
      ideal = span;
    }
  }
  // Paths of length >= stable_len are in the ideal; add them explicitly so
  // that reduction of long products is a plain linear solve.
  {
    std::vector<Matrix> cols{ideal};
    for (int r = layer_begin[stable_len]; r < np; ++r) {
      Matrix u(np, 1);
      u.at(r, 0) = 1;
      cols.push_back(u);
    }
    ideal = column_space_basis(Matrix::hstack(cols));
  }

  // Greedy residue basis among paths of length < stable_len.
  std::vector<int> basis_paths;
  Matrix span = ideal;
  for (int r = 0; r < layer_begin[stable_len]; ++r) {
    Matrix u(np, 1);
    u.at(r, 0) = 1;
    if (!subspace_contains(span, u)) {
      basis_paths.push_back(r);
      span = Matrix::hstack({span, u});
    }
  }
  const int d = static_cast<int>(basis_paths.size());

  // reduction: path-space vector -> coordinates in the residue basis
  Matrix red_basis(np, d);
  for (int c = 0; c < d; ++c) red_basis.at(basis_paths[c], c) = 1;
  Matrix solve_lhs = Matrix::hstack({red_basis, ideal});
  auto reduce = [&](const Matrix& v) {
    auto x = solve(solve_lhs, v);
    if (!x) throw InputError("internal: path reduction failed");
    return x->rows_slice(0, d);
  };

  Algebra alg;
  alg.name = q.name.empty() ? "path_algebra" : q.name;
  alg.dim = d;
  alg.provenance = q;
  for (int i = 0; i < d; ++i) alg.basis_labels.push_back(path_label(q, paths[basis_paths[i]]));
  alg.mult.assign(d, std::vector<std::vector<Rational>>(d, zero_vec(d)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Path& pi = paths[basis_paths[i]];
      const Path& pj = paths[basis_paths[j]];
      // b_i * b_j = "apply p_j first, then p_i"
      if (pj.target != pi.source) continue;
      Path prod;
      prod.source = pj.source;
      prod.target = pi.target;
      prod.arrows = pj.arrows;
      prod.arrows.insert(prod.arrows.end(), pi.arrows.begin(), pi.arrows.end());
      int id = path_index(prod);
      if (id < 0) throw InputError("internal: product path outside range");
      Matrix v(np, 1);
      v.at(id, 0) = 1;
      Matrix coords = reduce(v);
      for (int k = 0; k < d; ++k) alg.mult[i][j][k] = coords.at(k, 0);
    }
  alg.unit = zero_vec(d);
  for (int v = 0; v < nv; ++v) {
    Matrix u(np, 1);
    u.at(v, 0) = 1;
    Matrix coords = reduce(u);
    for (int k = 0; k < d; ++k) alg.unit[k] += coords.at(k, 0);
    std::vector<Rational> idem(d);
    for (int k = 0; k < d; ++k) idem[k] = coords.at(k, 0);
    alg.idempotents.push_back(idem);
  }
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    Path p;
    p.source = vidx[q.arrows[a].from];
    p.target = vidx[q.arrows[a].to];
    p.arrows = {static_cast<int>(a)};
    int id = path_index(p);
    Matrix u(np, 1);
    u.at(id, 0) = 1;
    Matrix coords = reduce(u);
    std::vector<Rational> g(d);
    for (int k = 0; k < d; ++k) g[k] = coords.at(k, 0);
    alg.generators.push_back(g);
  }
  return make_algebra(std::move(alg));
}

// ---------------------------------------------------------------------------

AlgebraPtr triangular_algebra(const AlgebraPtr& a, int n) {
  if (n < 1) throw InputError("triangular_algebra: n must be >= 1");
  const int da = a->dim;
  struct Slot {
    int i, j, k;
  };
  std::vector<Slot> slots;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = 0; k < da; ++k) slots.push_back({i, j, k});
  const int d = static_cast<int>(slots.size());
  auto slot_id = [&](int i, int j, int k) {
    // lexicographic layout mirrors the loop above
    int pair = 0;
    for (int ii = 1; ii < i; ++ii) pair += n - ii + 1;
    pair += j - i;
    return pair * da + k;
  };

  Algebra t;
  t.name = "T" + std::to_string(n) + "(" + a->name + ")";
  t.dim = d;
  for (const auto& s : slots)
    t.basis_labels.push_back("E" + std::to_string(s.i) + std::to_string(s.j) + "*" +
                             a->basis_labels[s.k]);
  t.mult.assign(d, std::vector<std::vector<Rational>>(d, zero_vec(d)));
  for (int s = 0; s < d; ++s)
    for (int u = 0; u < d; ++u) {
      const Slot& x = slots[s];
      const Slot& y = slots[u];
      if (x.j != y.i) continue;
      const auto& prod = a->mult[x.k][y.k];
      for (int k = 0; k < da; ++k)
        if (!is_zero(prod[k])) t.mult[s][u][slot_id(x.i, y.j, k)] = prod[k];
    }
  t.unit = zero_vec(d);
  for (int i = 1; i <= n; ++i)
    for (int k = 0; k < da; ++k)
      t.unit[slot_id(i, i, k)] = a->unit[k];
  for (int i = 1; i <= n; ++i)
    for (const auto& e : a->idempotents) {
      std::vector<Rational> idem = zero_vec(d);
      for (int k = 0; k < da; ++k) idem[slot_id(i, i, k)] = e[k];
      t.idempotents.push_back(idem);
    }
  for (int i = 1; i <= n; ++i)
    for (const auto& g : a->generators) {
      std::vector<Rational> gg = zero_vec(d);
      for (int k = 0; k < da; ++k) gg[slot_id(i, i, k)] = g[k];
      t.generators.push_back(gg);
    }
  for (int i = 1; i < n; ++i) {
    std::vector<Rational> conn = zero_vec(d);
    for (int k = 0; k < da; ++k) conn[slot_id(i, i + 1, k)] = a->unit[k];
    t.generators.push_back(conn);
  }
  return make_algebra(std::move(t));
}

AlgebraPtr opposite(const AlgebraPtr& a) {
  Algebra o;
  o.name = a->name + "^op";
  o.dim = a->dim;
  o.basis_labels = a->basis_labels;
  o.unit = a->unit;
  o.idempotents = a->idempotents;
  o.generators = a->generators;
  o.mult.assign(a->dim, std::vector<std::vector<Rational>>(a->dim));
  for (int i = 0; i < a->dim; ++i)
    for (int j = 0; j < a->dim; ++j) o.mult[i][j] = a->mult[j][i];
  return make_algebra(std::move(o));
}

Matrix radical_basis(const Algebra& a) {
  const int d = a.dim;
  Matrix gram(d, d);
  for (int i = 0; i < d; ++i) {
    const Matrix& li = a.left_mult_basis(i);
    for (int j = 0; j < d; ++j) {
      const Matrix& lj = a.left_mult_basis(j);
      Rational tr = 0;
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
          if (!is_zero(li.at(r, c)) && !is_zero(lj.at(c, r))) tr += li.at(r, c) * lj.at(c, r);
      gram.at(i, j) = tr;
    }
  }
  return kernel_basis(gram);
}

}  // namespace mono
