#include "mono/module.hpp"

#include <algorithm>
#include <cassert>
#include <random>

namespace mono {

namespace {

Matrix vec_to_col(const std::vector<Rational>& v) {
  Matrix m(static_cast<int>(v.size()), 1);
  for (size_t i = 0; i < v.size(); ++i) m.at(static_cast<int>(i), 0) = v[i];
  return m;
}

// Left annihilator rows: L such that L*v = 0 iff v in span(columns of B).
Matrix annihilator_rows(const Matrix& B) {
  return kernel_basis(B.transpose()).transpose();
}

}  // namespace

Matrix Module::action_of(const std::vector<Rational>& coeffs) const {
  Matrix r(dim, dim);
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (is_zero(coeffs[k])) continue;
    r = r + action[k].scaled(coeffs[k]);
  }
  return r;
}

ModulePtr make_module(AlgebraPtr a, std::vector<Matrix> action, bool validate) {
  Module m;
  m.algebra = std::move(a);
  m.dim = action.empty() ? 0 : action.front().rows();
  m.action = std::move(action);
  if (static_cast<int>(m.action.size()) != m.algebra->dim)
    throw InputError("module: need one action matrix per algebra basis element");
  for (const auto& mat : m.action)
    if (mat.rows() != m.dim || mat.cols() != m.dim)
      throw InputError("module: action matrices must be square of equal size");
  auto p = std::make_shared<const Module>(std::move(m));
  if (validate) validate_module(*p);
  return p;
}

ModulePtr zero_module(AlgebraPtr a) {
  std::vector<Matrix> act(a->dim, Matrix(0, 0));
  return make_module(std::move(a), std::move(act));
}

void validate_module(const Module& m) {
  const Algebra& a = *m.algebra;
  if (m.action_of(a.unit) != Matrix::identity(m.dim))
    throw InputError("module: unit does not act as identity");
  // rho is linear by construction; checking rho(g*b) = rho(g)rho(b) for
  // generators g and basis b suffices since the generators generate.
  std::vector<std::vector<Rational>> gens = a.idempotents;
  gens.insert(gens.end(), a.generators.begin(), a.generators.end());
  for (const auto& g : gens) {
    Matrix rg = m.action_of(g);
    for (int b = 0; b < a.dim; ++b) {
      std::vector<Rational> eb(a.dim);
      eb[b] = 1;
      Matrix lhs = m.action_of(a.mult_vec(g, eb));
      if (!(rg * m.action[b] == lhs))
        throw InputError("module: action does not respect structure constants");
    }
  }
}

ModuleMap identity_map(ModulePtr x) {
  return ModuleMap{x, x, Matrix::identity(x->dim)};
}

ModuleMap zero_map(ModulePtr source, ModulePtr target) {
  Matrix m(target->dim, source->dim);
  return ModuleMap{std::move(source), std::move(target), std::move(m)};
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  assert(g.source->dim == f.target->dim);
  return ModuleMap{f.source, g.target, g.m * f.m};
}

bool is_intertwiner(const ModuleMap& f) {
  if (f.m.rows() != f.target->dim || f.m.cols() != f.source->dim) return false;
  const Algebra& a = *f.source->algebra;
  for (int b = 0; b < a.dim; ++b)
    if (!(f.m * f.source->action[b] == f.target->action[b] * f.m)) return false;
  return true;
}

bool same_algebra(const Algebra& a, const Algebra& b) {
  if (&a == &b) return true;
  return a.dim == b.dim && a.unit == b.unit && a.mult == b.mult;
}

// --- Env --------------------------------------------------------------------

AlgebraPtr Env::opposite_of(const AlgebraPtr& a) {
  auto it = opp_.find(a.get());
  if (it != opp_.end()) return it->second;
  AlgebraPtr o = opposite(a);
  opp_[a.get()] = o;
  opp_[o.get()] = a;  // opposite is involutive; keep pointers stable
  return o;
}

AlgebraPtr Env::triangular_of(const AlgebraPtr& a, int n) {
  auto key = std::make_pair(a.get(), n);
  auto it = tri_.find(key);
  if (it != tri_.end()) return it->second;
  AlgebraPtr t = triangular_algebra(a, n);
  tri_[key] = t;
  return t;
}

int Env::Resolution::length() const {
  return static_cast<int>(covers.size()) - 1;
}

// --- hom spaces --------------------------------------------------------------

std::vector<ModuleMap> hom_basis(const ModulePtr& x, const ModulePtr& y) {
  if (!same_algebra(*x->algebra, *y->algebra))
    throw InputError("hom_basis: modules over different algebras");
  const Algebra& a = *x->algebra;
  const int dx = x->dim, dy = y->dim;
  if (dx == 0 || dy == 0) return {};

  // Split both modules along the complete orthogonal idempotent set; an
  // intertwiner is block diagonal in those coordinates, which shrinks the
  // linear system considerably.
  const int nb = static_cast<int>(a.idempotents.size());
  std::vector<Matrix> bx, by;
  std::vector<int> dxs, dys;
  for (int s = 0; s < nb; ++s) {
    Matrix px = column_space_basis(x->action_of(a.idempotents[s]));
    Matrix py = column_space_basis(y->action_of(a.idempotents[s]));
    bx.push_back(px);
    by.push_back(py);
    dxs.push_back(px.cols());
    dys.push_back(py.cols());
  }
  Matrix Px = Matrix::hstack(bx), Py = Matrix::hstack(by);
  if (Px.cols() != dx || Py.cols() != dy)
    throw InputError("hom_basis: idempotent images do not decompose the module");
  Matrix PxInv = *solve(Px, Matrix::identity(dx));
  Matrix PyInv = *solve(Py, Matrix::identity(dy));

  std::vector<int> xoff(nb + 1, 0), yoff(nb + 1, 0);
  for (int s = 0; s < nb; ++s) {
    xoff[s + 1] = xoff[s] + dxs[s];
    yoff[s + 1] = yoff[s] + dys[s];
  }
  std::vector<int> uoff(nb + 1, 0);
  for (int s = 0; s < nb; ++s) uoff[s + 1] = uoff[s] + dys[s] * dxs[s];
  const int nunk = uoff[nb];
  if (nunk == 0) return {};

  std::vector<Matrix> rows;
  for (const auto& g : a.generators) {
    Matrix Xg = PxInv * x->action_of(g) * Px;
    Matrix Yg = PyInv * y->action_of(g) * Py;
    for (int t = 0; t < nb; ++t)
      for (int s = 0; s < nb; ++s) {
        if (dys[t] == 0 || dxs[s] == 0) continue;
        // F_t * X[t][s] - Y[t][s] * F_s = 0   (dys[t] x dxs[s] equations)
        bool xz = true, yz = true;
        for (int i = 0; i < dxs[t] && xz; ++i)
          for (int j = 0; j < dxs[s]; ++j)
            if (!is_zero(Xg.at(xoff[t] + i, xoff[s] + j))) {
              xz = false;
              break;
            }
        for (int i = 0; i < dys[t] && yz; ++i)
          for (int j = 0; j < dys[s]; ++j)
            if (!is_zero(Yg.at(yoff[t] + i, yoff[s] + j))) {
              yz = false;
              break;
            }
        if (xz && yz) continue;
        Matrix eq(dys[t] * dxs[s], nunk);
        for (int i = 0; i < dys[t]; ++i)
          for (int j = 0; j < dxs[s]; ++j) {
            int row = i * dxs[s] + j;
            if (!xz && dxs[t] > 0)
              for (int m = 0; m < dxs[t]; ++m)
                eq.at(row, uoff[t] + i * dxs[t] + m) += Xg.at(xoff[t] + m, xoff[s] + j);
            if (!yz && dys[s] > 0)
              for (int m = 0; m < dys[s]; ++m)
                eq.at(row, uoff[s] + m * dxs[s] + j) -= Yg.at(yoff[t] + i, yoff[s] + m);
          }
        if (!eq.is_zero()) rows.push_back(eq);
      }
  }
  Matrix sys = rows.empty() ? Matrix(0, nunk) : Matrix::vstack(rows);
  Matrix K = kernel_basis(sys);

  std::vector<ModuleMap> basis;
  for (int c = 0; c < K.cols(); ++c) {
    Matrix Fb(dy, dx);
    for (int s = 0; s < nb; ++s)
      for (int i = 0; i < dys[s]; ++i)
        for (int j = 0; j < dxs[s]; ++j)
          Fb.at(yoff[s] + i, xoff[s] + j) = K.at(uoff[s] + i * dxs[s] + j, c);
    basis.push_back(ModuleMap{x, y, Py * Fb * PxInv});
  }
  return basis;
}

int hom_dim(const ModulePtr& x, const ModulePtr& y) {
  return static_cast<int>(hom_basis(x, y).size());
}

Matrix hom_coordinates(const std::vector<ModuleMap>& basis, const ModuleMap& f) {
  const int dy = f.target->dim, dx = f.source->dim;
  Matrix B(dy * dx, static_cast<int>(basis.size()));
  for (size_t c = 0; c < basis.size(); ++c)
    for (int i = 0; i < dy; ++i)
      for (int j = 0; j < dx; ++j) B.at(i * dx + j, static_cast<int>(c)) = basis[c].m.at(i, j);
  Matrix v(dy * dx, 1);
  for (int i = 0; i < dy; ++i)
    for (int j = 0; j < dx; ++j) v.at(i * dx + j, 0) = f.m.at(i, j);
  auto sol = solve(B, v);
  if (!sol) throw InputError("hom_coordinates: map not in the span of the basis");
  return *sol;
}

// --- kernels, cokernels, sums ------------------------------------------------

static ModulePtr module_on_subspace(const ModulePtr& x, const Matrix& basis) {
  const Algebra& a = *x->algebra;
  std::vector<Matrix> act;
  for (int b = 0; b < a.dim; ++b) {
    Matrix img = x->action[b] * basis;
    auto coords = solve(basis, img);
    if (!coords) throw InputError("subspace is not a submodule");
    act.push_back(*coords);
  }
  return make_module(x->algebra, std::move(act));
}

KerCoker kernel_cokernel(const ModuleMap& f) {
  const Matrix& fm = f.m;
  KerCoker r;
  Matrix K = kernel_basis(fm);
  r.ker = module_on_subspace(f.source, K);
  r.incl = ModuleMap{r.ker, f.source, K};

  Matrix Im = column_space_basis(fm);
  Matrix C = extend_basis(Im, Matrix::identity(f.target->dim));
  Matrix full = Matrix::hstack({Im, C});
  Matrix inv = full.cols() > 0 ? *solve(full, Matrix::identity(f.target->dim))
                               : Matrix(0, f.target->dim);
  Matrix pi = inv.rows_slice(Im.cols(), C.cols());
  const Algebra& a = *f.target->algebra;
  std::vector<Matrix> act;
  for (int b = 0; b < a.dim; ++b) act.push_back(pi * f.target->action[b] * C);
  r.coker = make_module(f.target->algebra, std::move(act));
  r.proj = ModuleMap{f.target, r.coker, pi};
  return r;
}

std::pair<ModulePtr, ModuleMap> submodule_spanned_by(const ModulePtr& x, const Matrix& gens) {
  // saturate under the action
  Matrix span = column_space_basis(gens);
  for (;;) {
    std::vector<Matrix> parts{span};
    for (int b = 0; b < x->algebra->dim; ++b) parts.push_back(x->action[b] * span);
    Matrix bigger = column_space_basis(Matrix::hstack(parts));
    if (bigger.cols() == span.cols()) break;
    span = std::move(bigger);
  }
  ModulePtr sub = module_on_subspace(x, span);
  return {sub, ModuleMap{sub, x, span}};
}

std::pair<ModulePtr, ModuleMap> quotient_by(const ModulePtr& x, const Matrix& gens) {
  auto [sub, incl] = submodule_spanned_by(x, gens);
  auto kc = kernel_cokernel(incl);
  return {kc.coker, kc.proj};
}

SumModule direct_sum(const std::vector<ModulePtr>& xs) {
  if (xs.empty()) throw InputError("direct_sum: empty list needs an algebra; use zero_module");
  AlgebraPtr a = xs.front()->algebra;
  int total = 0;
  for (const auto& x : xs) {
    if (!same_algebra(*a, *x->algebra)) throw InputError("direct_sum: algebra mismatch");
    total += x->dim;
  }
  std::vector<Matrix> act;
  for (int b = 0; b < a->dim; ++b) {
    std::vector<Matrix> blocks;
    for (const auto& x : xs) blocks.push_back(x->action[b]);
    act.push_back(Matrix::block_diag(blocks));
  }
  SumModule r;
  r.sum = make_module(a, std::move(act));
  int off = 0;
  for (const auto& x : xs) {
    Matrix in(total, x->dim), pr(x->dim, total);
    for (int i = 0; i < x->dim; ++i) {
      in.at(off + i, i) = 1;
      pr.at(i, off + i) = 1;
    }
    r.inj.push_back(ModuleMap{x, r.sum, in});
    r.proj.push_back(ModuleMap{r.sum, x, pr});
    off += x->dim;
  }
  return r;
}

// --- duality ------------------------------------------------------------------

ModulePtr dual_module(const ModulePtr& x, Env& env) {
  AlgebraPtr opp = env.opposite_of(x->algebra);
  std::vector<Matrix> act;
  for (int b = 0; b < x->algebra->dim; ++b) act.push_back(x->action[b].transpose());
  return make_module(opp, std::move(act));
}

ModuleMap dual_map(const ModuleMap& f, Env& env) {
  ModulePtr ds = dual_module(f.target, env);
  ModulePtr dt = dual_module(f.source, env);
  return ModuleMap{ds, dt, f.m.transpose()};
}

std::pair<ModulePtr, ModulePtr> regular_modules(const AlgebraPtr& a, Env& env) {
  std::vector<Matrix> act;
  for (int b = 0; b < a->dim; ++b) act.push_back(a->left_mult_basis(b));
  ModulePtr left = make_module(a, std::move(act));
  AlgebraPtr opp = env.opposite_of(a);
  std::vector<Matrix> ract;
  for (int b = 0; b < a->dim; ++b) ract.push_back(opp->left_mult_basis(b));
  ModulePtr right = make_module(opp, std::move(ract));
  return {left, right};
}

// --- per-algebra facts ---------------------------------------------------------

const AlgebraFacts& Env::facts_of(const AlgebraPtr& a) {
  auto it = facts_.find(a.get());
  if (it != facts_.end()) return *it->second;
  auto f = std::make_shared<AlgebraFacts>();
  f->radical = radical_basis(*a);
  auto [left, right] = regular_modules(a, *this);
  f->regular = left;
  // D(A_A): dual of the right regular module, a left A-module again.
  {
    std::vector<Matrix> act;
    for (int b = 0; b < a->dim; ++b) act.push_back(right->action[b].transpose());
    f->coregular = make_module(a, std::move(act));
  }
  facts_[a.get()] = f;  // radical available to callees below
  f->regular_summands = fitting_summands(left, *this);
  for (const auto& s : f->regular_summands) {
    bool seen = false;
    for (const auto& p : f->indec_projectives)
      if (is_isomorphic(s.mod, p, *this).iso) {
        seen = true;
        break;
      }
    if (!seen) f->indec_projectives.push_back(s.mod);
  }
  for (const auto& p : f->indec_projectives) {
    Matrix radp = radical_subspace(p, *this);
    auto [top, proj] = quotient_by(p, radp);
    bool seen = false;
    for (const auto& s : f->simples)
      if (is_isomorphic(top, s, *this).iso) {
        seen = true;
        break;
      }
    if (!seen) f->simples.push_back(top);
  }
  // Indecomposable injectives: duals of the opposite algebra's projectives.
  {
    AlgebraPtr opp = opposite_of(a);
    auto [oleft, oright] = regular_modules(opp, *this);
    auto osummands = fitting_summands(oleft, *this);
    for (const auto& s : osummands) {
      ModulePtr inj = dual_module(s.mod, *this);
      bool seen = false;
      for (const auto& q : f->indec_injectives)
        if (is_isomorphic(inj, q, *this).iso) {
          seen = true;
          break;
        }
      if (!seen) f->indec_injectives.push_back(inj);
    }
  }
  return *f;
}

// --- covers and envelopes -------------------------------------------------------

Matrix radical_subspace(const ModulePtr& x, Env& env) {
  const AlgebraFacts& f = env.facts_of(x->algebra);
  std::vector<Matrix> imgs;
  for (int j = 0; j < f.radical.cols(); ++j) {
    std::vector<Rational> r(x->algebra->dim);
    for (int i = 0; i < x->algebra->dim; ++i) r[i] = f.radical.at(i, j);
    imgs.push_back(x->action_of(r));
  }
  if (imgs.empty()) return Matrix(x->dim, 0);
  return column_space_basis(Matrix::hstack(imgs));
}

ModuleMap projective_cover(const ModulePtr& x, Env& env) {
  const AlgebraFacts& f = env.facts_of(x->algebra);
  Matrix radx = radical_subspace(x, env);
  Matrix lifts = extend_basis(radx, Matrix::identity(x->dim));
  const int t = lifts.cols();

  // free cover A^t -> x, v_i generating the top
  std::vector<Summand> slots;
  std::vector<Matrix> pieces;  // map component for each slot
  for (int i = 0; i < t; ++i) {
    for (const auto& s : f.regular_summands) {
      // component: P -> A -> x, a |-> rho(a) v_i restricted along incl
      Matrix comp(x->dim, s.mod->dim);
      Matrix full(x->dim, x->algebra->dim);
      for (int b = 0; b < x->algebra->dim; ++b) {
        Matrix col = x->action[b] * lifts.col(i);
        for (int r = 0; r < x->dim; ++r) full.at(r, b) = col.at(r, 0);
      }
      comp = full * s.incl.m;
      slots.push_back(s);
      pieces.push_back(comp);
    }
  }
  auto surjective_without = [&](const std::vector<bool>& removed) {
    std::vector<Matrix> cols;
    for (size_t i = 0; i < pieces.size(); ++i)
      if (!removed[i]) cols.push_back(pieces[i]);
    if (cols.empty()) return x->dim == 0;
    return rank(Matrix::hstack(cols)) == x->dim;
  };
  std::vector<bool> removed(slots.size(), false);
  if (!surjective_without(removed))
    throw InputError("projective_cover: internal failure (free cover not onto)");
  for (size_t i = 0; i < slots.size(); ++i) {
    removed[i] = true;
    if (!surjective_without(removed)) removed[i] = false;
  }
  std::vector<ModulePtr> kept;
  std::vector<Matrix> kept_pieces;
  for (size_t i = 0; i < slots.size(); ++i)
    if (!removed[i]) {
      kept.push_back(slots[i].mod);
      kept_pieces.push_back(pieces[i]);
    }
  ModulePtr source = kept.empty() ? zero_module(x->algebra) : direct_sum(kept).sum;
  Matrix big = kept_pieces.empty() ? Matrix(x->dim, 0) : Matrix::hstack(kept_pieces);
  ModuleMap cover{source, x, big};

  // minimality certificate: ker(cover) inside rad(source)
  Matrix K = kernel_basis(big);
  Matrix rads = radical_subspace(source, env);
  if (!subspace_contains(rads, K))
    throw InputError("projective_cover: minimality certificate failed");
  return cover;
}

ModuleMap injective_envelope(const ModulePtr& x, Env& env) {
  ModulePtr dx = dual_module(x, env);
  ModuleMap cover = projective_cover(dx, env);
  ModuleMap env_map = dual_map(cover, env);
  // dual of the dual is the module itself (transpose twice)
  return ModuleMap{x, env_map.target, env_map.m};
}

bool is_projective(const ModulePtr& x, Env& env) {
  ModuleMap c = projective_cover(x, env);
  return c.source->dim == x->dim;
}

bool is_injective(const ModulePtr& x, Env& env) {
  ModuleMap e = injective_envelope(x, env);
  return e.target->dim == x->dim;
}

// --- resolutions and Ext ----------------------------------------------------------

const Env::Resolution& Env::resolution_of(const ModulePtr& x, int depth) {
  auto it = resolutions_.find(x.get());
  if (it == resolutions_.end()) {
    Resolution r;
    ModuleMap c0 = projective_cover(x, *this);
    auto kc = kernel_cokernel(c0);
    r.covers.push_back(c0);
    r.kernels.push_back(kc.ker);
    r.finished = kc.ker->dim == 0;
    it = resolutions_.emplace(x.get(), std::make_pair(x, std::move(r))).first;
  }
  Resolution& r = it->second.second;
  while (!r.finished && static_cast<int>(r.covers.size()) <= depth) {
    ModulePtr k = r.kernels.back();
    ModuleMap incl = [&] {
      // inclusion of kernels.back() into previous P
      auto kc = kernel_cokernel(r.covers.back());
      return kc.incl;  // identical construction, deterministic
    }();
    ModuleMap c = projective_cover(k, *this);
    r.diffs.push_back(compose(incl, c));
    auto kc = kernel_cokernel(c);
    r.covers.push_back(c);
    r.kernels.push_back(kc.ker);
    r.finished = kc.ker->dim == 0;
  }
  return r;
}

int ext_dim(const ModulePtr& x, const ModulePtr& y, int j, Env& env) {
  if (j < 0) throw InputError("ext_dim: negative degree");
  if (j == 0) return hom_dim(x, y);
  if (j + 1 > env.caps.resolution)
    throw Inconclusive("ext_dim: degree beyond resolution cap");
  const auto& r = env.resolution_of(x, j + 1);
  auto proj_at = [&](int i) -> ModulePtr {
    if (i < static_cast<int>(r.covers.size())) return r.covers[i].source;
    return nullptr;  // resolution finished before i
  };
  ModulePtr Pj = proj_at(j);
  if (!Pj || Pj->dim == 0) return 0;
  std::vector<ModuleMap> Hj = hom_basis(Pj, y);
  if (Hj.empty()) return 0;

  auto delta_rank = [&](int i) -> int {
    // rank of Hom(P_i, y) -> Hom(P_{i+1}, y)
    ModulePtr Pi = proj_at(i), Pn = proj_at(i + 1);
    if (!Pi || Pi->dim == 0 || !Pn || Pn->dim == 0) return 0;
    if (static_cast<int>(r.diffs.size()) < i + 1) return 0;
    std::vector<ModuleMap> Hi = (i == j) ? Hj : hom_basis(Pi, y);
    std::vector<ModuleMap> Hn = hom_basis(Pn, y);
    if (Hi.empty() || Hn.empty()) return 0;
    Matrix M(static_cast<int>(Hn.size()), static_cast<int>(Hi.size()));
    for (size_t c = 0; c < Hi.size(); ++c) {
      ModuleMap comp = compose(Hi[c], r.diffs[i]);
      Matrix coords = hom_coordinates(Hn, comp);
      for (size_t rr = 0; rr < Hn.size(); ++rr)
        M.at(static_cast<int>(rr), static_cast<int>(c)) = coords.at(static_cast<int>(rr), 0);
    }
    return rank(M);
  };
  int dim = static_cast<int>(Hj.size()) - delta_rank(j) - delta_rank(j - 1);
  assert(dim >= 0);
  return dim;
}

DimResult proj_dim(const ModulePtr& x, int cap, Env& env) {
  if (x->dim == 0) return 0;
  for (int d = 0; d <= cap; ++d) {
    const auto& r = env.resolution_of(x, d);
    if (r.finished) return r.length();
  }
  return ExceedsCap{};
}

DimResult inj_dim(const ModulePtr& x, int cap, Env& env) {
  return proj_dim(dual_module(x, env), cap, env);
}

// --- Krull-Schmidt ------------------------------------------------------------------

namespace {

// Fitting split along phi: x = ker(phi^N) (+) im(phi^N). Returns basis
// matrices of the two parts, or nullopt when phi gives no split.
std::optional<std::pair<Matrix, Matrix>> fitting_split(const ModulePtr& x, const Matrix& phi) {
  const int d = x->dim;
  Matrix K = kernel_basis(phi);
  if (K.cols() == 0 || K.cols() == d) return std::nullopt;
  for (int iter = 0; iter < d + 1; ++iter) {
    Matrix ann = annihilator_rows(K);
    Matrix K2 = kernel_basis(ann * phi);
    if (K2.cols() == K.cols()) break;
    K = std::move(K2);
  }
  Matrix I = column_space_basis(phi);
  for (int iter = 0; iter < d + 1; ++iter) {
    Matrix I2 = column_space_basis(phi * I);
    if (I2.cols() == I.cols()) break;
    I = std::move(I2);
  }
  if (K.cols() == 0 || K.cols() == d) return std::nullopt;
  if (K.cols() + I.cols() != d) return std::nullopt;
  if (rank(Matrix::hstack({K, I})) != d) return std::nullopt;
  return std::make_pair(K, I);
}

void decompose_rec(const ModulePtr& x, const ModuleMap& incl, const ModuleMap& proj,
                   Env& env, std::vector<Summand>& out) {
  if (x->dim == 0) return;
  std::vector<ModuleMap> ends = hom_basis(x, x);
  std::vector<Matrix> schedule;
  for (const auto& e : ends) schedule.push_back(e.m);
  int np = 0;
  for (size_t i = 0; i < ends.size() && np < 64; ++i)
    for (size_t j = 0; j < ends.size() && np < 64; ++j) {
      if (i == j) continue;
      schedule.push_back(ends[i].m * ends[j].m);
      ++np;
    }
  for (int k = 0; k < 16; ++k) {
    auto coeffs = seeded_coeffs(env.seed, static_cast<int>(ends.size()), 1000 + k);
    Matrix m(x->dim, x->dim);
    for (size_t i = 0; i < ends.size(); ++i) m = m + ends[i].m.scaled(coeffs[i]);
    schedule.push_back(m);
  }
  for (const auto& phi : schedule) {
    auto split = fitting_split(x, phi);
    if (!split) continue;
    const auto& [K, I] = *split;
    Matrix full = Matrix::hstack({K, I});
    Matrix inv = *solve(full, Matrix::identity(x->dim));
    ModulePtr xk = module_on_subspace(x, K);
    ModulePtr xi = module_on_subspace(x, I);
    ModuleMap inclK{xk, x, K}, inclI{xi, x, I};
    ModuleMap projK{x, xk, inv.rows_slice(0, K.cols())};
    ModuleMap projI{x, xi, inv.rows_slice(K.cols(), I.cols())};
    decompose_rec(xk, compose(incl, inclK), compose(projK, proj), env, out);
    decompose_rec(xi, compose(incl, inclI), compose(projI, proj), env, out);
    return;
  }
  out.push_back(Summand{x, incl, proj});
}

}  // namespace

std::vector<Summand> fitting_summands(const ModulePtr& x, Env& env) {
  std::vector<Summand> out;
  decompose_rec(x, identity_map(x), identity_map(x), env, out);
  return out;
}

std::vector<DecompEntry> fitting_decompose(const ModulePtr& x, Env& env) {
  std::vector<Summand> parts = fitting_summands(x, env);
  std::vector<DecompEntry> out;
  for (const auto& p : parts) {
    bool seen = false;
    for (auto& e : out)
      if (is_isomorphic(p.mod, e.rep, env).iso) {
        ++e.multiplicity;
        seen = true;
        break;
      }
    if (!seen) out.push_back(DecompEntry{p.mod, 1});
  }
  return out;
}

IsoResult is_isomorphic(const ModulePtr& x, const ModulePtr& y, Env& env) {
  IsoResult r;
  if (!same_algebra(*x->algebra, *y->algebra)) return r;
  if (x->dim != y->dim) return r;
  if (x->dim == 0) {
    r.iso = true;
    r.cert = ModuleMap{x, y, Matrix(0, 0)};
    return r;
  }
  std::vector<ModuleMap> H = hom_basis(x, y);
  if (H.empty()) return r;
  auto try_matrix = [&](const Matrix& m) -> bool {
    if (rank(m) != x->dim) return false;
    r.iso = true;
    r.cert = ModuleMap{x, y, m};
    return true;
  };
  for (const auto& h : H)
    if (try_matrix(h.m)) return r;
  Matrix sum(y->dim, x->dim);
  for (const auto& h : H) {
    sum = sum + h.m;
    if (try_matrix(sum)) return r;
  }
  for (int k = 0; k < 16; ++k) {
    auto coeffs = seeded_coeffs(env.seed, static_cast<int>(H.size()), 2000 + k);
    Matrix m(y->dim, x->dim);
    for (size_t i = 0; i < H.size(); ++i) m = m + H[i].m.scaled(coeffs[i]);
    if (try_matrix(m)) return r;
  }
  r.certain = false;  // no certificate found
  return r;
}

// --- endomorphism algebra helper (used by approx and fintype) ------------------

AlgebraPtr endomorphism_algebra(const ModulePtr& x, Env& env,
                                std::vector<ModuleMap>* basis_out, bool validate) {
  std::vector<ModuleMap> ends = hom_basis(x, x);
  const int d = static_cast<int>(ends.size());
  if (x->dim == 0 || d == 0) throw InputError("endomorphism_algebra: zero module");
  Algebra e;
  e.name = "End";
  e.dim = d;
  e.mult.assign(d, std::vector<std::vector<Rational>>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      ModuleMap comp{x, x, ends[i].m * ends[j].m};
      Matrix coords = hom_coordinates(ends, comp);
      std::vector<Rational> v(d);
      for (int k = 0; k < d; ++k) v[k] = coords.at(k, 0);
      e.mult[i][j] = v;
    }
  {
    Matrix coords = hom_coordinates(ends, identity_map(x));
    e.unit.resize(d);
    for (int k = 0; k < d; ++k) e.unit[k] = coords.at(k, 0);
  }
  // idempotents from a Krull-Schmidt decomposition: summand projections
  auto parts = fitting_summands(x, env);
  if (parts.size() > 1) {
    for (const auto& p : parts) {
      ModuleMap idem{x, x, p.incl.m * p.proj.m};
      Matrix coords = hom_coordinates(ends, idem);
      std::vector<Rational> v(d);
      for (int k = 0; k < d; ++k) v[k] = coords.at(k, 0);
      e.idempotents.push_back(v);
    }
  }
  // greedy small generating set
  {
    auto closure_dim = [&](const std::vector<std::vector<Rational>>& gens) {
      std::vector<Matrix> seed;
      seed.push_back(vec_to_col(e.unit));
      for (const auto& q : e.idempotents) seed.push_back(vec_to_col(q));
      for (const auto& g : gens) seed.push_back(vec_to_col(g));
      Matrix span = column_space_basis(Matrix::hstack(seed));
      for (;;) {
        std::vector<Matrix> prods{span};
        for (int j = 0; j < span.cols(); ++j)
          for (const auto& g : gens) {
            std::vector<Rational> xv(d);
            for (int k = 0; k < d; ++k) xv[k] = span.at(k, j);
            prods.push_back(vec_to_col(e.mult_vec(g, xv)));
            prods.push_back(vec_to_col(e.mult_vec(xv, g)));
          }
        Matrix bigger = column_space_basis(Matrix::hstack(prods));
        if (bigger.cols() == span.cols()) return bigger.cols();
        span = std::move(bigger);
      }
    };
    std::vector<std::vector<Rational>> gens;
    if (closure_dim(gens) < d) {
      for (int i = 0; i < d && closure_dim(gens) < d; ++i) {
        std::vector<Rational> ei(d);
        ei[i] = 1;
        gens.push_back(ei);
        // keep it only if it helped
        auto without = gens;
        without.pop_back();
        if (closure_dim(gens) == closure_dim(without)) gens.pop_back();
      }
    }
    e.generators = gens;
  }
  if (basis_out) *basis_out = ends;
  return make_algebra(std::move(e), validate);
}

bool is_right_minimal_map(const ModuleMap& f, Env& env) {
  if (f.source->dim == 0) return true;
  std::vector<ModuleMap> ends;
  AlgebraPtr E = endomorphism_algebra(f.source, env, &ends, false);
  // K = {k in End(source) : f o k = 0}
  const Matrix& fm = f.m;
  const int dt = f.target->dim, ds = f.source->dim;
  Matrix M(dt * ds, static_cast<int>(ends.size()));
  for (size_t c = 0; c < ends.size(); ++c) {
    Matrix comp = fm * ends[c].m;
    for (int i = 0; i < dt; ++i)
      for (int j = 0; j < ds; ++j) M.at(i * ds + j, static_cast<int>(c)) = comp.at(i, j);
  }
  Matrix K = kernel_basis(M);
  if (K.cols() == 0) return true;
  Matrix rad = radical_basis(*E);
  return subspace_contains(rad, K);
}

std::vector<Rational> seeded_coeffs(uint64_t seed, int n, int salt) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<uint64_t>(salt));
  std::uniform_int_distribution<int> dist(-9, 9);
  std::vector<Rational> out(n);
  for (int i = 0; i < n; ++i) out[i] = dist(rng);
  return out;
}

}  // namespace mono
