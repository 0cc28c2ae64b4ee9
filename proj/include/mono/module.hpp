#pragma once

#include <map>
#include <memory>
#include <optional>
#include <variant>

#include "mono/algebra.hpp"

namespace mono {

// Finite-dimensional left module: one action matrix per algebra basis
// element. Immutable, shared by pointer.
struct Module {
  AlgebraPtr algebra;
  int dim = 0;
  std::vector<Matrix> action;

  Matrix action_of(const std::vector<Rational>& coeffs) const;
};
using ModulePtr = std::shared_ptr<const Module>;

ModulePtr make_module(AlgebraPtr a, std::vector<Matrix> action, bool validate = false);
ModulePtr zero_module(AlgebraPtr a);

// Checks the homomorphism axioms (on algebra generators) and unit action.
void validate_module(const Module& m);

struct ModuleMap {
  ModulePtr source, target;
  Matrix m;  // target.dim x source.dim
};

ModuleMap identity_map(ModulePtr x);
ModuleMap zero_map(ModulePtr source, ModulePtr target);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f
bool is_intertwiner(const ModuleMap& f);

bool same_algebra(const Algebra& a, const Algebra& b);

struct Caps {
  int resolution = 32;
  int depth = 16;
  int dim = 6;
};

struct Summand {
  ModulePtr mod;
  ModuleMap incl, proj;  // proj o incl = id
};

struct AlgebraFacts;

// Run environment: caps, the seed all randomness flows from, and memo
// tables (opposites, triangular algebras, per-algebra invariants, minimal
// resolutions). Checkers are pure given (inputs, caps, seed).
class Env {
 public:
  Caps caps;
  uint64_t seed = 0;

  Env() = default;
  explicit Env(Caps c, uint64_t s = 0) : caps(c), seed(s) {}

  AlgebraPtr opposite_of(const AlgebraPtr& a);
  AlgebraPtr triangular_of(const AlgebraPtr& a, int n);
  const AlgebraFacts& facts_of(const AlgebraPtr& a);

  struct Resolution {
    // P_0 -> x and P_{i} -> K_i covers; kernels K_i; d_i : P_i -> P_{i-1}
    std::vector<ModuleMap> covers;   // covers[i]: P_i -> (x or K_i)
    std::vector<ModuleMap> diffs;    // diffs[i]: P_i -> P_{i-1}, i >= 1
    std::vector<ModulePtr> kernels;  // K_{i+1} = ker(covers[i])
    bool finished = false;           // last kernel is zero
    int length() const;              // largest i with P_i != 0, or -1 if unfinished
  };
  // Minimal projective resolution of x, extended to depth (P_depth known
  // or finished earlier). Cached per module instance.
  const Resolution& resolution_of(const ModulePtr& x, int depth);

 private:
  std::map<const Algebra*, AlgebraPtr> opp_;
  std::map<std::pair<const Algebra*, int>, AlgebraPtr> tri_;
  std::map<const Algebra*, std::shared_ptr<AlgebraFacts>> facts_;
  std::map<const Module*, std::pair<ModulePtr, Resolution>> resolutions_;
};

struct AlgebraFacts {
  Matrix radical;  // columns: coordinate vectors of a radical basis
  ModulePtr regular;
  ModulePtr coregular;  // D(A_A) as a left module
  std::vector<Summand> regular_summands;
  std::vector<ModulePtr> indec_projectives;  // pairwise non-isomorphic
  std::vector<ModulePtr> simples;            // tops of the above, deduped
  std::vector<ModulePtr> indec_injectives;   // duals of opposite's projectives
};

// --- hom and exactness -----------------------------------------------------

// Basis of the intertwiner space Hom_A(x, y), deterministic order.
std::vector<ModuleMap> hom_basis(const ModulePtr& x, const ModulePtr& y);
int hom_dim(const ModulePtr& x, const ModulePtr& y);

// Coordinates of f in the basis hom_basis(f.source, f.target).
Matrix hom_coordinates(const std::vector<ModuleMap>& basis, const ModuleMap& f);

struct KerCoker {
  ModulePtr ker;
  ModuleMap incl;
  ModulePtr coker;
  ModuleMap proj;
};
KerCoker kernel_cokernel(const ModuleMap& f);

// Submodule spanned by the columns of `gens` (closed under the action
// automatically; the span is saturated first).
std::pair<ModulePtr, ModuleMap> submodule_spanned_by(const ModulePtr& x, const Matrix& gens);
// Quotient of x by the submodule spanned by the columns of `gens`.
std::pair<ModulePtr, ModuleMap> quotient_by(const ModulePtr& x, const Matrix& gens);

struct SumModule {
  ModulePtr sum;
  std::vector<ModuleMap> inj, proj;
};
SumModule direct_sum(const std::vector<ModulePtr>& xs);

// --- duality ----------------------------------------------------------------

ModulePtr dual_module(const ModulePtr& x, Env& env);
// Contravariant: dual_map(f): D(target) -> D(source), matrix = transpose.
ModuleMap dual_map(const ModuleMap& f, Env& env);

std::pair<ModulePtr, ModulePtr> regular_modules(const AlgebraPtr& a, Env& env);

// --- covers, envelopes, resolutions ----------------------------------------

// rad(x) as a subspace (basis matrix of columns).
Matrix radical_subspace(const ModulePtr& x, Env& env);

// Surjection from a projective with kernel inside rad(source); the
// minimality certificate is re-verified after construction.
ModuleMap projective_cover(const ModulePtr& x, Env& env);
ModuleMap injective_envelope(const ModulePtr& x, Env& env);

bool is_projective(const ModulePtr& x, Env& env);
bool is_injective(const ModulePtr& x, Env& env);

int ext_dim(const ModulePtr& x, const ModulePtr& y, int j, Env& env);

struct ExceedsCap {};
using DimResult = std::variant<int, ExceedsCap>;
DimResult proj_dim(const ModulePtr& x, int cap, Env& env);
DimResult inj_dim(const ModulePtr& x, int cap, Env& env);

// --- Krull-Schmidt ----------------------------------------------------------

// Full summand list (with repetitions), each with inclusion/projection.
std::vector<Summand> fitting_summands(const ModulePtr& x, Env& env);

struct DecompEntry {
  ModulePtr rep;
  int multiplicity;
};
std::vector<DecompEntry> fitting_decompose(const ModulePtr& x, Env& env);

struct IsoResult {
  bool iso = false;
  bool certain = true;  // false: "no certificate found", treated as non-iso
  std::optional<ModuleMap> cert;
};
IsoResult is_isomorphic(const ModulePtr& x, const ModulePtr& y, Env& env);

// Module-level right-minimality: K = {k in End(source) : f o k = 0} must
// lie in rad End(source).
bool is_right_minimal_map(const ModuleMap& f, Env& env);

// End(x) as an algebra under map composition, b_i * b_j = b_i o b_j.
// Summand projections of a Krull-Schmidt decomposition become the
// idempotent set. basis_out receives the realizing maps.
AlgebraPtr endomorphism_algebra(const ModulePtr& x, Env& env,
                                std::vector<ModuleMap>* basis_out = nullptr,
                                bool validate = false);

// Deterministic small random rationals (integers in [-9,9] by default).
std::vector<Rational> seeded_coeffs(uint64_t seed, int n, int salt);

}  // namespace mono
