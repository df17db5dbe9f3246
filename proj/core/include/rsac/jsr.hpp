#pragma once

// Joint spectral radius of a pair of 3x3 integer matrices: irreducibility,
// branch-and-bound bracketing over products, and the invariant polytope
// algorithm. Defaults to the pair {MA, MB}.

#include <optional>
#include <string>
#include <vector>

#include "rsac/hull.hpp"
#include "rsac/matrix.hpp"

namespace rsac {

struct NamedMatrix {
  std::string name;
  IntMat3 value;
};

using MatrixFamily = std::vector<NamedMatrix>;

/// {MA, MB}, in that order.
MatrixFamily ma_mb_family();

struct ProductWord {
  std::vector<std::size_t> letters;  // indices into the family
  IntMat3 product = IntMat3::identity();

  std::size_t length() const noexcept { return letters.size(); }
  std::vector<std::string> names(const MatrixFamily& family) const;
};

/// Left-to-right product of the given letters. Throws std::out_of_range on a
/// bad index.
ProductWord make_word(const MatrixFamily& family, std::vector<std::size_t> letters);

/// Max modulus of the eigenvalues.
double spectral_radius(const RealMat3& m);
double spectral_radius(const IntMat3& m);

struct IrreducibilityResult {
  bool irreducible = true;
  // A common eigenvector of the matrices (or of their transposes, which
  // means a common invariant plane with this normal).
  std::optional<RealVec3> witness;
  bool witness_from_transposes = false;
};

IrreducibilityResult irreducibility_check(const MatrixFamily& family, double tol = 1e-9);
IrreducibilityResult irreducibility_check();

inline constexpr int kMaxBnbDepth = 20;

struct JsrBracket {
  double lower = 0;
  double upper = 0;
  int depth = 0;
  ProductWord witness;
  // Per-length results, index L - 1.
  std::vector<double> level_norm_max;
  std::vector<double> level_rho_max;
  std::size_t pruned = 0;
};

/// norm_scale s applies the similarity D X D^{-1} with D = diag(1, 1, s)
/// before taking spectral norms; s = 1 is the plain 2-norm.
/// Throws DepthCapExceeded for depth > kMaxBnbDepth, std::invalid_argument
/// for depth < 1 or norm_scale <= 0.
JsrBracket bnb_bracket(const MatrixFamily& family, int depth, double norm_scale = 1.0);
JsrBracket bnb_bracket(int depth, double norm_scale = 1.0);

struct InvariantPolytopeResult {
  bool success = false;
  Polytope3 polytope;
  int rounds = 0;
  double scale = 0;          // rho(candidate)^{1/len}
  double max_violation = 0;  // over vertices v, letters X: violation of X v / scale
  // On failure: one point that still escaped in the last round.
  std::optional<RealVec3> escaping;
  std::size_t escaped_last_round = 0;
};

/// Seeds with +/- the real part of the candidate's leading eigenvector and
/// repeatedly maps the newest vertices by X / scale for every X in the
/// family, adding images that escape the current hull (with their
/// negatives) until nothing escapes or max_rounds is reached.
InvariantPolytopeResult invariant_polytope(const MatrixFamily& family, const ProductWord& candidate,
                                           int max_rounds = 10, double tol = 1e-8);
InvariantPolytopeResult invariant_polytope(int max_rounds = 10, double tol = 1e-8);

}  // namespace rsac
