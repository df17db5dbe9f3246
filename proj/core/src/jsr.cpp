#include "rsac/jsr.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "rsac/cubic.hpp"
#include "rsac/error.hpp"
#include "rsac/specbounds.hpp"

namespace rsac {

MatrixFamily ma_mb_family() { return {{"MA", kMA}, {"MB", kMB}}; }

std::vector<std::string> ProductWord::names(const MatrixFamily& family) const {
  std::vector<std::string> out;
  out.reserve(letters.size());
  for (auto i : letters) out.push_back(family.at(i).name);
  return out;
}

ProductWord make_word(const MatrixFamily& family, std::vector<std::size_t> letters) {
  ProductWord w;
  for (auto i : letters) w.product = w.product * family.at(i).value;
  w.letters = std::move(letters);
  return w;
}

double spectral_radius(const RealMat3& m) {
  double best = 0;
  for (const auto& z : eigenvalues(m)) best = std::max(best, std::abs(z));
  return best;
}

double spectral_radius(const IntMat3& m) { return spectral_radius(m.cast<double>()); }

namespace {

std::vector<double> real_eigenvalues(const RealMat3& m) {
  std::vector<double> out;
  for (const auto& z : eigenvalues(m))
    if (std::abs(z.imag()) <= 1e-9 * (1.0 + std::abs(z.real()))) out.push_back(z.real());
  return out;
}

// Searches for v with X_i v = mu_i v for all i by checking the smallest
// eigenvalue of sum_i (X_i - mu_i I)^T (X_i - mu_i I) over every choice of
// real eigenvalues mu_i.
std::optional<RealVec3> common_eigenvector(const std::vector<RealMat3>& mats, double tol) {
  if (mats.empty()) return std::nullopt;
  std::vector<std::vector<double>> spectra;
  for (const auto& m : mats) spectra.push_back(real_eigenvalues(m));
  std::vector<std::size_t> choice(mats.size(), 0);
  for (const auto& s : spectra)
    if (s.empty()) return std::nullopt;
  while (true) {
    RealMat3 gram{};
    double scale = 1.0;
    for (std::size_t i = 0; i < mats.size(); ++i) {
      const RealMat3 shifted = mats[i] - RealMat3::identity() * spectra[i][choice[i]];
      gram = gram + shifted.transposed() * shifted;
      for (const auto& row : mats[i].a)
        for (double e : row) scale = std::max(scale, std::abs(e));
    }
    const auto ev = symmetric_eigenvalues(gram);
    if (ev[2] <= tol * scale * scale) return null_vector(gram - RealMat3::identity() * ev[2]);
    std::size_t pos = 0;
    while (pos < choice.size() && ++choice[pos] == spectra[pos].size()) choice[pos++] = 0;
    if (pos == choice.size()) return std::nullopt;
  }
}

RealMat3 similarity(const IntMat3& x, double s) {
  RealMat3 out = x.cast<double>();
  for (int i = 0; i < 2; ++i) out(i, 2) /= s;
  for (int j = 0; j < 2; ++j) out(2, j) *= s;
  return out;
}

}  // namespace

IrreducibilityResult irreducibility_check(const MatrixFamily& family, double tol) {
  std::vector<RealMat3> mats, transposes;
  for (const auto& nm : family) {
    mats.push_back(nm.value.cast<double>());
    transposes.push_back(mats.back().transposed());
  }
  IrreducibilityResult out;
  if (auto v = common_eigenvector(mats, tol)) {
    out.irreducible = false;
    out.witness = v;
  } else if (auto w = common_eigenvector(transposes, tol)) {
    out.irreducible = false;
    out.witness = w;
    out.witness_from_transposes = true;
  }
  return out;
}

IrreducibilityResult irreducibility_check() { return irreducibility_check(ma_mb_family()); }

JsrBracket bnb_bracket(const MatrixFamily& family, int depth, double norm_scale) {
  if (depth < 1) throw std::invalid_argument("bnb_bracket: depth must be >= 1");
  if (depth > kMaxBnbDepth)
    throw DepthCapExceeded("bnb_bracket: depth " + std::to_string(depth) + " exceeds cap " +
                           std::to_string(kMaxBnbDepth));
  if (!(norm_scale > 0) || !std::isfinite(norm_scale))
    throw std::invalid_argument("bnb_bracket: norm_scale must be positive");
  if (family.empty()) throw std::invalid_argument("bnb_bracket: empty family");

  JsrBracket out;
  out.depth = depth;
  out.level_norm_max.assign(static_cast<std::size_t>(depth), 0.0);
  out.level_rho_max.assign(static_cast<std::size_t>(depth), 0.0);

  double letter_norm = 0;
  for (const auto& nm : family) letter_norm = std::max(letter_norm, spectral_norm(similarity(nm.value, norm_scale)));

  // Lower bound: every word up to depth, MA before MB.
  ProductWord current;
  std::function<void()> visit_all = [&]() {
    const std::size_t len = current.length();
    if (len > 0) {
      const double rho = std::pow(spectral_radius(current.product), 1.0 / static_cast<double>(len));
      out.level_rho_max[len - 1] = std::max(out.level_rho_max[len - 1], rho);
      if (rho > out.lower * (1.0 + 1e-12)) {
        out.lower = rho;
        out.witness = current;
      }
    }
    if (len == static_cast<std::size_t>(depth)) return;
    for (std::size_t i = 0; i < family.size(); ++i) {
      const ProductWord saved = current;
      current.letters.push_back(i);
      current.product = current.product * family[i].value;
      visit_all();
      current = saved;
    }
  };
  visit_all();

  // Upper bound: for each length L the exact max norm, pruning prefixes w
  // with ||w|| * letter_norm^{L - |w|} below the running level max.
  out.upper = INFINITY;
  for (int level = 1; level <= depth; ++level) {
    double level_max = 0;
    std::function<void(const IntMat3&, int)> search = [&](const IntMat3& prefix, int len) {
      const double nrm = len == 0 ? 1.0 : spectral_norm(similarity(prefix, norm_scale));
      if (len == level) {
        level_max = std::max(level_max, nrm);
        return;
      }
      if (len > 0 && nrm * std::pow(letter_norm, level - len) < level_max) {
        ++out.pruned;
        return;
      }
      for (const auto& nm : family) search(prefix * nm.value, len + 1);
    };
    search(IntMat3::identity(), 0);
    out.level_norm_max[static_cast<std::size_t>(level - 1)] = level_max;
    out.upper = std::min(out.upper, std::pow(level_max, 1.0 / level));
  }
  return out;
}

JsrBracket bnb_bracket(int depth, double norm_scale) { return bnb_bracket(ma_mb_family(), depth, norm_scale); }

namespace {

bool near_any(const RealVec3& p, const std::vector<RealVec3>& set, double eps) {
  return std::any_of(set.begin(), set.end(), [&](const RealVec3& q) { return norm(p - q) <= eps; });
}

}  // namespace

InvariantPolytopeResult invariant_polytope(const MatrixFamily& family, const ProductWord& candidate,
                                           int max_rounds, double tol) {
  if (candidate.length() == 0) throw std::invalid_argument("invariant_polytope: empty candidate");
  if (max_rounds < 1) throw std::invalid_argument("invariant_polytope: max_rounds must be >= 1");
  const RealMat3 cand = candidate.product.cast<double>();
  std::complex<double> mu{};
  for (const auto& z : eigenvalues(cand))
    if (std::abs(z) > std::abs(mu)) mu = z;
  if (std::abs(mu) <= 0) throw DegenerateInput("invariant_polytope: candidate has spectral radius 0");

  InvariantPolytopeResult out;
  out.scale = std::pow(std::abs(mu), 1.0 / static_cast<double>(candidate.length()));
  const auto ev = eigenvector(cand, mu);
  RealVec3 seed{{ev[0].real(), ev[1].real(), ev[2].real()}};
  if (norm(seed) < 1e-12) seed = RealVec3{{ev[0].imag(), ev[1].imag(), ev[2].imag()}};
  seed = seed / norm(seed);

  std::vector<RealMat3> maps;
  for (const auto& nm : family) maps.push_back(nm.value.cast<double>() * (1.0 / out.scale));

  const double dup_eps = 1e-9;
  std::vector<RealVec3> vertices{seed, -seed};
  std::vector<RealVec3> frontier = vertices;
  std::optional<Polytope3> hull;
  double escape_violation = -INFINITY;

  for (int round = 1; round <= max_rounds; ++round) {
    out.rounds = round;
    std::vector<RealVec3> added;
    escape_violation = -INFINITY;
    for (const auto& p : frontier)
      for (const auto& x : maps) {
        const RealVec3 img = x * p;
        const bool escapes = hull ? !hull->contains(img, tol) : !near_any(img, vertices, dup_eps);
        if (!escapes) continue;
        escape_violation = std::max(escape_violation, hull ? hull->violation(img) : INFINITY);
        for (const RealVec3& q : {img, RealVec3(-img)})
          if (!near_any(q, vertices, dup_eps) && !near_any(q, added, dup_eps)) added.push_back(q);
      }
    out.escaped_last_round = added.size();
    if (added.empty()) {
      out.success = true;
      break;
    }
    out.escaping = added.front();
    vertices.insert(vertices.end(), added.begin(), added.end());
    try {
      hull = convex_hull_3d(vertices);
      vertices = hull->vertices;
    } catch (const DegenerateInput&) {
      hull.reset();
    }
    frontier = std::move(added);
  }

  if (hull) {
    out.polytope = *hull;
  } else {
    out.polytope.vertices = vertices;
  }
  if (out.success) {
    out.escaping.reset();
    double worst = -INFINITY;
    for (const auto& v : out.polytope.vertices)
      for (const auto& x : maps) worst = std::max(worst, out.polytope.violation(x * v));
    out.max_violation = out.polytope.facets.empty() ? 0.0 : worst;
  } else {
    out.max_violation = escape_violation;
  }
  return out;
}

InvariantPolytopeResult invariant_polytope(int max_rounds, double tol) {
  const auto family = ma_mb_family();
  return invariant_polytope(family, make_word(family, {0}), max_rounds, tol);
}

}  // namespace rsac
