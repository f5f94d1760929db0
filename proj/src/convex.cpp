#include "mapperforge/convex.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "mapperforge/errors.hpp"
#include "mapperforge/lp.hpp"

namespace mapperforge {

RatVec moment_curve(const Rat& t, int n) {
  if (n < 1) fail(Errc::BadInput, "moment curve needs dimension >= 1");
  RatVec out(static_cast<std::size_t>(n));
  Rat power = t;
  for (int i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = power;
    power *= t;
  }
  return out;
}

namespace {

// Row echelon rank, exact.
int matrix_rank(RatMat rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rat f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

} // namespace

int affine_rank(const std::vector<RatVec>& points) {
  if (points.size() <= 1) return 0;
  RatMat diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(vec_sub(points[i], points[0]));
  return matrix_rank(std::move(diffs));
}

bool affinely_independent(const std::vector<RatVec>& points) {
  return affine_rank(points) == static_cast<int>(points.size()) - 1;
}

std::optional<RatVec> solve_exact(const std::vector<RatVec>& cols, const RatVec& b) {
  const std::size_t n = cols.size();
  const std::size_t m = b.size();
  for (const RatVec& c : cols)
    if (c.size() != m) fail(Errc::DimensionMismatch, "solve_exact: column height mismatch");
  // Augmented matrix [cols | b], row reduction.
  RatMat a(m, RatVec(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = cols[j][i];
    a[i][n] = b[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[r], a[p]);
    Rat inv = 1 / a[r][c];
    for (std::size_t j = c; j <= n; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (a[i][n] != 0) return std::nullopt; // inconsistent
  RatVec x(n, Rat(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = a[i][n];
  return x;
}

std::optional<RatVec> barycentric_coordinates(const RatVec& q, const std::vector<RatVec>& points) {
  if (points.empty()) fail(Errc::BadInput, "barycentric_coordinates: no points");
  const std::size_t m = q.size();
  std::vector<RatVec> cols;
  cols.reserve(points.size());
  for (const RatVec& p : points) {
    if (p.size() != m) fail(Errc::DimensionMismatch, "barycentric: dimension mismatch");
    RatVec col = p;
    col.push_back(1);
    cols.push_back(std::move(col));
  }
  RatVec rhs = q;
  rhs.push_back(1);
  return solve_exact(cols, rhs);
}

int VPolytope::ambient_dim() const {
  if (generators.empty()) fail(Errc::BadInput, "polytope with no generators");
  return static_cast<int>(generators[0].size());
}

VPolytope VPolytope::box(const RatVec& lo, const RatVec& hi) {
  if (lo.size() != hi.size()) fail(Errc::DimensionMismatch, "box: corner dimension mismatch");
  const std::size_t n = lo.size();
  VPolytope p;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    RatVec corner(n);
    for (std::size_t i = 0; i < n; ++i) corner[i] = (mask & (std::size_t{1} << i)) ? hi[i] : lo[i];
    p.generators.push_back(std::move(corner));
  }
  return p;
}

bool vpolytope_contains(const VPolytope& p, const RatVec& q) {
  if (static_cast<int>(q.size()) != p.ambient_dim())
    fail(Errc::DimensionMismatch, "vpolytope_contains: dimension mismatch");
  RatMat cols;
  cols.reserve(p.generators.size());
  for (const RatVec& g : p.generators) {
    RatVec col = g;
    col.push_back(1);
    cols.push_back(std::move(col));
  }
  RatVec rhs = q;
  rhs.push_back(1);
  return std::holds_alternative<LpFeasible>(lp_equality_feasibility(cols, rhs));
}

bool verify_pair_witness(const VPolytope& a, const VPolytope& b, const PairWitness& w) {
  auto check = [&](const VPolytope& p, const RatVec& lambda) {
    if (lambda.size() != p.generators.size()) return false;
    Rat total = 0;
    RatVec combo(w.point.size(), Rat(0));
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      if (lambda[i] < 0) return false;
      total += lambda[i];
      for (std::size_t j = 0; j < combo.size(); ++j) combo[j] += lambda[i] * p.generators[i][j];
    }
    return total == 1 && combo == w.point;
  };
  return check(a, w.lambda_a) && check(b, w.lambda_b);
}

bool verify_separator(const VPolytope& a, const VPolytope& b, const Separator& s) {
  for (const RatVec& g : a.generators)
    if (dot(s.normal, g) >= s.offset) return false;
  for (const RatVec& g : b.generators)
    if (dot(s.normal, g) <= s.offset) return false;
  return true;
}

PairCertificate polytope_intersection(const VPolytope& a, const VPolytope& b) {
  const int n = a.ambient_dim();
  if (b.ambient_dim() != n)
    fail(Errc::DimensionMismatch, "polytope_intersection: ambient dimension mismatch");
  const std::size_t na = a.generators.size();
  const std::size_t nb = b.generators.size();
  const std::size_t rows = static_cast<std::size_t>(n) + 2;
  RatMat cols;
  cols.reserve(na + nb);
  for (const RatVec& g : a.generators) {
    RatVec col(rows, Rat(0));
    for (int i = 0; i < n; ++i) col[static_cast<std::size_t>(i)] = g[static_cast<std::size_t>(i)];
    col[static_cast<std::size_t>(n)] = 1;
    cols.push_back(std::move(col));
  }
  for (const RatVec& g : b.generators) {
    RatVec col(rows, Rat(0));
    for (int i = 0; i < n; ++i) col[static_cast<std::size_t>(i)] = -g[static_cast<std::size_t>(i)];
    col[static_cast<std::size_t>(n) + 1] = 1;
    cols.push_back(std::move(col));
  }
  RatVec rhs(rows, Rat(0));
  rhs[static_cast<std::size_t>(n)] = 1;
  rhs[static_cast<std::size_t>(n) + 1] = 1;

  LpResult res = lp_equality_feasibility(cols, rhs);
  if (auto* feas = std::get_if<LpFeasible>(&res)) {
    PairWitness w;
    w.lambda_a.assign(feas->x.begin(), feas->x.begin() + static_cast<long>(na));
    w.lambda_b.assign(feas->x.begin() + static_cast<long>(na), feas->x.end());
    w.point.assign(static_cast<std::size_t>(n), Rat(0));
    for (std::size_t i = 0; i < na; ++i)
      for (int j = 0; j < n; ++j)
        w.point[static_cast<std::size_t>(j)] +=
            w.lambda_a[i] * a.generators[i][static_cast<std::size_t>(j)];
    if (!verify_pair_witness(a, b, w))
      throw std::logic_error("polytope_intersection: witness failed verification");
    return w;
  }
  const RatVec& y = std::get<LpInfeasible>(res).y;
  Separator s;
  s.normal.assign(y.begin(), y.begin() + n);
  Rat max_a = dot(s.normal, a.generators[0]);
  for (const RatVec& g : a.generators) max_a = std::max(max_a, dot(s.normal, g));
  Rat min_b = dot(s.normal, b.generators[0]);
  for (const RatVec& g : b.generators) min_b = std::min(min_b, dot(s.normal, g));
  s.offset = (max_a + min_b) / 2;
  if (!verify_separator(a, b, s))
    throw std::logic_error("polytope_intersection: separator failed verification");
  return s;
}

namespace {

struct TupleLp {
  RatMat cols;
  RatVec rhs;
  std::vector<std::size_t> block_offsets;
};

TupleLp build_tuple_lp(const std::vector<const VPolytope*>& sets) {
  const std::size_t k = sets.size();
  const int n = sets[0]->ambient_dim();
  for (const VPolytope* p : sets)
    if (p->ambient_dim() != n)
      fail(Errc::DimensionMismatch, "tuple_intersection: ambient dimension mismatch");
  const std::size_t eq_rows = static_cast<std::size_t>(n) * (k - 1);
  const std::size_t rows = eq_rows + k;
  TupleLp lp;
  lp.rhs.assign(rows, Rat(0));
  for (std::size_t t = 0; t < k; ++t) lp.rhs[eq_rows + t] = 1;
  for (std::size_t t = 0; t < k; ++t) {
    lp.block_offsets.push_back(lp.cols.size());
    for (const RatVec& g : sets[t]->generators) {
      RatVec col(rows, Rat(0));
      if (t == 0) {
        // block 0 appears with + sign in every equality block
        for (std::size_t s = 0; s + 1 < k; ++s)
          for (int j = 0; j < n; ++j)
            col[s * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] =
                g[static_cast<std::size_t>(j)];
      } else {
        for (int j = 0; j < n; ++j)
          col[(t - 1) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] =
              -g[static_cast<std::size_t>(j)];
      }
      col[eq_rows + t] = 1;
      lp.cols.push_back(std::move(col));
    }
  }
  return lp;
}

} // namespace

bool verify_tuple_witness(const std::vector<const VPolytope*>& sets, const TupleWitness& w) {
  if (w.lambdas.size() != sets.size()) return false;
  for (std::size_t t = 0; t < sets.size(); ++t) {
    const VPolytope& p = *sets[t];
    const RatVec& lambda = w.lambdas[t];
    if (lambda.size() != p.generators.size()) return false;
    Rat total = 0;
    RatVec combo(w.point.size(), Rat(0));
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      if (lambda[i] < 0) return false;
      total += lambda[i];
      for (std::size_t j = 0; j < combo.size(); ++j) combo[j] += lambda[i] * p.generators[i][j];
    }
    if (total != 1 || combo != w.point) return false;
  }
  return true;
}

bool verify_tuple_refutation(const std::vector<const VPolytope*>& sets, const TupleRefutation& r) {
  TupleLp lp = build_tuple_lp(sets);
  return lp_verify_farkas(lp.cols, lp.rhs, r.farkas);
}

TupleCertificate tuple_intersection(const std::vector<const VPolytope*>& sets) {
  if (sets.size() < 2) fail(Errc::BadInput, "tuple_intersection needs at least two sets");
  TupleLp lp = build_tuple_lp(sets);
  LpResult res = lp_equality_feasibility(lp.cols, lp.rhs);
  if (auto* feas = std::get_if<LpFeasible>(&res)) {
    TupleWitness w;
    const int n = sets[0]->ambient_dim();
    for (std::size_t t = 0; t < sets.size(); ++t) {
      std::size_t off = lp.block_offsets[t];
      std::size_t cnt = sets[t]->generators.size();
      w.lambdas.emplace_back(feas->x.begin() + static_cast<long>(off),
                             feas->x.begin() + static_cast<long>(off + cnt));
    }
    w.point.assign(static_cast<std::size_t>(n), Rat(0));
    for (std::size_t i = 0; i < w.lambdas[0].size(); ++i)
      for (int j = 0; j < n; ++j)
        w.point[static_cast<std::size_t>(j)] +=
            w.lambdas[0][i] * sets[0]->generators[i][static_cast<std::size_t>(j)];
    if (!verify_tuple_witness(sets, w))
      throw std::logic_error("tuple_intersection: witness failed verification");
    return w;
  }
  TupleRefutation r{std::get<LpInfeasible>(res).y};
  if (!verify_tuple_refutation(sets, r))
    throw std::logic_error("tuple_intersection: refutation failed verification");
  return r;
}

namespace {

RatVec cross3(const RatVec& u, const RatVec& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

// Scale (normal, offset) to a primitive integer vector with positive leading
// normal entry, for deduplication.
std::vector<mpz_class> canonical_halfspace(const RatVec& normal, const Rat& offset) {
  std::vector<Rat> all = normal;
  all.push_back(offset);
  mpz_class lcm = 1;
  for (const Rat& q : all) {
    mpz_class den = q.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    lcm = lcm / g * den;
  }
  std::vector<mpz_class> ints;
  ints.reserve(all.size());
  mpz_class gcd = 0;
  for (const Rat& q : all) {
    Rat scaled = q * Rat(lcm);
    ints.push_back(scaled.get_num());
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), ints.back().get_mpz_t());
  }
  if (gcd != 0)
    for (mpz_class& z : ints) z /= gcd;
  return ints;
}

} // namespace

std::vector<Facet> facets_3d(const VPolytope& c) {
  if (c.ambient_dim() != 3) fail(Errc::UnsupportedDimension, "facets_3d: only R^3 supported");
  const auto& g = c.generators;
  std::set<std::vector<mpz_class>> seen;
  std::vector<Facet> out;
  auto consider = [&](RatVec normal, Rat offset) {
    auto key = canonical_halfspace(normal, offset);
    if (!seen.insert(key).second) return;
    out.push_back(Facet{std::move(normal), std::move(offset)});
  };
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      for (std::size_t k = j + 1; k < g.size(); ++k) {
        RatVec n = cross3(vec_sub(g[j], g[i]), vec_sub(g[k], g[i]));
        if (n[0] == 0 && n[1] == 0 && n[2] == 0) continue;
        Rat c0 = dot(n, g[i]);
        bool all_le = true, all_ge = true;
        for (const RatVec& p : g) {
          Rat side = dot(n, p);
          if (side > c0) all_le = false;
          if (side < c0) all_ge = false;
          if (!all_le && !all_ge) break;
        }
        if (all_le) consider(n, c0);
        if (all_ge) consider(vec_scale(Rat(-1), n), -c0);
      }
  return out;
}

BoundaryDistance distance_to_boundary(const RatVec& p, const VPolytope& c) {
  if (c.ambient_dim() != 3 || p.size() != 3)
    fail(Errc::UnsupportedDimension, "distance_to_boundary: only R^3 supported");
  if (!vpolytope_contains(c, p)) fail(Errc::PointOutside, "distance_to_boundary: point outside");
  if (affine_rank(c.generators) < 3) return BoundaryDistance{Rat(0), 0.0};
  std::optional<Rat> best;
  for (const Facet& f : facets_3d(c)) {
    Rat slack = f.offset - dot(f.normal, p); // >= 0 since p inside
    Rat d2 = slack * slack / norm2(f.normal);
    if (!best || d2 < *best) best = d2;
  }
  Rat d2 = best.value_or(Rat(0));
  return BoundaryDistance{d2, std::sqrt(to_double(d2))};
}

} // namespace mapperforge
