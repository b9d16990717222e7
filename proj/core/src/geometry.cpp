#include "girthlab/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace girthlab {
namespace {

uint64_t checked_pow(uint64_t q, int e, uint64_t limit, const char* what) {
  uint64_t v = 1;
  for (int i = 0; i < e; ++i) {
    v *= q;
    if (v > limit)
      throw std::invalid_argument(std::string(what) + ": size guard exceeded");
  }
  return v;
}

std::vector<int64_t> coord_labels(uint64_t N, uint32_t q, int k) {
  std::vector<int64_t> L(N * k);
  std::vector<Scalar> c(k, 0);
  for (uint64_t i = 0; i < N; ++i) {
    for (int j = 0; j < k; ++j) L[i * k + j] = c[j];
    for (int j = k - 1; j >= 0; --j) {
      if (++c[j] == q) c[j] = 0;
      else break;
    }
  }
  return L;
}

// Row rank by Gaussian elimination on a copy.
int rank_of(std::vector<std::vector<Scalar>> rows, const Field& F) {
  int r = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t c = 0; c < cols && r < int(rows.size()); ++c) {
    int piv = -1;
    for (int i = r; i < int(rows.size()); ++i)
      if (rows[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    Scalar inv = F.inv(rows[r][c]);
    for (size_t j = c; j < cols; ++j) rows[r][j] = F.mul(rows[r][j], inv);
    for (int i = 0; i < int(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Scalar f = rows[i][c];
      for (size_t j = c; j < cols; ++j)
        rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
    }
    ++r;
  }
  return r;
}

void check_hyperplane_point(const std::vector<Scalar>& pt, int t) {
  if (int(pt.size()) != t + 1)
    throw std::invalid_argument("projective point arity mismatch");
  if (pt[0] != 0)
    throw std::invalid_argument("arc point outside the hyperplane x1 = 0");
}

} // namespace

std::vector<Scalar> proj_normalize(std::span<const Scalar> v, const Field& F) {
  size_t lead = 0;
  while (lead < v.size() && v[lead] == 0) ++lead;
  if (lead == v.size())
    throw std::invalid_argument("zero vector has no projective class");
  Scalar inv = F.inv(v[lead]);
  std::vector<Scalar> out(v.begin(), v.end());
  for (Scalar& c : out) c = F.mul(c, inv);
  return out;
}

std::vector<std::vector<Scalar>> nrc_arc(int t, const Field& F,
                                         bool include_infinity) {
  if (t < 2) throw std::invalid_argument("t must be >= 2");
  std::vector<std::vector<Scalar>> arc;
  arc.reserve(F.q() + (include_infinity ? 1 : 0));
  for (Scalar x : F.elements()) {
    std::vector<Scalar> pt(t + 1, 0);
    for (int m = 1; m <= t; ++m) pt[m] = F.pow(x, uint64_t(m - 1));
    arc.push_back(std::move(pt));
  }
  if (include_infinity) {
    std::vector<Scalar> pt(t + 1, 0);
    pt[t] = 1;
    arc.push_back(std::move(pt));
  }
  return arc;
}

std::vector<std::vector<Scalar>> frobenius_arc(const Field& F, int s) {
  if (F.characteristic() != 2)
    throw std::invalid_argument("frobenius arc needs characteristic 2");
  if (s < 1 || std::gcd(s, F.n()) != 1)
    throw std::invalid_argument("frobenius exponent must be coprime to the degree");
  std::vector<std::vector<Scalar>> arc;
  arc.reserve(F.q());
  for (Scalar x : F.elements())
    arc.push_back({0, 1, x, F.frob_pow(x, s)});
  return arc;
}

bool is_arc(const std::vector<std::vector<Scalar>>& points, int t,
            const Field& F, int subset_size) {
  if (t < 2) throw std::invalid_argument("t must be >= 2");
  int tau = subset_size == 0 ? t : subset_size;
  if (tau < 1 || tau > t)
    throw std::invalid_argument("subset size out of range");
  for (const auto& pt : points) check_hyperplane_point(pt, t);
  int n = int(points.size());
  if (n < tau) return true;
  std::vector<int> idx(tau);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<std::vector<Scalar>> rows(tau);
    for (int i = 0; i < tau; ++i)
      rows[i].assign(points[idx[i]].begin() + 1, points[idx[i]].end());
    if (rank_of(std::move(rows), F) != tau) return false;
    int i = tau - 1;
    while (i >= 0 && idx[i] == n - tau + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < tau; ++j) idx[j] = idx[j - 1] + 1;
  }
  return true;
}

Graph build_arc_graph(int t, const Field& F,
                      const std::vector<std::vector<Scalar>>& arc) {
  if (t < 2) throw std::invalid_argument("t must be >= 2");
  if (arc.empty()) throw std::invalid_argument("empty arc");
  const uint32_t q = F.q();
  uint64_t npts = checked_pow(q, t, 20'000'000, "arc graph");

  std::vector<std::vector<Scalar>> pts;
  pts.reserve(arc.size());
  for (const auto& s : arc) {
    check_hyperplane_point(s, t);
    pts.push_back(proj_normalize(s, F));
  }
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
    throw std::invalid_argument("duplicate arc point");

  uint64_t nreps = npts / q;
  uint64_t nlines = pts.size() * nreps;
  if (nlines * q > 200'000'000ULL)
    throw std::invalid_argument("arc graph: size guard exceeded");

  std::vector<std::pair<uint32_t, uint32_t>> edges;
  edges.reserve(nlines * q);
  std::vector<std::vector<int64_t>> labels(2);
  labels[0].reserve(npts * (t + 1));
  labels[1].reserve(nlines * 2 * (t + 1));
  for (uint64_t ip = 0; ip < npts; ++ip) {
    labels[0].push_back(1);
    for (Scalar c : decode_tuple(ip, q, t)) labels[0].push_back(c);
  }

  std::vector<Scalar> rep(t), a(t);
  for (size_t si = 0; si < pts.size(); ++si) {
    const auto& s = pts[si];
    int pv = 1;
    while (s[pv] == 0) ++pv; // pivot: first nonzero homogeneous coordinate
    for (uint64_t ir = 0; ir < nreps; ++ir) {
      uint64_t x = ir;
      for (int m = t; m >= 1; --m) {
        if (m == pv) {
          rep[m - 1] = 0;
          continue;
        }
        rep[m - 1] = Scalar(x % q);
        x /= q;
      }
      uint32_t line_id = uint32_t(npts + si * nreps + ir);
      for (Scalar lam = 0; lam < q; ++lam) {
        for (int m = 1; m <= t; ++m)
          a[m - 1] = F.add(rep[m - 1], F.mul(lam, s[m]));
        edges.push_back({uint32_t(encode_tuple(a, q)), line_id});
      }
      for (Scalar c : s) labels[1].push_back(c);
      labels[1].push_back(1);
      for (Scalar c : rep) labels[1].push_back(c);
    }
  }

  GraphMeta meta;
  meta.family = "arc";
  meta.k = t;
  meta.field = tag_of(F);
  meta.set_extra("arc_size", std::to_string(pts.size()));
  Graph G = Graph::build(2, {uint32_t(npts), uint32_t(nlines)},
                         std::move(edges), std::move(meta));
  G.label_arity = {t + 1, 2 * (t + 1)};
  G.labels = std::move(labels);
  return G;
}

std::vector<Scalar> plucker_coords(std::span<const Scalar> p,
                                   std::span<const Scalar> s, const Field& F) {
  if (p.size() != s.size()) throw std::invalid_argument("arity mismatch");
  int n = int(p.size());
  std::vector<Scalar> w;
  w.reserve(size_t(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      w.push_back(F.sub(F.mul(p[i], s[j]), F.mul(p[j], s[i])));
  return w;
}

std::vector<Scalar> arc_to_wenger_map(std::span<const Scalar> line_s,
                                      std::span<const Scalar> line_rep, int k,
                                      const Field& F) {
  if (int(line_s.size()) != k + 1 || int(line_rep.size()) != k + 1)
    throw std::invalid_argument("line coordinate arity mismatch");
  std::vector<Scalar> w = plucker_coords(line_rep, line_s, F);
  std::vector<Scalar> b(k);
  b[0] = w[plucker_index(1, 3, k + 1)];
  for (int i = 2; i <= k; ++i) b[i - 1] = w[plucker_index(2, i + 1, k + 1)];
  return b;
}

Graph build_wenger(int k, const Field& F) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  const uint32_t q = F.q();
  uint64_t nk = checked_pow(q, k, 20'000'000, "wenger");
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  edges.reserve(nk * q);
  std::vector<Scalar> b(k);
  for (uint64_t ia = 0; ia < nk; ++ia) {
    std::vector<Scalar> a = decode_tuple(ia, q, k);
    for (Scalar b1 = 0; b1 < q; ++b1) {
      b[0] = b1;
      Scalar pw = 1;
      for (int i = 2; i <= k; ++i) {
        pw = F.mul(pw, b1);
        b[i - 1] = F.sub(F.mul(a[0], pw), a[i - 1]);
      }
      edges.push_back({uint32_t(ia), uint32_t(nk + encode_tuple(b, q))});
    }
  }
  GraphMeta meta;
  meta.family = "wenger";
  meta.k = k;
  meta.field = tag_of(F);
  Graph G = Graph::build(2, {uint32_t(nk), uint32_t(nk)}, std::move(edges),
                         std::move(meta));
  G.label_arity = {k, k};
  auto L = coord_labels(nk, q, k);
  G.labels = {L, L};
  return G;
}

Graph build_g2rs(const Field& F, int s) {
  if (F.characteristic() != 2)
    throw std::invalid_argument("G(2^r, s) needs characteristic 2");
  if (s < 1 || std::gcd(s, F.n()) != 1)
    throw std::invalid_argument("frobenius exponent must be coprime to the degree");
  const uint32_t q = F.q();
  uint64_t nk = checked_pow(q, 3, 20'000'000, "g2rs");
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  edges.reserve(nk * q);
  std::vector<Scalar> b(3);
  for (uint64_t ia = 0; ia < nk; ++ia) {
    std::vector<Scalar> a = decode_tuple(ia, q, 3);
    for (Scalar b1 = 0; b1 < q; ++b1) {
      b[0] = b1;
      b[1] = F.sub(F.mul(a[0], b1), a[1]);
      b[2] = F.sub(F.mul(a[0], F.frob_pow(b1, s)), a[2]);
      edges.push_back({uint32_t(ia), uint32_t(nk + encode_tuple(b, q))});
    }
  }
  GraphMeta meta;
  meta.family = "g2rs";
  meta.k = 3;
  meta.field = tag_of(F);
  meta.set_extra("s", std::to_string(s));
  Graph G = Graph::build(2, {uint32_t(nk), uint32_t(nk)}, std::move(edges),
                         std::move(meta));
  G.label_arity = {3, 3};
  auto L = coord_labels(nk, q, 3);
  G.labels = {L, L};
  return G;
}

} // namespace girthlab
