#include "girthlab/dseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace girthlab {

namespace {

RelTerm linear(int side, int pos, bool negate = false) {
  RelTerm t;
  t.negate = negate;
  t.nfactors = 1;
  t.side[0] = uint8_t(side);
  t.pos[0] = int16_t(pos);
  return t;
}

RelTerm prod(int s0, int p0, int s1, int p1) {
  RelTerm t;
  t.nfactors = 2;
  t.side[0] = uint8_t(s0);
  t.pos[0] = int16_t(p0);
  t.side[1] = uint8_t(s1);
  t.pos[1] = int16_t(p1);
  return t;
}

// Product factor positions (a-side, b-side) for the family-D relation r.
std::pair<int, int> product_positions(int r) {
  switch (r) {
    case 1: return {1, 1};
    case 2: return {1, 2};
    case 3: return {2, 1};
    default: break;
  }
  int i = r / 4 + 1;
  switch (r % 4) {
    case 0: return {pos_prev_upper(i), 1};  // (i,i)
    case 1: return {1, pos_prev_lower(i)};  // (i,i)'
    case 2: return {1, pos_diag(i)};        // (i,i+1)
    case 3: return {pos_diag_prime(i), 1};  // (i+1,i)
  }
  throw std::logic_error("product_positions");
}

void check_triangular(const RelationProgram& prog) {
  for (const Relation& rel : prog.relations) {
    int T = rel.index + 1;
    int target_hits[3] = {0, 0, 0};
    for (const RelTerm& t : rel.terms) {
      for (int f = 0; f < t.nfactors; ++f) {
        if (t.pos[f] < 1 || t.pos[f] > T)
          throw std::logic_error("relation reads a position beyond its target");
        if (t.pos[f] == T) {
          if (t.nfactors != 1)
            throw std::logic_error("relation target appears inside a product");
          ++target_hits[t.side[0]];
        }
      }
    }
    for (int s = 0; s < prog.sides; ++s)
      if (target_hits[s] != 1)
        throw std::logic_error("relation target must appear exactly once per side");
  }
}

} // namespace

RelationProgram RelationProgram::make(DFamily family, int k) {
  if (k < 2) throw std::invalid_argument("relations: k must be >= 2");
  RelationProgram prog;
  prog.family = family;
  prog.k = k;
  prog.sides = family == DFamily::D3 ? 3 : 2;
  const int A = 0, B = 1, C = 2;
  for (int r = 1; r <= k - 1; ++r) {
    Relation rel;
    rel.index = r;
    int T = r + 1;
    auto [px, py] = product_positions(r);
    if (family == DFamily::D3) {
      rel.terms.push_back(linear(A, T));
      rel.terms.push_back(linear(B, T));
      rel.terms.push_back(linear(C, T));
      rel.terms.push_back(prod(A, px, B, py));
      rel.terms.push_back(prod(B, px, C, py));
      rel.terms.push_back(prod(C, px, A, py));
    } else {
      rel.terms.push_back(linear(A, T));
      rel.terms.push_back(linear(B, T));
      if (family == DFamily::Dprime) {
        int echo = std::max(px, py); // the non-unit product factor
        bool neg = r == 1;
        rel.terms.push_back(linear(A, echo, neg));
        rel.terms.push_back(linear(B, echo, neg));
      }
      rel.terms.push_back(prod(A, px, B, py));
    }
    prog.relations.push_back(std::move(rel));
  }
  check_triangular(prog);
  return prog;
}

Scalar RelationProgram::eval(const Field& F, int r,
                             std::span<const Scalar* const> sc) const {
  const Relation& rel = relations[r - 1];
  Scalar acc = 0;
  for (const RelTerm& t : rel.terms) {
    Scalar v = sc[t.side[0]][t.pos[0] - 1];
    if (t.nfactors == 2) v = F.mul(v, sc[t.side[1]][t.pos[1] - 1]);
    acc = t.negate ? F.sub(acc, v) : F.add(acc, v);
  }
  return acc;
}

bool RelationProgram::satisfied(const Field& F,
                                std::span<const Scalar* const> sc) const {
  for (const Relation& rel : relations)
    if (eval(F, rel.index, sc) != 0) return false;
  return true;
}

void RelationProgram::solve(const Field& F, int solve_side,
                            std::span<const Scalar* const> sc, Scalar first,
                            Scalar* out) const {
  out[0] = first;
  auto get = [&](int s, int p) {
    return s == solve_side ? out[p - 1] : sc[s][p - 1];
  };
  for (const Relation& rel : relations) {
    int T = rel.index + 1;
    Scalar acc = 0;
    for (const RelTerm& t : rel.terms) {
      if (t.nfactors == 1 && t.side[0] == solve_side && t.pos[0] == T) continue;
      Scalar v = get(t.side[0], t.pos[0]);
      if (t.nfactors == 2) v = F.mul(v, get(t.side[1], t.pos[1]));
      acc = t.negate ? F.sub(acc, v) : F.add(acc, v);
    }
    out[T - 1] = F.neg(acc);
  }
}

namespace {

uint64_t checked_pow(uint64_t q, int k, uint64_t limit, const char* what) {
  uint64_t v = 1;
  for (int i = 0; i < k; ++i) {
    v *= q;
    if (v > limit) throw std::invalid_argument(std::string(what) + ": size guard exceeded");
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

const char* family_name(DFamily f) {
  switch (f) {
    case DFamily::D: return "D";
    case DFamily::Dprime: return "Dprime";
    case DFamily::D3: return "D3";
  }
  return "?";
}

} // namespace

Graph build_bipartite(DFamily family, int k, const Field& F) {
  if (family == DFamily::D3)
    throw std::invalid_argument("build_bipartite: D3 is a triple system");
  const uint32_t q = F.q();
  uint64_t N = checked_pow(q, k, 20000000, "build_bipartite");
  RelationProgram prog = RelationProgram::make(family, k);

  std::vector<std::pair<uint32_t, uint32_t>> edges;
  edges.reserve(N * q);
  std::vector<Scalar> a(k, 0), b(k, 0);
  const Scalar* sc[2] = {a.data(), nullptr};
  for (uint64_t ia = 0; ia < N; ++ia) {
    for (Scalar b1 = 0; b1 < q; ++b1) {
      prog.solve(F, 1, std::span<const Scalar* const>(sc, 2), b1, b.data());
      uint64_t ib = encode_tuple(b, q);
      edges.emplace_back(uint32_t(ia), uint32_t(N + ib));
    }
    for (int j = k - 1; j >= 0; --j) {
      if (++a[j] == q) a[j] = 0;
      else break;
    }
  }

  GraphMeta meta;
  meta.family = family_name(family);
  meta.k = k;
  meta.field = tag_of(F);
  Graph G = Graph::build(2, {uint32_t(N), uint32_t(N)}, std::move(edges), meta);
  G.label_arity = {k, k};
  auto L = coord_labels(N, q, k);
  G.labels = {L, L};
  return G;
}

std::vector<Scalar> solve_neighbor(DFamily family, int k, const Field& F,
                                   std::span<const Scalar> a, Scalar b1) {
  RelationProgram prog = RelationProgram::make(family, k);
  std::vector<Scalar> b(k);
  const Scalar* sc[2] = {a.data(), nullptr};
  prog.solve(F, 1, std::span<const Scalar* const>(sc, 2), b1, b.data());
  return b;
}

std::vector<Scalar> solve_neighbor_a(DFamily family, int k, const Field& F,
                                     std::span<const Scalar> b, Scalar a1) {
  RelationProgram prog = RelationProgram::make(family, k);
  std::vector<Scalar> a(k);
  const Scalar* sc[2] = {nullptr, b.data()};
  prog.solve(F, 0, std::span<const Scalar* const>(sc, 2), a1, a.data());
  return a;
}

TripleSystem build_triple_system(int k, const Field& F, uint64_t explicit_limit) {
  const uint32_t q = F.q();
  uint64_t N = checked_pow(q, k, 1000000, "build_triple_system");
  uint64_t total = N * N * q;
  RelationProgram prog = RelationProgram::make(DFamily::D3, k);

  GraphMeta meta;
  meta.family = "D3";
  meta.k = k;
  meta.field = tag_of(F);

  TripleSystem H;
  if (total <= explicit_limit) {
    std::vector<std::array<uint32_t, 3>> triples;
    triples.reserve(total);
    std::vector<Scalar> a(k, 0), b(k, 0), c(k, 0);
    const Scalar* sc[3] = {a.data(), b.data(), nullptr};
    for (uint64_t ia = 0; ia < N; ++ia) {
      std::fill(b.begin(), b.end(), 0);
      for (uint64_t ib = 0; ib < N; ++ib) {
        for (Scalar c1 = 0; c1 < q; ++c1) {
          prog.solve(F, 2, std::span<const Scalar* const>(sc, 3), c1, c.data());
          uint64_t ic = encode_tuple(c, q);
          triples.push_back({uint32_t(ia), uint32_t(N + ib), uint32_t(2 * N + ic)});
        }
        for (int j = k - 1; j >= 0; --j) {
          if (++b[j] == q) b[j] = 0;
          else break;
        }
      }
      for (int j = k - 1; j >= 0; --j) {
        if (++a[j] == q) a[j] = 0;
        else break;
      }
    }
    H = TripleSystem::build(3, {uint32_t(N), uint32_t(N), uint32_t(N)},
                            std::move(triples), meta);
  } else {
    H.num_parts = 3;
    H.part_sizes = {uint32_t(N), uint32_t(N), uint32_t(N)};
    H.implicit = true;
    H.implicit_edge_count = total;
    H.meta = meta;
  }
  H.label_arity = {k, k, k};
  auto L = coord_labels(N, q, k);
  H.labels = {L, L, L};
  return H;
}

std::vector<Scalar> solve_third(int k, const Field& F,
                                std::span<const Scalar> u,
                                std::span<const Scalar> v, Scalar w1) {
  RelationProgram prog = RelationProgram::make(DFamily::D3, k);
  std::vector<Scalar> w(k);
  const Scalar* sc[3] = {u.data(), v.data(), nullptr};
  prog.solve(F, 2, std::span<const Scalar* const>(sc, 3), w1, w.data());
  return w;
}

bool is_hyperedge(int k, const Field& F, std::span<const Scalar> a,
                  std::span<const Scalar> b, std::span<const Scalar> c) {
  RelationProgram prog = RelationProgram::make(DFamily::D3, k);
  const Scalar* sc[3] = {a.data(), b.data(), c.data()};
  return prog.satisfied(F, std::span<const Scalar* const>(sc, 3));
}

namespace {

// Labels and parts of the link graph: parent parts other than `part`.
Graph finish_link(const TripleSystem& H, uint32_t v, int part,
                  std::vector<std::pair<uint32_t, uint32_t>> edges) {
  GraphMeta meta;
  meta.family = "link-" + H.meta.family;
  meta.k = H.meta.k;
  meta.field = H.meta.field;
  meta.set_extra("base_part", std::string(1, char('A' + part)));
  {
    auto l = H.label(v);
    std::string s;
    for (size_t i = 0; i < l.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(l[i]);
    }
    meta.set_extra("base_label", s);
  }
  int p1 = part == 0 ? 1 : 0;
  int p2 = part == 2 ? 1 : 2;
  Graph G = Graph::build(2, {H.part_sizes[p1], H.part_sizes[p2]},
                         std::move(edges), meta);
  G.label_arity = {H.label_arity[p1], H.label_arity[p2]};
  G.labels = {H.labels[p1], H.labels[p2]};
  return G;
}

} // namespace

Graph link_of(const TripleSystem& H, uint32_t v) {
  if (v >= H.num_vertices()) throw std::out_of_range("link_of: vertex out of range");

  if (H.num_parts == 1) {
    if (H.implicit) throw std::runtime_error("link_of: implicit plain system");
    uint32_t nv = H.num_vertices();
    auto shift = [&](uint32_t w) { return w > v ? w - 1 : w; };
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (const auto& t : H.triples) {
      if (t[0] == v) edges.emplace_back(shift(t[1]), shift(t[2]));
      else if (t[1] == v) edges.emplace_back(shift(t[0]), shift(t[2]));
      else if (t[2] == v) edges.emplace_back(shift(t[0]), shift(t[1]));
    }
    GraphMeta meta;
    meta.family = "link-" + H.meta.family;
    meta.k = H.meta.k;
    meta.field = H.meta.field;
    meta.set_extra("base_vertex", std::to_string(v));
    Graph G = Graph::build(1, {nv - 1}, std::move(edges), meta);
    G.label_arity = {H.label_arity[0]};
    G.labels.assign(1, {});
    int a = H.label_arity[0];
    for (uint32_t w = 0; w < nv; ++w) {
      if (w == v) continue;
      auto l = H.label(w);
      G.labels[0].insert(G.labels[0].end(), l.begin(), l.end());
    }
    return G;
  }

  int part = H.part_of(v);
  if (!H.implicit) {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    uint32_t base1 = H.part_begin(part == 0 ? 1 : 0);
    uint32_t base2 = H.part_begin(part == 2 ? 1 : 2);
    uint32_t size1 = H.part_sizes[part == 0 ? 1 : 0];
    for (const auto& t : H.triples) {
      if (t[0] != v && t[1] != v && t[2] != v) continue;
      uint32_t x = 0, y = 0;
      if (t[0] == v) { x = t[1]; y = t[2]; }
      else if (t[1] == v) { x = t[0]; y = t[2]; }
      else { x = t[0]; y = t[1]; }
      edges.emplace_back(x - base1, size1 + (y - base2));
    }
    return finish_link(H, v, part, std::move(edges));
  }

  // implicit D3
  if (H.meta.family != "D3")
    throw std::runtime_error("link_of: unsupported implicit family " + H.meta.family);
  int k = H.meta.k;
  Field F = Field::make(H.meta.field.p, H.meta.field.n, H.meta.field.modulus);
  const uint32_t q = F.q();
  uint64_t N = H.part_sizes[0];
  RelationProgram prog = RelationProgram::make(DFamily::D3, k);
  uint32_t local = v - H.part_begin(part);
  std::vector<Scalar> fixed = decode_tuple(local, q, k);
  std::vector<Scalar> other(k, 0), out(k, 0);
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  edges.reserve(N * q);
  for (uint64_t io = 0; io < N; ++io) {
    for (Scalar w1 = 0; w1 < q; ++w1) {
      const Scalar* sc[3];
      // roles are cyclic (A,B,C); solve the third role from the two known
      if (part == 0) { sc[0] = fixed.data(); sc[1] = other.data(); }
      else if (part == 1) { sc[0] = other.data(); sc[1] = fixed.data(); }
      else { sc[0] = fixed.data(); sc[1] = other.data(); } // roles (c,a,b)
      sc[2] = nullptr;
      prog.solve(F, 2, std::span<const Scalar* const>(sc, 3), w1, out.data());
      uint64_t iw = encode_tuple(out, q);
      // map (other, out) onto the link's (first, second) parts
      if (part == 0) edges.emplace_back(uint32_t(io), uint32_t(N + iw)); // (b, c)
      else if (part == 1) edges.emplace_back(uint32_t(io), uint32_t(N + iw)); // (a, c)
      else edges.emplace_back(uint32_t(io), uint32_t(N + iw)); // (a, b)
    }
    for (int j = k - 1; j >= 0; --j) {
      if (++other[j] == q) other[j] = 0;
      else break;
    }
  }
  return finish_link(H, v, part, std::move(edges));
}

DVertex rotate_part(const DVertex& v) {
  DVertex w = v;
  w.side = Side((int(v.side) + 1) % 3);
  return w;
}

std::vector<Scalar> table2_map(std::span<const Scalar> v, const Field& F) {
  int k = int(v.size());
  if (k < 2 || k > 6)
    throw std::invalid_argument("table2_map: defined for 2 <= k <= 6");
  std::vector<Scalar> w(v.begin(), v.end());
  // positions: 1:(1) 2:(1,1) 3:(1,2) 4:(2,1) 5:(2,2) 6:(2,2)'
  w[1] = F.sub(v[1], v[0]);
  if (k >= 3) w[2] = F.add(v[2], v[0]);
  if (k >= 4) w[3] = F.add(v[3], v[0]);
  if (k >= 5) w[4] = F.sub(F.add(F.add(v[4], v[2]), v[1]), v[0]);
  if (k >= 6) w[5] = F.sub(F.add(F.add(v[5], v[3]), v[1]), v[0]);
  return w;
}

std::vector<Scalar> shift_map(std::span<const Scalar> v, const Field& F,
                              int delta) {
  std::vector<Scalar> w(v.begin(), v.end());
  w[0] = F.add(w[0], F.from_int(delta));
  return w;
}

std::vector<uint32_t> coordinate_bijection(
    const Graph& from, const Graph& to, int k, const Field& F,
    std::vector<Scalar> (*coord_map)(std::span<const Scalar>, const Field&)) {
  if (from.part_sizes != to.part_sizes)
    throw std::invalid_argument("coordinate_bijection: part sizes differ");
  const uint32_t q = F.q();
  uint64_t N = from.part_sizes[0];
  std::vector<uint32_t> map(from.num_vertices());
  std::vector<Scalar> c(k, 0);
  for (uint64_t i = 0; i < N; ++i) {
    auto w = coord_map(c, F);
    uint64_t j = encode_tuple(w, q);
    map[i] = uint32_t(j);
    map[N + i] = uint32_t(N + j);
    for (int t = k - 1; t >= 0; --t) {
      if (++c[t] == q) c[t] = 0;
      else break;
    }
  }
  return map;
}

} // namespace girthlab
