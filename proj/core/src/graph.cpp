#include "girthlab/graph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace girthlab {

FieldTag tag_of(const Field& F) { return {F.p(), F.n(), F.modulus()}; }

std::string GraphMeta::extra(const std::string& key) const {
  for (const auto& [k2, v] : extras)
    if (k2 == key) return v;
  return {};
}

void GraphMeta::set_extra(const std::string& key, const std::string& value) {
  for (auto& [k2, v] : extras)
    if (k2 == key) { v = value; return; }
  extras.emplace_back(key, value);
}

uint64_t encode_tuple(std::span<const Scalar> coords, uint32_t q) {
  uint64_t v = 0;
  for (Scalar c : coords) v = v * q + c;
  return v;
}

std::vector<Scalar> decode_tuple(uint64_t index, uint32_t q, int k) {
  std::vector<Scalar> c(k);
  for (int i = k - 1; i >= 0; --i) { c[i] = Scalar(index % q); index /= q; }
  return c;
}

std::span<const int64_t> Graph::label(uint32_t v) const {
  int part = part_of(v);
  uint32_t local = v - part_begin(part);
  int a = label_arity[part];
  return {labels[part].data() + size_t(local) * a, size_t(a)};
}

bool Graph::has_edge(uint32_t u, uint32_t v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::build(int num_parts, std::vector<uint32_t> part_sizes,
                   std::vector<std::pair<uint32_t, uint32_t>> edges,
                   GraphMeta meta) {
  Graph G;
  G.num_parts = num_parts;
  G.part_sizes = std::move(part_sizes);
  G.meta = std::move(meta);
  uint64_t nv = G.num_vertices();

  for (auto& [u, v] : edges) {
    if (u >= nv || v >= nv) throw std::runtime_error("graph: edge endpoint out of range");
    if (u == v) throw std::runtime_error("graph: loop edge");
    if (num_parts == 2) {
      if (G.part_of(u) == G.part_of(v))
        throw std::runtime_error("graph: intra-part edge in bipartite graph");
      if (G.part_of(u) == 1) std::swap(u, v);
    } else if (u > v) {
      std::swap(u, v);
    }
  }

  G.offsets.assign(nv + 1, 0);
  for (auto& [u, v] : edges) { ++G.offsets[u + 1]; ++G.offsets[v + 1]; }
  for (uint64_t i = 1; i <= nv; ++i) G.offsets[i] += G.offsets[i - 1];
  G.adj.assign(G.offsets[nv], 0);
  std::vector<uint64_t> cursor(G.offsets.begin(), G.offsets.end() - 1);
  for (auto& [u, v] : edges) {
    G.adj[cursor[u]++] = v;
    G.adj[cursor[v]++] = u;
  }
  for (uint64_t v = 0; v < nv; ++v) {
    auto b = G.adj.begin() + G.offsets[v], e = G.adj.begin() + G.offsets[v + 1];
    std::sort(b, e);
    if (std::adjacent_find(b, e) != e)
      throw std::runtime_error("graph: duplicate edge");
  }
  if (G.label_arity.empty()) {
    // default labels: local index per part
    for (int part = 0; part < num_parts; ++part) {
      G.label_arity.push_back(1);
      std::vector<int64_t> L(G.part_sizes[part]);
      for (uint32_t i = 0; i < G.part_sizes[part]; ++i) L[i] = i;
      G.labels.push_back(std::move(L));
    }
  }
  return G;
}

std::vector<std::pair<uint32_t, uint64_t>> Graph::degree_histogram() const {
  std::map<uint32_t, uint64_t> h;
  uint32_t nv = num_vertices();
  for (uint32_t v = 0; v < nv; ++v) ++h[degree(v)];
  return {h.begin(), h.end()};
}

bool Graph::is_bipartite() const {
  uint32_t nv = num_vertices();
  std::vector<int8_t> color(nv, -1);
  std::vector<uint32_t> stack;
  for (uint32_t s = 0; s < nv; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      uint32_t u = stack.back();
      stack.pop_back();
      for (uint32_t w : neighbors(u)) {
        if (color[w] == -1) {
          color[w] = int8_t(1 - color[u]);
          stack.push_back(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

int TripleSystem::part_of(uint32_t v) const {
  uint32_t acc = 0;
  for (int part = 0; part < num_parts; ++part) {
    acc += part_sizes[part];
    if (v < acc) return part;
  }
  throw std::out_of_range("triple system: vertex out of range");
}

uint32_t TripleSystem::part_begin(int part) const {
  uint32_t acc = 0;
  for (int i = 0; i < part; ++i) acc += part_sizes[i];
  return acc;
}

std::span<const int64_t> TripleSystem::label(uint32_t v) const {
  int part = part_of(v);
  uint32_t local = v - part_begin(part);
  int a = label_arity[part];
  return {labels[part].data() + size_t(local) * a, size_t(a)};
}

TripleSystem TripleSystem::build(int num_parts, std::vector<uint32_t> part_sizes,
                                 std::vector<std::array<uint32_t, 3>> triples,
                                 GraphMeta meta) {
  TripleSystem H;
  H.num_parts = num_parts;
  H.part_sizes = std::move(part_sizes);
  H.meta = std::move(meta);
  uint32_t nv = H.num_vertices();
  for (auto& t : triples) {
    std::sort(t.begin(), t.end());
    if (t[2] >= nv) throw std::runtime_error("triple system: vertex out of range");
    if (t[0] == t[1] || t[1] == t[2])
      throw std::runtime_error("triple system: repeated vertex in triple");
    if (num_parts == 3) {
      if (H.part_of(t[0]) != 0 || H.part_of(t[1]) != 1 || H.part_of(t[2]) != 2)
        throw std::runtime_error("triple system: triple must cross all three parts");
    }
  }
  std::sort(triples.begin(), triples.end());
  if (std::adjacent_find(triples.begin(), triples.end()) != triples.end())
    throw std::runtime_error("triple system: duplicate triple");
  H.triples = std::move(triples);
  if (H.label_arity.empty()) {
    for (int part = 0; part < num_parts; ++part) {
      H.label_arity.push_back(1);
      std::vector<int64_t> L(H.part_sizes[part]);
      for (uint32_t i = 0; i < H.part_sizes[part]; ++i) L[i] = i;
      H.labels.push_back(std::move(L));
    }
  }
  return H;
}

Component component_of(const Graph& G, uint32_t v) {
  uint32_t nv = G.num_vertices();
  if (v >= nv) throw std::out_of_range("component_of: vertex out of range");
  std::vector<uint8_t> seen(nv, 0);
  std::vector<uint32_t> stack{v}, verts;
  seen[v] = 1;
  while (!stack.empty()) {
    uint32_t u = stack.back();
    stack.pop_back();
    verts.push_back(u);
    for (uint32_t w : G.neighbors(u))
      if (!seen[w]) { seen[w] = 1; stack.push_back(w); }
  }
  std::sort(verts.begin(), verts.end());

  std::vector<uint32_t> rank(nv, UINT32_MAX);
  for (uint32_t i = 0; i < verts.size(); ++i) rank[verts[i]] = i;

  Component C;
  C.to_parent = verts;
  Graph& S = C.graph;
  S.num_parts = G.num_parts;
  S.part_sizes.assign(G.num_parts, 0);
  for (uint32_t u : verts) ++S.part_sizes[G.part_of(u)];
  S.label_arity = G.label_arity;
  S.labels.resize(G.num_parts);
  for (uint32_t u : verts) {
    auto l = G.label(u);
    auto& dst = S.labels[G.part_of(u)];
    dst.insert(dst.end(), l.begin(), l.end());
  }
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t u : verts)
    for (uint32_t w : G.neighbors(u))
      if (u < w) edges.emplace_back(rank[u], rank[w]);
  S.meta = G.meta;
  S.meta.set_extra("component_of", std::to_string(v));
  Graph built = Graph::build(S.num_parts, S.part_sizes, std::move(edges), S.meta);
  built.label_arity = S.label_arity;
  built.labels = S.labels;
  C.graph = std::move(built);
  return C;
}

// ---- serialization ----

namespace {

const char* kPartLetters2[] = {"A", "B"};
const char* kPartLetters3[] = {"A", "B", "C"};

std::string header_line(const GraphMeta& m, const std::vector<uint32_t>& part_sizes) {
  std::ostringstream os;
  os << "# family=" << m.family << " k=" << m.k << " p=" << m.field.p
     << " n=" << m.field.n << " modulus=";
  for (size_t i = 0; i < m.field.modulus.size(); ++i) {
    if (i) os << ",";
    os << m.field.modulus[i];
  }
  os << " part_sizes=";
  for (size_t i = 0; i < part_sizes.size(); ++i) {
    if (i) os << ",";
    os << part_sizes[i];
  }
  for (const auto& [k2, v] : m.extras) os << " " << k2 << "=" << v;
  return os.str();
}

void write_vertex(std::ostream& out, const char* part_letter,
                  std::span<const int64_t> label) {
  out << part_letter << ":(";
  for (size_t i = 0; i < label.size(); ++i) {
    if (i) out << ",";
    out << label[i];
  }
  out << ")";
}

struct ParsedHeader {
  GraphMeta meta;
  std::vector<uint32_t> part_sizes;
};

ParsedHeader parse_header(const std::string& line) {
  if (line.rfind("# ", 0) != 0)
    throw std::runtime_error("deserialize: line 1: missing '# ' header");
  ParsedHeader h;
  std::istringstream is(line.substr(2));
  std::string tok;
  while (is >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("deserialize: line 1: malformed token '" + tok + "'");
    std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    auto parse_int_list = [&](const std::string& s) {
      std::vector<int> out;
      size_t pos = 0;
      while (pos < s.size()) {
        auto comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(std::stoi(s.substr(pos, comma - pos)));
        pos = comma + 1;
      }
      return out;
    };
    if (key == "family") h.meta.family = val;
    else if (key == "k") h.meta.k = std::stoi(val);
    else if (key == "p") h.meta.field.p = std::stoi(val);
    else if (key == "n") h.meta.field.n = std::stoi(val);
    else if (key == "modulus") h.meta.field.modulus = parse_int_list(val);
    else if (key == "part_sizes") {
      for (int s : parse_int_list(val)) h.part_sizes.push_back(uint32_t(s));
    } else h.meta.extras.emplace_back(key, val);
  }
  if (h.part_sizes.empty())
    throw std::runtime_error("deserialize: line 1: missing part_sizes");
  return h;
}

struct ParsedVertex {
  int part; // index into the letter table
  std::vector<int64_t> label;
};

ParsedVertex parse_vertex(const std::string& tok, size_t lineno) {
  auto colon = tok.find(":(");
  if (colon == std::string::npos || tok.back() != ')')
    throw std::runtime_error("deserialize: line " + std::to_string(lineno) +
                             ": malformed vertex '" + tok + "'");
  std::string letter = tok.substr(0, colon);
  ParsedVertex v;
  if (letter == "A") v.part = 0;
  else if (letter == "B") v.part = 1;
  else if (letter == "C") v.part = 2;
  else if (letter == "V") v.part = 0;
  else
    throw std::runtime_error("deserialize: line " + std::to_string(lineno) +
                             ": unknown part letter '" + letter + "'");
  std::string body = tok.substr(colon + 2, tok.size() - colon - 3);
  size_t pos = 0;
  while (pos < body.size() || body.empty()) {
    if (body.empty()) break;
    auto comma = body.find(',', pos);
    if (comma == std::string::npos) comma = body.size();
    v.label.push_back(std::stoll(body.substr(pos, comma - pos)));
    pos = comma + 1;
    if (pos > body.size()) break;
  }
  return v;
}

// Accumulates labeled vertices per part and assigns ids by sorted rank.
struct LabelIndex {
  std::vector<std::map<std::vector<int64_t>, uint32_t>> per_part;
  std::vector<int> arity;

  explicit LabelIndex(int parts) : per_part(parts), arity(parts, -1) {}

  void note(const ParsedVertex& v, size_t lineno) {
    if (arity[v.part] == -1) arity[v.part] = int(v.label.size());
    else if (arity[v.part] != int(v.label.size()))
      throw std::runtime_error("deserialize: line " + std::to_string(lineno) +
                               ": inconsistent label arity");
    per_part[v.part].emplace(v.label, 0);
  }

  // Called after all lines are read; ranks labels and checks part sizes.
  void finalize(const std::vector<uint32_t>& declared) {
    for (size_t part = 0; part < per_part.size(); ++part) {
      if (per_part[part].size() != declared[part])
        throw std::runtime_error(
            "deserialize: part " + std::string(1, char('A' + part)) + " has " +
            std::to_string(per_part[part].size()) + " distinct labels, header declares " +
            std::to_string(declared[part]));
      uint32_t r = 0;
      for (auto& [lab, id] : per_part[part]) id = r++;
    }
  }

  uint32_t id(const ParsedVertex& v, uint32_t part_base) const {
    return part_base + per_part[v.part].at(v.label);
  }
};

} // namespace

void serialize(const Graph& G, std::ostream& out) {
  out << header_line(G.meta, G.part_sizes) << "\n";
  const char** letters = G.num_parts == 2 ? kPartLetters2 : nullptr;
  auto letter = [&](uint32_t v) {
    return G.num_parts == 1 ? "V" : letters[G.part_of(v)];
  };
  uint32_t nv = G.num_vertices();
  for (uint32_t v = 0; v < nv; ++v) {
    if (G.degree(v) == 0) {
      out << "! ";
      write_vertex(out, letter(v), G.label(v));
      out << "\n";
    }
  }
  for (uint32_t u = 0; u < nv; ++u) {
    for (uint32_t v : G.neighbors(u)) {
      if (G.num_parts == 2 ? G.part_of(u) != 0 : u > v) continue;
      write_vertex(out, letter(u), G.label(u));
      out << " ";
      write_vertex(out, letter(v), G.label(v));
      out << "\n";
    }
  }
}

void serialize(const TripleSystem& H, std::ostream& out) {
  if (H.implicit)
    throw std::runtime_error("serialize: implicit triple system; materialize it first");
  out << header_line(H.meta, H.part_sizes) << "\n";
  auto letter = [&](uint32_t v) {
    return H.num_parts == 1 ? "V" : kPartLetters3[H.part_of(v)];
  };
  uint32_t nv = H.num_vertices();
  std::vector<uint8_t> used(nv, 0);
  for (const auto& t : H.triples)
    for (uint32_t v : t) used[v] = 1;
  for (uint32_t v = 0; v < nv; ++v) {
    if (!used[v]) {
      out << "! ";
      write_vertex(out, letter(v), H.label(v));
      out << "\n";
    }
  }
  for (const auto& t : H.triples) {
    for (int i = 0; i < 3; ++i) {
      if (i) out << " ";
      write_vertex(out, letter(t[i]), H.label(t[i]));
    }
    out << "\n";
  }
}

namespace {

struct RawFile {
  ParsedHeader header;
  std::vector<std::vector<ParsedVertex>> lines; // per edge line
  std::vector<size_t> linenos;
};

RawFile read_raw(std::istream& in) {
  RawFile f;
  std::string line;
  size_t lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (!have_header) {
      f.header = parse_header(line);
      have_header = true;
      continue;
    }
    std::istringstream is(line);
    std::string tok;
    std::vector<ParsedVertex> verts;
    bool isolated_decl = false;
    while (is >> tok) {
      if (tok == "!") { isolated_decl = true; continue; }
      verts.push_back(parse_vertex(tok, lineno));
    }
    if (verts.empty()) continue;
    if (isolated_decl) {
      if (verts.size() != 1)
        throw std::runtime_error("deserialize: line " + std::to_string(lineno) +
                                 ": isolated vertex line must name one vertex");
      verts.front().part |= 0x100; // mark as declaration
    }
    f.lines.push_back(std::move(verts));
    f.linenos.push_back(lineno);
  }
  if (!have_header) throw std::runtime_error("deserialize: empty input");
  return f;
}

} // namespace

Graph deserialize_graph(std::istream& in) {
  RawFile f = read_raw(in);
  int parts = int(f.header.part_sizes.size());
  if (parts != 1 && parts != 2)
    throw std::runtime_error("deserialize: graph must have 1 or 2 parts");
  LabelIndex index(parts);
  for (size_t i = 0; i < f.lines.size(); ++i) {
    auto& verts = f.lines[i];
    bool decl = verts.size() == 1 && (verts[0].part & 0x100);
    if (decl) verts[0].part &= 0xff;
    else if (verts.size() != 2)
      throw std::runtime_error("deserialize: line " + std::to_string(f.linenos[i]) +
                               ": expected two vertices");
    for (auto& v : verts) {
      if (v.part >= parts)
        throw std::runtime_error("deserialize: line " + std::to_string(f.linenos[i]) +
                                 ": part letter out of range");
      index.note(v, f.linenos[i]);
    }
  }
  index.finalize(f.header.part_sizes);

  std::vector<uint32_t> part_base(parts, 0);
  for (int part = 1; part < parts; ++part)
    part_base[part] = part_base[part - 1] + f.header.part_sizes[part - 1];

  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (size_t i = 0; i < f.lines.size(); ++i) {
    auto& verts = f.lines[i];
    if (verts.size() != 2) continue;
    uint32_t a = index.id(verts[0], part_base[verts[0].part]);
    uint32_t b = index.id(verts[1], part_base[verts[1].part]);
    edges.emplace_back(a, b);
  }
  // duplicate detection with line attribution
  {
    std::vector<std::pair<std::pair<uint32_t, uint32_t>, size_t>> keyed;
    size_t j = 0;
    for (size_t i = 0; i < f.lines.size(); ++i) {
      if (f.lines[i].size() != 2) continue;
      auto e = edges[j++];
      if (e.first > e.second) std::swap(e.first, e.second);
      keyed.push_back({e, f.linenos[i]});
    }
    std::sort(keyed.begin(), keyed.end());
    for (size_t i = 1; i < keyed.size(); ++i)
      if (keyed[i].first == keyed[i - 1].first)
        throw std::runtime_error("deserialize: line " + std::to_string(keyed[i].second) +
                                 ": duplicate edge");
  }

  Graph G = Graph::build(parts, f.header.part_sizes, std::move(edges), f.header.meta);
  G.label_arity.assign(parts, 1);
  G.labels.assign(parts, {});
  for (int part = 0; part < parts; ++part) {
    int a = index.arity[part] == -1 ? 1 : index.arity[part];
    G.label_arity[part] = a;
    G.labels[part].resize(size_t(a) * f.header.part_sizes[part], 0);
    for (const auto& [lab, id] : index.per_part[part])
      std::copy(lab.begin(), lab.end(), G.labels[part].begin() + size_t(id) * a);
  }
  return G;
}

TripleSystem deserialize_triples(std::istream& in) {
  RawFile f = read_raw(in);
  int parts = int(f.header.part_sizes.size());
  if (parts != 1 && parts != 3)
    throw std::runtime_error("deserialize: triple system must have 1 or 3 parts");
  LabelIndex index(parts);
  for (size_t i = 0; i < f.lines.size(); ++i) {
    auto& verts = f.lines[i];
    bool decl = verts.size() == 1 && (verts[0].part & 0x100);
    if (decl) verts[0].part &= 0xff;
    else if (verts.size() != 3)
      throw std::runtime_error("deserialize: line " + std::to_string(f.linenos[i]) +
                               ": expected three vertices");
    for (auto& v : verts) {
      if (v.part >= parts)
        throw std::runtime_error("deserialize: line " + std::to_string(f.linenos[i]) +
                                 ": part letter out of range");
      index.note(v, f.linenos[i]);
    }
  }
  index.finalize(f.header.part_sizes);

  std::vector<uint32_t> part_base(parts, 0);
  for (int part = 1; part < parts; ++part)
    part_base[part] = part_base[part - 1] + f.header.part_sizes[part - 1];

  std::vector<std::array<uint32_t, 3>> triples;
  std::vector<size_t> triple_lines;
  for (size_t i = 0; i < f.lines.size(); ++i) {
    auto& verts = f.lines[i];
    if (verts.size() != 3) continue;
    std::array<uint32_t, 3> t;
    for (int j = 0; j < 3; ++j) t[j] = index.id(verts[j], part_base[verts[j].part]);
    std::sort(t.begin(), t.end());
    triples.push_back(t);
    triple_lines.push_back(f.linenos[i]);
  }
  {
    std::vector<std::pair<std::array<uint32_t, 3>, size_t>> keyed;
    for (size_t i = 0; i < triples.size(); ++i) keyed.push_back({triples[i], triple_lines[i]});
    std::sort(keyed.begin(), keyed.end());
    for (size_t i = 1; i < keyed.size(); ++i)
      if (keyed[i].first == keyed[i - 1].first)
        throw std::runtime_error("deserialize: line " + std::to_string(keyed[i].second) +
                                 ": duplicate triple");
  }

  TripleSystem H = TripleSystem::build(parts, f.header.part_sizes, std::move(triples),
                                       f.header.meta);
  H.label_arity.assign(parts, 1);
  H.labels.assign(parts, {});
  for (int part = 0; part < parts; ++part) {
    int a = index.arity[part] == -1 ? 1 : index.arity[part];
    H.label_arity[part] = a;
    H.labels[part].resize(size_t(a) * f.header.part_sizes[part], 0);
    for (const auto& [lab, id] : index.per_part[part])
      std::copy(lab.begin(), lab.end(), H.labels[part].begin() + size_t(id) * a);
  }
  return H;
}

Deserialized deserialize(std::istream& in) {
  std::stringstream buf;
  buf << in.rdbuf();
  std::string all = buf.str();
  // decide by the first edge line's vertex count
  std::istringstream peek(all);
  std::string line;
  std::getline(peek, line); // header
  ParsedHeader h = parse_header(line);
  bool triple = h.part_sizes.size() == 3;
  if (h.part_sizes.size() == 1) {
    // plain: look at first non-declaration line
    size_t lineno = 1;
    while (std::getline(peek, line)) {
      ++lineno;
      if (line.empty() || line[0] == '!') continue;
      std::istringstream is(line);
      std::string tok;
      int count = 0;
      while (is >> tok) ++count;
      triple = count == 3;
      break;
    }
  }
  Deserialized d;
  std::istringstream replay(all);
  if (triple) d.triples = deserialize_triples(replay);
  else d.graph = deserialize_graph(replay);
  return d;
}

} // namespace girthlab
