#pragma once
// Storage layer: undirected labeled graphs with one or two parts, 3-uniform
// triple systems (3-partite or plain), components, and the text
// serialization format.
//
// Vertices are globally indexed with parts laid out consecutively (A first).
// Adjacency is CSR with per-vertex sorted neighbor lists.  Every vertex
// carries an integer label tuple; builders assign vertex ids in
// lexicographic label order, and the serializer relies on that to produce
// canonical byte-identical output.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "girthlab/field.hpp"

namespace girthlab {

// Field identification carried in graph metadata (no tables).
struct FieldTag {
  int p = 0, n = 0;
  std::vector<int> modulus;
  bool empty() const { return p == 0; }
  bool operator==(const FieldTag&) const = default;
};
FieldTag tag_of(const Field& F);

struct GraphMeta {
  std::string family; // "D", "Dprime", "D3", "wenger", "g2rs", "arc", "g3", ...
  int k = 0;
  FieldTag field;
  std::vector<std::pair<std::string, std::string>> extras;
  std::string extra(const std::string& key) const;
  void set_extra(const std::string& key, const std::string& value);
};

// Big-endian mixed-radix tuple codecs (first coordinate most significant),
// so index order equals lexicographic label order.
uint64_t encode_tuple(std::span<const Scalar> coords, uint32_t q);
std::vector<Scalar> decode_tuple(uint64_t index, uint32_t q, int k);

class Graph {
public:
  int num_parts = 1;                     // 1 or 2
  std::vector<uint32_t> part_sizes;
  std::vector<uint64_t> offsets;         // CSR, size num_vertices()+1
  std::vector<uint32_t> adj;             // sorted per vertex
  std::vector<int> label_arity;          // per part
  std::vector<std::vector<int64_t>> labels; // per part, flattened
  GraphMeta meta;

  uint32_t num_vertices() const {
    uint32_t s = 0;
    for (uint32_t ps : part_sizes) s += ps;
    return s;
  }
  uint64_t num_edges() const { return adj.size() / 2; }
  std::span<const uint32_t> neighbors(uint32_t v) const {
    return {adj.data() + offsets[v], size_t(offsets[v + 1] - offsets[v])};
  }
  uint32_t degree(uint32_t v) const {
    return uint32_t(offsets[v + 1] - offsets[v]);
  }
  int part_of(uint32_t v) const { return v < part_sizes[0] ? 0 : 1; }
  uint32_t part_begin(int part) const { return part == 0 ? 0 : part_sizes[0]; }
  std::span<const int64_t> label(uint32_t v) const;
  bool has_edge(uint32_t u, uint32_t v) const;

  // Sorts and validates edges (throws std::runtime_error on loops,
  // duplicates, cross-part violations for bipartite graphs).
  static Graph build(int num_parts, std::vector<uint32_t> part_sizes,
                     std::vector<std::pair<uint32_t, uint32_t>> edges,
                     GraphMeta meta = {});

  // Degree multiset as sorted (degree, count) pairs.
  std::vector<std::pair<uint32_t, uint64_t>> degree_histogram() const;
  // True if 2-colorable; for 2-part graphs this holds by construction.
  bool is_bipartite() const;
};

class TripleSystem {
public:
  int num_parts = 3;                     // 3 or 1
  std::vector<uint32_t> part_sizes;
  // Explicit mode: sorted triples of global ids (each triple ascending).
  std::vector<std::array<uint32_t, 3>> triples;
  // Implicit mode: hyperedges are regenerated on demand from meta
  // (family "D3" with k and field); triples stays empty.
  bool implicit = false;
  uint64_t implicit_edge_count = 0;
  std::vector<int> label_arity;
  std::vector<std::vector<int64_t>> labels;
  GraphMeta meta;

  uint32_t num_vertices() const {
    uint32_t s = 0;
    for (uint32_t ps : part_sizes) s += ps;
    return s;
  }
  uint64_t num_edges() const {
    return implicit ? implicit_edge_count : triples.size();
  }
  int part_of(uint32_t v) const;
  uint32_t part_begin(int part) const;
  std::span<const int64_t> label(uint32_t v) const;

  static TripleSystem build(int num_parts, std::vector<uint32_t> part_sizes,
                            std::vector<std::array<uint32_t, 3>> triples,
                            GraphMeta meta = {});
};

// Induced subgraph on the connected component containing v.  Component
// vertices keep their relative order; to_parent maps new ids back.
struct Component {
  Graph graph;
  std::vector<uint32_t> to_parent;
};
Component component_of(const Graph& G, uint32_t v);

// Text serialization.  One header line, then one line per edge in
// lexicographic label order:
//   # family=<f> k=<k> p=<p> n=<n> modulus=<c0,..> part_sizes=<a,b> [key=value ...]
//   A:(v1,...,vk) B:(w1,...,wk)
// Part letters: A/B for graphs, A/B/C for 3-partite triple systems, V for
// plain ones.  Deserialization fails with a line number on malformed input
// or duplicate edges.
void serialize(const Graph& G, std::ostream& out);
void serialize(const TripleSystem& H, std::ostream& out);
Graph deserialize_graph(std::istream& in);
TripleSystem deserialize_triples(std::istream& in);
// Reads either; exactly one of the results is set.
struct Deserialized {
  std::optional<Graph> graph;
  std::optional<TripleSystem> triples;
};
Deserialized deserialize(std::istream& in);

} // namespace girthlab
