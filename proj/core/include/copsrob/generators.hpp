#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "copsrob/graph.hpp"
#include "copsrob/retract.hpp"

namespace copsrob {

/// Largest vertex count any generator will produce.
inline constexpr std::size_t kGeneratorVertexCap = std::size_t{1} << 22;

/// Row-major bijection between vertex ids and coordinate tuples; the last
/// axis varies fastest.
class GridCodec {
 public:
  explicit GridCodec(std::vector<std::size_t> dims);

  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t dimension() const noexcept { return dims_.size(); }
  std::size_t vertex_count() const noexcept { return count_; }

  Vertex encode(const std::vector<std::size_t>& coords) const;
  std::vector<std::size_t> decode(Vertex id) const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> strides_;
  std::size_t count_ = 1;
};

/// Hypercube labels: vertex id is the n-bit string, coordinate i is bit i.
class CubeCodec {
 public:
  explicit CubeCodec(std::size_t n) : n_(n) {}
  std::size_t dimension() const noexcept { return n_; }
  bool bit(Vertex v, std::size_t i) const { return ((v >> i) & 1U) != 0; }

 private:
  std::size_t n_;
};

/// Fixed coordinates of a subcube: bit i is fixed when mask has bit i set,
/// and then takes the corresponding bit of `values`.
struct PartialAssignment {
  std::uint64_t mask = 0;
  std::uint64_t values = 0;
};

struct GridGraph {
  Graph graph;
  GridCodec codec;
};

struct CubeGraph {
  Graph graph;
  CubeCodec codec;
};

/// Cartesian product of paths with the given side lengths.
GridGraph gen_grid(const std::vector<std::size_t>& dims);
/// G^d_q: d axes of q vertices each.
GridGraph gen_grid(std::size_t d, std::size_t q);
Graph gen_path(std::size_t q);
CubeGraph gen_hypercube(std::size_t n);
Graph gen_cycle(std::size_t n);
Graph gen_complete(std::size_t n);
/// K_{1,leaves} with the center at vertex 0.
Graph gen_star(std::size_t leaves);

/// Uniform attachment: vertex i >= 1 joins a uniformly chosen vertex in [0, i).
Graph gen_tree(std::size_t n, std::uint64_t seed);
/// Each pair u < v, in lexicographic order, is kept when uniform01() < p.
Graph gen_gnp(std::size_t n, double p, std::uint64_t seed);

/// Coordinate-wise clamp into the box [lo, hi]. Throws BadBox.
RetractMap box_retract(const GridCodec& codec, const std::vector<std::size_t>& lo,
                       const std::vector<std::size_t>& hi);
/// Overwrites the fixed coordinates. Throws InvalidArgument when the mask
/// names bits beyond the dimension.
RetractMap subcube_retract(const CubeCodec& codec, PartialAssignment fixed);

/// A generated or loaded graph together with whatever structure the
/// generator knows about.
struct GraphInstance {
  std::string spec;
  Graph graph;
  std::optional<GridCodec> grid;
  std::optional<CubeCodec> cube;
};

/// Parses a generator spec:
///   path:q   grid:d=D,q=Q   grid:AxB[xC...]   hypercube:n   cycle:n
///   complete:n   star:leaves   tree:n[,seed]   gnp:n,p[,seed]
/// Random generators without an explicit seed use `default_seed`; when that
/// is absent too the spec is rejected. Errors are ParseError naming the
/// offending token, or SizeCap.
GraphInstance parse_generator_spec(std::string_view spec, std::optional<std::uint64_t> default_seed = std::nullopt);

}  // namespace copsrob
