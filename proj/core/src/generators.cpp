#include "copsrob/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "copsrob/error.hpp"
#include "copsrob/rng.hpp"

namespace copsrob {

namespace {

void check_cap(long double count, std::string_view what) {
  if (count > static_cast<long double>(kGeneratorVertexCap)) {
    throw Error(ErrorCode::SizeCap, std::string(what) + " exceeds " + std::to_string(kGeneratorVertexCap) + " vertices");
  }
}

}  // namespace

GridCodec::GridCodec(std::vector<std::size_t> dims) : dims_(std::move(dims)), strides_(dims_.size()) {
  if (dims_.empty()) throw Error(ErrorCode::InvalidArgument, "grid needs at least one axis");
  long double count = 1;
  for (auto q : dims_) {
    if (q == 0) throw Error(ErrorCode::InvalidArgument, "grid side must be >= 1");
    count *= static_cast<long double>(q);
  }
  check_cap(count, "grid");
  std::size_t stride = 1;
  for (std::size_t i = dims_.size(); i-- > 0;) {
    strides_[i] = stride;
    stride *= dims_[i];
  }
  count_ = stride;
}

Vertex GridCodec::encode(const std::vector<std::size_t>& coords) const {
  if (coords.size() != dims_.size()) throw Error(ErrorCode::InvalidArgument, "coordinate arity mismatch");
  std::size_t id = 0;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (coords[i] >= dims_[i]) throw Error(ErrorCode::InvalidArgument, "coordinate out of range");
    id += coords[i] * strides_[i];
  }
  return static_cast<Vertex>(id);
}

std::vector<std::size_t> GridCodec::decode(Vertex id) const {
  std::vector<std::size_t> coords(dims_.size());
  std::size_t rest = id;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    coords[i] = rest / strides_[i];
    rest %= strides_[i];
  }
  return coords;
}

GridGraph gen_grid(const std::vector<std::size_t>& dims) {
  GridCodec codec(dims);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < codec.vertex_count(); ++v) {
    auto c = codec.decode(v);
    for (std::size_t axis = 0; axis < c.size(); ++axis) {
      if (c[axis] + 1 < dims[axis]) {
        ++c[axis];
        edges.emplace_back(v, codec.encode(c));
        --c[axis];
      }
    }
  }
  return {Graph(codec.vertex_count(), edges), std::move(codec)};
}

GridGraph gen_grid(std::size_t d, std::size_t q) {
  if (d == 0 || q == 0) throw Error(ErrorCode::InvalidArgument, "grid needs d >= 1 and q >= 1");
  check_cap(std::pow(static_cast<long double>(q), static_cast<long double>(d)), "grid");
  return gen_grid(std::vector<std::size_t>(d, q));
}

Graph gen_path(std::size_t q) { return gen_grid(1, q).graph; }

CubeGraph gen_hypercube(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "hypercube dimension must be >= 1");
  if (n > 22) throw Error(ErrorCode::SizeCap, "hypercube dimension " + std::to_string(n) + " exceeds 22");
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(n * count / 2);
  for (Vertex v = 0; v < count; ++v) {
    for (std::size_t i = 0; i < n; ++i) {
      const Vertex w = v ^ (Vertex{1} << i);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return {Graph(count, edges), CubeCodec(n)};
}

Graph gen_cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "cycle needs n >= 3");
  check_cap(static_cast<long double>(n), "cycle");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, edges);
}

Graph gen_complete(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "complete graph needs n >= 1");
  check_cap(static_cast<long double>(n) * static_cast<long double>(n), "complete graph edge table");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph gen_star(std::size_t leaves) {
  check_cap(static_cast<long double>(leaves) + 1, "star");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

Graph gen_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "tree needs n >= 1");
  check_cap(static_cast<long double>(n), "tree");
  Rng rng(seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(rng.uniform_below(v)), v);
  return Graph(n, edges);
}

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::InvalidArgument, "edge probability must lie in [0, 1]");
  check_cap(static_cast<long double>(n) * static_cast<long double>(n) / 2, "G(n,p) pair table");
  Rng rng(seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.uniform01() < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

RetractMap box_retract(const GridCodec& codec, const std::vector<std::size_t>& lo,
                       const std::vector<std::size_t>& hi) {
  const auto& dims = codec.dims();
  if (lo.size() != dims.size() || hi.size() != dims.size()) {
    throw Error(ErrorCode::BadBox, "box arity differs from grid dimension");
  }
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (lo[i] > hi[i] || hi[i] >= dims[i]) {
      throw Error(ErrorCode::BadBox, "axis " + std::to_string(i) + ": [" + std::to_string(lo[i]) + "," +
                                         std::to_string(hi[i]) + "] not inside [0," + std::to_string(dims[i] - 1) + "]");
    }
  }
  std::vector<Vertex> map(codec.vertex_count());
  for (Vertex v = 0; v < map.size(); ++v) {
    auto c = codec.decode(v);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::clamp(c[i], lo[i], hi[i]);
    map[v] = codec.encode(c);
  }
  return RetractMap::from_map(std::move(map));
}

RetractMap subcube_retract(const CubeCodec& codec, PartialAssignment fixed) {
  const std::size_t n = codec.dimension();
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  if ((fixed.mask & ~all) != 0) throw Error(ErrorCode::InvalidArgument, "fixed bits beyond cube dimension");
  std::vector<Vertex> map(std::size_t{1} << n);
  for (Vertex v = 0; v < map.size(); ++v) {
    map[v] = static_cast<Vertex>((v & ~fixed.mask) | (fixed.values & fixed.mask));
  }
  return RetractMap::from_map(std::move(map));
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

[[noreturn]] void bad_token(std::string_view spec, std::string_view token, std::string_view why) {
  throw Error(ErrorCode::ParseError,
              "generator spec '" + std::string(spec) + "': token '" + std::string(token) + "': " + std::string(why));
}

std::uint64_t parse_uint(std::string_view spec, std::string_view token) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end) bad_token(spec, token, "expected a non-negative integer");
  return value;
}

double parse_real(std::string_view spec, std::string_view token) {
  std::string copy(token);
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(copy, &used);
  } catch (const std::exception&) {
    bad_token(spec, token, "expected a real number");
  }
  if (used != copy.size()) bad_token(spec, token, "expected a real number");
  return value;
}

std::uint64_t seed_or_default(std::string_view spec, const std::vector<std::string_view>& args, std::size_t index,
                              std::optional<std::uint64_t> default_seed) {
  if (args.size() > index) return parse_uint(spec, args[index]);
  if (!default_seed) bad_token(spec, spec, "random generator needs a seed");
  return *default_seed;
}

void expect_arity(std::string_view spec, const std::vector<std::string_view>& args, std::size_t lo, std::size_t hi) {
  if (args.size() < lo || args.size() > hi) {
    bad_token(spec, args.empty() ? spec : args.back(), "wrong number of arguments");
  }
}

}  // namespace

GraphInstance parse_generator_spec(std::string_view spec, std::optional<std::uint64_t> default_seed) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) bad_token(spec, spec, "expected family:arguments");
  const auto family = spec.substr(0, colon);
  const auto args = split(spec.substr(colon + 1), ',');

  GraphInstance out;
  out.spec = std::string(spec);
  if (family == "path") {
    expect_arity(spec, args, 1, 1);
    auto grid = gen_grid({static_cast<std::size_t>(parse_uint(spec, args[0]))});
    out.graph = std::move(grid.graph);
    out.grid = std::move(grid.codec);
  } else if (family == "grid") {
    if (!args.empty() && args[0].find('x') != std::string_view::npos) {
      if (args.size() != 1) {
        bad_token(spec, args[1], "ambiguous grid spec; use grid:d=D,q=Q or grid:AxB");
      }
      std::vector<std::size_t> dims;
      for (auto side : split(args[0], 'x')) dims.push_back(static_cast<std::size_t>(parse_uint(spec, side)));
      if (std::any_of(dims.begin(), dims.end(), [](std::size_t q) { return q == 0; })) {
        bad_token(spec, args[0], "grid sides must be >= 1");
      }
      auto grid = gen_grid(dims);
      out.graph = std::move(grid.graph);
      out.grid = std::move(grid.codec);
    } else {
      expect_arity(spec, args, 2, 2);
      std::optional<std::uint64_t> d, q;
      for (auto arg : args) {
        const auto eq = arg.find('=');
        if (eq == std::string_view::npos) bad_token(spec, arg, "expected d=... or q=...");
        const auto key = arg.substr(0, eq);
        const auto value = parse_uint(spec, arg.substr(eq + 1));
        if (key == "d") {
          d = value;
        } else if (key == "q") {
          q = value;
        } else {
          bad_token(spec, arg, "unknown grid parameter");
        }
      }
      if (!d || !q) bad_token(spec, spec, "grid needs both d= and q=");
      if (*d == 0 || *q == 0) bad_token(spec, spec, "grid needs d >= 1 and q >= 1");
      auto grid = gen_grid(static_cast<std::size_t>(*d), static_cast<std::size_t>(*q));
      out.graph = std::move(grid.graph);
      out.grid = std::move(grid.codec);
    }
  } else if (family == "hypercube") {
    expect_arity(spec, args, 1, 1);
    auto cube = gen_hypercube(static_cast<std::size_t>(parse_uint(spec, args[0])));
    out.graph = std::move(cube.graph);
    out.cube = cube.codec;
  } else if (family == "cycle") {
    expect_arity(spec, args, 1, 1);
    out.graph = gen_cycle(static_cast<std::size_t>(parse_uint(spec, args[0])));
  } else if (family == "complete") {
    expect_arity(spec, args, 1, 1);
    out.graph = gen_complete(static_cast<std::size_t>(parse_uint(spec, args[0])));
  } else if (family == "star") {
    expect_arity(spec, args, 1, 1);
    out.graph = gen_star(static_cast<std::size_t>(parse_uint(spec, args[0])));
  } else if (family == "tree") {
    expect_arity(spec, args, 1, 2);
    const auto n = parse_uint(spec, args[0]);
    out.graph = gen_tree(static_cast<std::size_t>(n), seed_or_default(spec, args, 1, default_seed));
  } else if (family == "gnp") {
    expect_arity(spec, args, 2, 3);
    const auto n = parse_uint(spec, args[0]);
    const double p = parse_real(spec, args[1]);
    if (!(p >= 0.0 && p <= 1.0)) bad_token(spec, args[1], "probability must lie in [0, 1]");
    out.graph = gen_gnp(static_cast<std::size_t>(n), p, seed_or_default(spec, args, 2, default_seed));
  } else {
    bad_token(spec, family, "unknown graph family");
  }
  return out;
}

}  // namespace copsrob
