#include "copsrob/solver.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <fstream>

#include "copsrob/error.hpp"

namespace copsrob {

namespace {

constexpr std::uint64_t kMax64 = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kMax64 - b ? kMax64 : a + b; }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kMax64 / b ? kMax64 : a * b;
}

// multisets[m][s] = C(m+s-1, s): multisets of size s over m values.
std::vector<std::vector<std::uint64_t>> multiset_table(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::uint64_t>> t(n + 1, std::vector<std::uint64_t>(k + 1, 0));
  for (std::size_t m = 0; m <= n; ++m) t[m][0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t s = 1; s <= k; ++s) t[m][s] = sat_add(t[m - 1][s], t[m][s - 1]);
  }
  return t;
}

bool contains(std::span<const Vertex> sorted, Vertex v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

// Multisets of size m over `options`, each ascending, in lexicographic order.
std::vector<std::vector<Vertex>> multisets_of(const std::vector<Vertex>& options, std::size_t m) {
  std::vector<std::vector<Vertex>> out;
  std::vector<std::size_t> idx(m, 0);
  for (;;) {
    std::vector<Vertex> pick(m);
    for (std::size_t i = 0; i < m; ++i) pick[i] = options[idx[i]];
    out.push_back(std::move(pick));
    std::size_t i = m;
    while (i > 0 && idx[i - 1] + 1 == options.size()) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[i - 1];
  }
  return out;
}

// Successor configurations of every configuration in compressed rows.
struct MoveGraph {
  std::vector<std::uint64_t> offsets;
  std::vector<std::uint32_t> targets;
  std::uint64_t joint_moves = 0;
};

MoveGraph build_moves(const Graph& g, const ConfigSpace& space) {
  const std::size_t k = space.cops();
  std::vector<std::vector<Vertex>> closed(g.order());
  for (Vertex v = 0; v < g.order(); ++v) closed[v] = g.closed_neighborhood(v);

  MoveGraph mg;
  mg.offsets.reserve(space.size() + 1);
  mg.offsets.push_back(0);
  std::vector<std::uint32_t> row;
  std::vector<Vertex> dest(k);
  std::vector<Vertex> sorted(k);
  for (std::size_t c = 0; c < space.size(); ++c) {
    const auto cfg = space.config(c);
    std::vector<std::vector<std::vector<Vertex>>> groups;
    for (std::size_t i = 0; i < k;) {
      std::size_t j = i;
      while (j < k && cfg[j] == cfg[i]) ++j;
      groups.push_back(multisets_of(closed[cfg[i]], j - i));
      i = j;
    }
    row.clear();
    std::vector<std::size_t> pick(groups.size(), 0);
    for (;;) {
      std::size_t at = 0;
      for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        for (Vertex v : groups[gi][pick[gi]]) dest[at++] = v;
      }
      sorted = dest;
      std::sort(sorted.begin(), sorted.end());
      row.push_back(static_cast<std::uint32_t>(space.rank(sorted)));
      ++mg.joint_moves;
      std::size_t gi = groups.size();
      while (gi > 0 && pick[gi - 1] + 1 == groups[gi - 1].size()) {
        pick[gi - 1] = 0;
        --gi;
      }
      if (gi == 0) break;
      ++pick[gi - 1];
    }
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    mg.targets.insert(mg.targets.end(), row.begin(), row.end());
    mg.offsets.push_back(mg.targets.size());
  }
  return mg;
}

RoundCount plus_one(RoundCount v) { return v == kNoCapture ? kNoCapture : v + 1; }

void put_u32(std::ostream& out, std::uint32_t v) {
  std::array<char, 4> b{};
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  out.write(b.data(), 4);
}

void put_u64(std::ostream& out, std::uint64_t v) {
  put_u32(out, static_cast<std::uint32_t>(v));
  put_u32(out, static_cast<std::uint32_t>(v >> 32));
}

std::uint32_t get_u32(std::istream& in) {
  std::array<unsigned char, 4> b{};
  if (!in.read(reinterpret_cast<char*>(b.data()), 4)) throw Error(ErrorCode::ParseError, "value table truncated");
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

std::uint64_t get_u64(std::istream& in) {
  const std::uint64_t lo = get_u32(in);
  return lo | (static_cast<std::uint64_t>(get_u32(in)) << 32);
}

constexpr std::array<char, 4> kMagic{'C', 'R', 'V', 'T'};
constexpr std::uint32_t kFormatVersion = 1;

}  // namespace

ConfigSpace::ConfigSpace(std::size_t n, std::size_t k) : n_(n), k_(k) {
  const std::uint64_t total = count(n, k);
  if (total > (std::uint64_t{1} << 32)) {
    throw Error(ErrorCode::StateBudgetExceeded, "configuration space too large");
  }
  size_ = static_cast<std::size_t>(total);
  const auto table = multiset_table(n, k);
  prefix_.assign(k * (n + 1), 0);
  for (std::size_t s = 0; s < k; ++s) {
    for (std::size_t x = 0; x < n; ++x) {
      prefix_[s * (n + 1) + x + 1] = prefix_[s * (n + 1) + x] + table[n - x][s];
    }
  }
  configs_.reserve(size_ * k);
  if (size_ == 0) return;
  std::vector<Vertex> cur(k, 0);
  for (;;) {
    configs_.insert(configs_.end(), cur.begin(), cur.end());
    std::size_t i = k;
    while (i > 0 && cur[i - 1] + 1 == n) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[i - 1];
  }
}

std::uint64_t ConfigSpace::count(std::size_t n, std::size_t k) noexcept {
  if (n == 0) return k == 0 ? 1 : 0;
  // C(n+k-1, k) by the multiplicative formula with exact intermediate division.
  const std::uint64_t top = n + k - 1;
  const std::uint64_t r = std::min<std::uint64_t>(k, n - 1);
  __extension__ unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (top - r + i) / i;
    if (acc > kMax64) return kMax64;
  }
  return static_cast<std::uint64_t>(acc);
}

std::size_t ConfigSpace::rank(std::span<const Vertex> sorted) const {
  std::uint64_t r = 0;
  Vertex lo = 0;
  for (std::size_t i = 0; i < k_; ++i) {
    const std::size_t s = k_ - i - 1;
    r += prefix_[s * (n_ + 1) + sorted[i]] - prefix_[s * (n_ + 1) + lo];
    lo = sorted[i];
  }
  return static_cast<std::size_t>(r);
}

RoundCount ValueTable::after_cop_move(std::span<const Vertex> sorted, Vertex robber) const {
  if (contains(sorted, robber)) return 0;
  return robber_turn(space_.rank(sorted), robber);
}

RoundCount ValueTable::after_robber_move(std::span<const Vertex> sorted, Vertex robber) const {
  if (contains(sorted, robber)) return 0;
  return cop_turn(space_.rank(sorted), robber);
}

std::uint64_t estimate_joint_moves(const Graph& g, std::size_t k) {
  // Coefficient of x^k in prod_v sum_m C(|N[v]|+m-1, m) x^m.
  const std::size_t n = g.order();
  std::size_t max_closed = 0;
  for (Vertex v = 0; v < n; ++v) max_closed = std::max(max_closed, g.degree(v) + 1);
  const auto table = multiset_table(max_closed, k);
  std::vector<std::uint64_t> poly(k + 1, 0);
  poly[0] = 1;
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t deg = g.degree(v) + 1;
    std::vector<std::uint64_t> next(k + 1, 0);
    for (std::size_t a = 0; a <= k; ++a) {
      if (poly[a] == 0) continue;
      for (std::size_t m = 0; a + m <= k; ++m) next[a + m] = sat_add(next[a + m], sat_mul(poly[a], table[deg][m]));
    }
    poly = std::move(next);
  }
  return poly[k];
}

ValueTable solve(const Graph& g, std::size_t k, const SolveLimits& limits) {
  const std::size_t n = g.order();
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "graph has no vertices");

  const std::uint64_t configs = ConfigSpace::count(n, k);
  const std::uint64_t states = sat_mul(sat_mul(configs, n), 2);
  if (states > limits.max_states) {
    throw Error(ErrorCode::StateBudgetExceeded, std::to_string(states == kMax64 ? configs : states) +
                                                    " states exceed the budget of " +
                                                    std::to_string(limits.max_states) + " (n=" + std::to_string(n) +
                                                    ", k=" + std::to_string(k) + ")");
  }
  const std::uint64_t moves = estimate_joint_moves(g, k);
  if (moves > limits.max_moves) {
    throw Error(ErrorCode::StateBudgetExceeded, std::to_string(moves) + " joint moves exceed the budget of " +
                                                    std::to_string(limits.max_moves));
  }

  ValueTable t;
  t.graph_ = g;
  t.n_ = n;
  t.space_ = ConfigSpace(n, k);
  const ConfigSpace& space = t.space_;
  const std::size_t m = space.size();
  const MoveGraph mg = build_moves(g, space);
  t.joint_moves_ = mg.joint_moves;

  t.cop_values_.assign(m * n, kNoCapture);
  t.robber_values_.assign(m * n, kNoCapture);
  auto& cop = t.cop_values_;
  auto& rob = t.robber_values_;

  // A robber-turn state is fixed once every robber option is known to be
  // losing; the counter holds the options not yet resolved.
  std::vector<std::uint32_t> pending(m * n, 0);
  std::vector<std::uint64_t> cop_frontier;
  std::vector<std::uint64_t> rob_frontier;
  std::vector<std::uint64_t> next_cop;
  for (std::size_t c = 0; c < m; ++c) {
    const auto cfg = space.config(c);
    for (Vertex r = 0; r < n; ++r) {
      const std::uint64_t s = static_cast<std::uint64_t>(c) * n + r;
      if (contains(cfg, r)) {
        cop[s] = 0;
        rob[s] = 0;
        cop_frontier.push_back(s);
        rob_frontier.push_back(s);
      } else {
        pending[s] = static_cast<std::uint32_t>(g.degree(r) + 1);
      }
    }
  }

  for (RoundCount level = 0; !cop_frontier.empty() || !rob_frontier.empty(); ++level) {
    for (const std::uint64_t s : cop_frontier) {
      const std::uint64_t base = s - s % n;
      const Vertex moved_to = static_cast<Vertex>(s % n);
      auto visit = [&](Vertex from) {
        const std::uint64_t p = base + from;
        if (rob[p] == kNoCapture && --pending[p] == 0) {
          rob[p] = level;
          rob_frontier.push_back(p);
        }
      };
      visit(moved_to);
      for (Vertex from : g.neighbors(moved_to)) visit(from);
    }
    cop_frontier.clear();

    // The cop move relation is symmetric, so predecessors are successors.
    for (const std::uint64_t s : rob_frontier) {
      const std::size_t c = static_cast<std::size_t>(s / n);
      const Vertex r = static_cast<Vertex>(s % n);
      for (std::uint64_t e = mg.offsets[c]; e < mg.offsets[c + 1]; ++e) {
        const std::uint64_t p = static_cast<std::uint64_t>(mg.targets[e]) * n + r;
        if (cop[p] == kNoCapture) {
          cop[p] = level + 1;
          next_cop.push_back(p);
        }
      }
    }
    rob_frontier.clear();
    std::swap(cop_frontier, next_cop);
  }
  return t;
}

CaptureResult capture_time(const ValueTable& table) {
  const std::size_t n = table.graph().order();
  const ConfigSpace& space = table.space();
  CaptureResult best;
  best.states = table.state_count();
  bool have = false;
  for (std::size_t c = 0; c < space.size(); ++c) {
    RoundCount worst = 0;
    for (Vertex r = 0; r < n && (!have || worst < best.value); ++r) {
      worst = std::max(worst, table.cop_turn(c, r));
    }
    if (!have || worst < best.value) {
      const auto cfg = space.config(c);
      best.value = worst;
      best.placement.assign(cfg.begin(), cfg.end());
      have = true;
    }
  }
  return best;
}

CaptureResult capture_time(const Graph& g, std::size_t k, const SolveLimits& limits) {
  const std::size_t n = g.order();
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "graph has no vertices");
  if (k >= n) {
    CaptureResult r;
    r.value = 0;
    r.placement.assign(k - n, 0);
    for (Vertex v = 0; v < n; ++v) r.placement.push_back(v);
    std::sort(r.placement.begin(), r.placement.end());
    return r;
  }
  return capture_time(solve(g, k, limits));
}

std::size_t cop_number(const Graph& g, const SolveLimits& limits) {
  if (g.order() == 0) throw Error(ErrorCode::InvalidArgument, "graph has no vertices");
  for (std::size_t k = 1;; ++k) {
    if (capture_time(g, k, limits).value != kNoCapture) return k;
  }
}

std::optional<std::string> audit_fixed_point(const ValueTable& table) {
  const Graph& g = table.graph();
  const std::size_t n = g.order();
  const ConfigSpace& space = table.space();
  std::vector<Vertex> sorted(space.cops());
  auto where = [&](const char* side, std::size_t c, Vertex r, RoundCount stored, RoundCount expected) {
    std::string cfg;
    for (Vertex v : space.config(c)) cfg += (cfg.empty() ? "" : ",") + std::to_string(v);
    auto show = [](RoundCount x) { return x == kNoCapture ? std::string("inf") : std::to_string(x); };
    return std::string(side) + "-turn state cops={" + cfg + "} robber=" + std::to_string(r) + ": stored " +
           show(stored) + ", recurrence gives " + show(expected);
  };
  for (std::size_t c = 0; c < space.size(); ++c) {
    const auto cfg = space.config(c);
    for (Vertex r = 0; r < n; ++r) {
      RoundCount want_cop = 0;
      RoundCount want_rob = 0;
      if (!contains(cfg, r)) {
        RoundCount best = kNoCapture;
        for_each_joint_move(g, cfg, [&](std::span<const Vertex> dest) {
          std::copy(dest.begin(), dest.end(), sorted.begin());
          std::sort(sorted.begin(), sorted.end());
          best = std::min(best, table.after_cop_move(sorted, r));
        });
        want_cop = plus_one(best);
        RoundCount worst = table.after_robber_move(cfg, r);
        for (Vertex to : g.neighbors(r)) worst = std::max(worst, table.after_robber_move(cfg, to));
        want_rob = worst;
      }
      if (table.cop_turn(c, r) != want_cop) return where("cop", c, r, table.cop_turn(c, r), want_cop);
      if (table.robber_turn(c, r) != want_rob) return where("robber", c, r, table.robber_turn(c, r), want_rob);
    }
  }
  return std::nullopt;
}

void save_value_table(const ValueTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  const std::size_t n = table.graph().order();
  const std::uint64_t entries = static_cast<std::uint64_t>(table.space().size()) * n;
  out.write(kMagic.data(), kMagic.size());
  put_u32(out, kFormatVersion);
  put_u32(out, static_cast<std::uint32_t>(n));
  put_u32(out, static_cast<std::uint32_t>(table.cops()));
  put_u64(out, table.graph().hash());
  put_u64(out, entries);
  for (std::size_t c = 0; c < table.space().size(); ++c) {
    for (Vertex r = 0; r < n; ++r) put_u32(out, table.cop_turn(c, r));
  }
  for (std::size_t c = 0; c < table.space().size(); ++c) {
    for (Vertex r = 0; r < n; ++r) put_u32(out, table.robber_turn(c, r));
  }
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

ValueTable load_value_table(const std::filesystem::path& path, const Graph& g) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) {
    throw Error(ErrorCode::ParseError, path.string() + " is not a value table");
  }
  if (get_u32(in) != kFormatVersion) throw Error(ErrorCode::ParseError, "unsupported value table version");
  const std::uint32_t n = get_u32(in);
  const std::uint32_t k = get_u32(in);
  const std::uint64_t hash = get_u64(in);
  const std::uint64_t entries = get_u64(in);
  if (n != g.order() || hash != g.hash()) throw Error(ErrorCode::ParseError, "value table belongs to another graph");
  if (k == 0 || ConfigSpace::count(n, k) > (std::uint64_t{1} << 32) ||
      entries != ConfigSpace::count(n, k) * n) {
    throw Error(ErrorCode::ParseError, "value table header is inconsistent");
  }
  ValueTable t;
  t.graph_ = g;
  t.n_ = n;
  t.space_ = ConfigSpace(n, k);
  t.cop_values_.resize(entries);
  t.robber_values_.resize(entries);
  for (auto& v : t.cop_values_) v = get_u32(in);
  for (auto& v : t.robber_values_) v = get_u32(in);
  if (in.peek() != std::ifstream::traits_type::eof()) throw Error(ErrorCode::ParseError, "trailing bytes in value table");
  return t;
}

}  // namespace copsrob
