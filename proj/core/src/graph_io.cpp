#include "copsrob/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "copsrob/error.hpp"

namespace copsrob {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& why) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + why);
}

bool parse_pair(const std::string& text, std::uint64_t& a, std::uint64_t& b) {
  std::istringstream in(text);
  std::string extra;
  if (!(in >> a >> b)) return false;
  if (in >> extra) return false;
  return text.find('-') == std::string::npos;
}

}  // namespace

LoadedGraph read_graph(std::istream& in) {
  LoadedGraph out;
  std::string text;
  std::size_t line = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t seen = 0;
  std::set<std::pair<Vertex, Vertex>> edges;

  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string::npos || text[first] == '#') continue;
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    if (!parse_pair(text, a, b)) fail(line, have_header ? "expected 'u v'" : "expected header 'n m'");
    if (!have_header) {
      n = a;
      m = b;
      if (n > (std::uint64_t{1} << 31)) fail(line, "vertex count too large");
      have_header = true;
      continue;
    }
    if (seen == m) fail(line, "more edge lines than the header's m=" + std::to_string(m));
    ++seen;
    if (a >= b) fail(line, "expected u < v, got " + std::to_string(a) + " " + std::to_string(b));
    if (b >= n) fail(line, "vertex " + std::to_string(b) + " out of range for n=" + std::to_string(n));
    const auto [it, inserted] = edges.emplace(static_cast<Vertex>(a), static_cast<Vertex>(b));
    if (!inserted) {
      out.warnings.push_back("line " + std::to_string(line) + ": duplicate edge " + std::to_string(a) + " " +
                             std::to_string(b) + " ignored");
    }
  }
  if (!have_header) fail(line + 1, "missing header 'n m'");
  if (seen != m) fail(line + 1, "expected " + std::to_string(m) + " edge lines, found " + std::to_string(seen));

  const std::vector<std::pair<Vertex, Vertex>> list(edges.begin(), edges.end());
  out.graph = Graph(static_cast<std::size_t>(n), list);
  return out;
}

LoadedGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void save_graph(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  write_graph(out, g);
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

}  // namespace copsrob
