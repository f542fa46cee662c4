#include "spanwright/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace spanwright {

namespace {

bool parse_int(std::string_view s, std::int64_t& out) {
  auto r = std::from_chars(s.data(), s.data() + s.size(), out);
  return r.ec == std::errc{} && r.ptr == s.data() + s.size();
}

std::uint64_t pair_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

}  // namespace

Weight parse_weight(std::string_view text) {
  auto fail = [&] { return Error("bad weight '" + std::string(text) + "'"); };
  if (text.empty()) throw fail();
  bool negative = text.front() == '-';
  if (negative) text.remove_prefix(1);
  auto dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) throw fail();
  if (frac.size() > 9) throw fail();
  std::int64_t w = 0;
  if (!whole.empty() && !parse_int(whole, w)) throw fail();
  if (w > kInfinity / kWeightScale - 1) throw fail();
  std::int64_t f = 0;
  for (char c : frac) {
    if (c < '0' || c > '9') throw fail();
    f = f * 10 + (c - '0');
  }
  for (std::size_t i = frac.size(); i < 9; ++i) f *= 10;
  Weight result = w * kWeightScale + f;
  return negative ? -result : result;
}

std::string format_weight(Weight w) {
  std::string s = std::to_string(w / kWeightScale);
  Weight frac = w % kWeightScale;
  if (frac == 0) return s;
  std::string digits = std::to_string(frac);
  digits.insert(0, 9 - digits.size(), '0');
  while (digits.back() == '0') digits.pop_back();
  return s + "." + digits;
}

WeightedGraph read_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::int64_t n = -1, m = -1;
  std::size_t header_line = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind, ns, ms;
      if (n >= 0) throw ParseError(lineno, "duplicate header");
      if (!(ss >> kind >> ns >> ms) || kind != "sp" || !parse_int(ns, n) || !parse_int(ms, m) ||
          n < 0 || m < 0)
        throw ParseError(lineno, "expected 'p sp <n> <m>'");
      header_line = lineno;
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (tag != "e") throw ParseError(lineno, "unknown line tag '" + tag + "'");
    if (n < 0) throw ParseError(lineno, "edge before header");
    std::string us, vs, ws, extra;
    std::int64_t u = 0, v = 0;
    if (!(ss >> us >> vs >> ws) || (ss >> extra) || !parse_int(us, u) || !parse_int(vs, v))
      throw ParseError(lineno, "expected 'e <u> <v> <w>'");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(lineno, "vertex id out of range");
    if (u == v) throw ParseError(lineno, "self-loop");
    Weight w = 0;
    try {
      w = parse_weight(ws);
    } catch (const Error& e) {
      throw ParseError(lineno, e.what());
    }
    if (w <= 0) throw ParseError(lineno, "weight must be positive");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), w});
  }
  if (n < 0) throw ParseError(lineno, "missing 'p sp' header");
  if (static_cast<std::int64_t>(edges.size()) != m)
    throw ParseError(header_line, "header announces " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
  return WeightedGraph(static_cast<std::size_t>(n), std::move(edges));
}

WeightedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_graph(in);
}

void write_edges(std::ostream& out, const WeightedGraph& g, std::span<const EdgeId> ids) {
  out << "p sp " << g.num_vertices() << ' ' << ids.size() << '\n';
  for (EdgeId id : ids) {
    const Edge& e = g.edge(id);
    out << "e " << e.u << ' ' << e.v << ' ' << format_weight(e.w) << '\n';
  }
}

void write_graph(std::ostream& out, const WeightedGraph& g) {
  std::vector<EdgeId> all(g.num_edges());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<EdgeId>(i);
  write_edges(out, g, all);
}

void save_edges(const std::string& path, const WeightedGraph& g, std::span<const EdgeId> ids) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  write_edges(out, g, ids);
}

void save_graph(const std::string& path, const WeightedGraph& g) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  write_graph(out, g);
}

bool match_edges(const WeightedGraph& host, const WeightedGraph& part, std::vector<EdgeId>& ids) {
  ids.clear();
  if (part.num_vertices() > host.num_vertices()) return false;
  std::unordered_map<std::uint64_t, EdgeId> index;
  index.reserve(host.num_edges() * 2);
  for (std::size_t i = 0; i < host.num_edges(); ++i) {
    const Edge& e = host.edge(static_cast<EdgeId>(i));
    index.emplace(pair_key(e.u, e.v), static_cast<EdgeId>(i));
  }
  for (const Edge& e : part.edges()) {
    auto it = index.find(pair_key(e.u, e.v));
    if (it == index.end() || host.edge(it->second).w != e.w) return false;
    ids.push_back(it->second);
  }
  return true;
}

}  // namespace spanwright
