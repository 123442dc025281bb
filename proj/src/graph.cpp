#include "isoclique/graph.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <unordered_map>

namespace isoclique {

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges,
                        std::vector<std::string> labels, LoadReport* report) {
  if (!labels.empty() && labels.size() != vertex_count) {
    throw std::invalid_argument("label count does not match vertex count");
  }
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  std::size_t loops = 0;
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw std::out_of_range("edge endpoint out of range");
    }
    if (u == v) {
      ++loops;
      continue;
    }
    normalized.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(normalized.begin(), normalized.end());
  auto last = std::unique(normalized.begin(), normalized.end());
  const std::size_t duplicates = static_cast<std::size_t>(normalized.end() - last);
  normalized.erase(last, normalized.end());
  if (report != nullptr) {
    report->self_loops += loops;
    report->duplicate_edges += duplicates;
  }

  Graph g;
  g.offsets_.assign(vertex_count + 1, 0);
  for (auto [u, v] : normalized) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t i = 0; i < vertex_count; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.neighbors_.resize(2 * normalized.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v): each row receives its smaller neighbors from
  // the second component pass and larger ones from the first, both ascending.
  for (auto [u, v] : normalized) g.neighbors_[cursor[v]++] = u;
  for (auto [u, v] : normalized) g.neighbors_[cursor[u]++] = v;
  g.labels_ = std::move(labels);
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  auto row = neighbors(u);
  check_vertex(v);
  return std::binary_search(row.begin(), row.end(), v);
}

std::string Graph::label(VertexId v) const {
  check_vertex(v);
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

constexpr bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Splits off the next whitespace-delimited token, advancing `rest`.
std::string_view next_token(std::string_view& rest) {
  std::size_t b = 0;
  while (b < rest.size() && is_space(rest[b])) ++b;
  std::size_t e = b;
  while (e < rest.size() && !is_space(rest[e])) ++e;
  auto tok = rest.substr(b, e - b);
  rest.remove_prefix(e);
  return tok;
}

class LabelTable {
 public:
  VertexId intern(std::string_view label) {
    auto [it, inserted] = ids_.try_emplace(std::string(label), static_cast<VertexId>(labels_.size()));
    if (inserted) labels_.emplace_back(label);
    return it->second;
  }

  std::size_t size() const { return labels_.size(); }
  std::vector<std::string> release() { return std::move(labels_); }

 private:
  std::unordered_map<std::string, VertexId> ids_;
  std::vector<std::string> labels_;
};

}  // namespace

Graph load_edge_list(std::istream& in, LoadReport* report) {
  LabelTable table;
  std::vector<Edge> edges;
  LoadReport local;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest = line;
    auto first = next_token(rest);
    if (first.empty()) continue;
    if (first.front() == '%') continue;
    if (first.front() == '#') {
      if (first == "#" && next_token(rest) == "vertex") {
        auto label = next_token(rest);
        if (label.empty()) throw ParseError(line_no, "vertex declaration without a label");
        table.intern(label);
      }
      continue;
    }
    auto second = next_token(rest);
    if (second.empty()) throw ParseError(line_no, "expected two vertex labels");
    ++local.data_lines;
    VertexId u = table.intern(first);
    VertexId v = table.intern(second);
    edges.emplace_back(u, v);
  }
  if (in.bad()) throw std::runtime_error("read error on edge-list stream");
  const std::size_t n = table.size();
  Graph g = Graph::from_edges(n, edges, table.release(), &local);
  if (report != nullptr) *report = local;
  return g;
}

Graph load_edge_list_file(const std::string& path, LoadReport* report) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return load_edge_list(in, report);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# vertices " << g.vertex_count() << '\n';
  out << "# edges " << g.edge_count() << '\n';
  for (VertexId v = 0; v < g.vertex_count(); ++v) out << "# vertex " << g.label(v) << '\n';
  for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

VertexSet intersect_with_neighbors(const Graph& g, std::span<const VertexId> s, VertexId v) {
  VertexSet out;
  for_each_common(s, g.neighbors(v), [&](std::size_t i, std::size_t) { out.push_back(s[i]); });
  return out;
}

std::size_t intersection_size(std::span<const VertexId> a, std::span<const VertexId> b) {
  std::size_t count = 0;
  for_each_common(a, b, [&](std::size_t, std::size_t) { ++count; });
  return count;
}

std::vector<std::uint32_t> induced_degrees(const Graph& g, std::span<const VertexId> p) {
  std::vector<std::uint32_t> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] = static_cast<std::uint32_t>(intersection_size(g.neighbors(p[i]), p));
  }
  return out;
}

bool is_valid_vertex_set(const Graph& g, std::span<const VertexId> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= g.vertex_count()) return false;
    if (i > 0 && s[i - 1] >= s[i]) return false;
  }
  return true;
}

}  // namespace isoclique
