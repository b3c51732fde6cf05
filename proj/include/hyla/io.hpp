#pragma once

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyla/eigenmap_types.hpp"
#include "hyla/hypergraph.hpp"

namespace hyla {

struct ParseError : std::runtime_error {
  ParseError(const std::string& file, int line, const std::string& what)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + what),
        line_number(line) {}
  int line_number;
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

inline std::optional<long> parse_long(const std::string& s) {
  long v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

inline std::optional<double> parse_double(const std::string& s) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) return std::nullopt;
    return v;
  } catch (...) {
    return std::nullopt;
  }
}

}  // namespace detail

// Hypergraph file format. Header: "uniform <m+1> <n> <directed|undirected>",
// then one hyperedge per line as whitespace-separated 1-based vertex ids
// (directed: the last id is the head), optionally followed by "w=<float>".
inline Hypergraph parse_hypergraph(std::istream& in, const std::string& name) {
  std::string line;
  int lineno = 0;
  // header
  do {
    if (!std::getline(in, line)) throw ParseError(name, lineno, "missing header");
    ++lineno;
  } while (detail::split_ws(line).empty());
  const auto head = detail::split_ws(line);
  if (head.size() != 4 || head[0] != "uniform")
    throw ParseError(name, lineno,
                     "malformed header, expected 'uniform <m+1> <n> <directed|undirected>'");
  const auto esize = detail::parse_long(head[1]);
  const auto nv = detail::parse_long(head[2]);
  if (!esize || *esize < 2) throw ParseError(name, lineno, "bad edge size");
  if (!nv || *nv < 1) throw ParseError(name, lineno, "bad vertex count");
  bool directed = false;
  if (head[3] == "directed") {
    directed = true;
  } else if (head[3] != "undirected") {
    throw ParseError(name, lineno, "direction must be 'directed' or 'undirected'");
  }
  Hypergraph g(static_cast<int>(*nv), static_cast<int>(*esize), directed);

  while (std::getline(in, line)) {
    ++lineno;
    auto toks = detail::split_ws(line);
    if (toks.empty()) continue;
    double weight = 1.0;
    if (toks.back().rfind("w=", 0) == 0) {
      const auto w = detail::parse_double(toks.back().substr(2));
      if (!w || !(*w >= 0.0))
        throw ParseError(name, lineno, "bad weight '" + toks.back() + "'");
      weight = *w;
      toks.pop_back();
    }
    if (static_cast<long>(toks.size()) != *esize)
      throw ParseError(name, lineno,
                       "expected " + std::to_string(*esize) + " vertex ids, got " +
                           std::to_string(toks.size()));
    std::vector<int> verts;
    for (const auto& t : toks) {
      const auto v = detail::parse_long(t);
      if (!v) throw ParseError(name, lineno, "bad vertex id '" + t + "'");
      if (*v < 1 || *v > *nv)
        throw ParseError(name, lineno,
                         "vertex id " + t + " out of range [1, " +
                             std::to_string(*nv) + "]");
      verts.push_back(static_cast<int>(*v) - 1);  // 1-based file, 0-based internal
    }
    {
      auto sorted = verts;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ParseError(name, lineno, "duplicate vertex in edge");
    }
    try {
      if (directed) {
        const int hd = verts.back();
        verts.pop_back();
        g.add_directed_edge(std::move(verts), hd, weight);
      } else {
        g.add_edge(std::move(verts), weight);
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(name, lineno, e.what());
    }
  }
  return g;
}

inline Hypergraph read_hypergraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_hypergraph(in, path);
}

/// Canonical form: edges sorted, vertices ascending within each line.
/// Weights are emitted (17 significant digits) only when any differ from 1.
inline void write_hypergraph(const Hypergraph& g, std::ostream& out) {
  out << "uniform " << g.edge_size() << ' ' << g.n() << ' '
      << (g.directed() ? "directed" : "undirected") << '\n';
  const bool weights = g.weighted();
  char buf[64];
  for (std::size_t i : g.canonical_order()) {
    const auto& e = g.edge(i);
    bool first = true;
    for (int v : e.vertices) {
      out << (first ? "" : " ") << v + 1;
      first = false;
    }
    if (g.directed()) out << ' ' << e.head + 1;
    if (weights) {
      std::snprintf(buf, sizeof buf, "%.17g", g.weight(i));
      out << " w=" << buf;
    }
    out << '\n';
  }
}

inline void write_hypergraph(const Hypergraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_hypergraph(g, out);
}

struct ScholpResult {
  Hypergraph hypergraph;            // 3-uniform, duplicates kept (multiset)
  std::vector<long> original_ids;   // new vertex id -> source vertex id
  std::size_t simplices_total = 0;  // all simplices in the file
  std::size_t kept = 0;             // size-3 simplices retained
};

// ScHoLP-style simplicial dataset: <prefix>-nverts.txt lists simplex sizes,
// <prefix>-simplices.txt the flattened vertex stream. Only simplices with
// exactly 3 distinct vertices are kept (with multiplicity); vertex ids are
// compacted in ascending source order. A <prefix>-times.txt file is ignored.
inline ScholpResult read_scholp(const std::string& prefix) {
  const std::string nverts_path = prefix + "-nverts.txt";
  const std::string simplices_path = prefix + "-simplices.txt";
  std::ifstream nin(nverts_path);
  if (!nin) throw std::runtime_error("cannot open '" + nverts_path + "'");
  std::ifstream sin(simplices_path);
  if (!sin) throw std::runtime_error("cannot open '" + simplices_path + "'");

  std::vector<long> sizes;
  long v = 0;
  while (nin >> v) sizes.push_back(v);
  std::vector<long> flat;
  while (sin >> v) flat.push_back(v);

  std::size_t need = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1)
      throw ParseError(nverts_path, static_cast<int>(i) + 1,
                       "simplex size must be positive");
    need += static_cast<std::size_t>(sizes[i]);
  }
  if (need != flat.size())
    throw std::runtime_error(prefix + ": nverts sums to " + std::to_string(need) +
                             " but simplices stream has " +
                             std::to_string(flat.size()) + " entries");

  std::vector<std::vector<long>> kept;
  std::size_t pos = 0;
  for (long s : sizes) {
    std::vector<long> simplex(flat.begin() + pos, flat.begin() + pos + s);
    pos += static_cast<std::size_t>(s);
    std::sort(simplex.begin(), simplex.end());
    simplex.erase(std::unique(simplex.begin(), simplex.end()), simplex.end());
    if (simplex.size() == 3) kept.push_back(std::move(simplex));
  }

  std::vector<long> ids;
  for (const auto& s : kept) ids.insert(ids.end(), s.begin(), s.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::map<long, int> remap;
  for (std::size_t i = 0; i < ids.size(); ++i) remap[ids[i]] = (int)i;

  Hypergraph g(std::max<std::size_t>(ids.size(), 3), 3, false);
  for (const auto& s : kept)
    g.add_edge({remap[s[0]], remap[s[1]], remap[s[2]]});
  return ScholpResult{std::move(g), std::move(ids), sizes.size(), kept.size()};
}

// CSV dataset with a header row: every column except `label_col` must be
// numeric; labels are integer-encoded in first-appearance order.
inline Dataset read_csv_dataset(const std::string& path,
                                const std::string& label_col) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");

  auto split_csv = [](const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
      if (c == ',') {
        out.push_back(cur);
        cur.clear();
      } else if (c != '\r') {
        cur += c;
      }
    }
    out.push_back(cur);
    return out;
  };

  std::string line;
  if (!std::getline(in, line)) throw ParseError(path, 0, "empty file");
  const auto header = split_csv(line);
  int label_idx = -1;
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == label_col) label_idx = (int)i;
  if (!label_col.empty() && label_idx < 0)
    throw ParseError(path, 1, "label column '" + label_col + "' not found");

  std::vector<std::vector<double>> rows;
  std::vector<std::string> raw_labels;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto cells = split_csv(line);
    if (cells.size() != header.size())
      throw ParseError(path, lineno,
                       "row has " + std::to_string(cells.size()) +
                           " cells, header has " + std::to_string(header.size()));
    std::vector<double> row;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if ((int)i == label_idx) {
        raw_labels.push_back(cells[i]);
        continue;
      }
      const auto val = detail::parse_double(cells[i]);
      if (!val)
        throw ParseError(path, lineno,
                         "non-numeric value '" + cells[i] + "' in column '" +
                             header[i] + "'");
      row.push_back(*val);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(path, lineno, "no data rows");
  if (rows[0].empty()) throw ParseError(path, 1, "no feature columns");

  Dataset ds;
  ds.features.resize((Eigen::Index)rows.size(), (Eigen::Index)rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      ds.features((Eigen::Index)i, (Eigen::Index)j) = rows[i][j];
  if (label_idx >= 0) {
    ds.has_labels = true;
    std::map<std::string, int> encoding;
    for (const auto& s : raw_labels) {
      auto it = encoding.find(s);
      if (it == encoding.end()) {
        it = encoding.emplace(s, (int)ds.label_names.size()).first;
        ds.label_names.push_back(s);
      }
      ds.labels.push_back(it->second);
    }
  }
  return ds;
}

}  // namespace hyla
