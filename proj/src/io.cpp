#include "ahncut/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ahncut/errors.hpp"

namespace ahncut {

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("failed writing " + path);
}

namespace {

// Whitespace tokenizer with '#' comments and 1-based line tracking.
struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (size_t hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line;
    line.number = number;
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

long parse_int(const std::string& tok, int line) {
  errno = 0;
  char* end = nullptr;
  long v = std::strtol(tok.c_str(), &end, 10);
  if (errno != 0 || end == tok.c_str() || *end != '\0')
    throw ParseError("expected an integer, got '" + tok + "'", line);
  return v;
}

double parse_double(const std::string& tok, int line) {
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(tok.c_str(), &end);
  if (errno != 0 || end == tok.c_str() || *end != '\0')
    throw ParseError("expected a number, got '" + tok + "'", line);
  return v;
}

void expect_tokens(const Line& line, size_t count) {
  if (line.tokens.size() != count)
    throw ParseError("'" + line.tokens[0] + "' expects " + std::to_string(count - 1) + " fields",
                     line.number);
}

}  // namespace

HierarchicalNetwork parse_network(const std::string& text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty network file");
  const Line& magic = lines[0];
  if (magic.tokens.size() != 2 || magic.tokens[0] != "AHN" || magic.tokens[1] != "1")
    throw ParseError("expected 'AHN 1' header", magic.number);

  int num_labels = -1;
  int num_levels = -1;
  std::vector<int> sizes;          // -1 while undeclared
  std::vector<std::vector<bool>> unary_seen;
  struct PendingUnary {
    int level, var, line;
    std::vector<double> costs;
  };
  std::vector<PendingUnary> unaries;
  struct PendingEdge {
    int level, u, v, line;
    double lambda;
  };
  std::vector<PendingEdge> edges;
  struct PendingLink {
    int level, parent, child, line;
    double weight;
  };
  std::vector<PendingLink> links;

  auto check_level = [&](long h, int line) -> int {
    if (num_levels < 0) throw ParseError("LEVELS must come before this line", line);
    if (h < 1 || h > num_levels)
      throw ParseError("level " + std::to_string(h) + " out of range", line);
    if (sizes[h - 1] < 0)
      throw ParseError("VARS for level " + std::to_string(h) + " must come before this line", line);
    return static_cast<int>(h - 1);
  };
  auto check_var = [&](int level, long i, int line) -> int {
    if (i < 0 || i >= sizes[level])
      throw ParseError("variable index " + std::to_string(i) + " out of range on level " +
                           std::to_string(level + 1),
                       line);
    return static_cast<int>(i);
  };

  for (size_t n = 1; n < lines.size(); ++n) {
    const Line& line = lines[n];
    const std::string& kw = line.tokens[0];
    if (kw == "LABELS") {
      expect_tokens(line, 2);
      if (num_labels >= 0) throw ParseError("duplicate LABELS line", line.number);
      long v = parse_int(line.tokens[1], line.number);
      if (v < 1) throw ParseError("LABELS must be >= 1", line.number);
      num_labels = static_cast<int>(v);
    } else if (kw == "LEVELS") {
      expect_tokens(line, 2);
      if (num_levels >= 0) throw ParseError("duplicate LEVELS line", line.number);
      long v = parse_int(line.tokens[1], line.number);
      if (v < 1) throw ParseError("LEVELS must be >= 1", line.number);
      num_levels = static_cast<int>(v);
      sizes.assign(num_levels, -1);
      unary_seen.resize(num_levels);
    } else if (kw == "VARS") {
      expect_tokens(line, 3);
      if (num_levels < 0) throw ParseError("LEVELS must come before VARS", line.number);
      long h = parse_int(line.tokens[1], line.number);
      if (h < 1 || h > num_levels)
        throw ParseError("level " + std::to_string(h) + " out of range", line.number);
      if (sizes[h - 1] >= 0)
        throw ParseError("duplicate VARS line for level " + std::to_string(h), line.number);
      long count = parse_int(line.tokens[2], line.number);
      if (count < 1) throw ParseError("VARS count must be >= 1", line.number);
      sizes[h - 1] = static_cast<int>(count);
      unary_seen[h - 1].assign(count, false);
    } else if (kw == "UNARY") {
      if (num_labels < 0) throw ParseError("LABELS must come before UNARY", line.number);
      if (line.tokens.size() < 3) throw ParseError("'UNARY' expects a level and a variable", line.number);
      int level = check_level(parse_int(line.tokens[1], line.number), line.number);
      int var = check_var(level, parse_int(line.tokens[2], line.number), line.number);
      size_t want = level == 0 ? num_labels : num_labels + 1;
      if (line.tokens.size() != 3 + want)
        throw ParseError("UNARY on level " + std::to_string(level + 1) + " expects " +
                             std::to_string(want) + " costs",
                         line.number);
      if (unary_seen[level][var])
        throw ParseError("duplicate UNARY line for level " + std::to_string(level + 1) + " var " +
                             std::to_string(var),
                         line.number);
      unary_seen[level][var] = true;
      PendingUnary u{level, var, line.number, {}};
      for (size_t t = 3; t < line.tokens.size(); ++t)
        u.costs.push_back(parse_double(line.tokens[t], line.number));
      unaries.push_back(std::move(u));
    } else if (kw == "EDGE") {
      expect_tokens(line, 5);
      int level = check_level(parse_int(line.tokens[1], line.number), line.number);
      int u = check_var(level, parse_int(line.tokens[2], line.number), line.number);
      int v = check_var(level, parse_int(line.tokens[3], line.number), line.number);
      double lambda = parse_double(line.tokens[4], line.number);
      if (!(lambda >= 0.0)) throw ParseError("edge strength must be >= 0", line.number);
      edges.push_back({level, u, v, line.number, lambda});
    } else if (kw == "LINK") {
      expect_tokens(line, 5);
      int level = check_level(parse_int(line.tokens[1], line.number), line.number);
      if (level == 0) throw ParseError("LINK cannot target the base level", line.number);
      if (sizes[level - 1] < 0)
        throw ParseError("VARS for level " + std::to_string(level) + " must come before this line",
                         line.number);
      int parent = check_var(level, parse_int(line.tokens[2], line.number), line.number);
      int child = check_var(level - 1, parse_int(line.tokens[3], line.number), line.number);
      double weight = parse_double(line.tokens[4], line.number);
      if (!(weight >= 0.0)) throw ParseError("link weight must be >= 0", line.number);
      links.push_back({level, parent, child, line.number, weight});
    } else {
      throw ParseError("unknown keyword '" + kw + "'", line.number);
    }
  }

  if (num_labels < 0) throw ParseError("missing LABELS line");
  if (num_levels < 0) throw ParseError("missing LEVELS line");
  for (int h = 0; h < num_levels; ++h)
    if (sizes[h] < 0) throw ParseError("missing VARS line for level " + std::to_string(h + 1));

  try {
    NetworkBuilder builder(num_labels, num_levels);
    for (int h = 0; h < num_levels; ++h) builder.set_level_size(h, sizes[h]);
    for (auto& u : unaries) builder.set_unary(u.level, u.var, std::move(u.costs));
    for (const auto& e : edges) builder.add_edge(e.level, e.u, e.v, e.lambda);
    for (const auto& l : links) builder.add_link(l.level, l.parent, l.child, l.weight);
    return builder.build();
  } catch (const StructureError& err) {
    throw ParseError(err.what());
  }
}

std::string write_network(const HierarchicalNetwork& net) {
  std::ostringstream out;
  out << "AHN 1\n";
  out << "LABELS " << net.num_labels() << "\n";
  out << "LEVELS " << net.num_levels() << "\n";
  for (int h = 0; h < net.num_levels(); ++h)
    out << "VARS " << (h + 1) << " " << net.level_size(h) << "\n";
  for (int h = 0; h < net.num_levels(); ++h) {
    const Level& lv = net.level(h);
    for (int i = 0; i < lv.num_vars; ++i) {
      out << "UNARY " << (h + 1) << " " << i;
      for (double c : lv.unary[i]) out << " " << format_number(c);
      out << "\n";
    }
  }
  for (int h = 0; h < net.num_levels(); ++h)
    for (const PottsEdge& e : net.level(h).edges)
      out << "EDGE " << (h + 1) << " " << e.u << " " << e.v << " " << format_number(e.lambda)
          << "\n";
  for (int h = 1; h < net.num_levels(); ++h)
    for (const InterLevelLink& l : net.level(h).links)
      out << "LINK " << (h + 1) << " " << l.parent << " " << l.child << " "
          << format_number(l.weight) << "\n";
  return out.str();
}

HierarchicalNetwork load_network(const std::string& path) {
  return parse_network(read_text_file(path));
}

void save_network(const HierarchicalNetwork& net, const std::string& path) {
  write_text_file(path, write_network(net));
}

std::vector<std::vector<Label>> parse_labeling_rows(const std::string& text) {
  std::vector<std::vector<Label>> rows;
  for (const Line& line : tokenize(text)) {
    std::vector<Label> row;
    for (const std::string& tok : line.tokens) {
      if (tok == "F") {
        row.push_back(Label::free());
      } else {
        long v = parse_int(tok, line.number);
        if (v < 0) throw ParseError("label index must be >= 0", line.number);
        row.push_back(Label::base(static_cast<int>(v)));
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty labeling file");
  return rows;
}

std::string write_labeling(const Labeling& x) {
  std::ostringstream out;
  for (const auto& row : x.levels) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out << " ";
      out << to_string(row[i]);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace ahncut
