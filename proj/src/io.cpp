#include "cactuskit/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "cactuskit/error.hpp"

namespace cactus {

namespace {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

// Non-blank, non-comment lines split on whitespace.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      if (i == raw.size()) break;
      if (line.tokens.empty() && raw[i] == '#') break;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
      line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void syntax(int line, const std::string& what) {
  fail(ErrorCode::SyntaxError, "line " + std::to_string(line) + ": " + what);
}

int to_int(std::string_view tok, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0) {
    syntax(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return value;
}

std::pair<Vertex, Vertex> edge_line(const Line& line) {
  if (line.tokens.size() != 3 || line.tokens[0] != "e") syntax(line.number, "expected 'e <u> <v>'");
  return {to_int(line.tokens[1], line.number), to_int(line.tokens[2], line.number)};
}

}  // namespace

Graph parse_graph_file(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) syntax(1, "missing 'p <n> <m>' header");
  const Line& head = lines.front();
  if (head.tokens.size() != 3 || head.tokens[0] != "p") syntax(head.number, "expected 'p <n> <m>'");
  const int n = to_int(head.tokens[1], head.number);
  const int m = to_int(head.tokens[2], head.number);
  if (static_cast<int>(lines.size()) - 1 != m) {
    syntax(lines.size() > static_cast<std::size_t>(m) + 1 ? lines[static_cast<std::size_t>(m) + 1].number : lines.back().number,
           "header declares " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(static_cast<std::size_t>(m));
  for (std::size_t i = 1; i < lines.size(); ++i) pairs.push_back(edge_line(lines[i]));
  return build_graph(n, pairs);
}

std::string write_graph_file(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.n() << ' ' << g.m() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

SpanningTree parse_tree_file(std::string_view text, const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const auto& line : tokenize(text)) pairs.push_back(edge_line(line));
  return validate_spanning_tree(g, pairs);
}

std::string write_tree_file(const SpanningTree& t) {
  std::ostringstream out;
  for (EdgeId e : t.tree_edge_ids()) {
    out << "e " << t.host().edge(e).u << ' ' << t.host().edge(e).v << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file_atomic(const std::filesystem::path& path, std::string_view text) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::IoError, "cannot write " + tmp.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) fail(ErrorCode::IoError, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace cactus
