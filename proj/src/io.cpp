#include "racg/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace racg::io {

using nlohmann::json;

std::string_view to_string(Format f) {
  switch (f) {
    case Format::EdgeList: return "edge-list";
    case Format::Json: return "json";
    case Format::Dot: return "dot";
  }
  return "edge-list";
}

std::optional<Format> parse_format_name(std::string_view name) {
  if (name == "edge-list") return Format::EdgeList;
  if (name == "json") return Format::Json;
  if (name == "dot") return Format::Dot;
  return std::nullopt;
}

Format format_for_path(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (ext == ".json") return Format::Json;
  if (ext == ".dot" || ext == ".gv") return Format::Dot;
  return Format::EdgeList;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

void add_vertex(std::vector<std::string>& vs, std::set<std::string>& seen, const std::string& v) {
  if (seen.insert(v).second) vs.push_back(v);
}

InputDocument parse_edge_list(std::string_view text) {
  InputDocument doc;
  doc.format = Format::EdgeList;
  std::set<std::string> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::pair<std::string, int>> tokens;
    for (std::size_t i = 0; i < line.size();) {
      if (is_space(line[i])) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !is_space(line[j])) ++j;
      tokens.emplace_back(std::string(line.substr(i, j - i)), static_cast<int>(i) + 1);
      i = j;
    }
    if (tokens.size() == 1) {
      throw ParseError(line_no, tokens[0].second + static_cast<int>(tokens[0].first.size()),
                       "expected a second vertex label");
    }
    if (tokens.size() > 2) {
      throw ParseError(line_no, tokens[2].second, "expected end of line after two labels");
    }
    if (tokens.size() == 2) {
      if (tokens[0].first == "v") {
        add_vertex(doc.vertices, seen, tokens[1].first);
      } else {
        add_vertex(doc.vertices, seen, tokens[0].first);
        add_vertex(doc.vertices, seen, tokens[1].first);
        doc.edges.emplace_back(tokens[0].first, tokens[1].first);
      }
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  return doc;
}

std::pair<int, int> line_col(std::string_view text, std::size_t offset) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

InputDocument parse_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(line, col, "well-formed JSON");
  }
  // nlohmann does not keep element positions; structural errors point at the
  // start of the document.
  auto fail = [](const std::string& what) -> ParseError { return ParseError(1, 1, what); };
  if (!j.is_object()) throw fail("a JSON object");
  InputDocument doc;
  doc.format = Format::Json;
  std::set<std::string> seen;
  if (!j.contains("vertices") || !j["vertices"].is_array()) throw fail("a \"vertices\" array");
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw fail("string vertex labels");
    doc.vertices.push_back(v.get<std::string>());
  }
  if (!j.contains("edges") || !j["edges"].is_array()) throw fail("an \"edges\" array");
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw fail("edges as pairs of string labels");
    }
    doc.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw fail("a string \"name\"");
    doc.name = j["name"].get<std::string>();
  }
  if (j.contains("colors")) {
    if (!j["colors"].is_object()) throw fail("a \"colors\" object");
    for (const auto& [k, v] : j["colors"].items()) {
      if (!v.is_string() || (v != "black" && v != "white")) {
        throw fail("colour \"black\" or \"white\" for vertex " + k);
      }
      doc.colors[k] = v.get<std::string>();
    }
  }
  return doc;
}

// Minimal DOT reader: undirected graphs, node and edge statements, attribute
// lists skipped.
class DotReader {
 public:
  explicit DotReader(std::string_view text) : text_(text) {}

  InputDocument read() {
    InputDocument doc;
    doc.format = Format::Dot;
    Token t = next();
    if (t.kind == Kind::Id && lower(t.text) == "strict") t = next();
    if (t.kind != Kind::Id || lower(t.text) != "graph") {
      if (t.kind == Kind::Id && lower(t.text) == "digraph") {
        throw ParseError(t.line, t.col, "an undirected 'graph' (digraphs are not supported)");
      }
      throw ParseError(t.line, t.col, "'graph'");
    }
    t = next();
    if (t.kind == Kind::Id) {
      doc.name = t.text;
      t = next();
    }
    expect(t, Kind::LBrace, "'{'");
    std::set<std::string> seen;
    for (;;) {
      t = next();
      if (t.kind == Kind::RBrace) break;
      if (t.kind == Kind::Semi) continue;
      if (t.kind != Kind::Id) throw ParseError(t.line, t.col, "a node identifier or '}'");
      std::string kw = lower(t.text);
      if (!t.quoted && kw == "subgraph") {
        throw ParseError(t.line, t.col, "node or edge statement (subgraphs are not supported)");
      }
      if (!t.quoted && (kw == "node" || kw == "edge" || kw == "graph")) {
        Token a = next();
        expect(a, Kind::LBracket, "'['");
        skip_attributes();
        continue;
      }
      Token after = next();
      if (after.kind == Kind::Equals) {
        expect(next(), Kind::Id, "an attribute value");
        continue;
      }
      if (after.kind == Kind::Colon) {
        throw ParseError(after.line, after.col, "node identifier without ports");
      }
      std::vector<std::string> chain{t.text};
      while (after.kind == Kind::EdgeOp) {
        Token n = next();
        expect(n, Kind::Id, "a node identifier after '--'");
        chain.push_back(n.text);
        after = next();
      }
      if (after.kind == Kind::Arrow) {
        throw ParseError(after.line, after.col, "'--' (directed edges are not supported)");
      }
      if (after.kind == Kind::LBracket) {
        skip_attributes();
        after = next();
      }
      for (const auto& v : chain) add_vertex(doc.vertices, seen, v);
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) doc.edges.emplace_back(chain[i], chain[i + 1]);
      if (after.kind == Kind::RBrace) break;
      if (after.kind != Kind::Semi) pushback(after);
    }
    Token tail = next();
    if (tail.kind != Kind::End) throw ParseError(tail.line, tail.col, "end of input after '}'");
    return doc;
  }

 private:
  enum class Kind { Id, LBrace, RBrace, LBracket, RBracket, Semi, Comma, Equals, Colon, EdgeOp, Arrow, End };
  struct Token {
    Kind kind;
    std::string text;
    int line;
    int col;
    bool quoted = false;
  };

  static std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
  }

  void expect(const Token& t, Kind k, const std::string& what) {
    if (t.kind != k) throw ParseError(t.line, t.col, what);
  }

  void pushback(Token t) { pending_ = std::move(t); }

  void skip_attributes() {
    for (;;) {
      Token t = next();
      if (t.kind == Kind::RBracket) return;
      if (t.kind == Kind::End) throw ParseError(t.line, t.col, "']'");
    }
  }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_blank() {
    for (;;) {
      if (pos_ >= text_.size()) return;
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < text_.size() && peek() != '\n') advance();
      } else if (c == '#' && col_ == 1) {
        while (pos_ < text_.size() && peek() != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        int l = line_, cl = col_;
        advance();
        advance();
        while (pos_ < text_.size() && !(peek() == '*' && peek(1) == '/')) advance();
        if (pos_ >= text_.size()) throw ParseError(l, cl, "'*/' closing the comment");
        advance();
        advance();
      } else {
        return;
      }
    }
  }

  Token next() {
    if (pending_) {
      Token t = std::move(*pending_);
      pending_.reset();
      return t;
    }
    skip_blank();
    int l = line_, c = col_;
    if (pos_ >= text_.size()) return {Kind::End, "", l, c};
    char ch = peek();
    auto single = [&](Kind k) {
      advance();
      return Token{k, std::string(1, ch), l, c};
    };
    switch (ch) {
      case '{': return single(Kind::LBrace);
      case '}': return single(Kind::RBrace);
      case '[': return single(Kind::LBracket);
      case ']': return single(Kind::RBracket);
      case ';': return single(Kind::Semi);
      case ',': return single(Kind::Comma);
      case '=': return single(Kind::Equals);
      case ':': return single(Kind::Colon);
      default: break;
    }
    if (ch == '-' && peek(1) == '-') {
      advance();
      advance();
      return {Kind::EdgeOp, "--", l, c};
    }
    if (ch == '-' && peek(1) == '>') {
      advance();
      advance();
      return {Kind::Arrow, "->", l, c};
    }
    if (ch == '"') {
      advance();
      std::string s;
      while (pos_ < text_.size() && peek() != '"') {
        if (peek() == '\\' && peek(1) == '"') advance();
        s += peek();
        advance();
      }
      if (pos_ >= text_.size()) throw ParseError(l, c, "closing '\"'");
      advance();
      return {Kind::Id, s, l, c, true};
    }
    if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '.' ||
        static_cast<unsigned char>(ch) >= 0x80) {
      std::string s;
      while (pos_ < text_.size()) {
        char d = peek();
        if (!(std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '.' ||
              static_cast<unsigned char>(d) >= 0x80)) {
          break;
        }
        s += d;
        advance();
      }
      return {Kind::Id, s, l, c};
    }
    if (ch == '<') throw ParseError(l, c, "an identifier (HTML labels are not supported)");
    throw ParseError(l, c, "an identifier or punctuation");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  std::optional<Token> pending_;
};

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

InputDocument parse_document(std::string_view text, Format format) {
  switch (format) {
    case Format::EdgeList: return parse_edge_list(text);
    case Format::Json: return parse_json(text);
    case Format::Dot: return DotReader(text).read();
  }
  return parse_edge_list(text);
}

SimplicialGraph to_graph(const InputDocument& doc) {
  return SimplicialGraph::build(doc.vertices, doc.edges);
}

SimplicialGraph parse_input(std::string_view text, Format format) {
  return to_graph(parse_document(text, format));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::PreconditionViolated, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

InputDocument load_document(const std::filesystem::path& path, std::optional<Format> format) {
  return parse_document(read_file(path), format.value_or(format_for_path(path)));
}

SimplicialGraph load_graph(const std::filesystem::path& path, std::optional<Format> format) {
  return to_graph(load_document(path, format));
}

std::string serialize(const SimplicialGraph& g, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::EdgeList: {
      for (const auto& l : g.labels()) {
        bool bad = l.empty() || l.find('#') != std::string::npos ||
                   std::any_of(l.begin(), l.end(), [](char c) {
                     return std::isspace(static_cast<unsigned char>(c)) != 0;
                   });
        if (bad) {
          throw Error(ErrorCode::PreconditionViolated,
                      "label '" + l + "' cannot be written as an edge list");
        }
      }
      for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 0) out << "v " << g.label(v) << "\n";
      }
      for (auto [a, b] : g.edges()) {
        // "v x" would read back as a vertex declaration.
        if (g.label(a) == "v") std::swap(a, b);
        out << g.label(a) << " " << g.label(b) << "\n";
      }
      break;
    }
    case Format::Json: {
      json j;
      j["vertices"] = g.labels();
      j["edges"] = json::array();
      for (auto [a, b] : g.edges()) j["edges"].push_back({g.label(a), g.label(b)});
      out << j.dump(2) << "\n";
      break;
    }
    case Format::Dot: {
      out << "graph G {\n";
      for (const auto& l : g.labels()) out << "  " << dot_quote(l) << ";\n";
      for (auto [a, b] : g.edges()) {
        out << "  " << dot_quote(g.label(a)) << " -- " << dot_quote(g.label(b)) << ";\n";
      }
      out << "}\n";
      break;
    }
  }
  return out.str();
}

}  // namespace racg::io
