#include "gdd/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace gdd {

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool eof() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    advance();
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      advance();
      return true;
    }
    return false;
  }

  std::string word() {
    skip_ws();
    const size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      advance();
    if (pos_ == start) fail("expected an identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string quoted() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '"') fail("expected '\"'");
    advance();
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      out += text_[pos_];
      advance();
    }
    if (pos_ >= text_.size()) fail("unterminated string");
    advance();
    return out;
  }

  long long integer() {
    skip_ws();
    const size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) advance();
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      advance();
    if (pos_ == start) fail("expected an integer");
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  // a label token: up to the next delimiter
  std::string label_token() {
    skip_ws();
    const size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           std::string(",;:]}").find(text_[pos_]) == std::string::npos)
      advance();
    if (pos_ == start) fail("expected a label");
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col_);
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

}  // namespace

std::vector<GddDocEntry> parse_gdd_file(std::string_view text) {
  Lexer lex(text);
  std::vector<GddDocEntry> out;
  while (!lex.eof()) {
    const std::string kw = lex.word();
    if (kw != "gdd") lex.fail("expected 'gdd'");
    GddDocEntry entry{lex.quoted(),
                      Gdd(ParamOrder::finite(3), {Label::one(ParamOrder::finite(3))}, {}),
                      ""};
    lex.expect('{');

    std::optional<ParamOrder> order;
    std::optional<std::vector<std::string>> vertex_tokens;
    std::vector<std::tuple<int, int, std::string>> edge_tokens;
    bool saw_edges = false;

    while (!lex.accept('}')) {
      const std::string key = lex.word();
      lex.expect('=');
      if (key == "order") {
        if (lex.peek() == 'g') {
          if (lex.word() != "generic") lex.fail("expected 'generic' or an integer");
          order = ParamOrder::generic();
        } else {
          const long long n = lex.integer();
          if (n < 3) lex.fail("parameter order must be >= 3 or generic");
          order = ParamOrder::finite(static_cast<int>(n));
        }
      } else if (key == "vertices") {
        lex.expect('[');
        std::vector<std::string> toks;
        if (!lex.accept(']')) {
          do {
            toks.push_back(lex.label_token());
          } while (lex.accept(','));
          lex.expect(']');
        }
        vertex_tokens = std::move(toks);
      } else if (key == "edges") {
        lex.expect('{');
        saw_edges = true;
        if (!lex.accept('}')) {
          do {
            if (lex.peek() == '}') break;  // trailing comma
            lex.expect('(');
            const long long i = lex.integer();
            lex.expect(',');
            const long long j = lex.integer();
            lex.expect(')');
            lex.expect(':');
            edge_tokens.push_back({static_cast<int>(i), static_cast<int>(j),
                                   lex.label_token()});
          } while (lex.accept(','));
          lex.expect('}');
        }
      } else if (key == "constraint") {
        entry.constraint = lex.quoted();
      } else {
        lex.fail("unknown key '" + key + "'");
      }
      lex.expect(';');
    }

    if (!order) lex.fail("missing 'order'");
    if (!vertex_tokens || vertex_tokens->empty()) lex.fail("missing 'vertices'");
    (void)saw_edges;

    std::vector<Label> diag;
    for (const std::string& t : *vertex_tokens) {
      const auto l = Label::parse(t, *order);
      if (!l) lex.fail("bad label '" + t + "'");
      diag.push_back(*l);
    }
    std::vector<std::pair<Gdd::Edge, Label>> edges;
    for (const auto& [i, j, t] : edge_tokens) {
      const auto l = Label::parse(t, *order);
      if (!l) lex.fail("bad label '" + t + "'");
      if (l->is_one()) lex.fail("edge (" + std::to_string(i) + "," +
                                std::to_string(j) + ") declared with label 1");
      if (i < 1 || j < 1 || i > static_cast<long long>(diag.size()) ||
          j > static_cast<long long>(diag.size()) || i == j)
        lex.fail("edge endpoints out of range");
      edges.push_back({{static_cast<int>(i - 1), static_cast<int>(j - 1)}, *l});
    }
    entry.g = Gdd(*order, std::move(diag), std::move(edges));
    out.push_back(std::move(entry));
  }
  return out;
}

std::string print_gdd_file(const std::vector<GddDocEntry>& entries) {
  std::ostringstream os;
  for (const GddDocEntry& e : entries) {
    os << "gdd \"" << e.tag << "\" {\n";
    os << "  order = ";
    if (e.g.order().is_generic())
      os << "generic";
    else
      os << e.g.order().value();
    os << ";\n  vertices = [";
    for (int i = 0; i < e.g.rank(); ++i)
      os << (i ? ", " : "") << e.g.vertex(i).str();
    os << "];\n  edges = {";
    bool first = true;
    for (const auto& [edge, l] : e.g.edges()) {
      os << (first ? "" : ",") << " (" << edge.first + 1 << "," << edge.second + 1
         << "): " << l.str();
      first = false;
    }
    os << (first ? "" : " ") << "};\n";
    if (!e.constraint.empty()) os << "  constraint = \"" << e.constraint << "\";\n";
    os << "}\n";
  }
  return os.str();
}

std::vector<GddDocEntry> load_gdd_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GddError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_gdd_file(ss.str());
}

void save_gdd_file(const std::string& path, const std::vector<GddDocEntry>& entries) {
  std::ofstream out(path);
  if (!out) throw GddError("cannot write " + path);
  out << print_gdd_file(entries);
}

std::string render_dot(const std::vector<GddDocEntry>& entries) {
  std::ostringstream os;
  int k = 0;
  for (const GddDocEntry& e : entries) {
    std::string name = e.tag.empty() ? "gdd" + std::to_string(k) : e.tag;
    for (char& c : name)
      if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
    os << "graph \"" << (e.tag.empty() ? name : e.tag) << "\" {\n";
    os << "  node [shape=circle];\n";
    for (int i = 0; i < e.g.rank(); ++i)
      os << "  v" << i + 1 << " [label=\"" << e.g.vertex(i).str() << "\"];\n";
    for (const auto& [edge, l] : e.g.edges())
      os << "  v" << edge.first + 1 << " -- v" << edge.second + 1 << " [label=\""
         << l.str() << "\"];\n";
    os << "}\n";
    ++k;
  }
  return os.str();
}

std::vector<CatalogEntry> to_catalog(const std::vector<GddDocEntry>& entries,
                                     const std::string& source) {
  std::vector<CatalogEntry> out;
  for (const GddDocEntry& e : entries)
    out.push_back({e.tag, e.g, e.constraint, source});
  return out;
}

}  // namespace gdd
