#include <array>
#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qrep/blocks.hpp"
#include "qrep/errors.hpp"
#include "qrep/veech.hpp"

namespace qrep {

namespace {

// Cursor over the raw text that skips whitespace and remembers byte offsets
// so errors can point at the original input.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  std::size_t pos() const { return pos_; }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  long integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view tok = text_.substr(start, pos_ - start);
    if (tok.empty() || tok == "-" || tok == "+") {
      pos_ = start;
      fail("expected an integer");
    }
    try {
      return std::stol(std::string(tok));
    } catch (const std::exception&) {
      throw ParseError("integer out of range", std::string(tok), start);
    }
  }

  // Token at the cursor, for error messages: up to the next separator.
  std::string current_token() {
    skip_ws();
    std::size_t end = pos_;
    while (end < text_.size() && !std::isspace(static_cast<unsigned char>(text_[end])) &&
           text_[end] != ';' && text_[end] != ',') {
      ++end;
    }
    if (end == pos_ && end < text_.size()) ++end;
    return end > pos_ ? std::string(text_.substr(pos_, end - pos_)) : std::string("<end of input>");
  }

  [[noreturn]] void fail(const std::string& message) {
    const std::string tok = current_token();
    throw ParseError(message, tok, pos_);
  }

  [[noreturn]] void fail_at(const std::string& message, const std::string& token, std::size_t at) {
    throw ParseError(message, token, at);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Parses `key=value; key=value; ...`, dispatching each value to `handler`.
void parse_sections(Scanner& sc, const std::function<void(const std::string&, std::size_t)>& handler) {
  while (!sc.at_end()) {
    const std::size_t at = sc.pos();
    const std::string key = sc.word();
    sc.expect('=');
    handler(key, at);
    if (!sc.at_end()) sc.expect(';');
  }
}

template <typename F>
void parse_list(Scanner& sc, F&& item) {
  if (sc.peek(';') || sc.at_end()) return;
  do {
    item();
  } while (sc.accept(','));
}

}  // namespace

ColoredGraph parse_graph(const std::string& text) {
  Scanner sc(text);
  ColoredGraph graph;
  bool have_vertices = false;
  parse_sections(sc, [&](const std::string& key, std::size_t at) {
    if (key == "vertices") {
      const std::size_t vat = sc.pos();
      const long n = sc.integer();
      if (n <= 0) sc.fail_at("vertex count must be positive", std::to_string(n), vat);
      graph.vertex_count = static_cast<int>(n);
      have_vertices = true;
    } else if (key == "edges") {
      parse_list(sc, [&] {
        const long u = sc.integer();
        sc.expect('-');
        const long v = sc.integer();
        graph.edges.push_back({static_cast<int>(u), static_cast<int>(v)});
      });
    } else if (key == "tails") {
      parse_list(sc, [&] {
        const long v = sc.integer();
        sc.expect(':');
        const long c = sc.integer();
        graph.tails.push_back({static_cast<int>(v), static_cast<int>(c)});
      });
    } else {
      sc.fail_at("unknown section", key, at);
    }
  });
  if (!have_vertices) throw ParseError("missing 'vertices' section", text.empty() ? "<empty>" : text, 0);
  graph.validate();
  return graph;
}

ConfigurationGraph parse_configuration(const std::string& text) {
  Scanner sc(text);
  const std::string head = sc.word();
  if (sc.accept(':')) {
    const std::size_t at = sc.pos();
    const long n = sc.integer();
    if (!sc.at_end()) sc.fail("unexpected trailing input");
    const int size = static_cast<int>(n);
    try {
      if (head == "A") return ConfigurationGraph::path(size);
      if (head == "D") return ConfigurationGraph::dynkin_d(size);
      if (head == "E") return ConfigurationGraph::dynkin_e(size);
      if (head == "cycle") return ConfigurationGraph::cycle(size);
      if (head == "star") return ConfigurationGraph::star(size);
      if (head == "affineD") return ConfigurationGraph::affine_d(size);
      if (head == "affineE") return ConfigurationGraph::affine_e(size);
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), std::to_string(n), at);
    }
    throw ParseError("unknown graph family", head, 0);
  }

  // Explicit bipartite form. `head` is the first key.
  Scanner full(text);
  int m = -1;
  int k = -1;
  std::vector<std::array<int, 3>> inter;
  std::vector<int> mult;
  std::size_t inter_at = 0;
  parse_sections(full, [&](const std::string& key, std::size_t at) {
    if (key == "c") {
      m = static_cast<int>(full.integer());
    } else if (key == "d") {
      k = static_cast<int>(full.integer());
    } else if (key == "inter") {
      inter_at = full.pos();
      parse_list(full, [&] {
        full.expect('(');
        const long i = full.integer();
        full.expect(',');
        const long j = full.integer();
        full.expect(',');
        const long count = full.integer();
        full.expect(')');
        inter.push_back({static_cast<int>(i), static_cast<int>(j), static_cast<int>(count)});
      });
    } else if (key == "mult") {
      parse_list(full, [&] {
        const std::size_t mat = full.pos();
        const long d = full.integer();
        if (d <= 0) full.fail_at("multiplicity must be positive", std::to_string(d), mat);
        mult.push_back(static_cast<int>(d));
      });
    } else {
      full.fail_at("unknown section", key, at);
    }
  });
  return build_configuration(m, k, inter, mult, inter_at);
}

ConfigurationGraph build_configuration(int m, int k, const std::vector<std::array<int, 3>>& inter,
                                       const std::vector<int>& mult, std::size_t position) {
  if (inter.empty()) throw ParseError("no intersections given", "inter", position);
  // Sizes default to the largest index mentioned.
  int max_i = 0;
  int max_j = 0;
  for (const auto& [i, j, count] : inter) {
    if (i < 1 || j < 1) {
      throw ParseError("curve indices are 1-based", "(" + std::to_string(i) + "," + std::to_string(j) + ")",
                       position);
    }
    if (count < 0) throw ParseError("intersection counts are nonnegative", std::to_string(count), position);
    max_i = std::max(max_i, i);
    max_j = std::max(max_j, j);
  }
  if (m < 0) m = max_i;
  if (k < 0) k = max_j;
  if (max_i > m || max_j > k) {
    throw ParseError("intersection references a curve beyond c/d", std::to_string(std::max(max_i, max_j)),
                     position);
  }
  std::vector<std::vector<int>> table(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(k), 0));
  for (const auto& [i, j, count] : inter) table[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] += count;
  std::vector<int> d = mult;
  if (d.empty()) d.assign(static_cast<std::size_t>(m + k), 1);
  if (d.size() != static_cast<std::size_t>(m + k)) {
    throw ParseError("expected " + std::to_string(m + k) + " multiplicities", std::to_string(d.size()), position);
  }
  return ConfigurationGraph(std::move(table), std::move(d));
}

}  // namespace qrep
