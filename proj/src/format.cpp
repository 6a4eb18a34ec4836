#include "format.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

namespace qw {

namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

// Tokens per logical line, comments stripped, blank lines dropped.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  int line_no = 1;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    std::vector<Token> toks;
    size_t i = 0;
    while (i < line.size()) {
      if (line[i] == '#') break;
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      const size_t start = i;
      while (i < line.size() && line[i] != '#' &&
             !std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
      toks.push_back({std::string(line.substr(start, i - start)), line_no,
                      static_cast<int>(start) + 1});
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
    ++line_no;
  }
  return lines;
}

[[noreturn]] void fail_at(int line, int column, const std::string& reason) {
  throw InputError("line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ": " + reason);
}

[[noreturn]] void fail_eof(const std::string& reason) {
  throw InputError("unexpected end of input: " + reason);
}

}  // namespace

AlgebraDocument parse_document(std::string_view text) {
  const auto lines = tokenize(text);
  size_t li = 0;
  auto next_line = [&](const std::string& what) -> const std::vector<Token>& {
    if (li >= lines.size()) fail_eof("expected " + what);
    return lines[li++];
  };

  AlgebraDocument doc;

  {
    const auto& l = next_line("'algebra <name>'");
    if (l[0].text != "algebra")
      fail_at(l[0].line, l[0].column, "expected 'algebra', got '" + l[0].text + "'");
    if (l.size() != 2)
      fail_at(l[0].line, l[0].column, "'algebra' takes exactly one name");
    doc.name = l[1].text;
  }
  {
    const auto& l = next_line("'elements <tok> ...'");
    if (l[0].text != "elements")
      fail_at(l[0].line, l[0].column, "expected 'elements', got '" + l[0].text + "'");
    if (l.size() < 2)
      fail_at(l[0].line, l[0].column, "'elements' needs at least one name");
    std::unordered_map<std::string, int> seen;
    for (size_t i = 1; i < l.size(); ++i) {
      if (!seen.emplace(l[i].text, 1).second)
        fail_at(l[i].line, l[i].column,
                "duplicate element '" + l[i].text + "'");
      doc.elements.push_back(l[i].text);
    }
  }
  auto parse_constant = [&](const char* kw) -> std::string {
    const auto& l = next_line(std::string("'") + kw + " <tok>'");
    if (l[0].text != kw)
      fail_at(l[0].line, l[0].column,
              std::string("expected '") + kw + "', got '" + l[0].text + "'");
    if (l.size() != 2)
      fail_at(l[0].line, l[0].column,
              std::string("'") + kw + "' takes exactly one name");
    for (const auto& e : doc.elements) {
      if (e == l[1].text) return l[1].text;
    }
    fail_at(l[1].line, l[1].column,
            std::string(kw) + " '" + l[1].text + "' is not a listed element");
  };
  doc.zero = parse_constant("zero");
  doc.one = parse_constant("one");
  {
    const auto& l = next_line("'arrow'");
    if (l[0].text != "arrow" || l.size() != 1)
      fail_at(l[0].line, l[0].column, "expected a bare 'arrow' line");
  }
  const size_t n = doc.elements.size();
  for (size_t r = 0; r < n; ++r) {
    const auto& l = next_line("arrow row " + std::to_string(r + 1) + " of " +
                              std::to_string(n));
    if (l.size() != n)
      fail_at(l[0].line, l[0].column,
              "arrow row for '" + doc.elements[r] + "' has " +
                  std::to_string(l.size()) + " entries, expected " +
                  std::to_string(n));
    std::vector<std::string> row;
    for (const auto& tok : l) {
      bool known = false;
      for (const auto& e : doc.elements) {
        if (e == tok.text) {
          known = true;
          break;
        }
      }
      if (!known)
        fail_at(tok.line, tok.column, "unknown element '" + tok.text + "'");
      row.push_back(tok.text);
    }
    doc.rows.push_back(std::move(row));
  }
  if (li < lines.size()) {
    const auto& l = lines[li];
    fail_at(l[0].line, l[0].column, "trailing content after the arrow grid");
  }
  return doc;
}

std::string serialize(const AlgebraDocument& doc) {
  std::ostringstream out;
  out << "algebra " << doc.name << "\n";
  out << "elements";
  for (const auto& e : doc.elements) out << " " << e;
  out << "\n";
  out << "zero " << doc.zero << "\n";
  out << "one " << doc.one << "\n";
  out << "arrow\n";
  for (const auto& row : doc.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out << " ";
      out << row[i];
    }
    out << "\n";
  }
  return out.str();
}

Algebra to_algebra(const AlgebraDocument& doc) {
  std::unordered_map<std::string, Elem> index;
  for (size_t i = 0; i < doc.elements.size(); ++i)
    index[doc.elements[i]] = static_cast<Elem>(i);
  std::vector<Elem> table;
  table.reserve(doc.elements.size() * doc.elements.size());
  for (const auto& row : doc.rows) {
    for (const auto& tok : row) table.push_back(index.at(tok));
  }
  return Algebra(doc.name, doc.elements, index.at(doc.zero), index.at(doc.one),
                 std::move(table));
}

AlgebraDocument to_document(const Algebra& a) {
  AlgebraDocument doc;
  doc.name = a.name();
  doc.elements = a.element_names();
  doc.zero = a.element_name(a.zero());
  doc.one = a.element_name(a.one());
  for (Elem x = 0; x < a.order(); ++x) {
    std::vector<std::string> row;
    for (Elem y = 0; y < a.order(); ++y)
      row.push_back(a.element_name(a.arrow(x, y)));
    doc.rows.push_back(std::move(row));
  }
  return doc;
}

Algebra parse_algebra(std::string_view text) {
  return to_algebra(parse_document(text));
}

std::string serialize(const Algebra& a) { return serialize(to_document(a)); }

Algebra read_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_algebra(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace qw
