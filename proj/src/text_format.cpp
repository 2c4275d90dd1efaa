#include "golodlab/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace golod {
namespace {

struct Position {
  int line;
  int column;
};

Position locate(const std::string& doc, std::size_t offset) {
  Position p{1, 1};
  for (std::size_t i = 0; i < offset && i < doc.size(); ++i) {
    if (doc[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

bool isIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

// Recursive-descent parser over doc[begin, end).
class PolyParser {
 public:
  PolyParser(const std::string& doc, std::size_t begin, std::size_t end, RingPtr ring)
      : doc_(doc), pos_(begin), end_(end), ring_(std::move(ring)) {}

  Polynomial parseAll() {
    skipSpace();
    if (pos_ >= end_) fail("expected a polynomial");
    Polynomial p = expr();
    skipSpace();
    if (pos_ < end_) fail(std::string("unexpected character '") + doc_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    auto p = locate(doc_, pos_);
    throw ParseError(msg, p.line, p.column);
  }

  void skipSpace() {
    while (pos_ < end_ && std::isspace(static_cast<unsigned char>(doc_[pos_]))) ++pos_;
  }

  char peek() {
    skipSpace();
    return pos_ < end_ ? doc_[pos_] : '\0';
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool first = true;
    while (true) {
      char c = peek();
      int sign = 1;
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      first = false;
      Polynomial t = term();
      acc = sign > 0 ? acc + t : acc - t;
      c = peek();
      if (c != '+' && c != '-') break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (isIdentStart(c) || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (peek() == '^') {
      ++pos_;
      skipSpace();
      int e = integer();
      base = base.pow(e);
    }
    return base;
  }

  int integer() {
    std::size_t start = pos_;
    while (pos_ < end_ && std::isdigit(static_cast<unsigned char>(doc_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 9) fail("integer exponent too large");
    return std::stoi(doc_.substr(start, pos_ - start));
  }

  Polynomial primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < end_ && std::isdigit(static_cast<unsigned char>(doc_[pos_]))) ++pos_;
      std::string num = doc_.substr(start, pos_ - start);
      if (pos_ < end_ && doc_[pos_] == '/') {
        ++pos_;
        std::size_t ds = pos_;
        while (pos_ < end_ && std::isdigit(static_cast<unsigned char>(doc_[pos_]))) ++pos_;
        if (ds == pos_) fail("expected a denominator");
        std::string den = doc_.substr(ds, pos_ - ds);
        if (mpz_class(den) == 0) fail("zero denominator");
        num += "/" + den;
      }
      Scalar value(num);
      value.canonicalize();
      return Polynomial::constant(ring_, value);
    }
    if (isIdentStart(c)) {
      // Longest declared name that matches here.
      std::size_t bestLen = 0;
      std::size_t bestIdx = 0;
      for (std::size_t k = 0; k < ring_->nvars(); ++k) {
        const auto& name = ring_->name(k);
        if (name.size() > bestLen && pos_ + name.size() <= end_ &&
            doc_.compare(pos_, name.size(), name) == 0) {
          bestLen = name.size();
          bestIdx = k;
        }
      }
      if (bestLen == 0) fail("unknown variable");
      pos_ += bestLen;
      return Polynomial::variable(ring_, bestIdx);
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& doc_;
  std::size_t pos_;
  std::size_t end_;
  RingPtr ring_;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

struct Span {
  std::size_t begin;
  std::size_t end;
};

// Splits doc[begin,end) on top-level commas.
std::vector<Span> splitTopLevel(const std::string& doc, std::size_t begin, std::size_t end) {
  std::vector<Span> out;
  int depth = 0;
  std::size_t start = begin;
  for (std::size_t i = begin; i < end; ++i) {
    if (doc[i] == '(') ++depth;
    if (doc[i] == ')') --depth;
    if (doc[i] == ',' && depth == 0) {
      out.push_back({start, i});
      start = i + 1;
    }
  }
  out.push_back({start, end});
  return out;
}

RingPtr parseRingLine(const std::string& doc, std::size_t offset, const std::string& body) {
  auto fail = [&](const std::string& msg) {
    auto p = locate(doc, offset);
    throw ParseError(msg, p.line, p.column);
  };
  auto lb = body.find('[');
  auto rb = body.rfind(']');
  if (lb == std::string::npos || rb == std::string::npos || rb < lb)
    fail("ring line must read FIELD[vars]");
  std::string fieldName = trim(body.substr(0, lb));
  Field field;
  if (fieldName == "QQ" || fieldName == "Q") {
    field = Field::rationals();
  } else if (fieldName.size() > 1 && (fieldName[0] == 'F' || fieldName.rfind("GF", 0) == 0)) {
    std::string digits = fieldName.substr(fieldName[0] == 'F' ? 1 : 2);
    digits.erase(std::remove_if(digits.begin(), digits.end(),
                                [](char c) { return c == '(' || c == ')'; }),
                 digits.end());
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      fail("unknown coefficient field '" + fieldName + "'");
    field = Field::prime(static_cast<std::uint32_t>(std::stoul(digits)));
  } else {
    fail("unknown coefficient field '" + fieldName + "'");
  }
  std::vector<std::string> names;
  std::stringstream vs(body.substr(lb + 1, rb - lb - 1));
  std::string item;
  while (std::getline(vs, item, ',')) {
    item = trim(item);
    if (item.empty() || !isIdentStart(item[0])) fail("bad variable name '" + item + "'");
    for (char c : item)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        fail("bad variable name '" + item + "'");
    names.push_back(item);
  }
  try {
    return makeRing(std::move(names), field);
  } catch (const Error& e) {
    fail(e.what());
  }
  return nullptr;
}

std::vector<std::string> inferVariables(const std::string& doc, std::size_t begin,
                                        std::size_t end) {
  std::vector<std::string> names;
  for (std::size_t i = begin; i < end;) {
    if (std::isalpha(static_cast<unsigned char>(doc[i]))) {
      std::size_t j = i + 1;
      while (j < end && (std::isdigit(static_cast<unsigned char>(doc[j])) || doc[j] == '_')) ++j;
      std::string name = doc.substr(i, j - i);
      if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
      i = j;
    } else {
      ++i;
    }
  }
  return names;
}

}  // namespace

Polynomial parsePolynomial(const std::string& text, const RingPtr& ring) {
  return PolyParser(text, 0, text.size(), ring).parseAll();
}

IdealText parseIdeal(const std::string& text) {
  IdealText out;
  std::optional<std::pair<std::size_t, std::string>> colorsLine;
  // Body text with header and comment lines blanked so offsets stay valid.
  std::string body = text;
  std::size_t lineStart = 0;
  while (lineStart <= text.size()) {
    std::size_t lineEnd = text.find('\n', lineStart);
    if (lineEnd == std::string::npos) lineEnd = text.size();
    std::string line = text.substr(lineStart, lineEnd - lineStart);
    std::string t = trim(line);
    auto blank = [&] {
      for (std::size_t i = lineStart; i < lineEnd; ++i) body[i] = ' ';
    };
    if (!t.empty() && t[0] == '#') {
      blank();
    } else if (t.rfind("ring:", 0) == 0) {
      out.ring = parseRingLine(text, lineStart, trim(t.substr(5)));
      blank();
    } else if (t.rfind("order:", 0) == 0) {
      out.order = trim(t.substr(6));
      blank();
    } else if (t.rfind("colors:", 0) == 0) {
      colorsLine = std::make_pair(lineStart, trim(t.substr(7)));
      blank();
    }
    if (lineEnd == text.size()) break;
    lineStart = lineEnd + 1;
  }

  if (!out.ring) {
    auto names = inferVariables(body, 0, body.size());
    if (names.empty()) {
      auto p = locate(text, 0);
      throw ParseError("no ring declared and no variables found", p.line, p.column);
    }
    out.ring = makeRing(std::move(names));
  }

  if (colorsLine) {
    std::vector<int> colors(out.ring->nvars(), -1);
    std::stringstream cs(colorsLine->second);
    std::string cls;
    int id = 0;
    while (std::getline(cs, cls, '|')) {
      std::stringstream vs(cls);
      std::string v;
      while (std::getline(vs, v, ',')) {
        v = trim(v);
        auto idx = out.ring->indexOf(v);
        if (!idx || colors[*idx] != -1) {
          auto p = locate(text, colorsLine->first);
          throw ParseError("bad or repeated variable '" + v + "' in colors", p.line, p.column);
        }
        colors[*idx] = id;
      }
      ++id;
    }
    if (std::find(colors.begin(), colors.end(), -1) != colors.end()) {
      auto p = locate(text, colorsLine->first);
      throw ParseError("colors must cover every variable", p.line, p.column);
    }
    auto ring = std::make_shared<PolyRing>(*out.ring);
    ring->setColors(std::move(colors));
    out.ring = ring;
  }

  for (const auto& span : splitTopLevel(body, 0, body.size())) {
    if (trim(body.substr(span.begin, span.end - span.begin)).empty()) continue;
    // body keeps the offsets of text, so reported positions match the input.
    out.generators.push_back(PolyParser(body, span.begin, span.end, out.ring).parseAll());
  }
  return out;
}

std::string formatIdeal(const RingPtr& ring, const std::vector<Polynomial>& gens,
                        const std::optional<std::string>& order) {
  std::string s = ring->describe() + "\n";
  if (order) s += "order: " + *order + "\n";
  if (ring->colors()) {
    const auto& colors = *ring->colors();
    int ncolors = *std::max_element(colors.begin(), colors.end()) + 1;
    s += "colors: ";
    for (int c = 0; c < ncolors; ++c) {
      if (c) s += " | ";
      bool first = true;
      for (std::size_t k = 0; k < colors.size(); ++k) {
        if (colors[k] != c) continue;
        if (!first) s += ",";
        s += ring->name(k);
        first = false;
      }
    }
    s += "\n";
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    s += gens[i].toString();
    s += i + 1 < gens.size() ? ",\n" : "\n";
  }
  return s;
}

}  // namespace golod
