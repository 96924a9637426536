#include "wreath/literal.hpp"

#include <cctype>
#include <map>

#include "wreath/errors.hpp"

namespace wreath {

namespace {

const char* const kUnitAlias = "\xF0\x9D\x9F\x8F";  // U+1D7CF, bold digit one

class Lexer {
 public:
  Lexer(const std::string& text, const char* what) : text_(text), what_(what) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) throw error(std::string("expected '") + c + "'");
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  Integer integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw error("expected a number");
    return Integer(text_.substr(start, pos_ - start));
  }
  // Everything up to ':' with surrounding space trimmed.
  std::string label() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ':' && text_[pos_] != ';' && text_[pos_] != '}' &&
           text_[pos_] != '{')
      ++pos_;
    std::string s = text_.substr(start, pos_ - start);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw error("expected a label");
    return s;
  }
  ParseError error(const std::string& why) const {
    return ParseError(std::string("cannot parse ") + what_ + " '" + text_ + "': " + why + " at position " +
                      std::to_string(pos_));
  }

 private:
  const std::string& text_;
  const char* what_;
  std::size_t pos_ = 0;
};

int resolve_label(const BaseRing& ring, const std::string& name, Lexer& lex) {
  if (auto idx = ring.find_label(name)) return *idx;
  if (name == kUnitAlias)
    if (auto unit = ring.unit_index()) return *unit;
  throw lex.error("unknown label '" + name + "'");
}

// After 'Z' has been consumed.
Multipartition read_braces(const BaseRing& ring, Lexer& lex) {
  lex.expect('{');
  std::map<int, Partition> entries;
  if (!lex.accept('}')) {
    do {
      int label = resolve_label(ring, lex.label(), lex);
      lex.expect(':');
      lex.expect('[');
      std::vector<int> parts;
      if (!lex.accept(']')) {
        do {
          Integer v = lex.integer();
          if (v < 1 || !v.fits_sint_p()) throw lex.error("parts must be positive");
          parts.push_back(static_cast<int>(v.get_si()));
        } while (lex.accept(','));
        lex.expect(']');
      }
      for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1]) throw lex.error("parts must be weakly decreasing");
      if (entries.count(label)) throw lex.error("label repeated");
      entries.emplace(label, Partition(parts));
    } while (lex.accept(';'));
    lex.expect('}');
  }
  std::vector<Multipartition::Entry> list;
  for (auto& [label, p] : entries)
    if (!p.empty()) list.emplace_back(label, std::move(p));
  return Multipartition(std::move(list));
}

}  // namespace

Multipartition parse_key(const BaseRing& ring, const std::string& text) {
  Lexer lex(text, "key");
  lex.accept('Z');
  Multipartition m = read_braces(ring, lex);
  if (!lex.at_end()) throw lex.error("trailing input");
  return m;
}

GrothElement parse_groth_element(const GrothRing& ring, const std::string& text) {
  Lexer lex(text, "element");
  if (lex.at_end()) throw lex.error("empty literal");
  GrothElement out = ring.zero();
  bool first = true;
  while (!lex.at_end()) {
    int sign = 1;
    if (lex.accept('-'))
      sign = -1;
    else if (!lex.accept('+') && !first)
      throw lex.error("expected '+' or '-'");
    first = false;
    Rational coeff(sign);
    bool has_coeff = false;
    if (lex.at_digit()) {
      Integer num = lex.integer();
      Integer den = 1;
      if (lex.accept('/')) {
        den = lex.integer();
        if (den == 0) throw lex.error("zero denominator");
      }
      coeff *= frac(num, den);
      has_coeff = true;
      lex.accept('*');
    }
    if (lex.accept('Z')) {
      out.add(read_braces(ring.base(), lex), coeff);
    } else if (has_coeff) {
      out.add(Multipartition(), coeff);
    } else {
      throw lex.error("expected a coefficient or Z{...}");
    }
  }
  return out;
}

}  // namespace wreath
