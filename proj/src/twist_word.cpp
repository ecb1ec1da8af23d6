#include "fibercover/twist_word.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace fibercover {

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool done() {
    skip_ws();
    return pos >= text.size();
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError{msg, pos};
  }

  long long parse_int() {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    size_t digits_from = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == digits_from) fail("expected integer");
    try {
      return std::stoll(text.substr(start, pos - start));
    } catch (const std::out_of_range&) {
      pos = start;
      fail("exponent out of range");
    }
  }

  long long parse_optional_exponent() {
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      long long e = parse_int();
      if (e == 0) {
        --pos;
        fail("zero exponent");
      }
      return e;
    }
    return 1;
  }

  TwistWord parse_sequence(bool inside_group) {
    TwistWord out;
    while (true) {
      skip_ws();
      if (pos >= text.size()) {
        if (inside_group) fail("unterminated group");
        break;
      }
      char c = text[pos];
      if (c == ')') {
        if (!inside_group) fail("unmatched ')'");
        break;
      }
      if (c == '(') {
        ++pos;
        TwistWord inner = parse_sequence(true);
        skip_ws();
        if (pos >= text.size() || text[pos] != ')') fail("unterminated group");
        ++pos;
        long long e = parse_optional_exponent();
        out = twist_concat(out, twist_pow(inner, e));
        continue;
      }
      if (c == 'D' || c == 'd') {
        ++pos;
        skip_ws();
        if (pos >= text.size()) fail("expected x or y after D");
        char g = text[pos];
        if (g != 'x' && g != 'X' && g != 'y' && g != 'Y')
          fail("expected x or y after D");
        ++pos;
        long long e = parse_optional_exponent();
        TwistWord block;
        block.blocks.push_back({g == 'y' || g == 'Y', e});
        out = twist_concat(out, block);
        continue;
      }
      fail("unexpected character");
    }
    return out;
  }
};

}  // namespace

TwistWord normalize(const TwistWord& w) {
  TwistWord out;
  for (const TwistBlock& b : w.blocks) {
    if (b.exp == 0) continue;
    if (!out.blocks.empty() && out.blocks.back().is_y == b.is_y) {
      out.blocks.back().exp += b.exp;
      if (out.blocks.back().exp == 0) out.blocks.pop_back();
    } else {
      out.blocks.push_back(b);
    }
  }
  return out;
}

TwistWord twist_concat(const TwistWord& a, const TwistWord& b) {
  TwistWord joined = a;
  joined.blocks.insert(joined.blocks.end(), b.blocks.begin(), b.blocks.end());
  return normalize(joined);
}

TwistWord twist_pow(const TwistWord& w, long long e) {
  TwistWord base = e < 0 ? twist_inverse(w) : w;
  long long reps = e < 0 ? -e : e;
  TwistWord out;
  for (long long i = 0; i < reps; ++i) out = twist_concat(out, base);
  return out;
}

TwistWord twist_inverse(const TwistWord& w) {
  TwistWord out;
  for (auto it = w.blocks.rbegin(); it != w.blocks.rend(); ++it)
    out.blocks.push_back({it->is_y, -it->exp});
  return normalize(out);
}

TwistWord parse_twist_word(const std::string& text) {
  ParseError err;
  auto w = try_parse_twist_word(text, &err);
  if (!w)
    throw std::runtime_error("parse error at position " +
                             std::to_string(err.position) + ": " + err.message);
  return *w;
}

std::optional<TwistWord> try_parse_twist_word(const std::string& text,
                                              ParseError* err) {
  Parser p(text);
  try {
    return p.parse_sequence(false);
  } catch (const ParseError& e) {
    if (err) *err = e;
    return std::nullopt;
  }
}

std::string twist_str(const TwistWord& w) {
  if (w.blocks.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const TwistBlock& b : w.blocks) {
    if (!first) os << " ";
    first = false;
    os << (b.is_y ? "Dy" : "Dx");
    if (b.exp != 1) os << "^" << b.exp;
  }
  return os.str();
}

BundleInvariants bundle_invariants(const TwistWord& word) {
  TwistWord w = normalize(word);
  BundleInvariants inv;
  Int gcd_s = 0, gcd_r = 0;
  bool has_x = false, has_y = false;
  for (const TwistBlock& b : w.blocks) {
    if (b.is_y) {
      has_y = true;
      inv.R_swapped += b.exp;
      gcd_s = gcd_int(gcd_s, Int(b.exp));
    } else {
      has_x = true;
      inv.R += b.exp;
      gcd_r = gcd_int(gcd_r, Int(b.exp));
    }
  }
  inv.standard_ok = has_y;
  inv.n = gcd_s;
  inv.swapped_ok = has_x;
  inv.n_swapped = gcd_r;
  return inv;
}

TwistWord quarter_turn_conjugate(const TwistWord& w) {
  TwistWord out;
  for (const TwistBlock& b : normalize(w).blocks)
    out.blocks.push_back({!b.is_y, -b.exp});
  return normalize(out);
}

}  // namespace fibercover
