#include "mbetti/io.hpp"

#include <cctype>
#include <charconv>

namespace mbetti::io {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_text(std::string_view s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_text(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  const Integer num = parse_integer(s.substr(0, slash));
  const Integer den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_text(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    const bool neg = sgn(t.coeff) < 0;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;

    std::string mono;
    for (std::size_t k = 0; k < t.exp.size(); ++k) {
      if (t.exp[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += 't' + std::to_string(k + 1);
      if (t.exp[k] != 1) mono += '^' + std::to_string(t.exp[k]);
    }
    const Rational mag = abs(t.coeff);
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + '*' + mono;
    }
  }
  return out;
}

namespace {

struct RawTerm {
  Rational coeff = 1;
  std::vector<std::pair<std::size_t, int>> powers;  // (0-based variable, exponent)
};

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool neg = false;
    if (peek() == '+' || peek() == '-') {
      neg = peek() == '-';
      ++pos_;
    }
    terms.push_back(term(neg));
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      terms.push_back(term(c == '-'));
    }
    return terms;
  }

  std::size_t max_var() const { return max_var_; }

 private:
  RawTerm term(bool neg) {
    RawTerm t;
    factor(t);
    while (true) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      factor(t);
    }
    if (neg) t.coeff = -t.coeff;
    return t;
  }

  void factor(RawTerm& t) {
    skip_ws();
    if (at_end()) fail("unexpected end of input");
    if (peek() == 't') {
      ++pos_;
      const long idx = integer(false);
      if (idx < 1) fail("variable index must be >= 1");
      int e = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        if (!at_end() && peek() == '(') {
          ++pos_;
          e = static_cast<int>(integer(true));
          skip_ws();
          if (at_end() || peek() != ')') fail("expected ')'");
          ++pos_;
        } else {
          e = static_cast<int>(integer(true));
        }
      }
      const auto var = static_cast<std::size_t>(idx - 1);
      max_var_ = std::max(max_var_, var + 1);
      t.powers.emplace_back(var, e);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (!at_end() && peek() == '/') {
        ++pos_;
        const std::size_t dstart = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (dstart == pos_) fail("expected denominator");
      }
      t.coeff *= parse_rational(s_.substr(start, pos_ - start));
      return;
    }
    fail(std::string("unexpected character '") + peek() + "'");
  }

  long integer(bool allow_sign) {
    skip_ws();
    const std::size_t start = pos_;
    if (allow_sign && !at_end() && (peek() == '-' || peek() == '+')) ++pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::string_view digits = s_.substr(start, pos_ - start);
    if (!digits.empty() && digits[0] == '+') digits.remove_prefix(1);
    long v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty() ||
        digits == "-")
      fail("expected integer");
    if (v > 1'000'000'000 || v < -1'000'000'000) fail("integer out of range");
    return v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + msg);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t max_var_ = 0;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text, std::optional<std::size_t> nvars) {
  PolyParser parser(text);
  std::vector<RawTerm> raw = parser.parse();
  const std::size_t n = nvars.value_or(std::max<std::size_t>(parser.max_var(), 1));
  if (parser.max_var() > n) {
    throw ParseError("polynomial uses t" + std::to_string(parser.max_var()) + " but has only " +
                     std::to_string(n) + " variables");
  }
  if (n > Exponent::kMaxVars) throw ParseError("too many variables");
  std::vector<Term> terms;
  terms.reserve(raw.size());
  for (const auto& r : raw) {
    Exponent e(n);
    for (auto [var, pow] : r.powers) e[var] += pow;
    terms.push_back({e, r.coeff});
  }
  return LaurentPoly::from_terms(n, std::move(terms));
}

json to_json(const LaurentPoly& f) {
  json terms = json::array();
  for (const auto& t : f.terms()) {
    json exp = json::array();
    for (int x : t.exp) exp.push_back(x);
    terms.push_back({{"exp", exp}, {"coeff", t.coeff.get_num().get_str() + "/" + t.coeff.get_den().get_str()}});
  }
  return {{"nvars", f.nvars()}, {"terms", terms}};
}

namespace {

std::size_t read_nvars(const json& j) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  if (!j.contains("nvars") || !j["nvars"].is_number_integer())
    throw ParseError("missing integer field 'nvars'");
  const auto n = j["nvars"].get<long long>();
  if (n < 1 || n > static_cast<long long>(Exponent::kMaxVars))
    throw ParseError("'nvars' must be between 1 and " + std::to_string(Exponent::kMaxVars));
  return static_cast<std::size_t>(n);
}

Rational read_rational(const json& j, const char* field) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>()), 10));
  throw ParseError(std::string("field '") + field + "' must be a string or integer");
}

Exponent read_exponent(const json& j, std::size_t n, const char* field) {
  if (!j.is_array() || j.size() != n) {
    throw ParseError(std::string("field '") + field + "' must be an array of " +
                     std::to_string(n) + " integers");
  }
  Exponent e(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!j[k].is_number_integer()) throw ParseError(std::string("field '") + field + "' must hold integers");
    e[k] = j[k].get<int>();
  }
  return e;
}

}  // namespace

LaurentPoly poly_from_json(const json& j) {
  const std::size_t n = read_nvars(j);
  if (!j.contains("terms") || !j["terms"].is_array()) throw ParseError("missing array field 'terms'");
  std::vector<Term> terms;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("coeff"))
      throw ParseError("each term needs 'exp' and 'coeff'");
    terms.push_back({read_exponent(t["exp"], n, "exp"), read_rational(t["coeff"], "coeff")});
  }
  return LaurentPoly::from_terms(n, std::move(terms));
}

json to_json(const BettiDiagram& d) {
  json entries = json::array();
  for (const auto& e : d.entries()) {
    json deg = json::array();
    for (int x : e.deg) deg.push_back(x);
    entries.push_back({{"i", e.i},
                       {"deg", deg},
                       {"mult", e.mult.get_num().get_str() + "/" + e.mult.get_den().get_str()}});
  }
  return {{"nvars", d.nvars()}, {"entries", entries}};
}

BettiDiagram diagram_from_json(const json& j) {
  const std::size_t n = read_nvars(j);
  if (!j.contains("entries") || !j["entries"].is_array())
    throw ParseError("missing array field 'entries'");
  BettiDiagram d(n);
  for (const auto& e : j["entries"]) {
    if (!e.is_object() || !e.contains("i") || !e.contains("deg") || !e.contains("mult"))
      throw ParseError("each entry needs 'i', 'deg' and 'mult'");
    if (!e["i"].is_number_integer()) throw ParseError("field 'i' must be an integer");
    const auto i = e["i"].get<long long>();
    if (i < 0 || i > static_cast<long long>(n))
      throw ParseError("homological index " + std::to_string(i) + " out of range 0.." + std::to_string(n));
    d.add(static_cast<std::size_t>(i), read_exponent(e["deg"], n, "deg"), read_rational(e["mult"], "mult"));
  }
  return d;
}

json to_json(const MembershipReport& r) {
  return {{"in_space", r.in_space},
          {"cofactor", r.cofactor ? to_json(*r.cofactor) : json(nullptr)},
          {"integral", r.integral},
          {"reasons", r.reasons}};
}

std::vector<int> parse_int_list(std::string_view s) {
  std::vector<int> out;
  if (s.empty()) throw ParseError("empty integer list");
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    std::string_view item = s.substr(start, comma == std::string_view::npos ? s.npos : comma - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (!item.empty() && item[0] == '+') item.remove_prefix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw ParseError("not an integer list: '" + std::string(s) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace mbetti::io
