#include "cli/literal.hpp"

#include <cctype>
#include <sstream>

namespace cli {

using fps::Int;
using fps::RingSpec;
using fps::TruncatedSeries;

fps::RingSpec parse_ring(const std::string& text) {
  if (text == "Z" || text == "z") return RingSpec::integers();
  if (text == "Z4") return RingSpec::mod_ring(4);
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string tail = colon == std::string::npos ? "" : text.substr(colon + 1);
  const auto number = [](const std::string& s, const char* what) -> std::uint32_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument(std::string("invalid ") + what + " in ring spec");
    return static_cast<std::uint32_t>(std::stoul(s));
  };
  if (head == "Fp") return RingSpec::prime_field(number(tail, "prime"));
  if (head == "Zmod") return RingSpec::mod_ring(number(tail, "modulus"));
  if (!text.empty() && (text[0] == 'F' || text[0] == 'f') && colon == std::string::npos)
    return RingSpec::prime_field(number(text.substr(1), "prime"));
  throw std::invalid_argument("unknown ring: " + text);
}

json ring_to_json(const RingSpec& ring) {
  switch (ring.kind()) {
    case fps::RingKind::Integers:
      return json{{"ring", "Z"}};
    case fps::RingKind::PrimeField:
      if (ring.modulus() == 2) return json{{"ring", "F2"}};
      return json{{"ring", "Fp"}, {"p", ring.modulus()}};
    case fps::RingKind::ModRing:
      return json{{"ring", "Zmod"}, {"m", ring.modulus()}};
  }
  throw std::logic_error("unreachable");
}

fps::RingSpec ring_from_json(const json& j) {
  const std::string name = j.at("ring").get<std::string>();
  if (name == "Z") return RingSpec::integers();
  if (name == "Zmod") return RingSpec::mod_ring(j.at("m").get<std::uint32_t>());
  if (name == "Fp") return RingSpec::prime_field(j.at("p").get<std::uint32_t>());
  return parse_ring(name);
}

namespace {

Int int_from_json(const json& v) {
  if (v.is_string()) return Int(v.get<std::string>());
  if (v.is_number_integer()) return Int(v.get<long long>());
  throw std::invalid_argument("coefficients must be integers or decimal strings");
}

}  // namespace

TruncatedSeries series_from_json(const json& arr, const RingSpec& ring) {
  if (!arr.is_array() || arr.empty())
    throw std::invalid_argument("series literal must be a nonempty array");
  std::vector<Int> coeffs;
  coeffs.reserve(arr.size());
  for (const auto& v : arr) coeffs.push_back(int_from_json(v));
  const std::size_t order = coeffs.size() - 1;
  return TruncatedSeries(ring, order, std::move(coeffs));
}

json series_to_json(const TruncatedSeries& s) {
  json arr = json::array();
  for (const auto& c : s.coeffs()) arr.push_back(c.str());
  return arr;
}

riordan::Pair pair_from_json(const json& j, std::optional<RingSpec> default_ring) {
  if (!j.is_object() || !j.contains("g") || !j.contains("f"))
    throw std::invalid_argument("pair literal must be an object with \"g\" and \"f\"");
  RingSpec ring = j.contains("ring") ? ring_from_json(j)
                                     : (default_ring ? *default_ring : RingSpec::f2());
  auto g = series_from_json(j.at("g"), ring);
  auto f = series_from_json(j.at("f"), ring);
  // allow unequal literal lengths; settle on the shorter order
  const std::size_t order = std::min(g.order(), f.order());
  return riordan::Pair(truncated(g, order), truncated(f, order));
}

json pair_to_json(const riordan::Pair& p) {
  json j = ring_to_json(p.ring());
  j["g"] = series_to_json(p.g());
  j["f"] = series_to_json(p.f());
  return j;
}

namespace {

struct PolyParser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " +
                                expected);
  }

  bool done() {
    skip_space();
    return pos >= text.size();
  }

  Int parse_number() {
    skip_space();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    return Int(text.substr(start, pos - start));
  }

  // term := number [['*'] t ['^' number]] | t ['^' number]
  void parse_term(std::vector<std::pair<std::size_t, Int>>& out, int sign) {
    skip_space();
    Int coeff = 1;
    bool saw_coeff = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = parse_number();
      saw_coeff = true;
      skip_space();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_space();
        if (pos >= text.size() || text[pos] != 't') fail("expected 't' after '*'");
      }
    }
    std::size_t degree = 0;
    if (pos < text.size() && text[pos] == 't') {
      ++pos;
      degree = 1;
      skip_space();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        const Int d = parse_number();
        if (d > 4096) fail("exponent too large");
        degree = static_cast<std::size_t>(d);
      }
    } else if (!saw_coeff) {
      fail("expected a term");
    }
    out.emplace_back(degree, sign < 0 ? Int(-coeff) : coeff);
  }

  std::vector<std::pair<std::size_t, Int>> parse_poly() {
    std::vector<std::pair<std::size_t, Int>> terms;
    skip_space();
    int sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    }
    parse_term(terms, sign);
    while (!done()) {
      skip_space();
      if (text[pos] == '+' || text[pos] == '-') {
        sign = text[pos] == '-' ? -1 : 1;
        ++pos;
        parse_term(terms, sign);
      } else {
        fail("expected '+' or '-'");
      }
    }
    return terms;
  }
};

}  // namespace

TruncatedSeries parse_poly(const std::string& text, const RingSpec& ring, std::size_t order) {
  PolyParser parser{text};
  TruncatedSeries s(ring, order);
  for (const auto& [degree, coeff] : parser.parse_poly())
    s = s + TruncatedSeries::monomial(ring, order, degree, coeff);
  return s;
}

std::string poly_to_text(const TruncatedSeries& s) {
  std::string out;
  for (std::size_t d = 0; d <= s.order(); ++d) {
    Int c = s.coeff(d);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (d == 0) {
      out += c.str();
    } else {
      if (c != 1) out += c.str();
      out += "t";
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out.empty() ? "0" : out;
}

riordan::Pair parse_pair(const std::string& text, const RingSpec& ring, std::size_t order) {
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string::npos) throw std::invalid_argument("empty pair literal");
  const std::string body = text.substr(begin, end - begin + 1);

  if (body.front() == '{') return pair_from_json(json::parse(body), ring);
  if (body == "id" || body == "a0" || body == "e0") return riordan::Pair::identity(ring, order);

  if ((body.front() == 'a' || body.front() == 'e') && body.size() > 1 &&
      std::isdigit(static_cast<unsigned char>(body[1]))) {
    std::size_t pos = 1;
    while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos]))) ++pos;
    const std::size_t index = std::stoul(body.substr(1, pos - 1));
    Int value = 1;
    if (pos < body.size()) {
      if (body[pos] != '[' || body.back() != ']')
        throw std::invalid_argument("generator syntax is a<k>[v] or e<k>[v]");
      value = Int(body.substr(pos + 1, body.size() - pos - 2));
    }
    if (index == 0) return riordan::Pair::identity(ring, order);
    return body.front() == 'a' ? riordan::appell_gen(index, value, ring, order)
                               : riordan::subst_gen(index, value, ring, order);
  }

  if (body.front() != '(' || body.back() != ')')
    throw std::invalid_argument("pair literal must look like \"(g, f)\"");
  const std::string inner = body.substr(1, body.size() - 2);
  const std::size_t comma = inner.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("pair literal needs two components");
  return riordan::Pair(parse_poly(inner.substr(0, comma), ring, order),
                       parse_poly(inner.substr(comma + 1), ring, order));
}

std::string pair_to_text(const riordan::Pair& p) {
  return "(" + poly_to_text(p.g()) + ", " + poly_to_text(p.f()) + ")";
}

json matrix_to_json(const riordan::Matrix& m) {
  json rows = json::array();
  for (const auto& row : m.rows) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v.str());
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string matrix_to_csv(const riordan::Matrix& m) {
  std::string out;
  for (const auto& row : m.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ",";
      out += row[j].str();
    }
    out += "\n";
  }
  return out;
}

std::string matrix_to_text(const riordan::Matrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

json report_to_json(const theorems::VerificationReport& r) {
  json params = json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  return json{{"claim", r.claim},
              {"parameters", params},
              {"predicted", r.predicted},
              {"computed", r.computed},
              {"verdict", r.pass ? "pass" : "fail"},
              {"elapsed_us", std::to_string(r.elapsed.count())}};
}

json reports_to_json(const std::vector<theorems::VerificationReport>& rs) {
  json arr = json::array();
  for (const auto& r : rs) arr.push_back(report_to_json(r));
  return arr;
}

}  // namespace cli
