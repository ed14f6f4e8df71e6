#include "kcs/bundle.hpp"

#include <cctype>
#include <cstring>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace kcs {

using nlohmann::json;

BundleError::BundleError(std::string path, std::string constraint, const std::string& detail, std::size_t line,
                         std::size_t column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                        constraint + ": " + detail
                                  : path + ": " + constraint + ": " + detail),
      path_(std::move(path)),
      constraint_(std::move(constraint)),
      line_(line),
      column_(column) {}

std::vector<ClassVector> RingBundle::generators() const {
  std::vector<ClassVector> out;
  for (const auto& s : samples)
    if (s.cls.flag() != Positivity::none) out.push_back(s.cls);
  return out;
}

const NamedClass* RingBundle::find_sample(std::string_view name) const {
  for (const auto& s : samples)
    if (s.name == name) return &s;
  return nullptr;
}

namespace {

// nlohmann reports the byte after the last token read; step back to its first character.
std::size_t token_start(std::string_view text, std::size_t last) {
  if (last >= text.size()) return last;
  if (text[last] == '"' && last > 0) {
    std::size_t i = last;
    while (i > 0) {
      --i;
      if (text[i] != '"') continue;
      std::size_t slashes = 0;
      while (i > slashes && text[i - slashes - 1] == '\\') ++slashes;
      if (slashes % 2 == 0) return i;
    }
    return last;
  }
  auto delimiter = [](char c) { return std::isspace(static_cast<unsigned char>(c)) || std::strchr("{}[],:\"", c); };
  std::size_t i = last;
  while (i > 0 && !delimiter(text[i]) && !delimiter(text[i - 1])) --i;
  return i;
}

void locate(std::string_view text, std::size_t byte, std::size_t& line, std::size_t& column) {
  line = 1;
  column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw BundleError(path + "." + key, "schema", "missing field");
  return *it;
}

std::size_t as_index(const json& v, const std::string& path) {
  if (!v.is_number_unsigned()) throw BundleError(path, "schema", "expected a non-negative integer");
  return v.get<std::size_t>();
}

const json& as_array(const json& v, const std::string& path) {
  if (!v.is_array()) throw BundleError(path, "schema", "expected an array");
  return v;
}

Rational as_rational(const json& v, const std::string& path) {
  if (!v.is_string()) throw BundleError(path, "schema", "rationals are written as strings \"p/q\"");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw BundleError(path, "rational", e.what());
  }
}

std::vector<Rational> as_rationals(const json& v, const std::string& path) {
  std::vector<Rational> out;
  const json& arr = as_array(v, path);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(as_rational(arr[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& path) {
  for (const auto& item : obj.items())
    if (!allowed.count(item.key())) throw BundleError(path + "." + item.key(), "schema", "unknown field");
}

json rationals_json(const std::vector<Rational>& v) {
  json arr = json::array();
  for (const auto& q : v) arr.push_back(q.str());
  return arr;
}

}  // namespace

RingBundle parse_ring_bundle(std::string_view text, bool validate) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 0;
    std::size_t column = 0;
    locate(text, token_start(text, e.byte > 0 ? e.byte - 1 : 0), line, column);
    std::string detail = e.what();
    if (const auto at = detail.find("parse error at "); at != std::string::npos) {
      if (const auto colon = detail.find(": ", at); colon != std::string::npos) detail = detail.substr(colon + 2);
    }
    throw BundleError("$", "syntax", detail, line, column);
  }
  if (!doc.is_object()) throw BundleError("$", "schema", "top level must be an object");
  check_keys(doc, {"name", "n", "hodge", "basis", "products", "integral", "samples", "note"}, "$");

  RingData data;
  const json& name = field(doc, "name", "$");
  if (!name.is_string()) throw BundleError("$.name", "schema", "expected a string");
  data.name = name.get<std::string>();
  data.n = as_index(field(doc, "n", "$"), "$.n");

  const json& hodge = as_array(field(doc, "hodge", "$"), "$.hodge");
  const json& basis = as_array(field(doc, "basis", "$"), "$.basis");
  if (hodge.size() != data.n + 1) throw BundleError("$.hodge", "shape", "expected n + 1 entries");
  if (basis.size() != data.n + 1) throw BundleError("$.basis", "shape", "expected n + 1 graded pieces");
  for (std::size_t p = 0; p <= data.n; ++p) {
    const std::string bp = "$.basis[" + std::to_string(p) + "]";
    const json& labels = as_array(basis[p], bp);
    const std::size_t h = as_index(hodge[p], "$.hodge[" + std::to_string(p) + "]");
    if (labels.size() != h) {
      throw BundleError(bp, "shape", "has " + std::to_string(labels.size()) + " labels but hodge says " + std::to_string(h));
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (!labels[i].is_string()) throw BundleError(bp + "[" + std::to_string(i) + "]", "schema", "expected a string");
      names.push_back(labels[i].get<std::string>());
    }
    data.basis.push_back(std::move(names));
  }

  const json& products = as_array(field(doc, "products", "$"), "$.products");
  for (std::size_t k = 0; k < products.size(); ++k) {
    const std::string pk = "$.products[" + std::to_string(k) + "]";
    const json& rec = products[k];
    if (!rec.is_object()) throw BundleError(pk, "schema", "expected an object");
    check_keys(rec, {"da", "ia", "db", "ib", "out"}, pk);
    ProductEntry e;
    e.da = as_index(field(rec, "da", pk), pk + ".da");
    e.ia = as_index(field(rec, "ia", pk), pk + ".ia");
    e.db = as_index(field(rec, "db", pk), pk + ".db");
    e.ib = as_index(field(rec, "ib", pk), pk + ".ib");
    e.out = as_rationals(field(rec, "out", pk), pk + ".out");
    data.products.push_back(std::move(e));
  }
  data.integral = as_rationals(field(doc, "integral", "$"), "$.integral");

  std::optional<IntersectionRing> ring;
  try {
    ring.emplace(data);
  } catch (const RingError& e) {
    throw BundleError("$." + e.path(), e.constraint(), e.what());
  }

  std::vector<NamedClass> samples;
  if (doc.contains("samples")) {
    const json& arr = as_array(doc["samples"], "$.samples");
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const std::string sk = "$.samples[" + std::to_string(k) + "]";
      const json& s = arr[k];
      if (!s.is_object()) throw BundleError(sk, "schema", "expected an object");
      check_keys(s, {"name", "coeffs", "flag"}, sk);
      const json& sname = field(s, "name", sk);
      if (!sname.is_string()) throw BundleError(sk + ".name", "schema", "expected a string");
      const std::vector<Rational> coeffs = as_rationals(field(s, "coeffs", sk), sk + ".coeffs");
      if (data.n < 1 || coeffs.size() != ring->hodge(1)) throw BundleError(sk + ".coeffs", "shape", "expected h^{1,1} entries");
      const json& flag = field(s, "flag", sk);
      Positivity pos = Positivity::none;
      try {
        pos = positivity_from_string(flag.is_string() ? flag.get<std::string>() : std::string());
      } catch (const std::invalid_argument& e) {
        throw BundleError(sk + ".flag", "schema", e.what());
      }
      Vector v(coeffs.begin(), coeffs.end());
      samples.push_back({sname.get<std::string>(), ClassVector(1, std::move(v), pos)});
    }
  }
  std::string note;
  if (doc.contains("note")) {
    if (!doc["note"].is_string()) throw BundleError("$.note", "schema", "expected a string");
    note = doc["note"].get<std::string>();
  }

  if (validate) {
    const ValidationReport rep = validate_ring(*ring);
    if (!rep.ok()) {
      const auto& issue = rep.issues.front();
      throw BundleError(issue.location, issue.constraint, issue.detail);
    }
    for (std::size_t k = 0; k < samples.size(); ++k) {
      const auto& s = samples[k];
      const std::string sk = "$.samples[" + std::to_string(k) + "]";
      if (s.cls.flag() == Positivity::kahler) {
        const KahlerSanityReport kr = sanity_check_kahler(*ring, s.cls);
        if (!kr.passed) throw BundleError(sk, "kahler-sanity", s.name + ": " + kr.failures.front());
      } else if (s.cls.flag() == Positivity::nef) {
        const Rational vol = ring->integrate(ring->power(s.cls, ring->dim())).re();
        if (vol.sign() < 0) throw BundleError(sk, "nef-sanity", s.name + ": integral of c^n is negative");
      }
    }
  }
  return RingBundle{std::move(*ring), std::move(samples), std::move(note)};
}

std::string serialize_ring_bundle(const RingBundle& bundle) {
  const IntersectionRing& r = bundle.ring;
  json doc;
  doc["name"] = r.name();
  doc["n"] = r.dim();
  doc["hodge"] = r.hodge_numbers();
  doc["basis"] = r.basis_labels();
  json products = json::array();
  for (const auto& [key, out] : r.structure_constants()) {
    json rec;
    rec["da"] = key.first.first;
    rec["ia"] = key.first.second;
    rec["db"] = key.second.first;
    rec["ib"] = key.second.second;
    rec["out"] = rationals_json(out);
    products.push_back(std::move(rec));
  }
  doc["products"] = std::move(products);
  doc["integral"] = rationals_json(r.integral_functional());
  json samples = json::array();
  for (const auto& s : bundle.samples) {
    json rec;
    rec["name"] = s.name;
    json coeffs = json::array();
    for (const auto& z : s.cls.coeffs()) coeffs.push_back(z.re().str());
    rec["coeffs"] = std::move(coeffs);
    rec["flag"] = to_string(s.cls.flag());
    samples.push_back(std::move(rec));
  }
  doc["samples"] = std::move(samples);
  if (!bundle.note.empty()) doc["note"] = bundle.note;
  return doc.dump(2) + "\n";
}

RingBundle load_ring_bundle_file(const std::filesystem::path& path, bool validate) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BundleError(path.string(), "io", "cannot open ring bundle file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_ring_bundle(ss.str(), validate);
}

// ---------------------------------------------------------------------------
// Class literals

namespace {

bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '^' || c == '.' || c == '\'';
}

class LiteralScanner {
 public:
  explicit LiteralScanner(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("malformed class literal '" + std::string(s_) + "' at position " +
                                std::to_string(pos_) + ": " + what);
  }

  // digits ['/' digits] ['i']
  GaussianRational number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '/') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    if (start == pos_) fail("expected a number");
    Rational q;
    try {
      q = Rational::parse(s_.substr(start, pos_ - start));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
    if (peek() == 'i' && !(pos_ + 1 < s_.size() && is_label_char(s_[pos_ + 1]))) {
      ++pos_;
      return GaussianRational(Rational(), q);
    }
    return GaussianRational(q);
  }

  // '(' [sign] number [sign number] ')'
  GaussianRational parenthesized() {
    GaussianRational z;
    bool first = true;
    for (;;) {
      skip_ws();
      if (peek() == ')') {
        if (first) fail("empty parentheses");
        ++pos_;
        return z;
      }
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      skip_ws();
      GaussianRational part;
      if (peek() == 'i' && !(pos_ + 1 < s_.size() && is_label_char(s_[pos_ + 1]))) {
        ++pos_;
        part = GaussianRational(Rational(), Rational(1));
      } else {
        part = number();
      }
      z += negative ? -part : part;
      first = false;
    }
  }

  std::string label() {
    skip_ws();
    const std::size_t start = pos_;
    while (is_label_char(peek())) ++pos_;
    if (start == pos_) fail("expected a basis label");
    return std::string(s_.substr(start, pos_ - start));
  }

  bool at_digit() {
    skip_ws();
    return std::isdigit(static_cast<unsigned char>(peek()));
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

ClassVector parse_class_literal(const RingBundle& bundle, std::string_view text) {
  const IntersectionRing& r = bundle.ring;
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  if (!trimmed.empty() && trimmed.front() == '@') {
    const NamedClass* s = bundle.find_sample(trimmed.substr(1));
    if (!s) throw std::invalid_argument("unknown sample class '" + std::string(trimmed.substr(1)) + "'");
    return s->cls;
  }

  LiteralScanner sc(trimmed);
  if (sc.done()) throw std::invalid_argument("empty class literal");
  std::optional<std::size_t> degree;
  Vector coeffs;
  bool first = true;
  while (!sc.done()) {
    bool negative = false;
    if (sc.accept('-')) {
      negative = true;
    } else if (!sc.accept('+') && !first) {
      sc.fail("expected '+' or '-'");
    }
    GaussianRational coef(1);
    std::string label;
    if (sc.accept('(')) {
      coef = sc.parenthesized();
      if (!sc.accept('*')) sc.fail("expected '*' after coefficient");
      label = sc.label();
    } else if (sc.at_digit()) {
      coef = sc.number();
      label = sc.accept('*') ? sc.label() : r.labels(0).front();
    } else {
      label = sc.label();
    }
    const auto slot = r.find_label(label);
    if (!slot) throw std::invalid_argument("unknown basis label '" + label + "' in class literal");
    if (degree && *degree != slot->first) throw std::invalid_argument("class literal mixes degrees");
    if (!degree) {
      degree = slot->first;
      coeffs.assign(r.hodge(*degree), GaussianRational());
    }
    coeffs[slot->second] += negative ? -coef : coef;
    first = false;
  }
  return ClassVector(*degree, std::move(coeffs));
}

std::string format_class(const IntersectionRing& r, const ClassVector& c) {
  r.check_class(c);
  std::string out;
  const auto& labels = r.labels(c.degree());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const GaussianRational& z = c[i];
    if (z.is_zero()) continue;
    if (z.is_real()) {
      const bool neg = z.re().sign() < 0;
      if (!out.empty()) out += neg ? "-" : "+";
      else if (neg) out += "-";
      out += (neg ? -z.re() : z.re()).str();
    } else {
      if (!out.empty()) out += "+";
      out += "(" + z.str() + ")";
    }
    out += "*" + labels[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace kcs
