#include "kcs/zoo.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#ifndef KCS_DEFAULT_DATA_DIR
#define KCS_DEFAULT_DATA_DIR "data"
#endif

namespace kcs {

namespace {

RingData data_of(const IntersectionRing& r) {
  RingData d;
  d.name = r.name();
  d.n = r.dim();
  d.basis = r.basis_labels();
  d.integral = r.integral_functional();
  for (const auto& [key, out] : r.structure_constants()) {
    d.products.push_back({key.first.first, key.first.second, key.second.first, key.second.second, out});
  }
  return d;
}

ClassVector real_class(std::size_t degree, const std::vector<Rational>& c, Positivity flag) {
  return ClassVector(degree, Vector(c.begin(), c.end()), flag);
}

}  // namespace

ZooEntry point() {
  RingData d;
  d.name = "point";
  d.n = 0;
  d.basis = {{"1"}};
  d.integral = {Rational(1)};
  return ZooEntry{IntersectionRing(d), {}, "ring of a point"};
}

ZooEntry projective_space(std::size_t n) {
  if (n < 1) throw std::invalid_argument("projective_space needs n >= 1");
  RingData d;
  d.name = "p" + std::to_string(n);
  d.n = n;
  d.basis.push_back({"1"});
  for (std::size_t k = 1; k <= n; ++k) d.basis.push_back({k == 1 ? std::string("h") : "h^" + std::to_string(k)});
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = a; a + b <= n; ++b) d.products.push_back({a, 0, b, 0, {Rational(1)}});
  d.integral = {Rational(1)};
  IntersectionRing r(d);
  std::vector<NamedClass> samples{{"h", real_class(1, {Rational(1)}, Positivity::kahler)}};
  return ZooEntry{std::move(r), std::move(samples), "Q[h]/(h^" + std::to_string(n + 1) + ")"};
}

ZooEntry blowup_pn(std::size_t n) {
  if (n < 2) throw std::invalid_argument("blowup_pn needs n >= 2");
  RingData d;
  d.name = "blp" + std::to_string(n);
  d.n = n;
  const auto power = [](const char* base, std::size_t k) {
    return k == 1 ? std::string(base) : std::string(base) + "^" + std::to_string(k);
  };
  d.basis.push_back({"1"});
  for (std::size_t k = 1; k < n; ++k) d.basis.push_back({power("H", k), power("E", k)});
  d.basis.push_back({"pt"});
  // Index 0 is H^k, index 1 is E^k below the top degree.
  for (std::size_t a = 1; a < n; ++a) {
    for (std::size_t b = a; a + b <= n; ++b) {
      const std::size_t c = a + b;
      if (c == n) {
        d.products.push_back({a, 0, b, 0, {Rational(1)}});
        d.products.push_back({a, 1, b, 1, {Rational(n % 2 == 1 ? 1 : -1)}});
      } else {
        d.products.push_back({a, 0, b, 0, {Rational(1), Rational(0)}});
        d.products.push_back({a, 1, b, 1, {Rational(0), Rational(1)}});
      }
    }
  }
  d.integral = {Rational(1)};
  IntersectionRing r(d);
  std::vector<NamedClass> samples{
      {"omega", real_class(1, {Rational(2), Rational(-1)}, Positivity::kahler)},
      {"H", real_class(1, {Rational(1), Rational(0)}, Positivity::nef)},
      {"H_minus_E", real_class(1, {Rational(1), Rational(-1)}, Positivity::nef)},
  };
  return ZooEntry{std::move(r), std::move(samples),
                  "one point blow-up of P^" + std::to_string(n) + "; Kahler cone aH-bE with a > b > 0"};
}

ZooEntry product(const ZooEntry& a, const ZooEntry& b, const std::string& name) {
  const IntersectionRing& r1 = a.ring;
  const IntersectionRing& r2 = b.ring;
  const std::size_t n = r1.dim() + r2.dim();

  std::set<std::string> seen;
  bool collide = false;
  for (std::size_t p = 1; p <= r1.dim(); ++p)
    for (const auto& l : r1.labels(p)) seen.insert(l);
  for (std::size_t p = 1; p <= r2.dim(); ++p)
    for (const auto& l : r2.labels(p)) collide = collide || seen.count(l) > 0;
  const auto label1 = [&](std::size_t d, std::size_t i) { return r1.labels(d)[i] + (collide && d > 0 ? "_1" : ""); };
  const auto label2 = [&](std::size_t d, std::size_t i) { return r2.labels(d)[i] + (collide && d > 0 ? "_2" : ""); };

  struct Part {
    std::size_t d1, i1, i2;
  };
  std::vector<std::vector<Part>> parts(n + 1);
  // index[p][(d1, i1, i2)] -> position in degree p
  std::vector<std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t>> index(n + 1);
  RingData d;
  d.name = name.empty() ? r1.name() + "x" + r2.name() : name;
  d.n = n;
  d.basis.resize(n + 1);
  for (std::size_t p = 0; p <= n; ++p) {
    for (std::size_t d1 = std::min(p, r1.dim()) + 1; d1-- > 0;) {
      const std::size_t d2 = p - d1;
      if (d2 > r2.dim()) continue;
      for (std::size_t i1 = 0; i1 < r1.hodge(d1); ++i1) {
        for (std::size_t i2 = 0; i2 < r2.hodge(d2); ++i2) {
          index[p][{d1, i1, i2}] = parts[p].size();
          parts[p].push_back({d1, i1, i2});
          std::string label;
          if (d2 == 0) label = label1(d1, i1);
          else if (d1 == 0) label = label2(d2, i2);
          else label = label1(d1, i1) + "." + label2(d2, i2);
          d.basis[p].push_back(std::move(label));
        }
      }
    }
  }

  for (std::size_t pa = 1; pa <= n; ++pa) {
    for (std::size_t pb = pa; pa + pb <= n; ++pb) {
      const std::size_t pc = pa + pb;
      for (std::size_t ia = 0; ia < parts[pa].size(); ++ia) {
        for (std::size_t ib = (pa == pb ? ia : 0); ib < parts[pb].size(); ++ib) {
          const Part& x = parts[pa][ia];
          const Part& y = parts[pb][ib];
          const std::size_t e1 = x.d1 + y.d1;
          const std::size_t e2 = (pa - x.d1) + (pb - y.d1);
          if (e1 > r1.dim() || e2 > r2.dim()) continue;
          const auto c1 = r1.basis_product({x.d1, x.i1}, {y.d1, y.i1});
          const auto c2 = r2.basis_product({pa - x.d1, x.i2}, {pb - y.d1, y.i2});
          std::vector<Rational> out(parts[pc].size());
          bool nonzero = false;
          for (std::size_t j1 = 0; j1 < c1.size(); ++j1) {
            if (c1[j1].is_zero()) continue;
            for (std::size_t j2 = 0; j2 < c2.size(); ++j2) {
              if (c2[j2].is_zero()) continue;
              out[index[pc].at({e1, j1, j2})] = c1[j1] * c2[j2];
              nonzero = true;
            }
          }
          if (nonzero) d.products.push_back({pa, ia, pb, ib, std::move(out)});
        }
      }
    }
  }

  d.integral.assign(parts[n].size(), Rational(0));
  for (std::size_t k = 0; k < parts[n].size(); ++k) {
    const Part& x = parts[n][k];
    d.integral[k] = r1.integral_functional()[x.i1] * r2.integral_functional()[x.i2];
  }
  IntersectionRing r(d);

  // Degree-1 pullbacks: first factor occupies the d1 = 1 block.
  const auto pullback = [&](const ClassVector& c, bool first) {
    Vector v(r.hodge(1));
    for (std::size_t i = 0; i < c.size(); ++i) v[index[1].at(first ? std::tuple{1ul, i, 0ul} : std::tuple{0ul, 0ul, i})] = c[i];
    return v;
  };
  const auto sample_name = [&](const std::string& s, int k) { return collide ? s + "_" + std::to_string(k) : s; };
  std::vector<NamedClass> samples;
  for (const auto& s1 : a.samples) {
    if (s1.cls.flag() != Positivity::kahler) continue;
    for (const auto& s2 : b.samples) {
      if (s2.cls.flag() != Positivity::kahler) continue;
      Vector v = pullback(s1.cls, true);
      const Vector w = pullback(s2.cls, false);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += w[i];
      samples.push_back({sample_name(s1.name, 1) + "+" + sample_name(s2.name, 2), ClassVector(1, v, Positivity::kahler)});
    }
  }
  for (const auto& s1 : a.samples) {
    const Positivity f = r2.dim() == 0 ? s1.cls.flag() : Positivity::nef;
    samples.push_back({sample_name(s1.name, 1), ClassVector(1, pullback(s1.cls, true), f)});
  }
  for (const auto& s2 : b.samples) {
    const Positivity f = r1.dim() == 0 ? s2.cls.flag() : Positivity::nef;
    samples.push_back({sample_name(s2.name, 2), ClassVector(1, pullback(s2.cls, false), f)});
  }
  return ZooEntry{std::move(r), std::move(samples), "Kunneth product " + r1.name() + " x " + r2.name()};
}

ZooEntry relabel(const ZooEntry& e, const std::string& name, const std::vector<std::vector<std::string>>& labels,
                 const std::vector<std::string>& sample_names) {
  RingData d = data_of(e.ring);
  if (labels.size() != d.basis.size()) throw std::invalid_argument("relabel: grading mismatch");
  for (std::size_t p = 0; p < labels.size(); ++p)
    if (labels[p].size() != d.basis[p].size()) throw std::invalid_argument("relabel: grading mismatch");
  d.name = name;
  d.basis = labels;
  std::vector<NamedClass> samples = e.samples;
  if (!sample_names.empty()) {
    if (sample_names.size() != samples.size()) throw std::invalid_argument("relabel: sample count mismatch");
    for (std::size_t k = 0; k < samples.size(); ++k) samples[k].name = sample_names[k];
  }
  return ZooEntry{IntersectionRing(d), std::move(samples), e.note};
}

std::filesystem::path data_directory() {
  if (const char* env = std::getenv("KCS_DATA_DIR"); env && *env) return env;
  return KCS_DEFAULT_DATA_DIR;
}

const std::vector<std::string>& catalogue() {
  static const std::vector<std::string> names{"p1xp1", "p1xp2", "p2", "p2xp2", "p3", "p4",
                                              "blp2",  "blp3",  "blp4", "quadric4", "flag3"};
  return names;
}

ZooEntry load_bundled(const std::string& name) {
  const auto& names = catalogue();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw std::invalid_argument("unknown zoo entry '" + name + "'");
  }
  return load_ring_bundle_file(data_directory() / (name + ".json"));
}

ZooEntry load_ring_argument(const std::string& arg, bool validate) {
  if (arg.rfind("zoo:", 0) == 0) {
    const std::string name = arg.substr(4);
    if (validate) return load_bundled(name);
    const auto& names = catalogue();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw std::invalid_argument("unknown zoo entry '" + name + "'");
    }
    return load_ring_bundle_file(data_directory() / (name + ".json"), false);
  }
  return load_ring_bundle_file(arg, validate);
}

ZooEntry build_catalogue_entry(const std::string& name) {
  if (name == "p1xp1") {
    ZooEntry e = product(projective_space(1), projective_space(1));
    e = relabel(e, "p1xp1", {{"1"}, {"a", "b"}, {"pt"}}, {"a+b", "a", "b"});
    e.note = "P^1 x P^1; a, b are the fibre classes";
    return e;
  }
  if (name == "p1xp2") {
    ZooEntry e = product(projective_space(1), projective_space(2));
    e = relabel(e, "p1xp2", {{"1"}, {"a", "b"}, {"ab", "b^2"}, {"pt"}}, {"a+b", "a", "b"});
    e.note = "P^1 x P^2; a from P^1, b the hyperplane of P^2";
    return e;
  }
  if (name == "p2xp2") {
    ZooEntry e = product(projective_space(2), projective_space(2), "p2xp2");
    e.note = "P^2 x P^2";
    return e;
  }
  if (name.size() == 2 && name[0] == 'p' && name[1] >= '1' && name[1] <= '9') {
    return projective_space(static_cast<std::size_t>(name[1] - '0'));
  }
  if (name.size() == 4 && name.rfind("blp", 0) == 0 && name[3] >= '2' && name[3] <= '9') {
    return blowup_pn(static_cast<std::size_t>(name[3] - '0'));
  }
  throw std::invalid_argument("no builder for catalogue entry '" + name + "'");
}

}  // namespace kcs
