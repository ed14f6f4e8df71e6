#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kcs/ring.hpp"

namespace kcs {

struct NamedClass {
  std::string name;
  ClassVector cls;  // degree 1, flagged kahler or nef
};

/// A ring together with its declared degree-1 sample classes. Strictly
/// positive combinations of the samples are taken to be Kahler.
struct RingBundle {
  IntersectionRing ring;
  std::vector<NamedClass> samples;
  std::string note;

  std::vector<ClassVector> generators() const;
  const NamedClass* find_sample(std::string_view name) const;
};

/// Parse or validation failure. Syntax errors carry line/column (1-based);
/// semantic errors carry the field path and the violated constraint.
class BundleError : public std::runtime_error {
 public:
  BundleError(std::string path, std::string constraint, const std::string& detail, std::size_t line = 0,
              std::size_t column = 0);

  const std::string& path() const { return path_; }
  const std::string& constraint() const { return constraint_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string path_;
  std::string constraint_;
  std::size_t line_;
  std::size_t column_;
};

/// With `validate` set, runs validate_ring and the sample sanity checks and
/// throws on the first failure.
RingBundle parse_ring_bundle(std::string_view text, bool validate = true);

/// Canonical form: sorted keys, reduced rationals, one product record per
/// unordered basis pair (first slot <= second), zero records dropped.
std::string serialize_ring_bundle(const RingBundle& bundle);

RingBundle load_ring_bundle_file(const std::filesystem::path& path, bool validate = true);

/// Class literals over the ring's basis labels, e.g. "3*a+1*b", "2*H-E",
/// "(1+2i)*a-1/2*b", "1/3i*H"; "@name" selects a declared sample (keeping its
/// flag). A bare number is a multiple of the unit. Throws std::invalid_argument.
ClassVector parse_class_literal(const RingBundle& bundle, std::string_view text);

/// Inverse of parse_class_literal for non-sample literals; "0" for zero.
std::string format_class(const IntersectionRing& r, const ClassVector& c);

}  // namespace kcs
