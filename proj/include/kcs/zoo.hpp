#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "kcs/bundle.hpp"

namespace kcs {

using ZooEntry = RingBundle;

/// The ring of a point: n = 0, H^0 = Q.
ZooEntry point();

/// Q[h]/(h^{n+1}) with int h^n = 1; sample omega = h.
ZooEntry projective_space(std::size_t n);

/// One point blow-up of P^n (n >= 2): H.E = 0, int H^n = 1, int E^n = (-1)^{n-1}.
/// Samples 2H-E (kahler), H and H-E (nef); the Kahler cone is aH-bE, a > b > 0.
ZooEntry blowup_pn(std::size_t n);

/// Kunneth product. Samples are sums of Kahler samples of the two factors and
/// the pullbacks of every factor sample (nef unless the other factor is a point).
ZooEntry product(const ZooEntry& a, const ZooEntry& b, const std::string& name = "");

/// Replaces the basis labels (same shape) and optionally the sample names.
ZooEntry relabel(const ZooEntry& e, const std::string& name, const std::vector<std::vector<std::string>>& labels,
                 const std::vector<std::string>& sample_names = {});

/// KCS_DATA_DIR if set, otherwise the directory configured at build time.
std::filesystem::path data_directory();

/// Names of the bundled rings, in catalogue order.
const std::vector<std::string>& catalogue();

/// Loads and validates <data_directory()>/<name>.json. Throws
/// std::invalid_argument for names outside the catalogue.
ZooEntry load_bundled(const std::string& name);

/// Ring argument of the CLI: "zoo:<name>" or a path to a bundle file.
ZooEntry load_ring_argument(const std::string& arg, bool validate = true);

/// Builder output for the generated catalogue entries (everything but the
/// hand-written quadric4 and flag3). Throws std::invalid_argument otherwise.
ZooEntry build_catalogue_entry(const std::string& name);

}  // namespace kcs
