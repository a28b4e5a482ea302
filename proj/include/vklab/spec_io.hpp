#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "vklab/symfun.hpp"

namespace vklab {

/// Malformed spec or matrix file.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A spec file: the Thoma parameters plus the field size they are meant for.
///
///   {"alphas": [{"value": "1/2", "geometric": false}, ...],
///    "betas":  [...],
///    "gamma":  "0",
///    "q":      "2"}
///
/// A geometric entry spreads `value` over the family (1-r) r^j; r is read from an optional
/// "ratio" field and defaults to 1/q.
struct SpecFile {
  ThomaSpec spec;
  Rational q;
};

SpecFile spec_from_json(const nlohmann::json& j);
nlohmann::json spec_to_json(const SpecFile& s);
SpecFile load_spec_file(const std::filesystem::path& path);

/// {"num": "...", "den": "..."}
nlohmann::json rational_json(const Rational& x);

/// Versioned text format for exact matrices: a header line "vklab-matrix 1 <rows> <cols> <tag>"
/// followed by one row per line, entries as p/q.
void write_matrix(const std::filesystem::path& path, const RatMatrix& m, const std::string& tag);
/// Returns nothing if the file is missing; throws FormatError on a version or tag mismatch.
std::optional<RatMatrix> read_matrix(const std::filesystem::path& path, const std::string& tag);

/// K_{λμ}(t) through the directory in VKLAB_CACHE_DIR when set; computed directly otherwise.
RatMatrix kostka_foulkes_cached(int n, const Rational& t);

}  // namespace vklab
