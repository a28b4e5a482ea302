#include "vklab/spec_io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace vklab {

namespace {

Rational read_rational(const nlohmann::json& j, const char* what) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const std::exception& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
  throw FormatError(std::string(what) + ": expected a \"p/q\" string");
}

std::vector<SpecEntry> read_entries(const nlohmann::json& j, const char* what, const Rational& q) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be a list");
  std::vector<SpecEntry> out;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("value")) throw FormatError(std::string(what) + " entries need a value");
    SpecEntry s{read_rational(e["value"], what), 0};
    const bool geometric = e.value("geometric", false);
    if (geometric) s.ratio = e.contains("ratio") ? read_rational(e["ratio"], "ratio") : Rational(1) / q;
    if (geometric && (s.ratio <= 0 || s.ratio >= 1)) throw FormatError("geometric ratio must lie in (0, 1)");
    out.push_back(s);
  }
  return out;
}

nlohmann::json write_entries(const std::vector<SpecEntry>& entries) {
  auto out = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json j{{"value", to_string(e.value)}, {"geometric", e.geometric()}};
    if (e.geometric()) j["ratio"] = to_string(e.ratio);
    out.push_back(j);
  }
  return out;
}

}  // namespace

SpecFile spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw FormatError("spec must be a JSON object");
  SpecFile s;
  s.q = j.contains("q") ? read_rational(j["q"], "q") : Rational(2);
  if (s.q <= 1) throw FormatError("q must exceed 1");
  s.spec.alphas = read_entries(j.value("alphas", nlohmann::json::array()), "alphas", s.q);
  s.spec.betas = read_entries(j.value("betas", nlohmann::json::array()), "betas", s.q);
  s.spec.gamma = j.contains("gamma") ? read_rational(j["gamma"], "gamma") : Rational(0);
  try {
    s.spec.validate();
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  return s;
}

nlohmann::json spec_to_json(const SpecFile& s) {
  return {{"alphas", write_entries(s.spec.alphas)},
          {"betas", write_entries(s.spec.betas)},
          {"gamma", to_string(s.spec.gamma)},
          {"q", to_string(s.q)}};
}

SpecFile load_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open spec file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
  return spec_from_json(j);
}

nlohmann::json rational_json(const Rational& x) { return {{"num", x.get_num().get_str()}, {"den", x.get_den().get_str()}}; }

void write_matrix(const std::filesystem::path& path, const RatMatrix& m, const std::string& tag) {
  // write then rename so readers never see a partial file
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << "vklab-matrix 1 " << m.rows() << ' ' << m.cols() << ' ' << tag << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << to_string(m(i, j));
      out << '\n';
    }
  }
  std::filesystem::rename(tmp, path);
}

std::optional<RatMatrix> read_matrix(const std::filesystem::path& path, const std::string& tag) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string magic, file_tag;
  int version = 0;
  std::size_t rows = 0, cols = 0;
  in >> magic >> version >> rows >> cols >> file_tag;
  if (magic != "vklab-matrix" || version != 1) throw FormatError(path.string() + ": unknown matrix format");
  if (file_tag != tag) throw FormatError(path.string() + ": tag " + file_tag + " does not match " + tag);
  RatMatrix m(rows, cols);
  std::string word;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      if (!(in >> word)) throw FormatError(path.string() + ": truncated");
      m(i, j) = parse_rational(word);
    }
  return m;
}

RatMatrix kostka_foulkes_cached(int n, const Rational& t) {
  const char* dir = std::getenv("VKLAB_CACHE_DIR");
  if (!dir || !*dir) return kostka_foulkes(n, t);
  std::string t_text = to_string(t);
  for (char& c : t_text)
    if (c == '/') c = '_';
  const std::string tag = "kostka-foulkes-n" + std::to_string(n) + "-t" + t_text;
  const std::filesystem::path path = std::filesystem::path(dir) / (tag + ".txt");
  if (auto m = read_matrix(path, tag)) return *m;
  const RatMatrix m = kostka_foulkes(n, t);
  std::filesystem::create_directories(dir);
  write_matrix(path, m, tag);
  return m;
}

}  // namespace vklab
