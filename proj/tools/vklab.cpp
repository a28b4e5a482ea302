#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <omp.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "selftest.hpp"
#include "vklab/characters.hpp"
#include "vklab/grassmann.hpp"
#include "vklab/ipfamily.hpp"
#include "vklab/measures.hpp"
#include "vklab/sampler.hpp"
#include "vklab/spec_io.hpp"

using namespace vklab;
using nlohmann::json;

namespace {

constexpr const char* kSchema = "vklab-output/1";

/// Bad user input that CLI11 cannot catch on its own.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Outcome {
  json result;
  bool ok = true;
};

json exact(const Rational& x) {
  json j = rational_json(x);
  j["decimal"] = to_double(x);
  return j;
}

int field_q(const Rational& q) {
  if (q.get_den() != 1 || !q.get_num().fits_sint_p() || !is_supported_field_size(static_cast<int>(q.get_num().get_si())))
    throw UsageError("q = " + to_string(q) + " is not a supported field size");
  return static_cast<int>(q.get_num().get_si());
}

Partition partition_arg(const std::string& text, const char* what) {
  try {
    return Partition::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

std::vector<int> composition_arg(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int v = 0;
    try {
      v = std::stoi(item);
    } catch (const std::exception&) {
      throw UsageError(std::string(what) + ": bad entry '" + item + "'");
    }
    if (v < 1) throw UsageError(std::string(what) + ": parts must be positive");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError(std::string(what) + ": empty composition");
  return out;
}

/// Spec file with an optional --q override.
SpecFile spec_arg(const std::string& path, const std::string& q_text) {
  SpecFile s = load_spec_file(path);
  if (!q_text.empty()) s.q = parse_rational(q_text);
  return s;
}

// ---------------------------------------------------------------------------------------------

Outcome kostka_foulkes_cmd(int n, const std::string& t_text) {
  check_degree(n);
  const auto& parts = enumerate_partitions(n);
  json rows = json::array();
  if (!t_text.empty()) {
    const Rational t = parse_rational(t_text);
    const RatMatrix k = kostka_foulkes_cached(n, t);
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = 0; j < parts.size(); ++j)
        if (k(i, j) != 0) rows.push_back({{"lambda", parts[i].to_string()}, {"mu", parts[j].to_string()}, {"value", exact(k(i, j))}});
    return {{{"n", n}, {"t", to_string(t)}, {"entries", rows}}};
  }
  if (n > 10) throw UsageError("polynomial output is limited to n <= 10; pass --t for values");
  for (const auto& lambda : parts)
    for (const auto& mu : parts) {
      if (!dominates(lambda, mu)) continue;
      std::vector<long> coeffs;
      for (const auto& tab : enumerate_ssyt(lambda, mu)) {
        const long c = charge(tab);
        if (static_cast<long>(coeffs.size()) <= c) coeffs.resize(static_cast<std::size_t>(c) + 1, 0);
        ++coeffs[static_cast<std::size_t>(c)];
      }
      rows.push_back({{"lambda", lambda.to_string()}, {"mu", mu.to_string()}, {"coefficients", coeffs}});
    }
  return {{{"n", n}, {"polynomials", rows}}};
}

Outcome cylinder_cmd(const SpecFile& s, const Partition& rho, Convention convention) {
  const GroundParams g = GroundParams::from_q(s.q);
  const Rational value = characteristic_measure(s.spec, g, convention).cylinder(rho);
  const Rational via_r = characteristic_cylinder_via_r(s.spec, rho, g);
  json checks = {{"two_route_equal", value == via_r}, {"in_unit_interval", value >= 0 && value <= 1}};
  json r = {{"rho", rho.to_string()},
            {"q", to_string(s.q)},
            {"convention", convention_name(convention)},
            {"value_num", value.get_num().get_str()},
            {"value_den", value.get_den().get_str()},
            {"value_decimal", to_double(value)},
            {"checks", checks}};
  return {r, value == via_r && value >= 0 && value <= 1};
}

Outcome coherence_cmd(const SpecFile& s, int n_max, const std::string& counts, Convention convention) {
  const int q = field_q(s.q);
  const CountSource source = counts == "closed-form" ? CountSource::closed_form : CountSource::brute_force;
  const auto meas = characteristic_measure(s.spec, GroundParams::from_q(s.q), convention);
  const auto rep = check_coherence(meas, n_max, field(q), source);
  json violations = json::array();
  for (const auto& v : rep.violations)
    violations.push_back({{"rho", v.rho.to_string()}, {"lhs", exact(v.lhs)}, {"rhs", exact(v.rhs)}});
  json norm = json::array();
  for (int n = 1; n < std::min(n_max, 6); ++n) {
    const auto nr = check_normalization(meas, n, field(q));
    norm.push_back({{"n", n}, {"total", exact(nr.total)}, {"ok", nr.ok}});
  }
  bool ok = rep.ok;
  for (const auto& x : norm) ok = ok && x["ok"].get<bool>();
  return {{{"q", q},
           {"nmax", n_max},
           {"counts", counts},
           {"convention", convention_name(convention)},
           {"checks", {{"coherence", rep.ok}, {"checked", rep.checked}, {"violations", violations}, {"normalization", norm}}}},
          ok};
}

/// "11:2,1;111:1" lists (polynomial, partition) pairs; polynomials are coefficient digits, constant first.
ConjClassType class_type_arg(const std::string& text, int q) {
  ConjClassType type;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("class type entries look like poly:partition");
    const Poly f = poly_parse(item.substr(0, colon), q);
    if (!poly_is_irreducible(field(q), f)) throw UsageError("polynomial " + item.substr(0, colon) + " is not irreducible");
    type[f] = partition_arg(item.substr(colon + 1), "class");
  }
  return type;
}

Outcome character_cmd(const std::string& kind, const std::string& label, const std::string& cls, const std::string& q_text,
                      const std::string& spec_path) {
  json r = {{"kind", kind}, {"class", cls}};
  if (kind == "unipotent" || kind == "induced") {
    const Rational q = parse_rational(q_text.empty() ? "2" : q_text);
    const Partition rho = partition_arg(cls, "class");
    Rational v;
    if (kind == "unipotent") {
      v = chi_unipotent(partition_arg(label, "label"), rho, q);
    } else {
      v = psi_unipotent(composition_arg(label, "label"), rho, q);
    }
    r["label"] = label;
    r["q"] = to_string(q);
    r["value"] = exact(v);
    return {r};
  }
  if (kind != "glb") throw UsageError("--kind must be unipotent, induced or glb");
  if (spec_path.empty()) throw UsageError("--kind glb needs --spec");
  const SpecFile s = spec_arg(spec_path, q_text);
  const GroundParams g = GroundParams::from_q(s.q);
  r["q"] = to_string(s.q);
  if (cls.find(':') == std::string::npos) {
    r["value"] = exact(glb_character_unipotent(s.spec, partition_arg(cls, "class"), g));
    return {r};
  }
  const int q = field_q(s.q);
  const ConjClassType type = class_type_arg(cls, q);
  const Rational v = glb_character_general(s.spec, type, g);
  r["value"] = exact(v);
  int n = 0;
  for (const auto& [f, mu] : type) n += poly_degree(f) * mu.size();
  if (n <= 5) {
    std::vector<MatGF> blocks;
    for (const auto& [f, mu] : type) blocks.push_back(primary_element(f, mu, field(q)));
    const Rational flags = glb_character_via_flags(s.spec, block_diagonal(blocks));
    r["checks"] = {{"flag_count_route", exact(flags)}, {"routes_equal", flags == v}};
    return {r, flags == v};
  }
  return {r};
}

Outcome flag_count_cmd(const std::string& matrix, const std::string& rho_text, const std::string& mu_text, int q) {
  if (!is_supported_field_size(q)) throw UsageError("unsupported q");
  if (matrix.empty() == rho_text.empty()) throw UsageError("pass exactly one of --matrix and --rho");
  const MatGF g = matrix.empty() ? canonical_unipotent(partition_arg(rho_text, "rho"), field(q)) : MatGF::parse(field(q), matrix);
  const std::vector<int> mu = composition_arg(mu_text, "mu");
  const Integer count = count_fixed_flags(g, mu);
  json r = {{"matrix", g.to_text()}, {"q", q}, {"mu", mu_text}, {"count", count.get_str()},
            {"class_type", conj_class_type_to_string(conj_class_type(g), q)}};
  const ConjClassType type = conj_class_type(g);
  const Poly t_minus_1 = poly_parse(q == 2 ? "11" : std::to_string(q - 1) + "1", q);
  if (type.size() == 1 && type.begin()->first == t_minus_1) {
    const Rational predicted = psi_unipotent(mu, type.begin()->second, q);
    r["checks"] = {{"psi_unipotent", exact(predicted)}, {"equal", predicted == Rational(count)}};
    return {r, predicted == Rational(count)};
  }
  return {r};
}

Outcome grassmann_cmd(int n, int k, int q) {
  if (!is_supported_field_size(q)) throw UsageError("unsupported q");
  if (k < 0 || k > n) throw UsageError("need 0 <= k <= n");
  const auto cells = enumerate_schubert_cells(n, k, field(q));
  json list = json::array();
  bool ok = true;
  Integer total = 0;
  std::vector<SchubertSymbol> symbols;
  for (const auto& [eps, count] : cells) {
    const SchubertSymbol s{eps, SchubertSymbol::Tail::zeros};
    const Integer predicted = finite_cell_size(s, q);
    ok = ok && predicted == count;
    total += count;
    symbols.push_back(s);
    list.push_back({{"symbol", s.to_string()},
                    {"size", count.get_str()},
                    {"predicted_size", predicted.get_str()},
                    {"dimension", cell_dimension(s).value},
                    {"path_exponent", path_exponent(eps)}});
  }
  json table = json::array();
  for (const auto& a : symbols) {
    json row = json::array();
    for (const auto& b : symbols) {
      const Rational c = cocycle(a, b, q);
      const Rational ratio = Rational(cells.at(a.eps)) / Rational(cells.at(b.eps));
      ok = ok && c == ratio;
      row.push_back(to_string(c));
    }
    table.push_back(row);
  }
  const Rational gauss = gaussian_binomial(n, k, q);
  const bool total_ok = Rational(total) == gauss && pascal_q_paths(n, k, q) == gauss;
  return {{{"n", n},
           {"k", k},
           {"q", q},
           {"cells", list},
           {"cocycle", table},
           {"checks", {{"sizes_and_ratios", ok}, {"total_is_gaussian_binomial", total_ok}}}},
          ok && total_ok};
}

json verdict_json(const Verdict& v) { return {{"ok", v.ok}, {"checked", v.checked}, {"detail", v.detail}}; }

Outcome ipfamily_cmd(const std::string& example, int m, int q, int h) {
  json verdicts;
  bool ok = true;
  auto add = [&](const std::string& name, const Verdict& v) {
    verdicts[name] = verdict_json(v);
    ok = ok && v.ok;
  };
  IPLevel level;
  if (example == "wreath") {
    level = build_wreath_ip_level(m, cyclic_group(h));
  } else {
    if (!is_supported_field_size(q)) throw UsageError("unsupported q");
    if (example == "gl") level = build_gl_ip_level(m, field(q));
    else if (example == "affine") level = build_affine_ip_level(m, field(q));
    else throw UsageError("--example must be gl, affine or wreath");
  }
  add("level", {verify_level(level), 1, ""});
  add("embedding", embed_homomorphism_check(level));
  if (example == "gl") {
    if (m + 1 <= 3) add("flag_induction", flag_induction_check(m, field(q)));
    const auto haar = characteristic_measure(ThomaSpec::from_atoms({1}), GroundParams::from_q(q));
    add("haar_coherence", coherence_bridge_check([&](const Partition& p) { return haar.cylinder(p); }, m + 1, field(q)));
  }
  if (example == "wreath") {
    const std::vector<Rational> uniform(static_cast<std::size_t>(h), Rational(1, h));
    add("de_finetti_uniform", de_finetti_central_check(m + 1, cyclic_group(h), uniform));
  }
  return {{{"example", example},
           {"m", m},
           {"group", level.G->name()},
           {"sizes", {{"G", level.G->size()}, {"P", level.P.size()}, {"N", level.N.size()}, {"G_prev", level.G_prev->size()}}},
           {"verdicts", verdicts}},
          ok};
}

json rational_list(const std::vector<Rational>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(exact(x));
  return out;
}

Outcome lln_cmd(LlnConfig cfg, const std::string& csv_path, bool gate) {
  const FrequencyReport rep = run_lln(cfg);
  json series = {{"times", rep.series.times},
                 {"row_mean", rep.series.row_mean},
                 {"row_se", rep.series.row_se},
                 {"col_mean", rep.series.col_mean},
                 {"col_se", rep.series.col_se}};
  json final_rows = json::array();
  bool ok = true;
  for (int k = 1; k <= cfg.k_max; ++k) {
    const std::size_t i = static_cast<std::size_t>(k - 1);
    const double mean = rep.final_row_mean()[i], se = rep.final_row_se()[i];
    json e = {{"k", k}, {"mean", mean}, {"se", se}};
    if (i < rep.targets.rows.size()) {
      const double target = to_double(rep.targets.rows[i]);
      const bool within = std::abs(mean - target) <= 3 * se + 1e-12;
      e["target"] = target;
      e["within_3se"] = within;
      if (gate) ok = ok && within && (k > 2 || std::abs(mean - target) <= 0.02);
    }
    final_rows.push_back(e);
  }
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw std::runtime_error("cannot write " + csv_path);
    out << "trial,step,row\n";
    for (std::size_t t = 0; t < rep.trials.size(); ++t)
      for (std::size_t s = 0; s < rep.trials[t].rows.size(); ++s) out << t << ',' << s + 1 << ',' << rep.trials[t].rows[s] << '\n';
  }
  json r = {{"mode", cfg.mode == LlnMode::haar ? "haar" : "measure"},
            {"trials", cfg.trials},
            {"n", cfg.n_max},
            {"series", series},
            {"targets", {{"rows", rational_list(rep.targets.rows)}, {"columns", rational_list(rep.targets.columns)}}},
            {"final_rows", final_rows},
            {"fast_path_counts", rep.fast_path_counts},
            {"guards_run", rep.guards_run}};
  if (gate) r["gate"] = ok;
  return {r, ok};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and Monte Carlo computations for central measures on unitriangular groups over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 0;
  std::string out_path;
  app.add_option("--threads", threads, "worker threads (default: all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--out", out_path, "write JSON here instead of stdout");

  json params;
  std::function<Outcome()> run;
  std::uint64_t seed = 0;

  // kostka-foulkes
  auto* kf = app.add_subcommand("kostka-foulkes", "Kostka-Foulkes polynomials K_{λμ}(t), or their values at --t");
  int kf_n = 3;
  std::string kf_t;
  kf->add_option("--n", kf_n, "degree")->required()->check(CLI::PositiveNumber);
  kf->add_option("--t", kf_t, "evaluate at this rational (uses VKLAB_CACHE_DIR)");
  kf->callback([&] {
    params = {{"n", kf_n}, {"t", kf_t}};
    run = [&] { return kostka_foulkes_cmd(kf_n, kf_t); };
  });

  // cylinder
  auto* cy = app.add_subcommand("cylinder", "cylinder probability M_ρ of the characteristic measure");
  std::string cy_spec, cy_q, cy_rho, cy_conv = convention_name(default_convention());
  cy->add_option("--spec", cy_spec, "spec file")->required();
  cy->add_option("--q", cy_q, "field size (overrides the spec file)");
  cy->add_option("--rho", cy_rho, "partition, e.g. 2,1")->required();
  cy->add_option("--convention", cy_conv, "atom expansion convention");
  cy->callback([&] {
    params = {{"spec", cy_spec}, {"q", cy_q}, {"rho", cy_rho}, {"convention", cy_conv}};
    run = [&] { return cylinder_cmd(spec_arg(cy_spec, cy_q), partition_arg(cy_rho, "rho"), parse_convention(cy_conv)); };
  });

  // coherence-check
  auto* co = app.add_subcommand("coherence-check", "exact coherence of the characteristic measure for |ρ| < nmax");
  std::string co_spec, co_q, co_counts = "brute-force", co_conv = convention_name(default_convention());
  int co_nmax = 5;
  co->add_option("--spec", co_spec, "spec file")->required();
  co->add_option("--q", co_q, "field size (overrides the spec file)");
  co->add_option("--nmax", co_nmax, "check every ρ with |ρ| < nmax")->check(CLI::Range(1, 12));
  co->add_option("--counts", co_counts, "extension counts")->check(CLI::IsMember({"brute-force", "closed-form"}));
  co->add_option("--convention", co_conv, "atom expansion convention");
  co->callback([&] {
    params = {{"spec", co_spec}, {"q", co_q}, {"nmax", co_nmax}, {"counts", co_counts}, {"convention", co_conv}};
    run = [&] { return coherence_cmd(spec_arg(co_spec, co_q), co_nmax, co_counts, parse_convention(co_conv)); };
  });

  // character
  auto* ch = app.add_subcommand("character", "unipotent, flag (induced) or GLB character values");
  std::string ch_kind, ch_label, ch_class, ch_q, ch_spec;
  ch->add_option("--kind", ch_kind, "unipotent | induced | glb")->required()->check(CLI::IsMember({"unipotent", "induced", "glb"}));
  ch->add_option("--label", ch_label, "λ (unipotent) or μ (induced)");
  ch->add_option("--class", ch_class, "ρ, or poly:partition;... for a general GLB class")->required();
  ch->add_option("--q", ch_q, "field size");
  ch->add_option("--spec", ch_spec, "spec file (glb)");
  ch->callback([&] {
    params = {{"kind", ch_kind}, {"label", ch_label}, {"class", ch_class}, {"q", ch_q}, {"spec", ch_spec}};
    run = [&] {
      if (ch_kind != "glb" && ch_label.empty()) throw UsageError("--label is required");
      return character_cmd(ch_kind, ch_label, ch_class, ch_q, ch_spec);
    };
  });

  // lln
  auto* ll = app.add_subcommand("lln", "Monte Carlo row and column frequencies of the growth process");
  LlnConfig cfg;
  std::string ll_mode = "haar", ll_spec, ll_csv;
  bool ll_gate = false;
  ll->add_option("--mode", ll_mode, "haar | measure")->check(CLI::IsMember({"haar", "measure"}));
  ll->add_option("--spec", ll_spec, "spec file (measure mode)");
  auto* ll_q = ll->add_option("--q", cfg.q, "field size (defaults to the spec file's q)");
  ll->add_option("--n", cfg.n_max, "matrix size")->check(CLI::Range(1, 100000));
  ll->add_option("--trials", cfg.trials, "number of independent paths")->check(CLI::PositiveNumber);
  ll->add_option("--seed", cfg.seed, "RNG seed");
  ll->add_option("--k-max", cfg.k_max, "rows and columns to track")->check(CLI::PositiveNumber);
  ll->add_option("--record-every", cfg.record_every, "series spacing")->check(CLI::PositiveNumber);
  ll->add_option("--guard-interval", cfg.guard_interval, "tracker self-check spacing (haar)")->check(CLI::PositiveNumber);
  ll->add_flag("--fast-path-counts", cfg.fast_path_counts, "use closed-form counts beyond their validated degree");
  ll->add_flag("--gate", ll_gate, "fail unless the final row frequencies are within 3 SE of their targets");
  ll->add_option("--csv", ll_csv, "write per-step trajectories (trial,step,row)");
  ll->callback([&] {
    params = {{"mode", ll_mode}, {"spec", ll_spec}, {"q", cfg.q}, {"n", cfg.n_max}, {"trials", cfg.trials},
              {"k_max", cfg.k_max}, {"record_every", cfg.record_every}, {"guard_interval", cfg.guard_interval},
              {"fast_path_counts", cfg.fast_path_counts}, {"gate", ll_gate}, {"csv", ll_csv}};
    seed = cfg.seed;
    run = [&] {
      cfg.mode = ll_mode == "haar" ? LlnMode::haar : LlnMode::measure;
      if (cfg.mode == LlnMode::measure) {
        if (ll_spec.empty()) throw UsageError("--mode measure needs --spec");
        const SpecFile sf = load_spec_file(ll_spec);
        cfg.spec = sf.spec;
        if (ll_q->count() == 0) cfg.q = field_q(sf.q);
      }
      if (!is_supported_field_size(cfg.q)) throw UsageError("unsupported q");
      cfg.threads = threads;
      return lln_cmd(cfg, ll_csv, ll_gate);
    };
  });

  // flag-count
  auto* fc = app.add_subcommand("flag-count", "number of flags of type μ fixed by a matrix");
  std::string fc_matrix, fc_rho, fc_mu;
  int fc_q = 2;
  fc->add_option("--matrix", fc_matrix, "rows separated by ';', e.g. 110;010;001");
  fc->add_option("--rho", fc_rho, "use the unipotent matrix of Jordan type ρ");
  fc->add_option("--mu", fc_mu, "flag type (composition)")->required();
  fc->add_option("--q", fc_q, "field size");
  fc->callback([&] {
    params = {{"matrix", fc_matrix}, {"rho", fc_rho}, {"mu", fc_mu}, {"q", fc_q}};
    run = [&] { return flag_count_cmd(fc_matrix, fc_rho, fc_mu, fc_q); };
  });

  // grassmann
  auto* gr = app.add_subcommand("grassmann", "Schubert cells of Gr_k(F_q^n)");
  int gr_n = 4, gr_k = 2, gr_q = 2;
  gr->add_option("--n", gr_n, "ambient dimension")->check(CLI::Range(1, 12));
  gr->add_option("--k", gr_k, "subspace dimension");
  gr->add_option("--q", gr_q, "field size");
  gr->callback([&] {
    params = {{"n", gr_n}, {"k", gr_k}, {"q", gr_q}};
    run = [&] { return grassmann_cmd(gr_n, gr_k, gr_q); };
  });

  // ipfamily-check
  auto* ip = app.add_subcommand("ipfamily-check", "verdicts for one level of an inductive family");
  std::string ip_example = "gl";
  int ip_m = 1, ip_q = 2, ip_h = 2;
  ip->add_option("--example", ip_example, "gl | affine | wreath")->check(CLI::IsMember({"gl", "affine", "wreath"}));
  ip->add_option("--m", ip_m, "level")->check(CLI::Range(1, 4));
  ip->add_option("--q", ip_q, "field size (gl, affine)");
  ip->add_option("--order", ip_h, "order of the cyclic coefficient group (wreath)")->check(CLI::Range(1, 6));
  ip->callback([&] {
    params = {{"example", ip_example}, {"m", ip_m}, {"q", ip_q}, {"h", ip_h}};
    run = [&] { return ipfamily_cmd(ip_example, ip_m, ip_q, ip_h); };
  });

  // selftest
  auto* st = app.add_subcommand("selftest", "exact identity suites");
  std::string st_level = "quick";
  st->add_option("--level", st_level, "quick | full")->check(CLI::IsMember({"quick", "full"}));
  st->callback([&] {
    params = {{"level", st_level}};
    run = [&] {
      const auto results = run_selftest(st_level == "full");
      json list = json::array();
      bool ok = true;
      for (const auto& r : results) {
        list.push_back({{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
        ok = ok && r.ok;
      }
      return Outcome{{{"level", st_level}, {"suites", list}}, ok};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (threads > 0) omp_set_num_threads(threads);
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = run();
  } catch (const RangeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.get_subcommands().front()->help();
    return 2;
  } catch (const DegreeLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const SizeLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  const json doc = {{"schema", kSchema},
                    {"manifest",
                     {{"command", app.get_subcommands().front()->get_name()},
                      {"params", params},
                      {"seed", seed},
                      {"version", VKLAB_VERSION},
                      {"timing_ms", ms}}},
                    {"ok", outcome.ok},
                    {"result", outcome.result}};
  if (out_path.empty()) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return 2;
    }
    out << doc.dump(2) << '\n';
  }
  return outcome.ok ? 0 : 1;
}
