#pragma once

#include <wsym/catalog.hpp>
#include <wsym/expdemo.hpp>
#include <wsym/forms.hpp>
#include <wsym/geodesic.hpp>
#include <wsym/io.hpp>
#include <wsym/lie_algebra.hpp>
#include <wsym/report.hpp>
#include <wsym/weak_symmetry.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>

namespace wsym::cli {

enum class Command {
  catalog_list,
  catalog_export,
  validate,
  lcs,
  signature,
  check_invariance,
  check_go,
  check_two_step,
  check_weak_symmetry,
  demo_exp_image,
};

inline const char* to_string(Command c) {
  switch (c) {
    case Command::catalog_list: return "catalog-list";
    case Command::catalog_export: return "catalog-export";
    case Command::validate: return "validate";
    case Command::lcs: return "lcs";
    case Command::signature: return "signature";
    case Command::check_invariance: return "check-invariance";
    case Command::check_go: return "check-go";
    case Command::check_two_step: return "check-two-step";
    case Command::check_weak_symmetry: return "check-weak-symmetry";
    case Command::demo_exp_image: return "demo-exp-image";
  }
  return "unknown";
}

struct RunConfig {
  Command command = Command::catalog_list;
  std::string space_id;  // catalog id
  Params params;
  std::string space_file;
  std::string algebra_file;
  std::string form_file;
  std::string matrix;  // JSON literal or path, for demo-exp-image
  bool det_one = true;
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  std::string output;  // empty: stdout
  bool pretty = false;
};

/// Input problems detected by the dispatcher (exit code 2).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

struct LoadedSpace {
  std::string id;
  ReductiveSpace space;
  std::optional<Subspace> nilradical;
};

inline LoadedSpace load_space(const RunConfig& cfg) {
  if (!cfg.space_file.empty()) {
    io::SpaceBundle b = io::space_from_json(io::read_json_file(cfg.space_file));
    return {b.id, std::move(b.space), std::move(b.nilradical)};
  }
  if (cfg.space_id.empty()) throw UsageError("no space given: use --space <catalog id> or --file <bundle.json>");
  CatalogEntry e = make_catalog_entry(cfg.space_id, cfg.params);
  return {e.id, std::move(e.space), std::move(e.nilradical)};
}

inline LieAlgebra load_algebra(const RunConfig& cfg) {
  if (!cfg.algebra_file.empty()) return io::algebra_from_json(io::read_json_file(cfg.algebra_file));
  return load_space(cfg).space.algebra();
}

/// Metric of a space with h = 0, rewritten in the algebra's own basis.
inline BilinearForm metric_on_g(const ReductiveSpace& s) {
  if (s.dim_h() != 0) throw UsageError("metric is only defined on m; this check needs h = 0 or --algebra/--form files");
  auto inv = inverse(Matrix::from_columns(s.m_frame(), s.algebra().dim()));
  return s.metric().congruent(*inv);
}

inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline expdemo::RealMatrix parse_matrix(const std::string& text) {
  json j;
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '[') {
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw UsageError(std::string("malformed --matrix JSON: ") + e.what());
    }
  } else {
    j = io::read_json_file(text);
  }
  if (!j.is_array() || j.empty()) throw UsageError("--matrix must be a JSON array of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  expdemo::RealMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) throw UsageError("--matrix must be square");
    for (Eigen::Index k = 0; k < n; ++k) {
      const json& x = row[static_cast<std::size_t>(k)];
      if (x.is_number()) m(i, k) = x.get<double>();
      else if (x.is_string()) m(i, k) = parse_rational(x.get<std::string>()).get_d();
      else throw UsageError("--matrix entries must be numbers or \"p/q\" strings");
    }
  }
  return m;
}

inline json dims_json(const std::vector<Subspace>& series) {
  json d = json::array();
  for (const auto& s : series) d.push_back(s.dim());
  return d;
}

inline Report dispatch(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::catalog_list: {
      json entries = json::array();
      for (const auto& id : catalog_ids()) {
        CatalogEntry e = make_catalog_entry(id, {});
        json params = json::object();
        for (const auto& [k, v] : e.params) params[k] = wsym::to_string(v);
        entries.push_back({{"id", e.id},
                           {"default_params", params},
                           {"dim_g", e.space.algebra().dim()},
                           {"dim_h", e.space.dim_h()},
                           {"dim_m", e.space.dim_m()},
                           {"provenance", e.provenance}});
      }
      Report r;
      r.check = "catalog-list";
      r.witness = {{"entries", entries}};
      return r;
    }
    case Command::catalog_export: {
      if (cfg.space_id.empty()) throw UsageError("catalog export needs --id <catalog id>");
      Report r;
      r.check = "catalog-export";
      r.witness = io::catalog_entry_to_json(make_catalog_entry(cfg.space_id, cfg.params));
      return r;
    }
    case Command::validate: return validate(load_algebra(cfg));
    case Command::lcs: {
      LieAlgebra g = load_algebra(cfg);
      auto series = lower_central_series(g);
      auto step = nilpotency_step(g);
      Report r;
      r.check = "lcs";
      r.witness = {{"dims", dims_json(series)}, {"nilpotency_step", step ? json(*step) : json("not_nilpotent")}};
      return r;
    }
    case Command::signature: {
      BilinearForm f = cfg.form_file.empty() ? load_space(cfg).space.metric() : io::form_from_json(io::read_json_file(cfg.form_file));
      Report r;
      r.check = "signature";
      r.witness = {{"signature", to_json(wsym::signature(f))}, {"dim", f.dim()}};
      return r;
    }
    case Command::check_invariance: {
      if (!cfg.algebra_file.empty() && !cfg.form_file.empty())
        return invariance_defect(io::algebra_from_json(io::read_json_file(cfg.algebra_file)),
                                 io::form_from_json(io::read_json_file(cfg.form_file)));
      LoadedSpace s = load_space(cfg);
      return invariance_defect(s.space.algebra(), metric_on_g(s.space));
    }
    case Command::check_go: {
      LoadedSpace s = load_space(cfg);
      return go_survey(s.space, {cfg.seed, cfg.samples}, s.id).to_report();
    }
    case Command::check_two_step: {
      LoadedSpace s = load_space(cfg);
      if (!s.nilradical) throw UsageError("space '" + s.id + "' has no nilradical to test");
      return two_step_criterion(s.space, *s.nilradical).to_report();
    }
    case Command::check_weak_symmetry: {
      if (cfg.space_id.empty()) throw UsageError("check weak-symmetry needs --space heisenberg|sphere-un|sp1-spn");
      return weak_symmetry_survey(cfg.space_id, cfg.params, {cfg.seed, cfg.samples});
    }
    case Command::demo_exp_image: {
      if (cfg.matrix.empty()) throw UsageError("demo exp-image needs --matrix <json>");
      expdemo::RealMatrix m = parse_matrix(cfg.matrix);
      auto verdict = expdemo::in_exp_image(m, cfg.det_one);
      json ev = json::array();
      for (const auto& z : expdemo::eigenvalues(m)) ev.push_back({format_double(z.real()), format_double(z.imag())});
      Report r;
      r.check = "exp-image";
      r.witness = {{"in_exp_image", expdemo::to_string(verdict)}, {"eigenvalues", ev}, {"tolerance", expdemo::kTolerance}};
      return r;
    }
  }
  throw UsageError("unknown command");
}

inline void emit(const RunConfig& cfg, const json& payload, const Report& r, std::ostream& out) {
  std::string text;
  if (cfg.pretty) {
    text = std::string(to_string(cfg.command)) + ": " + wsym::to_string(r.verdict) + "\n" + payload.dump(2) + "\n";
  } else {
    text = payload.dump() + "\n";
  }
  if (cfg.output.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.output);
    if (!f) throw UsageError("cannot write '" + cfg.output + "'");
    f << text;
  }
}

}  // namespace detail

/// Runs one command; exit code 0 pass, 1 fail, 2 usage or input error.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    Report r;
    try {
      r = detail::dispatch(cfg);
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const nlohmann::json::exception&) {
      throw;
    } catch (const std::logic_error& e) {
      r.check = to_string(cfg.command);
      r.verdict = Verdict::error;
      r.witness = {{"internal_error", e.what()}};
    }
    r.seed = cfg.seed;
    r.samples = cfg.samples;
    // catalog export writes the bundle itself
    const json payload = cfg.command == Command::catalog_export && r.passed() ? r.witness : r.to_json();
    detail::emit(cfg, payload, r, out);
    return r.passed() ? 0 : 1;
  } catch (const nlohmann::json::exception& e) {
    err << "wsym: input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "wsym: input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "wsym: error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace wsym::cli
