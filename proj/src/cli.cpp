#include "qbilat/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "qbilat/catalog.hpp"
#include "qbilat/harness.hpp"
#include "qbilat/inversion.hpp"
#include "qbilat/report_json.hpp"
#include "qbilat/series.hpp"

namespace qbilat {

namespace {

using nlohmann::json;

std::string fmt(double v, const char* spec = "%.3g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string fmt_complex(Complex z) {
  std::string s = fmt(z.real(), "%.17g");
  if (z.imag() != 0.0) s += (z.imag() < 0 ? "" : "+") + fmt(z.imag(), "%.17g") + "i";
  return s;
}

std::string fmt_params(const ParamSet& p) {
  std::string s = "q=" + fmt_complex(p.q);
  for (const auto& [k, v] : p.values) s += " " + k + "=" + fmt_complex(v);
  for (const auto& [k, v] : p.ints) s += " " + k + "=" + std::to_string(v);
  return s;
}

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::UnknownIdentity: return kExitUnknownId;
    case Errc::ParseError: return kExitUsage;
    default: return kExitNumeric;
  }
}

long max_terms_from_env() {
  const char* env = std::getenv("QBILAT_MAX_TERMS");
  if (!env) return TruncationPolicy{}.max_terms_per_direction;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1)
    throw Error(Errc::ParseError, "QBILAT_MAX_TERMS must be a positive integer");
  return v;
}

TruncationPolicy truncation_of(const CliConfig& cfg) {
  TruncationPolicy t;
  t.max_terms_per_direction = cfg.max_terms;
  t.validate();
  return t;
}

void print_report(const VerificationReport& r, std::ostream& out) {
  out << (r.pass ? "PASS " : "FAIL ") << r.id << "  accepted " << r.accepted << "/" << r.requested
      << "  rejected " << r.rejected << "  max_rel " << fmt(r.max_rel_residual) << "  mean_rel "
      << fmt(r.mean_rel_residual) << "  tol " << fmt(r.tol) << "\n";
  if (!r.pass) {
    if (r.accepted > 0) out << "     worst: " << fmt_params(r.worst_sample) << "\n";
    if (!r.error.empty()) out << "     error: " << r.error << "\n";
  }
}

int cmd_list(const CliConfig& cfg, std::ostream& out) {
  const auto& recs = list_identities();
  if (cfg.json) {
    json arr = json::array();
    for (const auto& r : recs) arr.push_back(record_to_json(r));
    out << canonical_dump(arr) << "\n";
    return kExitPass;
  }
  for (const auto& r : recs) {
    std::string slots;
    for (const auto& s : r.slots) {
      if (!slots.empty()) slots += ",";
      slots += s.name;
      if (s.role != SlotRole::Continuous)
        slots += "[" + std::to_string(s.lo) + ".." + std::to_string(s.hi) + "]";
    }
    out << r.id << "\t" << r.title << "\t\"" << r.anchor << "\"\t(" << slots << ")\t"
        << r.region_text << "\n";
  }
  return kExitPass;
}

SampleDomain domain_of(const CliConfig& cfg) {
  SampleDomain d;
  if (cfg.q) {
    const Complex q = *cfg.q;
    if (q.imag() != 0.0 || !(q.real() > 0.0 && q.real() < 1.0))
      throw Error(Errc::ParseError, "--q must be real and inside (0, 1) for sampling");
    d.q_lo = d.q_hi = q.real();
  }
  d.fixed = cfg.params;
  return d;
}

void check_overrides(const std::vector<Slot>& slots, const CliConfig& cfg) {
  for (const auto& [name, v] : cfg.params) {
    bool found = false;
    for (const auto& s : slots) found = found || s.name == name;
    if (!found) throw Error(Errc::ParseError, "no slot named '" + name + "'");
  }
}

int cmd_verify(const std::string& target, const CliConfig& cfg, std::ostream& out) {
  if (cfg.samples < 1) throw Error(Errc::ParseError, "--samples must be at least 1");
  const SampleDomain dom = domain_of(cfg);
  const TruncationPolicy trunc = truncation_of(cfg);
  std::vector<VerificationReport> reports;
  if (target == "all") {
    VerifyAllOptions opt;
    opt.identity_samples = cfg.samples;
    reports = verify_all(dom, cfg.seed, cfg.tol, trunc, opt);
  } else if (target == "matrix_inverse") {
    check_overrides({Slot{"a"}, Slot{"b"}, Slot{"c"}}, cfg);
    reports.push_back(verify_matrix_inverse(dom, cfg.seed, cfg.samples, 3, cfg.tol, trunc));
  } else if (const SpecializationLink* link = [&]() -> const SpecializationLink* {
               for (const auto& l : list_links())
                 if (l.id == target) return &l;
               return nullptr;
             }()) {
    std::vector<Slot> slots = find_identity(link->special).slots;
    slots.insert(slots.end(), link->extra_slots.begin(), link->extra_slots.end());
    check_overrides(slots, cfg);
    reports.push_back(verify_link(*link, dom, cfg.seed, cfg.samples, cfg.tol, trunc));
  } else {
    const IdentityRecord& rec = find_identity(target);
    check_overrides(rec.slots, cfg);
    reports.push_back(verify_record(rec, dom, cfg.seed, cfg.samples, cfg.tol, trunc));
  }

  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.pass;
  if (cfg.json) {
    if (target == "all") {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(report_to_json(r));
      out << canonical_dump(arr) << "\n";
    } else {
      out << canonical_dump(report_to_json(reports.front())) << "\n";
    }
  } else {
    for (const auto& r : reports) print_report(r, out);
  }
  return all_pass ? kExitPass : kExitFail;
}

struct OrthoArgs {
  std::string a, b, c, q;
  long radius = 3;
};

int cmd_ortho(const OrthoArgs& o, const CliConfig& cfg, std::ostream& out) {
  if (o.radius < 0) throw Error(Errc::ParseError, "--radius must be nonnegative");
  const Complex a = parse_complex_literal(o.a), b = parse_complex_literal(o.b),
                c = parse_complex_literal(o.c), q = parse_complex_literal(o.q);
  const InverseParams p = InverseParams::make(a, b, c, QBase(q));
  const TruncationPolicy trunc = truncation_of(cfg);
  const long r = o.radius;
  json grid = json::array(), dual = json::array();
  double worst = 0.0;
  for (long i = -r; i <= r; ++i) {
    json row = json::array(), drow = json::array();
    for (long j = -r; j <= r; ++j) {
      const double e = std::abs(orthogonality_residual(p, i, j, trunc));
      const double d = std::abs(dual_orthogonality_residual(p, i, j, trunc));
      worst = std::max({worst, e, d});
      if (std::isnan(e) || std::isnan(d)) worst = std::numeric_limits<double>::infinity();
      row.push_back(e);
      drow.push_back(d);
    }
    grid.push_back(std::move(row));
    dual.push_back(std::move(drow));
  }
  const bool pass = worst < cfg.tol;
  if (cfg.json) {
    out << canonical_dump({{"radius", r},
                           {"residuals", grid},
                           {"dual_residuals", dual},
                           {"max_abs_residual", worst},
                           {"tol", cfg.tol},
                           {"pass", pass}})
        << "\n";
  } else {
    out << "|sum_k f(n,k) g(k,l) - delta(n,l)| for n (rows), l (columns) in [" << -r << ", " << r
        << "]\n";
    for (const auto& row : grid) {
      for (const auto& v : row) out << " " << fmt(v.is_null() ? NAN : v.get<double>(), "%9.2e");
      out << "\n";
    }
    out << "|sum_l g(k,l) f(l,j) - delta(k,j)| for k (rows), j (columns)\n";
    for (const auto& row : dual) {
      for (const auto& v : row) out << " " << fmt(v.is_null() ? NAN : v.get<double>(), "%9.2e");
      out << "\n";
    }
    out << "max |residual| = " << fmt(worst) << (pass ? "  (pass)" : "  (FAIL)") << "\n";
  }
  return pass ? kExitPass : kExitFail;
}

struct EvalArgs {
  std::string kind, upper, lower, z, q;
};

int cmd_eval(const EvalArgs& e, const CliConfig& cfg, std::ostream& out) {
  if (e.kind != "phi" && e.kind != "psi")
    throw Error(Errc::ParseError, "--kind must be phi or psi");
  const auto upper = parse_complex_list(e.upper), lower = parse_complex_list(e.lower);
  const Complex z = parse_complex_literal(e.z), q = parse_complex_literal(e.q);
  const QBase base(q);
  const SeriesSpec spec = e.kind == "phi" ? SeriesSpec::unilateral(upper, lower, base, z)
                                          : SeriesSpec::bilateral(upper, lower, base, z);
  const EvalResult r = eval_series(spec, truncation_of(cfg));
  if (cfg.json) {
    out << canonical_dump({{"value", complex_to_json(r.value)},
                           {"terms_forward", r.terms_forward},
                           {"terms_backward", r.terms_backward},
                           {"status", status_name(r.status)}})
        << "\n";
  } else {
    out << "value  " << fmt_complex(r.value) << "\n"
        << "terms  " << r.terms_forward << " forward, " << r.terms_backward << " backward\n"
        << "status " << status_name(r.status) << "\n";
  }
  return kExitPass;
}

}  // namespace

Complex parse_complex_literal(const std::string& text) {
  static const std::regex grammar(R"(^(-?\d+(?:\.\d+)?)(?:([+-]\d+(?:\.\d+)?)i)?$)");
  std::smatch m;
  if (!std::regex_match(text, m, grammar))
    throw Error(Errc::ParseError, "malformed complex literal '" + text + "'");
  const double re = std::stod(m[1].str());
  const double im = m[2].matched ? std::stod(m[2].str()) : 0.0;
  return {re, im};
}

std::vector<Complex> parse_complex_list(const std::string& text) {
  std::vector<Complex> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_complex_literal(text.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical verification of bilateral basic hypergeometric identities", "qbilat"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::vector<std::string> raw_params;
  std::string raw_q;

  // Global flags; subcommands pass unmatched options up to here.
  app.fallthrough();
  app.add_option("--seed", cfg.seed, "Sampling seed");
  app.add_option("--samples", cfg.samples, "Accepted samples per record");
  app.add_option("--tol", cfg.tol, "Tolerance");
  app.add_option("--max-terms", cfg.max_terms, "Term budget per summation direction");
  app.add_flag("--json", cfg.json, "Machine-readable output");

  auto* list = app.add_subcommand("list", "List the identity registry");

  std::string target;
  auto* verify = app.add_subcommand("verify", "Verify a record, a link, matrix_inverse or all");
  verify->add_option("target", target, "Identity id or 'all'")->required();
  verify->add_option("--q", raw_q, "Pin the base q");
  verify->add_option("--param", raw_params, "Pin a slot, name=value (repeatable)")
      ->allow_extra_args(false);

  OrthoArgs ortho_args;
  auto* ortho = app.add_subcommand("ortho", "Orthogonality residual grid of the inverse pair");
  ortho->add_option("--a", ortho_args.a)->required();
  ortho->add_option("--b", ortho_args.b)->required();
  ortho->add_option("--c", ortho_args.c)->required();
  ortho->add_option("--q", ortho_args.q)->required();
  ortho->add_option("--radius", ortho_args.radius, "Index radius");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate a phi or psi series");
  eval->add_option("--kind", eval_args.kind, "phi or psi")->required();
  eval->add_option("--upper", eval_args.upper, "Comma-separated upper parameters")->required();
  eval->add_option("--lower", eval_args.lower, "Comma-separated lower parameters")->required();
  eval->add_option("--z", eval_args.z, "Argument")->required();
  eval->add_option("--q", eval_args.q, "Base")->required();

  try {
    cfg.max_terms = max_terms_from_env();
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (!raw_q.empty()) cfg.q = parse_complex_literal(raw_q);
    for (const auto& kv : raw_params) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos || eq == 0)
        throw Error(Errc::ParseError, "--param expects name=value, got '" + kv + "'");
      cfg.params[kv.substr(0, eq)] = parse_complex_literal(kv.substr(eq + 1));
    }
    if (cfg.max_terms < 1) throw Error(Errc::ParseError, "--max-terms must be positive");

    if (*list) return cmd_list(cfg, out);
    if (*verify) return cmd_verify(target, cfg, out);
    if (*ortho) return cmd_ortho(ortho_args, cfg, out);
    return cmd_eval(eval_args, cfg, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitNumeric;
  }
}

}  // namespace qbilat
