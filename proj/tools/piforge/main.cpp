// piforge: JSON/CSV record emitter over the library evaluators.
//
// Exit codes: 0 success, 1 usage or domain failure, 2 precision exhausted or
// budget ran out before convergence, 3 an identity check came out false.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "piforge/bessel_coeffs.hpp"
#include "piforge/errors.hpp"
#include "piforge/gamma_quotient.hpp"
#include "piforge/identities.hpp"
#include "piforge/pi_family.hpp"
#include "piforge/rational.hpp"
#include "piforge/real.hpp"
#include "piforge/wronskian.hpp"

namespace {

using nlohmann::ordered_json;
using namespace piforge;

// Rationals serialize as "num/den" with the denominator always present, so
// readers can split on '/' unconditionally.
std::string rat_str(const rational& q) {
  return q.num().get_str() + "/" + q.den().get_str();
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\n\r") == std::string::npos) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

void emit_csv_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) os << ',';
    os << csv_field(fields[i]);
  }
  os << '\n';
}

// Output target: --out file, else stdout.
struct sink {
  std::ofstream file;
  std::ostream* os = &std::cout;
  explicit sink(const std::string& path) {
    if (!path.empty()) {
      file.open(path, std::ios::binary);
      if (!file) throw domain_error("cannot open output file: " + path);
      os = &file;
    }
  }
  std::ostream& out() { return *os; }
};

unsigned long parse_ulong(const std::string& text, const char* what) {
  char* end = nullptr;
  const unsigned long v = std::strtoul(text.c_str(), &end, 10);
  if (text.empty() || end != text.c_str() + text.size())
    throw domain_error(std::string(what) + " is not a non-negative integer: " + text);
  return v;
}

std::pair<unsigned, unsigned> parse_range(const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw domain_error("--k-range must look like a:b, got: " + text);
  const unsigned long lo = parse_ulong(text.substr(0, colon), "--k-range start");
  const unsigned long hi = parse_ulong(text.substr(colon + 1), "--k-range end");
  if (lo > hi)
    throw domain_error("--k-range start exceeds its end: " + text);
  return {static_cast<unsigned>(lo), static_cast<unsigned>(hi)};
}

rational parse_rat(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return rational::parse(s);
}

// One entry of the --weights list: "k:re", "k:re+imi", "k:re-imi", or a pure
// imaginary "k:imi"; re and im are rationals.
weighted_term parse_weight_entry(const std::string& e) {
  const std::size_t colon = e.find(':');
  if (colon == std::string::npos || colon == 0)
    throw domain_error("weight entry must look like k:alpha, got: " + e);
  const unsigned long k = parse_ulong(e.substr(0, colon), "weight k");
  if (k > 64) throw domain_error("weight k must lie in [2, 64], got: " + e);

  std::string body = e.substr(colon + 1);
  if (body.empty())
    throw domain_error("weight entry has an empty coefficient: " + e);
  complex_rational alpha;
  if (body.back() == 'i') {
    body.pop_back();
    if (body.empty())
      throw domain_error("write the unit imaginary coefficient as 1i: " + e);
    const std::size_t split = body.find_last_of("+-");
    if (split == std::string::npos || split == 0) {
      alpha.im = parse_rat(body);
    } else {
      alpha.re = parse_rat(body.substr(0, split));
      alpha.im = parse_rat(body.substr(split));
    }
  } else {
    alpha.re = parse_rat(body);
  }
  return weighted_term{static_cast<unsigned>(k), alpha};
}

std::vector<weighted_term> parse_weights(const std::string& text) {
  std::vector<weighted_term> ws;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    ws.push_back(parse_weight_entry(
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return ws;
}

// Canonical one-string form, reused for the CSV weights column.
std::string weights_str(const std::vector<weighted_term>& ws) {
  std::string s;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(ws[i].k);
    s += ':';
    s += rat_str(ws[i].alpha.re);
    if (!ws[i].alpha.im.is_zero()) {
      s += ws[i].alpha.im.sign() < 0 ? '-' : '+';
      s += rat_str(abs(ws[i].alpha.im));
      s += 'i';
    }
  }
  return s;
}

// Shared output knobs. --prec-bits falls back to PI_FORGE_PREC_BITS, then 256.
struct io_options {
  std::string format = "json";
  std::string out_path;
  unsigned prec_bits = 0;
  CLI::Option* prec_opt = nullptr;

  void attach(CLI::App* cmd, bool with_prec = true) {
    cmd->add_option("--format", format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", out_path, "write records here instead of stdout");
    if (with_prec)
      prec_opt = cmd->add_option(
          "--prec-bits", prec_bits,
          "result precision in bits (default 256, or PI_FORGE_PREC_BITS)");
  }

  unsigned resolved_prec() const {
    if (prec_opt != nullptr && prec_opt->count() > 0) return prec_bits;
    if (const char* env = std::getenv("PI_FORGE_PREC_BITS")) {
      const unsigned long v = parse_ulong(env, "PI_FORGE_PREC_BITS");
      if (v == 0 || v > (1ul << 26))
        throw domain_error("PI_FORGE_PREC_BITS is out of range: " + std::string(env));
      return static_cast<unsigned>(v);
    }
    return 256;
  }
};

int run_pi(unsigned m, const std::vector<unsigned>& ks, const std::string& target_text,
           unsigned prec, std::uint64_t max_terms, const std::string& format, sink& s) {
  const precision_context ctx(prec);
  const big_real target = big_real::from_decimal(target_text, ctx);
  const std::uint64_t effective = max_terms == 0 ? default_term_budget : max_terms;
  if (format == "csv")
    emit_csv_row(s.out(), {"command", "m", "k", "target_rel_err", "prec_bits",
                           "max_terms", "value", "remainder_bound", "terms_used",
                           "precision_bits", "converged"});
  bool all_converged = true;
  for (const unsigned k : ks) {
    const evaluation_report r = eval_family(family_params{m, k}, target, ctx, max_terms);
    all_converged = all_converged && r.converged;
    if (format == "json") {
      ordered_json rec;
      rec["command"] = "pi";
      rec["parameters"] = ordered_json{{"m", m},
                                       {"k", k},
                                       {"target_rel_err", target_text},
                                       {"prec_bits", prec},
                                       {"max_terms", effective}};
      rec["results"] = ordered_json{{"value", r.value.str()},
                                    {"remainder_bound", r.remainder_bound.str()},
                                    {"terms_used", r.terms_used},
                                    {"precision_bits", r.precision_bits},
                                    {"converged", r.converged}};
      s.out() << rec.dump() << '\n';
    } else {
      emit_csv_row(s.out(),
                   {"pi", std::to_string(m), std::to_string(k), target_text,
                    std::to_string(prec), std::to_string(effective), r.value.str(),
                    r.remainder_bound.str(), std::to_string(r.terms_used),
                    std::to_string(r.precision_bits), bool_str(r.converged)});
    }
  }
  return all_converged ? 0 : 2;
}

int run_combine(const std::vector<weighted_term>& ws, const std::string& target_text,
                unsigned prec, std::uint64_t max_terms, const std::string& format,
                sink& s) {
  const precision_context ctx(prec);
  const combination_spec spec(ws);
  const big_real target = big_real::from_decimal(target_text, ctx);
  const std::uint64_t effective = max_terms == 0 ? default_term_budget : max_terms;
  const combination_report r = eval_combination(spec, target, ctx, max_terms);
  if (format == "json") {
    ordered_json warr = ordered_json::array();
    for (const auto& w : ws)
      warr.push_back(ordered_json{{"k", w.k},
                                  {"alpha_re", rat_str(w.alpha.re)},
                                  {"alpha_im", rat_str(w.alpha.im)}});
    ordered_json rec;
    rec["command"] = "combine";
    rec["parameters"] = ordered_json{{"weights", std::move(warr)},
                                     {"target_rel_err", target_text},
                                     {"prec_bits", prec},
                                     {"max_terms", effective}};
    rec["results"] = ordered_json{{"value_re", r.value_re.str()},
                                  {"value_im", r.value_im.str()},
                                  {"remainder_bound", r.remainder_bound.str()},
                                  {"terms_used", r.terms_used},
                                  {"precision_bits", r.precision_bits},
                                  {"converged", r.converged}};
    s.out() << rec.dump() << '\n';
  } else {
    emit_csv_row(s.out(), {"command", "weights", "target_rel_err", "prec_bits",
                           "max_terms", "value_re", "value_im", "remainder_bound",
                           "terms_used", "precision_bits", "converged"});
    emit_csv_row(s.out(),
                 {"combine", weights_str(ws), target_text, std::to_string(prec),
                  std::to_string(effective), r.value_re.str(), r.value_im.str(),
                  r.remainder_bound.str(), std::to_string(r.terms_used),
                  std::to_string(r.precision_bits), bool_str(r.converged)});
  }
  return r.converged ? 0 : 2;
}

int run_identity(const std::vector<identity_report>& reports, const std::string& format,
                 sink& s) {
  if (format == "csv")
    emit_csv_row(s.out(), {"command", "id", "m", "k", "lhs", "holds"});
  bool all_hold = true;
  for (const auto& r : reports) {
    all_hold = all_hold && r.holds;
    if (format == "json") {
      ordered_json rec;
      rec["command"] = "identity";
      rec["parameters"] = ordered_json{
          {"id", std::string(identity_name(r.id))}, {"m", r.m}, {"k", r.k}};
      rec["results"] = ordered_json{{"lhs", rat_str(r.lhs)}, {"holds", r.holds}};
      s.out() << rec.dump() << '\n';
    } else {
      emit_csv_row(s.out(), {"identity", std::string(identity_name(r.id)),
                             std::to_string(r.m), std::to_string(r.k),
                             rat_str(r.lhs), bool_str(r.holds)});
    }
  }
  return all_hold ? 0 : 3;
}

int run_gamma_quotient(const std::string& nu_text, unsigned long k,
                       std::uint64_t max_terms, unsigned prec,
                       const std::string& format, sink& s) {
  const precision_context ctx(prec);
  const bessel_order nu = bessel_order::parse(nu_text);
  const expansion_diagnostics d = gamma_quotient_expansion(nu, k, max_terms, ctx);
  const std::string nu_canon = rat_str(nu.value());
  if (format == "json") {
    ordered_json rec;
    rec["command"] = "gamma-quotient";
    rec["parameters"] = ordered_json{{"nu", nu_canon},
                                     {"k", k},
                                     {"max_terms", max_terms},
                                     {"prec_bits", prec}};
    rec["results"] = ordered_json{{"min_term_index", d.min_term_index},
                                  {"best_relative_error", d.best_relative_error.str()},
                                  {"reference_value", d.reference_value.str()}};
    s.out() << rec.dump() << '\n';
  } else {
    emit_csv_row(s.out(), {"command", "nu", "k", "max_terms", "prec_bits",
                           "min_term_index", "best_relative_error",
                           "reference_value"});
    emit_csv_row(s.out(), {"gamma-quotient", nu_canon, std::to_string(k),
                           std::to_string(max_terms), std::to_string(prec),
                           std::to_string(d.min_term_index),
                           d.best_relative_error.str(), d.reference_value.str()});
  }
  return 0;
}

int run_wronskian(const std::string& nu_text, const std::string& z_text, unsigned prec,
                  const std::string& format, sink& s) {
  const precision_context ctx(prec);
  const bessel_order nu = bessel_order::parse(nu_text);
  const big_real z = big_real::from_decimal(z_text, ctx);
  const wronskian_report r = wronskian_check(nu, z, ctx);
  const std::string nu_canon = rat_str(nu.value());
  if (format == "json") {
    ordered_json rec;
    rec["command"] = "wronskian";
    rec["parameters"] =
        ordered_json{{"nu", nu_canon}, {"z", z_text}, {"prec_bits", prec}};
    rec["results"] = ordered_json{{"trunc_k", r.trunc_k},
                                  {"trunc_i", r.trunc_i},
                                  {"deviation", r.deviation.str()},
                                  {"first_omitted_bound", r.first_omitted_bound.str()}};
    s.out() << rec.dump() << '\n';
  } else {
    emit_csv_row(s.out(), {"command", "nu", "z", "prec_bits", "trunc_k", "trunc_i",
                           "deviation", "first_omitted_bound"});
    emit_csv_row(s.out(), {"wronskian", nu_canon, z_text, std::to_string(prec),
                           std::to_string(r.trunc_k), std::to_string(r.trunc_i),
                           r.deviation.str(), r.first_omitted_bound.str()});
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "piforge: high-precision evaluation of a two-parameter family of series for 1/pi,\n"
      "weighted mixes over it, exact binomial identity sweeps, and series cross-checks"};
  app.set_version_flag("--version", "piforge 0.1.0");
  app.require_subcommand(1);

  struct {
    unsigned m = 0;
    unsigned k = 0;
    std::string k_range;
    std::string target = "1e-30";
    std::uint64_t max_terms = 0;
    io_options io;
  } pi_o;
  auto* pi_cmd = app.add_subcommand("pi", "evaluate one (m,k) member of the family");
  pi_cmd->add_option("--m", pi_o.m, "first parameter m, in [0,64] (default 0)");
  auto* k_opt = pi_cmd->add_option("--k", pi_o.k, "second parameter k, in [2,64]");
  auto* kr_opt =
      pi_cmd->add_option("--k-range", pi_o.k_range, "inclusive a:b, one record per k");
  k_opt->excludes(kr_opt);
  kr_opt->excludes(k_opt);
  pi_cmd->add_option("--target-rel-err", pi_o.target, "relative error to certify")
      ->capture_default_str();
  pi_cmd->add_option("--max-terms", pi_o.max_terms,
                     "term budget per series (0 = default 1200000000)");
  pi_o.io.attach(pi_cmd);

  struct {
    std::string weights;
    std::string target = "1e-30";
    std::uint64_t max_terms = 0;
    io_options io;
  } co_o;
  auto* co_cmd =
      app.add_subcommand("combine", "evaluate a weighted mix of m = 0 members");
  co_cmd->add_option("--weights", co_o.weights,
                     "comma list of k:alpha entries, e.g. 2:1+5i,3:-1/2")
      ->required();
  co_cmd->add_option("--target-rel-err", co_o.target, "relative error to certify")
      ->capture_default_str();
  co_cmd->add_option("--max-terms", co_o.max_terms,
                     "term budget per member series (0 = default 1200000000)");
  co_o.io.attach(co_cmd);

  struct {
    std::string id;
    unsigned long m = 0, k = 0, m_max = 0, k_max = 0;
    io_options io;
  } id_o;
  auto* id_cmd = app.add_subcommand("identity", "check binomial identities exactly");
  id_cmd->add_option("--id", id_o.id, "which identity: iv1, iv2, or iv3")->required();
  auto* im_opt = id_cmd->add_option("--m", id_o.m, "single check: m");
  auto* ik_opt = id_cmd->add_option("--k", id_o.k, "single check: k");
  auto* imm_opt = id_cmd->add_option("--m-max", id_o.m_max, "sweep: largest m");
  auto* ikm_opt = id_cmd->add_option("--k-max", id_o.k_max, "sweep: largest k");
  id_o.io.attach(id_cmd, /*with_prec=*/false);

  struct {
    std::string nu;
    unsigned long k = 0;
    std::uint64_t max_terms = 64;
    io_options io;
  } gq_o;
  auto* gq_cmd = app.add_subcommand(
      "gamma-quotient", "expansion diagnostics for Gamma(nu+1)/Gamma(nu+k+1/2)");
  gq_cmd->add_option("--nu", gq_o.nu, "order, a rational like 1/4")->required();
  gq_cmd->add_option("--k", gq_o.k, "shift k >= 0")->capture_default_str();
  gq_cmd->add_option("--max-terms", gq_o.max_terms, "terms to scan")
      ->capture_default_str();
  gq_o.io.attach(gq_cmd);

  struct {
    std::string nu;
    std::string z;
    io_options io;
  } wr_o;
  auto* wr_cmd = app.add_subcommand(
      "wronskian", "rebuild z W{e^z K, e^z I} e^-2z - 1 from both series");
  wr_cmd->add_option("--nu", wr_o.nu, "order, a rational like 3/2")->required();
  wr_cmd->add_option("--z", wr_o.z, "argument z > 0, a decimal like 30")->required();
  wr_o.io.attach(wr_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (pi_cmd->parsed()) {
      if (k_opt->count() == 0 && kr_opt->count() == 0)
        throw domain_error("pi: one of --k or --k-range is required");
      std::vector<unsigned> ks;
      if (kr_opt->count() > 0) {
        const auto [lo, hi] = parse_range(pi_o.k_range);
        for (unsigned k = lo; k <= hi; ++k) ks.push_back(k);
      } else {
        ks.push_back(pi_o.k);
      }
      sink s(pi_o.io.out_path);
      return run_pi(pi_o.m, ks, pi_o.target, pi_o.io.resolved_prec(), pi_o.max_terms,
                    pi_o.io.format, s);
    }
    if (co_cmd->parsed()) {
      sink s(co_o.io.out_path);
      return run_combine(parse_weights(co_o.weights), co_o.target,
                         co_o.io.resolved_prec(), co_o.max_terms, co_o.io.format, s);
    }
    if (id_cmd->parsed()) {
      const identity_id id = identity_from_name(id_o.id);
      const bool sweep = imm_opt->count() > 0 || ikm_opt->count() > 0;
      const bool single = im_opt->count() > 0 || ik_opt->count() > 0;
      if (sweep == single)
        throw domain_error(
            "identity: give either --m and --k, or --m-max and --k-max");
      std::vector<identity_report> reports;
      if (sweep) {
        if (imm_opt->count() == 0 || ikm_opt->count() == 0)
          throw domain_error("identity: a sweep needs both --m-max and --k-max");
        reports = sweep_identity(id, id_o.m_max, id_o.k_max);
      } else {
        if (im_opt->count() == 0 || ik_opt->count() == 0)
          throw domain_error("identity: a single check needs both --m and --k");
        reports.push_back(verify_identity(id, id_o.m, id_o.k));
      }
      sink s(id_o.io.out_path);
      return run_identity(reports, id_o.io.format, s);
    }
    if (gq_cmd->parsed()) {
      sink s(gq_o.io.out_path);
      return run_gamma_quotient(gq_o.nu, gq_o.k, gq_o.max_terms,
                                gq_o.io.resolved_prec(), gq_o.io.format, s);
    }
    if (wr_cmd->parsed()) {
      sink s(wr_o.io.out_path);
      return run_wronskian(wr_o.nu, wr_o.z, wr_o.io.resolved_prec(), wr_o.io.format, s);
    }
  } catch (const precision_exhausted_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
