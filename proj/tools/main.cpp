// liftlab command-line tool: construct Simplex / Hamming / Reed-Muller /
// projective Reed-Muller codes, optionally read them over an extension
// field, and report weight distributions, support-design certificates,
// Assmus-Mattson checks, and the RM(1,m) lambda prediction.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"

#include "liftlab/design.hpp"
#include "liftlab/families.hpp"
#include "liftlab/field.hpp"
#include "liftlab/formulas.hpp"
#include "liftlab/lift.hpp"

using nlohmann::json;
using namespace liftlab;

namespace {

struct Opts {
  std::string family;
  u64 q = 2;
  unsigned m = 2;
  unsigned r = 1;  // RM order
  unsigned h = 1;  // PRM degree
  unsigned ell = 1;
  unsigned weight = 0;
  unsigned t = 2;
  std::string method = "direct";
  u64 budget_enum = kDefaultEnumerationBudget;
  u64 budget_sub = kDefaultSubsetBudget;
  unsigned workers = 1;
  std::string format = "json";
  std::string out;

  Budget budget() const { return Budget{budget_enum, budget_sub}; }
};

std::pair<u32, u32> prime_power(u64 q) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  u64 p = q;
  for (u64 c = 2; c * c <= q; ++c)
    if (q % c == 0) {
      p = c;
      break;
    }
  u32 e = 0;
  u64 v = q;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  if (v != 1) throw std::invalid_argument("q must be a prime power");
  return {u32(p), e};
}

struct Built {
  std::string family;
  u64 q = 0;
  unsigned m = 0, r = 0, h = 0, ell = 1;
  LinearCode base;
  LinearCode code;  // the lifted code when ell > 1, otherwise the base
  std::optional<LiftedCode> lifted;
};

Built build_code(const Opts& o) {
  LinearCode base = [&] {
    if (o.family == "rm") {
      if (o.q != 2)
        throw std::invalid_argument("family rm is binary; use --q 2");
      return rm2(o.r, o.m);
    }
    auto [p, e] = prime_power(o.q);
    Field f = make_field(p, e);
    if (o.family == "simplex") return simplex(f, o.m);
    if (o.family == "hamming") return hamming(f, o.m);
    if (o.family == "prm") return prm(f, o.m, o.h);
    throw std::invalid_argument("unknown family " + o.family);
  }();
  Built b{o.family, o.q, o.m, o.r, o.h, o.ell, base, base, std::nullopt};
  if (o.ell > 1) {
    b.lifted = lift(base, o.ell);
    b.code = b.lifted->code;
  }
  return b;
}

json code_json(const Built& b, long d) {
  json j;
  j["family"] = b.family;
  j["q"] = b.q;
  j["m"] = b.m;
  j["lift"] = b.ell;
  if (b.family == "rm") j["order"] = b.r;
  if (b.family == "prm") j["h"] = b.h;
  j["n"] = b.code.n();
  j["k"] = b.code.k();
  j["d"] = d;
  j["modulus"] = b.code.field()->modulus();
  return j;
}

json budget_json(const Opts& o) {
  return json{{"enumeration", o.budget_enum}, {"subsets", o.budget_sub}};
}

json weights_json(const WeightDistribution& wd) {
  json arr = json::array();
  for (const auto& [w, c] : wd.nonzero())
    arr.push_back(json::array({w, c.get_str()}));
  return arr;
}

const char* status_str(DesignStatus s) {
  switch (s) {
    case DesignStatus::verified:
      return "verified";
    case DesignStatus::not_a_design:
      return "not_a_design";
    case DesignStatus::complete_design:
      return "complete_design";
  }
  return "unknown";
}

json design_json(const DesignCertificate& c) {
  json j{{"t", c.t},
         {"v", c.v},
         {"k", c.k},
         {"lambda", c.lambda.get_str()},
         {"b", c.b.get_str()},
         {"status", status_str(c.status)}};
  if (c.status == DesignStatus::not_a_design) {
    j["witness_a"] = c.witness_a;
    j["witness_b"] = c.witness_b;
    j["count_a"] = c.count_a.get_str();
    j["count_b"] = c.count_b.get_str();
  }
  return j;
}

void emit(const std::string& text, const Opts& o) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file " + o.out);
  f << text;
}

std::string render_weights_csv(const WeightDistribution& wd) {
  std::ostringstream s;
  s << "weight,count\n";
  for (const auto& [w, c] : wd.nonzero()) s << w << ',' << c.get_str() << '\n';
  return s.str();
}

std::string describe_code(const Built& b, long d) {
  std::ostringstream s;
  s << b.family << " q=" << b.q << " m=" << b.m;
  if (b.family == "rm") s << " order=" << b.r;
  if (b.family == "prm") s << " h=" << b.h;
  if (b.ell > 1) s << " lifted to GF(" << b.code.field()->order() << ")";
  s << ": [" << b.code.n() << ", " << b.code.k() << ", " << d << "]";
  return s.str();
}

std::string describe_design(const DesignCertificate& c) {
  std::ostringstream s;
  if (c.status == DesignStatus::not_a_design) {
    s << "not a " << c.t << "-design on (" << c.v << ", " << c.k << "): {";
    for (u32 p : c.witness_a) s << ' ' << p;
    s << " } lies in " << c.count_a.get_str() << " blocks but {";
    for (u32 p : c.witness_b) s << ' ' << p;
    s << " } in " << c.count_b.get_str();
  } else {
    s << c.t << "-(" << c.v << ", " << c.k << ", " << c.lambda.get_str()
      << ") design with b=" << c.b.get_str();
    if (c.status == DesignStatus::complete_design) s << " (complete)";
  }
  return s.str();
}

// ---- subcommand handlers ----

int run_field(const Opts& o) {
  auto [p, e] = prime_power(o.q);
  Field f = make_field(p, e);
  if (o.format == "csv")
    throw std::invalid_argument("csv is only available for weights/table");
  json j;
  j["field"] = json{{"p", p},
                    {"e", e},
                    {"order", f->order()},
                    {"modulus", f->modulus()},
                    {"primitive", f->primitive()}};
  std::optional<FieldTower> tw;
  if (o.ell > 1) {
    tw = make_tower(f, o.ell);
    j["tower"] = json{{"degree", tw->degree()},
                      {"order", tw->top()->order()},
                      {"modulus", tw->top()->modulus()}};
  }
  if (o.format == "text") {
    std::ostringstream s;
    s << "GF(" << f->order() << ") = GF(" << p << '^' << e << "), modulus";
    for (u32 c : f->modulus()) s << ' ' << c;
    s << ", primitive element #" << f->primitive() << '\n';
    if (tw) {
      s << "tower GF(" << tw->top()->order() << "), degree " << tw->degree()
        << ", modulus";
      for (u32 c : tw->top()->modulus()) s << ' ' << c;
      s << '\n';
    }
    emit(s.str(), o);
  } else {
    emit(j.dump(2) + "\n", o);
  }
  return 0;
}

int run_code(const Opts& o) {
  if (o.format == "csv")
    throw std::invalid_argument("csv is only available for weights/table");
  Built b = build_code(o);
  long d = long(min_distance(b.code, o.budget(), o.workers));
  if (o.format == "text") {
    emit(describe_code(b, d) + "\n", o);
    return 0;
  }
  json j{{"budget", budget_json(o)}, {"code", code_json(b, d)}};
  emit(j.dump(2) + "\n", o);
  return 0;
}

WeightDistribution weights_by_method(const Opts& o, const Built& b) {
  if (o.method == "direct")
    return weight_distribution(b.code, WdStrategy::direct, o.budget(),
                               o.workers);
  if (o.method == "selector") {
    const LiftedCode& lc = b.lifted ? *b.lifted : lift(b.base, 1);
    return rank_spectrum_wd(lc, o.budget(), o.workers);
  }
  if (o.method == "formula") {
    if (o.family == "simplex")
      return lifted_simplex_wd_formula(o.q, o.m, o.ell);
    if (o.family == "hamming")
      return lifted_hamming_wd_formula(o.q, o.m, o.ell);
    if (o.family == "rm" && o.r == 1) return lifted_rm1_wd_formula(o.m, o.ell);
    if (o.family == "rm" && o.r + 2 == o.m)
      return lifted_rm_m2_wd_formula(o.m, o.ell);
    throw std::invalid_argument("no closed form for this construction");
  }
  throw std::invalid_argument("unknown method " + o.method);
}

int run_weights(const Opts& o) {
  Built b = build_code(o);
  WeightDistribution wd = weights_by_method(o, b);
  long d = wd.min_positive();
  if (d < 0) d = 0;
  if (o.format == "csv") {
    emit(render_weights_csv(wd), o);
  } else if (o.format == "text") {
    std::ostringstream s;
    s << describe_code(b, d) << ", method " << o.method << "\n";
    for (const auto& [w, c] : wd.nonzero())
      s << w << ' ' << c.get_str() << '\n';
    emit(s.str(), o);
  } else {
    json j{{"budget", budget_json(o)},
           {"code", code_json(b, d)},
           {"method", o.method},
           {"weights", weights_json(wd)}};
    emit(j.dump(2) + "\n", o);
  }
  return 0;
}

int run_design(const Opts& o) {
  if (o.format == "csv")
    throw std::invalid_argument("csv is only available for weights/table");
  Built b = build_code(o);
  DesignCertificate cert =
      support_design_certificate(b.code, o.weight, o.t, o.budget(), o.workers);
  long d = long(min_distance(b.code, o.budget(), o.workers));
  if (o.format == "text") {
    emit(describe_code(b, d) + "\n" + describe_design(cert) + "\n", o);
  } else {
    json j{{"budget", budget_json(o)},
           {"code", code_json(b, d)},
           {"design", design_json(cert)}};
    emit(j.dump(2) + "\n", o);
  }
  return cert.status == DesignStatus::not_a_design ? 1 : 0;
}

int run_am(const Opts& o) {
  if (o.format == "csv")
    throw std::invalid_argument("csv is only available for weights/table");
  Built b = build_code(o);
  AMReport rep = assmus_mattson(b.code, o.t, o.budget(), o.workers);
  if (o.format == "text") {
    std::ostringstream s;
    s << describe_code(b, rep.d) << '\n'
      << "assmus-mattson at t=" << rep.t << ": "
      << (rep.applicable ? "applicable" : "not applicable") << " (d=" << rep.d
      << ", d_dual=" << rep.d_dual << ", w=" << rep.w
      << ", w_dual=" << rep.w_dual << ", s=" << rep.s << ")\n";
    s << "primal design weights:";
    for (auto w : rep.guaranteed_primal) s << ' ' << w;
    s << "\ndual design weights:";
    for (auto w : rep.guaranteed_dual) s << ' ' << w;
    s << '\n';
    emit(s.str(), o);
  } else {
    json j{{"budget", budget_json(o)},
           {"code", code_json(b, rep.d)},
           {"am", json{{"t", rep.t},
                       {"v", rep.v},
                       {"d", rep.d},
                       {"d_dual", rep.d_dual},
                       {"w", rep.w},
                       {"w_dual", rep.w_dual},
                       {"s", rep.s},
                       {"applicable", rep.applicable},
                       {"guaranteed_primal", rep.guaranteed_primal},
                       {"guaranteed_dual", rep.guaranteed_dual}}}};
    emit(j.dump(2) + "\n", o);
  }
  return 0;
}

int run_conjecture(const Opts& o) {
  if (o.format == "csv")
    throw std::invalid_argument("csv is only available for weights/table");
  ConjectureReport rep = conjecture_rm1(o.m, o.budget(), o.workers);
  Opts co = o;
  co.family = "rm";
  co.q = 2;
  co.r = 1;
  co.ell = 2;
  Built b = build_code(co);
  long d = long(min_distance(b.code, o.budget(), o.workers));
  if (o.format == "text") {
    std::ostringstream s;
    s << describe_code(b, d) << '\n'
      << describe_design(rep.cert) << '\n'
      << "lambda observed " << rep.cert.lambda.get_str() << ", predicted "
      << rep.lambda_conjectured.get_str() << " -> "
      << (rep.agree ? "agree" : "disagree") << '\n';
    emit(s.str(), o);
  } else {
    json j{{"budget", budget_json(o)},
           {"code", code_json(b, d)},
           {"conjecture",
            json{{"m", rep.m},
                 {"agree", rep.agree},
                 {"lambda_observed", rep.cert.lambda.get_str()},
                 {"lambda_conjectured", rep.lambda_conjectured.get_str()},
                 {"design", design_json(rep.cert)}}}};
    emit(j.dump(2) + "\n", o);
  }
  return rep.agree ? 0 : 1;
}

int run_table(const Opts& o) {
  Opts co = o;
  if (o.family == "rm1") {
    co.family = "rm";
    co.r = 1;
  }
  Built b = build_code(co);
  auto designs = supports_by_weight(b.code, o.budget(), o.workers);
  if (designs.empty()) throw EmptySupportError("the code has no nonzero word");
  long d = long(designs.begin()->first);

  bool all_designs = true;
  std::vector<std::pair<unsigned, DesignCertificate>> rows;
  for (const auto& [w, sd] : designs) {
    if (w < o.t) continue;  // too small a block to ask for a t-design
    DesignCertificate cert = verify_design(sd, o.t, o.budget(), o.workers);
    all_designs = all_designs && cert.status != DesignStatus::not_a_design;
    rows.emplace_back(w, std::move(cert));
  }

  if (o.format == "csv") {
    std::ostringstream s;
    s << "weight,t,v,k,lambda,b,status\n";
    for (const auto& [w, cert] : rows)
      s << w << ',' << cert.t << ',' << cert.v << ',' << cert.k << ','
        << cert.lambda.get_str() << ',' << cert.b.get_str() << ','
        << status_str(cert.status) << '\n';
    emit(s.str(), o);
  } else if (o.format == "text") {
    std::ostringstream s;
    s << describe_code(b, d) << '\n';
    for (const auto& [w, cert] : rows)
      s << "w=" << w << ": " << describe_design(cert) << '\n';
    emit(s.str(), o);
  } else {
    json arr = json::array();
    for (const auto& [w, cert] : rows)
      arr.push_back(json{{"weight", w}, {"design", design_json(cert)}});
    json j{{"budget", budget_json(o)},
           {"code", code_json(b, d)},
           {"t", o.t},
           {"table", arr}};
    emit(j.dump(2) + "\n", o);
  }
  return all_designs ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Opts o;
  CLI::App app{
      "exact weight distributions, lifted codes, and support designs"};
  app.require_subcommand(1);
  // --h is the projective Reed-Muller degree, so help is --help only
  app.set_help_flag("--help", "print this help message and exit");

  auto add_sub = [&](const char* name, const char* desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->set_help_flag("--help", "print this help message and exit");
    return s;
  };

  auto add_output = [&](CLI::App* s) {
    s->add_option("--budget", o.budget_enum,
                  "enumeration budget in codewords/selectors")
        ->envname("LIFTLAB_BUDGET")
        ->check(CLI::PositiveNumber);
    s->add_option("--subset-budget", o.budget_sub,
                  "t-subset verification budget")
        ->check(CLI::PositiveNumber);
    s->add_option("--workers", o.workers, "worker thread count")
        ->check(CLI::PositiveNumber);
    s->add_option("--format", o.format, "json, csv, or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    s->add_option("--out", o.out, "write the report to this file");
  };
  auto add_construction = [&](CLI::App* s, bool with_rm_prm = true) {
    s->add_option("--q", o.q, "base field order (prime power)");
    s->add_option("--m", o.m, "family parameter m")->required();
    s->add_option("--lift", o.ell, "read the code over GF(q^lift)")
        ->check(CLI::PositiveNumber);
    if (with_rm_prm) {
      s->add_option("--order", o.r, "Reed-Muller order r");
      s->add_option("--h", o.h, "projective Reed-Muller degree h");
    }
  };

  CLI::App* field_cmd = add_sub("field", "describe GF(q)");
  field_cmd->add_option("--q", o.q, "field order (prime power)")->required();
  field_cmd->add_option("--lift", o.ell, "also describe GF(q^lift)")
      ->check(CLI::PositiveNumber);
  add_output(field_cmd);

  CLI::App* code_cmd =
      add_sub(
      "code", "construct a code and report [n, k, d]");
  code_cmd
      ->add_option("--family", o.family, "simplex, hamming, rm, or prm")
      ->required()
      ->check(CLI::IsMember({"simplex", "hamming", "rm", "prm"}));
  add_construction(code_cmd);
  add_output(code_cmd);

  CLI::App* weights_cmd =
      add_sub(
      "weights", "weight distribution of a code");
  weights_cmd
      ->add_option("--family", o.family, "simplex, hamming, rm, or prm")
      ->required()
      ->check(CLI::IsMember({"simplex", "hamming", "rm", "prm"}));
  add_construction(weights_cmd);
  weights_cmd
      ->add_option("--method", o.method,
                   "direct enumeration, selector enumeration, or formula")
      ->check(CLI::IsMember({"direct", "selector", "formula"}));
  add_output(weights_cmd);

  CLI::App* design_cmd = add_sub(
      "design", "verify the t-design property of fixed-weight supports");
  design_cmd
      ->add_option("--family", o.family, "simplex, hamming, rm, or prm")
      ->required()
      ->check(CLI::IsMember({"simplex", "hamming", "rm", "prm"}));
  add_construction(design_cmd);
  design_cmd->add_option("--weight", o.weight, "codeword weight")->required();
  design_cmd->add_option("--t", o.t, "design strength")
      ->check(CLI::PositiveNumber);
  add_output(design_cmd);

  CLI::App* am_cmd =
      add_sub(
      "am", "Assmus-Mattson applicability report");
  am_cmd->add_option("--family", o.family, "simplex, hamming, rm, or prm")
      ->required()
      ->check(CLI::IsMember({"simplex", "hamming", "rm", "prm"}));
  add_construction(am_cmd);
  am_cmd->add_option("--t", o.t, "design strength")
      ->check(CLI::PositiveNumber);
  add_output(am_cmd);

  std::string conj_name;
  CLI::App* conj_cmd = add_sub(
      "conjecture", "compare an observed lambda with its predicted value");
  conj_cmd->add_option("name", conj_name, "conjecture name")
      ->required()
      ->check(CLI::IsMember({"rm1"}));
  conj_cmd->add_option("--m", o.m, "RM(1,m) parameter")->required();
  add_output(conj_cmd);

  CLI::App* table_cmd = add_sub(
      "table", "design certificates for every weight of a code");
  table_cmd
      ->add_option("--family", o.family, "simplex, hamming, or rm1")
      ->required()
      ->check(CLI::IsMember({"simplex", "hamming", "rm1"}));
  add_construction(table_cmd, false);
  table_cmd->add_option("--t", o.t, "design strength")
      ->check(CLI::PositiveNumber);
  add_output(table_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(field_cmd)) return run_field(o);
    if (app.got_subcommand(code_cmd)) return run_code(o);
    if (app.got_subcommand(weights_cmd)) return run_weights(o);
    if (app.got_subcommand(design_cmd)) return run_design(o);
    if (app.got_subcommand(am_cmd)) return run_am(o);
    if (app.got_subcommand(conj_cmd)) return run_conjecture(o);
    if (app.got_subcommand(table_cmd)) return run_table(o);
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const EmptySupportError& e) {
    std::cerr << "empty design: " << e.what() << '\n';
    return 2;
  } catch (const ZeroDualError& e) {
    std::cerr << "degenerate dual: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid request: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
}
