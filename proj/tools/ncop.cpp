#include "ncop/errors.hpp"
#include "ncop/operad.hpp"
#include "ncop/partition.hpp"
#include "ncop/psi.hpp"
#include "ncop/rewrite.hpp"
#include "ncop/series.hpp"
#include "ncop/sums.hpp"
#include "ncop/svg.hpp"
#include "ncop/term.hpp"

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace ncop;

int env_max_arity() {
  const char* v = std::getenv("NCOP_MAX_ARITY");
  if (!v || !*v) return 7;
  try {
    int n = std::stoi(v);
    if (n < 1 || n > 12) throw std::invalid_argument("");
    return n;
  } catch (...) {
    throw std::invalid_argument("NCOP_MAX_ARITY must be an integer in [1, 12]");
  }
}

int run_enumerate(int n, bool as_json) {
  const std::vector<NCPartition> parts = enumerate(n);
  if (as_json) {
    json a = json::array();
    for (const NCPartition& p : parts) a.push_back(p.to_json());
    std::cout << json{{"arity", n}, {"count", parts.size()}, {"partitions", a}}.dump(2) << "\n";
  } else {
    for (const NCPartition& p : parts) std::cout << p.str() << "\n";
  }
  return 0;
}

int run_compose(const std::string& pi_text, int i, const std::string& nu_text, bool graded,
                bool as_json) {
  const NCPartition pi = NCPartition::parse(pi_text);
  const NCPartition nu = NCPartition::parse(nu_text);
  if (graded) {
    const NCPartition r = gr_compose_basis(pi, i, nu);
    if (as_json)
      std::cout << json{{"pi", pi.str()}, {"slot", i}, {"nu", nu.str()}, {"result", r.str()}}.dump(2)
                << "\n";
    else
      std::cout << r.str() << "\n";
    return 0;
  }
  const FormalSum r = compose_basis(pi, i, nu);
  if (as_json)
    std::cout << json{{"pi", pi.str()}, {"slot", i}, {"nu", nu.str()}, {"result", r.to_json()}}.dump(2)
              << "\n";
  else
    std::cout << r.str() << "\n";
  return 0;
}

int run_nf(const std::string& text, const std::string& strategy_name, unsigned seed, bool as_json) {
  Strategy strategy = Strategy::LeftInner;
  if (strategy_name == "left-outer")
    strategy = Strategy::LeftOuter;
  else if (strategy_name == "random")
    strategy = Strategy::Random;
  else if (strategy_name != "left-inner")
    throw std::invalid_argument("unknown strategy '" + strategy_name + "'");

  const TermSum input = TermSum::parse(text);
  bool eliminated = false;
  TermSum work = input;
  for (const auto& [t, c] : input.terms())
    if (contains_ttri(t)) {
      eliminated = true;
      break;
    }
  if (eliminated) work = eliminate_double_bracket(input);
  const TermSum result = normal_form(work, strategy, seed);

  if (as_json) {
    json o{{"input", input.str()},
           {"strategy", strategy_name},
           {"double_bracket_eliminated", eliminated},
           {"result", result.str()}};
    if (strategy == Strategy::Random) o["seed"] = seed;
    std::cout << o.dump(2) << "\n";
  } else {
    if (strategy == Strategy::Random) std::cout << "# seed " << seed << "\n";
    std::cout << result.str() << "\n";
  }
  return 0;
}

int run_psi(const std::string& text, bool as_json) {
  const TermSum input = TermSum::parse(text);
  const QFormalSum result = eval_psi(input);
  if (as_json) {
    std::cout << json{{"images",
                       json{{"mul", psi_image(Op::Mul).str()},
                            {"tri", psi_image(Op::Tri).str()},
                            {"ttri", psi_image(Op::Ttri).str()}}},
                      {"input", input.str()},
                      {"result", result.to_json()}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "# psi: (mul a b) -> " << psi_image(Op::Mul).str() << " ; (tri a b c) -> "
              << psi_image(Op::Tri).str() << " ; (ttri a b c) -> " << psi_image(Op::Ttri).str()
              << "\n";
    std::cout << result.str() << "\n";
  }
  return 0;
}

int run_factorize(const std::string& text, bool as_json) {
  const NCPartition pi = NCPartition::parse(text);
  const TermSum t = factorize(pi);
  const bool verified = eval_free(t) == QFormalSum::of(pi);
  if (as_json) {
    std::cout << json{{"input", pi.str()}, {"term", t.str()}, {"verified", verified}}.dump(2)
              << "\n";
  } else {
    std::cout << t.str() << "\n";
  }
  if (!verified) {
    if (!as_json)
      std::cout << json{{"input", pi.str()}, {"term", t.str()}, {"verified", false}}.dump(2) << "\n";
    return 1;
  }
  return 0;
}

int run_kernel(int n, bool as_json) {
  const KernelReport rep = binary_kernel(n);
  if (as_json) {
    std::cout << rep.to_json().dump(2) << "\n";
  } else {
    std::cout << "arity " << rep.arity << ": " << rep.monomial_count
              << " monomials, kernel dimension " << rep.dim << "\n";
    for (const TermSum& s : rep.basis) std::cout << s.str() << "\n";
  }
  if (!rep.verified) {
    if (!as_json) std::cout << rep.to_json().dump(2) << "\n";
    return 1;
  }
  return 0;
}

int run_series(int order, bool as_json) {
  const SeriesReport rep = series_report(order);
  if (as_json) {
    std::cout << rep.to_json().dump(2) << "\n";
    return rep.ok() ? 0 : 1;
  }
  auto line = [](const char* name, const Series& s) {
    std::cout << name << ": ";
    for (int k = 0; k <= s.order(); ++k) std::cout << (k ? "," : "") << to_string(s.coeff(k));
    std::cout << "\n";
  };
  line("f", rep.sys.f);
  line("x", rep.sys.x);
  line("y", rep.sys.y);
  line("z", rep.sys.z);
  std::cout << "riordan: ";
  const std::vector<Int> rio = riordan(order + 1);
  for (std::size_t k = 0; k < rio.size(); ++k) std::cout << (k ? "," : "") << to_string(rio[k]);
  std::cout << "\n";
  std::size_t passed = 0;
  for (const SeriesCheck& c : rep.checks)
    if (c.ok) ++passed;
  std::cout << "checks: " << passed << "/" << rep.checks.size() << (rep.ok() ? " ok" : " FAILED")
            << "\n";
  if (!rep.ok()) {
    std::cout << rep.to_json().dump(2) << "\n";
    return 1;
  }
  return 0;
}

int run_render(const std::string& text, const std::string& path) {
  const NCPartition pi = NCPartition::parse(text);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
  out << render_svg(pi);
  return 0;
}

int run_count_by_blocks(int n, bool as_json) {
  const auto by_blocks = count_by_blocks(n);
  Int total = 0;
  for (const auto& [blocks, cnt] : by_blocks) total += cnt;
  if (as_json) {
    json o;
    for (const auto& [blocks, cnt] : by_blocks) o[std::to_string(blocks)] = to_string(cnt);
    std::cout << json{{"arity", n}, {"by_blocks", o}, {"total", to_string(total)}}.dump(2) << "\n";
  } else {
    for (const auto& [blocks, cnt] : by_blocks)
      std::cout << blocks << " " << to_string(cnt) << "\n";
    std::cout << "total " << to_string(total) << "\n";
  }
  return 0;
}

struct VerifyOpts {
  int axioms = -1;
  bool relations = false;
  int iso = -1;
  int cyclic = -1;
  int filtration = -1;
  bool all = false;
  bool as_json = false;
};

int run_verify(const VerifyOpts& opt) {
  const int cap = env_max_arity();
  const bool none_given =
      opt.axioms < 0 && !opt.relations && opt.iso < 0 && opt.cyclic < 0 && opt.filtration < 0;
  const bool everything = opt.all || none_given;

  const int axioms_n = opt.axioms > 0 ? opt.axioms : cap;
  const int iso_n = std::min(opt.iso > 0 ? opt.iso : cap, 7);
  const int cyclic_n = opt.cyclic > 0 ? opt.cyclic : cap;
  const int filtration_n = std::min(opt.filtration > 0 ? opt.filtration : cap, 6);

  json report = json::object();
  std::vector<std::string> lines;
  bool all_ok = true;

  if (everything || opt.axioms > 0) {
    const SuiteReport plain = axiom_suite(axioms_n, false);
    const SuiteReport graded = axiom_suite(axioms_n, true);
    report["axioms"] = plain.to_json();
    report["axioms_graded"] = graded.to_json();
    all_ok = all_ok && plain.ok() && graded.ok();
    lines.push_back("axioms (total arity <= " + std::to_string(axioms_n) + "): " +
                    (plain.ok() ? "ok" : "FAILED") + ", " + std::to_string(plain.instances) +
                    " instances; glue-only: " + (graded.ok() ? "ok" : "FAILED"));
  }
  if (everything || opt.relations) {
    const RelationReport rel = verify_relations();
    report["relations"] = rel.to_json();
    all_ok = all_ok && rel.ok();
    lines.push_back(std::string("relations: ") + (rel.ok() ? "ok" : "FAILED") + " (" +
                    std::to_string(rel.relations.size()) + " relations, " +
                    std::to_string(rel.identities.size()) + " identities, " +
                    std::to_string(rel.rules.size()) + " rules)");
  }
  if (everything || opt.iso > 0) {
    json ranks = json::array();
    bool ok = true;
    for (int n = 1; n <= iso_n; ++n) {
      const RankReport r = rank_check(n);
      ranks.push_back(r.to_json());
      ok = ok && r.pass;
    }
    report["iso"] = ranks;
    all_ok = all_ok && ok;
    lines.push_back("iso ranks (arity <= " + std::to_string(iso_n) + "): " +
                    (ok ? "ok" : "FAILED"));
  }
  if (everything || opt.cyclic > 0) {
    const CyclicReport cyc = cyclic_compat_check(cyclic_n);
    report["cyclic"] = cyc.to_json();
    all_ok = all_ok && cyc.ok();
    lines.push_back("cyclic (total arity <= " + std::to_string(cyclic_n) + "): " +
                    (cyc.ok() ? "ok, " + cyc.convention : "FAILED"));
  }
  if (everything || opt.filtration > 0) {
    json fil = json::array();
    bool ok = true;
    for (int n = 1; n <= filtration_n; ++n)
      for (int k = 0; k <= n - 1; ++k) {
        const FiltrationReport r = filtration_check(n, k);
        fil.push_back(r.to_json());
        ok = ok && r.ok();
      }
    report["filtration"] = fil;
    all_ok = all_ok && ok;
    lines.push_back("filtration (arity <= " + std::to_string(filtration_n) + "): " +
                    (ok ? "ok" : "FAILED"));
  }

  report["ok"] = all_ok;
  if (opt.as_json || !all_ok) {
    std::cout << report.dump(2) << "\n";
  } else {
    for (const std::string& l : lines) std::cout << l << "\n";
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toolbox for an operad of noncrossing partitions without singleton blocks"};
  app.require_subcommand(1);
  int rc = 0;

  auto guarded = [&rc](auto fn) {
    return [&rc, fn]() {
      try {
        rc = fn();
      } catch (const ncop::NcopError& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = 2;
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = 2;
      }
    };
  };

  // enumerate
  auto* cmd_enum = app.add_subcommand("enumerate", "list the basis of the given arity");
  int enum_n = 1;
  bool enum_json = false;
  cmd_enum->add_option("arity", enum_n, "arity")->required()->check(CLI::Range(1, 14));
  cmd_enum->add_flag("--json", enum_json, "emit JSON");
  cmd_enum->callback(guarded([&]() { return run_enumerate(enum_n, enum_json); }));

  // compose
  auto* cmd_comp = app.add_subcommand("compose", "partial composition of two basis elements");
  std::string comp_pi, comp_nu;
  int comp_i = 1;
  bool comp_gr = false, comp_json = false;
  cmd_comp->add_option("pi", comp_pi, "outer partition, e.g. \"{0,1}|{2,3,4}\"")->required();
  cmd_comp->add_option("slot", comp_i, "slot index, 1-based")->required();
  cmd_comp->add_option("nu", comp_nu, "inner partition")->required();
  cmd_comp->add_flag("--gr", comp_gr, "glue-only composition on the associated graded");
  cmd_comp->add_flag("--json", comp_json, "emit JSON");
  cmd_comp->callback(guarded([&]() { return run_compose(comp_pi, comp_i, comp_nu, comp_gr, comp_json); }));

  // nf
  auto* cmd_nf = app.add_subcommand(
      "nf", "normal form of a term sum; double brackets are eliminated before rewriting");
  std::string nf_text, nf_strategy = "left-inner";
  unsigned nf_seed = 0;
  bool nf_json = false;
  cmd_nf->add_option("term", nf_text, "term sum, e.g. \"(mul a (mul b c)) - (tri a b c)\"")
      ->required();
  cmd_nf->add_option("--strategy", nf_strategy, "left-inner, left-outer, or random")
      ->default_str("left-inner");
  cmd_nf->add_option("--seed", nf_seed, "seed for the random strategy");
  cmd_nf->add_flag("--json", nf_json, "emit JSON");
  cmd_nf->callback(guarded([&]() { return run_nf(nf_text, nf_strategy, nf_seed, nf_json); }));

  // psi
  auto* cmd_psi = app.add_subcommand("psi", "evaluate a term sum through the generator images");
  std::string psi_text;
  bool psi_json = false;
  cmd_psi->add_option("term", psi_text, "term sum over mul, tri, ttri")->required();
  cmd_psi->add_flag("--json", psi_json, "emit JSON");
  cmd_psi->callback(guarded([&]() { return run_psi(psi_text, psi_json); }));

  // factorize
  auto* cmd_fac = app.add_subcommand("factorize", "write a basis element as a term in the generators");
  std::string fac_text;
  bool fac_json = false;
  cmd_fac->add_option("pi", fac_text, "partition")->required();
  cmd_fac->add_flag("--json", fac_json, "emit JSON");
  cmd_fac->callback(guarded([&]() { return run_factorize(fac_text, fac_json); }));

  // kernel
  auto* cmd_ker = app.add_subcommand("kernel", "kernel of evaluation on pure binary monomials");
  int ker_n = 2;
  bool ker_json = false;
  cmd_ker->add_option("arity", ker_n, "arity")->required()->check(CLI::Range(1, 9));
  cmd_ker->add_flag("--json", ker_json, "emit JSON");
  cmd_ker->callback(guarded([&]() { return run_kernel(ker_n, ker_json); }));

  // verify
  auto* cmd_ver = app.add_subcommand("verify", "run consistency checks");
  VerifyOpts vo;
  cmd_ver->add_option("--axioms", vo.axioms, "axiom suite up to this total arity")
      ->check(CLI::Range(3, 12));
  cmd_ver->add_flag("--relations", vo.relations, "defining relations and identities");
  cmd_ver->add_option("--iso", vo.iso, "rank checks up to this arity (capped at 7)")
      ->check(CLI::Range(1, 12));
  cmd_ver->add_option("--cyclic", vo.cyclic, "rotation compatibility up to this total arity")
      ->check(CLI::Range(2, 12));
  cmd_ver->add_option("--filtration", vo.filtration, "filtration checks up to this arity (capped at 6)")
      ->check(CLI::Range(1, 12));
  cmd_ver->add_flag("--all", vo.all, "run every check (default when no flag is given)");
  cmd_ver->add_flag("--json", vo.as_json, "emit JSON");
  cmd_ver->callback(guarded([&]() { return run_verify(vo); }));

  // series
  auto* cmd_ser = app.add_subcommand("series", "generating function of the basis counts");
  int ser_n = 12;
  bool ser_json = false;
  cmd_ser->add_option("order", ser_n, "truncation order")->required()->check(CLI::Range(2, 128));
  cmd_ser->add_flag("--json", ser_json, "emit JSON");
  cmd_ser->callback(guarded([&]() { return run_series(ser_n, ser_json); }));

  // render
  auto* cmd_ren = app.add_subcommand("render", "draw a partition as a disk picture");
  std::string ren_text, ren_path;
  cmd_ren->add_option("pi", ren_text, "partition")->required();
  cmd_ren->add_option("--svg", ren_path, "output file")->required();
  cmd_ren->callback(guarded([&]() { return run_render(ren_text, ren_path); }));

  // count-by-blocks
  auto* cmd_cbb = app.add_subcommand("count-by-blocks", "basis counts grouped by block count");
  int cbb_n = 1;
  bool cbb_json = false;
  cmd_cbb->add_option("arity", cbb_n, "arity")->required()->check(CLI::Range(1, 14));
  cmd_cbb->add_flag("--json", cbb_json, "emit JSON");
  cmd_cbb->callback(guarded([&]() { return run_count_by_blocks(cbb_n, cbb_json); }));

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
  return rc;
}
