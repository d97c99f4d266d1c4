// SPDX-License-Identifier: Apache-2.0
#include "twobridge/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

#include <CLI11.hpp>

#include "twobridge/casson_gordon.hpp"
#include "twobridge/enumeration.hpp"
#include "twobridge/families.hpp"
#include "twobridge/serialize.hpp"

namespace twobridge::cli {
namespace {

struct KnotArgs {
  std::vector<Int> values;
  std::optional<Int> det;

  // "p q" or "--det D q"; returns (p, q).
  std::pair<Int, Int> resolve() const {
    if (det) {
      if (values.size() != 1) throw DomainError("with --det give only q");
      const Int p = exact_sqrt(*det);
      if (p < 0 || p % 2 == 0) throw DomainError("--det must be an odd perfect square");
      return {p, values[0]};
    }
    if (values.size() != 2) throw DomainError("expected <p> <q>");
    return {values[0], values[1]};
  }
};

void add_knot_args(CLI::App* cmd, KnotArgs& args) {
  cmd->add_option("p_q", args.values, "p q, meaning the knot p^2/q (or just q with --det)")
      ->expected(1, 2)
      ->required();
  cmd->add_option("--det", args.det, "determinant p^2 instead of p");
}

std::string knot_name(Int p, Int q) { return std::to_string(p * p) + "/" + std::to_string(q); }

std::string match_text(const LemmaMatch& m) {
  std::string out = std::string(condition_label(m.condition)) + " sign=" + (m.sign > 0 ? "+" : "-") +
                    " n=" + std::to_string(m.n);
  if (m.d) out += " d=" + std::to_string(*m.d);
  return out;
}

void print_term(std::ostream& out, const SigmaTerm& t) {
  out << "r=" << t.r << " area=" << format_halves(t.area_halves)
      << " int=" << format_quarters(t.count.quarters) << " sigma=" << t.sigma << '\n';
}

void print_report_summary(std::ostream& out, const SigmaReport& report) {
  if (report.passes) {
    out << "PASS " << knot_name(report.p, report.q) << ": sigma in {-1,+1} for r=1.."
        << report.p - 1 << '\n';
    return;
  }
  const auto& bad = report.terms[static_cast<std::size_t>(*report.first_failure - 1)];
  out << "FAIL " << knot_name(report.p, report.q) << ": r=" << bad.r << " sigma=" << bad.sigma
      << '\n';
}

CountMethod parse_method(const std::string& name) {
  return name == "floor-sum" ? CountMethod::FloorSum : CountMethod::Column;
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-bridge knot fractions, the Casson-Gordon ribbon obstruction and the known "
               "ribbon families",
               "twobridge"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string method = "column";
  auto format_option = [&](CLI::App* cmd, std::vector<std::string> allowed) {
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember(std::move(allowed)));
  };
  auto method_option = [&](CLI::App* cmd) {
    cmd->add_option("--method", method, "lattice count method")
        ->check(CLI::IsMember({"column", "floor-sum"}));
  };

  Int sig_p = 0, sig_q = 0, sig_r = 0;
  bool sig_all = false;
  auto* sigma_cmd = app.add_subcommand("sigma", "sigma(p,q,r) with area and weighted count");
  sigma_cmd->add_option("p", sig_p)->required();
  sigma_cmd->add_option("q", sig_q)->required();
  auto* r_opt = sigma_cmd->add_option("--r", sig_r, "single r (default: all r)");
  sigma_cmd->add_flag("--all", sig_all, "all r = 1..p-1")->excludes(r_opt);
  format_option(sigma_cmd, {"text", "json"});
  method_option(sigma_cmd);

  Int cg_p = 0, cg_q = 0;
  auto* cg_cmd = app.add_subcommand("cg-check", "Casson-Gordon condition for the knot p^2/q");
  cg_cmd->add_option("p", cg_p)->required();
  cg_cmd->add_option("q", cg_q)->required();
  format_option(cg_cmd, {"text", "json"});
  method_option(cg_cmd);

  KnotArgs member_args;
  auto* member_cmd = app.add_subcommand("member", "family membership of the knot p^2/q");
  add_knot_args(member_cmd, member_args);
  format_option(member_cmd, {"text", "json"});

  KnotArgs partial_args;
  auto* partial_cmd = app.add_subcommand("partial", "partial knot p/n of a family member p^2/q");
  add_knot_args(partial_cmd, partial_args);
  format_option(partial_cmd, {"text", "json"});

  int gen_family = 0;
  std::vector<Int> gen_params;
  auto* gen_cmd = app.add_subcommand("generate", "word and fraction of a family member");
  gen_cmd->add_option("--family", gen_family)->required()->check(CLI::Range(0, 2));
  gen_cmd->add_option("--params", gen_params, "comma separated parameters")
      ->required()
      ->delimiter(',')
      ->allow_extra_args(false);
  format_option(gen_cmd, {"text", "json"});

  std::string eval_word;
  auto* eval_cmd = app.add_subcommand("eval", "fraction of a Conway word C(a1,...)");
  eval_cmd->add_option("word", eval_word)->required();
  format_option(eval_cmd, {"text", "json"});

  std::string expand_fraction;
  auto* expand_cmd = app.add_subcommand("expand", "all-positive Conway word of p/q");
  expand_cmd->add_option("fraction", expand_fraction)->required();
  format_option(expand_cmd, {"text", "json"});

  Int table_max = 0;
  auto* table_cmd = app.add_subcommand("table", "ribbon knot counts per crossing number");
  table_cmd->add_option("--max-crossing", table_max)->required();
  format_option(table_cmd, {"text", "json", "csv"});

  ScanOptions scan;
  std::string checkpoint;
  std::size_t stop_after = 0;
  auto* scan_cmd = app.add_subcommand("scan", "search p^2/q for non-family knots passing the condition");
  scan_cmd->add_option("--min-p", scan.p_min)->required();
  scan_cmd->add_option("--max-p", scan.p_max)->required();
  scan_cmd->add_option("--jobs", scan.jobs, "worker threads (default: all cores)");
  scan_cmd->add_option("--checkpoint", checkpoint, "append completed p values here; resume from it");
  scan_cmd->add_flag("--audit", scan.audit, "test every q instead of one per orbit");
  scan_cmd->add_option("--stop-after", stop_after, "stop after this many newly completed p values");
  format_option(scan_cmd, {"text", "json"});

  Int cross_max = 0;
  auto* cross_cmd = app.add_subcommand("crosscheck", "amphicheiral knots at c vs family 0 at c+2");
  cross_cmd->add_option("--max-crossing", cross_max)->required();
  format_option(cross_cmd, {"text", "json"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    app.exit(e, err, err);
    err << app.help();
    return kExitUsage;
  }

  const bool json = format == "json";
  try {
    if (*sigma_cmd) {
      std::vector<SigmaTerm> terms;
      if (r_opt->count() > 0) {
        terms.push_back(sigma_term(sig_p, sig_q, sig_r, parse_method(method)));
      } else {
        for (Int r = 1; r < sig_p; ++r) terms.push_back(sigma_term(sig_p, sig_q, r, parse_method(method)));
      }
      if (json) {
        Json arr = Json::array();
        for (const auto& t : terms) arr.push_back(to_json(t));
        out << Json{{"p", sig_p}, {"q", sig_q}, {"terms", arr}}.dump(2) << '\n';
      } else {
        for (const auto& t : terms) print_term(out, t);
      }
      return kExitOk;
    }

    if (*cg_cmd) {
      const SigmaReport report = cg_condition(cg_p, cg_q, false, parse_method(method));
      if (json) {
        out << to_json(report).dump(2) << '\n';
      } else {
        for (const auto& t : report.terms) print_term(out, t);
        print_report_summary(out, report);
      }
      return report.passes ? kExitOk : kExitFinding;
    }

    if (*member_cmd) {
      const auto [p, q] = member_args.resolve();
      const FamilyMembership m = is_family_member(p, q);
      if (json) {
        out << to_json(m).dump(2) << '\n';
      } else {
        out << "knot=" << knot_name(p, q) << " member=" << (m.member ? "yes" : "no") << '\n';
        out << "families=";
        for (std::size_t i = 0; i < m.generator_families.size(); ++i) {
          out << (i ? "," : "") << family_label(m.generator_families[i]);
        }
        out << (m.generator_families.empty() ? "none" : "") << '\n';
        for (const auto& t : m.lemma_matches) {
          out << "condition " << match_text(t.match) << " q=" << t.representative << '\n';
        }
        if (m.partial) out << "partial=" << m.partial->canonical.str() << '\n';
      }
      return m.member ? kExitOk : kExitFinding;
    }

    if (*partial_cmd) {
      const auto [p, q] = partial_args.resolve();
      const KnotClass cls = partial_knot(p, q);
      const FamilyMembership m = is_family_member(p, q, GeneratorLookup::Skip);
      const ConwayWord word = cf_expand(cls.canonical);
      if (json) {
        Json via = Json::array();
        for (const auto& t : m.lemma_matches) {
          Json j = to_json(t.match);
          j["q"] = t.representative;
          j["fraction"] = normalize(p, t.match.n).str();
          via.push_back(std::move(j));
        }
        out << Json{{"p", p},
                    {"q", q},
                    {"partial", cls.canonical.str()},
                    {"word", word.str()},
                    {"crossing", cls.crossing},
                    {"amphicheiral", cls.amphicheiral},
                    {"strict_agree", m.strict_partials_agree},
                    {"via", via}}
                   .dump(2)
            << '\n';
      } else {
        out << "partial=" << cls.canonical.str() << " word=" << word.str()
            << " crossing=" << cls.crossing << '\n';
        for (const auto& t : m.lemma_matches) {
          out << "via " << match_text(t.match) << " q=" << t.representative << ": "
              << normalize(p, t.match.n).str() << '\n';
        }
      }
      return kExitOk;
    }

    if (*gen_cmd) {
      const auto family = static_cast<FamilyId>(gen_family);
      const GeneratedKnot k = generate(family, gen_params);
      if (json) {
        out << Json{{"family", family_label(family)},
                    {"word", k.word.str()},
                    {"fraction", k.fraction.str()},
                    {"link", k.is_link()}}
                   .dump(2)
            << '\n';
      } else {
        out << k.word.str() << ' ' << k.fraction.str() << (k.is_link() ? " link" : "") << '\n';
      }
      return kExitOk;
    }

    if (*eval_cmd) {
      const ConwayWord word = ConwayWord::parse(eval_word);
      const Fraction f = cf_eval(word, Parity::AllowEven);
      if (json) {
        out << Json{{"word", word.str()}, {"fraction", f.str()}, {"knot", f.is_knot()}}.dump(2) << '\n';
      } else {
        out << f.str() << (f.is_knot() ? "" : " link") << '\n';
      }
      return kExitOk;
    }

    if (*expand_cmd) {
      const Fraction f = Fraction::parse(expand_fraction, Parity::AllowEven);
      const ConwayWord word = cf_expand(f);
      if (json) {
        out << Json{{"fraction", f.str()}, {"word", word.str()}}.dump(2) << '\n';
      } else {
        out << word.str() << '\n';
      }
      return kExitOk;
    }

    if (*table_cmd) {
      const auto rows = ribbon_table(table_max);
      for (const auto& r : rows) {
        if (r.overlap) {
          err << "warning: crossing " << r.crossing << " has " << r.overlap
              << " classes in family 0 and family 1 or 2\n";
        }
      }
      if (format == "csv") {
        out << table_csv(rows);
      } else if (json) {
        out << to_json(rows).dump(2) << '\n';
      } else {
        out << "crossing family0 family1 family2 total\n";
        for (const auto& r : rows) {
          out << std::setw(8) << r.crossing << std::setw(8) << r.family0 << std::setw(8)
              << r.family1 << std::setw(8) << r.family2 << std::setw(6) << r.total << '\n';
        }
      }
      return kExitOk;
    }

    if (*scan_cmd) {
      if (!checkpoint.empty()) scan.checkpoint = checkpoint;
      if (stop_after > 0) scan.stop_after = stop_after;
      scan.progress = [&err](const ScanRecord& r) {
        err << "p=" << r.p << " tested=" << r.q_tested << " passing=" << r.cg_passing.size()
            << " non_family=" << r.non_family.size() << std::endl;
      };
      const auto records = conjecture_scan(scan);
      const bool counterexample =
          std::ranges::any_of(records, [](const ScanRecord& r) { return !r.non_family.empty(); });
      if (json) {
        Json arr = Json::array();
        for (const auto& r : records) {
          Json j = to_json(r);
          Json evidence = Json::array();
          for (const auto& e : r.evidence) evidence.push_back(to_json(e));
          j["evidence"] = std::move(evidence);
          arr.push_back(std::move(j));
        }
        out << arr.dump(2) << '\n';
      } else {
        for (const auto& r : records) {
          out << "p=" << r.p << " q_tested=" << r.q_tested << " cg_passing=" << r.cg_passing.size()
              << " non_family=" << r.non_family.size() << '\n';
          for (const auto& e : r.evidence) {
            out << "COUNTEREXAMPLE " << knot_name(e.p, e.q) << " passes the condition:\n";
            for (const auto& t : e.terms) print_term(out, t);
          }
        }
        out << (counterexample ? "non-family knots passing the condition were found\n"
                               : "every passing knot belongs to one of the three families\n");
      }
      return counterexample ? kExitFinding : kExitOk;
    }

    if (*cross_cmd) {
      const auto rows = amphicheiral_crosscheck(cross_max);
      const bool all_equal = std::ranges::all_of(rows, [](const CrosscheckRow& r) { return r.equal; });
      if (json) {
        Json arr = Json::array();
        for (const auto& r : rows) arr.push_back(to_json(r));
        out << arr.dump(2) << '\n';
      } else {
        for (const auto& r : rows) {
          out << "c=" << r.crossing << " amphicheiral=" << r.amphicheiral
              << " family0(c+2)=" << r.family0_at_plus_two << (r.equal ? " equal" : " DIFFERENT")
              << '\n';
        }
      }
      return all_equal ? kExitOk : kExitFinding;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace twobridge::cli
