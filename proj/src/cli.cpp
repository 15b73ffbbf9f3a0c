#include "b4cat/cli.hpp"

#include <algorithm>
#include <fstream>

#include "CLI11.hpp"
#include "b4cat/action.hpp"
#include "b4cat/complex.hpp"
#include "b4cat/garside.hpp"
#include "b4cat/suites.hpp"

namespace b4cat {

namespace {

int cmd_verify(const std::string& suite, const VerifyOptions& opts,
               std::ostream& out, std::ostream& err) {
  const std::vector<SuiteReport> reports = run_suites(suite, opts);
  bool all_pass = true;
  for (const SuiteReport& r : reports) {
    print_report(r, out);
    err << "# suite " << r.suite << " took " << r.seconds << "s\n";
    all_pass = all_pass && r.passed();
  }
  if (reports.size() > 1)
    out << "OVERALL " << (all_pass ? "PASS" : "FAIL") << '\n';
  return all_pass ? 0 : 1;
}

int cmd_ball(int radius, const std::string& path, std::ostream& err) {
  const Ball ball = build_ball(radius);
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << path << "' for writing\n";
    return 2;
  }
  write_ball(ball, file);
  return file.good() ? 0 : 2;
}

int cmd_link(const std::string& vertex, const std::string& format,
             std::ostream& out) {
  const LinkGraph l = link(coset_key(parse_word(vertex)));
  if (format == "dot")
    write_link_dot(l, out);
  else
    write_link_text(l, out);
  return 0;
}

int cmd_nf(const std::string& word, std::ostream& out) {
  const NormalForm nf = normal_form(parse_word(word));
  out << "inf=" << nf.inf << " factors=[";
  for (std::size_t i = 0; i < nf.factors.size(); ++i) {
    if (i) out << ' ';
    out << nf.factors[i].one_line();
  }
  out << "]\n";
  return 0;
}

int cmd_eq(const std::string& w1, const std::string& w2, std::ostream& out) {
  const bool eq = equals(parse_word(w1), parse_word(w2));
  out << (eq ? "equal" : "not-equal") << '\n';
  return eq ? 0 : 1;
}

int cmd_spellings(std::ostream& out) {
  for (const Word& w : spellings_of_x()) out << to_string(w) << '\n';
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Builds finite pieces of the coset 2-complex of B4 and "
               "verifies its presentations, links, curvature condition and "
               "isometry group"};
  app.name("b4cat");
  app.require_subcommand(1);

  std::string suite = "all";
  VerifyOptions opts;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run a verification suite and print one CHECK line per check");
  std::vector<std::string> suite_choices = kSuiteNames;
  suite_choices.push_back("all");
  verify->add_option("--suite", suite, "Suite to run")
      ->capture_default_str()
      ->check(CLI::IsMember(suite_choices));
  verify->add_option("--radius", opts.radius, "Ball radius for the checks")
      ->capture_default_str()
      ->check(CLI::Range(0, kRadiusCap));
  verify->add_option("--samples", opts.samples, "Random samples per property")
      ->capture_default_str()
      ->check(CLI::Range(0, 1000000));
  verify->add_option("--seed", opts.seed, "Random seed")->capture_default_str();

  int ball_radius = 0;
  std::string ball_out;
  CLI::App* ball = app.add_subcommand("ball", "Export a ball as text");
  ball->add_option("--radius", ball_radius, "Ball radius")
      ->required()
      ->check(CLI::Range(0, kRadiusCap));
  ball->add_option("--out", ball_out, "Output file path")->required();

  std::string link_vertex;
  std::string link_format = "text";
  CLI::App* link_cmd =
      app.add_subcommand("link", "Print the link graph of a vertex");
  link_cmd->add_option("--vertex", link_vertex, "Word naming the coset")
      ->capture_default_str();
  link_cmd->add_option("--format", link_format, "text or dot")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "dot"}));

  std::string nf_word;
  CLI::App* nf = app.add_subcommand("nf", "Print the Garside normal form");
  nf->add_option("word", nf_word, "Word to normalize")->required();

  std::string eq_w1, eq_w2;
  CLI::App* eq = app.add_subcommand("eq", "Decide equality of two words");
  eq->add_option("word1", eq_w1)->required();
  eq->add_option("word2", eq_w2)->required();

  app.add_subcommand("spellings", "List the length-3 spellings of x = bac");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(suite, opts, out, err);
    if (ball->parsed()) return cmd_ball(ball_radius, ball_out, err);
    if (link_cmd->parsed()) return cmd_link(link_vertex, link_format, out);
    if (nf->parsed()) return cmd_nf(nf_word, out);
    if (eq->parsed()) return cmd_eq(eq_w1, eq_w2, out);
    return cmd_spellings(out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace b4cat
