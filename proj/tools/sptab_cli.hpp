#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sptab/bijections.hpp"
#include "sptab/characters.hpp"
#include "sptab/crystal.hpp"
#include "sptab/crystal_graph.hpp"
#include "sptab/verify.hpp"

namespace sptab::cli {

enum Exit { ok = 0, verification_failure = 1, usage_error = 2, invalid_input = 3 };

struct usage_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string action;
  std::optional<int> m, g, index, max_size;
  std::optional<std::string> mu, lambda, nu, weight, input, output;
  std::string op = "raise";
  std::string format;
  std::string model;
};

class Runner {
public:
  Runner(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  int dispatch(const std::string& command, const Flags& f) {
    f_ = f;
    if (command == "enumerate") return enumerate();
    if (command == "map") return map();
    if (command == "crystal") return crystal();
    if (command == "char") return character();
    if (command == "show") return show();
    return verify();
  }

  std::string output() const { return buf_.str(); }

private:
  // -- flag helpers ---------------------------------------------------------

  int need(const std::optional<int>& v, const char* name) const {
    if (!v) throw usage_failure(std::string("missing --") + name);
    return *v;
  }
  Partition shape(const std::optional<std::string>& v, const char* name, bool required = true) const {
    if (!v) {
      if (required) throw usage_failure(std::string("missing --") + name);
      return Partition{};
    }
    return parse_partition(*v);
  }
  int rank() const {
    int m = need(f_.m, "m");
    if (m < 1) throw usage_failure("--m must be positive");
    return m;
  }
  int width() const {
    int g = need(f_.g, "g");
    if (g < 1) throw usage_failure("--g must be positive");
    return g;
  }
  Direction direction() const { return f_.op == "lower" ? Direction::lower : Direction::raise; }

  std::string read_input() {
    std::stringstream ss;
    if (!f_.input || *f_.input == "-") {
      ss << in_.rdbuf();
    } else {
      std::ifstream file(*f_.input);
      if (!file) throw usage_failure("cannot read " + *f_.input);
      ss << file.rdbuf();
    }
    return ss.str();
  }

  std::string model_of(const std::string& text) const {
    if (!f_.model.empty()) return f_.model;
    auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && (text[pos] == '(' || text[pos] == '[')) return "ssot";
    if (text.find(',') != std::string::npos) return "matrix";
    return "king";
  }

  // -- commands -------------------------------------------------------------

  int enumerate() {
    const int m = rank();
    std::size_t count = 0;
    if (f_.action == "king") {
      for (const auto& t : enumerate_king(shape(f_.mu, "mu"), m)) {
        buf_ << (count++ ? "\n" : "") << to_string(t);
      }
    } else {
      const int g = width();
      std::optional<std::vector<int>> wt;
      if (f_.weight) wt = parse_weight(*f_.weight).coords;
      for (const auto& t : enumerate_ssot(shape(f_.lambda, "lambda", false), shape(f_.mu, "mu", false), m, g, wt)) {
        buf_ << to_string(t, m) << "\n";
        ++count;
      }
    }
    buf_ << "# count " << count << "\n";
    return ok;
  }

  int map() {
    const std::string text = read_input();
    if (f_.action == "psi") {
      buf_ << to_string(psi(parse_king(text, rank()), width())) << "\n";
    } else if (f_.action == "psi-inv") {
      buf_ << to_string(psi_inverse(parse_ssot(text), rank(), width()));
    } else if (f_.action == "phi") {
      buf_ << to_string(phi(parse_ssot(text), f_.m.value_or(0)));
    } else {
      buf_ << to_string(phi_inverse(parse_matrix(text)), f_.m.value_or(0)) << "\n";
    }
    return ok;
  }

  int crystal() {
    if (f_.action == "apply") return crystal_apply();
    if (f_.action == "graph") return crystal_graph_cmd();
    return crystal_decompose();
  }

  int crystal_apply() {
    const int i = need(f_.index, "index");
    const Direction d = direction();
    const std::string text = read_input();
    const std::string kind = model_of(text);
    if (kind == "ssot") {
      auto r = ssot_op(parse_ssot(text), i, d, width());
      buf_ << (r ? to_string(*r, f_.m.value_or(0)) : "none") << "\n";
    } else if (kind == "matrix") {
      auto r = matrix_op(parse_matrix(text), i, d, width());
      buf_ << (r ? to_string(*r) : "none\n");
    } else if (kind == "king") {
      KingTableau t = parse_king(text, rank());
      auto r = king_op(t, i, d, f_.g.value_or(std::max(1, t.shape().columns())));
      buf_ << (r ? to_string(*r) : "none\n");
    } else {
      throw usage_failure("--model must be ssot, king or matrix");
    }
    return ok;
  }

  template <class X, class Label>
  void emit_graph(const CrystalGraph<X>& g, Label label) {
    if (f_.format == "adj")
      buf_ << to_adjacency(g, label);
    else if (f_.format.empty() || f_.format == "dot")
      buf_ << to_dot(g, label);
    else
      throw usage_failure("--format must be dot or adj for graphs");
  }

  int crystal_graph_cmd() {
    const int m = rank(), g = width();
    const Partition mu = shape(f_.mu, "mu");
    if (!fits_in_rectangle(mu, m, g)) throw usage_failure("--mu must fit in m rows and g columns");
    if (f_.model == "king") {
      emit_graph(detail::king_graph(mu, m, g), detail::king_label);
    } else {
      auto cg = detail::ssot_graph(enumerate_ssot(Partition{}, rect_complement(mu, m, g), m, g), detail::indices_upto(m), m, g);
      emit_graph(cg, [m](const SSOT& t) { return to_string(t, m); });
    }
    return ok;
  }

  int crystal_decompose() {
    const int m = rank(), g = width();
    const Partition inside = shape(f_.lambda, "lambda", false), outside = shape(f_.mu, "mu", false);
    auto cg = detail::ssot_graph(enumerate_ssot(inside, outside, m, g), detail::indices_upto(m, inside.empty() ? 0 : 1), m, g);
    auto d = decompose(cg);
    for (auto it = d.rbegin(); it != d.rend(); ++it) {
      buf_ << it->second << " : ";
      if (inside.empty())
        buf_ << to_string(dominant_to_partition(it->first));
      else
        buf_ << to_string(it->first);
      buf_ << "\n";
    }
    return ok;
  }

  int character() {
    const int m = rank();
    if (f_.action == "chi") {
      buf_ << to_string(king_character(shape(f_.lambda, "lambda"), m));
      return ok;
    }
    if (f_.action == "schur") {
      buf_ << to_string(schur_eval(shape(f_.mu, "mu"), m));
      return ok;
    }
    if (f_.action == "decompose") {
      if (f_.lambda && f_.mu) {
        const Partition lambda = shape(f_.lambda, "lambda"), mu = shape(f_.mu, "mu");
        if (f_.format == "tsv") {
          ConjectureReport rep = conjecture_verify(lambda, mu, m);
          buf_ << to_tsv(rep);
          return rep.ok() ? ok : verification_failure;
        }
        buf_ << to_string(decompose_sp(king_character(lambda, m) * schur_eval(mu, m), m));
      } else {
        buf_ << to_string(decompose_sp(parse_character(read_input(), m), m));
      }
      return ok;
    }
    return pieri(m);
  }

  int pieri(int m) {
    const Partition lambda = shape(f_.lambda, "lambda"), mu = shape(f_.mu, "mu");
    const bool row = mu.length() <= 1, col = mu.columns() <= 1;
    if (!row && !col) throw usage_failure("--mu must be a single row (h_k) or a single column (e_l)");
    const Decomposition d = decompose_sp(king_character(lambda, m) * schur_eval(mu, m), m);
    bool all = true;
    buf_ << "nu\tlhs_count\trhs_coeff\tstatus\n";
    const int total = lambda.size() + mu.size();
    for (int n = total; n >= 0; --n)
      for (const auto& nu : partitions_of(n, -1, m)) {
        const long long rule = col ? dual_pieri_count(lambda, mu.size(), nu, m) : sundaram_count(lambda, mu.size(), nu, m);
        const long long c = d.count(nu) ? d.at(nu) : 0;
        if (rule == 0 && c == 0) continue;
        all = all && rule == c;
        buf_ << to_string(nu) << "\t" << rule << "\t" << c << "\t" << (rule == c ? "equal" : "differs") << "\n";
      }
    return all ? ok : verification_failure;
  }

  // Intermediate data behind the bijections, one labelled line per item.
  int show() {
    const std::string text = read_input();
    if (f_.action == "rsk") {
      const IntMatrix mtx = parse_matrix(text);
      auto [p, q] = rsk_column(mtx);
      buf_ << "P " << compact(p) << "\nQ " << compact(q) << "\nshape " << to_string(p.shape()) << "\nc " << c_index(mtx)
           << "\nsymmetric_even " << (sym_even_check(mtx) ? "yes" : "no") << "\n";
    } else if (f_.action == "ssot") {
      const SSOT t = parse_ssot(text);
      const int g = width(), m = std::max(f_.m.value_or(0), t.length());
      const SsotWeights w = ssot_weights(t, g, m);
      buf_ << "rows " << to_string(t, m) << "\nwt ";
      for (std::size_t k = 0; k < w.wt.size(); ++k) buf_ << (k ? "," : "[") << w.wt[k];
      buf_ << (w.wt.empty() ? "[]" : "]") << "\ncwt " << to_string(w.cwt) << "\n";
      if (f_.index) {
        const int i = *f_.index;
        if (i >= 1) {
          auto [c, d] = local_multisets(t, i);
          buf_ << "C " << to_string(c) << "\nD " << to_string(d) << "\n";
        }
        const CrystalStats st = ssot_stats(t, i, g);
        buf_ << "epsilon " << st.epsilon << "\nphi " << st.phi << "\n";
      }
    } else if (f_.action == "phi") {
      const SSOT t = parse_ssot(text);
      const int g = width(), m = std::max(f_.m.value_or(0), t.length());
      const IntMatrix mtx = phi(t, m);
      buf_ << "involution " << to_string(phi_involution(t)) << "\nmatrix " << one_line(to_string(mtx)) << "\nP "
           << compact(rsk_column(mtx).p) << "\ncwt " << to_string(matrix_cwt(mtx, g)) << "\nking "
           << one_line(to_string(psi_inverse(t, m, g))) << "\n";
    } else {
      const PVTrace tr = pv_trace(parse_matrix(text));
      buf_ << "word";
      for (int x : tr.inverse_column_word) buf_ << ' ' << x;
      buf_ << "\nq\tP\tV\n";
      for (std::size_t q = 0; q < tr.p.size(); ++q) buf_ << q << '\t' << compact(tr.p[q]) << '\t' << compact(tr.v[q]) << '\n';
    }
    return ok;
  }

  static std::string one_line(std::string s) {
    while (!s.empty() && s.back() == '\n') s.pop_back();
    for (char& ch : s)
      if (ch == '\n') ch = '/';
    return s;
  }
  static std::string compact(const SSYT& t) { return one_line(to_string(t)); }

  int verify() {
    const int m = f_.m.value_or(2), g = f_.g.value_or(2), size = f_.max_size.value_or(4);
    check_limits(m, g, size);
    std::vector<SuiteReport> reports;
    const std::string& s = f_.action;
    if (s == "bijections" || s == "all") reports.push_back(verify_bijections(m, g));
    if (s == "crystal" || s == "all") reports.push_back(verify_crystal(m, g));
    if (s == "characters" || s == "all") reports.push_back(verify_characters(m, size));
    if (s == "conjecture" || s == "all") reports.push_back(verify_conjecture(m, size));
    bool all = true;
    if (f_.format == "tsv") buf_ << "suite\tcheck\tcases\tfailures\tstatus\n";
    for (const auto& r : reports) {
      all = all && r.ok();
      if (f_.format == "tsv") {
        buf_ << r.tsv();
      } else {
        if (s == "conjecture") buf_ << r.extra_tsv;
        buf_ << r.text();
      }
    }
    if (f_.format != "tsv") buf_ << (all ? "PASS" : "FAIL") << "  verify " << s << "\n";
    return all ? ok : verification_failure;
  }

  std::istream& in_;
  std::ostream& out_;
  std::ostringstream buf_;
  Flags f_;
};

inline void add_common(CLI::App* app, Flags& f) {
  app->add_option("--m", f.m, "rank m");
  app->add_option("--g", f.g, "rectangle width g");
  app->add_option("--mu", f.mu, "partition, e.g. [2,1]");
  app->add_option("--lambda", f.lambda, "partition, e.g. [2,1]");
  app->add_option("--nu", f.nu, "partition, e.g. [2,1]");
  app->add_option("--weight", f.weight, "weight, e.g. [1,0,2]");
  app->add_option("--input", f.input, "input file (default stdin)");
  app->add_option("--output", f.output, "output file (default stdout)");
}

/// Runs the command line `args` (without the program name). Returns the exit status.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symplectic tableaux: King tableaux, oscillating tableaux, crystals and characters", "sptab"};
  app.require_subcommand(1);
  Flags f;

  auto* en = app.add_subcommand("enumerate", "list King tableaux or semistandard oscillating tableaux");
  en->add_option("what", f.action)->required()->check(CLI::IsMember({"king", "ssot"}));
  add_common(en, f);

  auto* mp = app.add_subcommand("map", "apply Psi, Phi or their inverses to an input object");
  mp->add_option("which", f.action)->required()->check(CLI::IsMember({"psi", "psi-inv", "phi", "phi-inv"}));
  add_common(mp, f);

  auto* cr = app.add_subcommand("crystal", "Kashiwara operators, crystal graphs and decompositions");
  cr->add_option("what", f.action)->required()->check(CLI::IsMember({"apply", "graph", "decompose"}));
  add_common(cr, f);
  cr->add_option("--op", f.op, "raise or lower")->check(CLI::IsMember({"raise", "lower"}));
  cr->add_option("--index", f.index, "operator index i >= 0");
  cr->add_option("--format", f.format, "dot or adj")->check(CLI::IsMember({"dot", "adj"}));
  cr->add_option("--model", f.model, "ssot, king or matrix (default: guessed from the input)")
      ->check(CLI::IsMember({"ssot", "king", "matrix"}));

  auto* ch = app.add_subcommand("char", "characters, Schur polynomials and decompositions");
  ch->add_option("what", f.action)->required()->check(CLI::IsMember({"chi", "schur", "decompose", "pieri"}));
  add_common(ch, f);
  ch->add_option("--format", f.format, "tsv for the comparison table")->check(CLI::IsMember({"tsv"}));

  auto* sh = app.add_subcommand("show", "print the intermediate data of RSK, Phi and the P/V trace");
  sh->add_option("what", f.action)->required()->check(CLI::IsMember({"rsk", "ssot", "phi", "trace"}));
  add_common(sh, f);
  sh->add_option("--index", f.index, "also print the local multisets and statistics for index i");

  auto* vf = app.add_subcommand("verify", "run invariant batteries");
  vf->add_option("suite", f.action)->required()->check(CLI::IsMember({"bijections", "crystal", "characters", "conjecture", "all"}));
  add_common(vf, f);
  vf->add_option("--max-size", f.max_size, "largest partition size for character suites");
  vf->add_option("--format", f.format, "tsv for a machine-readable report")->check(CLI::IsMember({"tsv"}));

  std::vector<std::string> argv{"sptab"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::vector<char*> cargv;
  for (auto& a : argv) cargv.push_back(a.data());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return usage_error;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Runner runner(in, out);
  int status = ok;
  try {
    status = runner.dispatch(command, f);
  } catch (const usage_failure& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const precondition_error& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const invalid_object& e) {
    err << "invalid object: " << e.what() << "\n";
    return invalid_input;
  }
  if (f.output && *f.output != "-") {
    std::ofstream file(*f.output);
    if (!file) {
      err << "error: cannot write " << *f.output << "\n";
      return usage_error;
    }
    file << runner.output();
  } else {
    out << runner.output();
  }
  return status;
}

} // namespace sptab::cli
