// shintani: evaluate the cocycles and run the verification suites.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "shintani/harness.hpp"
#include "shintani/solomon_hu.hpp"

using namespace shintani;

namespace {

struct Options {
  int degree = kDefaultDegree;
  int n = 0;
  std::uint64_t seed = 1;
  int trials = 0;
  long conductor_cap = 0;
  bool text = false;
  bool timing = false;
  std::string f;
  std::string g;
};

// "@path" reads the argument from a file.
std::string slurp(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw MathError("cannot read " + arg.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<QMatrix> read_matrices(const Options& o) {
  if (o.g.empty()) throw MathError("matrices required (-g)");
  return qmatrices_from_json(json::parse(slurp(o.g)));
}

TestFunction read_f(const Options& o) {
  if (o.f.empty()) throw MathError("test function required (-f)");
  return parse_testfunction(slurp(o.f));
}

void check_dim(const std::vector<QMatrix>& gs, const TestFunction& f) {
  for (const auto& g : gs)
    if (g.dim() != f.dim()) throw MathError("matrix size differs from the test function dimension");
}

std::string factor_text(const std::string& kind, const TrigFactor& f) {
  std::ostringstream os;
  os << kind << "(" << to_string(f.p.r) << ";";
  for (size_t i = 0; i < f.p.lambda.size(); ++i) os << (i ? "," : "") << to_string(f.p.lambda[i]);
  os << ")";
  if (f.exp != 1) os << "^" << f.exp;
  return os.str();
}

std::string chain_text(const KChain& c) {
  std::ostringstream os;
  for (const auto& t : c) {
    os << t.coeff.get_str() << " {";
    for (size_t k = 0; k < t.symbol.size(); ++k) {
      const auto& u = t.symbol[k];
      os << (k ? ", " : "");
      std::string body = u.sign < 0 ? "-" : "";
      for (const auto& f : u.eps) body += factor_text("eps", f);
      for (const auto& f : u.one_minus) body += factor_text("(1-eps)", f);
      os << (body.empty() ? "1" : body);
    }
    os << "}\n";
  }
  return os.str();
}

std::string testfunction_text(const TestFunction& f) {
  std::ostringstream os;
  os << "n=" << f.dim() << " h=" << to_string(f.h()) << " g=" << to_string(f.period()) << '\n';
  for (const auto& [k, v] : f.values()) {
    os << "  (";
    for (size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << to_string(f.step() * static_cast<long>(k[i]));
    os << ") " << to_text(v) << '\n';
  }
  return os.str();
}

int emit(const Options& o, const json& j, const std::string& text) {
  if (o.text) {
    std::cout << text;
  } else {
    std::cout << j.dump(2) << '\n';
  }
  return 0;
}

int emit(const Options& o, const VerificationReport& r) {
  if (o.text) {
    std::cout << r.to_text(o.timing);
  } else {
    std::cout << r.to_json(o.timing).dump(2) << '\n';
  }
  return r.pass() ? 0 : 1;
}

int trials_or(const Options& o, int dflt) { return o.trials > 0 ? o.trials : dflt; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shintani and Stevens cocycles in exact arithmetic"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--degree,-D", o.degree, "total degree to verify through")->check(CLI::NonNegativeNumber);
  app.add_option("--n", o.n, "dimension");
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--trials", o.trials, "random instances per suite");
  app.add_option("--conductor-cap", o.conductor_cap, "largest cyclotomic conductor allowed");
  auto* fmt = app.add_option_group("format");
  fmt->add_flag("--json", [&o](std::int64_t) { o.text = false; }, "JSON output (default)");
  fmt->add_flag("--text", o.text, "text output");
  app.add_flag("--timing", o.timing, "include runtime in reports");

  auto sub = [&](const char* name, const char* help, bool f, bool g) {
    auto* s = app.add_subcommand(name, help);
    if (f) s->add_option("-f,--f", o.f, "test function: JSON, @file, or 'chi a+dZ^n'");
    if (g) s->add_option("-g,--gammas", o.g, "matrix or array of matrices as JSON, or @file");
    return s;
  };
  auto* c_nsh = sub("eval-nsh", "naive Shintani function Phi^NSh(gammas)(f)", true, true);
  auto* c_sh = sub("eval-sh", "Shintani cocycle Phi^Sh(alphas)(f)", true, true);
  auto* c_st = sub("eval-st", "Stevens cocycle Phi^St(gammas)(f) as a Milnor K-chain", true, true);
  auto* c_std = sub("eval-st-dlog", "dlog of the Stevens cocycle as a top form", true, true);
  auto* c_four = sub("fourier", "Fourier transform of a test function", true, false);
  auto* c_main = sub("compare-main", "dlog Phi^St(f) against (-1)^n Phi^NSh(fourier f)", true, true);
  auto* c_eq = sub("suite-equivariance", "randomized equivariance checks", false, false);
  auto* c_cone = sub("suite-cone", "perturbed cone checks", false, false);
  auto* c_rec = sub("suite-reciprocity", "Dedekind reciprocity dlog shadow", false, false);
  auto* c_cob = sub("suite-coboundary", "Stevens coboundary certificates", false, false);
  auto* c_ref = sub("suite-refinement", "refinement invariance of eta and normalize", false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (o.conductor_cap > 0) set_conductor_cap(o.conductor_cap);
    const int D = o.degree;
    if (c_nsh->parsed() || c_sh->parsed()) {
      auto f = read_f(o);
      auto gs = read_matrices(o);
      check_dim(gs, f);
      FormalFraction r = c_nsh->parsed() ? phi_nsh(gs, f, D) : phi_sh(gs, f, D);
      return emit(o, to_json(r), to_text(r) + "\n");
    }
    if (c_st->parsed() || c_std->parsed()) {
      auto f = read_f(o);
      auto gs = read_matrices(o);
      check_dim(gs, f);
      KChain c = phi_st(gs, f);
      if (c_st->parsed()) return emit(o, to_json(c), chain_text(c));
      TopForm w = dlog_chain(c, f.dim(), D);
      return emit(o, to_json(w), to_text(w) + " dT\n");
    }
    if (c_four->parsed()) {
      TestFunction fh = fourier(read_f(o));
      return emit(o, to_json(fh), testfunction_text(fh));
    }
    if (c_main->parsed()) {
      if (o.f.empty() && o.g.empty()) {
        Rng rng(o.seed);
        auto inst = random_comparison_instance(rng, o.n > 0 ? o.n : 2);
        return emit(o, compare_main(inst.gammas, inst.f, D));
      }
      auto f = read_f(o);
      auto gs = read_matrices(o);
      check_dim(gs, f);
      if (o.n > 0 && o.n != f.dim()) throw MathError("--n differs from the test function dimension");
      return emit(o, compare_main(gs, f, D));
    }
    int n = o.n > 0 ? o.n : 2;
    if (c_eq->parsed()) {
      bool d_given = app.count("--degree") > 0;
      return emit(o, suite_equivariance(o.seed, n, trials_or(o, 20), d_given ? D : 6));
    }
    if (c_cone->parsed()) {
      if (n > 4) throw MathError("suite-cone supports n <= 4");
      return emit(o, suite_cone(n, o.seed));
    }
    if (c_rec->parsed()) return emit(o, suite_reciprocity(o.seed, n, D, trials_or(o, 2)));
    if (c_cob->parsed()) {
      if (n != 2 && n != 3) throw MathError("suite-coboundary supports n = 2 or 3");
      return emit(o, suite_coboundary(n, D, o.seed));
    }
    if (c_ref->parsed()) return emit(o, suite_refinement(o.seed, D, trials_or(o, 4)));
  } catch (const json::exception& e) {
    std::cerr << "shintani: invalid JSON: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "shintani: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
