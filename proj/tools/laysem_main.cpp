#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "laysem/error.hpp"
#include "laysem/extensions.hpp"
#include "laysem/layered.hpp"
#include "laysem/maps.hpp"
#include "laysem/tropical.hpp"

namespace {

using namespace laysem;

constexpr std::uint64_t kDefaultSeed = 1;

struct CommonFlags {
  std::string sorting = "trunc:4";
  std::string monoid = "trunc-nat:5";
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t budget = 10000;
  std::string nu_trunc;
  std::uint32_t sort_trunc = 0;
  bool force_empty_ideal = false;
  bool seed_given = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--sorting", flags.sorting,
                  "sorting semiring: trivial01inf | nat-inf | trunc:<m>");
  cmd->add_option("--monoid", flags.monoid, "value monoid: qmax | trunc-nat:<q>");
  cmd->add_option("--seed", flags.seed, "RNG seed for sampled checks (default 1)")
      ->each([&flags](const std::string&) { flags.seed_given = true; });
  cmd->add_option("--budget", flags.budget, "sample budget for infinite carriers");
  cmd->add_option("--nu-trunc", flags.nu_trunc, "collapse values >= q to <q>@0");
  cmd->add_option("--sort-trunc", flags.sort_trunc, "cap sorts at m");
  cmd->add_flag("--force-empty-ideal", flags.force_empty_ideal,
                "build the naive construction with no zero layer");
}

std::uint64_t effective_seed(const CommonFlags& flags) {
  if (flags.seed_given) return flags.seed;
  if (const char* env = std::getenv("LAYSEM_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      raise("ConfigError", std::string("bad LAYSEM_SEED: ") + env);
    }
  }
  return flags.seed;
}

LayeredSemiring build_from_flags(const CommonFlags& flags) {
  SortingSemiring L = parse_sorting_spec(flags.sorting);
  ValuedMonoid M = parse_monoid_spec(flags.monoid);
  LayeredSemiring R;
  if (flags.force_empty_ideal) {
    BuildOptions opts;
    opts.force_empty_ideal = true;
    R = build_layered(L, M, std::nullopt, opts);
  } else if (!flags.nu_trunc.empty()) {
    R = nu_truncate(L, M, Rational::parse(flags.nu_trunc));
  } else {
    R = build_layered(L, M);
  }
  if (flags.sort_trunc > 0) R = l_truncate(R, flags.sort_trunc);
  return R;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise("ConfigError", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int emit_report(const CheckReport& rep) {
  std::cout << rep.to_text();
  return rep.all_pass() ? 0 : 1;
}

int cmd_check_axioms(const CommonFlags& flags) {
  CheckOptions opts{effective_seed(flags), flags.budget};
  LayeredSemiring R = build_from_flags(flags);
  std::cout << "INSTANCE " << R.name
            << (R.is_finite() ? " [carrier=" + std::to_string(R.carrier().size()) + "]"
                              : " [sampled]")
            << " seed=" << opts.seed << "\n";
  CheckReport rep = check_axioms(R, opts);
  rep.merge(check_surpassing_suite(R, opts));
  return emit_report(rep);
}

// expression grammar: expr := element | '(' expr (+|*) expr ')'
LayeredElement parse_expr(const LayeredSemiring& R, const std::string& s,
                          std::size_t& i) {
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip();
  if (i >= s.size()) raise("ParseError", "unexpected end of expression");
  if (s[i] == '(') {
    ++i;
    LayeredElement lhs = parse_expr(R, s, i);
    skip();
    if (i >= s.size() || (s[i] != '+' && s[i] != '*'))
      raise("ParseError", "expected + or * in expression");
    char op = s[i++];
    LayeredElement rhs = parse_expr(R, s, i);
    skip();
    if (i >= s.size() || s[i] != ')') raise("ParseError", "expected ')'");
    ++i;
    return op == '+' ? R.add(lhs, rhs) : R.mul(lhs, rhs);
  }
  std::size_t start = i;
  while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) &&
         s[i] != '(' && s[i] != ')' && s[i] != '+' && s[i] != '*')
    ++i;
  LayeredElement e = LayeredElement::parse(s.substr(start, i - start));
  if (!R.contains(e)) raise("ConfigError", e.str() + " is not in " + R.name);
  return e;
}

int cmd_eval(const CommonFlags& flags, const std::string& expr) {
  LayeredSemiring R = build_from_flags(flags);
  std::size_t i = 0;
  LayeredElement result = parse_expr(R, expr, i);
  while (i < expr.size() && std::isspace(static_cast<unsigned char>(expr[i]))) ++i;
  if (i != expr.size()) raise("ParseError", "trailing input: " + expr.substr(i));
  std::cout << result.str() << "\n";
  return 0;
}

int cmd_truncate(const CommonFlags& flags) {
  LayeredSemiring R = build_from_flags(flags);
  std::cout << "# laysem instance description\n";
  std::cout << "name " << R.name << "\n";
  std::cout << "sorting " << flags.sorting << "\n";
  std::cout << "monoid " << flags.monoid << "\n";
  if (!flags.nu_trunc.empty()) std::cout << "nu-trunc " << flags.nu_trunc << "\n";
  if (flags.sort_trunc > 0) std::cout << "sort-trunc " << flags.sort_trunc << "\n";
  if (R.is_finite()) {
    auto all = R.carrier();
    std::cout << "carrier " << all.size() << "\n";
    for (const auto& e : all) std::cout << "element " << e.str() << "\n";
  } else {
    std::cout << "carrier infinite\n";
  }
  return 0;
}

int cmd_tropicalize(const CommonFlags& flags, const std::string& poly_path,
                    const std::string& roots_path) {
  CommonFlags target_flags = flags;
  if (target_flags.sorting == "trunc:4") target_flags.sorting = "nat-inf";
  if (target_flags.monoid == "trunc-nat:5") target_flags.monoid = "qmax";
  LayeredSemiring R = build_from_flags(target_flags);

  PuiseuxPoly f = parse_poly_file(read_file(poly_path));
  if (f.is_zero()) raise("ParseError", "polynomial file describes the zero polynomial");
  LayeredPolynomial trop = tropicalize_poly(R, f);
  std::cout << "TROP " << trop.str() << "\n";
  if (roots_path.empty()) return 0;

  std::vector<PuiseuxSeries> roots = parse_roots_file(read_file(roots_path));
  try {
    CheckReport rep = kapranov_check(R, f, roots);
    return emit_report(rep);
  } catch (const Error& e) {
    if (e.kind() == "NotARoot") {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
    throw;
  }
}

int cmd_check_map(const CommonFlags& flags, const std::string& kind,
                  const std::string& map_spec) {
  CheckOptions opts{effective_seed(flags), flags.budget};
  LayeredSemiring R = build_from_flags(flags);

  LayeredMap f = identity_map(R);
  if (map_spec == "identity") {
    // keep
  } else if (map_spec.rfind("frobenius:", 0) == 0) {
    f = frobenius_map(R, static_cast<unsigned>(std::stoul(map_spec.substr(10))));
  } else if (map_spec.rfind("trunc-nu:", 0) == 0) {
    Rational q = Rational::parse(map_spec.substr(9));
    LayeredSemiring dst = nu_truncate(R.L, R.base, q);
    f = nu_trunc_projection(R, dst, q);
  } else if (map_spec.rfind("trunc-sort:", 0) == 0) {
    std::uint32_t m = static_cast<std::uint32_t>(std::stoul(map_spec.substr(11)));
    LayeredSemiring dst = l_truncate(R, m);
    f = sort_trunc_projection(R, dst, m);
  } else if (map_spec == "rho-collapse") {
    LayeredSemiring dst = build_layered(make_sorting(SortingInstance::Trivial01Inf),
                                        R.base, R.mode == ZeroLayerMode::IdealZero
                                                    ? std::optional<MonoidIdeal>(R.ideal)
                                                    : std::nullopt);
    f = rho_induced_map(R, dst, [](SortValue s) {
      if (s.is_zero()) return SortValue::fin(0);
      if (!s.inf && s.n == 1) return SortValue::fin(1);
      return SortValue::infinity();
    });
  } else if (!map_spec.empty() && map_spec[0] != '-') {
    // table file: "<src-element> -> <dst-element>" per line, src = dst = R
    std::istringstream in(read_file(map_spec));
    auto table = std::make_shared<std::map<std::string, LayeredElement>>();
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty() || line[0] == '#') continue;
      std::size_t arrow = line.find("->");
      if (arrow == std::string::npos)
        raise("ParseError", "line " + std::to_string(lineno) + ": expected '->'");
      auto trim = [](std::string s) {
        std::size_t a = s.find_first_not_of(" \t");
        std::size_t b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
      };
      LayeredElement src = LayeredElement::parse(trim(line.substr(0, arrow)));
      LayeredElement dst = LayeredElement::parse(trim(line.substr(arrow + 2)));
      (*table)[src.str()] = dst;
    }
    f = {"table:" + map_spec, R, R,
         [table](const LayeredElement& x) -> LayeredElement {
           auto it = table->find(x.str());
           if (it == table->end())
             raise("ConfigError", "map table has no entry for " + x.str());
           return it->second;
         },
         [](SortValue s) { return s; }};
  } else {
    raise("ConfigError", "unknown map spec: " + map_spec);
  }

  CheckReport rep;
  if (kind == "hom")
    rep = check_semiring_hom(f, opts);
  else if (kind == "layered")
    rep = check_layered_hom(f, opts);
  else if (kind == "zero-excepted")
    rep = check_zero_excepted(f, opts);
  else if (kind == "surpassing")
    rep = check_surpassing_map(f, opts);
  else if (kind == "transmission")
    rep = check_transmission(transmission_from_map(f), {}, opts);
  else if (kind == "supervaluation") {
    Supervaluation psi = make_psi(R, SortValue::fin(1), "psi1");
    rep = check_supervaluation(psi, {true, true}, opts);
  } else
    raise("ConfigError", "unknown --kind " + kind);
  std::cout << "MAP " << f.name << "\n";
  return emit_report(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"layered (supertropical) semiring toolkit"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string expr, poly_path, roots_path;
  std::string map_kind = "hom", map_spec = "identity";

  CLI::App* ax = app.add_subcommand("check-axioms",
                                    "verify semiring laws and layering axioms");
  add_common(ax, flags);

  CLI::App* ev = app.add_subcommand("eval", "evaluate a fully parenthesized expression");
  add_common(ev, flags);
  ev->add_option("expr", expr, "e.g. \"(3@1 + 3@1) * 2@1\"")->required();

  CLI::App* tr = app.add_subcommand("tropicalize",
                                    "tropicalize a Puiseux polynomial; verify roots");
  add_common(tr, flags);
  tr->add_option("--poly", poly_path, "polynomial file (lambda^<k> : <series>)")
      ->required();
  tr->add_option("--roots", roots_path, "roots file (one series per line)");

  CLI::App* tc = app.add_subcommand("truncate", "emit a truncated instance description");
  add_common(tc, flags);

  CLI::App* cm = app.add_subcommand("check-map", "run a map checker");
  add_common(cm, flags);
  cm->add_option("--kind", map_kind,
                 "hom | layered | zero-excepted | surpassing | transmission | "
                 "supervaluation");
  cm->add_option("--map", map_spec,
                 "identity | frobenius:<m> | trunc-nu:<q> | trunc-sort:<m> | "
                 "rho-collapse | <table file>");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (ax->parsed()) return cmd_check_axioms(flags);
    if (ev->parsed()) return cmd_eval(flags, expr);
    if (tr->parsed()) return cmd_tropicalize(flags, poly_path, roots_path);
    if (tc->parsed()) return cmd_truncate(flags);
    if (cm->parsed()) return cmd_check_map(flags, map_kind, map_spec);
  } catch (const laysem::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
