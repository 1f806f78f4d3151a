#include "cli.hpp"

#include <optional>
#include <string>

#include <CLI11.hpp>

#include "stablekac/characters.hpp"
#include "stablekac/dimensions.hpp"
#include "stablekac/errors.hpp"
#include "stablekac/finite_oracle.hpp"
#include "stablekac/format.hpp"
#include "stablekac/stable_ring.hpp"

namespace stablekac::cli {

namespace {

struct Options {
  std::string mu, nu, a, b, t, format = "text", path = "explicit";
  Index level = 0;
  Index order = 0;
  Index degree = 0;
  std::size_t rank = 0;
};

void require_nonnegative(Index v, const char* flag) {
  if (v < 0) throw InvalidInput(std::string(flag) + " must be nonnegative");
}

int cmd_charL(const Options& o, std::ostream& out, std::ostream& err) {
  require_nonnegative(o.order, "--order");
  const Partition mu = parse_partition(o.mu);
  const Partition nu = parse_partition(o.nu);
  const auto order = static_cast<std::size_t>(o.order);

  std::optional<CharacterSeries> explicit_path, generic_path;
  if (o.path != "generic") explicit_path = chr_L_explicit(mu, nu, o.level, order);
  if (o.path != "explicit") generic_path = chr_L_generic(mu, nu, o.level, order);
  const CharacterSeries& series = explicit_path ? *explicit_path : *generic_path;
  const bool both = explicit_path && generic_path;
  const bool agree = !both || *explicit_path == *generic_path;

  if (o.format == "json") {
    auto record = series_json(series);
    if (both) record["paths_agree"] = agree;
    out << dump_json(record);
  } else {
    out << series_text(series);
    if (both) out << (agree ? "paths agree\n" : "paths DISAGREE\n");
  }
  if (!agree) {
    err << "error: explicit and generic characters differ\n";
    return kExitInternal;
  }
  if (!series.is_nonnegative()) {
    err << "error: character has a negative multiplicity\n";
    return kExitInternal;
  }
  return kExitOk;
}

int cmd_denominator(const Options& o, std::ostream& out) {
  require_nonnegative(o.order, "--order");
  const auto s = denominator_inverse(static_cast<std::size_t>(o.order));
  out << (o.format == "json" ? dump_json(series_json(s)) : series_text(s));
  return kExitOk;
}

int cmd_garland(const Options& o, std::ostream& out) {
  require_nonnegative(o.degree, "--degree");
  if (o.format == "json") {
    out << dump_json({{"degree", std::to_string(o.degree)}, {"terms", kelement_json(garland(o.degree))}});
    return kExitOk;
  }
  // Listed as a sum over λ ⊢ i in enumeration order.
  std::string line;
  for (const auto& lambda : enumerate_partitions(o.degree)) {
    if (!line.empty()) line += " + ";
    line += bipartition_text({lambda, conjugate(lambda)});
  }
  out << line << '\n';
  return kExitOk;
}

int cmd_tensor(const Options& o, std::ostream& out) {
  const auto product = stable_tensor(parse_bipartition(o.a), parse_bipartition(o.b));
  out << (o.format == "json" ? dump_json(kelement_json(product)) : kelement_text(product) + "\n");
  return kExitOk;
}

int cmd_dim(const Options& o, std::ostream& out) {
  const auto e = dim_expr(parse_partition(o.mu), parse_partition(o.nu));
  out << (o.t.empty() ? dim_expr_text(e) : to_decimal(evaluate_dim(e, parse_rational(o.t)))) << '\n';
  return kExitOk;
}

int cmd_nekrasov(const Options& o, std::ostream& out) {
  require_nonnegative(o.order, "--order");
  const auto order = static_cast<std::size_t>(o.order);
  const auto lhs = nekrasov_okounkov_lhs(order);
  const auto rhs = nekrasov_okounkov_rhs(order);
  bool all = true;
  for (std::size_t n = 0; n <= order; ++n) {
    const bool ok = lhs[n] == rhs[n];
    out << "q^" << n << ": " << (ok ? "PASS" : "FAIL") << '\n';
    if (!ok) out << "  lhs = " << xpoly_text(lhs[n]) << "\n  rhs = " << xpoly_text(rhs[n]) << '\n';
    all = all && ok;
  }
  out << (all ? "PASS" : "FAIL") << " q^0..q^" << order << '\n';
  return all ? kExitOk : kExitInternal;
}

int cmd_oracle_tensor(const Options& o, std::ostream& out) {
  const auto a = parse_bipartition(o.a);
  const auto b = parse_bipartition(o.b);
  const std::size_t n = o.rank ? o.rank : default_tensor_rank(a, b);
  for (const auto& [w, m] : finite_tensor(n, bipartition_to_rational_weight(a, n), bipartition_to_rational_weight(b, n))) {
    out << m.str() << " x (";
    for (std::size_t i = 0; i < w.rank(); ++i) out << (i ? "," : "") << w.entries()[i];
    out << ")  " << bipartition_text(rational_weight_to_bipartition(w)) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Characters of affine Lie algebras in Deligne's category rep(GL_t)"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* charL = app.add_subcommand("charL", "Character of the simple module L([mu,nu], k)");
  charL->add_option("--mu", o.mu, "Left partition, comma-separated");
  charL->add_option("--nu", o.nu, "Right partition, comma-separated");
  charL->add_option("--level", o.level, "Level k")->required();
  charL->add_option("--order", o.order, "Highest power of q")->required();
  charL->add_option("--path", o.path, "explicit formula, Weyl group sum, or both")
      ->check(CLI::IsMember({"explicit", "generic", "both"}));
  add_format(charL);

  auto* denominator = app.add_subcommand("denominator", "Inverse of the trivial Verma character");
  denominator->add_option("--order", o.order, "Highest power of q")->required();
  add_format(denominator);

  auto* garland_cmd = app.add_subcommand("garland", "Stable cohomology of the negative loop algebra");
  garland_cmd->add_option("--degree", o.degree, "Cohomological degree")->required();
  add_format(garland_cmd);

  auto* tensor_cmd = app.add_subcommand("tensor", "Stable tensor product of two bipartitions");
  tensor_cmd->add_option("--a", o.a, "First bipartition, left/right")->required();
  tensor_cmd->add_option("--b", o.b, "Second bipartition, left/right")->required();
  add_format(tensor_cmd);

  auto* dim = app.add_subcommand("dim", "Categorical dimension of L_[mu,nu]");
  dim->add_option("--mu", o.mu, "Left partition");
  dim->add_option("--nu", o.nu, "Right partition");
  dim->add_option("--t", o.t, "Evaluate at t = P/Q");

  auto* nekrasov = app.add_subcommand("nekrasov", "Check the Nekrasov-Okounkov hook length identity");
  nekrasov->add_option("--order", o.order, "Highest power of q")->required();

  auto* oracle = app.add_subcommand("oracle-tensor", "GL_n tensor product by weight stripping");
  oracle->group("");
  oracle->add_option("--a", o.a)->required();
  oracle->add_option("--b", o.b)->required();
  oracle->add_option("--rank", o.rank);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    if (charL->parsed()) return cmd_charL(o, out, err);
    if (denominator->parsed()) return cmd_denominator(o, out);
    if (garland_cmd->parsed()) return cmd_garland(o, out);
    if (tensor_cmd->parsed()) return cmd_tensor(o, out);
    if (dim->parsed()) return cmd_dim(o, out);
    if (nekrasov->parsed()) return cmd_nekrasov(o, out);
    if (oracle->parsed()) return cmd_oracle_tensor(o, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const NonDominantWeight& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const RankTooSmall& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const InternalInconsistency& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const NotARepresentation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInvalidInput;
}

}  // namespace stablekac::cli
