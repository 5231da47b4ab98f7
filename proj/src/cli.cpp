#include "mcf/cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <optional>
#include <sstream>

#include "mcf/invariants.hpp"
#include "mcf/json_io.hpp"
#include "mcf/refined_divisors.hpp"
#include "mcf/subgroups.hpp"

namespace mcf::cli {

namespace {

struct Context {
  Config cfg;
  std::ostream& out;
  std::ostream& err;

  bool json() const { return cfg.output == OutputFormat::json; }
  void emit(const Json& j) const { out << j.dump(2) << "\n"; }

  EnumerationOptions options() const {
    EnumerationOptions o;
    o.mode = cfg.enumeration_mode;
    o.workers = cfg.workers;
    o.max_genus = cfg.max_genus;
    o.max_floor_degree = cfg.max_degree;
    o.max_pearl_norm = cfg.max_degree;
    o.max_pearl_degree = cfg.max_degree;
    return o;
  }

  void check_genus(int g) const {
    if (g > cfg.max_genus) throw BoundExceeded("max_genus", "g = " + std::to_string(g));
  }
  void check_degree(std::int64_t v, const std::string& what) const {
    if (std::llabs(v) > cfg.max_degree) throw BoundExceeded("max_degree", what + " = " + std::to_string(v));
  }
  void check_delta(std::int64_t d) const {
    if (d > cfg.max_delta) throw BoundExceeded("max_delta", "delta = " + std::to_string(d));
  }
};

Json t_basis_result(const TBasis& tb) { return {{"t_basis", to_json(tb)}, {"rendered", render_t_basis(tb)}}; }

DiagramDegree parse_degree(const std::string& text) {
  const auto v = parse_int_list(text);
  if (v.size() != 2) throw std::invalid_argument("--B expects |B|,a");
  return {v[0], v[1]};
}

int report_mcf(const Context& ctx, const MCFReport& r) {
  if (ctx.json() || !r.passed()) {
    ctx.emit(to_json(r));
  } else {
    ctx.out << "alpha " << r.alpha << ": " << r.checked.size() << "/" << r.checked.size() << " elements pass\n";
  }
  return r.passed() ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact multiple cover formula computations in the group algebra of (Q/Z)^2", "mcf"};
  app.require_subcommand(1);
  app.fallthrough();
  app.failure_message(CLI::FailureMessage::help);

  Config cfg;
  std::string mode_name = "unlabeled_aut";
  std::string output_name = "table";
  app.add_option("--max-genus", cfg.max_genus, "Largest genus accepted")->check(CLI::PositiveNumber);
  app.add_option("--max-degree", cfg.max_degree, "Largest degree, |B| or end weight accepted")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-delta", cfg.max_delta, "Largest orbit multiple accepted")->check(CLI::PositiveNumber);
  app.add_option("--enumeration-mode", mode_name, "unlabeled_aut or labeled")
      ->check(CLI::IsMember({"unlabeled_aut", "labeled"}));
  app.add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--output", output_name, "json or table")->check(CLI::IsMember({"json", "table"}));

  std::function<int(const Context&)> action;

  // sigma
  unsigned sigma_m = 1;
  std::int64_t sigma_delta = 1, sigma_a = 1;
  auto* sigma = app.add_subcommand("sigma", "Refined divisor function");
  sigma->add_option("--m", sigma_m, "Power")->capture_default_str();
  sigma->add_option("--delta", sigma_delta, "Torsion level")->required()->check(CLI::PositiveNumber);
  sigma->add_option("--a", sigma_a, "Argument")->required()->check(CLI::PositiveNumber);
  sigma->callback([&] {
    action = [&](const Context& ctx) {
      const TBasis tb = refined_sigma_t_basis(sigma_m, sigma_delta, sigma_a);
      if (ctx.json()) ctx.emit(t_basis_result(tb));
      else ctx.out << render_t_basis(tb) << "\n";
      return 0;
    };
  });

  // subgroups
  std::int64_t sub_n = 1;
  auto* subgroups = app.add_subcommand("subgroups", "Subgroup lattice of Z_n^2");
  subgroups->add_option("--n", sub_n, "Modulus")->required()->check(CLI::PositiveNumber);
  subgroups->callback([&] {
    action = [&](const Context& ctx) {
      const auto all = enumerate_subgroups(sub_n);
      if (ctx.json()) {
        Json j = Json::array();
        for (const auto& [k, ct] : all) j.push_back(to_json(k));
        ctx.emit(j);
      } else {
        for (const auto& [k, ct] : all)
          ctx.out << k.to_string() << "  cotype (" << ct.d1 << "," << ct.d2 << ")  index " << k.index() << "\n";
      }
      return 0;
    };
  });

  // count
  auto* count = app.add_subcommand("count", "Refined subgroup counts");
  count->require_subcommand(1);
  count->fallthrough();
  std::optional<std::int64_t> c_d1, c_d2, c_delta;
  std::int64_t c_n = 1, c_omega = 1;
  for (const char* name : {"M", "F", "G"}) {
    auto* sub = count->add_subcommand(name, std::string("Compute ") + name);
    sub->fallthrough();
    sub->add_option("--d1", c_d1, "First invariant factor of the quotient");
    sub->add_option("--d2", c_d2, "Second invariant factor of the quotient");
    sub->add_option("--delta", c_delta, "Index of the subgroup");
    sub->add_option("--n", c_n, "Modulus")->required()->check(CLI::PositiveNumber);
    if (std::string(name) == "G") sub->add_option("--omega", c_omega, "Marking order")->required()->check(CLI::PositiveNumber);
    const std::string fn = name;
    sub->callback([&, fn] {
      action = [&, fn](const Context& ctx) {
        const bool pair = c_d1 && c_d2;
        if (pair == c_delta.has_value()) throw std::invalid_argument("give either --d1 and --d2, or --delta");
        TBasis tb;
        if (fn == "M") tb = pair ? refined_cotype_count_t_basis(*c_d1, *c_d2, c_n) : refined_index_count_t_basis(*c_delta, c_n);
        if (fn == "F") tb = pair ? twisted_pair_count_t_basis(*c_d1, *c_d2, c_n) : twisted_pair_count_agg_t_basis(*c_delta, c_n);
        if (fn == "G")
          tb = pair ? marked_pair_count_t_basis(c_omega, *c_d1, *c_d2, c_n)
                    : marked_pair_count_agg_t_basis(c_omega, *c_delta, c_n);
        if (ctx.json()) ctx.emit(t_basis_result(tb));
        else ctx.out << render_t_basis(tb) << "\n";
        return 0;
      };
    });
  }

  // diagrams and invariants share their parameters
  int d_g = 1;
  std::optional<int> d_g0;
  std::int64_t d_a = 1;
  std::string d_w = "1,-1", d_b = "1,1";
  auto add_floor_opts = [&](CLI::App* s) {
    s->fallthrough();
    s->add_option("--g", d_g, "Genus")->required()->check(CLI::NonNegativeNumber);
    s->add_option("--a", d_a, "Degree over the elliptic curve")->required()->check(CLI::PositiveNumber);
    s->add_option("--w", d_w, "Signed end weights, comma separated")->required();
    s->add_option("--g0", d_g0, "Skeleton genus for the lambda refinement");
  };
  auto add_pearl_opts = [&](CLI::App* s) {
    s->fallthrough();
    s->add_option("--g", d_g, "Genus")->required()->check(CLI::PositiveNumber);
    s->add_option("--B", d_b, "Diagram degree |B|,a")->required();
    s->add_option("--g0", d_g0, "Skeleton genus for the lambda refinement");
  };
  auto mode_of = [&] { return d_g0 ? InvariantMode::lambda(*d_g0) : InvariantMode::points(); };

  auto* diagrams = app.add_subcommand("diagrams", "Enumerate diagrams with their multiplicities");
  diagrams->require_subcommand(1);
  diagrams->fallthrough();
  auto* dfloor = diagrams->add_subcommand("floor", "Floor diagrams");
  add_floor_opts(dfloor);
  dfloor->callback([&] {
    action = [&](const Context& ctx) {
      const RamificationProfile x{d_a, parse_int_list(d_w)};
      x.validate();
      ctx.check_genus(d_g);
      ctx.check_degree(d_a, "a");
      for (auto v : x.w) ctx.check_degree(v, "end weight");
      const InvariantMode mode = mode_of();
      const auto list = enumerate_floor_diagrams(d_g, x.a, x.w, with_mode(ctx.options(), d_g, mode));
      Json j = Json::array();
      for (const auto& d : list) {
        const TBasis m = floor_multiplicity_t_basis(d, mode.kind);
        if (ctx.json()) j.push_back({{"diagram", to_json(d)}, {"multiplicity", to_json(m)}});
        else ctx.out << d.canonical_key() << "  " << render_t_basis(m) << "\n";
      }
      if (ctx.json()) ctx.emit(j);
      else ctx.out << list.size() << " diagrams\n";
      return 0;
    };
  });
  auto* dpearl = diagrams->add_subcommand("pearl", "Pearl diagrams");
  add_pearl_opts(dpearl);
  dpearl->callback([&] {
    action = [&](const Context& ctx) {
      const DiagramDegree b = parse_degree(d_b);
      ctx.check_genus(d_g);
      ctx.check_degree(b.norm, "|B|");
      ctx.check_degree(b.a, "a");
      const InvariantMode mode = mode_of();
      const auto list = enumerate_pearl_diagrams(d_g, b, with_mode(ctx.options(), d_g, mode));
      Json j = Json::array();
      for (const auto& d : list) {
        const TBasis m = pearl_multiplicity_t_basis(d, mode.kind);
        if (ctx.json()) j.push_back({{"diagram", to_json(d)}, {"multiplicity", to_json(m)}});
        else ctx.out << d.canonical_key() << "  " << render_t_basis(m) << "\n";
      }
      if (ctx.json()) ctx.emit(j);
      else ctx.out << list.size() << " diagrams\n";
      return 0;
    };
  });

  auto* invariant = app.add_subcommand("invariant", "Assembled invariants");
  invariant->require_subcommand(1);
  invariant->fallthrough();
  auto emit_invariant = [](const Context& ctx, std::int64_t n, const GroupElement& v) {
    const TBasis tb = t_basis_decompose(n, v);
    if (ctx.json()) {
      Json by_order = Json::object();
      for (std::int64_t d : divisors(n)) by_order[std::to_string(d)] = to_json(v.coefficient(TorsionPoint(1, 0, d)));
      ctx.emit({{"t_basis", to_json(tb)}, {"rendered", render_t_basis(tb)}, {"coefficient_by_order", by_order}});
    } else {
      ctx.out << render_t_basis(tb) << "\n";
      for (std::int64_t d : divisors(n))
        ctx.out << "  order " << d << ": " << to_string(v.coefficient(TorsionPoint(1, 0, d))) << "\n";
    }
    return 0;
  };
  auto* iep1 = invariant->add_subcommand("ep1", "Correlated invariants of E x P1");
  add_floor_opts(iep1);
  iep1->callback([&] {
    action = [&](const Context& ctx) {
      const RamificationProfile x{d_a, parse_int_list(d_w)};
      x.validate();
      ctx.check_genus(d_g);
      ctx.check_degree(d_a, "a");
      for (auto v : x.w) ctx.check_degree(v, "end weight");
      return emit_invariant(ctx, x.norm(), ep1_invariant(d_g, x, mode_of(), ctx.options()));
    };
  });
  auto* iab = invariant->add_subcommand("abelian", "Abelian surface invariants by monodromy");
  add_pearl_opts(iab);
  iab->callback([&] {
    action = [&](const Context& ctx) {
      const DiagramDegree b = parse_degree(d_b);
      ctx.check_genus(d_g);
      ctx.check_degree(b.norm, "|B|");
      ctx.check_degree(b.a, "a");
      return emit_invariant(ctx, b.norm, abelian_invariant(d_g, b, mode_of(), ctx.options()));
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Check functional equations and oracles");
  verify->require_subcommand(1);
  verify->fallthrough();

  std::string v_family = "sigma";
  unsigned v_m = 1;
  std::int64_t v_a = 1, v_delta_max = 3, v_n_max = 12;
  std::optional<std::int64_t> v_omega, v_alpha;
  auto* vmcf = verify->add_subcommand("mcf", "Check the 0-MCF of a built-in family");
  vmcf->fallthrough();
  vmcf->add_option("--family", v_family, "sigma, F or G")->check(CLI::IsMember({"sigma", "F", "G"}));
  vmcf->add_option("--m", v_m, "Power for sigma");
  vmcf->add_option("--a", v_a, "Argument for sigma")->check(CLI::PositiveNumber);
  vmcf->add_option("--delta-max", v_delta_max, "Orbit length for sigma")->check(CLI::PositiveNumber);
  vmcf->add_option("--n-max", v_n_max, "Largest n for F and G")->check(CLI::PositiveNumber);
  vmcf->add_option("--omega", v_omega, "Marking order for G (default: every divisor of n)");
  vmcf->callback([&] {
    action = [&](const Context& ctx) {
      if (v_family == "sigma") {
        ctx.check_delta(v_delta_max);
        GSequence<std::int64_t> f(natural_module(),
                                  [m = v_m, a = v_a](const std::int64_t& d) { return refined_sigma(m, d, d * a); });
        std::vector<std::int64_t> xs;
        for (std::int64_t d = 1; d <= v_delta_max; ++d) xs.push_back(d);
        return report_mcf(ctx, check_alpha_mcf(f, 0, xs, ctx.cfg.workers));
      }
      using P = std::pair<std::int64_t, std::int64_t>;
      std::vector<P> xs;
      for (std::int64_t n = 1; n <= v_n_max; ++n)
        for (std::int64_t d : divisors(n * n)) xs.push_back({d, n});
      MCFReport total;
      std::vector<std::int64_t> omegas;
      if (v_family == "F") omegas = {0};
      else if (v_omega) omegas = {*v_omega};
      else
        for (std::int64_t w = 1; w <= v_n_max; ++w) omegas.push_back(w);
      for (std::int64_t omega : omegas) {
        GSequence<P> f(index_pair_module(), [omega](const P& x) {
          return omega == 0 ? twisted_pair_count_agg(x.first, x.second)
                            : marked_pair_count_agg(omega, x.first, x.second);
        });
        MCFReport r = check_alpha_mcf(f, 0, xs, ctx.cfg.workers);
        for (auto& c : r.checked) {
          if (omega != 0) c.element = "omega=" + std::to_string(omega) + " " + c.element;
          total.checked.push_back(std::move(c));
        }
      }
      return report_mcf(ctx, total);
    };
  });

  std::string t_which;
  auto* vthm = verify->add_subcommand("theorem", "Check a multiple cover theorem on a scaling orbit");
  vthm->fallthrough();
  vthm->add_option("--which", t_which, "ep1_points, abelian_points, ep1_lambda or abelian_lambda")
      ->required()
      ->check(CLI::IsMember({"ep1_points", "abelian_points", "ep1_lambda", "abelian_lambda"}));
  vthm->add_option("--g", d_g, "Genus")->required()->check(CLI::NonNegativeNumber);
  vthm->add_option("--g0", d_g0, "Number of point insertions minus n plus one, lambda modes");
  vthm->add_option("--a", d_a, "Degree over E for E x P1")->check(CLI::PositiveNumber);
  vthm->add_option("--w", d_w, "End weights for E x P1");
  vthm->add_option("--B", d_b, "Diagram degree |B|,a for abelian surfaces");
  vthm->add_option("--delta-max", v_delta_max, "Orbit length")->check(CLI::PositiveNumber);
  vthm->add_option("--alpha", v_alpha, "Override the exponent");
  vthm->callback([&] {
    action = [&](const Context& ctx) {
      ctx.check_delta(v_delta_max);
      ctx.check_genus(d_g);
      const TheoremKind kind = parse_theorem_kind(t_which);
      TheoremParams p;
      p.g = d_g;
      p.g0 = d_g0.value_or(d_g);
      p.delta_max = v_delta_max;
      p.alpha_override = v_alpha;
      p.profile = {d_a, parse_int_list(d_w)};
      p.degree = parse_degree(d_b);
      if ((kind == TheoremKind::ep1_lambda || kind == TheoremKind::abelian_lambda) && !d_g0)
        throw std::invalid_argument("lambda modes need --g0");
      const TheoremReport r = verify_theorem(kind, p, ctx.options());
      Json j = {{"theorem", to_string(kind)},
                {"passed", r.passed()},
                {"mcf", to_json(r.mcf)},
                {"coefficients_pass", r.coefficients_pass},
                {"coefficient_failures", r.coefficient_failures}};
      if (ctx.json() || !r.passed()) ctx.emit(j);
      else ctx.out << to_string(kind) << " alpha " << r.mcf.alpha << ": pass on " << r.mcf.checked.size() << " elements\n";
      return r.passed() ? 0 : 1;
    };
  });

  std::int64_t o_n_max = 8, o_marked_max = 8;
  auto* voracles = verify->add_subcommand("oracles", "Closed forms against brute force");
  voracles->fallthrough();
  voracles->add_option("--n-max", o_n_max, "Largest modulus")->check(CLI::PositiveNumber);
  voracles->add_option("--marked-n-max", o_marked_max, "Largest modulus for marked averages")->check(CLI::PositiveNumber);
  voracles->callback([&] {
    action = [&](const Context& ctx) {
      const auto suites = run_subgroup_oracles(o_n_max, o_marked_max);
      bool ok = true;
      Json j = Json::array();
      for (const auto& s : suites) {
        ok = ok && s.ok();
        j.push_back({{"suite", s.name}, {"passed", s.passed}, {"total", s.total}, {"failures", s.failures}});
      }
      if (ctx.json() || !ok) ctx.emit(j);
      else
        for (const auto& s : suites) ctx.out << s.name << ": " << s.passed << "/" << s.total << "\n";
      return ok ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  cfg.enumeration_mode = mode_name == "labeled" ? EnumerationMode::labeled : EnumerationMode::unlabeled_aut;
  cfg.output = output_name == "json" ? OutputFormat::json : OutputFormat::table;
  const Context ctx{cfg, out, err};
  try {
    return action(ctx);
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"mcf"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace mcf::cli
