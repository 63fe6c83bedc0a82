#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include <schlicht/caratheodory.hpp>
#include <schlicht/functionals.hpp>
#include <schlicht/geometry.hpp>
#include <schlicht/transforms.hpp>
#include <schlicht/zoo.hpp>

namespace schlicht::cli {

namespace {

using io::json;

/// Bad user input rather than a failed computation.
bool is_validation(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameter:
    case ErrorKind::InvalidMeasure:
    case ErrorKind::NotNormalized:
    case ErrorKind::NotCaratheodoryNormalized:
    case ErrorKind::OrderTooLow:
    case ErrorKind::ParseError:
      return true;
    default:
      return false;
  }
}

complex parse_complex(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  double re = 0.0, im = 0.0;
  if (!(in >> re)) throw Error(ErrorKind::InvalidParameter, "cannot parse complex number '" + text + "'");
  if (!(in >> im)) im = 0.0;
  std::string rest;
  if (in >> rest) throw Error(ErrorKind::InvalidParameter, "cannot parse complex number '" + text + "'");
  return {re, im};
}

/// Where a function comes from: a named closed form or a series document.
struct Source {
  std::string function;
  std::string input;
  int order = kDefaultOrder;
  complex c1{2.0};
  complex eps{1.0};
};

struct Loaded {
  TruncatedSeries series;
  std::optional<AnalyticMap> closed_form;

  AnalyticMap map() const { return closed_form ? *closed_form : AnalyticMap::from_series(series); }
};

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

TruncatedSeries read_series(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return io::series_from_json(io::parse(read_all(in)));
  std::ifstream file(path);
  if (!file) throw Error(ErrorKind::ParseError, "cannot open " + path);
  return io::series_from_json(io::parse(read_all(file)));
}

Loaded load(const Source& src, std::istream& in) {
  if (!src.function.empty()) {
    if (src.function == "half-plane") {
      const auto s = half_plane_map(src.order);
      return {s.series(), AnalyticMap::from_closed_form([](complex z) { return z / (1.0 - z); },
                                                        [](complex z) { return 1.0 / ((1.0 - z) * (1.0 - z)); },
                                                        [](complex z) { return 2.0 / std::pow(1.0 - z, 3); })};
    }
    if (src.function == "libera-kernel") return {libera_kernel(src.order).series(), std::nullopt};
    const auto tag = parse_tag(src.function);
    if (!tag) throw Error(ErrorKind::InvalidParameter, "unknown function '" + src.function + "'");
    const NamedFunction nf = *tag == FunctionTag::PommerenkeExtremal
                                 ? pommerenke_function(src.c1, src.eps, src.order)
                                 : named_function(*tag, src.order);
    return {nf.series, AnalyticMap::from_named(nf)};
  }
  return {read_series(src.input, in), std::nullopt};
}

void add_source(CLI::App* cmd, Source& src) {
  cmd->add_option("--input,-i", src.input, "Series JSON file (default: stdin)");
  cmd->add_option("--function,-f", src.function,
                  "Named function: koebe, moebius, identity, thmA, thmB, pommerenke, half-plane, libera-kernel");
  cmd->add_option("--order", src.order, "Truncation order for named functions")->check(CLI::NonNegativeNumber);
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

// ---------------------------------------------------------------------------

struct SuiteAccumulator {
  json worst = json::object();
  long violations = 0;

  void record(const std::string& name, double margin) {
    if (!worst.contains(name) || margin < worst[name].get<double>()) worst[name] = margin;
    if (margin < -kViolationTolerance) ++violations;
  }
};

double min_over(const NormalizedSeries& f, int from, const std::function<double(int)>& bound) {
  double m = std::numeric_limits<double>::infinity();
  for (int k = from; k <= f.order(); ++k) m = std::min(m, bound(k) - std::abs(f[k]));
  return m;
}

}  // namespace

json report_suite(const SuiteOptions& opt) {
  if (opt.samples < 1) throw Error(ErrorKind::InvalidParameter, "samples must be >= 1");
  if (opt.order < 3) throw Error(ErrorKind::InvalidParameter, "order must be >= 3");
  SuiteAccumulator acc;
  const NormalizedSeries g = half_plane_map(opt.order);
  for (int i = 0; i < opt.samples; ++i) {
    const TruncatedSeries h = sample(opt.seed + static_cast<std::uint64_t>(i), opt.atoms, opt.order);
    acc.record("caratheodory_coefficients", check_coefficient_bound(h).worst_margin);
    acc.record("pommerenke", check_pommerenke(h).margin);

    const auto ratio = from_ratio_positive(h);
    acc.record("ratio_positive_bound_2", min_over(ratio, 2, [](int) { return 2.0; }));
    const auto turning = from_bounded_turning(h);
    acc.record("bounded_turning_bound_2_over_k", min_over(turning, 2, [](int k) { return 2.0 / k; }));
    const auto star = from_starlike(h);
    acc.record("starlike_bound_k", *bieberbach_check(star).margin);
    const auto convex = alexander_inverse(star);
    acc.record("convex_bound_1", min_over(convex, 2, [](int) { return 1.0; }));
    const auto ctc = from_close_to_convex(h, g);
    acc.record("close_to_convex_bound_k", *bieberbach_check(ctc).margin);

    acc.record("odd_c5", odd_c5_bound() - std::abs(odd_c5(star)));
    for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      acc.record("fekete_szego", *fekete_szego(star, alpha).margin);
    }
  }
  return json{{"seed", opt.seed},   {"samples", opt.samples},       {"atoms", opt.atoms},
              {"order", opt.order}, {"violations", acc.violations}, {"worst_margins", acc.worst}};
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometric function theory on the unit disk", "schlicht"};
  app.require_subcommand(1);
  std::function<int()> action;

  // build -------------------------------------------------------------------
  std::string build_name;
  Source build_src;
  std::string c1_text = "2", eps_text = "1";
  auto* build = app.add_subcommand("build", "Emit the series of a named function");
  build->add_option("name", build_name, "koebe, moebius, identity, thmA, thmB, pommerenke, half-plane, libera-kernel")
      ->required();
  build->add_option("--order", build_src.order, "Truncation order")->check(CLI::NonNegativeNumber);
  build->add_option("--c1", c1_text, "Pommerenke extremal: c1 as re[,im]");
  build->add_option("--eps", eps_text, "Pommerenke extremal: epsilon as re[,im]");
  build->callback([&] {
    action = [&] {
      build_src.function = build_name;
      build_src.c1 = parse_complex(c1_text);
      build_src.eps = parse_complex(eps_text);
      emit(out, io::to_json(load(build_src, in).series));
      return kExitOk;
    };
  });

  // transform ---------------------------------------------------------------
  std::string tkind, with_path;
  Source tsrc;
  double theta = 0.0, radius = 0.5, gamma = 1.0, alpha = 1.0, sigma_real = 1.0, t = 0.5;
  int n_iter = 1;
  std::string sigma_text = "0", xi_text;
  auto* transform = app.add_subcommand("transform", "Apply a transformation to a series");
  transform
      ->add_option("kind", tkind,
                   "conjugate, rotate, dilate, autom, omit, sqrt, libera, bernardi, convolve, iterate, "
                   "iterate-sigma, linsum")
      ->required();
  transform->add_option("--input,-i", tsrc.input, "Series JSON file (default: stdin)");
  transform->add_option("--theta", theta, "Rotation angle (radians)");
  transform->add_option("--r", radius, "Dilation radius in (0, 1)");
  transform->add_option("--sigma", sigma_text, "Automorphism point re[,im]; iterate-sigma: real sigma");
  transform->add_option("--xi", xi_text, "Omitted value re[,im]");
  transform->add_option("--gamma", gamma, "Bernardi parameter > -1");
  transform->add_option("--alpha", alpha, "Iteration parameter > 0");
  transform->add_option("--n", n_iter, "Number of iterations")->check(CLI::NonNegativeNumber);
  transform->add_option("--t", t, "Linear-sum weight in [0, 1]");
  transform->add_option("--with", with_path, "Second series (convolve, linsum)");
  transform->callback([&] {
    action = [&]() -> int {
      const TruncatedSeries f = read_series(tsrc.input, in);
      auto partner = [&] {
        if (with_path.empty()) throw Error(ErrorKind::InvalidParameter, tkind + " needs --with");
        std::ifstream file(with_path);
        if (!file) throw Error(ErrorKind::ParseError, "cannot open " + with_path);
        return io::series_from_json(io::parse(read_all(file)));
      };
      std::optional<TruncatedSeries> result;
      if (tkind == "convolve") {
        result = convolve(f, partner());
      } else if (tkind == "iterate") {
        result = iterate_alpha(f, alpha, n_iter);
      } else if (tkind == "iterate-sigma") {
        const complex s = parse_complex(sigma_text);
        sigma_real = s.real();
        result = iterate_sigma(f, sigma_real, n_iter);
      } else {
        const NormalizedSeries nf(f);
        std::optional<TransformSpec> spec;
        if (tkind == "conjugate") spec = TransformSpec::conjugation();
        else if (tkind == "rotate") spec = TransformSpec::rotation(theta);
        else if (tkind == "dilate") spec = TransformSpec::dilation(radius);
        else if (tkind == "autom") spec = TransformSpec::disk_automorphism(parse_complex(sigma_text));
        else if (tkind == "omit") spec = TransformSpec::omitted_value(parse_complex(xi_text));
        else if (tkind == "sqrt") spec = TransformSpec::square_root();
        else if (tkind == "libera") spec = TransformSpec::libera();
        else if (tkind == "bernardi") spec = TransformSpec::bernardi(gamma);
        else if (tkind == "linsum") spec = TransformSpec::linear_sum(t, NormalizedSeries(partner()));
        else throw Error(ErrorKind::InvalidParameter, "unknown transform '" + tkind + "'");
        result = apply(*spec, nf).series();
      }
      emit(out, io::to_json(*result));
      return kExitOk;
    };
  });

  // check -------------------------------------------------------------------
  std::string cls;
  Source csrc, gsrc;
  double check_r = 0.5;
  int angles = 512;
  auto* check = app.add_subcommand("check", "Probe a class predicate or an inequality");
  check
      ->add_option("--class", cls,
                   "bounded-turning, starlike, convex, close-to-convex, ratio-positive, quasi-convex, "
                   "caratheodory, pommerenke, schwarz, injective, boundary")
      ->required();
  add_source(check, csrc);
  check->add_option("--r", check_r, "Probe radius in (0, 1)");
  check->add_option("--angles", angles, "Samples per circle")->check(CLI::PositiveNumber);
  check->add_option("--g", gsrc.input, "Comparison function g (series JSON)");
  check->add_option("--g-function", gsrc.function, "Comparison function g by name");
  check->callback([&] {
    action = [&]() -> int {
      const Loaded f = load(csrc, in);
      if (cls == "caratheodory") {
        emit(out, io::to_json(check_coefficient_bound(f.series)));
      } else if (cls == "pommerenke") {
        emit(out, io::to_json(check_pommerenke(f.series)));
      } else if (cls == "schwarz") {
        emit(out, io::to_json(schwarz_checks(SchwarzFunction(f.series), ProbeGrid::standard())));
      } else if (cls == "injective") {
        const bool ok = injectivity_probe(f.map(), check_r, angles);
        emit(out, json{{"class", cls}, {"r", check_r}, {"angles", angles}, {"holds", ok}});
      } else if (cls == "boundary") {
        out << boundary_csv(boundary_curve(f.map(), check_r, angles));
      } else {
        const auto kind = parse_class(cls);
        if (!kind) throw Error(ErrorKind::InvalidParameter, "unknown class '" + cls + "'");
        std::optional<AnalyticMap> g;
        if (!gsrc.function.empty() || !gsrc.input.empty()) {
          gsrc.order = csrc.order;
          g = load(gsrc, in).map();
        }
        const double m = min_real_part(class_quantity(*kind, f.map(), g ? &*g : nullptr), check_r, angles);
        emit(out, json{{"class", cls},
                       {"r", check_r},
                       {"angles", angles},
                       {"min_real_part", m},
                       {"holds", m > kPositivityTolerance}});
      }
      return kExitOk;
    };
  });

  // radius ------------------------------------------------------------------
  std::string predicate_pos, predicate_opt;
  Source rsrc, rgsrc;
  double tol = 1e-6;
  int rangles = 512;
  auto* radius_cmd = app.add_subcommand("radius", "Bisect for the radius where a property stops holding");
  radius_cmd->add_option("which", predicate_pos, "local-univalence or a class name");
  radius_cmd->add_option("--predicate", predicate_opt, "Same as the positional predicate");
  add_source(radius_cmd, rsrc);
  radius_cmd->add_option("--tol", tol, "Bracket width")->check(CLI::PositiveNumber);
  radius_cmd->add_option("--angles", rangles, "Samples per circle for class predicates")->check(CLI::PositiveNumber);
  radius_cmd->add_option("--g-function", rgsrc.function, "Comparison function g by name");
  radius_cmd->add_option("--g", rgsrc.input, "Comparison function g (series JSON)");
  radius_cmd->callback([&] {
    action = [&]() -> int {
      const std::string pred = !predicate_opt.empty() ? predicate_opt : predicate_pos;
      if (pred.empty()) throw Error(ErrorKind::InvalidParameter, "radius needs a predicate");
      if (!predicate_opt.empty() && !predicate_pos.empty() && predicate_opt != predicate_pos) {
        throw Error(ErrorKind::InvalidParameter, "conflicting predicates");
      }
      if (rsrc.function.empty() && rsrc.input.empty()) rsrc.function = "koebe";
      const Loaded f = load(rsrc, in);
      const AnalyticMap fm = f.map();
      if (pred == "local-univalence") {
        emit(out, io::to_json(local_univalence_radius(fm, tol)));
        return kExitOk;
      }
      const auto kind = parse_class(pred);
      if (!kind) throw Error(ErrorKind::InvalidParameter, "unknown predicate '" + pred + "'");
      std::optional<AnalyticMap> g;
      if (!rgsrc.function.empty() || !rgsrc.input.empty()) {
        rgsrc.order = rsrc.order;
        g = load(rgsrc, in).map();
      }
      const ComplexMap q = class_quantity(*kind, fm, g ? &*g : nullptr);
      auto holds = [&](double r) {
        try {
          return min_real_part(q, r, rangles) > kPositivityTolerance;
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::EvaluationSingularity) return false;
          throw;
        }
      };
      emit(out, io::to_json(radius_solve(holds, tol, pred)));
      return kExitOk;
    };
  });

  // functional --------------------------------------------------------------
  std::string fname, fxi = "-0.25";
  Source fsrc;
  double falpha = 0.0;
  int fq = 2, fn = 1;
  auto* functional = app.add_subcommand("functional", "Evaluate a coefficient functional");
  functional->add_option("name", fname, "fekete, hankel, bieberbach, covering, odd-c5")->required();
  add_source(functional, fsrc);
  functional->add_option("--alpha", falpha, "Fekete-Szego parameter in [0, 1]");
  functional->add_option("--q", fq, "Hankel size");
  functional->add_option("--n", fn, "Hankel starting index");
  functional->add_option("--xi", fxi, "Covering point re[,im]");
  functional->callback([&] {
    action = [&]() -> int {
      const NormalizedSeries f(load(fsrc, in).series);
      if (fname == "fekete") {
        emit(out, io::to_json(fekete_szego(f, falpha)));
      } else if (fname == "hankel") {
        const complex h = hankel(f, fq, fn);
        emit(out, json{{"value", std::abs(h)}, {"re", h.real()}, {"im", h.imag()}, {"q", fq}, {"n", fn},
                       {"name", "hankel"}});
      } else if (fname == "bieberbach") {
        emit(out, io::to_json(bieberbach_check(f)));
      } else if (fname == "covering") {
        emit(out, io::to_json(covering_check(f, parse_complex(fxi))));
      } else if (fname == "odd-c5") {
        const complex c5 = odd_c5(f);
        FunctionalReport rep{"odd_c5", std::abs(c5), odd_c5_bound(), odd_c5_bound() - std::abs(c5), {}};
        emit(out, io::to_json(rep));
      } else {
        throw Error(ErrorKind::InvalidParameter, "unknown functional '" + fname + "'");
      }
      return kExitOk;
    };
  });

  // sample ------------------------------------------------------------------
  std::uint64_t seed = 0;
  int atoms = 8, sorder = kDefaultOrder;
  bool as_measure = false;
  auto* sample_cmd = app.add_subcommand("sample", "Draw a Caratheodory function from a random Herglotz measure");
  sample_cmd->add_option("--seed", seed, "RNG seed");
  sample_cmd->add_option("--atoms", atoms, "Number of atoms")->check(CLI::PositiveNumber);
  sample_cmd->add_option("--order", sorder, "Truncation order")->check(CLI::NonNegativeNumber);
  sample_cmd->add_flag("--measure", as_measure, "Emit the measure instead of the series");
  sample_cmd->callback([&] {
    action = [&] {
      const auto m = sample_measure(seed, atoms);
      emit(out, as_measure ? io::to_json(m) : io::to_json(herglotz_to_series(m, sorder)));
      return kExitOk;
    };
  });

  // report ------------------------------------------------------------------
  SuiteOptions suite;
  auto* report = app.add_subcommand("report", "Run every bound check over sampled functions");
  report->add_option("--seed", suite.seed, "Base RNG seed");
  report->add_option("--samples", suite.samples, "Number of sampled measures")->check(CLI::PositiveNumber);
  report->add_option("--atoms", suite.atoms, "Atoms per measure")->check(CLI::PositiveNumber);
  report->add_option("--order", suite.order, "Truncation order")->check(CLI::PositiveNumber);
  report->callback([&] {
    action = [&] {
      const json summary = report_suite(suite);
      emit(out, summary);
      if (summary["violations"].get<long>() > 0) {
        err << "error: " << summary["violations"].get<long>() << " bound violations\n";
        return kExitComputation;
      }
      return kExitOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    return action ? action() : kExitValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_validation(e.kind()) ? kExitValidation : kExitComputation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }
}

}  // namespace schlicht::cli
