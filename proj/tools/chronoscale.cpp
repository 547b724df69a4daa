// chronoscale command-line front end.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chronoscale/calculus.hpp"
#include "chronoscale/error.hpp"
#include "chronoscale/exponential.hpp"
#include "chronoscale/fractional.hpp"
#include "chronoscale/io.hpp"
#include "chronoscale/systems.hpp"
#include "chronoscale/transform.hpp"

namespace cs = chronoscale;

namespace {

struct Options {
  std::string scale;
  std::vector<std::string> signals;
  std::string system;
  std::string out;
  std::string dir = "nabla";
  int order = 1;
  double alpha = 0.5;
  std::string s_grid;
  std::size_t nodes = cs::kDefaultNodes;
  std::string roc;
  double h = 0.0;
  bool general = false;
  bool allow_off_scale = false;
  bool contour = false;
};

constexpr const char* kGridHelp =
    "complex samples: comma-separated tokens like 1,0.5+2j,-3j or a range "
    "re0:re1:count,im (prefix log: for geometric spacing)";

cs::Direction direction(const Options& o) {
  return o.dir == "delta" ? cs::Direction::delta : cs::Direction::nabla;
}

cs::ScalePtr scale(const Options& o) { return cs::share(cs::io::load_scale(o.scale)); }

cs::Signal signal(const Options& o, std::size_t i, const cs::ScalePtr& ts) {
  if (o.signals.size() <= i) {
    throw cs::Error(cs::ErrorCode::ParseError,
                    "expected " + std::to_string(i + 1) + " --signal argument(s)");
  }
  return cs::io::load_signal(o.signals[i], ts);
}

/// Writes to --out when given, otherwise to stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw cs::Error(cs::ErrorCode::ParseError, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void emit(const Options& o, const cs::Signal& f) {
  Output out(o.out);
  cs::io::write_signal(out.stream(), f);
}

void tag_untagged(cs::RationalTransform& h, const std::string& roc) {
  if (roc.empty()) return;
  const cs::Roc tag = roc == "anticausal" ? cs::Roc::anticausal : cs::Roc::causal;
  for (cs::Pole& p : h.poles) {
    if (p.roc == cs::Roc::untagged) p.roc = tag;
  }
}

int run_deriv(const Options& o) {
  if (o.order < 1) {
    throw cs::Error(cs::ErrorCode::OrderZeroOrNegative, "order must be at least 1");
  }
  const auto ts = scale(o);
  emit(o, cs::derivative(signal(o, 0, ts), direction(o), o.order));
  return 0;
}

int run_antideriv(const Options& o) {
  const auto ts = scale(o);
  emit(o, cs::antiderivative(signal(o, 0, ts), direction(o)));
  return 0;
}

int run_transform(const Options& o) {
  const auto ts = scale(o);
  const cs::Signal f = signal(o, 0, ts);
  const std::vector<cs::complex> grid = cs::io::parse_s_grid(o.s_grid);
  const std::vector<cs::complex> F = cs::direct_transform(f, grid, direction(o));
  Output out(o.out);
  out.stream() << "s_re,s_im,F_re,F_im\n";
  for (std::size_t k = 0; k < grid.size(); ++k) {
    out.stream() << cs::io::format_double(grid[k].real()) << ','
                 << cs::io::format_double(grid[k].imag()) << ','
                 << cs::io::format_double(F[k].real()) << ',' << cs::io::format_double(F[k].imag())
                 << '\n';
  }
  return 0;
}

int run_invert(const Options& o) {
  const auto ts = scale(o);
  cs::RationalTransform h = cs::io::load_rational(o.system);
  tag_untagged(h, o.roc);
  if (!o.contour) {
    emit(o, cs::invert_rational(h, ts));
    return 0;
  }
  const cs::PoleSides sides = cs::pole_sides(h);
  const cs::Contour c = cs::default_contour(*ts, cs::Direction::nabla, sides, o.nodes);
  std::vector<cs::complex> v = cs::contour_inverse_all(
      [&h](cs::complex s) { return h(s); }, *ts, c, cs::Direction::nabla, sides);
  emit(o, cs::Signal::from_values(ts, std::move(v)));
  return 0;
}

int run_simulate(const Options& o) {
  const auto ts = scale(o);
  const cs::io::SystemSpec sys = cs::io::load_system(o.system);
  const cs::Simulation sim = cs::simulate(sys.a, sys.b, signal(o, 0, ts));
  emit(o, sim.y);
  std::ostream& summary = o.out.empty() ? std::cerr : std::cout;
  summary << "# steps=" << sim.summary.steps
          << ", min_guard_margin=" << cs::io::format_double(sim.summary.min_guard_margin) << '\n';
  return 0;
}

int run_convolve(const Options& o, bool correlate) {
  const auto ts = scale(o);
  const cs::Signal f = signal(o, 0, ts);
  const cs::Signal g = signal(o, 1, ts);
  const cs::ConvolveOptions opts{o.general};
  emit(o, correlate ? cs::correlate(f, g, opts) : cs::convolve(f, g, opts));
  return 0;
}

int run_fracderiv(const Options& o) {
  const auto ts = scale(o);
  emit(o, cs::fractional_derivative(signal(o, 0, ts), o.alpha));
  return 0;
}

int run_resample(const Options& o) {
  const auto ts = scale(o);
  cs::ResampleOptions opts;
  opts.allow_off_scale = o.allow_off_scale;
  opts.interp.nodes = o.nodes;
  emit(o, cs::resample_uniform(signal(o, 0, ts), o.h, opts));
  return 0;
}

int run_exp(const Options& o) {
  const auto ts = scale(o);
  const std::vector<cs::complex> grid = cs::io::parse_s_grid(o.s_grid);
  std::ostringstream body;
  body << "s_re,s_im,t,re,im\n";
  for (cs::complex s : grid) {
    for (std::size_t n = 0; n < ts->size(); ++n) {
      const cs::complex e = cs::exp(*ts, n, ts->t0_index(), s, direction(o));
      body << cs::io::format_double(s.real()) << ',' << cs::io::format_double(s.imag()) << ','
           << cs::io::format_double((*ts)[n]) << ',' << cs::io::format_double(e.real()) << ','
           << cs::io::format_double(e.imag()) << '\n';
    }
  }
  Output out(o.out);
  out.stream() << body.str();
  return 0;
}

int run_kernel(const Options& o) {
  const auto ts = scale(o);
  const cs::FractionalKernel k = cs::fractional_kernel(ts, o.alpha);
  Output out(o.out);
  cs::io::write_kernel(out.stream(), k);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signals and systems on nonuniform time scales"};
  app.require_subcommand(1);
  Options o;

  auto add_scale = [&](CLI::App* c) {
    c->add_option("--scale", o.scale, "time scale JSON")->required()->check(CLI::ExistingFile);
  };
  auto add_signal = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--signal", o.signals, "signal CSV (t,re,im)")->check(CLI::ExistingFile);
    if (required) opt->required();
  };
  auto add_out = [&](CLI::App* c) { c->add_option("--out", o.out, "output path (default stdout)"); };
  auto add_dir = [&](CLI::App* c) {
    c->add_option("--dir", o.dir, "nabla or delta")->check(CLI::IsMember({"nabla", "delta"}));
  };

  auto* deriv = app.add_subcommand("deriv", "nabla or delta derivative");
  add_scale(deriv);
  add_signal(deriv, true);
  add_out(deriv);
  add_dir(deriv);
  deriv->add_option("--order", o.order, "derivative order (>= 1)");

  auto* antideriv = app.add_subcommand("antideriv", "causal or anti-causal antiderivative");
  add_scale(antideriv);
  add_signal(antideriv, true);
  add_out(antideriv);
  add_dir(antideriv);

  auto* transform = app.add_subcommand("transform", "direct transform on an s-grid");
  add_scale(transform);
  add_signal(transform, true);
  add_out(transform);
  add_dir(transform);
  transform->add_option("--s-grid", o.s_grid, kGridHelp)->required();

  auto* invert = app.add_subcommand("invert", "inverse transform of a rational function");
  add_scale(invert);
  add_out(invert);
  invert->add_option("--system", o.system, "rational transform JSON")->required()->check(CLI::ExistingFile);
  invert->add_option("--roc", o.roc, "tag for poles without one")
      ->check(CLI::IsMember({"causal", "anticausal"}));
  invert->add_flag("--contour", o.contour, "numerical contour quadrature instead of the catalog");
  invert->add_option("--nodes", o.nodes, "contour nodes (power of two >= 256)");

  auto* simulate = app.add_subcommand("simulate", "march a nabla dynamic equation");
  add_scale(simulate);
  add_signal(simulate, true);
  add_out(simulate);
  simulate->add_option("--system", o.system, "equation JSON {a, b}")->required()->check(CLI::ExistingFile);

  auto* convolve = app.add_subcommand("convolve", "convolution of two signals");
  auto* correlate = app.add_subcommand("correlate", "correlation of two signals");
  for (auto* c : {convolve, correlate}) {
    add_scale(c);
    add_signal(c, true);
    add_out(c);
    c->add_flag("--general", o.general, "allow the interpolating path on nonuniform scales");
  }

  auto* fracderiv = app.add_subcommand("fracderiv", "fractional derivative");
  add_scale(fracderiv);
  add_signal(fracderiv, true);
  add_out(fracderiv);
  fracderiv->add_option("--alpha", o.alpha, "order");

  auto* resample = app.add_subcommand("resample", "resample onto a uniform grid");
  resample->set_help_flag("--help", "print this help message and exit");
  add_scale(resample);
  add_signal(resample, true);
  add_out(resample);
  resample->add_option("--h", o.h, "uniform step")->required();
  resample->add_option("--nodes", o.nodes, "contour nodes (power of two >= 256)");
  resample->add_flag("--allow-off-scale", o.allow_off_scale,
                     "blend linearly for targets outside the super time scale");

  auto* expo = app.add_subcommand("exp", "generalized exponential on an s-grid");
  add_scale(expo);
  add_out(expo);
  add_dir(expo);
  expo->add_option("--s-grid", o.s_grid, kGridHelp)->required();

  auto* kernel = app.add_subcommand("kernel", "export fractional kernel weights");
  add_scale(kernel);
  add_out(kernel);
  kernel->add_option("--alpha", o.alpha, "order");

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

  try {
    if (*deriv) return run_deriv(o);
    if (*antideriv) return run_antideriv(o);
    if (*transform) return run_transform(o);
    if (*invert) return run_invert(o);
    if (*simulate) return run_simulate(o);
    if (*convolve) return run_convolve(o, false);
    if (*correlate) return run_convolve(o, true);
    if (*fracderiv) return run_fracderiv(o);
    if (*resample) return run_resample(o);
    if (*expo) return run_exp(o);
    if (*kernel) return run_kernel(o);
  } catch (const cs::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cs::io::exit_code(e.code());
  }
  return 2;
}
