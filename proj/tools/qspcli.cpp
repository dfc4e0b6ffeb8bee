// qspcli — batch front end for the qsp library: autocorrelation estimation,
// correlation matrices and their real-domain duals, the eta-Hermitian
// factorisation, adaptive filter runs, gradient checks, and 3-D rotation of
// pure signals. CSV in, JSON reports out.
//
// Exit codes: 0 success (gradcheck: check passed), 1 failed numeric check,
// 2 input parse error, 3 invalid flags or out-of-range arguments,
// 4 degenerate-spectrum factorisation error, 5 divergence guard trip.

#include <CLI11.hpp>
#include <cstdio>
#include <string>

#include "qsp/autocorr.hpp"
#include "qsp/errors.hpp"
#include "qsp/filters.hpp"
#include "qsp/hr_calculus.hpp"
#include "qsp/qlinalg.hpp"
#include "qsp/signal_io.hpp"

using namespace qsp;

namespace {

Json real_matrix_json(const Eigen::MatrixXd& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(row);
  }
  return out;
}

void write_report(const std::string& path, const Json& report) {
  if (!path.empty()) write_text_file(path, report.dump(2) + "\n");
}

void print_sequence_table(const char* name, const QVector& seq) {
  const int max_lag = (static_cast<int>(seq.size()) - 1) / 2;
  std::printf("%s\n  lag        r        i        j        k      |r|\n", name);
  for (int lag = -max_lag; lag <= max_lag; ++lag) {
    const Quaternion& q = seq[lag + max_lag];
    std::printf("  %3d %8.2f %8.2f %8.2f %8.2f %8.2f\n", lag, q.r, q.i, q.j, q.k,
                norm(q));
  }
}

Json sequence_json(const QVector& seq) {
  const int max_lag = (static_cast<int>(seq.size()) - 1) / 2;
  Json rows = Json::array();
  for (int lag = -max_lag; lag <= max_lag; ++lag) {
    const Quaternion& q = seq[lag + max_lag];
    rows.push_back({{"lag", lag}, {"value", to_json(q)}, {"abs", norm(q)}});
  }
  return rows;
}

QVector clip_lags(const QVector& seq, int L) {
  const int max_lag = (static_cast<int>(seq.size()) - 1) / 2;
  if (L > max_lag) throw shape_error("--lags exceeds the data extent");
  return QVector(seq.begin() + (max_lag - L), seq.begin() + (max_lag + L + 1));
}

Axis parse_eta(const std::string& s) {
  if (s == "i") return Axis::i;
  if (s == "j") return Axis::j;
  if (s == "k") return Axis::k;
  throw std::domain_error("--eta must be one of i|j|k");
}

struct AutocorrArgs {
  std::string input, kind = "c", out;
  bool pure = false, unbiased = false;
  int lags = -1;
};

int cmd_autocorr(const AutocorrArgs& args) {
  static const std::vector<std::string> kinds{"c", "i", "j", "k", "p", "all"};
  if (std::find(kinds.begin(), kinds.end(), args.kind) == kinds.end())
    throw std::domain_error("--kind must be one of c|i|j|k|p|all");
  const SignalFile sig = load_signal_csv(args.input);
  const Estimator est = args.unbiased ? Estimator::unbiased : Estimator::biased;
  const int max_lag = static_cast<int>(sig.samples.size()) - 1;
  const int L = args.lags < 0 ? max_lag : args.lags;

  Json results;
  Json residuals = Json::object();
  Json sequences;
  const auto emit = [&](const char* name, CorrKind kind) {
    const QVector seq = clip_lags(autocorr(sig.samples, kind, est, args.pure), L);
    print_sequence_table(name, seq);
    sequences[name] = sequence_json(seq);
  };
  if (args.kind == "all") {
    emit("r_c", CorrKind::c);
    emit("r_i", CorrKind::i);
    emit("r_j", CorrKind::j);
    emit("r_k", CorrKind::k);
    emit("r_p", CorrKind::p);
    const double dep = check_dependency(AutocorrSet::estimate(sig.samples, est, args.pure));
    residuals["dependency"] = dep;
    std::printf("dependency residual: %.3e\n", dep);
  } else {
    const CorrKind kind = args.kind == "c"   ? CorrKind::c
                          : args.kind == "i" ? CorrKind::i
                          : args.kind == "j" ? CorrKind::j
                          : args.kind == "k" ? CorrKind::k
                                             : CorrKind::p;
    emit(("r_" + args.kind).c_str(), kind);
  }
  results["sequences"] = std::move(sequences);

  write_report(args.out,
               make_report("autocorr",
                           Json{{"input", args.input},
                                {"kind", args.kind},
                                {"pure", args.pure},
                                {"unbiased", args.unbiased},
                                {"lags", L}},
                           std::move(results), std::move(residuals),
                           file_digest({args.input})));
  return 0;
}

struct MatrixArgs {
  std::string input, out, eta = "i";
  int L = -1;
};

CorrMatrices load_matrices(const MatrixArgs& args, int& L_out, std::string* digest) {
  const SignalFile sig = load_signal_csv(args.input);
  const int max_lag = static_cast<int>(sig.samples.size()) - 1;
  const int L = args.L < 0 ? max_lag : args.L;
  if (L > max_lag) throw shape_error("--L exceeds the data extent");
  L_out = L;
  if (digest) *digest = file_digest({args.input});
  return toeplitz(AutocorrSet::estimate(sig.samples), L);
}

int cmd_matrices(const MatrixArgs& args) {
  int L = 0;
  std::string digest;
  const CorrMatrices mats = load_matrices(args, L, &digest);
  std::printf("estimated %dx%d autocorrelation matrices R_c, R_i, R_j, R_k, R_p\n",
              L + 1, L + 1);
  Json results{{"R_c", to_json(mats.c)},
               {"R_i", to_json(mats.i)},
               {"R_j", to_json(mats.j)},
               {"R_k", to_json(mats.k)},
               {"R_p", to_json(mats.p)}};
  write_report(args.out, make_report("matrices",
                                     Json{{"input", args.input}, {"L", L}},
                                     std::move(results), Json::object(), digest));
  return 0;
}

int cmd_duality(const MatrixArgs& args) {
  int L = 0;
  std::string digest;
  const CorrMatrices mats = load_matrices(args, L, &digest);
  const RealCorrSet rc = duality_extract(mats);

  // deviation of every extracted matrix from the direct real-domain estimate
  const SignalFile sig = load_signal_csv(args.input);
  const Quadrivariate qv = to_quadrivariate(sig.samples);
  double worst = 0.0;
  const auto dev = [&](const Eigen::MatrixXd& got, Component x, Component y) {
    const double d = (got - real_crosscorr(qv, x, y, L)).cwiseAbs().maxCoeff();
    worst = std::max(worst, d);
  };
  dev(rc.rr, Component::r, Component::r);
  dev(rc.ii, Component::i, Component::i);
  dev(rc.jj, Component::j, Component::j);
  dev(rc.kk, Component::k, Component::k);
  dev(rc.ir, Component::i, Component::r);
  dev(rc.jr, Component::j, Component::r);
  dev(rc.kr, Component::k, Component::r);
  dev(rc.ji, Component::j, Component::i);
  dev(rc.ki, Component::k, Component::i);
  dev(rc.kj, Component::k, Component::j);
  std::printf("ten real correlation matrices extracted; max deviation vs direct "
              "estimates: %.3e\n", worst);

  Json results{{"R_rr", real_matrix_json(rc.rr)}, {"R_ii", real_matrix_json(rc.ii)},
               {"R_jj", real_matrix_json(rc.jj)}, {"R_kk", real_matrix_json(rc.kk)},
               {"R_ir", real_matrix_json(rc.ir)}, {"R_jr", real_matrix_json(rc.jr)},
               {"R_kr", real_matrix_json(rc.kr)}, {"R_ji", real_matrix_json(rc.ji)},
               {"R_ki", real_matrix_json(rc.ki)}, {"R_kj", real_matrix_json(rc.kj)}};
  write_report(args.out,
               make_report("duality", Json{{"input", args.input}, {"L", L}},
                           std::move(results),
                           Json{{"max_deviation_vs_direct", worst}}, digest));
  return 0;
}

int cmd_takagi(const MatrixArgs& args) {
  const Axis eta = parse_eta(args.eta);
  int L = 0;
  std::string digest;
  const CorrMatrices mats = load_matrices(args, L, &digest);
  const QMatrix& r = eta == Axis::i ? mats.i : eta == Axis::j ? mats.j : mats.k;

  const EtaFactorisation f = eta_takagi(r, eta);
  const double rec =
      (eta_reconstruct(f) - r).frobenius_norm() / std::max(r.frobenius_norm(), 1e-300);
  const double unit = (f.diameter * f.diameter.hermitian() -
                       QMatrix::identity(f.diameter.rows()))
                          .frobenius_norm();
  std::printf("factorised R_%s: reconstruction residual %.3e, unitarity defect %.3e\n",
              args.eta.c_str(), rec, unit);
  std::printf("singular values:");
  for (double l : f.lambda) std::printf(" %.2f", l);
  std::printf("\n");

  Json lambda = Json::array();
  for (double l : f.lambda) lambda.push_back(l);
  write_report(args.out,
               make_report("takagi",
                           Json{{"input", args.input}, {"L", L}, {"eta", args.eta}},
                           Json{{"diameter", to_json(f.diameter)}, {"lambda", lambda}},
                           Json{{"reconstruction", rec}, {"unitarity", unit}}, digest));
  return 0;
}

struct FilterArgs {
  std::string input, target, trace, activation;
  std::size_t taps = 4;
  double gain = 0.01;
};

int cmd_filter(const FilterArgs& args, const char* command, Activation default_act) {
  Activation act = default_act;
  if (!args.activation.empty()) {
    if (args.activation == "linear") act = Activation::linear;
    else if (args.activation == "tanh") act = Activation::tanh;
    else throw std::domain_error("--activation must be linear or tanh");
  }
  if (args.taps < 1) throw std::domain_error("--taps must be >= 1");
  const SignalFile in = load_signal_csv(args.input);
  const SignalFile want = load_signal_csv(args.target);
  if (in.samples.size() != want.samples.size())
    throw csv_error("input and target row counts differ");

  const FilterState out = run_filter(make_filter_state(args.taps, args.gain, act),
                                     in.samples, want.samples, args.taps);
  const double mse = final_window_mse(out);
  std::printf("%zu steps, final-window mean |eps|^2 = %.6e\n", out.step, mse);
  if (out.pole_warnings > 0)
    std::fprintf(stderr, "warning: activation evaluated near a pole %d time(s)\n",
                 out.pole_warnings);

  Json power = Json::array();
  for (double p : error_power(out)) power.push_back(p);
  Json results{{"final_weights", to_json(out.weights.stacked())},
               {"error_power", std::move(power)},
               {"final_window_mse", mse}};
  write_report(args.trace,
               make_report(command,
                           Json{{"input", args.input},
                                {"target", args.target},
                                {"taps", args.taps},
                                {"gain", args.gain},
                                {"activation", act == Activation::tanh ? "tanh" : "linear"}},
                           std::move(results), Json{{"final_window_mse", mse}},
                           file_digest({args.input, args.target})));
  return 0;
}

struct GradcheckArgs {
  std::string function, out;
  int trials = 1000;
  unsigned long long seed = 1;
};

int cmd_gradcheck(const GradcheckArgs& args) {
  CatalogFn fn;
  if (!catalog_from_name(args.function, fn))
    throw std::domain_error("unknown --function '" + args.function + "'");
  const double err = catalog_fd_max_error(fn, args.trials, args.seed);
  std::printf("%s: max relative error vs finite differences over %d points: %.3e\n",
              args.function.c_str(), args.trials, err);
  write_report(args.out,
               make_report("gradcheck",
                           Json{{"function", args.function},
                                {"trials", args.trials},
                                {"seed", args.seed}},
                           Json{{"max_rel_error", err}},
                           Json{{"max_rel_error", err}}, fnv1a_digest(args.function)));
  return err < 1e-6 ? 0 : 1;
}

struct RotateArgs {
  std::string input, axis, out, report;
  double angle = 0.0;
};

int cmd_rotate(const RotateArgs& args) {
  const auto parts = [&] {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= args.axis.size()) {
      const std::size_t pos = args.axis.find(',', start);
      const std::string tok = args.axis.substr(
          start, pos == std::string::npos ? std::string::npos : pos - start);
      try {
        out.push_back(std::stod(tok));
      } catch (...) {
        throw std::domain_error("--axis must be x,y,z");
      }
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
    return out;
  }();
  if (parts.size() != 3) throw std::domain_error("--axis must be x,y,z");
  Quaternion axis{0, parts[0], parts[1], parts[2]};
  const double len = imag_norm(axis);
  if (len == 0.0) throw std::domain_error("--axis must be nonzero");
  axis /= len;

  const SignalFile in = load_signal_csv(args.input);
  SignalFile rotated;
  rotated.index = in.index;
  double max_dev = 0.0;
  for (const Quaternion& q : in.samples) {
    const Quaternion r = rotate(q, axis, args.angle);  // rejects non-pure rows
    rotated.samples.push_back(r);
    max_dev = std::max(max_dev, std::abs(norm(r) - norm(q)));
  }
  if (!args.out.empty()) save_signal_csv(args.out, rotated);
  std::printf("rotated %zu rows; max norm deviation %.3e\n", rotated.samples.size(),
              max_dev);
  write_report(args.report,
               make_report("rotate",
                           Json{{"input", args.input},
                                {"axis", args.axis},
                                {"angle", args.angle},
                                {"out", args.out}},
                           Json{{"rows", rotated.samples.size()},
                                {"max_norm_deviation", max_dev}},
                           Json{{"max_norm_deviation", max_dev}},
                           file_digest({args.input})));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quaternion signal-processing batch tool"};
  app.require_subcommand(1);

  AutocorrArgs ac;
  CLI::App* autocorr_cmd = app.add_subcommand("autocorr", "estimate autocorrelations");
  autocorr_cmd->add_option("input", ac.input, "signal CSV")->required();
  autocorr_cmd->add_option("--kind", ac.kind, "c|i|j|k|p|all");
  autocorr_cmd->add_flag("--pure", ac.pure, "drop real parts before estimation");
  autocorr_cmd->add_flag("--unbiased", ac.unbiased, "divide by N - |lag|");
  autocorr_cmd->add_option("--lags", ac.lags, "emit lags -L..L");
  autocorr_cmd->add_option("--out", ac.out, "JSON report path");

  MatrixArgs mx, du, tk;
  CLI::App* matrices_cmd = app.add_subcommand("matrices", "autocorrelation matrices");
  matrices_cmd->add_option("input", mx.input)->required();
  matrices_cmd->add_option("--L", mx.L, "matrix order L (size L+1)");
  matrices_cmd->add_option("--out", mx.out);

  CLI::App* duality_cmd =
      app.add_subcommand("duality", "real correlation matrices via duality");
  duality_cmd->add_option("input", du.input)->required();
  duality_cmd->add_option("--L", du.L);
  duality_cmd->add_option("--out", du.out);

  CLI::App* takagi_cmd =
      app.add_subcommand("takagi", "factorise R_eta = D Lambda D^{eta H}");
  takagi_cmd->add_option("input", tk.input)->required();
  takagi_cmd->add_option("--L", tk.L);
  takagi_cmd->add_option("--eta", tk.eta, "i|j|k");
  takagi_cmd->add_option("--out", tk.out);

  FilterArgs ql, nql;
  CLI::App* qlms_cmd = app.add_subcommand("qlms", "adaptive widely linear filter");
  qlms_cmd->add_option("input", ql.input)->required();
  qlms_cmd->add_option("target", ql.target)->required();
  qlms_cmd->add_option("--taps", ql.taps);
  qlms_cmd->add_option("--gain", ql.gain);
  qlms_cmd->add_option("--activation", ql.activation, "linear|tanh");
  qlms_cmd->add_option("--trace", ql.trace, "JSON report path");

  CLI::App* nlqlms_cmd =
      app.add_subcommand("nlqlms", "adaptive filter with tanh output stage");
  nlqlms_cmd->add_option("input", nql.input)->required();
  nlqlms_cmd->add_option("target", nql.target)->required();
  nlqlms_cmd->add_option("--taps", nql.taps);
  nlqlms_cmd->add_option("--gain", nql.gain);
  nlqlms_cmd->add_option("--activation", nql.activation, "linear|tanh");
  nlqlms_cmd->add_option("--trace", nql.trace);

  GradcheckArgs gc;
  CLI::App* gradcheck_cmd =
      app.add_subcommand("gradcheck", "catalog derivative vs finite differences");
  gradcheck_cmd->add_option("--function", gc.function)->required();
  gradcheck_cmd->add_option("--trials", gc.trials);
  gradcheck_cmd->add_option("--seed", gc.seed);
  gradcheck_cmd->add_option("--out", gc.out);

  RotateArgs ro;
  CLI::App* rotate_cmd = app.add_subcommand("rotate", "rotate a pure signal");
  rotate_cmd->add_option("input", ro.input)->required();
  rotate_cmd->add_option("--axis", ro.axis, "x,y,z")->required();
  rotate_cmd->add_option("--angle", ro.angle, "radians")->required();
  rotate_cmd->add_option("--out", ro.out, "rotated CSV path");
  rotate_cmd->add_option("--report", ro.report, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 3;
  }

  try {
    if (autocorr_cmd->parsed()) return cmd_autocorr(ac);
    if (matrices_cmd->parsed()) return cmd_matrices(mx);
    if (duality_cmd->parsed()) return cmd_duality(du);
    if (takagi_cmd->parsed()) return cmd_takagi(tk);
    if (qlms_cmd->parsed()) return cmd_filter(ql, "qlms", Activation::linear);
    if (nlqlms_cmd->parsed()) return cmd_filter(nql, "nlqlms", Activation::tanh);
    if (gradcheck_cmd->parsed()) return cmd_gradcheck(gc);
    if (rotate_cmd->parsed()) return cmd_rotate(ro);
  } catch (const csv_error& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return 2;
  } catch (const degenerate_spectrum_error& e) {
    std::fprintf(stderr, "factorisation error: %s\n", e.what());
    return 4;
  } catch (const divergence_error& e) {
    std::fprintf(stderr, "divergence: %s\n", e.what());
    return 5;
  } catch (const numeric_error& e) {
    std::fprintf(stderr, "numeric error: %s\n", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "invalid arguments: %s\n", e.what());
    return 3;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "invalid arguments: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
