#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsp/autocorr.hpp"
#include "support/golden.hpp"
#include "support/helpers.hpp"

using namespace qsp;
using test::close;
using test::Rng;
namespace golden = test::golden;

namespace {

Quaternion at(const QVector& seq, int lag) {
  const int max_lag = (static_cast<int>(seq.size()) - 1) / 2;
  return seq[lag + max_lag];
}

}  // namespace

TEST_CASE("golden autocorrelation sequences of the demonstration record") {
  const QVector& q = golden::sequence;
  CHECK(golden::seq_close(autocorr(q, CorrKind::c), golden::r_c, 0.01));
  CHECK(golden::seq_close(autocorr(q, CorrKind::i), golden::r_i, 0.01));
  CHECK(golden::seq_close(autocorr(q, CorrKind::j), golden::r_j, 0.01));
  CHECK(golden::seq_close(autocorr(q, CorrKind::k), golden::r_k, 0.01));
  CHECK(golden::seq_close(autocorr(q, CorrKind::p), golden::r_p_full, 0.01));
  CHECK(golden::seq_close(autocorr(q, CorrKind::p, Estimator::biased, true),
                          golden::r_p_pure, 0.01));

  // exact lag-0 values: (103 + 65 + 51) / 3 and -(102 + 61 + 35) / 3
  CHECK(at(autocorr(q, CorrKind::c), 0) == Quaternion{73});
  CHECK(at(autocorr(q, CorrKind::p, Estimator::biased, true), 0) == Quaternion{-66});
}

TEST_CASE("estimator variants") {
  const QVector& q = golden::sequence;
  SUBCASE("unbiased divides by N - |lag|") {
    const QVector biased = autocorr(q, CorrKind::c);
    const QVector unbiased = autocorr(q, CorrKind::c, Estimator::unbiased);
    CHECK(close(unbiased[2], biased[2]));            // lag 0, same divisor
    CHECK(close(unbiased[3], biased[3] * (3.0 / 2)));  // lag 1
    CHECK(close(unbiased[4], biased[4] * (3.0 / 1)));  // lag 2
  }
  SUBCASE("demean removes the sample mean first") {
    Rng rng(101);
    QVector shifted = rng.signal(16);
    for (Quaternion& s : shifted) s += Quaternion{5, -3, 2, 1};
    QVector centred = shifted;
    Quaternion mean{};
    for (const Quaternion& s : centred) mean += s;
    mean /= 16.0;
    for (Quaternion& s : centred) s -= mean;
    const QVector a = autocorr(shifted, CorrKind::c, Estimator::biased, false, true);
    const QVector b = autocorr(centred, CorrKind::c);
    for (std::size_t t = 0; t < a.size(); ++t) CHECK(close(a[t], b[t], 1e-10));
  }
  CHECK_THROWS_AS(autocorr({}, CorrKind::c), std::domain_error);
}

TEST_CASE("dependency identity r_p = (r_i + r_j + r_k - r_c) / 2") {
  CHECK(check_dependency(AutocorrSet::estimate(golden::sequence)) < 1e-10);
  CHECK(check_dependency(AutocorrSet::estimate({Quaternion{1, -2, 0.5, 3}})) < 1e-14);

  Rng rng(103);
  for (int t = 0; t < 30; ++t) {
    const QVector sig = rng.proper_signal(50);
    CHECK(check_dependency(AutocorrSet::estimate(sig)) < 1e-10);
  }

  SUBCASE("lag-range mismatch is a shape error") {
    AutocorrSet set = AutocorrSet::estimate(golden::sequence);
    set.r_p.pop_back();
    CHECK_THROWS_AS(check_dependency(set), shape_error);
  }
}

TEST_CASE("symmetries of the estimated sequences") {
  Rng rng(107);
  for (int t = 0; t < 100; ++t) {
    const QVector sig = rng.signal(rng.uniform_int(3, 32));
    const AutocorrSet set = AutocorrSet::estimate(sig);
    const int L = set.max_lag;
    for (int lag = 0; lag <= L; ++lag) {
      // conjugate symmetry of r_c
      CHECK(close(set.at(CorrKind::c, lag), conj(set.at(CorrKind::c, -lag)), 1e-12));
      // conjugate eta-symmetry of r_i, r_j, r_k
      CHECK(close(set.at(CorrKind::i, lag),
                  conj(involution(set.at(CorrKind::i, -lag), Axis::i)), 1e-12));
      CHECK(close(set.at(CorrKind::j, lag),
                  conj(involution(set.at(CorrKind::j, -lag), Axis::j)), 1e-12));
      CHECK(close(set.at(CorrKind::k, lag),
                  conj(involution(set.at(CorrKind::k, -lag), Axis::k)), 1e-12));
      // magnitude symmetry for the four conjugate kinds
      for (CorrKind kind : {CorrKind::c, CorrKind::i, CorrKind::j, CorrKind::k})
        CHECK(norm(set.at(kind, lag)) ==
              doctest::Approx(norm(set.at(kind, -lag))).epsilon(1e-10));
      // the maximum of |r_c| sits at lag zero
      CHECK(norm(set.at(CorrKind::c, 0)) >= norm(set.at(CorrKind::c, lag)) - 1e-12);
    }
    // lag-0 eta components vanish
    CHECK(std::abs(set.at(CorrKind::i, 0).i) < 1e-12);
    CHECK(std::abs(set.at(CorrKind::j, 0).j) < 1e-12);
    CHECK(std::abs(set.at(CorrKind::k, 0).k) < 1e-12);
  }
}

TEST_CASE("pure-mode identities") {
  Rng rng(109);
  for (int t = 0; t < 100; ++t) {
    const QVector sig = rng.signal(rng.uniform_int(3, 32));
    const AutocorrSet set = AutocorrSet::estimate(sig, Estimator::biased, true);
    const int L = set.max_lag;
    for (int lag = -L; lag <= L; ++lag) {
      // r_p == -r_c when samples are pure
      CHECK(close(set.at(CorrKind::p, lag), -set.at(CorrKind::c, lag), 1e-12));
      // and |r_p| becomes symmetric
      CHECK(norm(set.at(CorrKind::p, lag)) ==
            doctest::Approx(norm(set.at(CorrKind::p, -lag))).epsilon(1e-10));
    }
  }
  // full-quaternion pseudo sequence is not magnitude-symmetric on the fixture
  const AutocorrSet full = AutocorrSet::estimate(golden::sequence);
  CHECK(std::abs(norm(full.at(CorrKind::p, 1)) - norm(full.at(CorrKind::p, -1))) > 1.0);
}

TEST_CASE("toeplitz matrices") {
  const AutocorrSet set = AutocorrSet::estimate(golden::sequence);
  const CorrMatrices mats = toeplitz(set, 2);

  SUBCASE("entry (m, n) = r(n - m)") {
    for (int m = 0; m < 3; ++m)
      for (int n = 0; n < 3; ++n) {
        CHECK(mats.c(m, n) == set.at(CorrKind::c, n - m));
        CHECK(mats.i(m, n) == set.at(CorrKind::i, n - m));
        CHECK(mats.p(m, n) == set.at(CorrKind::p, n - m));
      }
  }

  SUBCASE("reference table replication") {
    CHECK(golden::entrywise_close(mats.c, golden::toeplitz_from(golden::r_c), 0.01));
    CHECK(golden::entrywise_close(mats.i, golden::toeplitz_from(golden::r_i), 0.01));
    CHECK(golden::entrywise_close(mats.j, golden::toeplitz_from(golden::r_j), 0.01));
    CHECK(golden::entrywise_close(mats.k, golden::toeplitz_from(golden::r_k), 0.01));
    for (int d = 0; d < 3; ++d) CHECK(mats.c(d, d) == Quaternion{73});
  }

  SUBCASE("structural properties") {
    // R_c Hermitian
    CHECK((mats.c - mats.c.hermitian()).frobenius_norm() < 1e-10);
    // R_eta eta-Hermitian
    CHECK((mats.i - mats.i.eta_hermitian(Axis::i)).frobenius_norm() < 1e-10);
    CHECK((mats.j - mats.j.eta_hermitian(Axis::j)).frobenius_norm() < 1e-10);
    CHECK((mats.k - mats.k.eta_hermitian(Axis::k)).frobenius_norm() < 1e-10);
    // R_p of a full-quaternion record is not symmetric
    CHECK((mats.p - mats.p.transpose()).frobenius_norm() > 1.0);
    // ... but is conjugate-symmetric in pure mode
    const CorrMatrices pure =
        toeplitz(AutocorrSet::estimate(golden::sequence, Estimator::biased, true), 2);
    CHECK((pure.p - pure.p.hermitian()).frobenius_norm() < 1e-10);
  }

  SUBCASE("L = 0 gives the lag-0 values") {
    const CorrMatrices m0 = toeplitz(set, 0);
    CHECK(m0.c.rows() == 1);
    CHECK(m0.c(0, 0) == Quaternion{73});
  }

  CHECK_THROWS_AS(toeplitz(set, 3), shape_error);
  CHECK_THROWS_AS(toeplitz(set, -1), shape_error);
}

namespace {

bool matrix_close(const Eigen::MatrixXd& got, const Eigen::MatrixXd& want, double tol) {
  return got.rows() == want.rows() && got.cols() == want.cols() &&
         (got - want).cwiseAbs().maxCoeff() <= tol;
}

Eigen::MatrixXd toeplitz_real(const golden::RealSeq& seq) {
  Eigen::MatrixXd m(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = seq[(c - r) + 2];
  return m;
}

}  // namespace

TEST_CASE("real cross-correlations and duality") {
  const Quadrivariate qv = to_quadrivariate(golden::sequence);

  SUBCASE("direct real-domain estimates match the printed sequences") {
    using P = std::pair<std::pair<Component, Component>, golden::RealSeq>;
    const std::vector<P> cases{
        {{Component::r, Component::r}, golden::r_rr},
        {{Component::i, Component::i}, golden::r_ii},
        {{Component::j, Component::j}, golden::r_jj},
        {{Component::k, Component::k}, golden::r_kk},
        {{Component::i, Component::r}, golden::r_ir},
        {{Component::j, Component::r}, golden::r_jr},
        {{Component::k, Component::r}, golden::r_kr},
        {{Component::j, Component::i}, golden::r_ji},
        {{Component::k, Component::i}, golden::r_ki},
        {{Component::k, Component::j}, golden::r_kj}};
    for (const auto& [pair, want] : cases) {
      const std::vector<double> got = real_crosscorr_seq(qv, pair.first, pair.second);
      REQUIRE(got.size() == 5);
      for (int t = 0; t < 5; ++t) CHECK(std::abs(got[t] - want[t]) <= 0.01);
    }
    CHECK(std::abs(real_crosscorr_seq(qv, Component::i, Component::i)[2] - 47.0) <= 0.01);
    CHECK(std::abs(real_crosscorr_seq(qv, Component::k, Component::j)[2] + 5.33) <= 0.01);
  }

  SUBCASE("duality extraction reproduces the printed real matrices") {
    const RealCorrSet rc =
        duality_extract(toeplitz(AutocorrSet::estimate(golden::sequence), 2));
    CHECK(matrix_close(rc.rr, toeplitz_real(golden::r_rr), 0.01));
    CHECK(matrix_close(rc.ii, toeplitz_real(golden::r_ii), 0.01));
    CHECK(matrix_close(rc.jj, toeplitz_real(golden::r_jj), 0.01));
    CHECK(matrix_close(rc.kk, toeplitz_real(golden::r_kk), 0.01));
    CHECK(matrix_close(rc.ir, toeplitz_real(golden::r_ir), 0.01));
    CHECK(matrix_close(rc.jr, toeplitz_real(golden::r_jr), 0.01));
    CHECK(matrix_close(rc.kr, toeplitz_real(golden::r_kr), 0.01));
    CHECK(matrix_close(rc.ji, toeplitz_real(golden::r_ji), 0.01));
    CHECK(matrix_close(rc.ki, toeplitz_real(golden::r_ki), 0.01));
    CHECK(matrix_close(rc.kj, toeplitz_real(golden::r_kj), 0.01));
    // spot values called out in the reference tables
    CHECK(std::abs(rc.rr(0, 0) - 7.0) <= 0.01);
    CHECK(std::abs(rc.rr(0, 1) - 3.33) <= 0.01);
    CHECK(std::abs(rc.rr(0, 2) - 1.33) <= 0.01);
    CHECK(std::abs(rc.ir(0, 0) - 12.67) <= 0.01);
    CHECK(std::abs(rc.ir(1, 0) - 12.0) <= 0.01);
    CHECK(std::abs(rc.ir(2, 0) - 13.33) <= 0.01);
  }

  SUBCASE("zero signal extracts all-zero matrices") {
    const QVector zeros(4);
    const RealCorrSet rc = duality_extract(toeplitz(AutocorrSet::estimate(zeros), 2));
    for (const Eigen::MatrixXd* m : {&rc.rr, &rc.ii, &rc.jj, &rc.kk, &rc.ir, &rc.jr,
                                     &rc.kr, &rc.ji, &rc.ki, &rc.kj})
      CHECK(m->cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("duality closure on random signals") {
    Rng rng(113);
    for (int t = 0; t < 100; ++t) {
      const int n = rng.uniform_int(3, 64);
      const int L = rng.uniform_int(1, std::min(6, n - 1));
      const QVector sig = rng.signal(n);
      const Quadrivariate comp = to_quadrivariate(sig);
      const RealCorrSet rc = duality_extract(toeplitz(AutocorrSet::estimate(sig), L));
      auto direct = [&](Component x, Component y) {
        return real_crosscorr(comp, x, y, L);
      };
      CHECK(matrix_close(rc.rr, direct(Component::r, Component::r), 1e-10));
      CHECK(matrix_close(rc.ii, direct(Component::i, Component::i), 1e-10));
      CHECK(matrix_close(rc.jj, direct(Component::j, Component::j), 1e-10));
      CHECK(matrix_close(rc.kk, direct(Component::k, Component::k), 1e-10));
      CHECK(matrix_close(rc.ir, direct(Component::i, Component::r), 1e-10));
      CHECK(matrix_close(rc.jr, direct(Component::j, Component::r), 1e-10));
      CHECK(matrix_close(rc.kr, direct(Component::k, Component::r), 1e-10));
      CHECK(matrix_close(rc.ji, direct(Component::j, Component::i), 1e-10));
      CHECK(matrix_close(rc.ki, direct(Component::k, Component::i), 1e-10));
      CHECK(matrix_close(rc.kj, direct(Component::k, Component::j), 1e-10));
    }
  }
}

TEST_CASE("pseudo-autocorrelation decomposition") {
  SUBCASE("full mode: Re r_p(0) = 7 - 47 - 15.33 - 3.67 = -59") {
    const CorrMatrices mats = toeplitz(AutocorrSet::estimate(golden::sequence), 2);
    const PseudoParts parts = pseudo_decompose(duality_extract(mats));
    CHECK(std::abs(parts.re(0, 0) + 59.0) <= 0.02);
    CHECK(matrix_close(parts.re, component_matrix(mats.p, Component::r), 1e-10));
    CHECK(matrix_close(parts.im_i, component_matrix(mats.p, Component::i), 1e-10));
    CHECK(matrix_close(parts.im_j, component_matrix(mats.p, Component::j), 1e-10));
    CHECK(matrix_close(parts.im_k, component_matrix(mats.p, Component::k), 1e-10));
  }
  SUBCASE("pure mode: Re r_p(0) = -(47 + 15.33 + 3.67) = -66") {
    const CorrMatrices mats =
        toeplitz(AutocorrSet::estimate(golden::sequence, Estimator::biased, true), 2);
    const PseudoParts parts = pseudo_decompose(duality_extract(mats));
    CHECK(std::abs(parts.re(0, 0) + 66.0) <= 0.02);
    CHECK(matrix_close(parts.re, component_matrix(mats.p, Component::r), 1e-10));
  }
  SUBCASE("zero signal decomposes to zeros") {
    const CorrMatrices mats = toeplitz(AutocorrSet::estimate(QVector(3)), 1);
    const PseudoParts parts = pseudo_decompose(duality_extract(mats));
    CHECK(parts.re.cwiseAbs().maxCoeff() == 0.0);
    CHECK(parts.im_i.cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("random signals") {
    Rng rng(127);
    for (int t = 0; t < 30; ++t) {
      const QVector sig = rng.signal(rng.uniform_int(3, 24));
      const int L = 2;
      const CorrMatrices mats = toeplitz(AutocorrSet::estimate(sig), L);
      const PseudoParts parts = pseudo_decompose(duality_extract(mats));
      CHECK(matrix_close(parts.re, component_matrix(mats.p, Component::r), 1e-10));
      CHECK(matrix_close(parts.im_i, component_matrix(mats.p, Component::i), 1e-10));
      CHECK(matrix_close(parts.im_j, component_matrix(mats.p, Component::j), 1e-10));
      CHECK(matrix_close(parts.im_k, component_matrix(mats.p, Component::k), 1e-10));
    }
  }
}
