#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace rccs::bell {

/// Entrywise max-norm tolerance for operator identities.
inline constexpr double kOperatorTolerance = 1e-12;
/// Tolerance on the norm of a state vector.
inline constexpr double kNormTolerance = 1e-12;
/// Residual allowed between the two sides of the classical-bound identity.
inline constexpr double kIdentityTolerance = 1e-15;

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

double max_norm(const Matrix& m);

/// A dense operator on a small finite-dimensional Hilbert space.
class QOperator {
 public:
  QOperator() = default;
  explicit QOperator(Matrix entries) : entries_(std::move(entries)) {}

  const Matrix& matrix() const { return entries_; }
  Eigen::Index dim() const { return entries_.rows(); }

  QOperator adjoint() const { return QOperator(entries_.adjoint()); }

  /// P^2 == P and P == P*, entrywise within tol.
  bool is_projection(double tol = kOperatorTolerance) const;
  /// V*V and VV* are both projections.
  bool is_partial_isometry(double tol = kOperatorTolerance) const;

  friend QOperator operator*(const QOperator& x, const QOperator& y) { return QOperator(x.entries_ * y.entries_); }
  friend QOperator operator+(const QOperator& x, const QOperator& y) { return QOperator(x.entries_ + y.entries_); }
  friend QOperator operator-(const QOperator& x, const QOperator& y) { return QOperator(x.entries_ - y.entries_); }
  friend QOperator operator*(std::complex<double> s, const QOperator& x) { return QOperator(s * x.entries_); }

 private:
  Matrix entries_;
};

/// [x, y] = xy - yx.
QOperator commutator(const QOperator& x, const QOperator& y);

/// x (x) y on the tensor product, first factor most significant.
QOperator kron(const QOperator& x, const QOperator& y);

/// A unit vector inducing the vector state phi(X) = <v, X v>.
class QState {
 public:
  /// Throws InputError unless |v| == 1 within kNormTolerance.
  explicit QState(Vector v);

  const Vector& vector() const { return v_; }
  /// <v, X v>; the real part for self-adjoint X.
  std::complex<double> expectation(const QOperator& x) const;

 private:
  Vector v_;
};

/// The six-term Clauser-Horne combination and its ingredients.
struct BellTerms {
  double a1 = 0;
  double a2 = 0;
  double b1b2 = 0;
  double a1a2 = 0;
  double b1a2 = 0;
  double a1b2 = 0;

  /// phi(A1) + phi(A2) + phi(B1B2) - phi(A1A2) - phi(B1A2) - phi(A1B2)
  double value() const { return a1 + a2 + b1b2 - a1a2 - b1a2 - a1b2; }
};

struct Observables {
  QOperator a1;
  QOperator b1;
  QOperator a2;
  QOperator b2;
};

struct Witness {
  QOperator v1;
  QOperator v2;
  Observables obs;
  QState psi;
  QState phi;
};

/// Two qubits; V1 = L (x) I and V2 = I (x) L with L e1 = e0, L e0 = 0, so
/// V1^2 = V2^2 = 0. Then A_i = V_i* V_i,
///   B1 = 3/4 V1*V1 + 1/4 V1V1* + sqrt(3)/4 (V1 + V1*),
///   B2 = 3/4 V2*V2 + 1/4 V2V2* - sqrt(3)/4 (V2 + V2*),
/// and Phi = (Psi + V1 V2 Psi) / sqrt(2) with Psi = e1 (x) e1 by default.
///
/// A supplied psi must be a unit 4-vector with (V1*V1)(V2*V2)psi != 0,
/// otherwise InputError. Phi is rescaled to unit norm, which is a no-op for
/// the default psi.
Witness build_witness();
Witness build_witness(const Vector& psi);

/// Evaluates the combination in `state`. The observables are used as given;
/// check them with observables_are_valid first if they are user supplied.
BellTerms bell_terms(const QState& state, const Observables& obs);
double bell_value(const QState& state, const Observables& obs);

/// All four observables are projections and every site-1 observable
/// commutes with every site-2 observable, within tol.
bool observables_are_valid(const Observables& obs, double tol = kOperatorTolerance);

/// Both sides of
///   a1 + a2 + b1b2 - a1a2 - b1a2 - a1b2
///     = a1 (b1 (1 - a2) + (1 - b1)(1 - b2)) + (1 - a1)(b1 b2 + (1 - b1) a2).
struct ClassicalBound {
  double combination = 0;
  double factored = 0;

  double residual() const;
  bool in_unit_interval() const { return combination >= 0.0 && combination <= 1.0; }
  bool ok() const { return residual() < kIdentityTolerance && in_unit_interval(); }
};

/// Throws InputError unless every argument lies in [0, 1].
ClassicalBound classical_bound_check(double a1, double a2, double b1, double b2);

struct PairCorrelation {
  std::string first;
  std::string second;
  double joint = 0;
  double correlation = 0;
};

struct FuzzSummary {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t failures = 0;
  double max_residual = 0;
};

/// Runs classical_bound_check on `samples` uniform quadruples.
FuzzSummary fuzz_classical_bound(std::size_t samples, std::uint64_t seed);

/// The argument that no single partition can screen off all four pairs.
struct NoCommonCauseReport {
  BellTerms terms;
  FuzzSummary bound;
  std::vector<PairCorrelation> pairs;
  bool violation = false;
  std::vector<std::string> narrative;
};

NoCommonCauseReport no_common_ccs_demo(std::size_t samples = 100000, std::uint64_t seed = 20140101);

}  // namespace rccs::bell
