#pragma once

#include <Eigen/Dense>
#include <Eigen/Jacobi>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "specbound/error.hpp"
#include "specbound/graph.hpp"

namespace specbound {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar = double>
MatrixX<Scalar> adjacency_matrix(const Graph& g) {
  const int n = g.order();
  MatrixX<Scalar> a = MatrixX<Scalar>::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    a(u, v) = Scalar(1);
    a(v, u) = Scalar(1);
  }
  return a;
}

template <typename Scalar>
struct SymmetricEigen {
  VectorX<Scalar> eigenvalues;   // descending
  MatrixX<Scalar> eigenvectors;  // column j pairs with eigenvalues(j)
  int sweeps = 0;
};

// Cyclic Jacobi diagonalization of a dense symmetric matrix. Each sweep visits
// every off-diagonal pair once; iteration stops when the off-diagonal
// Frobenius norm falls to machine precision relative to the whole matrix.
template <typename Derived>
SymmetricEigen<typename Derived::Scalar> jacobi_eigen(const Eigen::MatrixBase<Derived>& input,
                                                      int max_sweeps = 100) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = input.rows();
  MatrixX<Scalar> a = input;
  MatrixX<Scalar> v = MatrixX<Scalar>::Identity(n, n);
  const Scalar scale = std::max(a.norm(), std::numeric_limits<Scalar>::min());
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();

  auto off_norm = [&] {
    Scalar s(0);
    for (Eigen::Index q = 1; q < n; ++q) {
      for (Eigen::Index p = 0; p < q; ++p) s += a(p, q) * a(p, q);
    }
    return std::sqrt(Scalar(2) * s);
  };

  int sweeps = 0;
  while (off_norm() > eps * scale) {
    if (sweeps == max_sweeps) {
      throw Error(ErrorCode::NoConvergence,
                  "Jacobi iteration did not converge in " + std::to_string(max_sweeps) + " sweeps");
    }
    ++sweeps;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == Scalar(0)) continue;
        Eigen::JacobiRotation<Scalar> rot;
        rot.makeJacobi(a, p, q);
        a.applyOnTheLeft(p, q, rot.adjoint());
        a.applyOnTheRight(p, q, rot);
        a(p, q) = a(q, p) = Scalar(0);
        v.applyOnTheRight(p, q, rot);
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i) > a(j, j); });
  SymmetricEigen<Scalar> out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.eigenvalues(k) = a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]);
    out.eigenvectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
  }
  out.sweeps = sweeps;
  return out;
}

template <typename Scalar = double>
struct Spectrum {
  VectorX<Scalar> eigenvalues;  // lambda_1 >= ... >= lambda_n
  Scalar residual = 0;          // max_j ||A v_j - lambda_j v_j||_inf
  int iterations = 0;           // Jacobi sweeps

  Scalar lambda1() const { return eigenvalues.size() > 0 ? eigenvalues(0) : Scalar(0); }
  Scalar lambda2() const { return eigenvalues.size() > 1 ? eigenvalues(1) : Scalar(0); }
  Scalar power_sum(int p) const { return eigenvalues.array().pow(Scalar(p)).sum(); }
};

template <typename Scalar = double>
Spectrum<Scalar> spectrum(const Graph& g) {
  if (g.order() < 1) throw Error(ErrorCode::InvalidParams, "spectrum needs n >= 1");
  const MatrixX<Scalar> a = adjacency_matrix<Scalar>(g);
  SymmetricEigen<Scalar> eig = jacobi_eigen(a);
  Spectrum<Scalar> out;
  out.eigenvalues = std::move(eig.eigenvalues);
  out.iterations = eig.sweeps;
  const MatrixX<Scalar> r =
      a * eig.eigenvectors - eig.eigenvectors * out.eigenvalues.asDiagonal();
  out.residual = r.cwiseAbs().maxCoeff();
  return out;
}

struct PowerIterationOptions {
  double step_tolerance = 1e-12;  // ||x_{k+1} - x_k||_inf
  long max_iterations = 1'000'000;
  double tie_tolerance = 1e-9;    // relative, for components sharing rho
  double support_tolerance = 1e-12;
};

template <typename Scalar = double>
struct PerronData {
  Scalar rho = 0;
  VectorX<Scalar> vector;     // nonnegative, unit Euclidean norm
  std::vector<int> support;   // vertices with entries above the support tolerance
  std::optional<Scalar> c;    // min entry / entry sum; present on connected graphs with m >= 1
  bool degenerate = false;    // edgeless graph: rho = 0, vector = e_0
  int component_root = -1;    // lowest vertex of the component carrying the vector
  long iterations = 0;
  Scalar residual = 0;        // ||A x - rho x||_inf
};

namespace detail {

// Power iteration on A + I from the normalized all-ones vector. The unit shift
// makes a connected component's matrix primitive, so bipartite components do
// not oscillate between the +rho and -rho directions.
template <typename Scalar>
VectorX<Scalar> shifted_power_iteration(const MatrixX<Scalar>& a, const PowerIterationOptions& opt,
                                        long& iterations) {
  const Eigen::Index n = a.rows();
  VectorX<Scalar> x = VectorX<Scalar>::Constant(n, Scalar(1) / std::sqrt(Scalar(n)));
  VectorX<Scalar> y(n);
  for (iterations = 0; iterations < opt.max_iterations; ++iterations) {
    y.noalias() = a * x;
    y += x;
    y.normalize();
    const Scalar step = (y - x).cwiseAbs().maxCoeff();
    x.swap(y);
    if (step <= Scalar(opt.step_tolerance)) return x;
  }
  throw Error(ErrorCode::NoConvergence, "power iteration hit its iteration cap");
}

}  // namespace detail

// Nonnegative unit eigenvector for rho. On disconnected graphs the vector lives
// on the lowest-indexed component attaining rho and is zero elsewhere.
template <typename Scalar = double>
PerronData<Scalar> perron(const Graph& g, const Structure& st,
                          const PowerIterationOptions& opt = {}) {
  const int n = g.order();
  if (n < 1) throw Error(ErrorCode::InvalidParams, "perron needs n >= 1");
  PerronData<Scalar> out;
  out.vector = VectorX<Scalar>::Zero(n);
  if (g.size() == 0) {
    out.degenerate = true;
    out.vector(0) = Scalar(1);
    out.support = {0};
    out.component_root = st.components.front().front();
    return out;
  }

  struct Candidate {
    std::size_t component;
    Scalar rho;
    VectorX<Scalar> x;
    long iterations;
  };
  std::vector<Candidate> candidates;
  for (std::size_t c = 0; c < st.components.size(); ++c) {
    const auto& members = st.components[c];
    if (members.size() < 2) continue;
    const MatrixX<Scalar> sub = adjacency_matrix<Scalar>(induced_subgraph(g, members));
    long iters = 0;
    VectorX<Scalar> x = detail::shifted_power_iteration(sub, opt, iters);
    const Scalar rho = x.dot(sub * x);
    candidates.push_back({c, rho, std::move(x), iters});
  }
  Scalar best = candidates.front().rho;
  for (const auto& cand : candidates) best = std::max(best, cand.rho);
  const Scalar tie = Scalar(opt.tie_tolerance) * std::max(Scalar(1), best);
  const Candidate& chosen = *std::find_if(candidates.begin(), candidates.end(),
                                          [&](const Candidate& cd) { return cd.rho >= best - tie; });

  const auto& members = st.components[chosen.component];
  for (std::size_t i = 0; i < members.size(); ++i) {
    out.vector(members[i]) = chosen.x(static_cast<Eigen::Index>(i));
  }
  out.rho = chosen.rho;
  out.component_root = members.front();
  for (const auto& cand : candidates) out.iterations += cand.iterations;
  for (int u = 0; u < n; ++u) {
    if (out.vector(u) > Scalar(opt.support_tolerance)) out.support.push_back(u);
  }
  if (st.connected()) out.c = out.vector.minCoeff() / out.vector.sum();
  const MatrixX<Scalar> a = adjacency_matrix<Scalar>(g);
  out.residual = (a * out.vector - out.rho * out.vector).cwiseAbs().maxCoeff();
  return out;
}

template <typename Scalar = double>
PerronData<Scalar> perron(const Graph& g, const PowerIterationOptions& opt = {}) {
  return perron<Scalar>(g, structure(g), opt);
}

// 2 * sum over edges of y_u y_v, i.e. the quadratic form y^T A y.
template <typename Derived>
typename Derived::Scalar edge_form(const Graph& g, const Eigen::MatrixBase<Derived>& y) {
  typename Derived::Scalar s(0);
  for (const auto& [u, v] : g.edges()) s += y(u) * y(v);
  return 2 * s;
}

}  // namespace specbound
