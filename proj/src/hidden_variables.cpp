#include "bellkit/hidden_variables.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "bellkit/eigen.hpp"
#include "bellkit/errors.hpp"

namespace bellkit {

namespace {

ComplexMatrix columns(const ComplexMatrix& q, std::size_t begin, std::size_t end) {
  ComplexMatrix out(q.rows(), end - begin);
  for (std::size_t r = 0; r < q.rows(); ++r)
    for (std::size_t c = begin; c < end; ++c) out(r, c - begin) = q(r, c);
  return out;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

JointEigenbasis joint_eigenbasis(std::span<const ComplexMatrix> ops, double commute_tol, double degeneracy_tol) {
  if (ops.empty()) throw InvalidInput("joint_eigenbasis: empty operator family");
  const std::size_t dim = ops.front().rows();
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (!ops[i].is_square() || ops[i].rows() != dim) throw DimensionError("joint_eigenbasis: operator dimension mismatch");
    if (!is_hermitian(ops[i])) throw InvalidInput("joint_eigenbasis: operator " + std::to_string(i) + " is not Hermitian");
  }
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      const double n = commutator_norm(ops[i], ops[j]);
      if (n >= commute_tol) throw CommutationError(n, i, j);
    }

  std::vector<ComplexMatrix> blocks{ComplexMatrix::identity(dim)};
  for (const auto& op : ops) {
    std::vector<ComplexMatrix> refined;
    for (const auto& q : blocks) {
      const ComplexMatrix qh = q.adjoint();
      ComplexMatrix restricted = qh * op * q;
      restricted = (restricted + restricted.adjoint()) * Complex(0.5);
      const auto es = hermitian_eigensystem(restricted);
      const ComplexMatrix rotated = q * es.vectors;
      std::size_t start = 0;
      for (std::size_t k = 1; k <= es.values.size(); ++k) {
        if (k == es.values.size() || es.values[k] - es.values[k - 1] >= degeneracy_tol) {
          refined.push_back(columns(rotated, start, k));
          start = k;
        }
      }
    }
    blocks = std::move(refined);
  }

  JointEigenbasis out{ComplexMatrix(dim, dim), std::vector<std::vector<double>>(ops.size(), std::vector<double>(dim))};
  std::size_t col = 0;
  for (const auto& q : blocks)
    for (std::size_t c = 0; c < q.cols(); ++c, ++col)
      for (std::size_t r = 0; r < dim; ++r) out.basis(r, col) = q(r, c);

  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t k = 0; k < dim; ++k) {
      const auto v = out.basis.column_vector(k);
      out.values[i][k] = inner_product(v, multiply(ops[i], v)).real();
    }
  return out;
}

std::string Atom::label() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) os << ";";
    // Round for display only; -0 shows as 0.
    const double r = std::round(key[i] * 1e9) / 1e9;
    os << format_double(r == 0.0 ? 0.0 : r);
  }
  os << ")#" << tiebreak;
  return os.str();
}

std::size_t HVModel::label_index(const std::string& label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw UnknownLabel("unknown observable label: " + label);
  return static_cast<std::size_t>(it - labels.begin());
}

HVModel build_hv_model(const DensityOperator& state, std::span<const LabeledOperator> ops, double commute_tol) {
  std::vector<ComplexMatrix> mats;
  mats.reserve(ops.size());
  for (const auto& op : ops) {
    if (op.matrix.rows() != state.dim()) throw DimensionError("build_hv_model: operator " + op.label + " has wrong dimension");
    mats.push_back(op.matrix);
  }
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j)
      if (ops[i].label == ops[j].label) throw InvalidInput("build_hv_model: duplicate label " + ops[i].label);

  const auto basis = joint_eigenbasis(mats, commute_tol);
  const std::size_t dim = state.dim();

  HVModel model;
  for (const auto& op : ops) model.labels.push_back(op.label);
  model.values = basis.values;
  model.weights.resize(dim);
  model.atoms.resize(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const auto v = basis.basis.column_vector(k);
    model.weights[k] = std::max(0.0, inner_product(v, multiply(state.matrix(), v)).real());
    model.atoms[k].key.resize(ops.size());
    for (std::size_t i = 0; i < ops.size(); ++i) model.atoms[k].key[i] = basis.values[i][k];
    if (k > 0) {
      bool same = true;
      for (std::size_t i = 0; i < ops.size(); ++i)
        same = same && std::abs(model.atoms[k].key[i] - model.atoms[k - 1].key[i]) < tol::degeneracy;
      model.atoms[k].tiebreak = same ? model.atoms[k - 1].tiebreak + 1 : 0;
    }
  }
  return model;
}

double hv_expectation(const HVModel& model, std::span<const std::string> labels) {
  std::vector<std::size_t> idx;
  for (const auto& l : labels) idx.push_back(model.label_index(l));
  double s = 0.0;
  for (std::size_t k = 0; k < model.weights.size(); ++k) {
    double prod = model.weights[k];
    for (const auto i : idx) prod *= model.values[i][k];
    s += prod;
  }
  return s;
}

ModelCheck verify_model(const HVModel& model, const DensityOperator& state, std::span<const LabeledOperator> ops) {
  ModelCheck check{0.0, 0.0};
  const std::size_t n = ops.size();
  const ComplexMatrix id = ComplexMatrix::identity(state.dim());

  auto compare = [&](std::vector<std::size_t> subset) {
    ComplexMatrix prod = id;
    std::vector<std::string> names;
    for (const auto i : subset) {
      prod = prod * ops[i].matrix;
      names.push_back(ops[i].label);
    }
    const double quantum = state.expectation(prod);
    check.max_error = std::max(check.max_error, std::abs(quantum - hv_expectation(model, names)));
  };

  compare({});
  for (std::size_t i = 0; i < n; ++i) {
    compare({i});
    for (std::size_t j = i + 1; j < n; ++j) {
      compare({i, j});
      for (std::size_t k = j + 1; k < n; ++k) compare({i, j, k});

      const double quantum_sum = state.expectation(ops[i].matrix + ops[j].matrix);
      const std::size_t li = model.label_index(ops[i].label);
      const std::size_t lj = model.label_index(ops[j].label);
      double hv_sum = 0.0;
      for (std::size_t a = 0; a < model.weights.size(); ++a)
        hv_sum += model.weights[a] * (model.values[li][a] + model.values[lj][a]);
      check.linearity_error = std::max(check.linearity_error, std::abs(quantum_sum - hv_sum));
    }
  }
  return check;
}

Complex hv_characteristic(const HVModel& model, const std::string& a, const std::string& b, double xi, double eta) {
  const std::size_t ia = model.label_index(a);
  const std::size_t ib = model.label_index(b);
  Complex s = 0.0;
  for (std::size_t k = 0; k < model.weights.size(); ++k)
    s += model.weights[k] * std::exp(Complex(0.0, xi * model.values[ia][k] + eta * model.values[ib][k]));
  return s;
}

Complex quantum_characteristic(const DensityOperator& state, const ComplexMatrix& a, const ComplexMatrix& b,
                               double xi, double eta) {
  const ComplexMatrix ea = hermitian_function(a, [xi](double w) { return std::exp(Complex(0.0, xi * w)); });
  const ComplexMatrix eb = hermitian_function(b, [eta](double w) { return std::exp(Complex(0.0, eta * w)); });
  return trace_of_product(state.matrix(), ea * eb);
}

std::string to_csv(const HVModel& model) {
  std::ostringstream os;
  os << "atom,weight";
  for (const auto& l : model.labels) os << "," << l;
  os << "\n";
  for (std::size_t k = 0; k < model.atoms.size(); ++k) {
    os << model.atoms[k].label() << "," << format_double(model.weights[k]);
    for (std::size_t i = 0; i < model.labels.size(); ++i) os << "," << format_double(model.values[i][k]);
    os << "\n";
  }
  return os.str();
}

}  // namespace bellkit
