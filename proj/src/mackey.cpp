#include "posetcoh/mackey.hpp"

namespace posetcoh {

const Matrix& MackeyData::transfer(int j, int i) const {
  auto it = transfers.find({j, i});
  if (it == transfers.end())
    throw input_error("MissingTransfer",
                      "no transfer for '" + g.base().id(j) + "<" + g.base().id(i) + "'");
  return it->second;
}

Matrix MackeyData::alpha(int i, int j) const { return g.map_along(j, i) * transfer(j, i); }

void MackeyData::validate_shapes() const {
  if (g.variance() != Variance::Contravariant)
    throw input_error("WrongVariance", "Mackey data needs a contravariant functor");
  const Poset& base = g.base();
  for (int j = 0; j < base.size(); ++j)
    for (int i = 0; i < base.size(); ++i) {
      if (!base.less(j, i)) continue;
      const Matrix& t = transfer(j, i);
      if (t.rows() != g.dim(i) || t.cols() != g.dim(j))
        throw input_error("ShapeMismatch",
                          "transfer '" + base.id(j) + "<" + base.id(i) + "' shape");
      if (t.field() != g.field()) throw input_error("FieldMismatch", "transfer field");
    }
}

Matrix mackey_kernel_at(const MackeyData& m, int k) {
  const auto& lower = m.g.base().lower_covers(k);
  // Minimal elements impose no condition: their joint kernel is zero.
  if (lower.empty()) return Matrix::zero(m.g.field(), m.g.dim(k), 0);
  std::vector<Matrix> blocks;
  for (int l : lower) blocks.push_back(m.g.cover_map(l, k));
  return kernel_basis(Matrix::vstack(blocks));
}

namespace {

// Existence of β ∈ End(G(l)) with G(l<j)∘α = β∘G(l<j): the composite must
// kill ker G(l<j).
bool g_linear_at(const MackeyData& m, const Matrix& alpha, int j, std::string* why) {
  const Poset& base = m.g.base();
  for (int l = 0; l < base.size(); ++l) {
    if (!base.less(l, j)) continue;
    const Matrix glj = m.g.map_along(l, j);
    const Matrix ker = kernel_basis(glj);
    if (!(glj * alpha * ker).is_zero()) {
      if (why)
        *why = "alpha at '" + base.id(j) + "' is not G-linear along '" + base.id(l) + "'";
      return false;
    }
  }
  return true;
}

}  // namespace

MackeyReport verify_weak_mackey(const MackeyData& m) {
  m.validate_shapes();
  MackeyReport report;
  const Poset& base = m.g.base();

  for (int i = 0; i < base.size(); ++i)
    for (int j = 0; j < base.size(); ++j) {
      if (!base.less(j, i)) continue;
      std::string why;
      if (!g_linear_at(m, m.alpha(i, j), j, &why))
        report.violations.push_back("alpha(" + base.id(i) + "," + base.id(j) + "): " + why);
    }

  for (int i = 0; i < base.size(); ++i)
    for (int k = 0; k < base.size(); ++k) {
      if (!base.less(k, i)) continue;
      const Matrix kk = mackey_kernel_at(m, k);
      if (kk.cols() == 0) continue;
      for (int j = 0; j < base.size(); ++j) {
        if (!base.less(j, i) || base.less(j, k)) continue;
        if (!(m.g.map_along(j, i) * m.transfer(k, i) * kk).is_zero())
          report.violations.push_back("kernel condition fails for k='" + base.id(k) + "', i='" +
                                      base.id(i) + "', j='" + base.id(j) + "'");
      }
    }

  report.ok = report.violations.empty();
  return report;
}

bool quasi_unit_in(const MackeyData& m, const std::vector<int>& subposet) {
  const Poset& base = m.g.base();
  for (int i : subposet)
    for (int j : subposet) {
      if (!base.less(j, i)) continue;
      const Matrix a = m.alpha(i, j);
      if (!inverse(a)) return false;
      if (!g_linear_at(m, a, j, nullptr)) return false;
      // The G-linear witness must be invertible on the image.
      for (int l = 0; l < base.size(); ++l) {
        if (!base.less(l, j)) continue;
        const Matrix glj = m.g.map_along(l, j);
        if (rank(glj * a) != rank(glj)) return false;
      }
    }
  return true;
}

}  // namespace posetcoh
