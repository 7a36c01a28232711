#include "hbarkit/linear_algebra.hpp"

#include <map>

namespace hbarkit {

namespace {

using SparseRow = std::map<std::size_t, Rational>;

// Incremental row echelon form keyed by pivot column.
class Echelon {
 public:
  // Returns true when the row was independent of the rows already present.
  bool insert(SparseRow row) {
    while (!row.empty()) {
      auto [col, lead] = *row.begin();
      auto it = pivots_.find(col);
      if (it == pivots_.end()) {
        Rational inv = 1 / lead;
        for (auto& [c, v] : row) v *= inv;
        pivots_.emplace(col, std::move(row));
        return true;
      }
      Rational factor = lead;
      for (const auto& [c, v] : it->second) {
        auto [pos, inserted] = row.try_emplace(c, -factor * v);
        if (!inserted) {
          pos->second -= factor * v;
          if (pos->second == 0) row.erase(pos);
        }
      }
    }
    return false;
  }
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::size_t, SparseRow> pivots_;
};

}  // namespace

std::size_t rank(std::vector<std::vector<Rational>> rows) {
  Echelon ech;
  for (auto& r : rows) {
    SparseRow s;
    for (std::size_t c = 0; c < r.size(); ++c)
      if (r[c] != 0) s.emplace(c, r[c]);
    ech.insert(std::move(s));
  }
  return ech.rank();
}

unsigned span_codimension(const std::vector<MultiPoly>& generators, unsigned degree_bound, std::size_t nvars) {
  if (degree_bound < 1) throw ComputationError("degree bound must be at least 1");
  const auto monomials = monomials_below(nvars, degree_bound);
  std::map<Exponents, std::size_t, GradedLex> column;
  for (std::size_t i = 0; i < monomials.size(); ++i) column.emplace(monomials[i], i);
  Echelon ech;
  for (const auto& g : generators) {
    if (g.variables().size() != nvars) throw ComputationError("generator over the wrong number of variables");
    SparseRow row;
    for (const auto& [e, c] : g.terms()) {
      if (total_degree(e) >= degree_bound) break;
      row.emplace(column.at(e), c);
    }
    ech.insert(std::move(row));
  }
  return static_cast<unsigned>(monomials.size() - ech.rank());
}

unsigned span_codimension(const std::vector<MultiPoly>& generators, unsigned degree_bound) {
  // Plane-curve default when there is nothing to read the variable count from.
  const std::size_t nvars = generators.empty() ? 2 : generators.front().variables().size();
  return span_codimension(generators, degree_bound, nvars);
}

std::optional<Factorization> trial_factorize(const MultiPoly& target, const std::vector<MultiPoly>& candidates) {
  if (target.is_zero()) return std::nullopt;
  Factorization f{0, std::vector<unsigned>(candidates.size(), 0)};
  MultiPoly rest = target;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (candidates[i].is_constant()) throw ComputationError("trial factor must be nonconstant");
    while (true) {
      auto q = rest.exact_divide(candidates[i]);
      if (!q) break;
      rest = std::move(*q);
      ++f.exponents[i];
    }
  }
  if (!rest.is_constant()) return std::nullopt;
  f.unit = rest.coefficient(Exponents(rest.variables().size(), 0));
  MultiPoly check = MultiPoly::constant(target.variables(), f.unit);
  for (std::size_t i = 0; i < candidates.size(); ++i) check = check * candidates[i].pow(f.exponents[i]);
  if (!(check == target)) return std::nullopt;
  return f;
}

}  // namespace hbarkit
