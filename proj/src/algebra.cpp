#include "fleck/algebra.hpp"

#include <algorithm>

namespace fleck {

ResidualResult residual_from_product(const FiniteLattice& lat,
                                     const std::vector<Elem>& prod) {
  const int n = lat.size();
  ResidualResult res;
  res.arrow.assign(n * n, -1);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem acc = -1;
      for (Elem z = 0; z < n; ++z)
        if (lat.leq(prod[x * n + z], y)) acc = acc < 0 ? z : lat.join(acc, z);
      if (acc < 0) {
        res.x = x;
        res.y = y;
        return res;  // empty residual set
      }
      res.arrow[x * n + y] = acc;
    }
  // Residuation law: x*z <= y iff z <= (x -> y).
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem r = res.arrow[x * n + y];
      for (Elem z = 0; z < n; ++z)
        if (lat.leq(prod[x * n + z], y) != lat.leq(z, r)) {
          res.x = x;
          res.y = y;
          return res;
        }
    }
  res.ok = true;
  return res;
}

std::vector<Elem> FleAlgebra::neg_table() const {
  std::vector<Elem> t(size());
  for (Elem x = 0; x < size(); ++x) t[x] = neg(x);
  return t;
}

std::vector<Elem> FleAlgebra::dm_table() const {
  std::vector<Elem> t(size());
  for (Elem x = 0; x < size(); ++x) t[x] = dm(x);
  return t;
}

std::string FleAlgebra::label(Elem x) const {
  if (x >= 0 && x < static_cast<int>(labels_.size())) return labels_[x];
  return std::to_string(x);
}

FleAlgebra FleAlgebra::assemble(FiniteLattice lat, std::vector<Elem> prod,
                                Elem unit, Elem zero, std::vector<Elem> arrow,
                                std::vector<std::string> labels) {
  FleAlgebra a(std::move(lat));
  a.prod_ = std::move(prod);
  a.arrow_ = std::move(arrow);
  a.unit_ = unit;
  a.zero_ = zero;
  a.labels_ = std::move(labels);
  return a;
}

FleAlgebra FleAlgebra::with_labels(std::vector<std::string> labels) const {
  FleAlgebra a = *this;
  a.labels_ = std::move(labels);
  return a;
}

namespace {

NamedValues cell_witness(const FleAlgebra& a, Elem x, Elem y) {
  return {{"x", a.label(x)}, {"y", a.label(y)}};
}

}  // namespace

BuildResult build_algebra(FiniteLattice lat, std::vector<Elem> prod, Elem unit,
                          Elem zero, std::vector<std::string> labels,
                          const std::vector<Elem>* supplied_arrow) {
  const int n = lat.size();
  if (static_cast<int>(prod.size()) != n * n)
    throw MalformedTableError("prod table size mismatch");
  for (Elem v : prod)
    if (v < 0 || v >= n) throw MalformedTableError("prod entry out of range");
  if (unit < 0 || unit >= n) throw MalformedTableError("unit out of range");
  if (zero < 0 || zero >= n) throw MalformedTableError("zero out of range");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw MalformedTableError("labels array size mismatch");
  if (supplied_arrow && static_cast<int>(supplied_arrow->size()) != n * n)
    throw MalformedTableError("arrow table size mismatch");

  FleAlgebra probe =
      FleAlgebra::assemble(lat, prod, unit, zero, std::vector<Elem>(n * n, 0),
                           labels);

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (prod[x * n + y] != prod[y * n + x])
        return {std::nullopt,
                CheckReport::fail("commutativity", cell_witness(probe, x, y))};
  for (Elem x = 0; x < n; ++x)
    if (prod[unit * n + x] != x)
      return {std::nullopt,
              CheckReport::fail("unit", {{"x", probe.label(x)}})};
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        const Elem l = prod[prod[x * n + y] * n + z];
        const Elem r = prod[x * n + prod[y * n + z]];
        if (l != r)
          return {std::nullopt,
                  CheckReport::fail("associativity",
                                    {{"x", probe.label(x)},
                                     {"y", probe.label(y)},
                                     {"z", probe.label(z)}})};
      }

  ResidualResult res = residual_from_product(lat, prod);
  if (!res.ok)
    return {std::nullopt,
            CheckReport::fail("residuation", cell_witness(probe, res.x, res.y),
                              {}, "residual set empty or law violated")};
  if (supplied_arrow)
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if ((*supplied_arrow)[x * n + y] != res.arrow[x * n + y])
          return {std::nullopt,
                  CheckReport::fail(
                      "residuation", cell_witness(probe, x, y), {},
                      "supplied arrow disagrees with the derived residual")};

  FleAlgebra a = FleAlgebra::assemble(std::move(lat), std::move(prod), unit,
                                      zero, std::move(res.arrow),
                                      std::move(labels));
  return {std::move(a), CheckReport::ok("fle-algebra")};
}

FleAlgebra FleAlgebra::make(FiniteLattice lat, std::vector<Elem> prod,
                            Elem unit, Elem zero,
                            std::vector<std::string> labels) {
  BuildResult r = build_algebra(std::move(lat), std::move(prod), unit, zero,
                                std::move(labels));
  if (!r.algebra)
    throw Error("algebra rejected: " + r.report.rule);
  return *std::move(r.algebra);
}

CheckReport validate(const FleAlgebra& a) {
  BuildResult r = build_algebra(a.lattice(), a.prod_table(), a.unit(),
                                a.zero(), a.labels(), &a.arrow_table());
  return r.report;
}

UnaryMap UnaryMap::analyze(const FleAlgebra& a, std::vector<Elem> table) {
  const int n = a.size();
  if (static_cast<int>(table.size()) != n)
    throw MalformedTableError("unary table size mismatch");
  for (Elem v : table)
    if (v < 0 || v >= n) throw MalformedTableError("unary entry out of range");
  UnaryMap m;
  m.table = std::move(table);
  m.is_increasing = true;
  m.is_monotone = true;
  m.is_idempotent = true;
  for (Elem x = 0; x < n; ++x) {
    if (!a.leq(x, m.table[x])) m.is_increasing = false;
    if (m.table[m.table[x]] != m.table[x]) m.is_idempotent = false;
    for (Elem y = 0; y < n; ++y)
      if (a.leq(x, y) && !a.leq(m.table[x], m.table[y])) m.is_monotone = false;
  }
  m.is_nucleus = m.is_increasing && m.is_monotone && m.is_idempotent;
  if (m.is_nucleus)
    for (Elem x = 0; x < n && m.is_nucleus; ++x)
      for (Elem y = 0; y < n; ++y)
        if (!a.leq(a.prod(m.table[x], m.table[y]), m.table[a.prod(x, y)])) {
          m.is_nucleus = false;
          break;
        }
  return m;
}

UnaryMap dm_map(const FleAlgebra& a) {
  return UnaryMap::analyze(a, a.dm_table());
}

FleAlgebra nucleus_image(const FleAlgebra& a, const UnaryMap& g) {
  if (!g.is_nucleus)
    throw PreconditionError("nucleus_image: map is not a nucleus");
  const int n = a.size();
  std::vector<Elem> closed;
  std::vector<int> newidx(n, -1);
  for (Elem x = 0; x < n; ++x)
    if (g(x) == x) {
      newidx[x] = static_cast<int>(closed.size());
      closed.push_back(x);
    }
  const int m = static_cast<int>(closed.size());
  std::vector<std::uint8_t> leq(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      leq[i * m + j] = a.leq(closed[i], closed[j]) ? 1 : 0;
  std::vector<Elem> prod(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      prod[i * m + j] = newidx[g(a.prod(closed[i], closed[j]))];
  std::vector<std::string> labels;
  if (!a.labels().empty())
    for (Elem x : closed) labels.push_back(a.label(x));
  BuildResult r = build_algebra(FiniteLattice::from_leq(m, std::move(leq)),
                                std::move(prod), newidx[g(a.unit())],
                                newidx[g(a.zero())], std::move(labels));
  if (!r.algebra)
    throw Error("nucleus image failed validation: " + r.report.rule);
  return *std::move(r.algebra);
}

}  // namespace fleck
