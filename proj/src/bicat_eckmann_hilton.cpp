#include "hck/bicat.hpp"
#include "hck/parallel.hpp"

namespace hck::bicat {

namespace {

std::string tuple_str(std::initializer_list<int> xs) {
  std::string s = "(";
  bool first = true;
  for (int x : xs) {
    if (!first) s += ", ";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

bool is_unit(const BinaryOp& op, int e) {
  for (int x = 0; x < op.n; ++x)
    if (op(e, x) != x || op(x, e) != x) return false;
  return true;
}

bool interchange_holds(const BinaryOp& o1, const BinaryOp& o2) {
  const int n = o1.n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          if (o2(o1(a, b), o1(c, d)) != o1(o2(a, c), o2(b, d))) return false;
  return true;
}

bool conclusions_hold(const BinaryOp& o1, const BinaryOp& o2, int e1, int e2) {
  if (e1 != e2 || o1.table != o2.table) return false;
  const int n = o1.n;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (o1(x, y) != o1(y, x)) return false;
      for (int z = 0; z < n; ++z)
        if (o1(o1(x, y), z) != o1(x, o1(y, z))) return false;
    }
  return true;
}

}  // namespace

EckmannHiltonReport eckmann_hilton(const BinaryOp& op1, const BinaryOp& op2, int e1, int e2) {
  const int n = op1.n;
  if (op2.n != n || op1.table.size() != static_cast<std::size_t>(n * n) || op2.table.size() != static_cast<std::size_t>(n * n))
    throw InvalidInput("operation tables must be total on one set");
  for (int v : op1.table) if (v < 0 || v >= n) throw InvalidInput("operation value out of range");
  for (int v : op2.table) if (v < 0 || v >= n) throw InvalidInput("operation value out of range");
  if (e1 < 0 || e1 >= n || e2 < 0 || e2 >= n) throw InvalidInput("unit out of range");

  EckmannHiltonReport r;
  r.units_valid = is_unit(op1, e1) && is_unit(op2, e2);
  if (!r.units_valid) r.witnesses.push_back("declared units are not two-sided units");
  r.interchange = true;
  for (int a = 0; a < n && r.interchange; ++a)
    for (int b = 0; b < n && r.interchange; ++b)
      for (int c = 0; c < n && r.interchange; ++c)
        for (int d = 0; d < n && r.interchange; ++d)
          if (op2(op1(a, b), op1(c, d)) != op1(op2(a, c), op2(b, d))) {
            r.interchange = false;
            r.witnesses.push_back("interchange fails at " + tuple_str({a, b, c, d}));
          }
  r.units_equal = e1 == e2;
  if (!r.units_equal) r.witnesses.push_back("units differ: " + std::to_string(e1) + " vs " + std::to_string(e2));
  r.ops_equal = true;
  for (int x = 0; x < n && r.ops_equal; ++x)
    for (int y = 0; y < n && r.ops_equal; ++y)
      if (op1(x, y) != op2(x, y)) {
        r.ops_equal = false;
        r.witnesses.push_back("operations differ at " + tuple_str({x, y}));
      }
  r.commutative = true;
  for (int x = 0; x < n && r.commutative; ++x)
    for (int y = 0; y < n && r.commutative; ++y)
      if (op1(x, y) != op1(y, x)) {
        r.commutative = false;
        r.witnesses.push_back("not commutative at " + tuple_str({x, y}));
      }
  r.associative = true;
  for (int x = 0; x < n && r.associative; ++x)
    for (int y = 0; y < n && r.associative; ++y)
      for (int z = 0; z < n && r.associative; ++z)
        if (op1(op1(x, y), z) != op1(x, op1(y, z))) {
          r.associative = false;
          r.witnesses.push_back("not associative at " + tuple_str({x, y, z}));
        }
  return r;
}

std::vector<std::pair<BinaryOp, int>> unital_operations(int n) {
  if (n < 1 || n > 4) throw InvalidInput("unital operations are enumerated for 1 <= n <= 4");
  std::vector<std::pair<BinaryOp, int>> out;
  for (int e = 0; e < n; ++e) {
    std::vector<std::size_t> free;
    BinaryOp op{n, std::vector<int>(static_cast<std::size_t>(n * n), 0)};
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const auto slot = static_cast<std::size_t>(x * n + y);
        if (x == e) op.table[slot] = y;
        else if (y == e) op.table[slot] = x;
        else free.push_back(slot);
      }
    // Odometer over the free entries.
    while (true) {
      out.push_back({op, e});
      std::size_t k = 0;
      while (k < free.size() && op.table[free[k]] == n - 1) op.table[free[k++]] = 0;
      if (k == free.size()) break;
      ++op.table[free[k]];
    }
  }
  return out;
}

namespace {

struct RowResult {
  std::size_t interchange = 0;
  std::vector<std::size_t> bad;  // second indices of counterexamples
};

SweepResult sweep(int n, bool parallel) {
  const auto ops = unital_operations(n);
  const auto m = static_cast<std::int64_t>(ops.size());
  auto row = [&](std::int64_t i) {
    RowResult r;
    const auto& [o1, e1] = ops[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < ops.size(); ++j) {
      const auto& [o2, e2] = ops[j];
      if (!interchange_holds(o1, o2)) continue;
      ++r.interchange;
      if (!conclusions_hold(o1, o2, e1, e2)) r.bad.push_back(j);
    }
    return r;
  };
  std::vector<RowResult> rows;
  if (parallel) {
    rows = par::map_indexed<RowResult>(m, row);
  } else {
    for (std::int64_t i = 0; i < m; ++i) rows.push_back(row(i));
  }
  SweepResult s;
  s.ops = ops.size();
  s.pairs = ops.size() * ops.size();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    s.interchange += rows[i].interchange;
    s.counterexamples += rows[i].bad.size();
    for (std::size_t j : rows[i].bad)
      if (s.first_counterexamples.size() < 10) s.first_counterexamples.push_back({i, j});
  }
  return s;
}

}  // namespace

SweepResult eckmann_hilton_sweep(int n) { return sweep(n, true); }
SweepResult eckmann_hilton_sweep_serial(int n) { return sweep(n, false); }

}  // namespace hck::bicat
