#include "qlab/fuzzy_transform.hpp"

#include <string>

#include "qlab/error.hpp"

namespace qlab {

FuzzyPartition::FuzzyPartition(int l, int n, std::vector<UnitValue> v, TNormKind k)
    : nodes(l), functions(n), values(std::move(v)), kind(k) {
  if (l < 1 || n < 1) throw Error(ErrorCode::InvalidPartition, "partition needs at least one node and one function");
  if (values.size() != static_cast<std::size_t>(l) * n) {
    throw Error(ErrorCode::DimMismatch, "partition has " + std::to_string(values.size()) + " samples, expected " +
                                            std::to_string(static_cast<std::size_t>(l) * n));
  }
}

Backend FuzzyPartition::backend() const noexcept {
  for (const auto& v : values)
    if (!v.is_exact()) return Backend::Float;
  return Backend::Exact;
}

Kernel<TNormQuantale> FuzzyPartition::kernel() const {
  return Kernel<TNormQuantale>(TNormQuantale(kind, backend()), nodes, functions, values);
}

LawReport validate_partition(const FuzzyPartition& part) {
  LawReport r;
  const int l = part.nodes, n = part.functions;
  for (int j = 0; j < l; ++j) {
    bool hit = false;
    for (int i = 0; i < n && !hit; ++i) hit = !part(j, i).is_zero();
    r.record("covering: every node has some A_i(p_j) > 0", hit, [&] { return "j=" + std::to_string(j); });
  }
  for (int i = 0; i < n; ++i) {
    bool hit = false;
    for (int j = 0; j < l && !hit; ++j) hit = !part(j, i).is_zero();
    r.record("sufficient density: every A_i is positive at some node", hit, [&] { return "i=" + std::to_string(i); });
  }
  // same conditions read off the kernel, as the transforms see them
  const auto k = part.kernel();
  for (int i = 0; i < n; ++i) {
    bool hit = false;
    for (int j = 0; j < l && !hit; ++j) hit = !k(j, i).is_zero();
    r.record("kernel: every column i has k(j,i) > 0", hit, [&] { return "i=" + std::to_string(i); });
  }
  for (int j = 0; j < l; ++j) {
    bool hit = false;
    for (int i = 0; i < n && !hit; ++i) hit = !k(j, i).is_zero();
    r.record("kernel: every row j has k(j,i) > 0", hit, [&] { return "j=" + std::to_string(j); });
  }
  return r;
}

namespace {

void require_shape(const FuzzyPartition& part, Direction dir) {
  const int l = part.nodes, n = part.functions;
  if (n < 2) throw Error(ErrorCode::InvalidPartition, "a fuzzy partition needs n >= 2 basic functions");
  if (dir == Direction::Up && !(n < l)) {
    throw Error(ErrorCode::InvalidPartition, "upper transform needs n < l, got n=" + std::to_string(n) +
                                                 ", l=" + std::to_string(l));
  }
  if (dir == Direction::Down && !(l <= n)) {
    throw Error(ErrorCode::InvalidPartition, "lower transform needs l <= n, got l=" + std::to_string(l) +
                                                 ", n=" + std::to_string(n));
  }
  const auto report = validate_partition(part);
  for (const auto& res : report.results())
    if (!res.passed) throw Error(ErrorCode::InvalidPartition, res.law + " fails at " + res.counterexample);
}

void require_length(std::span<const UnitValue> v, int expected) {
  if (static_cast<int>(v.size()) != expected) {
    throw Error(ErrorCode::IndexMismatch, "vector has length " + std::to_string(v.size()) + ", expected " +
                                              std::to_string(expected));
  }
}

}  // namespace

std::vector<UnitValue> f_transform(const FuzzyPartition& part, std::span<const UnitValue> f, Direction dir) {
  require_shape(part, dir);
  require_length(f, part.nodes);
  const TNormQuantale q(part.kind, part.backend());
  std::vector<UnitValue> out(part.functions);
  for (int k = 0; k < part.functions; ++k) {
    UnitValue acc = dir == Direction::Up ? q.bottom() : q.top();
    for (int j = 0; j < part.nodes; ++j) {
      acc = dir == Direction::Up ? q.join(acc, q.mul(part(j, k), f[j])) : q.meet(acc, q.under(part(j, k), f[j]));
    }
    out[k] = acc;
  }
  return out;
}

std::vector<UnitValue> f_inverse(const FuzzyPartition& part, std::span<const UnitValue> F, Direction dir) {
  require_shape(part, dir);
  require_length(F, part.functions);
  const TNormQuantale q(part.kind, part.backend());
  std::vector<UnitValue> out(part.nodes);
  for (int j = 0; j < part.nodes; ++j) {
    UnitValue acc = dir == Direction::Up ? q.top() : q.bottom();
    for (int k = 0; k < part.functions; ++k) {
      acc = dir == Direction::Up ? q.meet(acc, q.under(part(j, k), F[k])) : q.join(acc, q.mul(part(j, k), F[k]));
    }
    out[j] = acc;
  }
  return out;
}

}  // namespace qlab
