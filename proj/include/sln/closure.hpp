#ifndef SLN_CLOSURE_HPP
#define SLN_CLOSURE_HPP

#include <deque>
#include <vector>

#include "sln/matrices.hpp"

namespace sln {

/// Basis of the Lie subalgebra generated by a set of traceless matrices,
/// together with the reduced coordinate matrix certifying independence.
template <class S>
struct ClosureBasis {
  std::vector<MatrixOf<S>> generators;
  std::vector<MatrixOf<S>> basis;  // linearly independent, reduced coordinates
  MatrixOf<S> coords;              // RREF rows of basis in the matrix-unit basis
  std::vector<Index> pivots;
  Index dim = 0;
  Index n = 0;

  bool spans_sln() const { return dim == n * n - 1; }
};

namespace detail {

template <class S>
void check_generators(const std::vector<MatrixOf<S>>& gens) {
  if (gens.empty()) throw EmptyGenerators();
  const Index n = gens.front().rows();
  for (const auto& g : gens) {
    require_square(g);
    if (g.rows() != n) throw DimensionMismatch("generators have mixed dimensions");
    if (!is_zero(trace(g))) throw NotTraceless();
  }
  if constexpr (std::is_same_v<S, Fp>) {
    std::int64_t p = 0;
    for (const auto& g : gens)
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
          if (g(i, j).bound()) {
            if (p == 0) p = g(i, j).modulus();
            if (g(i, j).modulus() != p) throw FieldMismatch();
          }
  }
}

}  // namespace detail

/// Smallest subspace containing the generators and closed under bracketing
/// with each of them; by the Jacobi identity this is the generated
/// subalgebra. Worklist over reduced representatives, FIFO order, so closures
/// are reproducible. Traceless generators cap the dimension at n^2 - 1, and
/// reaching the cap means the span is all of sl_n, so the worklist can stop
/// early: further brackets are traceless and already contained.
template <class S>
ClosureBasis<S> generated_subalgebra(const std::vector<MatrixOf<S>>& gens) {
  detail::check_generators(gens);
  const Index n = gens.front().rows();
  const Index cap = n * n - 1;

  ClosureBasis<S> out;
  out.generators = gens;
  out.n = n;

  RrefAccumulator<S> acc(n * n);
  std::deque<MatrixOf<S>> worklist;

  auto try_add = [&](const MatrixOf<S>& m) {
    if (acc.rank() >= cap) return;
    if (auto row = acc.insert(flatten(m))) worklist.push_back(unflatten(*row, n));
  };

  for (const auto& g : gens) try_add(g);

  while (!worklist.empty() && acc.rank() < cap) {
    const MatrixOf<S> element = std::move(worklist.front());
    worklist.pop_front();
    for (const auto& g : gens) {
      // the element was reduced on insertion, which keeps entries small
      try_add(bracket(g, element));
    }
  }

  for (const auto& row : acc.reduced_rows()) out.basis.push_back(unflatten(row, n));
  out.coords = acc.matrix();
  out.pivots = acc.pivot_columns();
  out.dim = acc.rank();
  return out;
}

template <class S>
bool generates_sln(const std::vector<MatrixOf<S>>& gens) {
  return generated_subalgebra(gens).spans_sln();
}

/// Span membership against the closure's coordinate matrix.
template <class S>
bool in_span(const ClosureBasis<S>& cb, const MatrixOf<S>& m) {
  RrefAccumulator<S> acc(cb.n * cb.n);
  for (const auto& b : cb.basis) acc.insert(flatten(b));
  return acc.contains(flatten(m));
}

/// Certifies that the computed span really is a subalgebra: every pairwise
/// bracket of basis elements must reduce to zero against the coordinate
/// matrix. This is the independent check that the left-normed worklist
/// enumeration saw enough brackets.
template <class S>
bool audit_bracket_closure(const ClosureBasis<S>& cb) {
  RrefAccumulator<S> acc(cb.n * cb.n);
  for (const auto& b : cb.basis) acc.insert(flatten(b));
  for (std::size_t i = 0; i < cb.basis.size(); ++i)
    for (std::size_t j = i + 1; j < cb.basis.size(); ++j)
      if (!acc.contains(flatten(MatrixOf<S>(bracket(cb.basis[i], cb.basis[j])))))
        return false;
  return true;
}

}  // namespace sln

#endif  // SLN_CLOSURE_HPP
