#ifndef CRR_INSTANCE_HPP
#define CRR_INSTANCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crr/bitmatrix.hpp"

namespace crr {

// Provenance of an instance: generator parameters or ingestion source.
struct InstanceMeta {
  std::optional<std::uint64_t> seed;
  std::optional<double> p;
  std::optional<double> q;
  std::string source;
};

// An (S, R) pair: does a hypergraph exist with these species and reaction
// graphs? S is n x n, R is m x m.
class CrrInstance {
 public:
  CrrInstance(BitMatrix s, BitMatrix r, InstanceMeta meta = {})
      : s_(std::move(s)), r_(std::move(r)), meta_(std::move(meta)) {
    if (!s_.is_square()) throw ShapeError("CrrInstance: S must be square");
    if (!r_.is_square()) throw ShapeError("CrrInstance: R must be square");
  }

  const BitMatrix& s() const { return s_; }
  const BitMatrix& r() const { return r_; }
  std::size_t n() const { return s_.rows(); }
  std::size_t m() const { return r_.rows(); }
  const InstanceMeta& meta() const { return meta_; }
  InstanceMeta& meta() { return meta_; }

 private:
  BitMatrix s_;
  BitMatrix r_;
  InstanceMeta meta_;
};

// A candidate factorization: E is n x m, P is m x n.
struct Reconstruction {
  BitMatrix e;
  BitMatrix p;
};

// True iff E.P = S and P.E = R under Boolean arithmetic. Shape mismatch is an
// error, never a "false".
bool verify(const CrrInstance& inst, const Reconstruction& rec);

// All reactions a with e[i][a] = p[a][j] = 1: the witnesses of cell s[i][j].
std::vector<std::size_t> witnesses_s(const CrrInstance& inst, const Reconstruction& rec,
                                     std::size_t i, std::size_t j);

}  // namespace crr

#endif
