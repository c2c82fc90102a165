#pragma once

// Binary relations between finite carriers as dense bit matrices.  The
// composite of R: A -> B with S: B -> C is written SR, i.e. R acts first.

#include <cstdint>
#include <utility>
#include <vector>

#include "ua/hom.hpp"

namespace ua {

class BinRel {
 public:
  BinRel(int src_size, int tgt_size);  // empty relation

  static BinRel identity(int n);
  static BinRel full(int src_size, int tgt_size);
  static BinRel from_pairs(int src_size, int tgt_size,
                           const std::vector<std::pair<int, int>>& pairs);

  int src_size() const { return src_; }
  int tgt_size() const { return tgt_; }
  int words() const { return words_; }

  bool at(int a, int b) const {
    return (bits_[static_cast<size_t>(a) * words_ + (b >> 6)] >> (b & 63)) & 1u;
  }
  void set(int a, int b) {
    bits_[static_cast<size_t>(a) * words_ + (b >> 6)] |= uint64_t{1} << (b & 63);
  }

  const uint64_t* row(int a) const { return bits_.data() + static_cast<size_t>(a) * words_; }
  uint64_t* row(int a) { return bits_.data() + static_cast<size_t>(a) * words_; }

  int64_t count() const;
  std::vector<std::pair<int, int>> pairs() const;

  bool square() const { return src_ == tgt_; }
  bool reflexive() const;
  bool symmetric() const;
  bool transitive() const;
  bool is_equivalence() const { return square() && reflexive() && symmetric() && transitive(); }

  friend bool operator==(const BinRel& a, const BinRel& b) {
    return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.bits_ == b.bits_;
  }

 private:
  int src_, tgt_, words_;
  std::vector<uint64_t> bits_;
};

BinRel of_hom(const Homomorphism& f);     // graph of f
BinRel of_hom_op(const Homomorphism& f);  // transpose of the graph

BinRel opposite(const BinRel& r);

// compose(R: A->B, S: B->C) = SR : A->C
BinRel compose(const BinRel& r, const BinRel& s);

BinRel rel_meet(const BinRel& r, const BinRel& s);
BinRel rel_union(const BinRel& r, const BinRel& s);
bool rel_leq(const BinRel& r, const BinRel& s);
BinRel transitive_closure(const BinRel& r);
// least equivalence relation containing both (inputs must be equivalences)
BinRel eq_join(const BinRel& r, const BinRel& s);

// image of a relation on the source along f, i.e. f R f°
BinRel rel_image(const Homomorphism& f, const BinRel& r);

struct Lemma21Report {
  bool law1 = false;     // f f° f = f
  bool law2 = false;     // f° f f° = f°
  bool epi_iff = false;  // (f f° = 1) <=> f surjective
  bool surjective = false;
  bool ok() const { return law1 && law2 && epi_iff; }
};
Lemma21Report verify_lemma21(const Homomorphism& f);

}  // namespace ua
