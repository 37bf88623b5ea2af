#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpa/leavitt.hpp"

namespace lpa {

/// Finitely supported vertex-indexed vector over a field; zeros not stored.
class VertexVector {
 public:
  VertexVector() = default;
  explicit VertexVector(FieldSpec f) : field_(f) {}

  FieldSpec field() const { return field_; }
  const std::map<VertexId, Scalar>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  Scalar at(VertexId v) const;

  void add(VertexId v, const Scalar& c);
  VertexVector& operator+=(const VertexVector& o);
  VertexVector& operator*=(const Scalar& s);

  friend bool operator==(const VertexVector&, const VertexVector&) = default;

 private:
  FieldSpec field_;
  std::map<VertexId, Scalar> entries_;
};

/// Integer vertex vector; zeros not stored.
using IntegerVertexVector = std::map<VertexId, long>;

/// Edge-count row of v minus the unit vector at v; zero for sinks.
IntegerVertexVector b_vector(const Graph& g, VertexId v);
/// b_vector for every vertex, in declaration order.
std::vector<IntegerVertexVector> b_vectors(const Graph& g);

/// Integer vector read in the field through the canonical ring map.
VertexVector to_field(FieldSpec f, const IntegerVertexVector& v);

/// Coefficients c with sum c_i basis_i = target, or nullopt.
std::optional<std::vector<Scalar>> span_certificate(FieldSpec f,
                                                    std::span<const IntegerVertexVector> basis,
                                                    const VertexVector& target);
bool in_span(FieldSpec f, std::span<const IntegerVertexVector> basis, const VertexVector& target);

/// Class of a nontrivial closed path under rotation, represented by its
/// lexicographically least rotation.
struct RotationClass {
  Path representative;

  friend auto operator<=>(const RotationClass&, const RotationClass&) = default;
};

/// Throws std::invalid_argument for trivial or non-closed paths.
RotationClass rotation_canonical(const Graph& g, const Path& closed);

/// Normal form routed by the shape of each monomial (real, ghost):
///   real == ghost              -> p p^*
///   ghost a proper prefix      -> x y x^*   with x = ghost, y closed
///   real a proper prefix       -> z w^* z^* with z = real,  w closed
///   otherwise                  -> q t^*
struct CommutatorDecomposition {
  struct Diagonal {
    Scalar coef;
    Path path;
  };
  struct OffDiagonal {
    Scalar coef;
    Path q;
    Path t;
  };
  struct Conjugate {
    Scalar coef;
    Path outer;
    Path loop;
  };
  std::vector<Diagonal> pp;
  std::vector<OffDiagonal> qt;
  std::map<RotationClass, std::vector<Conjugate>> xyx;
  std::map<RotationClass, std::vector<Conjugate>> zwz;

  Element reconstruct(FieldSpec f) const;
};

CommutatorDecomposition classify(const LeavittContext& ctx, const Element& x);

struct ClassSum {
  RotationClass cls;
  Scalar sum;
};

/// Outcome of the commutator-subspace test, with per-condition details.
struct CommutatorReport {
  bool member = false;
  VertexVector diagonal_vector;  ///< sum a_i e_{r(p_i)}
  bool diagonal_in_span = false;
  std::vector<ClassSum> xyx_sums;
  std::vector<ClassSum> zwz_sums;
  /// "cond1", "cond2 class=[e]" ...; empty when member.
  std::string first_failure;

  /// One verdict line followed by one line per condition.
  std::string format(const Graph& g) const;
};

CommutatorReport in_commutator(const LeavittContext& ctx, const Element& x);

/// Skew and in the commutator subspace.
bool in_skew_cap_commutator(const LeavittContext& ctx, const Element& x);

class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A skew commutator-subspace element regrouped as
///   sum a p p^* + sum b (t q^* - q t^*) + sum c (x y^* x^* - x y x^*),
/// where the p p^* part only occurs in characteristic 2.
struct SkewCommutatorForm {
  std::vector<CommutatorDecomposition::Diagonal> pp;
  std::vector<CommutatorDecomposition::OffDiagonal> qt;  ///< coef (q t^* - t q^*)
  std::map<RotationClass, std::vector<CommutatorDecomposition::Conjugate>> conjugates;
  /// Coefficients on b_vectors(g) witnessing the diagonal span condition.
  std::vector<Scalar> span_certificate;
  /// Per-class sum of the coefficients of the x y x^* terms.
  std::vector<ClassSum> class_sums;

  Element reconstruct(FieldSpec f) const;
};

/// Throws PreconditionError unless in_skew_cap_commutator(ctx, x).
SkewCommutatorForm decompose_skew_commutator(const LeavittContext& ctx, const Element& x);

/// A skew element outside the commutator subspace, re-verified through
/// is_skew_lpa and in_commutator.
struct HersteinWitness {
  Element element;
  std::string route;  ///< "cycle" or "vertex"
  bool skew = false;
  CommutatorReport report;
};

struct WitnessResult {
  std::optional<HersteinWitness> witness;
  std::string explanation;
};

WitnessResult witness_herstein(const LeavittContext& ctx);

std::string format_vector(const Graph& g, const VertexVector& v);
std::string format_vector(const Graph& g, const IntegerVertexVector& v);
std::string format_class(const Graph& g, const RotationClass& c);

}  // namespace lpa
