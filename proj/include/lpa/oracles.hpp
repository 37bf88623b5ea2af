#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lpa/leavitt.hpp"

namespace lpa {

/// Incremental row-echelon basis of a subspace spanned by elements.
/// Each stored row is normalized so its least monomial has coefficient 1,
/// and no later row contains an earlier row's leading monomial as its lead.
class SparseEchelon {
 public:
  explicit SparseEchelon(FieldSpec f) : field_(f) {}

  /// Returns true if v enlarged the span.
  bool insert(const Element& v);
  bool contains(const Element& v) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  Element reduce(Element v) const;

  FieldSpec field_;
  std::map<Monomial, Element> rows_;
};

/// FoundInSpan(bound) when found, NotFoundUpTo(bound) otherwise.
struct SpanOracleResult {
  bool found = false;
  std::size_t bound = 0;

  std::string format() const;
};

/// Span of normal_form(m1 m2 - m2 m1) over irreducible monomials m1, m2 of
/// total length <= max_len. Membership is one-sided evidence: a miss says
/// nothing beyond the bound.
class CommutatorSpanOracle {
 public:
  CommutatorSpanOracle(const LeavittContext& ctx, std::size_t max_len);

  SpanOracleResult query(const Element& x) const;
  std::size_t rank() const { return span_.rank(); }
  std::size_t max_len() const { return max_len_; }

 private:
  LeavittContext ctx_;
  std::size_t max_len_;
  SparseEchelon span_;
};

SpanOracleResult commutator_span_oracle(const LeavittContext& ctx, std::size_t max_len, const Element& x);

/// Result of a differential run against a closed-form model.
struct DifferentialReport {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
  std::string format() const;
};

/// The line graph with n vertices against n x n matrix units:
/// a monomial a b^* with s(a) = v_i, s(b) = v_k maps to E_ik.
DifferentialReport matrix_oracle_line(unsigned n, FieldSpec f, std::size_t samples = 500,
                                      std::uint64_t seed = 1);

/// The one-petal rose against Laurent polynomials: e -> t, e^* -> t^-1.
DifferentialReport laurent_oracle_rose1(FieldSpec f, std::size_t samples = 500, std::uint64_t seed = 1);

/// Facts about x = a g_w b^* - b g_w a^* on the graph a: u1 -> w,
/// b: u2 -> w, c: w -> z, with g_w = w - c c^*.
struct IdealSkewAudit {
  Element element;
  bool nonzero_in_cohn = false;
  bool in_ideal = false;
  bool skew_in_cohn = false;
  std::string printed;

  std::string format() const;
};

IdealSkewAudit audit_ideal_skew(FieldSpec f = FieldSpec::rationals());

}  // namespace lpa
