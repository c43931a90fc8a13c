#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "armine/contingency.hpp"
#include "armine/rules.hpp"
#include "armine/transaction_database.hpp"

namespace armine {

enum class MeasureId : std::uint8_t {
  kSupport,
  kConfidence,
  kLaplace,
  kCosine,
  kLift,
  kAddedValue,
  kPhiCorrelation,
  kConviction,
  kOddsRatio,
  kYulesQ,
  kYulesY,
  kKappa,
  kMutualInformation,
  kJMeasure,
  kGiniIndex,
  kPiatetskyShapiro,
  kCertaintyFactor,
  kCollectiveStrength,
  kJaccard,
  kKlosgen,
  kGoodmanKruskalLambda,
};

inline constexpr std::size_t kMeasureCount = 21;

struct MeasureInfo {
  MeasureId id;
  std::string_view name;  // kebab-case CLI token
  /// Value unchanged when X and Y swap (for the directed form, if any).
  bool symmetric;
  /// A rule-direction form exists beside the max-symmetrized one.
  bool directed_form;
};

const MeasureInfo& info(MeasureId id) noexcept;
std::span<const MeasureInfo> all_measures() noexcept;
std::optional<MeasureId> measure_from_name(std::string_view name) noexcept;
std::string_view name_of(MeasureId id) noexcept;

/// support, confidence, cosine, added-value, lift, correlation, conviction.
std::span<const MeasureId> core_measures() noexcept;

enum class UndefinedReason : std::uint8_t {
  kEmptyDatabase,
  kZeroDenominator,
  kDegenerateMarginal,
  kZeroOverZero,
};

std::string_view to_string(UndefinedReason reason) noexcept;

/// Result of a measure: a finite real, +infinity, or undefined with a reason.
class MeasureValue {
 public:
  enum class Kind : std::uint8_t { kDefined, kPositiveInfinity, kUndefined };

  /// Non-finite input becomes Undefined(kZeroDenominator) or +inf.
  static MeasureValue defined(double v) noexcept;
  static MeasureValue infinity() noexcept { return MeasureValue(Kind::kPositiveInfinity, 0.0, {}); }
  static MeasureValue undefined(UndefinedReason r) noexcept { return MeasureValue(Kind::kUndefined, 0.0, r); }

  Kind kind() const noexcept { return kind_; }
  bool is_defined() const noexcept { return kind_ == Kind::kDefined; }
  bool is_infinite() const noexcept { return kind_ == Kind::kPositiveInfinity; }
  bool is_undefined() const noexcept { return kind_ == Kind::kUndefined; }

  /// Only meaningful when is_defined().
  double value() const noexcept { return value_; }
  /// Only meaningful when is_undefined().
  UndefinedReason reason() const noexcept { return reason_; }

  friend bool operator==(const MeasureValue& a, const MeasureValue& b) noexcept;

 private:
  MeasureValue(Kind k, double v, UndefinedReason r) noexcept : kind_(k), value_(v), reason_(r) {}

  Kind kind_;
  double value_;
  UndefinedReason reason_;
};

/// Total order for ranking: Undefined < Defined (by value) < +infinity.
/// All Undefined values are equivalent regardless of reason.
std::weak_ordering rank_order(const MeasureValue& a, const MeasureValue& b) noexcept;

// Rule-direction measures. Each scores X => Y for ct = table(X, Y); pass
// ct.swapped() for Y => X.
MeasureValue support(const ContingencyTable& ct) noexcept;
MeasureValue confidence(const ContingencyTable& ct) noexcept;
MeasureValue cosine(const ContingencyTable& ct) noexcept;
MeasureValue cosine_angle_degrees(const ContingencyTable& ct) noexcept;
MeasureValue added_value(const ContingencyTable& ct) noexcept;
MeasureValue lift(const ContingencyTable& ct) noexcept;
MeasureValue phi_correlation(const ContingencyTable& ct) noexcept;
MeasureValue conviction(const ContingencyTable& ct) noexcept;
MeasureValue laplace(const ContingencyTable& ct) noexcept;
MeasureValue certainty_factor(const ContingencyTable& ct) noexcept;
MeasureValue j_measure(const ContingencyTable& ct) noexcept;
MeasureValue gini_index(const ContingencyTable& ct) noexcept;
MeasureValue klosgen(const ContingencyTable& ct) noexcept;

// Symmetric measures.
MeasureValue odds_ratio(const ContingencyTable& ct) noexcept;
MeasureValue yules_q(const ContingencyTable& ct) noexcept;
MeasureValue yules_y(const ContingencyTable& ct) noexcept;
MeasureValue kappa(const ContingencyTable& ct) noexcept;
MeasureValue mutual_information(const ContingencyTable& ct) noexcept;
MeasureValue piatetsky_shapiro(const ContingencyTable& ct) noexcept;
MeasureValue collective_strength(const ContingencyTable& ct) noexcept;
MeasureValue jaccard(const ContingencyTable& ct) noexcept;
MeasureValue goodman_kruskal_lambda(const ContingencyTable& ct) noexcept;

/// The catalogue form: measures with a directed variant are symmetrized as
/// max(value(X=>Y), value(Y=>X)). If either side is Undefined so is the
/// result; +infinity beats any defined value.
MeasureValue evaluate_extended(MeasureId id, const ContingencyTable& ct) noexcept;

/// Directed form where one exists, otherwise the symmetric value.
MeasureValue evaluate_directed(MeasureId id, const ContingencyTable& ct) noexcept;

struct RuleScoreCard {
  AssociationRule rule;
  ContingencyTable contingency;
  std::map<MeasureId, MeasureValue> scores;
};

RuleScoreCard score_rule(const AssociationRule& rule, const TransactionDatabase& db,
                         std::span<const MeasureId> measures);

}  // namespace armine
