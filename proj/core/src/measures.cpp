#include "armine/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace armine {
namespace {

using Wide = unsigned __int128;
using SignedWide = __int128;

constexpr std::array<MeasureInfo, kMeasureCount> kCatalogue{{
    {MeasureId::kSupport, "support", true, false},
    {MeasureId::kConfidence, "confidence", false, true},
    {MeasureId::kLaplace, "laplace", false, true},
    {MeasureId::kCosine, "cosine", true, false},
    {MeasureId::kLift, "lift", true, false},
    {MeasureId::kAddedValue, "added-value", false, true},
    {MeasureId::kPhiCorrelation, "correlation", true, false},
    {MeasureId::kConviction, "conviction", false, true},
    {MeasureId::kOddsRatio, "odds-ratio", true, false},
    {MeasureId::kYulesQ, "yules-q", true, false},
    {MeasureId::kYulesY, "yules-y", true, false},
    {MeasureId::kKappa, "kappa", true, false},
    {MeasureId::kMutualInformation, "mutual-information", true, false},
    {MeasureId::kJMeasure, "j-measure", false, true},
    {MeasureId::kGiniIndex, "gini-index", false, true},
    {MeasureId::kPiatetskyShapiro, "piatetsky-shapiro", true, false},
    {MeasureId::kCertaintyFactor, "certainty-factor", false, true},
    {MeasureId::kCollectiveStrength, "collective-strength", true, false},
    {MeasureId::kJaccard, "jaccard", true, false},
    {MeasureId::kKlosgen, "klosgen", false, true},
    {MeasureId::kGoodmanKruskalLambda, "goodman-kruskal", true, false},
}};

constexpr std::array<MeasureId, 7> kCore{
    MeasureId::kSupport,    MeasureId::kConfidence,     MeasureId::kCosine,
    MeasureId::kAddedValue, MeasureId::kLift,           MeasureId::kPhiCorrelation,
    MeasureId::kConviction,
};

double to_double(Wide v) noexcept { return static_cast<double>(v); }
double to_double(SignedWide v) noexcept { return static_cast<double>(v); }

Wide mul(std::uint64_t a, std::uint64_t b) noexcept { return Wide{a} * b; }

/// a*d - b*c, which equals n11*n - count_x*count_y.
SignedWide cross(const ContingencyTable& ct) noexcept {
  return static_cast<SignedWide>(mul(ct.n11, ct.n00)) - static_cast<SignedWide>(mul(ct.n10, ct.n01));
}

/// count_x*count_y + (n-count_x)*(n-count_y): n^2 times the agreement expected by chance.
Wide chance_agreement(const ContingencyTable& ct) noexcept {
  const auto n = ct.n();
  return mul(ct.count_x(), ct.count_y()) + mul(n - ct.count_x(), n - ct.count_y());
}

/// (k/n) * log2(k*n / (r*s)), with 0 log 0 = 0.
double info_term(std::uint64_t k, std::uint64_t n, std::uint64_t r, std::uint64_t s) noexcept {
  if (k == 0) return 0.0;
  return static_cast<double>(k) / static_cast<double>(n) *
         std::log2(to_double(mul(k, n)) / to_double(mul(r, s)));
}

double entropy(std::uint64_t r, std::uint64_t n) noexcept {
  const auto h = [n](std::uint64_t k) {
    if (k == 0) return 0.0;
    const double p = static_cast<double>(k) / static_cast<double>(n);
    return -p * std::log2(p);
  };
  return h(r) + h(n - r);
}

double square_ratio(std::uint64_t a, std::uint64_t b, std::uint64_t weight, std::uint64_t n) {
  if (weight == 0) return 0.0;
  return to_double(mul(a, a) + mul(b, b)) / to_double(mul(weight, n));
}

const MeasureValue kEmpty = MeasureValue::undefined(UndefinedReason::kEmptyDatabase);
const MeasureValue kZeroDen = MeasureValue::undefined(UndefinedReason::kZeroDenominator);
const MeasureValue kDegenerate = MeasureValue::undefined(UndefinedReason::kDegenerateMarginal);
const MeasureValue kZeroOverZero = MeasureValue::undefined(UndefinedReason::kZeroOverZero);

MeasureValue ratio_or_infinity(Wide num, Wide den) noexcept {
  if (den == 0) return num == 0 ? kZeroOverZero : MeasureValue::infinity();
  return MeasureValue::defined(to_double(num) / to_double(den));
}

using MeasureFn = MeasureValue (*)(const ContingencyTable&) noexcept;

MeasureValue symmetrized(MeasureFn fn, const ContingencyTable& ct) noexcept {
  const auto forward = fn(ct);
  const auto backward = fn(ct.swapped());
  if (forward.is_undefined()) return forward;
  if (backward.is_undefined()) return backward;
  if (forward.is_infinite() || backward.is_infinite()) return MeasureValue::infinity();
  return MeasureValue::defined(std::max(forward.value(), backward.value()));
}

MeasureFn function_of(MeasureId id) noexcept {
  switch (id) {
    case MeasureId::kSupport: return support;
    case MeasureId::kConfidence: return confidence;
    case MeasureId::kLaplace: return laplace;
    case MeasureId::kCosine: return cosine;
    case MeasureId::kLift: return lift;
    case MeasureId::kAddedValue: return added_value;
    case MeasureId::kPhiCorrelation: return phi_correlation;
    case MeasureId::kConviction: return conviction;
    case MeasureId::kOddsRatio: return odds_ratio;
    case MeasureId::kYulesQ: return yules_q;
    case MeasureId::kYulesY: return yules_y;
    case MeasureId::kKappa: return kappa;
    case MeasureId::kMutualInformation: return mutual_information;
    case MeasureId::kJMeasure: return j_measure;
    case MeasureId::kGiniIndex: return gini_index;
    case MeasureId::kPiatetskyShapiro: return piatetsky_shapiro;
    case MeasureId::kCertaintyFactor: return certainty_factor;
    case MeasureId::kCollectiveStrength: return collective_strength;
    case MeasureId::kJaccard: return jaccard;
    case MeasureId::kKlosgen: return klosgen;
    case MeasureId::kGoodmanKruskalLambda: return goodman_kruskal_lambda;
  }
  return support;
}

}  // namespace

const MeasureInfo& info(MeasureId id) noexcept { return kCatalogue[static_cast<std::size_t>(id)]; }

std::span<const MeasureInfo> all_measures() noexcept { return kCatalogue; }

std::span<const MeasureId> core_measures() noexcept { return kCore; }

std::optional<MeasureId> measure_from_name(std::string_view name) noexcept {
  for (const auto& m : kCatalogue) {
    if (m.name == name) return m.id;
  }
  return std::nullopt;
}

std::string_view name_of(MeasureId id) noexcept { return info(id).name; }

std::string_view to_string(UndefinedReason reason) noexcept {
  switch (reason) {
    case UndefinedReason::kEmptyDatabase: return "empty-database";
    case UndefinedReason::kZeroDenominator: return "zero-denominator";
    case UndefinedReason::kDegenerateMarginal: return "degenerate-marginal";
    case UndefinedReason::kZeroOverZero: return "zero-over-zero";
  }
  return "unknown";
}

MeasureValue MeasureValue::defined(double v) noexcept {
  if (std::isnan(v)) return undefined(UndefinedReason::kZeroDenominator);
  if (std::isinf(v)) return v > 0 ? infinity() : undefined(UndefinedReason::kZeroDenominator);
  return MeasureValue(Kind::kDefined, v, {});
}

bool operator==(const MeasureValue& a, const MeasureValue& b) noexcept {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case MeasureValue::Kind::kDefined: return a.value_ == b.value_;
    case MeasureValue::Kind::kUndefined: return a.reason_ == b.reason_;
    case MeasureValue::Kind::kPositiveInfinity: return true;
  }
  return false;
}

std::weak_ordering rank_order(const MeasureValue& a, const MeasureValue& b) noexcept {
  const auto tier = [](const MeasureValue& v) {
    switch (v.kind()) {
      case MeasureValue::Kind::kUndefined: return 0;
      case MeasureValue::Kind::kDefined: return 1;
      case MeasureValue::Kind::kPositiveInfinity: return 2;
    }
    return 0;
  };
  if (const auto c = tier(a) <=> tier(b); c != 0) return c;
  if (!a.is_defined()) return std::weak_ordering::equivalent;
  if (a.value() < b.value()) return std::weak_ordering::less;
  if (b.value() < a.value()) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

// --- rule-direction measures ------------------------------------------------

MeasureValue support(const ContingencyTable& ct) noexcept {
  if (ct.n() == 0) return kEmpty;
  return MeasureValue::defined(static_cast<double>(ct.n11) / static_cast<double>(ct.n()));
}

MeasureValue confidence(const ContingencyTable& ct) noexcept {
  if (ct.n() == 0) return kEmpty;
  if (ct.count_x() == 0) return kZeroDen;
  return MeasureValue::defined(static_cast<double>(ct.n11) / static_cast<double>(ct.count_x()));
}

// Depends on n11 and the two marginal counts only, so rows holding neither
// X nor Y cannot change it.
MeasureValue cosine(const ContingencyTable& ct) noexcept {
  if (ct.n() == 0) return kEmpty;
  if (ct.count_x() == 0 || ct.count_y() == 0) return kDegenerate;
  const double v = static_cast<double>(ct.n11) / std::sqrt(to_double(mul(ct.count_x(), ct.count_y())));
  return MeasureValue::defined(std::min(v, 1.0));
}

MeasureValue cosine_angle_degrees(const ContingencyTable& ct) noexcept {
  const auto c = cosine(ct);
  if (!c.is_defined()) return c;
  return MeasureValue::defined(std::acos(std::clamp(c.value(), -1.0, 1.0)) * 180.0 /
                               std::numbers::pi);
}

MeasureValue added_value(const ContingencyTable& ct) noexcept {
  if (ct.n() == 0) return kEmpty;
  if (ct.count_x() == 0) return kZeroDen;
  return MeasureValue::defined(to_double(cross(ct)) / to_double(mul(ct.count_x(), ct.n())));
}

MeasureValue lift(const ContingencyTable& ct) noexcept {
  if (ct.n() == 0) return kEmpty;
  if (ct.count_x() == 0 || ct.count_y() == 0) return kDegenerate;
  return MeasureValue::defined(to_double(mul(ct.n11, ct.n())) /
                               to_double(mul(ct.count_x(), ct.count_y())));
}

MeasureValue phi_correlation(const ContingencyTable& ct) noexcept {
  const auto n = ct.n();
  if (n == 0) return kEmpty;
  const auto x = ct.count_x();
  const auto y = ct.count_y();
  if (x == 0 || y == 0 || x == n || y == n) return kDegenerate;
  const double den = std::sqrt(to_double(mul(x, y)) * to_double(mul(n - x, n - y)));
  return MeasureValue::defined(std::clamp(to_double(cross(ct)) / den, -1.0, 1.0));
}

MeasureValue conviction(const ContingencyTable& ct) noexcept {
  const auto n = ct.n();
  if (n == 0) return kEmpty;
  if (ct.count_x() == 0) return kZeroDen;
  if (ct.n10 == 0) {
    // Confidence 1: infinite unless Y is in every transaction as well.
    return ct.count_y() == n ? kZeroOverZero : MeasureValue::infinity();
  }
  return MeasureValue::defined(to_double(mul(ct.count_x(), n - ct.count_y())) /
                               to_double(mul(n, ct.n10)));
}

MeasureValue laplace(const ContingencyTable& ct) noexcept {
  if (ct.n() == 0) return kEmpty;
  return MeasureValue::defined(static_cast<double>(ct.n11 + 1) /
                               static_cast<double>(ct.count_x() + 2));
}

MeasureValue certainty_factor(const ContingencyTable& ct) noexcept {
  const auto n = ct.n();
  if (n == 0) return kEmpty;
  if (ct.count_x() == 0) return kZeroDen;
  if (ct.count_y() == n) return kDegenerate;
  return MeasureValue::defined(to_double(cross(ct)) / to_double(mul(ct.count_x(), n - ct.count_y())));
}

MeasureValue j_measure(const ContingencyTable& ct) noexcept {
  const auto n = ct.n();
  if (n == 0) return kEmpty;
  if (ct.count_x() == 0) return kZeroDen;
  return MeasureValue::defined(info_term(ct.n11, n, ct.count_x(), ct.count_y()) +
                               info_term(ct.n10, n, ct.count_x(), n - ct.count_y()));
}

MeasureValue gini_index(const ContingencyTable& ct) noexcept {
  const auto n = ct.n();
  if (n == 0) return kEmpty;
  const auto x = ct.count_x();
  const auto y = ct.count_y();
  const double within = square_ratio(ct.n11, ct.n10, x, n) + square_ratio(ct.n01, ct.n00, n - x, n);
  const double base = to_double(mul(y, y) + mul(n - y, n - y)) / to_double(mul(n, n));
  return MeasureValue::defined(within - base);
}

MeasureValue klosgen(const ContingencyTable& ct) noexcept {
  const auto av = added_value(ct);
  if (!av.is_defined()) return av;
  return MeasureValue::defined(std::sqrt(ct.p_xy()) * av.value());
}

// --- symmetric measures -----------------------------------------------------

MeasureValue odds_ratio(const ContingencyTable& ct) noexcept {
  if (ct.n() == 0) return kEmpty;
  return ratio_or_infinity(mul(ct.n11, ct.n00), mul(ct.n10, ct.n01));
}

MeasureValue yules_q(const ContingencyTable& ct) noexcept {
  if (ct.n() == 0) return kEmpty;
  const auto agree = mul(ct.n11, ct.n00);
  const auto disagree = mul(ct.n10, ct.n01);
  if (agree + disagree == 0) return kZeroOverZero;
  return MeasureValue::defined(to_double(cross(ct)) / to_double(agree + disagree));
}

MeasureValue yules_y(const ContingencyTable& ct) noexcept {
  if (ct.n() == 0) return kEmpty;
  const double agree = std::sqrt(to_double(mul(ct.n11, ct.n00)));
  const double disagree = std::sqrt(to_double(mul(ct.n10, ct.n01)));
  if (agree + disagree == 0.0) return kZeroOverZero;
  return MeasureValue::defined((agree - disagree) / (agree + disagree));
}

MeasureValue kappa(const ContingencyTable& ct) noexcept {
  const auto n = ct.n();
  if (n == 0) return kEmpty;
  const auto chance = chance_agreement(ct);
  const auto total = mul(n, n);
  if (total == chance) return kZeroDen;
  const auto observed = static_cast<SignedWide>(Wide{ct.n11 + ct.n00} * n);
  return MeasureValue::defined(to_double(observed - static_cast<SignedWide>(chance)) /
                               to_double(total - chance));
}

MeasureValue mutual_information(const ContingencyTable& ct) noexcept {
  const auto n = ct.n();
  if (n == 0) return kEmpty;
  const auto x = ct.count_x();
  const auto y = ct.count_y();
  if (x == 0 || y == 0 || x == n || y == n) return kDegenerate;
  // Off-diagonal cells are added together first so a transposed table sums
  // identically.
  const double diagonal = info_term(ct.n11, n, x, y) + info_term(ct.n00, n, n - x, n - y);
  const double off = info_term(ct.n10, n, x, n - y) + info_term(ct.n01, n, n - x, y);
  return MeasureValue::defined((diagonal + off) / std::min(entropy(x, n), entropy(y, n)));
}

MeasureValue piatetsky_shapiro(const ContingencyTable& ct) noexcept {
  const auto n = ct.n();
  if (n == 0) return kEmpty;
  return MeasureValue::defined(to_double(cross(ct)) / to_double(mul(n, n)));
}

MeasureValue collective_strength(const ContingencyTable& ct) noexcept {
  const auto n = ct.n();
  if (n == 0) return kEmpty;
  const auto chance = chance_agreement(ct);
  const Wide num = Wide{ct.n11 + ct.n00} * (mul(n, n) - chance);
  const Wide den = chance * (ct.n10 + ct.n01);
  return ratio_or_infinity(num, den);
}

MeasureValue jaccard(const ContingencyTable& ct) noexcept {
  if (ct.n() == 0) return kEmpty;
  const auto den = ct.n11 + ct.n10 + ct.n01;
  if (den == 0) return kDegenerate;
  return MeasureValue::defined(static_cast<double>(ct.n11) / static_cast<double>(den));
}

MeasureValue goodman_kruskal_lambda(const ContingencyTable& ct) noexcept {
  const auto n = ct.n();
  if (n == 0) return kEmpty;
  const auto x = ct.count_x();
  const auto y = ct.count_y();
  const auto best_x = std::max(x, n - x);
  const auto best_y = std::max(y, n - y);
  const Wide rows = Wide{std::max(ct.n11, ct.n10)} + std::max(ct.n01, ct.n00);
  const Wide cols = Wide{std::max(ct.n11, ct.n01)} + std::max(ct.n10, ct.n00);
  const Wide den = Wide{2} * n - best_x - best_y;
  if (den == 0) return kDegenerate;
  const auto num = static_cast<SignedWide>(rows + cols) - static_cast<SignedWide>(Wide{best_x} + best_y);
  return MeasureValue::defined(to_double(num) / to_double(den));
}

// --- dispatch -----------------------------------------------------------------

MeasureValue evaluate_extended(MeasureId id, const ContingencyTable& ct) noexcept {
  const auto fn = function_of(id);
  return info(id).directed_form ? symmetrized(fn, ct) : fn(ct);
}

MeasureValue evaluate_directed(MeasureId id, const ContingencyTable& ct) noexcept {
  return function_of(id)(ct);
}

RuleScoreCard score_rule(const AssociationRule& rule, const TransactionDatabase& db,
                         std::span<const MeasureId> measures) {
  RuleScoreCard card{rule, db.contingency_of(rule.antecedent(), rule.consequent()), {}};
  for (const auto id : measures) card.scores.insert_or_assign(id, evaluate_directed(id, card.contingency));
  return card;
}

}  // namespace armine
