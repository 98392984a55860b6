#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geodet/error.hpp"

namespace geodet {

// ---------------------------------------------------------------------------
// missing values
// ---------------------------------------------------------------------------

inline constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

inline bool is_missing(double x) { return std::isnan(x); }

// ---------------------------------------------------------------------------
// calendar
// ---------------------------------------------------------------------------

struct Date {
  int year = 0;
  int month = 0;  // 1..12
  int day = 0;    // 1..31

  auto operator<=>(const Date&) const = default;
};

struct YearMonth {
  int year = 0;
  int month = 0;  // 1..12

  auto operator<=>(const YearMonth&) const = default;

  YearMonth next() const { return month == 12 ? YearMonth{year + 1, 1} : YearMonth{year, month + 1}; }
};

bool is_leap_year(int year);
int days_in_month(int year, int month);

Date parse_date(std::string_view s);            // YYYY-MM-DD
YearMonth parse_year_month(std::string_view s);  // YYYY-MM
std::string format_date(const Date& d);
std::string format_year_month(const YearMonth& m);

// ---------------------------------------------------------------------------
// categorical keys
// ---------------------------------------------------------------------------

enum class Virus { rsv, influenza, hpiv, adv, hmpv, hbov, hcov, any };
enum class Region { north, south, all };
enum class AgeBand { y0_4, y5_64, y65_plus };
enum class Sex { male, female };

inline constexpr std::array<Virus, 8> kViruses = {Virus::rsv,  Virus::influenza, Virus::hpiv,
                                                  Virus::adv,  Virus::hmpv,      Virus::hbov,
                                                  Virus::hcov, Virus::any};
inline constexpr std::array<Region, 3> kRegions = {Region::north, Region::south, Region::all};

std::string_view to_string(Virus v);
std::string_view to_string(Region r);
std::string_view to_string(AgeBand a);
std::string_view to_string(Sex s);
std::optional<Virus> parse_virus(std::string_view s);
std::optional<Region> parse_region(std::string_view s);
std::optional<AgeBand> parse_age_band(std::string_view s);
std::optional<Sex> parse_sex(std::string_view s);

// The seven meteorological factors carried by every station/city record.
enum class Factor { temp, pressure, vapour, rain, sun, rh, wind };

inline constexpr std::array<Factor, 7> kFactors = {Factor::temp, Factor::pressure, Factor::vapour,
                                                   Factor::rain, Factor::sun,      Factor::rh,
                                                   Factor::wind};
inline constexpr int kFactorCount = 7;

std::string_view factor_id(Factor f);     // csv column id: temp, pressure, ...
std::string_view factor_label(Factor f);  // figure label: Temp, AP, VP, ...
std::optional<Factor> parse_factor(std::string_view s);
bool factor_is_summed(Factor f);  // rainfall and sunlight aggregate by sum

// ---------------------------------------------------------------------------
// records
// ---------------------------------------------------------------------------

struct StationDay {
  std::string station_id;
  double lat = 0.0;
  double lon = 0.0;
  Date date;
  std::array<double, kFactorCount> value{kMissing, kMissing, kMissing, kMissing,
                                         kMissing, kMissing, kMissing};

  double& operator[](Factor f) { return value[static_cast<int>(f)]; }
  double operator[](Factor f) const { return value[static_cast<int>(f)]; }

  // Throws Error(schema_error) naming the violated rule.
  void validate() const;
};

struct City {
  std::string id;
  double lat = 0.0;
  double lon = 0.0;
  Region region = Region::north;  // north or south; never all
};

struct CityMonth {
  std::string city_id;
  double lat = 0.0;
  double lon = 0.0;
  YearMonth month;
  std::array<double, kFactorCount> value{kMissing, kMissing, kMissing, kMissing,
                                         kMissing, kMissing, kMissing};
  std::array<double, kFactorCount> coverage{};
};

struct CaseRow {
  YearMonth month;
  std::string city_or_region;
  Virus virus = Virus::any;
  std::optional<AgeBand> age;
  std::optional<Sex> sex;
  long tested = 0;
  long positive = 0;
};

struct GroupKey {
  Virus virus = Virus::any;
  Region region = Region::all;
  std::optional<AgeBand> age;
  std::optional<Sex> sex;

  auto operator<=>(const GroupKey&) const = default;

  // stable id used in filenames and table rows, e.g. "ANY_all" or "RSV_north_0-4_male"
  std::string id() const;
};

struct OutcomeSeries {
  GroupKey key;
  std::vector<YearMonth> months;  // ascending, unique
  std::vector<long> tested;
  std::vector<long> positive;
  Eigen::VectorXd rate;  // positive/tested, kMissing where tested == 0

  void validate() const;  // counts non-negative, positive <= tested, rate consistency
};

struct FactorPanel {
  Region region = Region::all;
  std::vector<YearMonth> months;  // ascending, unique
  Eigen::MatrixXd values;         // months.size() x kFactorCount, kMissing allowed
};

// ---------------------------------------------------------------------------
// stratification & detector results
// ---------------------------------------------------------------------------

enum class StratifyMethod { equal_interval, quantile, natural_breaks, manual, overlay, labels };

std::string_view to_string(StratifyMethod m);

struct StratumAssignment {
  std::vector<int> labels;     // one per observation, values 1..l
  int l = 0;                   // stratum count; every stratum referenced
  std::vector<double> breaks;  // boundary values used (empty for categorical input)
  StratifyMethod method = StratifyMethod::labels;
  bool compacted = false;          // empty strata were removed
  bool has_small_stratum = false;  // some stratum holds < 2 observations

  // Wrap externally supplied labels; compacts to 1..l in first-appearance order.
  static StratumAssignment from_labels(const std::vector<int>& labels);

  void validate() const;
};

enum class PValueMethod { none, permutation, noncentral_f };

std::string_view to_string(PValueMethod m);

struct StratumStats {
  int count = 0;
  double mean = 0.0;
  double variance = 0.0;  // population convention
};

struct QResult {
  double q = 0.0;
  double ssw = 0.0;
  double sst = 0.0;
  int n = 0;
  int l = 0;
  std::vector<StratumStats> strata;
  std::optional<double> p_value;
  PValueMethod p_method = PValueMethod::none;
};

enum class InteractionCategory {
  nonlinear_enhance,
  bivariate_enhance,
  uni_weaken,
  nonlinear_weaken,
  independent,
};

std::string_view to_string(InteractionCategory c);

struct InteractionResult {
  double q1 = 0.0;
  double q2 = 0.0;
  double q12 = 0.0;
  InteractionCategory category = InteractionCategory::independent;
  int overlay_strata = 0;
  int singleton_strata = 0;  // overlay strata with a single observation
};

// ---------------------------------------------------------------------------
// sample validation
// ---------------------------------------------------------------------------

// Checks the (outcome, strata) pair fed to the detector: equal lengths, no
// missing outcome values, non-empty. Returns the validated pair unchanged.
std::pair<Eigen::VectorXd, StratumAssignment> validate_sample(
    const Eigen::Ref<const Eigen::VectorXd>& y, const StratumAssignment& strata);

}  // namespace geodet
