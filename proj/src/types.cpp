#include "geodet/types.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>

namespace geodet {

bool is_leap_year(int year) {
  return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month) {
  static constexpr int days[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month < 1 || month > 12) raise(errc::schema_error, "month out of range: " + std::to_string(month));
  if (month == 2 && is_leap_year(year)) return 29;
  return days[month - 1];
}

namespace {

int parse_int_field(std::string_view s, std::string_view what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    raise(errc::schema_error, "bad " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Date parse_date(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') {
    raise(errc::schema_error, "bad date (want YYYY-MM-DD): '" + std::string(s) + "'");
  }
  Date d{parse_int_field(s.substr(0, 4), "year"), parse_int_field(s.substr(5, 2), "month"),
         parse_int_field(s.substr(8, 2), "day")};
  if (d.month < 1 || d.month > 12 || d.day < 1 || d.day > days_in_month(d.year, d.month)) {
    raise(errc::schema_error, "invalid calendar date: '" + std::string(s) + "'");
  }
  return d;
}

YearMonth parse_year_month(std::string_view s) {
  if (s.size() != 7 || s[4] != '-') {
    raise(errc::schema_error, "bad month (want YYYY-MM): '" + std::string(s) + "'");
  }
  YearMonth m{parse_int_field(s.substr(0, 4), "year"), parse_int_field(s.substr(5, 2), "month")};
  if (m.month < 1 || m.month > 12) {
    raise(errc::schema_error, "invalid month: '" + std::string(s) + "'");
  }
  return m;
}

std::string format_date(const Date& d) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", d.year, d.month, d.day);
  return buf;
}

std::string format_year_month(const YearMonth& m) {
  char buf[12];
  std::snprintf(buf, sizeof buf, "%04d-%02d", m.year, m.month);
  return buf;
}

std::string_view errc_name(errc code) {
  switch (code) {
    case errc::length_mismatch: return "LengthMismatch";
    case errc::missing_outcome: return "MissingOutcome";
    case errc::empty_input: return "EmptyInput";
    case errc::degenerate_range: return "DegenerateRange";
    case errc::bad_l: return "BadL";
    case errc::unsorted_breaks: return "UnsortedBreaks";
    case errc::zero_variance: return "ZeroVariance";
    case errc::bad_perm_count: return "BadPermCount";
    case errc::bad_degrees_of_freedom: return "BadDegreesOfFreedom";
    case errc::out_of_range: return "OutOfRange";
    case errc::out_of_range_coordinate: return "OutOfRangeCoordinate";
    case errc::no_stations: return "NoStations";
    case errc::mixed_months: return "MixedMonths";
    case errc::positive_exceeds_tested: return "PositiveExceedsTested";
    case errc::empty_region: return "EmptyRegion";
    case errc::too_few_observations: return "TooFewObservations";
    case errc::bad_spec: return "BadSpec";
    case errc::schema_error: return "SchemaError";
    case errc::config_error: return "ConfigError";
    case errc::io_error: return "IoError";
  }
  return "Error";
}

std::string_view to_string(Virus v) {
  switch (v) {
    case Virus::rsv: return "RSV";
    case Virus::influenza: return "influenza";
    case Virus::hpiv: return "hPIV";
    case Virus::adv: return "ADV";
    case Virus::hmpv: return "hMPV";
    case Virus::hbov: return "hBoV";
    case Virus::hcov: return "hCoV";
    case Virus::any: return "ANY";
  }
  return "?";
}

std::string_view to_string(Region r) {
  switch (r) {
    case Region::north: return "north";
    case Region::south: return "south";
    case Region::all: return "all";
  }
  return "?";
}

std::string_view to_string(AgeBand a) {
  switch (a) {
    case AgeBand::y0_4: return "0-4";
    case AgeBand::y5_64: return "5-64";
    case AgeBand::y65_plus: return "65+";
  }
  return "?";
}

std::string_view to_string(Sex s) { return s == Sex::male ? "male" : "female"; }

std::optional<Virus> parse_virus(std::string_view s) {
  for (Virus v : kViruses) {
    if (s == to_string(v)) return v;
  }
  return std::nullopt;
}

std::optional<Region> parse_region(std::string_view s) {
  for (Region r : kRegions) {
    if (s == to_string(r)) return r;
  }
  return std::nullopt;
}

std::optional<AgeBand> parse_age_band(std::string_view s) {
  for (AgeBand a : {AgeBand::y0_4, AgeBand::y5_64, AgeBand::y65_plus}) {
    if (s == to_string(a)) return a;
  }
  return std::nullopt;
}

std::optional<Sex> parse_sex(std::string_view s) {
  if (s == "male") return Sex::male;
  if (s == "female") return Sex::female;
  return std::nullopt;
}

std::string_view factor_id(Factor f) {
  switch (f) {
    case Factor::temp: return "temp";
    case Factor::pressure: return "pressure";
    case Factor::vapour: return "vapour";
    case Factor::rain: return "rain";
    case Factor::sun: return "sun";
    case Factor::rh: return "rh";
    case Factor::wind: return "wind";
  }
  return "?";
}

std::string_view factor_label(Factor f) {
  switch (f) {
    case Factor::temp: return "Temp";
    case Factor::pressure: return "AP";
    case Factor::vapour: return "VP";
    case Factor::rain: return "Rain";
    case Factor::sun: return "Sun";
    case Factor::rh: return "Humidity";
    case Factor::wind: return "Wind";
  }
  return "?";
}

std::optional<Factor> parse_factor(std::string_view s) {
  for (Factor f : kFactors) {
    if (s == factor_id(f)) return f;
  }
  return std::nullopt;
}

bool factor_is_summed(Factor f) { return f == Factor::rain || f == Factor::sun; }

void StationDay::validate() const {
  if (lat < -90.0 || lat > 90.0) raise(errc::schema_error, "lat out of range [-90,90]");
  if (lon < -180.0 || lon > 180.0) raise(errc::schema_error, "lon out of range [-180,180]");
  const double rain = (*this)[Factor::rain];
  if (!is_missing(rain) && rain < 0) raise(errc::schema_error, "rain must be >= 0");
  const double wind = (*this)[Factor::wind];
  if (!is_missing(wind) && wind < 0) raise(errc::schema_error, "wind must be >= 0");
  const double sun = (*this)[Factor::sun];
  if (!is_missing(sun) && (sun < 0 || sun > 24)) raise(errc::schema_error, "sun must be in [0,24]");
  const double rh = (*this)[Factor::rh];
  if (!is_missing(rh) && (rh < 0 || rh > 100)) raise(errc::schema_error, "rh must be in [0,100]");
}

std::string GroupKey::id() const {
  std::string s{to_string(virus)};
  s += '_';
  s += to_string(region);
  if (age) {
    s += '_';
    s += to_string(*age);
  }
  if (sex) {
    s += '_';
    s += to_string(*sex);
  }
  return s;
}

void OutcomeSeries::validate() const {
  const auto n = months.size();
  if (tested.size() != n || positive.size() != n || static_cast<std::size_t>(rate.size()) != n) {
    raise(errc::length_mismatch, "outcome series columns disagree in length");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (tested[i] < 0 || positive[i] < 0) raise(errc::schema_error, "negative count");
    if (positive[i] > tested[i]) {
      raise(errc::positive_exceeds_tested,
            "month " + format_year_month(months[i]) + ": " + std::to_string(positive[i]) + " > " +
                std::to_string(tested[i]));
    }
    if (tested[i] == 0) {
      if (!is_missing(rate[i])) raise(errc::schema_error, "rate present with zero tested");
    } else if (std::abs(rate[i] - static_cast<double>(positive[i]) / tested[i]) > 1e-12) {
      raise(errc::schema_error, "stored rate disagrees with counts");
    }
    if (i + 1 < n && !(months[i] < months[i + 1])) {
      raise(errc::schema_error, "months not strictly ascending");
    }
  }
}

std::string_view to_string(StratifyMethod m) {
  switch (m) {
    case StratifyMethod::equal_interval: return "equal";
    case StratifyMethod::quantile: return "quantile";
    case StratifyMethod::natural_breaks: return "jenks";
    case StratifyMethod::manual: return "manual";
    case StratifyMethod::overlay: return "overlay";
    case StratifyMethod::labels: return "labels";
  }
  return "?";
}

std::string_view to_string(PValueMethod m) {
  switch (m) {
    case PValueMethod::none: return "none";
    case PValueMethod::permutation: return "permutation";
    case PValueMethod::noncentral_f: return "noncentral-f";
  }
  return "?";
}

std::string_view to_string(InteractionCategory c) {
  switch (c) {
    case InteractionCategory::nonlinear_enhance: return "nonlinear-enhance";
    case InteractionCategory::bivariate_enhance: return "bivariate-enhance";
    case InteractionCategory::uni_weaken: return "uni-weaken";
    case InteractionCategory::nonlinear_weaken: return "nonlinear-weaken";
    case InteractionCategory::independent: return "independent";
  }
  return "?";
}

StratumAssignment StratumAssignment::from_labels(const std::vector<int>& labels) {
  StratumAssignment out;
  out.method = StratifyMethod::labels;
  out.labels.reserve(labels.size());
  std::map<int, int> renumber;
  for (int raw : labels) {
    auto [it, inserted] = renumber.try_emplace(raw, static_cast<int>(renumber.size()) + 1);
    out.labels.push_back(it->second);
  }
  out.l = static_cast<int>(renumber.size());
  std::vector<int> counts(out.l, 0);
  for (int lab : out.labels) ++counts[lab - 1];
  out.has_small_stratum = std::any_of(counts.begin(), counts.end(), [](int c) { return c < 2; });
  return out;
}

void StratumAssignment::validate() const {
  if (l < 1) raise(errc::bad_l, "stratum count must be >= 1");
  std::vector<int> counts(l, 0);
  for (int lab : labels) {
    if (lab < 1 || lab > l) raise(errc::out_of_range, "label outside 1..l");
    ++counts[lab - 1];
  }
  for (int c : counts) {
    if (c == 0) raise(errc::bad_l, "empty stratum (assignment not compacted)");
  }
}

std::pair<Eigen::VectorXd, StratumAssignment> validate_sample(
    const Eigen::Ref<const Eigen::VectorXd>& y, const StratumAssignment& strata) {
  if (y.size() == 0 && strata.labels.empty()) raise(errc::empty_input, "no observations");
  if (static_cast<std::size_t>(y.size()) != strata.labels.size()) {
    raise(errc::length_mismatch, std::to_string(y.size()) + " outcomes vs " +
                                     std::to_string(strata.labels.size()) + " labels");
  }
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (is_missing(y[i])) raise(errc::missing_outcome, "missing outcome at index " + std::to_string(i));
  }
  strata.validate();
  return {y, strata};
}

}  // namespace geodet
