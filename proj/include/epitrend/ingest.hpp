#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "epitrend/calendar.hpp"

namespace epitrend::ingest {

/// One region's cumulative counts over a contiguous daily window, joined
/// with its population and lockdown calendar.
struct RegionSeries {
    std::string region_id;  // "Country" or "Province, Country"
    std::string country;
    std::string province;  // empty at country level
    std::vector<Date> dates;
    std::vector<std::int64_t> confirmed;  // cumulative, clamped monotone
    std::vector<std::int64_t> deaths;
    std::vector<std::int64_t> recovered;
    double population_millions = 0.0;
    std::vector<int> lockdown;  // 0/1 per date
    std::optional<Date> lockdown_date;
    std::vector<std::string> warnings;  // e.g. clamped data corrections

    std::size_t size() const { return dates.size(); }
};

struct LockdownCalendar {
    std::map<std::string, Date> entries;  // region_id -> lockdown start
};

enum class CountKind { confirmed, deaths, recovered };

/// Per-region counts parsed from one JHU CSSE style CSV.
struct CountTable {
    std::vector<Date> dates;
    // region_id -> raw cumulative counts, aligned to dates. Map keeps
    // deterministic (sorted) region order for all downstream iteration.
    std::map<std::string, std::vector<std::int64_t>> rows;
    std::map<std::string, std::pair<std::string, std::string>> names;  // id -> (country, province)
};

std::string make_region_id(const std::string& country, const std::string& province);

/// Parse a cumulative-count CSV with header
/// `Province/State,Country/Region,Lat,Long,<M/D/YY>...`.
/// Lat/Long are validated as numeric and discarded.
CountTable parse_timeseries(const std::string& csv_text, CountKind kind);

/// Inverse of parse_timeseries; emits the same header layout with
/// Lat/Long written as 0 (they carry no information downstream).
std::string serialize_timeseries(const CountTable& table);

/// Two-column CSV `region_id,population_millions`.
std::map<std::string, double> parse_population(const std::string& csv_text);

/// Two-column CSV `region_id,lockdown_start_date` (ISO-8601).
/// Every region must exist in `known`, and dates must not fall after
/// `window_end`.
LockdownCalendar parse_lockdown(const std::string& csv_text,
                                const CountTable& known,
                                Date window_end);

/// Join the three count tables with population and lockdown data for one
/// region. Day-over-day decreases in cumulative counts are clamped (the
/// corrected series keeps the running maximum) and recorded as warnings.
RegionSeries assemble_region(const CountTable& confirmed,
                             const CountTable& deaths,
                             const CountTable& recovered,
                             const std::map<std::string, double>& population,
                             const LockdownCalendar& lockdown,
                             const std::string& region_id);

/// Sum province series into one country-level series. The lockdown column
/// comes from `country_lockdown` (not from the provinces).
RegionSeries aggregate_country(const std::vector<RegionSeries>& provinces,
                               std::optional<Date> country_lockdown);

/// A fully assembled data set: every row of the CSVs as a RegionSeries,
/// country aggregates for multi-province countries, and a World aggregate.
struct Dataset {
    std::vector<RegionSeries> regions;     // one per CSV row, sorted by id
    std::vector<RegionSeries> countries;   // aggregated, sorted by id
    RegionSeries world;

    const RegionSeries* find(const std::string& name, bool country_level) const;
    std::vector<const RegionSeries*> provinces_of(const std::string& country) const;
};

Dataset assemble_dataset(const CountTable& confirmed,
                         const CountTable& deaths,
                         const CountTable& recovered,
                         const std::map<std::string, double>& population,
                         const LockdownCalendar& lockdown);

}  // namespace epitrend::ingest
