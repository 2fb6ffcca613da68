#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "graffiti/canonical_json.hpp"

namespace graffiti {

enum class Protection { anonymous, registration, puzzle, captcha, closed };
enum class DomainClass { com, edu, org, us_other, non_us_other };

constexpr std::array<Protection, 5> kProtections = {
    Protection::anonymous, Protection::registration, Protection::puzzle, Protection::captcha,
    Protection::closed};
constexpr std::array<DomainClass, 5> kDomainClasses = {
    DomainClass::com, DomainClass::edu, DomainClass::org, DomainClass::us_other,
    DomainClass::non_us_other};

const char* protection_name(Protection p);
Protection protection_from_name(const std::string& s);
const char* domain_class_name(DomainClass d);
DomainClass domain_class_from_name(const std::string& s);

// Daily removal hazard for one protection class, piecewise constant over
// three page-age phases: early (age 1..7 days), mid (8..100), late (>100).
struct ClassHazard {
    double early = 0.0;
    double mid = 0.0;
    double late = 0.0;
};

// Replica churn parameters. Page removal depends on the protection class
// and page age; whole-site death is class independent and ramps up after
// ramp_start days; edits still listed in a site's recent-changes window
// face the removal hazard scaled by recent_multiplier.
struct HazardModel {
    std::array<ClassHazard, 5> removal{}; // indexed by Protection
    double site_death_base = 0.0;
    int site_death_ramp_start = 100;
    double site_death_ramp = 0.0; // added per day past ramp_start
    double recent_multiplier = 1.0;
    double mutation_hazard = 0.0;
    int early_end_day = 7;
    int mid_end_day = 100;

    double removal_hazard(Protection p, std::int64_t page_age_days, bool in_recent_window) const;
    double site_death_hazard(std::int64_t day) const;

    static HazardModel zero() { return {}; }
    Json to_json() const;
    static HazardModel from_json(const Json& j);
};

double clamp01(double x);

} // namespace graffiti
