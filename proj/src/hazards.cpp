#include "graffiti/hazards.hpp"

#include <algorithm>

#include "graffiti/error.hpp"

namespace graffiti {

const char* protection_name(Protection p) {
    switch (p) {
        case Protection::anonymous: return "anonymous";
        case Protection::registration: return "registration";
        case Protection::puzzle: return "puzzle";
        case Protection::captcha: return "captcha";
        case Protection::closed: return "closed";
    }
    return "unknown";
}

Protection protection_from_name(const std::string& s) {
    for (Protection p : kProtections)
        if (s == protection_name(p)) return p;
    fail(Errc::parse, "unknown protection class: " + s);
}

const char* domain_class_name(DomainClass d) {
    switch (d) {
        case DomainClass::com: return "com";
        case DomainClass::edu: return "edu";
        case DomainClass::org: return "org";
        case DomainClass::us_other: return "us_other";
        case DomainClass::non_us_other: return "non_us_other";
    }
    return "unknown";
}

DomainClass domain_class_from_name(const std::string& s) {
    for (DomainClass d : kDomainClasses)
        if (s == domain_class_name(d)) return d;
    fail(Errc::parse, "unknown domain class: " + s);
}

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

double HazardModel::removal_hazard(Protection p, std::int64_t page_age_days,
                                   bool in_recent_window) const {
    const ClassHazard& h = removal[static_cast<std::size_t>(p)];
    double base;
    if (page_age_days <= early_end_day)
        base = h.early;
    else if (page_age_days <= mid_end_day)
        base = h.mid;
    else
        base = h.late;
    return clamp01(base * (in_recent_window ? recent_multiplier : 1.0));
}

double HazardModel::site_death_hazard(std::int64_t day) const {
    double h = site_death_base;
    if (day > site_death_ramp_start)
        h += site_death_ramp * static_cast<double>(day - site_death_ramp_start);
    return clamp01(h);
}

Json HazardModel::to_json() const {
    Json rem = Json::object();
    for (Protection p : kProtections) {
        const ClassHazard& h = removal[static_cast<std::size_t>(p)];
        rem[protection_name(p)] = {{"early", h.early}, {"mid", h.mid}, {"late", h.late}};
    }
    return Json{{"removal", rem},
                {"site_death_base", site_death_base},
                {"site_death_ramp_start", site_death_ramp_start},
                {"site_death_ramp", site_death_ramp},
                {"recent_multiplier", recent_multiplier},
                {"mutation_hazard", mutation_hazard},
                {"early_end_day", early_end_day},
                {"mid_end_day", mid_end_day}};
}

HazardModel HazardModel::from_json(const Json& j) {
    HazardModel m;
    try {
        if (j.contains("removal")) {
            for (Protection p : kProtections) {
                const char* name = protection_name(p);
                if (!j["removal"].contains(name)) continue;
                const Json& h = j["removal"][name];
                ClassHazard& c = m.removal[static_cast<std::size_t>(p)];
                c.early = h.value("early", 0.0);
                c.mid = h.value("mid", 0.0);
                c.late = h.value("late", 0.0);
            }
        }
        m.site_death_base = j.value("site_death_base", 0.0);
        m.site_death_ramp_start = j.value("site_death_ramp_start", 100);
        m.site_death_ramp = j.value("site_death_ramp", 0.0);
        m.recent_multiplier = j.value("recent_multiplier", 1.0);
        m.mutation_hazard = j.value("mutation_hazard", 0.0);
        m.early_end_day = j.value("early_end_day", 7);
        m.mid_end_day = j.value("mid_end_day", 100);
    } catch (const Json::exception& e) {
        fail(Errc::parse, std::string("bad hazard model: ") + e.what());
    }
    for (Protection p : kProtections) {
        const ClassHazard& h = m.removal[static_cast<std::size_t>(p)];
        if (h.early < 0 || h.early > 1 || h.mid < 0 || h.mid > 1 || h.late < 0 || h.late > 1)
            fail(Errc::parse, "removal hazards must lie in [0,1]");
    }
    return m;
}

} // namespace graffiti
