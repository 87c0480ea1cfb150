#pragma once

#include <string>

#include <json.hpp>

#include "qvp/instance.hpp"
#include "qvp/lab.hpp"
#include "qvp/picard.hpp"

namespace qvp {

/// Reports are ordered trees; key order is part of the schema.
using Report = nlohmann::ordered_json;

enum class ReportFormat { Text, Machine };

/// Text: `key: value` lines nested by two-space indentation, scalar lists as
/// `[a, b]`, lists of records as `- ` items. Machine: indented JSON.
std::string render(const Report& r, ReportFormat f);

Report labels_report(const QSpace& s, const std::vector<PointId>& points);

Report audit_report(const Instance& inst);
Report picard_report(const Instance& inst, const PicardRun& run);
Report ekeland_report(const Instance& inst, const EkelandCertificate& cert);
Report full_ekeland_report(const Instance& inst, const FullEkelandCertificate& cert);
Report takahashi_report(const Instance& inst, const TakahashiReport& rep);
Report caristi_report(const Instance& inst, const CaristiResult& res);
Report t1_ekeland_report(const Instance& inst, const T1EkelandCertificate& c);
Report t1_takahashi_report(const Instance& inst, const T1TakahashiReport& r);
Report t1_caristi_report(const Instance& inst, const T1CaristiResult& r);
Report equivalence_report(const Instance& inst, const EquivalenceReport& rep);
Report metric_specialization_report(const Instance& inst, const MetricSpecializationReport& rep);
Report witness_report(const Instance& inst, const WitnessReport& rep);
Report error_report(const Error& e, const QSpace* space = nullptr);

}  // namespace qvp
