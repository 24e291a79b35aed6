#include "semifib/json_io.hpp"

#include <json.hpp>

namespace semifib {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parts_array(const Partition& p) {
    ordered_json arr = ordered_json::array();
    for (std::uint64_t part : p.parts()) arr.push_back(part);
    return arr;
}

ordered_json report_object(const VerificationReport& report) {
    ordered_json obj;
    obj["theorem"] = report.theorem;
    obj["status"] = report.passed ? "pass" : "fail";
    obj["cases"] = report.cases_checked;
    if (report.first_counterexample) {
        ordered_json ce;
        for (const auto& [key, value] : *report.first_counterexample) ce[key] = value;
        obj["first_counterexample"] = ce;
    } else {
        obj["first_counterexample"] = nullptr;
    }
    obj["elapsed_ms"] = report.elapsed_ms;
    if (!report.note.empty()) obj["note"] = report.note;
    return obj;
}

} // namespace

std::string count_json(std::uint64_t m, std::uint64_t n, const CountValue& count) {
    ordered_json obj;
    obj["n"] = n;
    obj["m"] = m;
    obj["count"] = count.get_str();
    return obj.dump();
}

std::string counts_json(std::uint64_t m,
                        const std::vector<std::pair<std::uint64_t, CountValue>>& counts) {
    ordered_json arr = ordered_json::array();
    for (const auto& [n, count] : counts) {
        ordered_json obj;
        obj["n"] = n;
        obj["m"] = m;
        obj["count"] = count.get_str();
        arr.push_back(std::move(obj));
    }
    return arr.dump();
}

std::string partition_set_json(const PartitionSet& set, std::uint64_t m,
                               bool include_partitions) {
    ordered_json obj;
    obj["n"] = set.weight();
    obj["m"] = m;
    obj["count"] = std::to_string(set.size());
    if (include_partitions) {
        ordered_json arr = ordered_json::array();
        for (const Partition& p : set.elements()) arr.push_back(parts_array(p));
        obj["partitions"] = std::move(arr);
    }
    return obj.dump();
}

std::string bijection_json(const BijectionRecord& record) {
    ordered_json obj;
    obj["m"] = record.m;
    obj["direction"] = to_string(record.direction);
    obj["source"] = parts_array(record.source);
    obj["image"] = parts_array(record.image);
    return obj.dump();
}

std::string report_json(const VerificationReport& report) {
    return report_object(report).dump();
}

std::string reports_json(const std::vector<VerificationReport>& reports) {
    ordered_json arr = ordered_json::array();
    for (const VerificationReport& r : reports) arr.push_back(report_object(r));
    return arr.dump();
}

std::string series_json(const PowerSeries& series) {
    ordered_json arr = ordered_json::array();
    for (const CountValue& c : series.coefficients()) arr.push_back(c.get_str());
    return arr.dump();
}

std::string series_csv(const PowerSeries& series) {
    std::string out;
    for (std::uint64_t k = 0; k <= series.order(); ++k) {
        out += std::to_string(k);
        out += ',';
        out += series.coefficient(k).get_str();
        out += '\n';
    }
    return out;
}

} // namespace semifib
