#pragma once

#include "viracomb/qseries.hpp"

#include <functional>
#include <json.hpp>
#include <string>
#include <vector>

namespace viracomb {

struct VerifyReport {
    std::string identity;
    nlohmann::json params = nlohmann::json::object();
    int order = 0;
    bool pass = true;
    int power = -1;  // first mismatch, when failing
    std::string left;
    std::string right;
    std::string detail;  // failure reason that is not a coefficient mismatch
    nlohmann::json counts = nlohmann::json::object();
    double seconds = 0.0;

    nlohmann::json to_json() const;
};

using ReportSink = std::function<void(const VerifyReport&)>;

struct VerifyOptions {
    int order = 12;
    int max_t2 = 10;
};

// Coefficientwise comparison through `order`.
VerifyReport compare_series(const std::string& identity, nlohmann::json params, int order,
                            const QSeries& left, const QSeries& right);

// Each suite reports through the sink and returns true when everything passed.
bool verify_rsos_characters(int order, const ReportSink& sink);
// Half-lattice generating functions against the character of their label,
// for every T up to max_t2 and every endpoint pair.
bool verify_half_characters(const VerifyOptions& opt, const ReportSink& sink);
// RSOS and half-lattice generating functions against the characters.
bool verify_theorem1(const VerifyOptions& opt, const ReportSink& sink);
bool verify_theorem2(const VerifyOptions& opt, const ReportSink& sink);
bool verify_products(int order, const ReportSink& sink);
bool verify_symmetries(int order, int max_pp, const ReportSink& sink);
bool verify_bijection_family(int family, int p, int a, int b, int order, const ReportSink& sink);
bool verify_bijections(int order, const ReportSink& sink);
bool verify_sectors(const VerifyOptions& opt, const ReportSink& sink);

std::vector<std::string> suite_names();
// Runs a named suite ("all" runs every suite). Throws InvalidArgument on an
// unknown name.
bool run_suite(const std::string& name, const VerifyOptions& opt, const ReportSink& sink);

}  // namespace viracomb
