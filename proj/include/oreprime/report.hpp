#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "oreprime/factorization.hpp"
#include "oreprime/finite_lab.hpp"
#include "oreprime/oracle.hpp"
#include "oreprime/primeness.hpp"
#include "oreprime/similarity.hpp"
#include "oreprime/structure.hpp"

// JSON shapes of every CLI report. Keys are sorted by nlohmann::json, so
// equal inputs give byte-identical output.

namespace oreprime {

using Json = nlohmann::json;

inline constexpr const char* kReportSchema = "oreprime-report/1";

template <class P>
Json witnessJson(const Verdict<P>& v) {
    Json w = Json::object();
    for (const auto& [name, p] : v.witness) w[name] = p.str();
    return w;
}

template <class P>
Json verdictJson(const Verdict<P>& v) {
    return {{"value", toString(v.value)}, {"reason", v.reason}, {"witness", witnessJson(v)}};
}

inline constexpr int kReportVersion = 1;

inline Json header(const std::string& command) {
    return {{"schema", kReportSchema}, {"version", kReportVersion}, {"command", command}};
}

template <class R>
Json boundJson(const BoundResult<R>& b) {
    Json j{{"status", toString(b.status)}};
    j["bound"] = b.bound ? Json(b.bound->str()) : Json(nullptr);
    return j;
}

template <class R>
Json classifyReport(const ClassificationReport<R>& c) {
    Json j = header("classify");
    j["ring"] = c.ideal.ring().name();
    j["generator"] = c.ideal.generator().str();
    j["monic"] = c.ideal.generator().monic().str();
    j["invariant"] = c.invariant;
    j["bound"] = boundJson(c.bound);
    Json verdicts, reasons, witnesses;
    auto put = [&](const char* name, const Verdict<SkewPoly<R>>& v) {
        verdicts[name] = toString(v.value);
        reasons[name] = v.reason;
        witnesses[name] = witnessJson(v);
    };
    put("extremely", c.extremely);
    put("completely", c.completely);
    put("structurally", c.structurally);
    put("weakly", c.weakly);
    j["verdicts"] = verdicts;
    j["reasons"] = reasons;
    j["witnesses"] = witnesses;
    j["consistent"] = c.consistent;
    return j;
}

template <class R>
Json factorReport(const SkewPoly<R>& input, const FactorizationResult<R>& f, PeelOrder order) {
    const R& ring = input.ring();
    Json j = header("factor");
    j["ring"] = ring.name();
    j["input"] = input.str();
    j["order"] = order == PeelOrder::Right ? "right" : "left";
    j["unit"] = ring.scalarStr(f.unit);
    Json atoms = Json::array();
    for (const auto& a : f.atoms) atoms.push_back(a.str());
    j["atoms"] = atoms;
    j["complete"] = f.complete;
    j["residual"] = f.residual ? Json(f.residual->str()) : Json(nullptr);
    j["residualIndex"] = f.residualIndex;
    j["reason"] = f.reason;
    return j;
}

template <class R>
Json boundReport(const SkewPoly<R>& input, const BoundResult<R>& b) {
    Json j = header("bound");
    j["ring"] = input.ring().name();
    j["input"] = input.str();
    j["status"] = toString(b.status);
    j["bound"] = b.bound ? Json(b.bound->str()) : Json(nullptr);
    return j;
}

template <class R>
Json closureReport(const SkewPoly<R>& input, const SkewPoly<R>& closure) {
    Json j = header("closure");
    j["ring"] = input.ring().name();
    j["input"] = input.str();
    j["closure"] = closure.str();
    return j;
}

template <class R>
Json similarReport(const SkewPoly<R>& a, const SkewPoly<R>& b, const Verdict<SkewPoly<R>>& v) {
    Json j = header("similar");
    j["ring"] = a.ring().name();
    j["a"] = a.str();
    j["b"] = b.str();
    j["verdict"] = verdictJson(v);
    if constexpr (R::kind != RingKind::QXShift) {
        const auto* x = v.find("x");
        const auto* y = v.find("y");
        if (x && y) {
            typename ComaximalWitness<R>::Checks checks;
            verifyWitness(a, b, *x, *y, &checks);
            j["witnessChecks"] = {{"relation", checks.relation},
                                  {"leftComaximal", checks.leftComaximal},
                                  {"rightComaximal", checks.rightComaximal},
                                  {"reduced", checks.reduced}};
        }
    }
    return j;
}

inline Json labReport(const std::string& check, const std::vector<LabReport>& reports) {
    Json j = header("lab");
    j["check"] = check;
    Json parts = Json::array();
    bool ok = true;
    for (const auto& r : reports) {
        Json checks = Json::array();
        for (const auto& c : r.checks)
            checks.push_back({{"name", c.name}, {"cases", c.cases}, {"holds", c.holds()}, {"failures", c.failures}});
        parts.push_back({{"algebra", r.algebra}, {"leftIdeals", r.leftIdeals}, {"twoSided", r.twoSided}, {"checks", checks},
                         {"ok", r.ok()}});
        ok = ok && r.ok();
    }
    j["reports"] = parts;
    j["ok"] = ok;
    return j;
}

inline Json validateReport(const OracleReport& rep) {
    Json j = header("validate");
    j["ring"] = rep.ring;
    j["degreeCap"] = rep.degreeCap;
    j["generators"] = rep.generators;
    j["similarityPairs"] = rep.similarityPairs;
    Json counts = Json::object();
    for (const auto& [notion, m] : rep.counts)
        for (const auto& [pair, n] : m) counts[notion][pair] = n;
    j["counts"] = counts;
    j["mismatches"] = rep.mismatches;
    j["ok"] = rep.mismatches.empty();
    return j;
}

inline Json errorReport(const std::string& command, const std::string& kind, const std::string& message,
                        std::optional<std::size_t> position = std::nullopt) {
    Json j = header(command);
    Json e{{"kind", kind}, {"message", message}};
    if (position) e["position"] = *position;
    j["error"] = e;
    return j;
}

}  // namespace oreprime
