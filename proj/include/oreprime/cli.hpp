#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oreprime/parse.hpp"
#include "oreprime/report.hpp"

namespace oreprime {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitCap = 2, kExitInternal = 3 };

struct Command {
    std::string verb;
    std::string ring;
    std::vector<std::string> polys;
    bool json = false;
    std::string order = "right";
    std::string check = "all";
    int degree = 2;
    int similarDegree = 2;
    std::uint64_t seed = SimilarityOptions{}.seed;
    std::optional<std::uint64_t> cap;
    std::string dir;
};

/// Usage problem detected after argument parsing.
class UsageError : public Error {
public:
    using Error::Error;
};

namespace detail {

/// --cap, then OREPRIME_CAP, then the module default.
inline std::uint64_t resolveCap(const Command& c, std::uint64_t fallback) {
    if (c.cap) return *c.cap;
    if (const char* env = std::getenv("OREPRIME_CAP")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError(std::string("OREPRIME_CAP is not a number: ") + env);
        }
    }
    return fallback;
}

inline const std::string& singlePoly(const Command& c) {
    if (c.polys.size() != 1) throw UsageError(c.verb + " takes exactly one polynomial");
    return c.polys.front();
}

inline PeelOrder peelOrder(const std::string& s) {
    if (s == "right") return PeelOrder::Right;
    if (s == "left") return PeelOrder::Left;
    throw UsageError("--order must be right or left");
}

/// Lab ring names: M2(GF(q)), T2(GF(q)), GF(q), or a skew ring quotient such as GF(4)[t;frob]/(t^2+1).
inline FiniteAlgebra parseLabRing(const std::string& text, std::optional<SkewPoly<FFRing>>& modulus) {
    auto fieldOf = [&](const std::string& inner) -> const GaloisField& {
        auto r = parseRing(inner);
        const auto* ff = std::get_if<FFRing>(&r);
        if (!ff) throw UsageError("lab rings are built over finite fields: " + inner);
        return ff->field();
    };
    auto inside = [&](const std::string& prefix) {
        return text.substr(prefix.size(), text.size() - prefix.size() - 1) + "[t]";
    };
    if (text.rfind("M2(", 0) == 0 && text.back() == ')') return matrixRing2(fieldOf(inside("M2(")));
    if (text.rfind("T2(", 0) == 0 && text.back() == ')') return lowerTriangular2(fieldOf(inside("T2(")));
    auto slash = text.find("]/(");
    if (slash != std::string::npos && text.back() == ')') {
        auto r = parseRing(text.substr(0, slash + 1));
        const auto* ff = std::get_if<FFRing>(&r);
        if (!ff) throw UsageError("lab quotients need a finite-field skew ring: " + text);
        auto g = parsePoly(*ff, text.substr(slash + 3, text.size() - slash - 4));
        modulus = g;
        return quotientAlgebra(g);
    }
    if (text.rfind("GF(", 0) == 0) return fieldAlgebra(fieldOf(text + "[t]"));
    throw UsageError("unknown lab ring " + text + " (try M2(GF(2)), T2(GF(2)), GF(2)[x]/(x^3))");
}

inline Json runLab(const Command& c) {
    std::uint64_t cap = resolveCap(c, kLabCap);
    const std::vector<std::string> known{"all", "characterizations", "reduced", "simplicity", "examples", "bridge"};
    if (std::find(known.begin(), known.end(), c.check) == known.end()) throw UsageError("unknown --check " + c.check);
    std::vector<LabReport> reports;
    if (c.check == "examples") {
        reports.push_back(checkLabExamples());
        return labReport(c.check, reports);
    }
    if (c.ring.empty()) throw UsageError("lab needs --ring");
    std::optional<SkewPoly<FFRing>> modulus;
    auto A = parseLabRing(c.ring, modulus);
    bool all = c.check == "all";
    if (all || c.check == "characterizations") reports.push_back(checkCharacterizations(A, cap));
    if (all || c.check == "reduced") reports.push_back(checkReducedIntersection(A, cap));
    if (all || c.check == "simplicity") reports.push_back(checkSimplicityProps(A, cap));
    if (c.check == "bridge" || (all && modulus)) {
        if (!modulus) throw UsageError("--check bridge needs a quotient ring R/(g)");
        reports.push_back(checkQuotientBridge(*modulus, cap));
    }
    return labReport(c.check, reports);
}

inline Json runValidate(const Command& c) {
    auto r = parseRing(c.ring);
    const auto* ff = std::get_if<FFRing>(&r);
    if (!ff) throw UsageError("validate runs over finite-field rings only");
    if (c.degree < 1) throw UsageError("--deg must be at least 1");
    CrossValidateOptions opt;
    opt.cap = resolveCap(c, kOracleCap);
    opt.similarityDegree = c.similarDegree;
    opt.similarity.seed = c.seed;
    return validateReport(crossValidate(*ff, c.degree, opt));
}

template <class R>
Json runOnRing(const Command& c, const R& ring) {
    SimilarityOptions opt;
    opt.seed = c.seed;
    if (c.verb == "similar") {
        if (c.polys.size() != 2) throw UsageError("similar takes exactly two polynomials");
        auto a = parsePoly(ring, c.polys[0]);
        auto b = parsePoly(ring, c.polys[1]);
        return similarReport(a, b, isSimilar(a, b, opt));
    }
    auto f = parsePoly(ring, singlePoly(c));
    if (c.verb == "classify") return classifyReport(classify(PrincipalLeftIdeal<R>(f), opt));
    if (c.verb == "factor") {
        auto order = peelOrder(c.order);
        return factorReport(f, factorAtoms(f, order), order);
    }
    if (c.verb == "bound") return boundReport(f, bound(f));
    if (c.verb == "closure") return closureReport(f, twoSidedClosure(f));
    throw UsageError("unknown command " + c.verb);
}

}  // namespace detail

Json runCorpus(const Command& c);

/// Report for one command; library errors propagate.
inline Json execute(const Command& c) {
    if (c.verb == "lab") return detail::runLab(c);
    if (c.verb == "validate") return detail::runValidate(c);
    if (c.verb == "corpus") return runCorpus(c);
    if (c.ring.empty()) throw UsageError(c.verb + " needs --ring");
    auto ring = parseRing(c.ring);
    return std::visit([&](const auto& r) { return detail::runOnRing(c, r); }, ring);
}

/// Report and exit code; errors become an error report.
inline std::pair<Json, int> executeCaught(const Command& c) {
    try {
        Json j = execute(c);
        int code = j.contains("ok") && !j["ok"].get<bool>() ? kExitInternal : kExitOk;
        return {j, code};
    } catch (const ParseError& e) {
        return {errorReport(c.verb, "ParseError", e.what(), e.position()), kExitUsage};
    } catch (const ImproperIdealError& e) {
        return {errorReport(c.verb, "ImproperIdealError", e.what()), kExitUsage};
    } catch (const DomainError& e) {
        return {errorReport(c.verb, "DomainError", e.what()), kExitUsage};
    } catch (const UsageError& e) {
        return {errorReport(c.verb, "UsageError", e.what()), kExitUsage};
    } catch (const CapExceeded& e) {
        return {errorReport(c.verb, "CapExceeded", e.what()), kExitCap};
    } catch (const InternalError& e) {
        return {errorReport(c.verb, "InternalError", e.what()), kExitInternal};
    }
}

namespace detail {

/// Expected-subset match: objects by key, arrays elementwise, "*" matches anything present.
inline bool matches(const Json& expected, const Json& actual, const std::string& path, std::string& why) {
    if (expected.is_string() && expected.get<std::string>() == "*") return true;
    if (expected.is_object()) {
        if (!actual.is_object()) {
            why = path + ": expected an object";
            return false;
        }
        for (const auto& [k, v] : expected.items()) {
            if (!actual.contains(k)) {
                why = path + "/" + k + ": missing";
                return false;
            }
            if (!matches(v, actual[k], path + "/" + k, why)) return false;
        }
        return true;
    }
    if (expected.is_array()) {
        if (!actual.is_array() || actual.size() != expected.size()) {
            why = path + ": expected " + expected.dump() + ", got " + actual.dump();
            return false;
        }
        for (std::size_t i = 0; i < expected.size(); ++i)
            if (!matches(expected[i], actual[i], path + "/" + std::to_string(i), why)) return false;
        return true;
    }
    if (expected != actual) {
        why = path + ": expected " + expected.dump() + ", got " + actual.dump();
        return false;
    }
    return true;
}

inline Command commandFromCase(const Json& k) {
    Command c;
    c.verb = k.at("command").get<std::string>();
    c.ring = k.value("ring", "");
    if (k.contains("args")) c.polys = k["args"].get<std::vector<std::string>>();
    if (k.contains("options")) {
        const auto& o = k["options"];
        c.order = o.value("order", c.order);
        c.check = o.value("check", c.check);
        c.degree = o.value("deg", c.degree);
        c.similarDegree = o.value("similarDeg", c.similarDegree);
        if (o.contains("seed")) c.seed = o["seed"].get<std::uint64_t>();
        if (o.contains("cap")) c.cap = o["cap"].get<std::uint64_t>();
    }
    return c;
}

inline std::string defaultCorpusDir() {
    if (std::filesystem::is_directory("corpus")) return "corpus";
#ifdef OREPRIME_SOURCE_DIR
    return std::string(OREPRIME_SOURCE_DIR) + "/corpus";
#else
    return "corpus";
#endif
}

}  // namespace detail

/// Replays every case of every corpus/*.json file and diffs against its expectations.
inline Json runCorpus(const Command& c) {
    namespace fs = std::filesystem;
    std::string dir = c.dir.empty() ? detail::defaultCorpusDir() : c.dir;
    if (!fs::is_directory(dir)) throw UsageError("corpus directory not found: " + dir);
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    Json j = header("corpus");
    j["directory"] = dir;
    std::size_t cases = 0, passed = 0;
    Json failures = Json::array();
    for (const auto& f : files) {
        std::ifstream in(f);
        Json doc;
        try {
            doc = Json::parse(in);
        } catch (const Json::exception& e) {
            throw UsageError(f.filename().string() + ": " + e.what());
        }
        for (const auto& k : doc.at("cases")) {
            ++cases;
            Command kc = detail::commandFromCase(k);
            if (kc.verb == "corpus") throw UsageError(f.filename().string() + ": corpus cases cannot nest");
            auto [report, code] = executeCaught(kc);
            std::string why;
            bool ok = detail::matches(k.at("expect"), report, "", why);
            int wantCode = k.value("exit", 0);
            if (ok && code != wantCode) {
                ok = false;
                why = "exit code " + std::to_string(code) + ", expected " + std::to_string(wantCode);
            }
            if (ok) {
                ++passed;
            } else {
                failures.push_back({{"file", f.filename().string()}, {"note", k.value("note", "")}, {"detail", why}});
            }
        }
    }
    j["files"] = files.size();
    j["cases"] = cases;
    j["passed"] = passed;
    j["failures"] = failures;
    j["ok"] = failures.empty();
    return j;
}

namespace detail {

inline std::string text(const Json& j) {
    std::ostringstream os;
    if (j.contains("error")) {
        os << "error (" << j["error"]["kind"].get<std::string>() << "): " << j["error"]["message"].get<std::string>()
           << "\n";
        return os.str();
    }
    const auto cmd = j["command"].get<std::string>();
    auto witnessText = [](const Json& w) {
        std::string s;
        for (const auto& [k, v] : w.items()) s += (s.empty() ? "  [" : ", ") + k + " = " + v.get<std::string>();
        return s.empty() ? s : s + "]";
    };
    if (cmd == "classify") {
        os << "ideal  R(" << j["generator"].get<std::string>() << ") in " << j["ring"].get<std::string>() << "\n";
        os << "invariant  " << (j["invariant"].get<bool>() ? "yes" : "no") << "\n";
        os << "bound  " << (j["bound"]["bound"].is_null() ? j["bound"]["status"].get<std::string>()
                                                           : j["bound"]["bound"].get<std::string>())
           << "\n";
        for (const char* n : {"extremely", "completely", "structurally", "weakly"})
            os << n << "  " << j["verdicts"][n].get<std::string>() << "  (" << j["reasons"][n].get<std::string>() << ")"
               << witnessText(j["witnesses"][n]) << "\n";
    } else if (cmd == "factor") {
        os << j["input"].get<std::string>() << " = " << j["unit"].get<std::string>();
        const auto& atoms = j["atoms"];
        std::size_t ri = j["residualIndex"].get<std::size_t>();
        for (std::size_t i = 0; i <= atoms.size(); ++i) {
            if (!j["residual"].is_null() && i == ri) os << " * [" << j["residual"].get<std::string>() << "]";
            if (i < atoms.size()) os << " * (" << atoms[i].get<std::string>() << ")";
        }
        os << "\n";
        if (!j["complete"].get<bool>()) os << "partial: " << j["reason"].get<std::string>() << "\n";
    } else if (cmd == "bound") {
        os << "bound(" << j["input"].get<std::string>() << ") = "
           << (j["bound"].is_null() ? j["status"].get<std::string>() : j["bound"].get<std::string>()) << "\n";
    } else if (cmd == "closure") {
        os << "closure(" << j["input"].get<std::string>() << ") = " << j["closure"].get<std::string>() << "\n";
    } else if (cmd == "similar") {
        os << j["a"].get<std::string>() << " ~ " << j["b"].get<std::string>() << ": "
           << j["verdict"]["value"].get<std::string>() << "  (" << j["verdict"]["reason"].get<std::string>() << ")"
           << witnessText(j["verdict"]["witness"]) << "\n";
    } else if (cmd == "lab") {
        for (const auto& r : j["reports"]) {
            os << r["algebra"].get<std::string>();
            if (r["leftIdeals"].get<std::size_t>() > 0)
                os << "  left ideals " << r["leftIdeals"] << ", two-sided " << r["twoSided"];
            os << "\n";
            for (const auto& c : r["checks"]) {
                os << "  " << (c["holds"].get<bool>() ? "ok  " : "FAIL") << "  " << c["name"].get<std::string>() << "  ("
                   << c["cases"] << " cases)\n";
                for (const auto& f : c["failures"]) os << "        " << f.get<std::string>() << "\n";
            }
        }
    } else if (cmd == "validate") {
        os << j["ring"].get<std::string>() << ", degree <= " << j["degreeCap"] << ": " << j["generators"]
           << " generators, " << j["similarityPairs"] << " similarity pairs\n";
        for (const auto& [notion, m] : j["counts"].items()) {
            os << "  " << notion;
            for (const auto& [pair, n] : m.items()) os << "  " << pair << "=" << n;
            os << "\n";
        }
        os << "mismatches: " << j["mismatches"].size() << "\n";
        for (const auto& m : j["mismatches"]) os << "  " << m.get<std::string>() << "\n";
    } else if (cmd == "corpus") {
        os << j["passed"] << "/" << j["cases"] << " corpus cases pass (" << j["files"] << " files)\n";
        for (const auto& f : j["failures"])
            os << "  " << f["file"].get<std::string>() << ": " << f["note"].get<std::string>() << ": "
               << f["detail"].get<std::string>() << "\n";
    }
    return os.str();
}

}  // namespace detail

/// Runs a parsed command, printing the report; returns the exit code.
inline int runCommand(const Command& c, std::ostream& out, std::ostream& err) {
    auto [report, code] = executeCaught(c);
    if (c.json) {
        out << report.dump(2) << "\n";
    } else if (report.contains("error")) {
        err << detail::text(report);
    } else {
        out << detail::text(report);
    }
    return code;
}

/// Full command line front end.
inline int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Primeness of one-sided ideals in skew polynomial rings"};
    app.require_subcommand(1);
    Command c;
    std::optional<std::string> poly;
    std::vector<std::string> positional;

    auto common = [&](CLI::App* s, bool needsRing) {
        auto* r = s->add_option("--ring", c.ring, "ring, e.g. HQ[t], GF(4)[t;frob], QX[t;shift]");
        if (needsRing) r->required();
        s->add_flag("--json", c.json, "print the JSON report");
        s->add_option("--seed", c.seed, "seed for randomized searches");
    };
    auto onePoly = [&](CLI::App* s) {
        s->add_option("--poly", poly, "polynomial");
        s->add_option("expr", positional, "polynomial (alternative to --poly)")->expected(0, 1);
    };

    auto* classify = app.add_subcommand("classify", "four primeness verdicts for R*poly");
    common(classify, true);
    onePoly(classify);
    auto* factor = app.add_subcommand("factor", "factorization into atoms");
    common(factor, true);
    onePoly(factor);
    factor->add_option("--order", c.order, "peeling order: right or left")->check(CLI::IsMember({"right", "left"}));
    auto* bnd = app.add_subcommand("bound", "bound of a polynomial");
    common(bnd, true);
    onePoly(bnd);
    auto* closure = app.add_subcommand("closure", "generator of the two-sided closure");
    common(closure, true);
    onePoly(closure);
    auto* similar = app.add_subcommand("similar", "similarity test with comaximal witness");
    common(similar, true);
    similar->add_option("polys", positional, "two polynomials")->expected(2)->required();
    auto* lab = app.add_subcommand("lab", "brute-force checks on a small finite ring");
    common(lab, false);
    lab->add_option("--check", c.check, "all|characterizations|reduced|simplicity|examples|bridge");
    lab->add_option("--cap", c.cap, "element cap (default 65536)");
    auto* validate = app.add_subcommand("validate", "cross-validate against the definitional oracle");
    common(validate, true);
    validate->add_option("--deg", c.degree, "degree cap")->check(CLI::Range(1, 16));
    validate->add_option("--similar-deg", c.similarDegree, "degree cap for similarity pairs");
    validate->add_option("--cap", c.cap, "oracle sweep cap (default 4096)");
    auto* corpus = app.add_subcommand("corpus", "replay the golden corpus");
    corpus->add_option("--dir", c.dir, "corpus directory");
    corpus->add_flag("--json", c.json, "print the JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, er;
        int code = app.exit(e, o, er);
        out << o.str();
        err << er.str();
        return code == 0 ? kExitOk : kExitUsage;
    }
    c.verb = app.get_subcommands().front()->get_name();
    if (poly) positional.insert(positional.begin(), *poly);
    c.polys = positional;
    return runCommand(c, out, err);
}

}  // namespace oreprime
