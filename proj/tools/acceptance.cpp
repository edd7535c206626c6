// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oreprime/factorization.hpp"
#include "oreprime/finite_lab.hpp"
#include "oreprime/oracle.hpp"
#include "oreprime/parse.hpp"
#include "oreprime/primeness.hpp"
#include "oreprime/similarity.hpp"
#include "oreprime/structure.hpp"

using namespace oreprime;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> failures;

    void fail(const std::string& why) {
        pass = false;
        if (failures.size() < 5) failures.push_back(why);
    }
};

// Lattice breaches seen anywhere in the run; the last criterion reports them.
std::size_t gLatticeChecked = 0;
std::vector<std::string> gLatticeBreaches;

template <class R>
ClassificationReport<R> classifyTracked(const SkewPoly<R>& a) {
    try {
        auto c = classify(PrincipalLeftIdeal<R>(a));
        ++gLatticeChecked;
        auto v = checkPidLattice(c.extremely.value, c.completely.value, c.structurally.value, c.weakly.value);
        if (v.any) gLatticeBreaches.push_back(a.str() + ": " + v.what);
        return c;
    } catch (const InternalError& e) {
        ++gLatticeChecked;
        gLatticeBreaches.push_back(e.what());
        throw;
    }
}

void trackOracle(const OracleVerdicts& o, const std::string& where) {
    ++gLatticeChecked;
    auto t = [](bool b) { return b ? Truth::Yes : Truth::No; };
    auto v = checkPidLattice(t(o.extremely), t(o.completely), t(o.structurally), t(o.weakly));
    if (v.any) gLatticeBreaches.push_back("oracle " + where + ": " + v.what);
}

void trackLab(const LabReport& rep) {
    for (const auto& c : rep.checks) {
        if (c.name != "implication lattice") continue;
        gLatticeChecked += c.cases;
        for (const auto& f : c.failures) gLatticeBreaches.push_back(rep.algebra + ": " + f);
    }
}

void absorbLab(Outcome& o, const LabReport& rep) {
    trackLab(rep);
    for (const auto& c : rep.checks)
        if (!c.holds()) o.fail(rep.algebra + ": " + c.name + ": " + c.failures.front());
}

const FFRing& f4() {
    static FFRing r(GaloisField::get(2, 2));
    return r;
}
const FFRing& f9() {
    static FFRing r(GaloisField::get(3, 2));
    return r;
}

std::string verdictString(const ClassificationReport<HQRing>& c) {
    std::string s;
    for (const auto* v : {&c.extremely, &c.completely, &c.structurally, &c.weakly}) s += toString(v->value)[0];
    return s;
}

Outcome oracleEquivalence() {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    std::size_t total = 0;
    for (auto [ring, deg] : {std::pair{&f4(), 3}, std::pair{&f9(), 2}}) {
        auto rep = crossValidate(*ring, deg);
        total += rep.generators;
        for (const auto& a : allMonics(*ring, 1, deg)) {
            classifyTracked(a);
            trackOracle(oracleClassifyPID(a), a.str());
        }
        for (const auto& m : rep.mismatches) o.fail(rep.ring + ": " + m);
        if (deg == 3 && rep.generators != 84) o.fail("expected 84 generators, got " + std::to_string(rep.generators));
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > 600) o.fail("runtime " + std::to_string(secs) + " s exceeds 10 minutes");
    std::ostringstream d;
    d << total << " generators, " << o.failures.size() << " mismatches, " << static_cast<int>(secs * 1000) << " ms";
    o.detail = d.str();
    return o;
}

Outcome cIrreducibleIsAtom() {
    Outcome o;
    auto gens = allMonics(f4(), 1, 3);
    std::size_t atoms = 0;
    for (const auto& a : gens) {
        bool c = oracleCIrreducible(a);
        bool at = oracleIsAtom(a);
        atoms += at;
        if (c != at) o.fail(a.str() + ": c-irreducible " + std::to_string(c) + ", atom " + std::to_string(at));
        if (isAtom(a).isYes() != at) o.fail(a.str() + ": fast atom test disagrees with oracle");
    }
    o.detail = std::to_string(gens.size()) + " generators, " + std::to_string(atoms) + " atoms";
    return o;
}

Outcome goldens() {
    Outcome o;
    HQRing hq;
    HQRing hx("x");
    auto expectClass = [&](const SkewPoly<HQRing>& a, const std::string& want) {
        auto got = verdictString(classifyTracked(a));
        if (got != want) o.fail("classify " + a.str() + ": " + got + ", expected " + want);
    };
    expectClass(parsePoly(hq, "t^2+1"), "NNYY");
    expectClass(parsePoly(hx, "(x-j)*(x-i)"), "NNNY");
    auto expectBound = [&](const SkewPoly<HQRing>& a, const SkewPoly<HQRing>& want) {
        auto b = bound(a);
        if (!b.isBounded() || b.value() != want) o.fail("bound " + a.str());
    };
    expectBound(parsePoly(hq, "t-i"), parsePoly(hq, "t^2+1"));
    expectBound(parsePoly(hx, "(x-j)*(x-i)"), parsePoly(hx, "(x^2+1)^2"));

    const auto& f2 = GaloisField::get(2, 1);
    auto m2 = matrixRing2(f2);
    auto m2ideals = enumerateLeftIdeals(m2);
    auto zero = defClassify(m2ideals.front(), m2ideals);
    if (!m2ideals.front().isZero()) o.fail("first M2(GF(2)) ideal is not zero");
    if (!zero.structurally || zero.completely) o.fail("M2(GF(2)) zero ideal");
    auto t2 = lowerTriangular2(f2);
    auto t2ideals = enumerateLeftIdeals(t2);
    bool found = false;
    for (const auto& I : t2ideals) {
        // the E22 line: {0, E22}
        if (I.dim() == 1 && I.contains(t2.encode(t2.basis(2)))) {
            auto v = defClassify(I, t2ideals);
            if (!v.completely || v.structurally) o.fail("T2(GF(2)) E22 ideal");
            found = true;
        }
    }
    if (!found) o.fail("T2(GF(2)) E22 ideal missing");
    for (unsigned q : {2u, 3u}) {
        auto m = matrixRing2(GaloisField::get(q, 1));
        auto ideals = enumerateLeftIdeals(m);
        for (const auto& I : ideals)
            if (!I.isWhole() && defClassify(I, ideals).extremely) o.fail(m.name() + ": extremely prime " + I.str());
    }
    o.detail = "7 goldens";
    return o;
}

Outcome characterizations() {
    Outcome o;
    const auto& f2 = GaloisField::get(2, 1);
    std::vector<FiniteAlgebra> algebras{matrixRing2(f2), lowerTriangular2(f2),
                                        quotientAlgebra(parsePoly(FFRing(f2, 0, "x"), "x^3"))};
    std::vector<SkewPoly<FFRing>> moduli{parsePoly(f4(), "t^2+1"), parsePoly(f4(), "t^3+t")};
    for (const auto& g : moduli) algebras.push_back(quotientAlgebra(g));
    std::size_t cases = 0;
    for (const auto& A : algebras) {
        auto rep = checkCharacterizations(A);
        for (const auto& c : rep.checks) cases += c.cases;
        absorbLab(o, rep);
    }
    for (const auto& g : moduli) absorbLab(o, checkQuotientBridge(g));
    o.detail = std::to_string(algebras.size()) + " rings, " + std::to_string(cases) + " ideal checks";
    return o;
}

Outcome reducedTheorem() {
    Outcome o;
    const auto& f2 = GaloisField::get(2, 1);
    const auto& f3 = GaloisField::get(3, 1);
    std::vector<FiniteAlgebra> algebras{quotientAlgebra(parsePoly(FFRing(f2, 0, "x"), "x^2")),
                                        quotientAlgebra(parsePoly(FFRing(f3, 0, "x"), "x^2-x")), matrixRing2(f2)};
    std::size_t cases = 0;
    for (const auto& A : algebras) {
        auto rep = checkReducedIntersection(A);
        for (const auto& c : rep.checks) cases += c.cases;
        absorbLab(o, rep);
    }
    o.detail = std::to_string(cases) + " two-sided ideals";
    return o;
}

Outcome similarityRoundTrip() {
    Outcome o;
    auto gens = allMonics(f4(), 1, 2);
    std::size_t similar = 0, witnesses = 0;
    for (const auto& a : gens)
        for (const auto& b : gens) {
            if (a.degree() != b.degree()) continue;
            bool os = oracleSimilar(a, b);
            if (os) {
                ++similar;
                try {
                    auto w = comaximalWitness(a, b);
                    if (!verifyWitness(a, b, w) || !w.checks.all()) o.fail("witness rejected: " + a.str() + ", " + b.str());
                } catch (const Error& e) {
                    o.fail(a.str() + " ~ " + b.str() + ": " + e.what());
                }
            }
            // every x with deg x < deg b determines y; any verified pair must be oracle-similar
            for (const auto& x : allMonics(f4(), 0, b.degree() - 1)) {
                for (std::uint32_t c = 1; c < f4().field().order(); ++c) {
                    auto xs = SkewPoly<FFRing>::constant(f4(), f4().field().element(c)) * x;
                    auto [y, r] = divRight(a * xs, b);
                    if (!r.isZero() || y.isZero()) continue;
                    if (!verifyWitness(a, b, xs, y)) continue;
                    ++witnesses;
                    if (!os) o.fail("verified witness for non-similar " + a.str() + ", " + b.str());
                }
            }
        }
    o.detail = std::to_string(similar) + " similar pairs, " + std::to_string(witnesses) + " verified witnesses";
    return o;
}

SkewPoly<FFRing> randomMonic(const FFRing& r, int deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> d(0, r.field().order() - 1);
    std::vector<FFElem> c;
    for (int k = 0; k < deg; ++k) c.push_back(r.field().element(d(rng)));
    c.push_back(r.field().one());
    return SkewPoly<FFRing>(r, c);
}

bool similarityBijection(const std::vector<SkewPoly<FFRing>>& xs, const std::vector<SkewPoly<FFRing>>& ys) {
    std::vector<bool> used(ys.size(), false);
    std::function<bool(std::size_t)> match = [&](std::size_t i) {
        if (i == xs.size()) return true;
        for (std::size_t j = 0; j < ys.size(); ++j) {
            if (used[j] || xs[i].degree() != ys[j].degree() || !oracleSimilar(xs[i], ys[j])) continue;
            used[j] = true;
            if (match(i + 1)) return true;
            used[j] = false;
        }
        return false;
    };
    return xs.size() == ys.size() && match(0);
}

Outcome ufdPermutation() {
    Outcome o;
    std::mt19937_64 rng(20240601);
    std::size_t atoms = 0;
    for (int it = 0; it < 100; ++it) {
        auto f = randomMonic(f4(), 1 + static_cast<int>(rng() % 4), rng);
        auto right = factorAtoms(f, PeelOrder::Right);
        auto left = factorAtoms(f, PeelOrder::Left);
        if (!right.complete || !left.complete) {
            o.fail(f.str() + ": incomplete factorization");
            continue;
        }
        if (right.product(f4()) != f || left.product(f4()) != f) o.fail(f.str() + ": product mismatch");
        if (right.atoms.size() != left.atoms.size()) o.fail(f.str() + ": atom counts differ");
        else if (!similarityBijection(right.atoms, left.atoms)) o.fail(f.str() + ": no similarity bijection");
        atoms += right.atoms.size();
    }
    o.detail = "100 polynomials, " + std::to_string(atoms) + " atoms";
    return o;
}

// Property suite, generic over the ring: division, Bezout, degree formula,
// multiply-back and bounds.
template <class R, class Gen>
std::size_t propertySweep(Outcome& o, const R& ring, Gen gen, int cases, bool factorAll, std::size_t& bounded) {
    std::size_t ran = 0;
    using P = SkewPoly<R>;
    for (int it = 0; ran < static_cast<std::size_t>(cases); ++it) {
        P f = gen(it);
        P g = gen(it + 7919);
        if (f.isZero() || g.isZero()) continue;
        ++ran;
        std::string tag = ring.name() + " f=" + f.str() + " g=" + g.str();
        auto [q1, r1] = divRight(f, g);
        if (q1 * g + r1 != f || r1.degree() >= g.degree()) o.fail("right division " + tag);
        auto [q2, r2] = divLeft(f, g);
        if (g * q2 + r2 != f || r2.degree() >= g.degree()) o.fail("left division " + tag);
        auto e = extendedGcrd(f, g);
        if (e.u * f + e.v * g != e.gcrd || !rightDivides(e.gcrd, f) || !rightDivides(e.gcrd, g))
            o.fail("right Bezout " + tag);
        auto le = extendedGcld(f, g);
        if (f * le.u + g * le.v != le.gcld || !leftDivides(le.gcld, f) || !leftDivides(le.gcld, g))
            o.fail("left Bezout " + tag);
        auto l = lclm(f, g);
        if (l.degree() + e.gcrd.degree() != f.degree() + g.degree() || !rightDivides(f, l) || !rightDivides(g, l))
            o.fail("lclm degree formula " + tag);
        auto lr = lcrm(f, g);
        if (lr.degree() + le.gcld.degree() != f.degree() + g.degree()) o.fail("lcrm degree formula " + tag);
        if (f.degree() >= 1 && (factorAll || it % 10 == 0)) {
            try {
                auto fa = factorAtoms(f);
                if (fa.product(ring) != f) o.fail("multiply-back " + f.str());
            } catch (const CapExceeded&) {
            }
        }
        if (f.degree() < 1) continue;
        auto b = bound(f);
        if (b.status == BoundStatus::Bounded) {
            ++bounded;
            const P& h = b.value();
            if (!rightDivides(f, h) || !leftDivides(f, h)) o.fail("bound not in Ra and aR: " + f.str());
            if (!isInvariant(h)) o.fail("bound not invariant: " + f.str());
        } else if constexpr (R::kind == RingKind::FF) {
            o.fail("finite-field polynomial reported " + std::string(toString(b.status)) + ": " + f.str());
        }
    }
    return ran;
}

Outcome propertySuite() {
    Outcome o;
    std::mt19937_64 rng(7);
    std::ostringstream d;
    auto ffGen = [&](const FFRing& r) {
        return [&rng, &r](int) {
            std::uniform_int_distribution<std::uint32_t> coef(0, r.field().order() - 1);
            int deg = static_cast<int>(rng() % 6);
            std::vector<FFElem> c;
            for (int k = 0; k <= deg; ++k) c.push_back(r.field().element(coef(rng)));
            return SkewPoly<FFRing>(r, c);
        };
    };
    const int n = 1000;
    for (const FFRing* r : {&f4(), &f9()}) {
        std::size_t bounded = 0;
        auto ran = propertySweep(o, *r, ffGen(*r), n, true, bounded);
        d << r->name() << " " << ran << " (" << bounded << " bounds), ";
    }
    {
        FFRing f8(GaloisField::get(2, 3));
        std::size_t bounded = 0;
        auto ran = propertySweep(o, f8, ffGen(f8), n, true, bounded);
        d << f8.name() << " " << ran << ", ";
    }
    {
        HQRing hq;
        std::uniform_int_distribution<long> c(-2, 2);
        auto gen = [&](int) {
            int deg = static_cast<int>(rng() % 4);
            std::vector<Quat> cs;
            for (int k = 0; k <= deg; ++k)
                cs.emplace_back(Rational(c(rng)), Rational(c(rng)), Rational(c(rng)), Rational(c(rng)));
            return SkewPoly<HQRing>(hq, cs);
        };
        std::size_t bounded = 0;
        auto ran = propertySweep(o, hq, gen, n, false, bounded);
        d << hq.name() << " " << ran << ", ";
    }
    {
        QXShiftRing qx;
        std::uniform_int_distribution<long> c(-3, 3);
        auto gen = [&](int) {
            int deg = static_cast<int>(rng() % 4);
            std::vector<RatFunc> cs;
            for (int k = 0; k <= deg; ++k) {
                RatFunc v = RatFunc(c(rng)) + RatFunc(c(rng)) * RatFunc::x();
                if (rng() % 5 == 0) v = v / (RatFunc::x() + RatFunc(1 + static_cast<long>(rng() % 3)));
                cs.push_back(v);
            }
            return SkewPoly<QXShiftRing>(qx, cs);
        };
        std::size_t bounded = 0;
        auto ran = propertySweep(o, qx, gen, n, false, bounded);
        d << qx.name() << " " << ran;
    }
    o.detail = d.str();
    return o;
}

Outcome latticeInvariant() {
    Outcome o;
    // extra sweeps on top of everything classified above
    for (const FFRing* r : {&f4(), &f9()})
        for (const auto& a : allMonics(*r, 1, r == &f4() ? 4 : 2)) classifyTracked(a);
    FFRing f8(GaloisField::get(2, 3));
    for (const auto& a : allMonics(f8, 1, 2)) classifyTracked(a);
    HQRing hq;
    for (const char* s : {"t^2+1", "t-i", "t-2", "(t-j)*(t-i)", "t^2-1", "t^3+t", "(t-i)^2", "t^2+t+1"})
        classifyTracked(parsePoly(hq, s));
    QXShiftRing qx;
    for (const char* s : {"t", "t+x", "t^2", "x*t^2+t", "t^2+1"}) classifyTracked(parsePoly(qx, s));
    const auto& f2 = GaloisField::get(2, 1);
    const auto& f3 = GaloisField::get(3, 1);
    for (const auto& A : {matrixRing2(f3), lowerTriangular2(f3), fieldAlgebra(GaloisField::get(2, 2)),
                          quotientAlgebra(parsePoly(FFRing(f2, 0, "x"), "x^2"))})
        trackLab(checkCharacterizations(A));
    for (const auto& b : gLatticeBreaches) o.fail(b);
    o.detail = std::to_string(gLatticeChecked) + " classifications, " + std::to_string(gLatticeBreaches.size()) +
               " violations";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"oracle equivalence GF(4) deg<=3, GF(9) deg<=2", oracleEquivalence},
        {"c-irreducible iff atom, GF(4) deg<=3", cIrreducibleIsAtom},
        {"worked example goldens", goldens},
        {"characterization equivalences", characterizations},
        {"reduced ideals are intersections of completely prime ideals", reducedTheorem},
        {"similarity witness round trip, GF(4) deg<=2", similarityRoundTrip},
        {"factorization unique up to similarity, 100 random GF(4)", ufdPermutation},
        {"algebraic property suite, 1000 cases per ring", propertySuite},
        {"implication lattice never violated", latticeInvariant},
    };
    int failed = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::printf("%s [%d] %s: %s\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str());
        for (const auto& f : o.failures) std::printf("       %s\n", f.c_str());
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
