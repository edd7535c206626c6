// Walks through one-sided primeness in H[t] and GF(4)[t; frob].
#include <iostream>

#include "oreprime/factorization.hpp"
#include "oreprime/parse.hpp"
#include "oreprime/primeness.hpp"
#include "oreprime/similarity.hpp"

using namespace oreprime;

template <class R>
void show(const R& ring, const char* text) {
    auto a = parsePoly(ring, text);
    auto c = classify(PrincipalLeftIdeal<R>(a));
    std::cout << ring.name() << " * (" << a << ")\n";
    std::cout << "  bound " << (c.bound.isBounded() ? c.bound.value().str() : toString(c.bound.status)) << "\n";
    std::cout << "  extremely " << toString(c.extremely.value) << ", completely " << toString(c.completely.value)
              << ", structurally " << toString(c.structurally.value) << ", weakly " << toString(c.weakly.value)
              << "\n";
}

int main() {
    HQRing hq;
    show(hq, "t^2+1");
    show(hq, "t-i");
    show(HQRing("x"), "(x-j)*(x-i)");

    auto f = factorAtoms(parsePoly(hq, "t^2+1"));
    std::cout << "t^2+1 =";
    for (const auto& p : f.atoms) std::cout << " (" << p << ")";
    std::cout << "\n";

    auto w = comaximalWitness(parsePoly(hq, "t-i"), parsePoly(hq, "t-j"));
    std::cout << "t-i ~ t-j via x = " << w.x << ", y = " << w.y << (w.checks.all() ? " (verified)" : "") << "\n";

    FFRing f4(GaloisField::get(2, 2));
    show(f4, "t+1");
    show(f4, "t^2");
}
