// Walkthrough: Pell hybrid numbers, their characters, the Binet form and a
// Catalan check with a negative inner index.

#include <iostream>

#include "hybridseq/hybridseq.hpp"

int main() {
    using namespace hybridseq;

    HybridSeq pell = family_lookup("pell");
    SeqParams sp(pell.params());
    std::cout << "Pell " << pell.params().str() << ", alpha = " << sp.alpha().str() << "\n";
    for (long n = 0; n <= 5; ++n)
        std::cout << "  K_" << n << " = " << pell(n) << "   C = " << pell.character(n) << "\n";

    QuadHybrid binet = hybrid_term_binet(pell, 5);
    std::cout << "Binet K_5 rational: " << (all_rational(binet) ? "yes" : "no") << "\n";

    RationalHybrid k4k0 = pell(4) * pell(0), k0k4 = pell(0) * pell(4);
    std::cout << "K_4 K_0 = " << k4k0 << "\nK_0 K_4 = " << k0k4 << "\n";

    IdentityContext ctx(pell.params());
    auto report = check_catalan(ctx, 3, 2);  // touches K_{-1}
    std::cout << "catalan n=3 r=2: " << (report.passed ? "pass" : "FAIL") << "\n";
    return report.passed ? 0 : 1;
}
