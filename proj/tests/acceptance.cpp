// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout, exit code = number of failed criteria.

#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "geokit/block.hpp"
#include "geokit/cartwright_steger.hpp"
#include "geokit/cyclotomic.hpp"
#include "geokit/int_matrix.hpp"
#include "geokit/recipe.hpp"
#include "geokit/relation_sets.hpp"
#include "geokit/report.hpp"

using namespace geokit;

namespace {

int failures = 0;

void line(int criterion, bool pass, const std::string &detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << detail
              << "\n";
    if (!pass) ++failures;
}

Cyclotomic random_cyc(std::mt19937 &rng) {
    std::uniform_int_distribution<long> d(-50, 50);
    return Cyclotomic(d(rng), d(rng), d(rng), d(rng));
}

// 1. (2z - z^3)^2 = 3 exactly; conjugation involution and ring axioms over
//    1000 random cases.
void criterion_1() {
    bool ok = Cyclotomic::sqrt3() * Cyclotomic::sqrt3() == Cyclotomic(3);
    std::mt19937 rng(1001);
    for (int i = 0; ok && i < 1000; ++i) {
        Cyclotomic a = random_cyc(rng), b = random_cyc(rng), c = random_cyc(rng);
        ok = ok && a * b == b * a;
        ok = ok && (a * b) * c == a * (b * c);
        ok = ok && a * (b + c) == a * b + a * c;
        ok = ok && a.conj().conj() == a;
        ok = ok && (a * b).conj() == a.conj() * b.conj();
    }
    line(1, ok, "(2z-z^3)^2 = 3 exactly; ring axioms and conjugation involution over "
                "1000 random elements");
}

// 2. Form preservation for u, v, j, b and a unit scalar witness for each of
//    the three printed relations.
void criterion_2() {
    cs::RelationReport rep = cs::relation_report();
    bool form_ok = true;
    for (const auto &f : rep.form_preservation) form_ok = form_ok && f.preserves;
    bool relations_ok = true;
    std::ostringstream detail;
    detail << "lattice data: form preservation " << (form_ok ? "exact for u, v, j, b" : "FAILED")
           << "; relation witnesses:";
    for (const auto &r : rep.relations) {
        relations_ok = relations_ok && r.holds_mod_scalar && r.lambda_is_unit;
        detail << " [" << r.name << ": "
               << (r.holds_mod_scalar ? "lambda = " + r.lambda.str() : "none") << "]";
    }
    if (!relations_ok)
        detail << " -- the printed relations are unsatisfiable for the printed matrices "
                  "(exhaustively checked; run `geokit cs-verify` for the observed exact "
                  "relations u^4 = 1, b^3 = 1, v^2 = j^3, ju = uj, jv = vj)";
    line(2, form_ok && relations_ok, detail.str());
}

// 3. SNF properties on 500 random matrices up to 8x8, with mod-p rank
//    agreement away from torsion primes.
void criterion_3() {
    std::mt19937 rng(3003);
    std::uniform_int_distribution<size_t> dim(1, 8);
    std::uniform_int_distribution<int> val(-20, 20);
    const mpz_class primes[4] = {2, 3, 5, 7};
    bool ok = true;
    for (int t = 0; ok && t < 500; ++t) {
        IntMatrix a(dim(rng), dim(rng));
        for (size_t i = 0; i < a.rows(); ++i)
            for (size_t j = 0; j < a.cols(); ++j) a.at(i, j) = val(rng);
        SnfResult s = snf(a);
        ok = ok && s.U * a * s.V == s.S;
        mpz_class du = s.U.det(), dv = s.V.det();
        ok = ok && (du == 1 || du == -1) && (dv == 1 || dv == -1);
        for (size_t i = 0; i + 1 < s.invariant_factors.size(); ++i)
            ok = ok && s.invariant_factors[i + 1] % s.invariant_factors[i] == 0;
        for (const mpz_class &p : primes) {
            size_t rp = rank_mod_p(a, p);
            ok = ok && rp <= s.invariant_factors.size();
            bool torsion_prime = false;
            for (const auto &f : s.invariant_factors)
                if (f % p == 0) torsion_prime = true;
            if (!torsion_prime) ok = ok && rp == s.invariant_factors.size();
        }
    }
    line(3, ok, "SNF on 500 random matrices <= 8x8: U*A*V = S, unimodularity, divisibility "
                "chain, and mod-p rank agreement for p in {2,3,5,7} away from torsion primes");
}

// 4. H1(Y_n(m)) trivial for n in 2..6, m in 1..3, via the surgery pipeline
//    and via the printed relations directly.
void criterion_4() {
    bool ok = true;
    for (int n = 2; n <= 6 && ok; ++n)
        for (long long m = 1; m <= 3 && ok; ++m) {
            Report rep = run_recipe(build_recipe("Yn", {{"n", n}, {"m", m}}));
            ok = ok && !rep.error && rep.h1 && rep.h1->rank == 0 && rep.h1->torsion.empty();
            ok = ok && h1(data::yn_relations(n, m)).trivial();
        }
    line(4, ok, "H1 of the surgered Sigma2 x Sigma_n family is trivial for n in {2..6}, "
                "m in {1..3}, by pipeline and by direct abelianization");
}

// 5. The genus-3-times-torus family: free rank 2 plus the diag(p, q)
//    invariant-factor pattern over {1,2,3}^3.
void criterion_5() {
    bool ok = true;
    for (long long p = 1; p <= 3 && ok; ++p)
        for (long long q = 1; q <= 3 && ok; ++q)
            for (long long m = 1; m <= 3 && ok; ++m) {
                AbelianGroup g = h1(data::y1_relations(p, q, m));
                ok = ok && g.rank == 2;
                AbelianGroup pattern = cokernel(IntMatrix::from_rows(
                    {{static_cast<long>(p), 0}, {0, static_cast<long>(q)}}));
                ok = ok && g.torsion == pattern.torsion;
            }
    line(5, ok, "H1 of the surgered Sigma3 x T2 family has rank 2 and the diag(p,q) "
                "torsion pattern over (p,q,m) in {1,2,3}^3");
}

// 6. The glued manifold: e = 12, sigma = 0, rational b1 = 0, model
//    5CP#5CPbar with the odd-parity annotation; torsion lower bound
//    contains Z/p for q = 1, p in {2,3,5,7}.
void criterion_6() {
    Report rep = run_recipe(build_recipe("X1"));
    bool ok = !rep.error && rep.euler == 12 && rep.sigma == 0 && rep.h1 && rep.h1->rank == 0 &&
              rep.profile && rep.profile->model == "5CP#5CPbar" && rep.parity == "odd";
    for (long long p : {2, 3, 5, 7}) {
        Report r = run_recipe(build_recipe("X1", {{"p", p}, {"q", 1}}));
        bool contains = false;
        if (r.h1)
            for (const auto &t : r.h1->torsion)
                if (t == std::to_string(p)) contains = true;
        ok = ok && contains && r.h1->lower_bound;
    }
    line(6, ok, "glued manifold: e = 12, sigma = 0, rational b1 = 0, 5CP#5CPbar, odd "
                "parity; torsion lower bound contains Z/p for q = 1, p in {2,3,5,7}");
}

// 7. Adjunction: (1,3) -> 3 and (0,4) -> 3.
void criterion_7() {
    bool ok = adjunction_genus(1, 3) == 3 && adjunction_genus(0, 4) == 3;
    line(7, ok, "adjunction genus: (S.S, K.S) = (1,3) and (0,4) both give genus 3");
}

// 8. The even-form gluing: e = 8, sigma = 0, model 3(S2xS2).
void criterion_8() {
    Report rep = run_recipe(build_recipe("spinX"));
    bool ok = !rep.error && rep.euler == 8 && rep.sigma == 0 && rep.profile &&
              rep.profile->model == "3(S2xS2)";
    line(8, ok, "Sigma2 x S2 gluing: e = 8 (-4 + 4 + 8), sigma = 0, rational model 3(S2xS2)");
}

// 9. The built-in block table.
void criterion_9() {
    Block m = mumford_m();
    CharNumbers mc = char_numbers(m);
    bool ok = m.euler == 3 && m.signature == 1 && m.b1 && *m.b1 == 0 && mc.c1sq == 9 &&
              mc.on_bmy_line;
    for (int n = 1; n <= 3; ++n) {
        Block c = cs_surface(n);
        CharNumbers cc = char_numbers(c);
        ok = ok && c.euler == 3 * n && c.signature == n && cc.c1sq == 9 * n && cc.on_bmy_line;
    }
    Block c1 = cs_surface(1);
    Profile p1 = homology_profile(c1);
    ok = ok && p1.b2 == 5 && c1.euler == 2 - 2 * *c1.b1 + p1.b2;
    line(9, ok, "block table: M = (3, 1, b1 0, c1^2 9, extremal line); covers (3n, n, 9n, "
                "extremal); Betti consistency e = 2 - 4 + 5 = 3");
}

// 10. The chain family surfaces its Euler-number discrepancy as a flag while
//     still exiting 0.
void criterion_10() {
    Report rep = run_recipe(build_recipe("Xn", {{"n", 2}}));
    bool ok = !rep.error && rep.chain && rep.chain->source_value == 16 &&
              rep.chain->pairwise_value == 24 && rep.chain->target_value == 8;
    bool flagged = false;
    for (const auto &f : rep.flags)
        if (f.message.find("4n+8") != std::string::npos) flagged = true;
    std::string text = rep.render_text();
    ok = ok && flagged && text.find("16") != std::string::npos &&
         text.find("24") != std::string::npos && text.find("= 8") != std::string::npos &&
         exit_code_for(rep) == 0;
    line(10, ok, "chain run with n = 2 reports source 4n+8 = 16, pairwise 12n = 24, target "
                 "model 4n = 8, carries a flag, and exits 0");
}

// 11. Gauge-theoretic claims appear only as cited annotations.
void criterion_11() {
    Report rep = run_recipe(build_recipe("X1"));
    bool usher = false, sw = false, pi1 = false, all_cited = true;
    for (const auto &a : rep.annotations) {
        if (a.message.find("Usher") != std::string::npos) usher = true;
        if (a.message.find("Seiberg-Witten") != std::string::npos) sw = true;
        if (a.message.find("imple connectivity") != std::string::npos) pi1 = true;
        all_cited = all_cited && !a.citation.empty();
    }
    line(11, usher && sw && pi1 && all_cited,
         "minimality, Seiberg-Witten distinctness and simple-connectivity prospects appear "
         "as cited annotations, not computations");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) + " criterion(s) failed")
              << "\n";
    return failures;
}
