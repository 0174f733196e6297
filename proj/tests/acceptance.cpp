// Acceptance suite: runs every top-level criterion at its stated size and
// prints one pass/fail line each.  Exit code 0 only if all pass.

#include <qtcat/creation.hpp>
#include <qtcat/dyck.hpp>
#include <qtcat/verify.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>
#include <thread>

using namespace qtcat;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, bool ok, double seconds) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << label
              << "  (" << seconds << " s)" << std::endl;
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

VerifyOptions options() {
    VerifyOptions opt;
    unsigned hw = std::thread::hardware_concurrency();
    opt.jobs = hw == 0 ? 1 : static_cast<int>(std::min(hw, 4u));
    if (const char* env = std::getenv("QTCAT_JOBS")) opt.jobs = std::max(1, std::atoi(env));
    return opt;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
    auto wanted = [&](int n) { return only.empty() || only.count(n) > 0; };

    std::string cache = "qtcat-acceptance-cache";
    if (const char* env = std::getenv("QTCAT_CACHE_DIR")) cache = env;
    set_htilde_cache_dir(cache);
    VerifyOptions opt = options();

    if (wanted(1)) {
        auto t0 = std::chrono::steady_clock::now();
        Report r = verify_main(6, opt);
        bool ok = r.all_pass() && r.warnings.empty();
        criterion(1, "main comparison for all n <= 6 (" + std::to_string(r.total()) + " cases)",
                  ok, seconds_since(t0));
        if (!ok)
            for (const auto& c : r.cases)
                if (!c.pass)
                    std::cout << "       first failure: " << c.case_id << " lhs=" << c.lhs
                              << " rhs=" << c.rhs << std::endl;
    }

    if (wanted(2)) {
        auto t0 = std::chrono::steady_clock::now();
        DyckPath p({0, 1, 2, 2, 1, 1, 2, 0, 1, 1, 2, 1, 0, 1, 2});
        std::vector<int> expect_b = {0, 1, 2, 3, 4, 4, 5, 5, 6, 6, 7, 6, 6, 4, 2};
        bool ok = p.b_sequence() == expect_b && p.area() == 17;
        DecoratedPath dp(p, std::vector<bool>(p.rows(), false));
        auto [rot, info] = rotate(dp);
        ok = ok &&
             rot.path().area_seq() == std::vector<int>{0, 1, 1, 2, 1, 0, 1, 2, 0, 1, 1, 0, 0, 1} &&
             rot.path().area() == 11;
        criterion(2, "worked fifteen-row example (b-sequence, areas, rotation)", ok,
                  seconds_since(t0));
    }

    if (wanted(3)) {
        auto t0 = std::chrono::steady_clock::now();
        const long catalan[9] = {0, 1, 2, 5, 14, 42, 132, 429, 1430};
        bool ok = true;
        for (int n = 1; n <= 8; ++n) {
            MultiPoly c = cat_poly(n, CatMethod::DecoratedSum);
            BigRat qt = c.eval(BigRat(1), BigRat(1), BigRat(0), BigRat(0));
            BigRat all = c.eval(BigRat(1), BigRat(1), BigRat(1), BigRat(1));
            ok = ok && qt == BigRat(catalan[n]);
            ok = ok && all == BigRat(catalan[n]) * BigRat(2).pow(n - 1);
        }
        double dt = seconds_since(t0);
        criterion(3, "specializations for n = 1..8", ok && dt < 120.0, dt);
    }

    if (wanted(4)) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (int n = 0; n <= 7; ++n)
            ok = ok && cat_poly(n, CatMethod::DecoratedSum) == cat_poly(n, CatMethod::ProductForm);
        criterion(4, "decorated-sum and product forms agree for n <= 7", ok, seconds_since(t0));
    }

    if (wanted(5)) {
        auto t0 = std::chrono::steady_clock::now();
        Report r = verify_comb(8, opt);
        double dt = seconds_since(t0);
        criterion(5,
                  "combinatorial recurrences and rotation bijection up to n = 8 (" +
                      std::to_string(r.total()) + " cases)",
                  r.all_pass() && dt < 300.0, dt);
    }

    if (wanted(6)) {
        auto t0 = std::chrono::steady_clock::now();
        Report r = verify_macdonald(6, opt);
        bool ok = r.all_pass();
        criterion(6, "Macdonald toolkit identities (" + std::to_string(r.total()) + " cases)",
                  ok, seconds_since(t0));
        if (!ok)
            for (const auto& c : r.cases)
                if (!c.pass) {
                    std::cout << "       first failure: " << c.case_id << std::endl;
                    break;
                }
    }

    if (wanted(7)) {
        auto t0 = std::chrono::steady_clock::now();
        Report r = verify_sf(opt);
        bool ok = r.all_pass();
        criterion(7,
                  "operator recurrence sweep, kernel routes, expansion lemmas (" +
                      std::to_string(r.total()) + " cases)",
                  ok, seconds_since(t0));
        if (!ok)
            for (const auto& c : r.cases)
                if (!c.pass) {
                    std::cout << "       first failure: " << c.case_id << std::endl;
                    break;
                }
    }

    if (wanted(8)) {
        auto t0 = std::chrono::steady_clock::now();
        RatQT q(LaurentQT::q()), t(LaurentQT::t());
        bool ok = hook_coefficient(nabla(sf_e(2)), 0, 2) == q + t;
        ok = ok && hook_coefficient(nabla(c_alpha(Composition({1, 1}))), 0, 2) == q;
        ok = ok && hook_coefficient(nabla(c_alpha(Composition({2}))), 0, 2) == t;
        ok = ok && same_symfunc(c_alpha(Composition({1})), convert(sf_e(1), Basis::Schur));
        ok = ok && same_symfunc(c_alpha(Composition({2})),
                                convert(sf_h(2), Basis::Schur).scaled(-RatQT(LaurentQT::q(-1))));
        const HtildeTable& t2 = htilde_table(2);
        ok = ok && t2.columns_s[t2.index.at(Partition({2}))] ==
                       sf_s(Partition({2})) + sf_s(Partition({1, 1})).scaled(q);
        ok = ok && t2.columns_s[t2.index.at(Partition({1, 1}))] ==
                       sf_s(Partition({2})) + sf_s(Partition({1, 1})).scaled(t);
        criterion(8, "pinned operator micro-values", ok, seconds_since(t0));
    }

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria FAILED")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
