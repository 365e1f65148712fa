// End-to-end acceptance run. One line per criterion; exit status is nonzero
// if any criterion fails. Runtime limits are part of each criterion.
//
// usage: acceptance [path-to-qser]

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "qser/qproducts.hpp"
#include "qser/rr_series.hpp"
#include "qser/verify.hpp"

namespace {

using qser::NamedSeries;
using qser::Status;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) {
    out.append(buf.data(), n);
  }
  status = pclose(pipe.release());
  return out;
}

void known_zeros(Outcome& o) {
  for (std::size_t n : {2, 4, 9}) {
    o.require(qser::coefficient(NamedSeries::c, n) == 0, "c(" + std::to_string(n) + ") = 0");
  }
  for (std::size_t n : {3, 8, 13, 23}) {
    o.require(qser::coefficient(NamedSeries::d, n) == 0, "d(" + std::to_string(n) + ") = 0");
  }
}

void richmond_patterns(Outcome& o) {
  const auto c = qser::scan_signs(NamedSeries::c, qser::richmond_c_pattern(), 5000);
  const auto d = qser::scan_signs(NamedSeries::d, qser::richmond_d_pattern(), 5000);
  o.detail << " c: " << qser::to_string(c.status) << ", d: " << qser::to_string(d.status);
  o.require(c.status == Status::Verified, "richmond-c");
  o.require(d.status == Status::Verified, "richmond-d");
}

void theorem_patterns(Outcome& o) {
  const std::array<std::pair<NamedSeries, qser::SignPattern>, 4> scans{{
      {NamedSeries::A, qser::theorem2_pattern()},
      {NamedSeries::B, qser::theorem3_pattern()},
      {NamedSeries::C, qser::theorem4_pattern()},
      {NamedSeries::D, qser::theorem5_pattern()},
  }};
  int thm = 2;
  for (const auto& [name, pattern] : scans) {
    const auto r = qser::scan_signs(name, pattern, 2500);
    o.require(r.status == Status::Verified, "thm" + std::to_string(thm));
    ++thm;
  }
  o.require(qser::coefficient(NamedSeries::C, 0) == 1, "C(0) = 1");
  o.require(qser::coefficient(NamedSeries::D, 0) == 1, "D(0) = 1");
}

void identity_suite(Outcome& o) {
  using qser::Dissection;
  using qser::GenFun;
  const std::size_t order = 300;
  const std::vector<qser::Report> reports{
      qser::verify_identity_B20(order),
      qser::verify_identity_R5(order),
      qser::verify_genfun(GenFun::A_full, order),
      qser::verify_genfun(GenFun::B_full, order),
      qser::verify_genfun(GenFun::D_full, order),
      qser::verify_dissection(Dissection::A0, order),
      qser::verify_dissection(Dissection::B0, order),
      qser::verify_dissection(Dissection::D1, order),
      qser::verify_dissection(Dissection::C0, order),
  };
  int verified = 0;
  for (const auto& r : reports) {
    if (r.status == Status::Verified && r.order_checked == order) {
      ++verified;
    } else {
      o.require(false, r.subject);
    }
  }
  o.detail << ' ' << verified << "/9 verified";
}

void counterexample_values(Outcome& o) {
  // Brute force from the defining products, machine integers, order 16.
  const std::size_t n = 16;
  const auto R = oracle::mul(
      oracle::mul(oracle::product(1, 5, n), oracle::product(4, 5, n)),
      oracle::inv(oracle::mul(oracle::product(2, 5, n), oracle::product(3, 5, n))));
  const auto B = oracle::pow(R, 5);
  const auto A = oracle::inv(B);
  const auto D = oracle::mul(oracle::subst(R, 5, n), A);
  o.require(R == oracle::rr_continued_fraction(n), "oracle product = continued fraction");

  o.require(A[0] == 1 && B[0] == 1, "oracle A(0) = B(0) = 1");
  o.require(A[10] == -175 && A[15] < 0 && B[5] == -26 && D[1] == 5,
            "oracle frozen values");

  const auto eA = qser::build(NamedSeries::A, n);
  const auto eB = qser::build(NamedSeries::B, n);
  const auto eD = qser::build(NamedSeries::D, n);
  for (std::size_t k = 0; k < n; ++k) {
    o.require(eA[k] == static_cast<long>(A[k]), "engine A(" + std::to_string(k) + ")");
    o.require(eB[k] == static_cast<long>(B[k]), "engine B(" + std::to_string(k) + ")");
    o.require(eD[k] == static_cast<long>(D[k]), "engine D(" + std::to_string(k) + ")");
  }
  o.require(eA[0] == 1 && eB[0] == 1, "A(0) = B(0) = 1");
  o.require(eA[10] == -175, "A(10) = -175");
  o.require(sgn(eA[15]) < 0, "A(15) < 0");
  o.require(eB[5] == -26, "B(5) = -26");
  o.require(eD[1] == 5, "D(1) = 5");
  o.detail << " A(0)=" << eA[0].get_str() << " A(10)=" << eA[10].get_str()
           << " A(15)=" << eA[15].get_str() << " B(0)=" << eB[0].get_str()
           << " B(5)=" << eB[5].get_str() << " D(1)=" << eD[1].get_str();
}

void conjecture13(Outcome& o) {
  const auto r = qser::check_conjecture13(1000);
  const std::vector<std::pair<std::string, std::vector<std::size_t>>> want{
      {"A", {0}}, {"B", {0}}, {"D", {}}};
  o.require(r.status == Status::Falsified, "status falsified");
  o.require(r.falsified == want, "falsified exactly at A:0, B:0");
  o.detail << " falsified:";
  for (const auto& [label, at] : r.falsified) {
    o.detail << ' ' << label << '[';
    for (std::size_t i = 0; i < at.size(); ++i) o.detail << (i ? "," : "") << at[i];
    o.detail << ']';
  }
}

void oracle_equivalences(Outcome& o) {
  o.require(qser::build_sum_form(NamedSeries::G_sum, 200) ==
                qser::build(NamedSeries::G, 200),
            "G sum = product");
  o.require(qser::build_sum_form(NamedSeries::H_sum, 200) ==
                qser::build(NamedSeries::H, 200),
            "H sum = product");
  o.require(qser::euler_f(1, 500) == qser::euler_f_product(1, 500),
            "pentagonal f1 = product");
}

void asymptotic(Outcome& o) {
  const auto check = qser::compare_asymptotic_c(100, 2000);
  o.detail << " agreement " << check.agreeing << '/' << check.compared;
  if (!check.mismatches.empty()) {
    o.detail << " mismatches at";
    for (std::size_t n : check.mismatches) o.detail << ' ' << n;
  }
  o.require(check.compared > 0, "nonempty comparison");
  o.require(check.agreement() >= qser::kSignAgreementThreshold, ">= 99% agreement");
}

void determinism(Outcome& o, const std::string& qser_path) {
  if (qser_path.empty()) {
    o.require(false, "path to qser not given");
    return;
  }
  const std::string cmd = qser_path + " verify all --order 300 --format json";
  int s1 = 0, s2 = 0;
  const auto a = run_capture(cmd, s1);
  const auto b = run_capture(cmd, s2);
  o.require(s1 == 0 && s2 == 0, "exit status 0");
  o.require(!a.empty() && a == b, "byte-identical stdout");
  o.detail << ' ' << a.size() << " bytes";
}

}  // namespace

int main(int argc, char** argv) {
  const std::string qser_path = argc > 1 ? argv[1] : "";
  const std::vector<Criterion> criteria{
      {1, "known zeros of c and d", 1.0, known_zeros},
      {2, "periodic sign patterns of c, d to n = 5000", 30.0, richmond_patterns},
      {3, "sign patterns of A, B, C, D to n = 2500", 60.0, theorem_patterns},
      {4, "identity suite at order 300", 60.0, identity_suite},
      {5, "counterexample values A(0), A(10), A(15), B(0), B(5), D(1)", 60.0,
       counterexample_values},
      {6, "conjecture13 falsified exactly at n = 0 for A and B", 60.0, conjecture13},
      {7, "sum/product and pentagonal/product equivalences", 60.0, oracle_equivalences},
      {8, "asymptotic sign agreement for c(n), n in [100, 2000]", 60.0, asymptotic},
      {9, "deterministic verify all --order 300 --format json", 60.0,
       [&](Outcome& o) { determinism(o, qser_path); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    qser::SeriesRegistry::global().clear();
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= c.limit_seconds) {
      o.require(false, "runtime limit " + std::to_string(c.limit_seconds) + " s");
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %d. %s (%.2f s)%s\n", o.pass ? "PASS" : "FAIL", c.id, c.title,
                secs, o.detail.str().c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
