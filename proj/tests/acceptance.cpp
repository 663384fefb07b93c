// One line per acceptance criterion; exit status 0 iff every line passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "corpus.hpp"
#include "hopfkit/sequence.hpp"

using namespace hk;
using namespace hk::corpus;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void need(bool ok, const std::string& what) {
    if (!ok && pass) note << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct FamilyCase {
  int m, n;
  Field F;
};

std::vector<FamilyCase> family_cases() {
  auto F5 = make_field(5, 4), F7 = make_field(7, 6);
  return {{1, 1, F5}, {1, 2, F5}, {2, 1, F5}, {2, 2, F5}, {3, 1, F7}};
}

std::string label(const FamilyParams& P) {
  std::string s = "H(" + std::to_string(P.m) + "," + std::to_string(P.n) + ",d=";
  for (std::size_t i = 0; i < P.d.size(); ++i) s += (i ? "," : "") + std::to_string(P.d[i]);
  return s + ")";
}

void check_hopf(Outcome& o, const HopfData& H, const std::string& name, int& count) {
  o.need(verify_hopf_axioms(H).ok(), name);
  o.need(verify_hopf_axioms(dual_hopf(H)).ok(), name + "*");
  o.need(verify_double(drinfeld_double(base_level(H))).ok(), "D(" + name + ")");
  count += 3;
}

void c1_axiom_gate(Outcome& o) {
  auto t0 = Clock::now();
  int count = 0;
  auto F5 = make_field(5, 4);
  for (int r = 1; r <= 8; ++r) check_hopf(o, group_algebra(r, F5), "kZ_" + std::to_string(r), count);
  check_hopf(o, taft(2, F5), "T_2", count);
  check_hopf(o, taft(3, make_field(7, 3)), "T_3", count);
  check_hopf(o, taft(4, F5), "T_4", count);
  for (auto& c : family_cases())
    for (auto& d : all_d(c.m, c.n)) check_hopf(o, family_hopf(family_params(c.m, d, c.F)), label(family_params(c.m, d, c.F)), count);
  double t = seconds_since(t0);
  o.need(t <= 60.0, "runtime");
  o.note << count << " structures verified in " << t << " s";
}

void c2_taft(Outcome& o) {
  auto F7 = make_field(7, 3);
  auto T3 = taft(3, F7);
  auto B = base_level(T3);
  auto D = drinfeld_double(B);
  auto G = grouplikes(T3);
  auto X = characters(T3);
  std::size_t gd = grouplikes(D.D.alg).size(), s = s_group(B).size();
  o.need(G.size() == 3 && X.size() == 3 && gd == 9 && s == 3, "sizes");
  std::size_t gi = T3.index_of("g");
  Vector gp = T3.unit;
  for (int i = 0; i < 3; ++i) {
    auto it = std::find_if(X.begin(), X.end(), [&](const Vector& l) { return l[gi] == F7.omega_pow(i); });
    o.need(it != X.end() && inner_auto(T3, gp) == coinner_auto(T3, *it), "g^" + std::to_string(i));
    gp = T3.product(gp, unit_vector(F7, 9, gi));
  }
  o.note << "|G(T3)|=" << G.size() << " |chars|=" << X.size() << " |G(D)|=" << gd << " |S|=" << s;
}

void c3_sweedler(Outcome& o) {
  auto D = drinfeld_double(base_level(sweedler(make_field(5, 4))));
  std::size_t g = grouplikes(D.D.alg).size(), c = characters(D.D.alg).size();
  o.need(g == 4 && c == 2, "counts");
  o.note << "|G(D(H4))|=" << g << " |G(D(H4)*)|=" << c;
}

void c4_rmatrix(Outcome& o) {
  int count = 0;
  for (auto& c : family_cases())
    for (auto& d : all_d(c.m, c.n)) {
      auto P = family_params(c.m, d, c.F);
      auto H = family_hopf(P);
      for (int s : admissible_s(P)) {
        auto R = r_matrix(P, s);
        o.need(check_quasitriangular(H, R).ok(), label(P) + " s=" + std::to_string(s));
        o.need(is_triangular(H, R) == (s == P.m), label(P) + " triangular s=" + std::to_string(s));
        ++count;
      }
    }
  o.note << count << " (instance, s) pairs";
}

void c5_braiding(Outcome& o) {
  int count = 0;
  for (auto& c : family_cases())
    for (auto& d : all_d(c.m, c.n)) {
      auto P = family_params(c.m, d, c.F);
      auto E = exterior_factor(P);
      int sd = E.s * P.d.back();
      for (auto& M : r_modules(E)) {
        o.need(is_symmetric_pair(E.B.obj, M), label(P) + " symmetric");
        Matrix phi = braiding(E.B.obj, M), phinv = braiding_inv(M, E.B.obj);
        Matrix gm = M.rho(gpow(*E.H, -sd)), gp = M.rho(gpow(*E.H, sd));
        bool f = true;
        for (std::size_t j = 0; j < M.dim; ++j)
          for (std::size_t i = 0; i < M.dim; ++i)
            f = f && phi.at(i * 2 + 1, M.dim + j) == gm.at(i, j) && phinv.at(i * 2 + 1, M.dim + j) == gp.at(i, j);
        o.need(f, label(P) + " explicit values");
        ++count;
      }
    }
  o.note << count << " (factor, module) pairs";
}

void c6_decomposition(Outcome& o) {
  int count = 0;
  for (auto& c : family_cases())
    for (auto& d : all_d(c.m, c.n)) {
      auto P = family_params(c.m, d, c.F);
      o.need(decomposition_iso(P).ok(), label(P));
      ++count;
    }
  auto B = taft_braided_factor(3, make_field(7, 3));
  o.need(!check_symm_conds(B).all(), "Taft factor symmetric");
  bool refused = false;
  try {
    drinfeld_double(B);
  } catch (const Error& e) {
    refused = e.code() == Error::Code::SymmetricityViolated;
  }
  o.need(refused, "Taft factor double not refused");
  o.note << count << " decompositions; Taft factor refused";
}

void c7_azumaya(Outcome& o) {
  auto F5 = make_field(5, 4);
  auto H4 = share(sweedler(F5));
  auto Z3 = share(group_algebra(3, F5));
  auto E = exterior_factor(family_params(1, {1}, F5));
  auto L = share(biproduct(E.B));
  std::vector<std::pair<std::string, YDAlgebra>> algs = {
      {"End(k^2)", end_algebra(trivial_module(H4, 2))},
      {"End(H4)", end_algebra(regular_module(H4))},
      {"End(H4*)", end_algebra(dual_module(regular_module(H4)))},
      {"End(kZ3)", end_algebra(regular_module(Z3))},
      {"End(B)", end_algebra(E.B.obj)},
      {"End(kZ2, R)", end_algebra(r_modules(E)[0])}};
  for (long long xi = 1; xi <= 4; ++xi)
    algs.emplace_back("E_alpha xi=" + std::to_string(xi), e_alpha(E.B, L, scaling_automorphism(E.B, F5.from_int(xi))).E);
  for (auto& [name, A] : algs) {
    o.need(azumaya_check(A).ok(), name);
    o.need(center_in_C(A, Side::left).size() == 1 && center_in_C(A, Side::right).size() == 1, name + " center");
  }
  o.need(!azumaya_check(plain_algebra(trivial_hopf(F5), E.B.alg)).ok(), "k[x]/(x^2) passed");
  o.note << algs.size() << " Azumaya algebras (4 E_alpha); k[x]/(x^2) rejected";
}

void c8_exactness(Outcome& o) {
  auto t0 = Clock::now();
  auto F5 = make_field(5, 4);
  auto E = exterior_factor(family_params(1, {1}, F5));
  std::vector<std::pair<std::string, Matrix>> samples;
  for (long long xi = 1; xi <= 4; ++xi)
    samples.emplace_back(std::to_string(xi), scaling_automorphism(E.B, F5.from_int(xi)));
  auto r = exactness_report(E.B, samples);
  o.need(r.g_d_size == 1, "G(D(B)) nontrivial");
  std::string inner;
  for (std::size_t i = 0; i < 4; ++i) {
    if (r.samples[i].strongly_inner) inner += r.samples[i].label;
    o.need(r.samples[i].strongly_inner == (i == 0), "xi=" + r.samples[i].label);
  }
  double t = seconds_since(t0);
  o.need(t <= 10.0, "runtime");
  o.note << "|G(D(B))|=" << r.g_d_size << ", strongly inner at xi in {" << inner << "}, " << t << " s";
}

void c9_characters(Outcome& o) {
  int count = 0;
  for (auto F : {make_field(3, 2), make_field(5, 4)})
    for (auto& A : small_algebras(F)) {
      o.need(characters(A) == brute_characters(A), "F_" + std::to_string(F.p()) + " dim " + std::to_string(A.dim));
      ++count;
    }
  o.note << count << " algebras matched exhaustive search";
}

void c10_inner_action(Outcome& o) {
  int inner = 0, pi = 0;
  for (auto F : {make_field(5, 4), make_field(7, 6)}) {
    auto E = exterior_factor(family_params(1, {1}, F));
    auto L = share(biproduct(E.B));
    std::vector<Matrix> alphas;
    for (long long xi = 1; xi < F.p(); ++xi) alphas.push_back(scaling_automorphism(E.B, F.from_int(xi)));
    for (std::size_t i = 0; i < alphas.size(); i += 2) {
      auto A = e_alpha(E.B, L, alphas[(i + 1) % alphas.size()]).E;
      o.need(inner_action_iso_check(E.B, L, A, alphas[i]).ok(), "inner action F_" + std::to_string(F.p()));
      ++inner;
    }
    if (F.p() == 5)
      for (auto& a : alphas)
        for (auto& b : alphas) {
          o.need(pi_class_relation_check(E.B, L, a, b).ok(), "class relation");
          ++pi;
        }
  }
  o.note << inner << " inner-action isomorphisms, " << pi << " class relations";
}

void c11_condition(Outcome& o) {
  auto F5 = make_field(5, 4);
  auto H = nichols(2, F5);
  auto A = regular_module(share(H));
  std::vector<Vector> gp = {H.unit, unit_vector(F5, H.dim, H.index_of("g"))};
  int passed = 0;
  for (auto rows : {std::vector<std::vector<long long>>{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}, {{2, 1}, {0, 3}},
                    {{1, 1}, {1, 4}}}) {
    auto al = gl_automorphism(H, 2, Matrix::from_rows(F5, rows));
    bool ok = hopf_morphism_check(al, H, H).ok() && cond_bq_subgr_check(H, gp, al, A, 1);
    o.need(ok, "GL_2 automorphism");
    passed += ok;
  }
  Matrix sw = Matrix::identity(F5, H.dim);
  std::size_t g = H.index_of("g");
  sw.at(0, 0) = sw.at(g, g) = F5.zero();
  sw.at(0, g) = sw.at(g, 0) = F5.one();
  bool violated = !cond_bq_subgr_check(H, gp, sw, A, 1);
  o.need(violated, "violating map passed");
  o.note << passed << " automorphisms pass; swap(1,g) " << (violated ? "fails" : "passes");
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"axiom gate", c1_axiom_gate},
      {"Taft sequence over F_7", c2_taft},
      {"Sweedler double group-likes", c3_sweedler},
      {"R-matrix suite", c4_rmatrix},
      {"braiding symmetry", c5_braiding},
      {"biproduct decomposition and symmetry gate", c6_decomposition},
      {"Azumaya suite", c7_azumaya},
      {"exactness at desk scale", c8_exactness},
      {"characters vs exhaustive search", c9_characters},
      {"inner-action isomorphism and class relation", c10_inner_action},
      {"subgroup condition", c11_condition}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << "exception: " << e.what();
    }
    failed += !o.pass;
    std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.note.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
