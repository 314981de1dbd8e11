#include "ilab/tables.hpp"

#include <initializer_list>

namespace ilab::tables {
namespace {

struct MTerm {
  int c;
  int k, l;
};

SkewEndo mkMat(int n, const ExactReal& pre, std::initializer_list<MTerm> terms) {
  MatQ m(n);
  for (const MTerm& t : terms) {
    ExactReal v = pre * ExactReal(t.c);
    m(t.k - 1, t.l - 1) += v;
  }
  return SkewEndo(std::move(m));
}

FormQ mkForm2(int n, const ExactReal& pre, std::initializer_list<MTerm> terms) {
  // (c, i, j) means c*dx^{ij}, literal index order: dx^{42} = -dx^{24}
  FormQ f(n, 2);
  for (const MTerm& t : terms)
    f += (pre * ExactReal(t.c)) * FormQ::dx(n, {t.k, t.l});
  return f;
}

const ExactReal kQuarter = ExactReal(ratio(1, 4));
const ExactReal kInv4Sqrt3 = ExactReal::sqrt3() * ratio(1, 12);  // 1/(4 sqrt3)
const ExactReal kInvSqrt3 = ExactReal::sqrt3() * ratio(1, 3);    // 1/sqrt3
const ExactReal kInvSqrt6 = ExactReal::sqrt6() * ratio(1, 6);    // 1/sqrt6

}  // namespace

FormQ sigmaR4() { return FormQ::dx(4, {1, 2}) + FormQ::dx(4, {3, 4}); }
FormQ psiR4() { return FormQ::dx(4, {1, 3}) - FormQ::dx(4, {2, 4}); }
FormQ psiHatR4() { return FormQ::dx(4, {1, 4}) + FormQ::dx(4, {2, 3}); }

FormQ phiR7() {
  // dx^{123} + dx^1^(dx^{45}+dx^{67}) + dx^2^(dx^{46}+dx^{75}) - dx^3^(dx^{47}+dx^{56})
  FormQ f = FormQ::dx(7, {1, 2, 3});
  f += wedge(FormQ::dx(7, {1}), FormQ::dx(7, {4, 5}) + FormQ::dx(7, {6, 7}));
  f += wedge(FormQ::dx(7, {2}), FormQ::dx(7, {4, 6}) + FormQ::dx(7, {7, 5}));
  f -= wedge(FormQ::dx(7, {3}), FormQ::dx(7, {4, 7}) + FormQ::dx(7, {5, 6}));
  return f;
}

FormQ starPhiR7() {
  // dx^{4567} + dx^{23}^(dx^{45}+dx^{67}) + dx^{31}^(dx^{46}+dx^{75})
  //           - dx^{12}^(dx^{47}+dx^{56})
  FormQ f = FormQ::dx(7, {4, 5, 6, 7});
  f += wedge(FormQ::dx(7, {2, 3}), FormQ::dx(7, {4, 5}) + FormQ::dx(7, {6, 7}));
  f += wedge(FormQ::dx(7, {3, 1}), FormQ::dx(7, {4, 6}) + FormQ::dx(7, {7, 5}));
  f -= wedge(FormQ::dx(7, {1, 2}), FormQ::dx(7, {4, 7}) + FormQ::dx(7, {5, 6}));
  return f;
}

FormQ cayleyR8() {
  return wedge(embed(phiR7(), 8), FormQ::dx(8, {8})) + embed(starPhiR7(), 8);
}

FormQ kahlerR6() {
  return FormQ::dx(6, {1, 2}) + FormQ::dx(6, {3, 4}) + FormQ::dx(6, {5, 6});
}

FormQ holVolReR6() {
  return FormQ::dx(6, {1, 3, 5}) - FormQ::dx(6, {2, 4, 5}) - FormQ::dx(6, {1, 4, 6}) -
         FormQ::dx(6, {2, 3, 6});
}

FormQ holVolImR6() {
  return FormQ::dx(6, {1, 3, 6}) - FormQ::dx(6, {2, 4, 6}) + FormQ::dx(6, {1, 4, 5}) +
         FormQ::dx(6, {2, 3, 5});
}

FormQ sigmaI(int i, int nq) {
  if (i < 1 || i > 3 || nq < 1 || 4 * nq > 8)
    throw std::invalid_argument("sigmaI: bad arguments");
  const int n = 4 * nq;
  FormQ f(n, 2);
  for (int b = 0; b < nq; ++b) {
    const int o = 4 * b;
    switch (i) {
      case 1:
        f += FormQ::dx(n, {o + 1, o + 2}) + FormQ::dx(n, {o + 3, o + 4});
        break;
      case 2:
        f += FormQ::dx(n, {o + 1, o + 3}) + FormQ::dx(n, {o + 4, o + 2});
        break;
      default:
        f += FormQ::dx(n, {o + 1, o + 4}) + FormQ::dx(n, {o + 2, o + 3});
        break;
    }
  }
  return f;
}

FormQ fundamental4Form(int nq) {
  const int n = 4 * nq;
  FormQ f(n, 4);
  for (int i = 1; i <= 3; ++i) {
    FormQ s = sigmaI(i, nq);
    f += wedge(s, s);
  }
  return ExactReal(ratio(1, 2)) * f;
}

const LieSubalgebra& su2Table() {
  static const LieSubalgebra table = [] {
    const ExactReal h = ExactReal(ratio(1, 2));
    std::vector<SkewEndo> e = {
        mkMat(4, h, {{-1, 1, 2}, {1, 2, 1}, {1, 3, 4}, {-1, 4, 3}}),
        mkMat(4, h, {{-1, 1, 3}, {1, 3, 1}, {1, 4, 2}, {-1, 2, 4}}),
        mkMat(4, h, {{-1, 1, 4}, {1, 4, 1}, {1, 2, 3}, {-1, 3, 2}}),
    };
    std::vector<FormQ> beta = {
        mkForm2(4, 1, {{1, 1, 2}, {-1, 3, 4}}),
        mkForm2(4, 1, {{1, 1, 3}, {-1, 4, 2}}),
        mkForm2(4, 1, {{1, 1, 4}, {-1, 2, 3}}),
    };
    return LieSubalgebra(4, std::move(e), std::move(beta), {ratio(2), ratio(2), ratio(2)});
  }();
  return table;
}

const LieSubalgebra& g2Table() {
  static const LieSubalgebra table = [] {
    const ExactReal q = kQuarter, s = kInv4Sqrt3;
    std::vector<SkewEndo> e = {
        mkMat(7, q, {{1, 2, 3}, {-1, 3, 2}, {-1, 4, 5}, {1, 5, 4}}),
        mkMat(7, -s, {{1, 2, 3}, {-1, 3, 2}, {1, 4, 5}, {-1, 5, 4}, {-2, 6, 7}, {2, 7, 6}}),
        mkMat(7, q, {{1, 1, 3}, {-1, 3, 1}, {1, 4, 6}, {-1, 6, 4}}),
        mkMat(7, -s, {{1, 1, 3}, {-1, 3, 1}, {-1, 4, 6}, {1, 6, 4}, {-2, 5, 7}, {2, 7, 5}}),
        mkMat(7, -q, {{1, 1, 2}, {-1, 2, 1}, {1, 4, 7}, {-1, 7, 4}}),
        mkMat(7, s, {{1, 1, 2}, {-1, 2, 1}, {-1, 4, 7}, {1, 7, 4}, {2, 5, 6}, {-2, 6, 5}}),
        mkMat(7, q, {{1, 1, 5}, {-1, 5, 1}, {-1, 2, 6}, {1, 6, 2}}),
        mkMat(7, s, {{1, 1, 5}, {-1, 5, 1}, {1, 2, 6}, {-1, 6, 2}, {2, 3, 7}, {-2, 7, 3}}),
        mkMat(7, -q, {{1, 1, 4}, {-1, 4, 1}, {-1, 2, 7}, {1, 7, 2}}),
        mkMat(7, -s, {{1, 1, 4}, {-1, 4, 1}, {1, 2, 7}, {-1, 7, 2}, {-2, 3, 6}, {2, 6, 3}}),
        mkMat(7, q, {{1, 1, 7}, {-1, 7, 1}, {1, 2, 4}, {-1, 4, 2}}),
        mkMat(7, s, {{1, 1, 7}, {-1, 7, 1}, {-1, 2, 4}, {1, 4, 2}, {-2, 3, 5}, {2, 5, 3}}),
        mkMat(7, -q, {{1, 1, 6}, {-1, 6, 1}, {1, 2, 5}, {-1, 5, 2}}),
        mkMat(7, -s, {{1, 1, 6}, {-1, 6, 1}, {-1, 2, 5}, {1, 5, 2}, {2, 3, 4}, {-2, 4, 3}}),
    };
    std::vector<FormQ> beta = {
        mkForm2(7, -q, {{1, 2, 3}, {-1, 4, 5}}),
        mkForm2(7, s, {{1, 2, 3}, {1, 4, 5}, {-2, 6, 7}}),
        mkForm2(7, -q, {{1, 1, 3}, {1, 4, 6}}),
        mkForm2(7, s, {{1, 1, 3}, {-1, 4, 6}, {-2, 5, 7}}),
        mkForm2(7, q, {{1, 1, 2}, {1, 4, 7}}),
        mkForm2(7, -s, {{1, 1, 2}, {-1, 4, 7}, {2, 5, 6}}),
        mkForm2(7, -q, {{1, 1, 5}, {-1, 2, 6}}),
        mkForm2(7, -s, {{1, 1, 5}, {1, 2, 6}, {2, 3, 7}}),
        mkForm2(7, q, {{1, 1, 4}, {-1, 2, 7}}),
        mkForm2(7, s, {{1, 1, 4}, {1, 2, 7}, {-2, 3, 6}}),
        mkForm2(7, -q, {{1, 1, 7}, {1, 2, 4}}),
        mkForm2(7, -s, {{1, 1, 7}, {-1, 2, 4}, {-2, 3, 5}}),
        mkForm2(7, q, {{1, 1, 6}, {1, 2, 5}}),
        mkForm2(7, s, {{1, 1, 6}, {-1, 2, 5}, {2, 3, 4}}),
    };
    std::vector<Rational> scale(14, ratio(1));
    return LieSubalgebra(7, std::move(e), std::move(beta), std::move(scale));
  }();
  return table;
}

const LieSubalgebra& spin7Table() {
  static const LieSubalgebra table = [] {
    const ExactReal r3 = kInvSqrt3, r6 = kInvSqrt6, one = ExactReal(1);
    std::vector<SkewEndo> e = {
        mkMat(8, one, {{-1, 1, 2}, {1, 2, 1}, {-1, 4, 7}, {1, 7, 4}}),
        mkMat(8, r3, {{-1, 1, 2}, {1, 2, 1}, {1, 4, 7}, {-1, 7, 4}, {-2, 5, 6}, {2, 6, 5}}),
        // e_3 as printed ends "-E_{56}+E_{56}"; repaired to "-E_{56}+E_{65}"
        // (= isoInv of the printed beta_3)
        mkMat(8, r6,
              {{1, 1, 2}, {-1, 2, 1}, {-3, 3, 8}, {3, 8, 3}, {-1, 4, 7}, {1, 7, 4},
               {-1, 5, 6}, {1, 6, 5}}),
        mkMat(8, one, {{-1, 1, 3}, {1, 3, 1}, {-1, 4, 6}, {1, 6, 4}}),
        mkMat(8, r3, {{1, 1, 3}, {-1, 3, 1}, {-1, 4, 6}, {1, 6, 4}, {-2, 5, 7}, {2, 7, 5}}),
        mkMat(8, r6,
              {{-1, 1, 3}, {1, 3, 1}, {-3, 2, 8}, {3, 8, 2}, {1, 4, 6}, {-1, 6, 4},
               {-1, 5, 7}, {1, 7, 5}}),
        mkMat(8, one, {{1, 1, 4}, {-1, 4, 1}, {-1, 2, 7}, {1, 7, 2}}),
        mkMat(8, r3, {{1, 1, 4}, {-1, 4, 1}, {1, 2, 7}, {-1, 7, 2}, {-2, 5, 8}, {2, 8, 5}}),
        mkMat(8, r6,
              {{1, 1, 4}, {-1, 4, 1}, {1, 2, 7}, {-1, 7, 2}, {-3, 3, 6}, {3, 6, 3},
               {1, 5, 8}, {-1, 8, 5}}),
        mkMat(8, one, {{-1, 1, 5}, {1, 5, 1}, {-1, 4, 8}, {1, 8, 4}}),
        mkMat(8, r3, {{1, 1, 5}, {-1, 5, 1}, {-2, 2, 6}, {2, 6, 2}, {-1, 4, 8}, {1, 8, 4}}),
        mkMat(8, r6,
              {{-1, 1, 5}, {1, 5, 1}, {-1, 2, 6}, {1, 6, 2}, {-3, 3, 7}, {3, 7, 3},
               {1, 4, 8}, {-1, 8, 4}}),
        mkMat(8, one, {{1, 1, 6}, {-1, 6, 1}, {-1, 7, 8}, {1, 8, 7}}),
        // e_14 as printed ends "-E_{78}+E_{88}"; repaired to "-E_{78}+E_{87}"
        // (= isoInv of the printed beta_14)
        mkMat(8, r3, {{-1, 1, 6}, {1, 6, 1}, {-2, 2, 5}, {2, 5, 2}, {-1, 7, 8}, {1, 8, 7}}),
        mkMat(8, r6,
              {{-1, 1, 6}, {1, 6, 1}, {1, 2, 5}, {-1, 5, 2}, {-3, 3, 4}, {3, 4, 3},
               {-1, 7, 8}, {1, 8, 7}}),
        mkMat(8, one, {{-1, 1, 7}, {1, 7, 1}, {-1, 6, 8}, {1, 8, 6}}),
        mkMat(8, r3, {{-1, 1, 7}, {1, 7, 1}, {-2, 2, 4}, {2, 4, 2}, {1, 6, 8}, {-1, 8, 6}}),
        mkMat(8, r6,
              {{1, 1, 7}, {-1, 7, 1}, {-1, 2, 4}, {1, 4, 2}, {-3, 3, 5}, {3, 5, 3},
               {-1, 6, 8}, {1, 8, 6}}),
        mkMat(8, one, {{1, 1, 8}, {-1, 8, 1}, {-1, 2, 3}, {1, 3, 2}}),
        mkMat(8, r3, {{1, 1, 8}, {-1, 8, 1}, {-2, 4, 5}, {2, 5, 4}, {1, 2, 3}, {-1, 3, 2}}),
        mkMat(8, r6,
              {{1, 1, 8}, {-1, 8, 1}, {1, 2, 3}, {-1, 3, 2}, {1, 4, 5}, {-1, 5, 4},
               {-3, 6, 7}, {3, 7, 6}}),
    };
    std::vector<FormQ> beta = {
        mkForm2(8, one, {{1, 1, 2}, {1, 4, 7}}),
        mkForm2(8, r3, {{1, 1, 2}, {-1, 4, 7}, {2, 5, 6}}),
        mkForm2(8, r6, {{-1, 1, 2}, {3, 3, 8}, {1, 4, 7}, {1, 5, 6}}),
        mkForm2(8, one, {{1, 1, 3}, {1, 4, 6}}),
        mkForm2(8, r3, {{-1, 1, 3}, {1, 4, 6}, {2, 5, 7}}),
        mkForm2(8, r6, {{1, 1, 3}, {3, 2, 8}, {-1, 4, 6}, {1, 5, 7}}),
        mkForm2(8, one, {{-1, 1, 4}, {1, 2, 7}}),
        mkForm2(8, -r3, {{1, 1, 4}, {1, 2, 7}, {-2, 5, 8}}),
        mkForm2(8, r6, {{-1, 1, 4}, {-1, 2, 7}, {3, 3, 6}, {-1, 5, 8}}),
        mkForm2(8, one, {{1, 1, 5}, {1, 4, 8}}),
        mkForm2(8, r3, {{-1, 1, 5}, {2, 2, 6}, {1, 4, 8}}),
        mkForm2(8, r6, {{1, 1, 5}, {1, 2, 6}, {3, 3, 7}, {-1, 4, 8}}),
        mkForm2(8, one, {{-1, 1, 6}, {1, 7, 8}}),
        mkForm2(8, r3, {{1, 1, 6}, {2, 2, 5}, {1, 7, 8}}),
        mkForm2(8, r6, {{1, 1, 6}, {-1, 2, 5}, {3, 3, 4}, {1, 7, 8}}),
        mkForm2(8, one, {{1, 1, 7}, {1, 6, 8}}),
        mkForm2(8, r3, {{1, 1, 7}, {2, 2, 4}, {-1, 6, 8}}),
        mkForm2(8, r6, {{-1, 1, 7}, {1, 2, 4}, {3, 3, 5}, {1, 6, 8}}),
        mkForm2(8, one, {{-1, 1, 8}, {1, 2, 3}}),
        mkForm2(8, r3, {{-1, 1, 8}, {2, 4, 5}, {-1, 2, 3}}),
        mkForm2(8, -r6, {{1, 1, 8}, {1, 2, 3}, {1, 4, 5}, {-3, 6, 7}}),
    };
    std::vector<Rational> scale(21, ratio(1));
    return LieSubalgebra(8, std::move(e), std::move(beta), std::move(scale));
  }();
  return table;
}

}  // namespace ilab::tables
