#include "magma/errata.hpp"

#include <algorithm>

namespace magma {

const std::vector<Erratum>& errata_registry() {
  static const std::vector<Erratum> registry = {
      {"2.3.1-inner", "Z12(1,4) has the subgroupoids x_i + 4Z only and is inner commutative",
       "there are 29 closed subsets; {0,3} is closed with 0*3 = 0 and 3*0 = 3", {"ex_2_3_1"}},
      {"3.1.6-composite", "Z_n(t,u) with n = t + u and t, u prime is simple",
       "for composite n a nontrivial normal subgroupoid exists, e.g. {0,4} in Z8(3,5); prime n is fine", {"3.1.6"}},
      {"3.2.4-unique", "t*Z_n is the only subgroupoid of order n/t and it is normal",
       "Z12(3,9) has 7 closed subsets of order 4, and in Z8(2,6) (V*x)*y = {0,4} + 4x + 6y is smaller than V*(x*y)",
       {"3.2.4"}},
      {"3.2.7-B", "{2,6,10} is a subgroupoid of Z12(10,8)",
       "2*2 = 0 in Z12(10,8), so {2,6,10} is not closed; {0,4,8} is", {"ex_3_2_7"}},
      {"3.2.8-only", "{0,2,4,6,8} is the only subgroupoid of Z10(8,4)",
       "Z10(8,4) has 33 closed subsets, among them {0,5}", {"ex_3_2_8"}},
      {"3.4-count", "Z***(n) holds n(n-1) groupoids",
       "only (0,0) is excluded, so Z***(n) holds n^2-1 groupoids; n(n-1) is smaller than |Z**(n)| + 2(n-1)",
       {"3.4"}},
      {"4.1.5-semigroups", "the singletons are the only proper semigroups of Z4(2,3)",
       "{0,2} and {1,3} are semigroups too: x*y = y on both", {"ex_4_1_5"}},
      {"4.2.4-normal", "in Z8(2,6), aA = A for every a when A = {0,2,4,6}",
       "aA = {2a, 2a+4} has two elements; only the union G*A equals A", {"ex_4_2_4", "4.2.4"}},
      {"4.2.5", "7P = Q in Z8(2,6) (named Z8(2,4)) with P = {0,2,3,4,6}, Q = {0,2,4,6}",
       "x*P = 2x + {0,2,4} has three elements for every x, so 7P = {0,2,6} differs from Q",
       {"4.2.5"}},
      {"4.2.6-direction", "every S-commutative groupoid is S-inner commutative",
       "the argument given proves the reverse implication (S-inner commutative implies S-commutative)", {"4.2.6"}},
      {"4.2.7-inner", "Z4(2,3) is S-inner commutative",
       "the S-subgroupoid {0,2} is itself a non-commutative semigroup (x*y = y)", {"ex_4_2_7"}},
      {"5.1.5-subgroupoids", "{0,3,6} and {1,2,4,5,7,8} are the subgroupoids of Z9(5,3)",
       "{3,6} is closed as well: 3*3 = 6, 3*6 = 6, 6*3 = 3, 6*6 = 3", {"ex_5_1_5"}},
      {"5.1.8-converse", "for t+u = 1 (mod n) in Z(n), the P law holds iff t^2 = t and u^2 = u",
       "with t+u = 1 the P law holds for every such pair: (t-u)(t+u-1) = 0", {"5.1.8"}},
      {"5.3.2-sg", "Z9(4,4) has no proper semigroup", "{0,3,6} is a semigroup: 4x + 4y stays in 3Z and associates",
       {"ex_5_3_2"}},
      {"5.3.4-coefficient", "Z_n((n+1)/2, (n+1)/2) for even n",
       "(n+1)/2 is not an integer for even n; the worked example uses Z_n(n/2, n/2) with {0, n/2}", {"5.3.4"}},
      {"5.3.6-direction", "Z_n(m,m) is an SG only if 2m = 1 (mod n)",
       "the argument shows the 'if' direction; Z_n(m,m) with m^2 = m and 2m = 0 is an SG as well", {"5.3.6"}},
      {"5.3.7-vacuous", "SG Z_n(m,m) with 2m = 1 and m^2 = m",
       "2m = 1 makes m a unit, so m^2 = m forces m = 1 and then 2 = 1; no modulus n >= 3 qualifies", {"5.3.7"}},
      {"5.4.5-divides", "Z_n(p,0) with the prime p not dividing n, witness {0, n/p}",
       "n/p is only an element when p divides n; the witness works exactly in that case", {"5.4.5", "5.4.6"}},
      {"5.6.2-left", "adjoined Z6(5,3) is not even weak S-left alternative",
       "{5,e} is an S-subgroupoid (5*5 = e) on which left alternative holds", {"ex_5_6_2"}},
      {"5.6.3-degenerate", "strong right/left alternative iff the stated congruences",
       "the congruences decide the law on tuples that avoid e and the a*a = e branch; other tuples can fail",
       {"5.6.3", "5.6.4", "ex_5_6_3"}},
      {"6.2.1-substates", "{0,2} is a sub semi-automaton of the Z4(2,1) / Z6(2,1) machine",
       "delta(0,1) = 1, so {0,2} is closed only under the even letters {0,2,4}", {"6.2.1"}},
      {"6.2.2-operation", "delta(z,a) = z*a (mod 3) with the operation of Z3(1,2)",
       "the printed table is (2z + 2a) mod 3, i.e. the operation of A = Z4(2,2) reduced mod 3", {"6.2.2"}},
      {"6.2.5-table", "machine built from Z5(3,2), Z3(0,2), Z4(2,3)",
       "the printed delta is 3z + 3a (mod 5) and the printed lambda has 5 columns for a 3-letter alphabet",
       {"6.2.5"}},
      {"misprint-4.3.9", "row 7 of the Z12(1,6) table",
       "row 7 alternates 1,7 where 7 + 6b (mod 12) gives 7,1", {"ex_4_3_9"}},
      {"misprint-5.1.5", "row 5, columns 6-8 of the Z9(5,3) table", "printed 1,4,7 where 25 + 3b gives 7,1,4",
       {"ex_5_1_5"}},
      {"misprint-5.3.3", "second table of the example, labelled Z3(2,2)",
       "the printed table repeats Z3(1,1); Z3(2,2) has rows 0 2 1 / 2 1 0 / 1 0 2", {"ex_5_3_3_b"}},
      {"misprint-5.6.3", "cell (3,2) of the adjoined Z6(4,5) table", "printed 3 where 12 + 10 = 22 = 4 (mod 6)",
       {"ex_5_6_3"}},
  };
  return registry;
}

const Erratum* find_erratum(std::string_view id) {
  const auto& r = errata_registry();
  auto it = std::find_if(r.begin(), r.end(), [&](const Erratum& e) { return e.id == id; });
  return it == r.end() ? nullptr : &*it;
}

}  // namespace magma
