#pragma once

#include <map>
#include <string>

namespace semicross {

/// Bundled scenarios, keyed lexicographically. Each is plain scenario text
/// and runs to pass status under the default config.
inline const std::map<std::string, std::string>& builtin_scenarios() {
  static const std::map<std::string, std::string> scenarios = {
      {"example_6_3", R"(# Shift action of the integers on C+C; its crossed product is M_2.
config { tol=1e-9; seed=42; bound=512; mode=strict; }
algebra A { blocks=[1,1]; }
ideal D1  { algebra=A; blocks=[2]; }
ideal Dm1 { algebra=A; blocks=[1]; }
pauto shift { dom=Dm1; cod=D1; map={1:2}; unitaries={1:[[1,0]]}; }
group Z { kind=Z; }
partial_action pa { group=Z; algebra=A; alpha={1:shift}; }
rep pi { algebra=A; multiplicity=[1,1]; }
family u { 1:[[0,0, 0,0],[1,0, 0,0]]; -1:[[0,0, 1,0],[0,0, 0,0]]; }
covrep cv { action=pa; rep=pi; family=u; mode=strict; faithful=true; }
crossed cp { covrep=cv; faithful=true; }
verify words { theorem="section2"; action=pa; max_word_len=4; }
verify calculus { theorem="section3"; covrep=cv; max_word_len=3; }
verify pair { theorem="4.4"; covrep=cv; expect_order=6; }
verify main { theorem="6.2"; covrep=cv; alternates=[identity,double]; expect_blocks=[2]; }
)"},
      {"example_6_4_finite_analog", R"(# Z_2 fixing an ideal of the three-point diagonal algebra; the flip family
# is unitary over a proper ideal, so validation runs in lax mode.
config { tol=1e-9; seed=42; bound=512; mode=lax; }
algebra A { blocks=[1,1,1]; }
ideal D1 { algebra=A; blocks=[1,2]; }
pauto fix { dom=D1; cod=D1; map={1:1, 2:2}; unitaries={1:[[1,0]], 2:[[1,0]]}; }
group G { kind=Z2; }
partial_action pa { group=G; algebra=A; alpha={1:fix}; }
rep pi { algebra=A; multiplicity=[2,2,2]; }
family u { 1:[[0,0, 1,0, 0,0, 0,0, 0,0, 0,0],
              [1,0, 0,0, 0,0, 0,0, 0,0, 0,0],
              [0,0, 0,0, 0,0, 1,0, 0,0, 0,0],
              [0,0, 0,0, 1,0, 0,0, 0,0, 0,0],
              [0,0, 0,0, 0,0, 0,0, 0,0, 1,0],
              [0,0, 0,0, 0,0, 0,0, 1,0, 0,0]]; }
covrep cv { action=pa; rep=pi; family=u; mode=lax; }
verify three { theorem="6.4"; covrep=cv; expect_orders=[2,2,3]; }
)"},
      {"idempotent_5_11", R"(# C*(S) as the crossed product of its idempotent semilattice algebra.
config { tol=1e-9; seed=42; bound=512; mode=strict; }
semigroup S2 { n=2; mul=[[0,1],[1,1]]; }
semigroup SIM2 { kind=sim; points=2; }
verify meet { theorem="5.11"; semigroup=S2; }
verify sim { theorem="5.11"; semigroup=SIM2; }
)"},
      {"pair_semigroup_4_4", R"(# Pair semigroup of the shift representation, with the L-algebra laws and
# the representation round trip on top of it.
config { tol=1e-9; seed=42; bound=512; mode=strict; }
algebra A { blocks=[1,1]; }
ideal D1  { algebra=A; blocks=[2]; }
ideal Dm1 { algebra=A; blocks=[1]; }
pauto shift { dom=Dm1; cod=D1; map={1:2}; unitaries={1:[[1,0]]}; }
group Z { kind=Z; }
partial_action pa { group=Z; algebra=A; alpha={1:shift}; }
rep pi { algebra=A; multiplicity=[1,1]; }
family u { 1:[[0,0, 0,0],[1,0, 0,0]]; -1:[[0,0, 1,0],[0,0, 0,0]]; }
covrep cv { action=pa; rep=pi; family=u; mode=strict; }
verify pair { theorem="4.4"; covrep=cv; expect_order=6; }
verify laws { theorem="5.1"; covrep=cv; count=100; }
verify roundtrip { theorem="5.7"; covrep=cv; amplify=2; }
)"},
      {"rotation_counterexample", R"(# Two rotation partial isometries whose fourfold product is not one.
config { tol=1e-9; seed=42; bound=512; mode=strict; }
verify quarter { theorem="rotation"; angle=0.78539816339744831; }
)"},
      {"scalar_5_10", R"(# Trivial actions on the scalars: the crossed product is the group algebra
# of the maximal group image.
config { tol=1e-9; seed=42; bound=512; mode=strict; }
semigroup Z2 { n=2; mul=[[0,1],[1,0]]; }
semigroup Z3 { n=3; mul=[[0,1,2],[1,2,0],[2,0,1]]; }
semigroup S3 { n=6; mul=[[0,1,2,3,4,5],[1,0,4,5,2,3],[2,3,0,1,5,4],[3,2,5,4,0,1],[4,5,1,0,3,2],[5,4,3,2,1,0]]; }
semigroup S2 { n=2; mul=[[0,1],[1,1]]; }
semigroup SIM2 { kind=sim; points=2; }
verify z2 { theorem="5.10"; semigroup=Z2; expect_blocks=[1,1]; }
verify z3 { theorem="5.10"; semigroup=Z3; expect_blocks=[1,1,1]; }
verify s3 { theorem="5.10"; semigroup=S3; expect_blocks=[1,1,2]; }
verify meet { theorem="5.10"; semigroup=S2; expect_blocks=[1]; }
verify sim { theorem="5.10"; semigroup=SIM2; expect_blocks=[1]; }
)"},
      {"semilattice_5_8", R"(# A semilattice action's crossed product collapses onto pi(A).
config { tol=1e-9; seed=42; bound=512; mode=strict; }
semigroup S { n=2; mul=[[0,1],[1,1]]; }
algebra A { blocks=[1,2]; }
semigroup_action sa { semigroup=S; algebra=A; E={0:[1,2]; 1:[1]}; }
rep pi { algebra=A; multiplicity=[1,2]; }
verify latt { theorem="5.8"; action=sa; rep=pi; }
)"},
  };
  return scenarios;
}

}  // namespace semicross
