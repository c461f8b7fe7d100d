use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{dyadic_exponent, DiagonalGate1Q, DiagonalGate2Q, RationalAngle};

/// Largest step accepted by [`conjugation_orbit`].
pub const MAX_ORBIT_STEPS: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HierarchyLevel {
    /// Member of `C^(L)` and not of `C^(L-1)`.
    Level(u32),
    NotInHierarchy,
}

impl HierarchyLevel {
    pub fn level(&self) -> Option<u32> {
        match self {
            HierarchyLevel::Level(l) => Some(*l),
            HierarchyLevel::NotInHierarchy => None,
        }
    }
}

/// A difference angle in `{0, 1}` makes the gate a Pauli up to phase.
pub fn is_pauli_phase(a: RationalAngle) -> bool {
    a.den() == 1
}

/// `θ - φ = c/2^k` in lowest terms gives level `k + 1`; zero gives level 1.
pub fn hierarchy_level_1q(g: &DiagonalGate1Q) -> HierarchyLevel {
    let d = g.difference();
    match dyadic_exponent(d) {
        Some(k) => HierarchyLevel::Level(k + 1),
        None => HierarchyLevel::NotInHierarchy,
    }
}

/// Phase `2^p (θ - φ) mod 2` of the antidiagonal gate reached after `p`
/// nested conjugations of X.
pub fn conjugation_orbit(g: &DiagonalGate1Q, p: u32) -> RationalAngle {
    assert!(p <= MAX_ORBIT_STEPS, "orbit step above {MAX_ORBIT_STEPS}");
    let d = g.difference();
    let modulus = 2 * d.den() as u128;
    let mut num = d.num() as u128;
    for _ in 0..p {
        num = num * 2 % modulus;
    }
    RationalAngle::from_i128(num as i128, d.den() as i128).expect("nonzero denominator")
}

/// Level of a two-qubit diagonal gate.
///
/// A gate whose phases are affine in the label bits with Pauli-sized steps is
/// level 1. Otherwise conjugating by the X-type Pauli on pattern `a` gives a
/// diagonal gate `D_a(x) = u(x) - u(x ^ a)` times a Pauli, and the level is one
/// more than the largest level among the three `D_a`.
pub fn hierarchy_level_2q_diagonal(g: &DiagonalGate2Q) -> HierarchyLevel {
    let u = g.normalized().phases();
    if u.iter().any(|t| dyadic_exponent(*t).is_none()) {
        return HierarchyLevel::NotInHierarchy;
    }
    let mut memo = HashMap::new();
    HierarchyLevel::Level(level_2q(u, &mut memo))
}

fn level_2q(u: [RationalAngle; 4], memo: &mut HashMap<[RationalAngle; 4], u32>) -> u32 {
    if let Some(&l) = memo.get(&u) {
        return l;
    }
    let affine = u.iter().all(|t| is_pauli_phase(*t)) && (u[3] - u[1] - u[2] + u[0]).is_zero();
    let level = if affine {
        1
    } else {
        1 + (1..4usize)
            .map(|a| {
                let d: [RationalAngle; 4] = std::array::from_fn(|x| u[x] - u[x ^ a]);
                let d0 = d[0];
                level_2q(d.map(|t| t - d0), memo)
            })
            .max()
            .expect("three patterns")
    };
    memo.insert(u, level);
    level
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use proptest::prelude::*;

    fn a(s: &str) -> RationalAngle {
        s.parse().unwrap()
    }

    fn z(s: &str) -> DiagonalGate1Q {
        DiagonalGate1Q::z(a(s))
    }

    #[test]
    fn one_qubit_levels() {
        assert_eq!(hierarchy_level_1q(&z("1")), HierarchyLevel::Level(1));
        assert_eq!(hierarchy_level_1q(&z("0")), HierarchyLevel::Level(1));
        assert_eq!(hierarchy_level_1q(&z("1/2")), HierarchyLevel::Level(2));
        assert_eq!(hierarchy_level_1q(&z("1/4")), HierarchyLevel::Level(3));
        assert_eq!(hierarchy_level_1q(&z("2/5")), HierarchyLevel::NotInHierarchy);
        let shifted = DiagonalGate1Q::new(a("1/8"), a("3/8"));
        assert_eq!(hierarchy_level_1q(&shifted), HierarchyLevel::Level(3));
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(conjugation_orbit(&z("1/4"), 2), a("1"));
        assert_eq!(conjugation_orbit(&z("1/4"), 1), a("1/2"));
        assert_eq!(conjugation_orbit(&z("3/8"), 64), a("0"));
        assert_eq!(conjugation_orbit(&z("1/3"), 1), a("2/3"));
    }

    #[test]
    fn two_qubit_worked_cases() {
        let g = |s: &str| s.parse::<DiagonalGate2Q>().unwrap();
        assert_eq!(hierarchy_level_2q_diagonal(&g("0,0,0,1")), HierarchyLevel::Level(2));
        assert_eq!(hierarchy_level_2q_diagonal(&g("0,0,0,1/2")), HierarchyLevel::Level(3));
        assert_eq!(hierarchy_level_2q_diagonal(&g("0,1/4,1/4,1/2")), HierarchyLevel::Level(3));
        assert_eq!(hierarchy_level_2q_diagonal(&g("0,1,1,0")), HierarchyLevel::Level(1));
        assert_eq!(hierarchy_level_2q_diagonal(&g("1/3,1/3,1/3,1/3")), HierarchyLevel::Level(1));
        assert_eq!(hierarchy_level_2q_diagonal(&g("0,0,0,1/3")), HierarchyLevel::NotInHierarchy);
    }

    type M = [[Complex64; 4]; 4];

    fn mm(x: &M, y: &M) -> M {
        std::array::from_fn(|i| std::array::from_fn(|j| (0..4).map(|k| x[i][k] * y[k][j]).sum()))
    }

    fn dagger(x: &M) -> M {
        std::array::from_fn(|i| std::array::from_fn(|j| x[j][i].conj()))
    }

    fn paulis() -> Vec<M> {
        let o = Complex64::new(0.0, 0.0);
        let l = Complex64::new(1.0, 0.0);
        let i = Complex64::new(0.0, 1.0);
        let single = [[[l, o], [o, l]], [[o, l], [l, o]], [[o, -i], [i, o]], [[l, o], [o, -l]]];
        let mut out = Vec::new();
        for p in &single {
            for q in &single {
                out.push(std::array::from_fn(|r| {
                    std::array::from_fn(|c| p[r >> 1][c >> 1] * q[r & 1][c & 1])
                }));
            }
        }
        out
    }

    /// Membership in `C^(level)` straight from the recursive definition.
    fn in_level(u: &M, level: u32, ps: &[M]) -> bool {
        if level == 1 {
            return ps.iter().any(|p| {
                let t: Complex64 = (0..4).map(|i| (0..4).map(|j| p[i][j].conj() * u[i][j]).sum::<Complex64>()).sum();
                (t.norm() - 4.0).abs() < 1e-9
            });
        }
        ps.iter().all(|p| in_level(&mm(&mm(u, p), &dagger(u)), level - 1, ps))
    }

    fn definitional_level(g: &DiagonalGate2Q, max: u32) -> Option<u32> {
        let ps = paulis();
        let mut u: M = [[Complex64::new(0.0, 0.0); 4]; 4];
        for (x, t) in g.phases().iter().enumerate() {
            u[x][x] = Complex64::from_polar(1.0, std::f64::consts::PI * t.to_f64());
        }
        (1..=max).find(|&l| in_level(&u, l, &ps))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn two_qubit_level_matches_definition(t in prop::collection::vec((0i64..8, 0u32..3), 4)) {
            let g = DiagonalGate2Q::new(std::array::from_fn(|i| RationalAngle::dyadic(t[i].0, t[i].1)));
            let got = hierarchy_level_2q_diagonal(&g).level().unwrap();
            prop_assert_eq!(Some(got), definitional_level(&g, 4));
        }

        #[test]
        fn factorizable_agrees_with_one_qubit(c1 in 0i64..64, k1 in 0u32..6, c2 in 0i64..64, k2 in 0u32..6) {
            let (x, y) = (z(&RationalAngle::dyadic(c1, k1).to_string()), z(&RationalAngle::dyadic(c2, k2).to_string()));
            let l = hierarchy_level_2q_diagonal(&DiagonalGate2Q::tensor(x, y)).level().unwrap();
            let expect = hierarchy_level_1q(&x).level().unwrap().max(hierarchy_level_1q(&y).level().unwrap());
            prop_assert_eq!(l, expect);
        }

        #[test]
        fn family_has_level_k_plus_one(k in 1u32..6, a_ in -20i64..20, b in -20i64..20, c in -20i64..20) {
            prop_assume!(c % 2 != 0 || a_ % 2 != 0 || b % 2 != 0);
            let t01 = RationalAngle::dyadic(a_, k);
            let t10 = RationalAngle::dyadic(b, k);
            let t11 = t01 + t10 + RationalAngle::dyadic(c, k - 1);
            let g = DiagonalGate2Q::new([RationalAngle::ZERO, t01, t10, t11]);
            prop_assert_eq!(hierarchy_level_2q_diagonal(&g), HierarchyLevel::Level(k + 1));
        }

        #[test]
        fn orbit_reaches_pauli_at_level_minus_one(c in 0i64..200, k in 0u32..10) {
            let g = DiagonalGate1Q::z(RationalAngle::dyadic(c, k));
            let l = hierarchy_level_1q(&g).level().unwrap();
            let first = (0..=MAX_ORBIT_STEPS).find(|&p| is_pauli_phase(conjugation_orbit(&g, p))).unwrap();
            prop_assert_eq!(first, l - 1);
        }
    }
}
