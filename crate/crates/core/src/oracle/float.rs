use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::angles::{AngleVector, DiagonalGate2Q, RationalAngle};
use crate::code::{CodeError, PauliString, SectorPlan, StabilizerCode};

use super::OracleError;

/// Largest denominator considered when reading a phase back as a rational.
pub const FLOAT_DENOMINATOR_CAP: u64 = 1 << 12;
pub const FLOAT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum FloatAction {
    Diagonal(Vec<RationalAngle>),
    NotPreserved { state: usize },
}

impl FloatAction {
    pub fn is_preserved(&self) -> bool {
        matches!(self, FloatAction::Diagonal(_))
    }
}

/// Nearest fraction `p/q`, `q <= cap`, to `x` mod 2 via continued fractions.
/// Fails if none lies within `tol` or if a second distinct one does.
pub fn recover_rational(x: f64, cap: u64, tol: f64) -> Result<RationalAngle, OracleError> {
    let x = x.rem_euclid(2.0);
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut r = x;
    let mut found = None;
    for _ in 0..64 {
        let a = r.floor();
        let (h, k) = (a as i128 * h1 + h0, a as i128 * k1 + k0);
        if k > cap as i128 {
            break;
        }
        if (x - h as f64 / k as f64).abs() < tol {
            found = Some(RationalAngle::from_i128(h, k)?);
            break;
        }
        (h0, h1, k0, k1) = (h1, h, k1, k);
        let frac = r - a;
        if frac.abs() < f64::EPSILON {
            break;
        }
        r = 1.0 / frac;
    }
    // Two within tolerance of each other wraps around 0 and 2.
    if found.is_none() && (x - 2.0).abs() < tol {
        found = Some(RationalAngle::ZERO);
    }
    let best = found.ok_or(OracleError::NoRational { value: x, cap })?;
    for q in 1..=cap {
        let p = (x * q as f64).round();
        if (x - p / q as f64).abs() < tol {
            let cand = RationalAngle::from_i128(p as i128, q as i128)?;
            if cand != best {
                return Err(OracleError::Ambiguous {
                    value: x,
                    first: best.to_string(),
                    second: cand.to_string(),
                });
            }
        }
    }
    Ok(best)
}

fn check_float_cap(n: usize, cap: usize) -> Result<(), OracleError> {
    if n > cap {
        Err(OracleError::CapExceeded { what: "dense qubits", value: n, cap })
    } else {
        Ok(())
    }
}

fn apply_pauli_dense(psi: &[Complex64], x: u64, z: u64, c: u32) -> Vec<Complex64> {
    let ipow = [
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 1.0),
        Complex64::new(-1.0, 0.0),
        Complex64::new(0.0, -1.0),
    ];
    let mut out = vec![Complex64::new(0.0, 0.0); psi.len()];
    for (b, amp) in psi.iter().enumerate() {
        let b = b as u64;
        let e = (c + 2 * ((z & b).count_ones() % 2)) % 4;
        out[(b ^ x) as usize] += amp * ipow[e as usize];
    }
    out
}

/// Projects `|rep>` onto the joint +1 eigenspace and normalizes it.
fn project(gens: &[(u64, u64, u32)], dim: usize, rep: u64, m: usize) -> Result<Vec<Complex64>, OracleError> {
    let mut psi = vec![Complex64::new(0.0, 0.0); dim];
    psi[rep as usize] = Complex64::new(1.0, 0.0);
    for &(x, z, c) in gens {
        let g = apply_pauli_dense(&psi, x, z, c);
        for (a, b) in psi.iter_mut().zip(g) {
            *a = (*a + b) * 0.5;
        }
    }
    let norm: f64 = psi.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    if norm < 1e-6 {
        return Err(OracleError::Vanished(m));
    }
    for a in &mut psi {
        *a /= norm;
    }
    Ok(psi)
}

fn dense_gens(ps: &[PauliString], shift: u32) -> Vec<(u64, u64, u32)> {
    ps.iter()
        .map(|p| {
            let (x, z) = (p.x_mask() << shift, p.z_mask() << shift);
            (x, z, (p.phase_exp() as u32 + (x & z).count_ones()) % 4)
        })
        .collect()
}

fn read_phase(psi: &[Complex64], phases: &[f64]) -> Result<Option<RationalAngle>, OracleError> {
    let overlap: Complex64 = psi
        .iter()
        .zip(phases)
        .map(|(a, &t)| a.conj() * a * Complex64::from_polar(1.0, std::f64::consts::PI * t))
        .sum();
    if (overlap.norm() - 1.0).abs() > FLOAT_TOLERANCE {
        return Ok(None);
    }
    let theta = overlap.arg() / std::f64::consts::PI;
    Ok(Some(recover_rational(theta, FLOAT_DENOMINATOR_CAP, FLOAT_TOLERANCE)?))
}

/// Dense check of one block: each logical state is rebuilt by projecting its
/// coset representative, the gate is applied and the overlap read back.
pub fn float_statevector_check(
    code: &StabilizerCode,
    angles: &AngleVector,
    cap: usize,
) -> Result<FloatAction, OracleError> {
    code.validate().map_err(CodeError::Invalid)?;
    check_float_cap(code.n, cap)?;
    angles.check_len(code.n)?;
    let plan = SectorPlan::new(code)?;
    let dim = 1usize << code.n;
    let gens = dense_gens(&code.generators, 0);
    let th: Vec<f64> = angles.thetas.iter().map(RationalAngle::to_f64).collect();
    let phases: Vec<f64> = (0..dim)
        .map(|b| (0..code.n).filter(|t| b >> t & 1 == 1).map(|t| th[t]).sum())
        .collect();
    let mut out = Vec::new();
    for m in 0..plan.sector_count() {
        let psi = project(&gens, dim, plan.representative_mask(m), m)?;
        match read_phase(&psi, &phases)? {
            Some(p) => out.push(p),
            None => return Ok(FloatAction::NotPreserved { state: m }),
        }
    }
    Ok(FloatAction::Diagonal(out))
}

/// Dense check of two blocks; block A holds qubits `0..n`, block B `n..2n`.
pub fn float_statevector_check_2q(
    code: &StabilizerCode,
    gate: &DiagonalGate2Q,
    cap: usize,
) -> Result<FloatAction, OracleError> {
    code.validate().map_err(CodeError::Invalid)?;
    let n = code.n;
    check_float_cap(2 * n, cap)?;
    let plan = SectorPlan::new(code)?;
    let dim = 1usize << (2 * n);
    let mut gens = dense_gens(&code.generators, 0);
    gens.extend(dense_gens(&code.generators, n as u32));
    let t = gate.phases().map(|a| a.to_f64());
    let low = (1u64 << n) - 1;
    let phases: Vec<f64> = (0..dim as u64)
        .map(|b| {
            let (u, v) = (b & low, b >> n);
            let c11 = (u & v).count_ones() as f64;
            let c10 = (u & !v).count_ones() as f64;
            let c01 = (!u & v & low).count_ones() as f64;
            let c00 = n as f64 - c11 - c10 - c01;
            t[0] * c00 + t[1] * c01 + t[2] * c10 + t[3] * c11
        })
        .collect();
    let s = plan.sector_count();
    let mut out = Vec::new();
    for ma in 0..s {
        for mb in 0..s {
            let m = ma * s + mb;
            let rep = plan.representative_mask(ma) | plan.representative_mask(mb) << n;
            let psi = project(&gens, dim, rep, m)?;
            match read_phase(&psi, &phases)? {
                Some(p) => out.push(p),
                None => return Ok(FloatAction::NotPreserved { state: m }),
            }
        }
    }
    Ok(FloatAction::Diagonal(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{c422, steane7};
    use crate::oracle::{verify, verify_2q};

    fn a(s: &str) -> RationalAngle {
        s.parse().unwrap()
    }

    #[test]
    fn recovery() {
        assert_eq!(recover_rational(0.75, 4096, 1e-9).unwrap(), a("3/4"));
        assert_eq!(recover_rational(-0.5, 4096, 1e-9).unwrap(), a("3/2"));
        assert_eq!(recover_rational(1.999_999_999_99, 4096, 1e-9).unwrap(), a("0"));
        assert_eq!(recover_rational(1.0 / 3.0, 4096, 1e-9).unwrap(), a("1/3"));
        assert!(matches!(
            recover_rational(std::f64::consts::PI - 3.0, 4096, 1e-9),
            Err(OracleError::NoRational { .. })
        ));
        assert!(matches!(
            recover_rational(0.5, 4096, 1e-3),
            Err(OracleError::Ambiguous { .. })
        ));
    }

    #[test]
    fn agrees_with_exact_oracle() {
        for (code, theta) in [(steane7(), "1/2"), (steane7(), "1/4"), (steane7(), "1/8"), (c422(), "1/2")] {
            let angles = AngleVector::uniform(code.n, a(theta));
            let exact = verify(&code, &angles, 22).unwrap();
            let float = float_statevector_check(&code, &angles, 15).unwrap();
            match (&exact.raw(), &float) {
                (Some(r), FloatAction::Diagonal(f)) => assert_eq!(*r, f.as_slice()),
                (None, FloatAction::NotPreserved { .. }) => {}
                other => panic!("disagreement on {theta}: {other:?}"),
            }
        }
    }

    #[test]
    fn c422_half_turn_phases() {
        let f = float_statevector_check(&c422(), &AngleVector::uniform(4, a("1/2")), 15).unwrap();
        assert_eq!(f, FloatAction::Diagonal(vec![a("0"), a("1"), a("1"), a("1")]));
    }

    #[test]
    fn two_block_cz() {
        let g = "0,0,0,1".parse().unwrap();
        let f = float_statevector_check_2q(&steane7(), &g, 15).unwrap();
        let e = verify_2q(&steane7(), &g, 22, 24).unwrap();
        assert_eq!(Some(match &f {
            FloatAction::Diagonal(v) => v.as_slice(),
            _ => panic!("{f:?}"),
        }), e.raw());
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(
            float_statevector_check(&steane7(), &AngleVector::uniform(7, a("1")), 6),
            Err(OracleError::CapExceeded { .. })
        ));
    }
}
