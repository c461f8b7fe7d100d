use crate::linalg::{gf2_kernel, BitMatrix, BitVector};

use super::{CodeError, PauliString, StabilizerCode};

fn p(s: &str) -> PauliString {
    s.parse().expect("catalog literal")
}

fn build(name: &str, gens: &[&str], lx: &[&str], lz: &[&str]) -> StabilizerCode {
    let n = gens.first().or(lx.first()).map_or(0, |g| g.len());
    let ops = |ss: &[&str]| ss.iter().map(|s| p(s)).collect::<Vec<_>>();
    StabilizerCode::new(n, lx.len(), ops(gens), ops(lx), ops(lz))
        .expect("catalog code is valid")
        .named(name)
}

/// [[7,1,3]]: X and Z checks both from the [7,4] Hamming parity checks.
pub fn steane7() -> StabilizerCode {
    build(
        "steane7",
        &["IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"],
        &["XXXXXXX"],
        &["ZZZZZZZ"],
    )
}

/// [[15,1,3]] quantum Reed-Muller code.
pub fn rm15() -> StabilizerCode {
    rm_family(4).expect("m = 4").named("rm15")
}

/// [[5,1,3]] perfect code.
pub fn fivequbit() -> StabilizerCode {
    build(
        "fivequbit",
        &["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"],
        &["XXXXX"],
        &["ZZZZZ"],
    )
}

/// [[4,2,2]] error-detecting code.
pub fn c422() -> StabilizerCode {
    build("c422", &["XXXX", "ZZZZ"], &["XXII", "XIXI"], &["ZIZI", "ZZII"])
}

/// [[2^m-1, 1, 3]] quantum Reed-Muller code.
///
/// X checks are the `m` coordinate rows of the punctured first-order
/// Reed-Muller code (column `c - 1` holds the bits of `c`). Z checks span the
/// dual of those rows together with the all-ones word. Both logicals are
/// all-ones.
pub fn rm_family(m: u32) -> Result<StabilizerCode, CodeError> {
    if !(3..=10).contains(&m) {
        return Err(CodeError::ReedMullerOrder(m));
    }
    let n = (1usize << m) - 1;
    let xrows: Vec<BitVector> = (0..m)
        .map(|i| BitVector::from_bools(&(1..=n).map(|c| c >> i & 1 == 1).collect::<Vec<_>>()))
        .collect();
    let mut constraint = xrows.clone();
    constraint.push(BitVector::ones(n));
    let zrows = gf2_kernel(&BitMatrix::new(n, constraint)?);
    let mut gens: Vec<PauliString> = xrows.into_iter().map(PauliString::x_type).collect();
    gens.extend(zrows.into_iter().map(PauliString::z_type));
    let code = StabilizerCode::new(
        n,
        1,
        gens,
        vec![PauliString::x_type(BitVector::ones(n))],
        vec![PauliString::z_type(BitVector::ones(n))],
    )?;
    Ok(code.named(format!("rm{n}")))
}

pub fn catalog() -> Vec<StabilizerCode> {
    vec![steane7(), rm15(), fivequbit(), c422()]
}

/// Looks up `steane7`, `rm15`, `fivequbit`, `c422`, or `rm<2^m-1>`.
pub fn catalog_code(name: &str) -> Option<StabilizerCode> {
    match name {
        "steane7" => Some(steane7()),
        "rm15" => Some(rm15()),
        "fivequbit" => Some(fivequbit()),
        "c422" => Some(c422()),
        other => {
            let n: usize = other.strip_prefix("rm")?.parse().ok()?;
            let m = (n + 1).trailing_zeros();
            (n + 1 == 1 << m).then(|| rm_family(m).ok()).flatten()
        }
    }
}
