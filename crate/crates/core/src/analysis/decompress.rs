use crate::angles::AngleVector;
use crate::code::{PauliString, StabilizerCode};
use crate::linalg::BitVector;

use super::{ensure_valid, AnalysisError};

/// Splits qubit `qubit` into `m` copies. Each copy carries the original X
/// bit; the Z bit stays on the first copy. `m - 1` adjacent `ZZ` checks tie
/// the copies together and the angle is divided evenly among them.
pub fn decompress(
    code: &StabilizerCode,
    qubit: usize,
    m: u64,
    angles: &AngleVector,
) -> Result<(StabilizerCode, AngleVector), AnalysisError> {
    ensure_valid(code)?;
    angles.check_len(code.n)?;
    if qubit >= code.n {
        return Err(AnalysisError::BadIndex { index: qubit, n: code.n });
    }
    if m < 2 {
        return Err(AnalysisError::BadMultiplicity(m));
    }
    let extra = usize::try_from(m - 1).map_err(|_| AnalysisError::Overflow)?;
    let n2 = code.n.checked_add(extra).ok_or(AnalysisError::Overflow)?;

    let spread = |p: &PauliString| -> PauliString {
        let mut x = BitVector::zeros(n2);
        let mut z = BitVector::zeros(n2);
        for t in 0..code.n {
            let xt = p.x().get(t).expect("width n");
            let zt = p.z().get(t).expect("width n");
            let base = if t > qubit { t + extra } else { t };
            x.set(base, xt).expect("in range");
            z.set(base, zt).expect("in range");
            if t == qubit {
                for c in 1..=extra {
                    x.set(base + c, xt).expect("in range");
                }
            }
        }
        PauliString::new(x, z, p.phase_exp()).expect("equal widths")
    };

    let mut generators: Vec<PauliString> = code.generators.iter().map(spread).collect();
    for c in 0..extra {
        let mut z = BitVector::zeros(n2);
        z.set(qubit + c, true).expect("in range");
        z.set(qubit + c + 1, true).expect("in range");
        generators.push(PauliString::z_type(z));
    }
    let name = format!("{}-d{qubit}x{m}", code.display_name());
    let out = StabilizerCode::new(
        n2,
        code.k,
        generators,
        code.logical_x.iter().map(spread).collect(),
        code.logical_z.iter().map(spread).collect(),
    )?
    .named(name);

    let part = angles.thetas[qubit].checked_div_int(m)?;
    let mut thetas = angles.thetas.clone();
    thetas.splice(qubit..=qubit, std::iter::repeat_n(part, extra + 1));
    Ok((out, AngleVector::new(thetas)))
}
