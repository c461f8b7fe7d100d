use crate::linalg::BitMatrix;

use super::{CodeError, PauliString, SectorPlan, StabilizerCode};

/// A CSS code split into its X-type and Z-type generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CssView {
    pub n: usize,
    pub gx_rows: BitMatrix,
    /// Generator index of each row of `gx_rows`.
    pub gx_index: Vec<usize>,
    pub gz_rows: BitMatrix,
    pub gz_index: Vec<usize>,
    pub x_logicals: BitMatrix,
    pub z_logicals: BitMatrix,
    pub plan: SectorPlan,
}

impl CssView {
    /// First qubit on which no X-type generator acts.
    pub fn zero_column(&self) -> Option<usize> {
        (0..self.n).find(|&t| self.gx_rows.rows().iter().all(|r| !r.get(t).expect("width n")))
    }

    pub fn is_nontrivial(&self) -> bool {
        self.zero_column().is_none()
    }
}

/// Splits generators by type; identity generators would count as Z-type.
pub fn css_view(code: &StabilizerCode) -> Result<CssView, CodeError> {
    let mut gx = BitMatrix::empty(code.n);
    let mut gz = BitMatrix::empty(code.n);
    let (mut gx_index, mut gz_index) = (Vec::new(), Vec::new());
    for (i, g) in code.generators.iter().enumerate() {
        if g.is_z_type() {
            gz.push(g.z().clone())?;
            gz_index.push(i);
        } else if g.is_x_type() {
            gx.push(g.x().clone())?;
            gx_index.push(i);
        } else {
            return Err(CodeError::NotCss(i));
        }
    }
    let rows = |ps: &[PauliString], f: fn(&PauliString) -> &crate::linalg::BitVector| {
        BitMatrix::new(code.n, ps.iter().map(|p| f(p).clone()).collect())
    };
    Ok(CssView {
        n: code.n,
        gx_rows: gx,
        gx_index,
        gz_rows: gz,
        gz_index,
        x_logicals: rows(&code.logical_x, PauliString::x)?,
        z_logicals: rows(&code.logical_z, PauliString::z)?,
        plan: SectorPlan::new(code)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{fivequbit, steane7};

    #[test]
    fn steane_split() {
        let v = css_view(&steane7()).unwrap();
        assert_eq!(v.gx_rows.nrows(), 3);
        assert!(v.gx_rows.rows().iter().all(|r| r.weight() == 4));
        assert!(v.is_nontrivial());
    }

    #[test]
    fn fivequbit_not_css() {
        assert_eq!(css_view(&fivequbit()), Err(CodeError::NotCss(0)));
    }

    #[test]
    fn z_only_code() {
        let p = |s: &str| s.parse::<PauliString>().unwrap();
        let code = StabilizerCode::new(2, 1, vec![p("ZZ")], vec![p("XX")], vec![p("ZI")]).unwrap();
        let v = css_view(&code).unwrap();
        assert_eq!(v.gx_rows.nrows(), 0);
        assert_eq!(v.zero_column(), Some(0));
    }
}
